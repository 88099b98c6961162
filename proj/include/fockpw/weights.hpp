#pragma once

#include <compare>
#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fockpw/log_complex.hpp"
#include "fockpw/multi_index.hpp"
#include "fockpw/quadrature.hpp"

namespace fockpw {

/// An order in R_flat plus {0}: either a real s >= 0 or a flat order flat_sigma, sigma > 0.
class OrderParam {
 public:
  enum class Kind { Real, Flat };

  static OrderParam real(double s);
  static OrderParam flat(double sigma);

  Kind kind() const { return kind_; }
  double value() const { return value_; }
  bool is_flat() const { return kind_ == Kind::Flat; }
  bool is_half() const { return kind_ == Kind::Real && value_ == 0.5; }
  std::string to_string() const;

  /// s1 < flat_sigma < s2 iff s1 < 1/2 <= s2; flat orders compare by sigma.
  friend std::partial_ordering operator<=>(const OrderParam& a, const OrderParam& b);
  friend bool operator==(const OrderParam& a, const OrderParam& b) = default;

 private:
  OrderParam(Kind k, double v) : kind_(k), value_(v) {}
  Kind kind_;
  double value_;
};

class RadiusVector {
 public:
  explicit RadiusVector(std::vector<double> r);
  RadiusVector(std::initializer_list<double> r) : RadiusVector(std::vector<double>(r)) {}
  static RadiusVector uniform(std::size_t d, double r) { return RadiusVector(std::vector<double>(d, r)); }

  std::size_t dim() const { return r_.size(); }
  double operator[](std::size_t j) const { return r_[j]; }
  const std::vector<double>& values() const { return r_; }
  /// Strict in every coordinate.
  bool lt(const RadiusVector& o) const;
  RadiusVector scaled(double lambda) const;

 private:
  std::vector<double> r_;
};

/// One axis of a radial weight omega_0(u), u = |z_j|^2 >= 0.
class AxisProfile {
 public:
  /// e^{-rate u}
  static AxisProfile exponential(double rate);
  /// e^{-rate u^power}
  static AxisProfile stretched_exp(double rate, double power);
  /// Piecewise-linear through (u_i, v_i), zero beyond the last node.
  static AxisProfile tabulated(std::vector<double> u, std::vector<double> v);

  double log_value(double u) const;
  /// Kinks the quadrature should respect.
  std::vector<double> breaks() const;

 private:
  enum class Kind { Exponential, StretchedExp, Tabulated } kind_ = Kind::Exponential;
  double rate_ = 1.0;
  double power_ = 1.0;
  std::vector<double> u_, v_;
};

/// Tensor product of per-axis profiles, or (d <= 2) a joint omega_0(u_1, ..., u_d)
/// integrated over [0, cap]^d.
class RadialProfile {
 public:
  static RadialProfile tensor(std::vector<AxisProfile> axes);
  static RadialProfile joint(std::size_t d, std::function<double(std::span<const double>)> omega0, double cap);

  std::size_t dim() const { return d_; }
  bool is_tensor() const { return !joint_; }
  const std::vector<AxisProfile>& axes() const { return axes_; }

  friend LogComplex weight_from_radial(const RadialProfile&, const MultiIndex&, const QuadratureSpec&);

 private:
  std::size_t d_ = 0;
  std::vector<AxisProfile> axes_;
  std::function<double(std::span<const double>)> joint_;
  double cap_ = 0.0;
};

/// theta_{r,s}(alpha) as a log-magnitude LogComplex.
LogComplex vartheta(const OrderParam& order, const RadiusVector& r, const MultiIndex& alpha);
/// theta'_{r,s}(alpha): the reciprocal exponents.
LogComplex vartheta_dual(const OrderParam& order, const RadiusVector& r, const MultiIndex& alpha);

/// <z> = (1 + |z|^2)^{1/2}.
double japanese_bracket(std::complex<double> z);

/// M_{j,r,s}(z) (or its M^0 variant).  Throws UnsupportedBranch where undefined.
double growth_majorant(int j, bool zero_variant, const OrderParam& order, const RadiusVector& r,
                       std::span<const std::complex<double>> z);

/// prod_j (1/alpha_j! int_0^inf omega_0(u)^2 u^{alpha_j} du)^{1/2}.
LogComplex weight_from_radial(const RadialProfile& profile, const MultiIndex& alpha,
                              const QuadratureSpec& spec = {});

/// Closed form of weight_from_radial for omega_0 = e^{-r u^{1/(2tau+1)}}:
/// prod_j ((2tau+1)(2r_j)^{-(2tau+1)(alpha_j+1)} Gamma((2tau+1)(alpha_j+1)) / alpha_j!)^{1/2}.
LogComplex vartheta_flat_L2(double tau, const RadiusVector& r, const MultiIndex& alpha);

}  // namespace fockpw
