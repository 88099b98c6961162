#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fockpw/weights.hpp"

namespace fockpw {

/// One axis of a radial cutoff chi_0(rho), rho = |z_j|.
class CutoffAxis {
 public:
  static CutoffAxis indicator(double t);
  /// 1 on [0, t1], linear down to 0 at t2.
  static CutoffAxis trapezoid(double t1, double t2);
  /// Piecewise-linear through (rho_i, v_i), zero beyond the last node.
  static CutoffAxis tabulated(std::vector<double> rho, std::vector<double> v, double t1);

  double value(double rho) const;
  double t1() const { return t1_; }
  double t2() const { return t2_; }
  /// Kinks inside (0, t2).
  std::vector<double> breaks() const;
  /// inf of chi_0 on [0, t1], sampled exactly at the nodes for piecewise-linear profiles.
  double lower_bound() const;
  double sup() const;

 private:
  enum class Kind { Indicator, Trapezoid, Tabulated } kind_ = Kind::Indicator;
  double t1_ = 1.0, t2_ = 1.0;
  std::vector<double> rho_, v_;
};

/// chi in R^infty_{t1,t2}: amplitude * prod_j chi_{0,j}(|z_j|), or (d <= 2) a joint
/// chi_0(|z_1|, ..., |z_d|) with declared t1, t2 and lower bound c.
class RadialCutoff {
 public:
  static RadialCutoff indicator(const RadiusVector& t);
  static RadialCutoff trapezoid(const RadiusVector& t1, const RadiusVector& t2);
  static RadialCutoff tensor(std::vector<CutoffAxis> axes, double amplitude = 1.0);
  static RadialCutoff joint(std::function<double(std::span<const double>)> chi0, const RadiusVector& t1,
                            const RadiusVector& t2, double c);

  /// Parses "indicator:t", "trapezoid:t1,t2", optionally followed by "*amplitude".
  static RadialCutoff parse(const std::string& text, std::size_t d);

  std::size_t dim() const { return d_; }
  bool is_tensor() const { return !joint_; }
  const std::vector<CutoffAxis>& axes() const { return axes_; }
  double amplitude() const { return amplitude_; }
  const RadiusVector& t1() const { return t1_; }
  const RadiusVector& t2() const { return t2_; }
  /// The constant c of the class definition.
  double lower_bound() const { return c_; }

  RadialCutoff scaled(double lambda) const;

  double radial_value(std::span<const double> rho) const;
  double value(std::span<const std::complex<double>> z) const;

 private:
  std::size_t d_ = 0;
  std::vector<CutoffAxis> axes_;
  double amplitude_ = 1.0;
  std::function<double(std::span<const double>)> joint_;
  RadiusVector t1_{1.0}, t2_{1.0};
  double c_ = 1.0;
};

}  // namespace fockpw
