#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fockpw/exec.hpp"
#include "fockpw/kernels.hpp"
#include "fockpw/projection.hpp"
#include "fockpw/series.hpp"
#include "fockpw/weights.hpp"

namespace fockpw {

/// (2r/(2tau+1))^{((2tau+1)/2) alpha} alpha!^{-tau}, as a log-magnitude.
LogComplex coeff_bound_flat(double tau, const RadiusVector& r, const MultiIndex& alpha);
/// e^{-sum R_j alpha_j^{1/(2s)}} with R = log_class_R(s, r).
LogComplex coeff_bound_log(double s, const RadiusVector& r, const MultiIndex& alpha);

/// R = s((1-2s)/r)^{(1-2s)/(2s)} and its inverse.
double log_class_R(double s, double r);
double log_class_r(double s, double R);

/// R_0 = ((2tau-1)/2)(2r_0/(2tau+1))^{(2tau+1)/(2tau-1)} t^{-4/(2tau-1)}, componentwise.
RadiusVector radius_map_flat(double tau, const RadiusVector& r0, const RadiusVector& t);
/// r_0 recovered from R_0 and t.
RadiusVector radius_map_flat_inverse(double tau, const RadiusVector& R0, const RadiusVector& t);

/// sigma/(2 sigma - 1) on (1/2, 1), sigma/(1 - 2 sigma) on (0, 1/2).
double sigma_dual(double sigma);

/// argmax over t >= 1 of e^{-r (log t)^theta} t^alpha, theta = 1/(1-2s).
double log_weight_maximizer(double r, double s, int alpha);

enum class GrowthClass { Polynomial, LogPower, Geometric, Flat };
enum class Side { Roumieu, Beurling, Undecided };

std::string to_string(GrowthClass c);
std::string to_string(Side s);

struct GrowthSpec {
  GrowthClass cls = GrowthClass::Polynomial;
  /// Flat: tau = -b of the fit and sigma = 1/(2 tau) (for tau > 0).  With tau < 0 the
  /// coefficients grow like r^alpha alpha!^{1/(2 sigma)}, sigma = -1/(2 tau): `dual` is set.
  double tau = 0.0;
  double sigma = 0.0;
  bool dual = false;
  /// LogPower order.
  double s = 0.0;
  /// Polynomial degree.
  int degree = 0;
  RadiusVector radius{1.0};
  double residual = 0.0;
  /// RMS misfit of each template, indexed by GrowthClass (Polynomial entry unused).
  std::array<double, 4> residuals{};
  Side side = Side::Undecided;
};

struct ClassifyOptions {
  /// A misfit within max(tie_abs, tie_rel * best) nats of the best counts as a tie.
  double tie_abs = 1e-9;
  double tie_rel = 0.5;
  /// Flat fits with |tau| at most this are reported as Geometric (the nested template).
  double flat_tau_zero = 0.05;
  int min_terms = 8;
};

/// Fits ln|c(F, alpha)| along each axis over |alpha| in [N/4, N] against the Flat,
/// Geometric and LogPower templates (each with intercept and polynomial slack terms) and
/// returns the best, ties going to the smaller class.  Throws InsufficientData.
GrowthSpec classify(const CoefficientSeries& F, const ClassifyOptions& opts = {});

/// Radius r of the flat template with tau held fixed, fitted on alpha in [lo, hi] along
/// each axis.
RadiusVector fit_flat_radius(const CoefficientSeries& F, double tau, int lo, int hi);

struct StabilityProbe {
  std::vector<double> caps = {10.0, 20.0, 40.0};
  double tolerance = 0.01;  // relative change of the sup between successive caps
  double density = 8.0;     // radial samples per unit length
  int n_angle = 32;
};

/// Sups of |F| e^{-M} on the grids of radius caps[k]; `stable` if every successive pair
/// differs by less than the tolerance.
struct StabilityResult {
  bool stable = false;
  std::vector<double> log_sups;
};

class GrowthSampler {
 public:
  GrowthSampler(const CoefficientSeries& F, const StabilityProbe& probe = {}, Exec exec = Exec::serial);
  StabilityResult check(const Majorant& M) const;
  const std::vector<CVec>& points() const { return points_; }

 private:
  StabilityProbe probe_;
  Exec exec_;
  std::vector<CVec> points_;
  std::vector<double> log_abs_;
  std::vector<double> max_abs_;  // max_j |z_j| per point
};

/// M_{1, r, order} with uniform r.
Majorant majorant_for(const OrderParam& order, double r, std::size_t d);

/// Smallest r on a geometric grid (ratio 1.02 from r_min up to r_max) for which the sup
/// of |F| e^{-M_{1,r,order}} stabilizes.  Throws NoStabilization.
RadiusVector growth_to_coeff(const CoefficientSeries& F, const OrderParam& order, const StabilityProbe& probe = {},
                             Exec exec = Exec::serial, double r_min = 0.02, double r_max = 50.0);

/// c(F_0, alpha) = c(F, alpha) varsigma_alpha sqrt(alpha!).
CoefficientSeries reconstruct(const CoefficientSeries& F, const VarsigmaTable& table);
CoefficientSeries reconstruct(const CoefficientSeries& F, const RadialCutoff& chi, const QuadratureSpec& spec = {},
                              Exec exec = Exec::serial);

/// Builds the series with coefficients bound(alpha) for all |alpha| <= N.
template <class Bound>
CoefficientSeries series_from(std::size_t d, int N, Bound&& bound) {
  CoefficientSeries s(d, N);
  for (const auto& a : indices_up_to(d, N)) s.set(a, bound(a));
  return s;
}

}  // namespace fockpw
