#pragma once

#include <vector>

#include "fockpw/bargmann.hpp"
#include "fockpw/cutoff.hpp"
#include "fockpw/exec.hpp"
#include "fockpw/kernels.hpp"
#include "fockpw/series.hpp"

namespace fockpw {

/// varsigma_alpha = 2^{-d} alpha!^{1/2} / int_{Delta_t2} chi_0(u) e^{-|u|^2} u^{2 alpha} u_1...u_d du.
/// Throws DegenerateCutoff if the integral falls below e^{-700}.
LogComplex varsigma(const MultiIndex& alpha, const RadialCutoff& chi, const QuadratureSpec& spec = {});

/// varsigma for every |alpha| <= N, computed once per cutoff.
class VarsigmaTable {
 public:
  VarsigmaTable(const RadialCutoff& chi, int N, const QuadratureSpec& spec = {}, Exec exec = Exec::serial);

  int max_order() const { return N_; }
  std::size_t dim() const { return d_; }
  LogComplex operator()(const MultiIndex& alpha) const;

 private:
  std::size_t d_;
  int N_;
  double log_amplitude_ = 0.0;
  std::vector<std::vector<double>> axis_logs_;  // tensor cutoffs
  std::map<MultiIndex, double> joint_logs_;     // joint cutoffs
};

struct VarsigmaBounds {
  bool lower_ok = false;
  bool upper_ok = false;
  double witnessed_c = 0.0;  // smallest C with lower/C <= varsigma <= C upper
};

/// Brackets varsigma_alpha between
///   prod t2_j^{-2}(alpha_j+1) t2^{-2 alpha} alpha!^{1/2}   and
///   e^{|t1|^2} prod t1_j^{-2}(alpha_j+1) t1^{-2 alpha} alpha!^{1/2}.
VarsigmaBounds varsigma_bounds_check(const MultiIndex& alpha, const RadialCutoff& chi, const QuadratureSpec& spec = {});

/// Pi_A(z^alpha chi) = varsigma_alpha^{-1} e_alpha.
CoefficientSeries project_monomial(const MultiIndex& alpha, const RadialCutoff& chi, const QuadratureSpec& spec = {});

/// Pi_A(F_0 chi) for a finite series F_0: c(F, alpha) = c(F_0, alpha) / (varsigma_alpha sqrt(alpha!)).
CoefficientSeries project(const CoefficientSeries& F0, const VarsigmaTable& table);
CoefficientSeries project(const CoefficientSeries& F0, const RadialCutoff& chi, const QuadratureSpec& spec = {},
                          Exec exec = Exec::serial);

/// Coefficients |alpha| <= N of Pi_A(F_0 chi) by direct quadrature of
/// pi^{-d} alpha!^{-1/2} int F_0(w) conj(w)^alpha chi(w) e^{-|w|^2} dlambda(w)
/// (angular trapezoid rule, composite Gauss-Legendre in each radius; d <= 2).
CoefficientSeries project_quadrature(const EntireFn& F0, const RadialCutoff& chi, int N, const QuadratureSpec& spec = {});

struct GrowthCheck {
  double log_sup = 0.0;
  CVec attained_at;
};

/// max over the grid of |F(z)| e^{-M(z)}, in log form.
GrowthCheck growth_bound_check(const CoefficientSeries& F, const Majorant& M, const GridSpec& grid,
                               Exec exec = Exec::serial);
/// The same with M(z) = sum_j r_j |z_j|.
GrowthCheck growth_bound_check(const CoefficientSeries& F, const RadiusVector& r, const GridSpec& grid,
                               Exec exec = Exec::serial);

}  // namespace fockpw
