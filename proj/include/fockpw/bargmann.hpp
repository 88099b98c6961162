#pragma once

#include <complex>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "fockpw/log_complex.hpp"
#include "fockpw/multi_index.hpp"
#include "fockpw/quadrature.hpp"
#include "fockpw/series.hpp"

namespace fockpw {

using RealFn = std::function<std::complex<double>(std::span<const double>)>;
using PhaseFn = std::function<std::complex<double>(std::span<const double> x, std::span<const double> xi)>;
using EntireFn = std::function<std::complex<double>(std::span<const std::complex<double>>)>;

/// Truncated Hermite expansion f = sum c_h(f, alpha) h_alpha.
class HermiteSeries {
 public:
  HermiteSeries(std::size_t d, int truncation);

  std::size_t dim() const { return d_; }
  int truncation() const { return truncation_; }
  void set(const MultiIndex& alpha, LogComplex c);
  LogComplex get(const MultiIndex& alpha) const;
  const std::map<MultiIndex, LogComplex>& entries() const { return coeffs_; }

  std::complex<double> evaluate(std::span<const double> x) const;
  /// Parseval: sum |c_h|^2, as ln of the L^2 norm.
  double log_l2_norm() const;

 private:
  std::size_t d_;
  int truncation_;
  std::map<MultiIndex, LogComplex> coeffs_;
};

/// h_0(x), ..., h_n(x) in one variable via the three-term recurrence.
std::vector<double> hermite_all_1d(int n, double x);
double hermite_eval(const MultiIndex& alpha, std::span<const double> x);

/// Bilinear <z, w> = sum z_j w_j.
std::complex<double> bilinear(std::span<const std::complex<double>> z, std::span<const std::complex<double>> w);
/// Sesquilinear (z, w) = sum z_j conj(w_j).
std::complex<double> sesquilinear(std::span<const std::complex<double>> z, std::span<const std::complex<double>> w);

/// pi^{-d/4} exp(-(<z,z> + |y|^2)/2 + sqrt(2) <z,y>).
LogComplex bargmann_kernel(std::span<const std::complex<double>> z, std::span<const double> y);

/// Exact: sum c_h(f, alpha) e_alpha(z).
LogComplex bargmann_transform(const HermiteSeries& f, std::span<const std::complex<double>> z);
/// Kernel integral by adaptive quadrature (d <= 2).  f must decay like a Gaussian.
std::complex<double> bargmann_transform(const RealFn& f, std::span<const std::complex<double>> z,
                                        const QuadratureSpec& spec = {});

/// V_phi f(x, xi) = (2 pi)^{-d/2} int f(y) phi(y - x) e^{-i<y, xi>} dy, phi = h_0 (d <= 2).
std::complex<double> stft_gaussian(const RealFn& f, std::span<const double> x, std::span<const double> xi,
                                   const QuadratureSpec& spec = {});

/// (2 pi)^{d/2} e^{(|x|^2+|xi|^2)/2} e^{-i<x,xi>} F(sqrt2 x, -sqrt2 xi).
std::complex<double> uv_operator(const PhaseFn& F, std::span<const double> x, std::span<const double> xi);

/// (S F)(x, xi) = F(x / sqrt2, -xi / sqrt2) and its inverse.
PhaseFn dilation_s(PhaseFn F);
PhaseFn dilation_s_inverse(PhaseFn F);

/// V_phi f from the Bargmann transform:
/// (2 pi)^{-d/2} e^{-(|x|^2+|xi|^2)/4} e^{-i<x,xi>/2} (Vf)((x - i xi)/sqrt2).
std::complex<double> stft_from_bargmann(const EntireFn& barg_f, std::span<const double> x, std::span<const double> xi);

/// Support of a phase-space density in d = 1: a box, optionally narrowed to the disc
/// y^2 + eta^2 <= disc_radius^2.
struct PhaseSupport {
  double y_lo, y_hi, eta_lo, eta_hi;
  double disc_radius = 0.0;  // 0: no disc
};

/// f(x) = (2 pi)^{-1/2} int int F(y, eta) e^{-|x-y|^2/2} e^{i x eta} dy deta (d = 1).
std::complex<double> stft_adjoint(const PhaseFn& F, const PhaseSupport& support, double x,
                                  const QuadratureSpec& spec = {});

/// (4 pi^3)^{d/4}, the constant relating V(V_phi^* F) to Pi_A F_0.
double lift_constant(std::size_t d);

/// F_0(x + i xi) = lift_constant(d) F(sqrt2 x, -sqrt2 xi) e^{(|x|^2+|xi|^2)/2} e^{-i<x,xi>}.
EntireFn lift_density(PhaseFn F, std::size_t d);
/// Inverse of lift_density.
PhaseFn unlift_density(EntireFn F0, std::size_t d);

/// Multiplies each coefficient by (2|alpha| + d)^N.
HermiteSeries harmonic_oscillator_apply(const HermiteSeries& f, int N);

/// c_h(f, n), n <= N, of a one-variable function sampled at the nodes of `rule`
/// (values[i] = f(rule.nodes[i])).
HermiteSeries hermite_coefficients_1d(std::span<const std::complex<double>> values, const GaussRule& rule, int N);

/// max |f| over the given sample points (d = 1).
double hermite_sup_norm(const HermiteSeries& f, std::span<const double> xs);

}  // namespace fockpw
