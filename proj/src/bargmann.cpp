#include "fockpw/bargmann.hpp"

#include <cmath>
#include <numbers>

#include "fockpw/errors.hpp"
#include "fockpw/special.hpp"

namespace fockpw {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;
const double kSqrt2 = std::sqrt(2.0);

// Integrates g over a box in d <= 2 by nested adaptive quadrature.
cd integrate_box(const std::function<cd(std::span<const double>)>& g, std::span<const std::pair<double, double>> box,
                 const QuadratureSpec& spec) {
  if (box.size() == 1) {
    return integrate([&](double y) { return g(std::span<const double>(&y, 1)); }, box[0].first, box[0].second, spec)
        .value;
  }
  if (box.size() == 2) {
    auto outer = [&](double y0) {
      return integrate(
                 [&](double y1) {
                   const double y[2] = {y0, y1};
                   return g(std::span<const double>(y, 2));
                 },
                 box[1].first, box[1].second, spec)
          .value;
    };
    return integrate(outer, box[0].first, box[0].second, spec).value;
  }
  throw DomainError("quadrature transforms support d <= 2");
}

}  // namespace

HermiteSeries::HermiteSeries(std::size_t d, int truncation) : d_(d), truncation_(truncation) {
  if (d == 0) throw DomainError("series dimension must be >= 1");
  if (truncation < 0) throw DomainError("truncation must be >= 0");
}

void HermiteSeries::set(const MultiIndex& alpha, LogComplex c) {
  if (alpha.dim() != d_) throw DimensionMismatch("Hermite index has wrong dimension");
  if (alpha.order() > truncation_) throw DomainError("index " + alpha.to_string() + " exceeds truncation");
  if (c.is_zero())
    coeffs_.erase(alpha);
  else
    coeffs_[alpha] = c;
}

LogComplex HermiteSeries::get(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? LogComplex::zero() : it->second;
}

std::complex<double> HermiteSeries::evaluate(std::span<const double> x) const {
  if (x.size() != d_) throw DimensionMismatch("evaluation point has wrong dimension");
  std::vector<std::vector<double>> tables;
  for (double xj : x) tables.push_back(hermite_all_1d(truncation_, xj));
  cd acc{};
  for (const auto& [alpha, c] : coeffs_) {
    double h = 1.0;
    for (std::size_t j = 0; j < d_; ++j) h *= tables[j][alpha[j]];
    acc += c.value() * h;
  }
  return acc;
}

double HermiteSeries::log_l2_norm() const {
  std::vector<LogComplex> sq;
  for (const auto& [alpha, c] : coeffs_) sq.push_back(LogComplex::from_log(2.0 * c.log_mag()));
  return 0.5 * log_sum(sq).log_mag();
}

std::vector<double> hermite_all_1d(int n, double x) {
  if (n < 0) throw DomainError("Hermite degree must be >= 0");
  std::vector<double> h(n + 1);
  h[0] = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (n >= 1) h[1] = kSqrt2 * x * h[0];
  for (int k = 1; k < n; ++k)
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * x * h[k] - std::sqrt(static_cast<double>(k) / (k + 1)) * h[k - 1];
  return h;
}

double hermite_eval(const MultiIndex& alpha, std::span<const double> x) {
  if (x.size() != alpha.dim()) throw DimensionMismatch("hermite_eval: dimension mismatch");
  double v = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) v *= hermite_all_1d(alpha[j], x[j]).back();
  return v;
}

std::complex<double> bilinear(std::span<const cd> z, std::span<const cd> w) {
  if (z.size() != w.size()) throw DimensionMismatch("pairing: dimension mismatch");
  cd s{};
  for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * w[j];
  return s;
}

std::complex<double> sesquilinear(std::span<const cd> z, std::span<const cd> w) {
  if (z.size() != w.size()) throw DimensionMismatch("pairing: dimension mismatch");
  cd s{};
  for (std::size_t j = 0; j < z.size(); ++j) s += z[j] * std::conj(w[j]);
  return s;
}

LogComplex bargmann_kernel(std::span<const cd> z, std::span<const double> y) {
  if (z.size() != y.size()) throw DimensionMismatch("kernel: dimension mismatch");
  const double d = static_cast<double>(z.size());
  cd e = -0.25 * d * std::log(kPi);
  for (std::size_t j = 0; j < z.size(); ++j) e += -0.5 * (z[j] * z[j] + y[j] * y[j]) + kSqrt2 * z[j] * y[j];
  return LogComplex::from_log(e.real(), e.imag());
}

LogComplex bargmann_transform(const HermiteSeries& f, std::span<const cd> z) {
  if (z.size() != f.dim()) throw DimensionMismatch("transform: dimension mismatch");
  std::vector<LogComplex> terms;
  for (const auto& [alpha, c] : f.entries()) terms.push_back(c * normalized_monomial(alpha, z));
  return log_sum(terms);
}

std::complex<double> bargmann_transform(const RealFn& f, std::span<const cd> z, const QuadratureSpec& spec) {
  std::vector<std::pair<double, double>> box;
  for (const cd& zj : z) {
    const double c = kSqrt2 * zj.real();  // centre of the Gaussian factor
    box.emplace_back(std::min(0.0, c) - 16.0, std::max(0.0, c) + 16.0);
  }
  const std::vector<cd> zz(z.begin(), z.end());
  auto g = [&](std::span<const double> y) { return f(y) * bargmann_kernel(zz, y).value(); };
  return integrate_box(g, box, spec);
}

std::complex<double> stft_gaussian(const RealFn& f, std::span<const double> x, std::span<const double> xi,
                                   const QuadratureSpec& spec) {
  if (x.size() != xi.size()) throw DimensionMismatch("stft: dimension mismatch");
  const std::size_t d = x.size();
  std::vector<std::pair<double, double>> box;
  for (double xj : x) box.emplace_back(std::min(0.0, xj) - 16.0, std::max(0.0, xj) + 16.0);
  const double pre = std::pow(2.0 * kPi, -0.5 * d) * std::pow(kPi, -0.25 * d);
  auto g = [&](std::span<const double> y) {
    double q = 0.0, ph = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      q += (y[j] - x[j]) * (y[j] - x[j]);
      ph -= y[j] * xi[j];
    }
    return f(y) * std::polar(pre * std::exp(-0.5 * q), ph);
  };
  return integrate_box(g, box, spec);
}

std::complex<double> uv_operator(const PhaseFn& F, std::span<const double> x, std::span<const double> xi) {
  if (x.size() != xi.size()) throw DimensionMismatch("uv: dimension mismatch");
  const std::size_t d = x.size();
  std::vector<double> xs(d), ks(d);
  double q = 0.0, ph = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    xs[j] = kSqrt2 * x[j];
    ks[j] = -kSqrt2 * xi[j];
    q += x[j] * x[j] + xi[j] * xi[j];
    ph -= x[j] * xi[j];
  }
  return std::pow(2.0 * kPi, 0.5 * d) * std::polar(std::exp(0.5 * q), ph) * F(xs, ks);
}

PhaseFn dilation_s(PhaseFn F) {
  return [F = std::move(F)](std::span<const double> x, std::span<const double> xi) {
    std::vector<double> a(x.size()), b(xi.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      a[j] = x[j] / kSqrt2;
      b[j] = -xi[j] / kSqrt2;
    }
    return F(a, b);
  };
}

PhaseFn dilation_s_inverse(PhaseFn F) {
  return [F = std::move(F)](std::span<const double> x, std::span<const double> xi) {
    std::vector<double> a(x.size()), b(xi.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      a[j] = kSqrt2 * x[j];
      b[j] = -kSqrt2 * xi[j];
    }
    return F(a, b);
  };
}

std::complex<double> stft_from_bargmann(const EntireFn& barg_f, std::span<const double> x, std::span<const double> xi) {
  if (x.size() != xi.size()) throw DimensionMismatch("stft: dimension mismatch");
  const std::size_t d = x.size();
  std::vector<cd> w(d);
  double q = 0.0, ph = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    w[j] = cd(x[j], -xi[j]) / kSqrt2;
    q += x[j] * x[j] + xi[j] * xi[j];
    ph -= 0.5 * x[j] * xi[j];
  }
  return std::pow(2.0 * kPi, -0.5 * d) * std::polar(std::exp(-0.25 * q), ph) * barg_f(w);
}

std::complex<double> stft_adjoint(const PhaseFn& F, const PhaseSupport& s, double x, const QuadratureSpec& spec) {
  if (!(s.y_lo < s.y_hi) || !(s.eta_lo < s.eta_hi)) throw DomainError("stft_adjoint: empty support box");
  double ylo = std::max(s.y_lo, x - 8.0), yhi = std::min(s.y_hi, x + 8.0);
  if (s.disc_radius > 0.0) {
    ylo = std::max(ylo, -s.disc_radius);
    yhi = std::min(yhi, s.disc_radius);
  }
  if (!(ylo < yhi)) return {};
  auto outer = [&](double y) -> cd {
    double elo = s.eta_lo, ehi = s.eta_hi;
    if (s.disc_radius > 0.0) {
      const double h = std::sqrt(std::max(0.0, s.disc_radius * s.disc_radius - y * y));
      elo = std::max(elo, -h);
      ehi = std::min(ehi, h);
    }
    if (!(elo < ehi)) return {};
    const double w = std::exp(-0.5 * (x - y) * (x - y));
    auto inner = [&](double eta) {
      return F(std::span<const double>(&y, 1), std::span<const double>(&eta, 1)) * std::polar(1.0, x * eta);
    };
    return w * integrate(inner, elo, ehi, spec).value;
  };
  return std::pow(2.0 * kPi, -0.5) * integrate(outer, ylo, yhi, spec).value;
}

double lift_constant(std::size_t d) { return std::pow(4.0 * kPi * kPi * kPi, 0.25 * d); }

EntireFn lift_density(PhaseFn F, std::size_t d) {
  const double c = lift_constant(d);
  return [F = std::move(F), c](std::span<const cd> w) {
    const std::size_t n = w.size();
    std::vector<double> a(n), b(n);
    double q = 0.0, ph = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      a[j] = kSqrt2 * w[j].real();
      b[j] = -kSqrt2 * w[j].imag();
      q += std::norm(w[j]);
      ph -= w[j].real() * w[j].imag();
    }
    return c * std::polar(std::exp(0.5 * q), ph) * F(a, b);
  };
}

PhaseFn unlift_density(EntireFn F0, std::size_t d) {
  const double c = lift_constant(d);
  return [F0 = std::move(F0), c](std::span<const double> y, std::span<const double> eta) {
    const std::size_t n = y.size();
    std::vector<cd> w(n);
    double q = 0.0, ph = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      w[j] = cd(y[j], -eta[j]) / kSqrt2;
      q += y[j] * y[j] + eta[j] * eta[j];
      ph -= 0.5 * y[j] * eta[j];
    }
    return F0(w) * std::polar(std::exp(-0.25 * q) / c, ph);
  };
}

HermiteSeries harmonic_oscillator_apply(const HermiteSeries& f, int N) {
  if (N < 0) throw DomainError("oscillator power must be >= 0");
  HermiteSeries out(f.dim(), f.truncation());
  const double d = static_cast<double>(f.dim());
  for (const auto& [alpha, c] : f.entries())
    out.set(alpha, c * LogComplex::from_log(N * std::log(2.0 * alpha.order() + d)));
  return out;
}

HermiteSeries hermite_coefficients_1d(std::span<const cd> values, const GaussRule& rule, int N) {
  if (values.size() != rule.nodes.size()) throw DimensionMismatch("samples and quadrature nodes differ");
  std::vector<cd> acc(N + 1);
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto h = hermite_all_1d(N, rule.nodes[i]);
    for (int n = 0; n <= N; ++n) acc[n] += rule.weights[i] * values[i] * h[n];
  }
  HermiteSeries out(1, N);
  for (int n = 0; n <= N; ++n) out.set(MultiIndex{n}, LogComplex::from_complex(acc[n]));
  return out;
}

double hermite_sup_norm(const HermiteSeries& f, std::span<const double> xs) {
  if (f.dim() != 1) throw DomainError("hermite_sup_norm samples d = 1 only");
  double m = 0.0;
  for (double x : xs) m = std::max(m, std::abs(f.evaluate(std::span<const double>(&x, 1))));
  return m;
}

}  // namespace fockpw
