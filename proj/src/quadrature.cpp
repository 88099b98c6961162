#include "fockpw/quadrature.hpp"

#include <numbers>

namespace fockpw {

namespace {

constexpr double kDrop = 45.0;       // nats below the peak that are discarded
constexpr double kScanStop = 60.0;   // nats below the peak where a tail scan may stop
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double checked(double g) {
  if (std::isnan(g)) throw NonConvergence("log-integrand returned NaN");
  return g;
}

// Integrates exp(h(x) - peak) over the sampled region where h is within kDrop of the
// peak; xs must be increasing.  Returns ln of the integral.
double integrate_window(const std::function<double(double)>& h, const std::vector<double>& xs,
                        const std::vector<double>& hs, std::vector<double> cuts,
                        const QuadratureSpec& spec) {
  double peak = kNegInf;
  for (double v : hs) peak = std::max(peak, v);
  if (peak == kNegInf) return kNegInf;
  if (std::isinf(peak)) throw NonConvergence("log-integrand is +inf");
  std::size_t lo = xs.size(), hi = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (hs[i] >= peak - kDrop) {
      lo = std::min(lo, i);
      hi = i;
    }
  }
  lo = lo > 0 ? lo - 1 : 0;
  hi = std::min(hi + 1, xs.size() - 1);
  const double x0 = xs[lo], x1 = xs[hi];
  if (!(x0 < x1)) return peak;  // degenerate single-sample window; cannot happen for continuous h
  std::vector<double> pts{x0};
  std::sort(cuts.begin(), cuts.end());
  for (double c : cuts)
    if (c > x0 && c < x1) pts.push_back(c);
  pts.push_back(x1);
  auto f = [&](double x) {
    const double v = h(x);
    return v == kNegInf ? 0.0 : std::exp(checked(v) - peak);
  };
  auto r = integrate_pieces(f, pts, spec);
  if (!(r.value > 0.0)) return kNegInf;
  return peak + std::log(r.value);
}

}  // namespace

QuadResult<double> integrate_1d(const std::function<double(double)>& f, double a, double b,
                                const QuadratureSpec& spec) {
  return integrate(f, a, b, spec);
}

double log_integrate(const std::function<double(double)>& log_f, double a, double b,
                     const QuadratureSpec& spec, std::span<const double> breaks) {
  if (!(a < b)) throw DomainError("log_integrate requires a < b");
  if (!std::isfinite(a)) throw DomainError("log_integrate requires a finite lower limit");
  std::vector<double> xs, hs;
  if (std::isfinite(b)) {
    constexpr int kSamples = 1000;
    for (int i = 0; i <= kSamples; ++i) xs.push_back(a + (b - a) * i / kSamples);
    for (double c : breaks)
      if (c > a && c < b) {
        xs.push_back(c);
        xs.push_back(std::nextafter(c, a));
        xs.push_back(std::nextafter(c, b));
      }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (double x : xs) hs.push_back(checked(log_f(x)));
    return integrate_window(log_f, xs, hs, {breaks.begin(), breaks.end()}, spec);
  }
  // [a, inf): work in v = ln(u - a), du = e^v dv
  auto h = [&](double v) {
    const double g = log_f(a + std::exp(v));
    return g == kNegInf ? g : g + v;
  };
  constexpr double kStep = 0.05, kStart = -40.0, kCap = 700.0;
  double peak = kNegInf;
  double prev = kNegInf;
  for (double v = kStart;; v += kStep) {
    if (v > kCap) {
      if (peak == kNegInf) return kNegInf;
      throw NonConvergence("log-integrand does not decay");
    }
    const double g = checked(h(v));
    xs.push_back(v);
    hs.push_back(g);
    peak = std::max(peak, g);
    if (v > 0.0 && peak > kNegInf && g < peak - kScanStop && g <= prev) break;
    prev = g;
  }
  std::vector<double> cuts;
  for (double c : breaks)
    if (c > a) cuts.push_back(std::log(c - a));
  return integrate_window(h, xs, hs, cuts, spec);
}

QuadResult<double> integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                                double ay, double by, const QuadratureSpec& spec) {
  QuadratureSpec inner = spec;
  double inner_err = 0.0;
  auto outer = [&](double x) {
    auto r = integrate([&](double y) { return f(x, y); }, ay, by, inner);
    inner_err = std::max(inner_err, r.error);
    return r.value;
  };
  auto r = integrate(outer, ax, bx, spec);
  r.error += inner_err * (bx - ax);
  return r;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre requires n >= 1");
  GaussRule g;
  g.nodes.resize(n);
  g.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      // recompute derivative at the converged node
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.nodes[i] = -x;
    g.nodes[n - 1 - i] = x;
    g.weights[i] = w;
    g.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) g.nodes[n / 2] = 0.0;
  return g;
}

GaussRule composite_gauss_legendre(double a, double b, int panels, int n) {
  if (!(a < b) || panels < 1) throw DomainError("composite_gauss_legendre requires a < b, panels >= 1");
  const GaussRule base = gauss_legendre(n);
  GaussRule out;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double c = a + (p + 0.5) * h;
    for (int i = 0; i < n; ++i) {
      out.nodes.push_back(c + 0.5 * h * base.nodes[i]);
      out.weights.push_back(0.5 * h * base.weights[i]);
    }
  }
  return out;
}

}  // namespace fockpw
