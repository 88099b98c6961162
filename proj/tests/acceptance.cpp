// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance               run all
//   acceptance --criterion k run one (exit status reflects it)
#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockpw/bargmann.hpp"
#include "fockpw/cutoff.hpp"
#include "fockpw/paleywiener.hpp"
#include "fockpw/projection.hpp"
#include "fockpw/special.hpp"
#include "fockpw/weights.hpp"

#ifndef FOCKPW_CLI_PATH
#define FOCKPW_CLI_PATH "fockpw"
#endif

using namespace fockpw;
using cd = std::complex<double>;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char b[96];
  std::snprintf(b, sizeof b, f, a);
  return b;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ln gamma(a, x), lower incomplete, by its power series
double log_lower_gamma(int a, double x) {
  double term = 1.0 / a, sum = term;
  for (int k = 1; k < 2000 && term > 1e-18 * sum; ++k) {
    term *= x / (a + k);
    sum += term;
  }
  return a * std::log(x) - x + std::log(sum);
}

// 1. reproducing identity
Outcome ac1() {
  constexpr double kTol = 1e-9, kTime = 10.0;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (std::size_t d : {1u, 2u}) {
    for (double t : {0.5, 1.0, 2.0}) {
      const RadialCutoff chi = RadialCutoff::indicator(RadiusVector::uniform(d, t));
      for (const auto& alpha : indices_up_to(d, 20)) {
        // indicator moments in closed form: varsigma_a = sqrt(a!) / gamma(a + 1, t^2) per axis
        double lvs = 0.0;
        for (std::size_t j = 0; j < d; ++j) lvs += 0.5 * log_factorial(alpha[j]) - log_lower_gamma(alpha[j] + 1, t * t);
        const LogComplex vs = LogComplex::from_log(lvs);
        CoefficientSeries F0(d, 20);
        F0.set(alpha, vs * LogComplex::from_log(0.5 * log_factorial(alpha)));
        const CoefficientSeries F = project(F0, chi);
        for (const auto& beta : indices_up_to(d, 20)) {
          const cd want = beta == alpha ? 1.0 : 0.0;
          worst = std::max(worst, std::abs(F.get(beta).value() - want));
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= kTol && secs <= kTime, "max dev " + fmt("%.2e", worst) + ", " + fmt("%.1f s", secs)};
}

// 2. varsigma closed forms
Outcome ac2() {
  constexpr double kTol = 1e-10;
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0, 4.0}) {
    const double v = varsigma(MultiIndex{0}, RadialCutoff::indicator(RadiusVector{t})).magnitude();
    worst = std::max(worst, std::abs(v * (1.0 - std::exp(-t * t)) - 1.0));
  }
  const RadialCutoff wide = RadialCutoff::indicator(RadiusVector{8.0});
  for (int a = 0; a <= 10; ++a) {
    const double lv = varsigma(MultiIndex{a}, wide).log_mag();
    worst = std::max(worst, std::abs(std::expm1(lv + 0.5 * log_factorial(a))));
  }
  return {worst <= kTol, "max rel dev " + fmt("%.2e", worst)};
}

// 3. norm identity for tau = 1/2
Outcome ac3() {
  constexpr double kTolOne = 1e-8, kTolRandom = 1e-6, kTime = 30.0;
  const auto t0 = std::chrono::steady_clock::now();
  QuadratureSpec spec;
  spec.abs_tol = 1e-14;
  spec.rel_tol = 1e-13;
  // int |F|^2 e^{-2r|z|} dlambda in polar form; the angular rule is exact for degree <= 10
  auto quad_side = [&](const CoefficientSeries& F, double r) {
    constexpr int M = 64;
    const double rmax = (2.0 * F.truncation() + 1.0) / (2.0 * r) + 80.0 / r;
    const auto radial = [&](double rho) {
      double s = 0.0;
      for (int m = 0; m < M; ++m) {
        const cd z = std::polar(rho, 2.0 * std::numbers::pi * m / M);
        s += std::norm(F.evaluate(std::span<const cd>(&z, 1)).value());
      }
      return s * (2.0 * std::numbers::pi / M) * rho * std::exp(-2.0 * r * rho);
    };
    return std::sqrt(integrate(radial, 0.0, rmax, spec).value);
  };
  auto coeff_side = [](const CoefficientSeries& F, double r) {
    double s = 0.0;
    for (const auto& [a, c] : F.entries())
      s += std::exp(2.0 * (c.log_mag() + vartheta_flat_L2(0.5, RadiusVector{r}, a).log_mag()));
    return std::sqrt(std::numbers::pi * s);
  };
  double worst_one = 0.0, worst_rand = 0.0;
  for (double r : {0.5, 1.0, 2.0}) {
    CoefficientSeries one(1, 0);
    one.set(MultiIndex{0}, LogComplex::one());
    const double exact = std::sqrt(std::numbers::pi / (2.0 * r * r));
    worst_one = std::max({worst_one, std::abs(quad_side(one, r) / exact - 1.0), std::abs(coeff_side(one, r) / exact - 1.0)});
  }
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> degree(0, 10);
  const double radii[] = {0.5, 1.0, 2.0};
  for (int k = 0; k < 20; ++k) {
    const int n = degree(rng);
    CoefficientSeries F(1, n);
    for (int a = 0; a <= n; ++a) F.set(MultiIndex{a}, LogComplex::from_complex({normal(rng), normal(rng)}));
    const double r = radii[k % 3];
    worst_rand = std::max(worst_rand, std::abs(quad_side(F, r) / coeff_side(F, r) - 1.0));
  }
  const double secs = seconds_since(t0);
  return {worst_one <= kTolOne && worst_rand <= kTolRandom && secs <= kTime,
          "F=1 rel dev " + fmt("%.2e", worst_one) + ", random " + fmt("%.2e", worst_rand) + ", " + fmt("%.1f s", secs)};
}

// 4. Stirling bracket
Outcome ac4() {
  constexpr double kC = 3.0, kTime = 1.0;
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  for (double tau : {0.6, 1.0, 2.0, 5.0}) {
    double lo = INFINITY, hi = -INFINITY;
    for (int a = 0; a <= 500; ++a) {
      const double l = log_stirling_ratio(tau, a);
      lo = std::min(lo, l);
      hi = std::max(hi, l);
    }
    const bool in = lo >= -std::log(kC) && hi <= std::log(kC);
    ok = ok && in;
    char b[128];
    std::snprintf(b, sizeof b, "tau=%g [%.3g, %.3g]%s; ", tau, std::exp(lo), std::exp(hi), in ? "" : " OUT");
    detail += b;
  }
  const double secs = seconds_since(t0);
  return {ok && secs <= kTime, detail + fmt("%.3f s", secs)};
}

// 5. varsigma two-sided bounds
Outcome ac5() {
  constexpr double kC = 10.0;
  double worst = 0.0;
  for (double t : {0.5, 1.0, 2.0}) {
    const RadialCutoff chi = RadialCutoff::indicator(RadiusVector{t});
    for (int a = 0; a <= 50; ++a) {
      const VarsigmaBounds b = varsigma_bounds_check(MultiIndex{a}, chi);
      if (!b.lower_ok || !b.upper_ok) worst = INFINITY;
      worst = std::max(worst, b.witnessed_c);
    }
  }
  return {worst <= kC, "witnessed C " + fmt("%.4g", worst)};
}

// 6. V h_alpha = e_alpha by quadrature
Outcome ac6() {
  constexpr double kTol = 1e-8, kTime = 20.0;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> radius(1.0, 3.0), angle(-std::numbers::pi, std::numbers::pi);
  std::vector<cd> zs;
  for (int k = 0; k < 10; ++k) zs.push_back(std::polar(radius(rng), angle(rng)));
  double worst = 0.0;
  for (int a = 0; a <= 12; ++a) {
    const RealFn h = [a](std::span<const double> x) { return cd(hermite_eval(MultiIndex{a}, x)); };
    for (const cd& z : zs) {
      const cd got = bargmann_transform(h, std::span<const cd>(&z, 1));
      const cd want = normalized_monomial(MultiIndex{a}, std::span<const cd>(&z, 1)).value();
      worst = std::max(worst, std::abs(got - want) / std::abs(want));
    }
  }
  const double secs = seconds_since(t0);
  return {worst <= kTol && secs <= kTime, "max rel err " + fmt("%.2e", worst) + ", " + fmt("%.1f s", secs)};
}

// 7. STFT bridge
Outcome ac7() {
  constexpr double kTol = 1e-8;
  struct Case {
    const char* name;
    HermiteSeries series;
  };
  std::vector<Case> cases;
  HermiteSeries f0(1, 2), f1(1, 2), f2(1, 2);
  f0.set(MultiIndex{0}, LogComplex::one());
  f1.set(MultiIndex{1}, LogComplex::one());
  f2.set(MultiIndex{0}, LogComplex::one());
  f2.set(MultiIndex{2}, LogComplex::from_complex({0.0, 1.0}));
  cases.push_back({"h0", f0});
  cases.push_back({"h1", f1});
  cases.push_back({"h0+ih2", f2});
  double worst = 0.0;
  for (const auto& c : cases) {
    const RealFn f = [&](std::span<const double> x) { return c.series.evaluate(x); };
    const PhaseFn V = [&](std::span<const double> x, std::span<const double> xi) { return stft_gaussian(f, x, xi); };
    double scale = 0.0, err = 0.0;
    for (double x : {-1.0, -0.5, 0.0, 0.5, 1.0})
      for (double xi : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        const cd got = uv_operator(V, std::span<const double>(&x, 1), std::span<const double>(&xi, 1));
        const cd z(x, xi);
        const cd want = bargmann_transform(c.series, std::span<const cd>(&z, 1)).value();
        scale = std::max(scale, std::abs(want));
        err = std::max(err, std::abs(got - want));
      }
    worst = std::max(worst, err / scale);
  }
  return {worst <= kTol, "max err / grid max " + fmt("%.2e", worst)};
}

// 8. round trip and support preservation
Outcome ac8() {
  constexpr double kTol = 1e-10;
  std::mt19937_64 rng(5);
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<int> degree(0, 10), pick(0, 3);
  std::bernoulli_distribution keep(0.6);
  double worst = 0.0;
  bool support_ok = true;
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = 1 + k % 2;
    const int N = degree(rng);
    RadialCutoff chi = RadialCutoff::indicator(RadiusVector::uniform(d, 1.0));
    switch (pick(rng)) {
      case 0:
        chi = RadialCutoff::indicator(RadiusVector::uniform(d, 0.5));
        break;
      case 1:
        chi = RadialCutoff::indicator(RadiusVector::uniform(d, 2.0));
        break;
      case 2:
        chi = RadialCutoff::trapezoid(RadiusVector::uniform(d, 1.0), RadiusVector::uniform(d, 1.5));
        break;
      default:
        break;
    }
    CoefficientSeries F(d, N);
    for (const auto& a : indices_up_to(d, N))
      if (keep(rng)) F.set(a, LogComplex::from_complex({normal(rng), normal(rng)}));
    const VarsigmaTable tab(chi, N);
    const CoefficientSeries F0 = reconstruct(F, tab);
    const CoefficientSeries back = project(F0, tab);
    const CoefficientSeries again = reconstruct(project(F0, tab), tab);
    support_ok = support_ok && F0.size() == F.size() && back.size() == F.size() && again.size() == F.size();
    for (const auto& [a, c] : F.entries()) {
      support_ok = support_ok && F0.contains(a);
      worst = std::max(worst, std::abs(back.get(a).value() / c.value() - 1.0));
      worst = std::max(worst, std::abs(again.get(a).value() / F0.get(a).value() - 1.0));
    }
  }
  return {worst <= kTol && support_ok, "max rel dev " + fmt("%.2e", worst) + (support_ok ? ", supports equal" : ", SUPPORT CHANGED")};
}

// 9. coefficient <-> growth duality, tau = 1, r0 = 1
Outcome ac9() {
  constexpr double kRadiusTol = 0.1, kSigmaTol = 0.05;
  const double r0 = 1.0;
  const CoefficientSeries F = series_from(1, 60, [&](const MultiIndex& a) { return coeff_bound_flat(1.0, RadiusVector{r0}, a); });
  const GrowthSpec g = classify(F);
  const bool cls_ok = g.cls == GrowthClass::Flat && !g.dual && std::abs(g.sigma - 0.5) <= kSigmaTol &&
                      std::abs(g.radius[0] / r0 - 1.0) <= kRadiusTol;
  const GrowthSampler sampler(F);
  const StabilityResult above = sampler.check(majorant_for(OrderParam::flat(0.5), 1.25 * r0, 1));
  const StabilityResult below = sampler.check(majorant_for(OrderParam::flat(0.5), 0.8 * r0, 1));
  char b[200];
  std::snprintf(b, sizeof b, "%s sigma=%.4f r=%.4f; 1.25r0 %s; 0.8r0 %s (sup growth %.3g nats)", to_string(g.cls).c_str(),
                g.sigma, g.radius[0], above.stable ? "stable" : "UNSTABLE", below.stable ? "STABLE" : "unstable",
                below.log_sups.back() - below.log_sups.front());
  return {cls_ok && above.stable && !below.stable, b};
}

// 10. log-class duality
Outcome ac10() {
  constexpr double kSTol = 0.02, kRadiusTol = 0.1;
  const double R = log_class_R(0.25, 1.0);
  const bool exact = R == 0.125;
  const CoefficientSeries F = series_from(1, 60, [](const MultiIndex& a) { return LogComplex::from_log(-a[0] * a[0] / 8.0); });
  const GrowthSpec g = classify(F);
  const bool fit_ok = g.cls == GrowthClass::LogPower && std::abs(g.s - 0.25) <= kSTol && std::abs(g.radius[0] - 1.0) <= kRadiusTol;
  // argmax of -r (log t)^theta + alpha log t over a log-spaced grid in t
  const double s = 0.25, r = 1.0, theta = 1.0 / (1.0 - 2.0 * s);
  constexpr int kGrid = 200000;
  const double lmax = 20.0, step = lmax / kGrid;
  int bad = 0;
  for (int a = 1; a <= 30; ++a) {
    int best = 0;
    double best_v = -INFINITY;
    for (int i = 0; i <= kGrid; ++i) {
      const double l = i * step;
      const double v = -r * std::pow(l, theta) + a * l;
      if (v > best_v) {
        best_v = v;
        best = i;
      }
    }
    if (std::abs(best * step - std::log(log_weight_maximizer(r, s, a))) > step) ++bad;
  }
  char b[200];
  std::snprintf(b, sizeof b, "R(1/4,1)=%.17g; %s s=%.4f r=%.4f; maximizer misses %d/30", R, to_string(g.cls).c_str(), g.s,
                g.radius[0], bad);
  return {exact && fit_ok && bad == 0, b};
}

// 11. theorem campaign through the CLI
Outcome ac11() {
  constexpr double kTime = 300.0;
  const auto t0 = std::chrono::steady_clock::now();
  struct Run {
    const char* args;
    const char* key;
    double value;
  };
  const Run runs[] = {{"--theorem T1 --sigma 1", nullptr, 0.0},
                      {"--theorem T2", nullptr, 0.0},
                      {"--theorem T3 --sigma 0.75", "sigma_dual", 1.5},
                      {"--theorem T4 --sigma 0.5", nullptr, 0.0},
                      {"--theorem T5 --sigma 0.25", "sigma_dual", 0.5},
                      {"--theorem T6 --s 0.25", nullptr, 0.0}};
  bool ok = true;
  std::string detail;
  const std::string report = "acceptance_report.json";
  for (const auto& run : runs) {
    const std::string cmd = std::string(FOCKPW_CLI_PATH) + " verify " + run.args +
                            " --d 1 --N 40 --cutoff indicator:1 -o " + report + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    const bool exit0 = status == 0;
    bool key_ok = true;
    if (run.key) {
      std::FILE* fp = std::fopen(report.c_str(), "r");
      key_ok = false;
      if (fp) {
        const auto j = nlohmann::json::parse(fp, nullptr, false);
        std::fclose(fp);
        key_ok = !j.is_discarded() && j["params"].contains(run.key) &&
                 std::abs(j["params"][run.key].get<double>() - run.value) <= 1e-12;
      }
    }
    ok = ok && exit0 && key_ok;
    detail += std::string(run.args).substr(10, 2) + (exit0 && key_ok ? " ok; " : " FAIL; ");
  }
  std::remove(report.c_str());
  const double secs = seconds_since(t0);
  return {ok && secs <= kTime, detail + fmt("%.1f s", secs)};
}

// 12. phase-space bridge
Outcome ac12() {
  constexpr double kTol = 5e-3;
  constexpr int N = 8;
  const double t = 1.0;
  const RadialCutoff chi = RadialCutoff::indicator(RadiusVector{t});
  // F_0 = 1 on the disc of radius t, pulled back to phase space
  const EntireFn F0 = [t](std::span<const cd> z) { return std::abs(z[0]) <= t ? cd(1.0) : cd(0.0); };
  const PhaseFn F = unlift_density(F0, 1);
  const double R = std::sqrt(2.0) * t;
  const PhaseSupport support{-R, R, -R, R, R};
  QuadratureSpec spec;
  spec.abs_tol = 1e-10;
  spec.rel_tol = 1e-8;
  const GaussRule rule = composite_gauss_legendre(-12.0, 12.0, 24, 20);
  std::vector<cd> values;
  for (double x : rule.nodes) values.push_back(stft_adjoint(F, support, x, spec));
  const HermiteSeries ch = hermite_coefficients_1d(values, rule, N);
  CoefficientSeries one(1, N);
  one.set(MultiIndex{0}, LogComplex::one());
  const CoefficientSeries P = project(one, chi);
  double worst = 0.0;
  for (int n = 0; n <= N; ++n) worst = std::max(worst, std::abs(ch.get(MultiIndex{n}).value() - P.get(MultiIndex{n}).value()));
  return {worst <= kTol, "max coefficient dev " + fmt("%.2e", worst) + " (c_0 = " + fmt("%.6f", ch.get(MultiIndex{0}).value().real()) + ")"};
}

const char* kNames[] = {"",
                        "reproducing identity",
                        "varsigma closed forms",
                        "norm identity",
                        "Stirling bracket",
                        "varsigma bounds",
                        "Bargmann basis property",
                        "STFT bridge",
                        "round trip",
                        "coefficient/growth duality",
                        "log-class duality",
                        "theorem campaign",
                        "phase-space bridge"};
const std::function<Outcome()> kCriteria[] = {nullptr, ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8, ac9, ac10, ac11, ac12};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i)
    if (std::string(argv[i]) == "--criterion" && i + 1 < argc) only = std::atoi(argv[++i]);
  if (only < 0 || only > 12) {
    std::fprintf(stderr, "criterion must be 1..12\n");
    return 2;
  }
  int failures = 0;
  for (int k = 1; k <= 12; ++k) {
    if (only && k != only) continue;
    Outcome o;
    try {
      o = kCriteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("AC%-2d %s  %s: %s\n", k, o.pass ? "PASS" : "FAIL", kNames[k], o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  return failures ? 1 : 0;
}
