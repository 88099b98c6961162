#include "fockpw/theorems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <random>

#include "fockpw/errors.hpp"
#include "fockpw/kernels.hpp"
#include "fockpw/paleywiener.hpp"
#include "fockpw/projection.hpp"
#include "fockpw/special.hpp"

namespace fockpw {

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();
const double kLogC = std::log(1e6);

using Bound = std::function<LogComplex(const MultiIndex&)>;

struct Ctx {
  const RadialCutoff& chi;
  int N;
  QuadratureSpec spec;
  Exec exec;
  std::size_t d;
};

CoefficientSeries flat_series(std::size_t d, int N, double tau, double r0) {
  const RadiusVector r = RadiusVector::uniform(d, r0);
  return series_from(d, N, [&](const MultiIndex& a) { return coeff_bound_flat(tau, r, a); });
}

CoefficientSeries flat_series(int N, double tau, const RadiusVector& r) {
  return series_from(r.dim(), N, [&](const MultiIndex& a) { return coeff_bound_flat(tau, r, a); });
}

CoefficientSeries log_series(std::size_t d, int N, double s, double r0) {
  const RadiusVector r = RadiusVector::uniform(d, r0);
  return series_from(d, N, [&](const MultiIndex& a) { return coeff_bound_log(s, r, a); });
}

CoefficientSeries geometric_series(int N, const RadiusVector& rho) {
  return series_from(rho.dim(), N, [&](const MultiIndex& a) {
    double lm = 0.0;
    for (std::size_t j = 0; j < a.dim(); ++j) lm += a[j] * std::log(rho[j]);
    return LogComplex::from_log(lm);
  });
}

CoefficientSeries truncate(const CoefficientSeries& F, int N) {
  CoefficientSeries out(F.dim(), N);
  for (const auto& [a, c] : F.entries())
    if (a.order() <= N) out.set(a, c);
  return out;
}

// log of the smallest C with |c(F, alpha)| <= C bound(alpha)
double log_constant(const CoefficientSeries& F, const Bound& bound) {
  double c = -std::numeric_limits<double>::infinity();
  for (const auto& [a, v] : F.entries()) c = std::max(c, v.log_mag() - bound(a).log_mag());
  return c;
}

// "lesssim": constant below 1e6 and at most doubling when N doubles
Implication lesssim(const std::string& name, const CoefficientSeries& FN, const CoefficientSeries& F2N,
                    const Bound& bound) {
  const double c1 = log_constant(FN, bound), c2 = log_constant(F2N, bound);
  Implication im;
  im.name = name;
  im.witnessed_constant = std::exp(c1);
  im.residual = c2 - c1;
  im.pass = c1 <= kLogC && c2 <= std::log(2.0) + std::max(c1, 0.0);
  return im;
}

double rel_dev(const LogComplex& a, const LogComplex& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  if (a.is_zero() || b.is_zero()) return 1.0;
  return std::abs(std::exp(std::complex<double>(a.log_mag() - b.log_mag(), a.phase() - b.phase())) - 1.0);
}

double series_rel_dev(const CoefficientSeries& A, const CoefficientSeries& B) {
  double m = 0.0;
  for (const auto& [a, c] : A.entries()) m = std::max(m, rel_dev(c, B.get(a)));
  for (const auto& [a, c] : B.entries()) m = std::max(m, rel_dev(A.get(a), c));
  return m;
}

bool same_support(const CoefficientSeries& A, const CoefficientSeries& B) {
  if (A.size() != B.size()) return false;
  for (const auto& [a, c] : A.entries())
    if (!B.contains(a)) return false;
  return true;
}

// smallest radius of convergence over the axes, from the raw Taylor coefficients
double convergence_radius(const CoefficientSeries& F) {
  CoefficientSeries raw(F.dim(), F.truncation());
  for (const auto& [a, c] : F.entries()) raw.set(a, c * LogComplex::from_log(-0.5 * log_factorial(a)));
  const RadiusVector r = fit_flat_radius(raw, 0.0, F.truncation() / 4, F.truncation());
  double rho = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < r.dim(); ++j) rho = std::min(rho, 1.0 / std::sqrt(2.0 * r[j]));
  return rho;
}

double max_of(const RadiusVector& r) {
  double m = 0.0;
  for (std::size_t j = 0; j < r.dim(); ++j) m = std::max(m, r[j]);
  return m;
}

double min_of(const RadiusVector& r) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < r.dim(); ++j) m = std::min(m, r[j]);
  return m;
}

double max_ratio_dev(const RadiusVector& a, const RadiusVector& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a[j] / b[j] - 1.0));
  return m;
}

double max_ratio(const RadiusVector& a, const RadiusVector& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) m = std::max(m, a[j] / b[j]);
  return m;
}

double log_sup_on_disc(const CoefficientSeries& F, double radius, Exec exec) {
  GridSpec g;
  g.radius = radius;
  g.n_radial = 33;
  g.n_angle = F.dim() == 1 ? 32 : 8;
  if (F.dim() > 1) g.n_radial = 9;
  const auto pts = polar_grid(g, F.dim());
  const auto la = grid_log_abs(F, pts, exec);
  return *std::max_element(la.begin(), la.end());
}

void run(std::vector<Implication>& out, const std::string& name, const std::function<Implication()>& body) {
  try {
    Implication im = body();
    im.name = name;
    out.push_back(im);
  } catch (const std::exception& e) {
    Implication im{name, false, kNaN, kNaN, e.what()};
    out.push_back(im);
  }
}

Implication growth_stable(const CoefficientSeries& F, const OrderParam& order, const std::vector<double>& radii,
                          Exec exec) {
  const GrowthSampler sampler(F, {}, exec);
  Implication im;
  im.pass = true;
  im.witnessed_constant = 0.0;
  for (double r : radii) {
    const StabilityResult res = sampler.check(majorant_for(order, r, F.dim()));
    im.pass = im.pass && res.stable;
    im.witnessed_constant = std::max(im.witnessed_constant, std::exp(res.log_sups.back()));
    im.residual = std::max(im.residual, std::abs(res.log_sups.back() - res.log_sups.front()));
  }
  return im;
}

Implication classify_flat(const CoefficientSeries& F, double sigma, const RadiusVector& r0) {
  const GrowthSpec g = classify(F);
  Implication im;
  im.witnessed_constant = g.sigma;
  im.residual = g.residual;
  im.pass = g.cls == GrowthClass::Flat && !g.dual && std::abs(g.sigma / sigma - 1.0) <= 0.1 &&
            max_ratio_dev(g.radius, r0) <= 0.1;
  if (!im.pass) im.note = "classified " + to_string(g.cls) + " sigma=" + std::to_string(g.sigma);
  return im;
}

Implication classify_log(const CoefficientSeries& F, double s, double s_tol, const RadiusVector* r0) {
  const GrowthSpec g = classify(F);
  Implication im;
  im.witnessed_constant = g.s;
  im.residual = std::abs(g.s - s);
  im.pass = g.cls == GrowthClass::LogPower && im.residual <= s_tol && (!r0 || max_ratio_dev(g.radius, *r0) <= 0.1);
  if (!im.pass) im.note = "classified " + to_string(g.cls) + " s=" + std::to_string(g.s);
  return im;
}

// ---- sigma = 1 ----------------------------------------------------------------

void verify_flat_one(const Ctx& c, std::optional<double> r0_opt, TheoremReport& rep) {
  const double r0 = r0_opt.value_or(0.5 * min_of(c.chi.t1()));
  rep.params["r0"] = r0;
  rep.params["tau"] = 0.5;
  const CoefficientSeries FN = flat_series(c.d, c.N, 0.5, r0), F2N = flat_series(c.d, 2 * c.N, 0.5, r0);
  const VarsigmaTable table(c.chi, 2 * c.N, c.spec, c.exec);
  const RadiusVector r0v = RadiusVector::uniform(c.d, r0);
  auto& out = rep.implications;

  run(out, "1=>2", [&] { return growth_stable(FN, OrderParam::flat(1.0), {1.25 * r0}, c.exec); });

  auto analytic_on_support = [&](const RadialCutoff& chi, const VarsigmaTable& tab) {
    const CoefficientSeries F0 = reconstruct(FN, tab);
    const double rho = convergence_radius(F0);
    Implication im;
    im.witnessed_constant = rho / max_of(chi.t2());
    im.residual = series_rel_dev(project(F0, tab), FN);
    im.pass = im.witnessed_constant >= 1.05 && im.residual <= 1e-10;
    return im;
  };
  run(out, "2=>3", [&] { return analytic_on_support(c.chi, table); });
  run(out, "3=>4", [&] {
    Implication im;
    im.pass = true;
    im.witnessed_constant = std::numeric_limits<double>::infinity();
    std::vector<RadialCutoff> samples = {RadialCutoff::trapezoid(c.chi.t1(), c.chi.t2().scaled(1.25)), c.chi.scaled(2.0)};
    for (const auto& chi : samples) {
      const Implication one = analytic_on_support(chi, VarsigmaTable(chi, c.N, c.spec, c.exec));
      im.pass = im.pass && one.pass;
      im.witnessed_constant = std::min(im.witnessed_constant, one.witnessed_constant);
      im.residual = std::max(im.residual, one.residual);
    }
    return im;
  });
  run(out, "4=>5", [&] {
    const double rad = max_of(c.chi.t2());
    const double s1 = log_sup_on_disc(reconstruct(FN, table), rad, c.exec);
    const double s2 = log_sup_on_disc(reconstruct(F2N, table), rad, c.exec);
    Implication im;
    im.witnessed_constant = std::exp(s1);
    im.residual = s2 - s1;
    im.pass = std::isfinite(s1) && std::isfinite(s2) && std::abs(s2 - s1) <= std::log(2.0);
    return im;
  });
  run(out, "5=>6", [&] {
    const int Nq = std::min(c.N, c.d == 1 ? 12 : 6);
    const CoefficientSeries Fq = truncate(FN, Nq);
    const CoefficientSeries F0 = reconstruct(Fq, table);
    const EntireFn f0 = [&F0](std::span<const std::complex<double>> z) { return F0.evaluate(z).value(); };
    const CoefficientSeries P = project_quadrature(f0, c.chi, Nq, c.spec);
    double scale = 0.0, dev = 0.0;
    for (const auto& [a, v] : Fq.entries()) scale = std::max(scale, v.magnitude());
    for (const auto& a : indices_up_to(c.d, Nq)) dev = std::max(dev, std::abs(P.get(a).value() - Fq.get(a).value()));
    Implication im;
    im.witnessed_constant = scale;
    im.residual = dev / scale;
    im.pass = im.residual <= 1e-6;
    return im;
  });
  run(out, "6=>1", [&] {
    const CoefficientSeries F = project(reconstruct(FN, table), table);
    Implication im = classify_flat(F, 1.0, r0v);
    const Implication b = lesssim("", F, F2N, [&](const MultiIndex& a) { return coeff_bound_flat(0.5, r0v, a); });
    im.pass = im.pass && b.pass;
    return im;
  });
}

void verify_beurling_one(const Ctx& c, TheoremReport& rep) {
  const std::vector<double> radii = {1.0, 0.5, 0.25};
  auto witness = [&](int n) {
    return series_from(c.d, n, [](const MultiIndex& a) {
      return LogComplex::from_log(a.order() * std::log(0.1) - log_factorial(a));
    });
  };
  const CoefficientSeries GN = witness(c.N), G2N = witness(2 * c.N);
  const VarsigmaTable table(c.chi, 2 * c.N, c.spec, c.exec);
  auto& out = rep.implications;

  run(out, "1=>2", [&] { return growth_stable(GN, OrderParam::flat(1.0), radii, c.exec); });
  run(out, "2=>3", [&] {
    const CoefficientSeries F0N = reconstruct(GN, table), F0_2N = reconstruct(G2N, table);
    auto raw = [](const CoefficientSeries& F) {
      CoefficientSeries r(F.dim(), F.truncation());
      for (const auto& [a, v] : F.entries()) r.set(a, v * LogComplex::from_log(-0.5 * log_factorial(a)));
      return r;
    };
    const CoefficientSeries AN = raw(F0N), A2N = raw(F0_2N);
    Implication im;
    im.pass = series_rel_dev(project(F0N, table), GN) <= 1e-10;
    const double t = max_of(c.chi.t2());
    for (double R : {t, 4.0 * t, 16.0 * t}) {
      const Implication b =
          lesssim("", AN, A2N, [R](const MultiIndex& a) { return LogComplex::from_log(-a.order() * std::log(R)); });
      im.pass = im.pass && b.pass;
      im.witnessed_constant = std::max(im.witnessed_constant, b.witnessed_constant);
      im.residual = std::max(im.residual, b.residual);
    }
    return im;
  });
  run(out, "3=>1", [&] {
    auto exp_series = [&](int n) {
      return series_from(c.d, n, [](const MultiIndex& a) { return LogComplex::from_log(-0.5 * log_factorial(a)); });
    };
    const CoefficientSeries FN = project(exp_series(c.N), table), F2N = project(exp_series(2 * c.N), table);
    Implication im;
    im.pass = true;
    for (double r : radii) {
      const RadiusVector rv = RadiusVector::uniform(c.d, r);
      const Implication b = lesssim("", FN, F2N, [&](const MultiIndex& a) { return coeff_bound_flat(0.5, rv, a); });
      im.pass = im.pass && b.pass;
      im.witnessed_constant = std::max(im.witnessed_constant, b.witnessed_constant);
      im.residual = std::max(im.residual, b.residual);
    }
    return im;
  });
}

// ---- sigma in (0, 1) ------------------------------------------------------------

void verify_flat_pair(TheoremId id, const Ctx& c, double sigma, std::optional<double> r0_opt, TheoremReport& rep) {
  const double tau = 1.0 / (2.0 * sigma);
  const double r0 = r0_opt.value_or(1.0);
  const RadiusVector r0v = RadiusVector::uniform(c.d, r0);
  const RadiusVector R0 = radius_map_flat(tau, r0v, c.chi.t1());
  rep.params["tau"] = tau;
  rep.params["r0"] = r0;
  rep.params["R0"] = R0[0];
  if (sigma != 0.5) rep.params["sigma_dual"] = sigma_dual(sigma);
  const CoefficientSeries FN = flat_series(c.d, c.N, tau, r0);
  const VarsigmaTable table(c.chi, c.N, c.spec, c.exec);
  const int lo = c.N / 4;
  auto& out = rep.implications;

  // F_0 side template and the radius expected back on the F side
  auto dual_template = [&]() {
    if (id == TheoremId::T4) {
      std::vector<double> rho;
      for (std::size_t j = 0; j < c.d; ++j) rho.push_back(std::sqrt(2.0 * R0[j]));
      return geometric_series(c.N, RadiusVector(rho));
    }
    return flat_series(c.N, tau - 1.0, R0);
  };

  if (id == TheoremId::P345) {
    run(out, "(1)", [&] {
      const CoefficientSeries F0 = reconstruct(FN, table);
      const RadiusVector fitted = fit_flat_radius(F0, tau - 1.0, lo, c.N);
      Implication im;
      im.witnessed_constant = fitted[0];
      im.residual = max_ratio(fitted, R0) - 1.0;
      im.pass = im.residual <= 0.1 && series_rel_dev(project(F0, table), FN) <= 1e-10;
      return im;
    });
    run(out, "(2)", [&] {
      const RadiusVector R0b = radius_map_flat(tau, r0v, c.chi.t2());
      const CoefficientSeries F = project(flat_series(c.N, tau - 1.0, R0b), table);
      const RadiusVector fitted = fit_flat_radius(F, tau, lo, c.N);
      Implication im;
      im.witnessed_constant = fitted[0];
      im.residual = max_ratio(fitted, r0v) - 1.0;
      im.pass = im.residual <= 0.1;
      return im;
    });
    return;
  }

  run(out, "1=>2", [&] { return growth_stable(FN, OrderParam::flat(sigma), {1.25 * r0}, c.exec); });
  run(out, "2=>1", [&] { return classify_flat(FN, sigma, r0v); });
  run(out, "1=>3", [&] {
    const CoefficientSeries F0 = reconstruct(FN, table);
    const GrowthSpec g = classify(F0);
    Implication im;
    im.residual = g.residual;
    if (id == TheoremId::T4) {
      std::vector<double> rho;
      for (std::size_t j = 0; j < c.d; ++j) rho.push_back(std::sqrt(2.0 * R0[j]));
      im.witnessed_constant = g.radius[0];
      im.pass = g.cls == GrowthClass::Geometric && max_ratio(g.radius, RadiusVector(rho)) <= 1.1;
    } else {
      const double s0 = sigma_dual(sigma);
      const bool want_dual = id == TheoremId::T3;
      const RadiusVector fitted = fit_flat_radius(F0, tau - 1.0, lo, c.N);
      im.witnessed_constant = g.sigma;
      im.pass = g.cls == GrowthClass::Flat && g.dual == want_dual && std::abs(g.sigma / s0 - 1.0) <= 0.1 &&
                max_ratio(fitted, R0) <= 1.1;
    }
    im.pass = im.pass && series_rel_dev(project(F0, table), FN) <= 1e-10;
    if (!im.pass) im.note = "classified " + to_string(g.cls) + " sigma=" + std::to_string(g.sigma);
    return im;
  });
  run(out, "3=>1", [&] {
    const CoefficientSeries F = project(dual_template(), table);
    const RadiusVector expect = radius_map_flat_inverse(tau, R0, c.chi.t2());
    const RadiusVector fitted = fit_flat_radius(F, tau, lo, c.N);
    const GrowthSpec g = classify(F);
    Implication im;
    im.witnessed_constant = fitted[0];
    im.residual = max_ratio_dev(fitted, expect);
    im.pass = im.residual <= 0.1 && g.cls == GrowthClass::Flat && std::abs(g.sigma / sigma - 1.0) <= 0.1;
    if (!im.pass) im.note = "classified " + to_string(g.cls) + " sigma=" + std::to_string(g.sigma);
    return im;
  });
}

// ---- real s in (0, 1/2) ---------------------------------------------------------

void verify_log(TheoremId id, const Ctx& c, double s, std::optional<double> r0_opt, TheoremReport& rep) {
  const double r0 = r0_opt.value_or(0.25);
  const RadiusVector r0v = RadiusVector::uniform(c.d, r0);
  rep.params["r0"] = r0;
  rep.params["R"] = log_class_R(s, r0);
  const CoefficientSeries FN = log_series(c.d, c.N, s, r0);
  const VarsigmaTable table(c.chi, c.N, c.spec, c.exec);
  auto& out = rep.implications;

  auto growth_exists = [&](const CoefficientSeries& F) {
    const RadiusVector r = growth_to_coeff(F, OrderParam::real(s), {}, c.exec);
    Implication im;
    im.witnessed_constant = r[0];
    im.residual = r[0] / r0;
    im.pass = true;
    return im;
  };

  if (id == TheoremId::P6) {
    run(out, "(1)", [&] {
      const CoefficientSeries F0 = reconstruct(FN, table);
      Implication im = growth_exists(F0);
      im.pass = series_rel_dev(project(F0, table), FN) <= 1e-10;
      return im;
    });
    run(out, "(2)", [&] { return growth_exists(project(FN, table)); });
    return;
  }

  run(out, "1=>2", [&] { return growth_exists(FN); });
  run(out, "2=>1", [&] { return classify_log(FN, s, 0.02, &r0v); });
  run(out, "1=>3", [&] {
    const CoefficientSeries F0 = reconstruct(FN, table);
    Implication im = classify_log(F0, s, 0.05, nullptr);
    im.pass = im.pass && series_rel_dev(project(F0, table), FN) <= 1e-10;
    return im;
  });
  run(out, "3=>1", [&] { return classify_log(project(FN, table), s, 0.05, nullptr); });
}

// ---- finite series --------------------------------------------------------------

void verify_polynomial(const Ctx& c, TheoremReport& rep) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  std::bernoulli_distribution keep(0.5);
  auto random_series = [&]() {
    CoefficientSeries F(c.d, c.N);
    for (const auto& a : indices_up_to(c.d, c.N)) {
      const std::complex<double> v(normal(rng), normal(rng));
      if (keep(rng)) F.set(a, LogComplex::from_complex(v));
    }
    return F;
  };
  const VarsigmaTable table(c.chi, c.N, c.spec, c.exec);
  auto& out = rep.implications;
  run(out, "(1)", [&] {
    const CoefficientSeries F = random_series();
    const CoefficientSeries F0 = reconstruct(F, table);
    Implication im;
    im.witnessed_constant = static_cast<double>(F.size());
    im.residual = series_rel_dev(project(F0, table), F);
    im.pass = same_support(F, F0) && im.residual <= 1e-10;
    return im;
  });
  run(out, "(2)", [&] {
    const CoefficientSeries F0 = random_series();
    const CoefficientSeries F = project(F0, table);
    Implication im;
    im.witnessed_constant = static_cast<double>(F0.size());
    im.residual = series_rel_dev(reconstruct(F, table), F0);
    im.pass = same_support(F, F0) && im.residual <= 1e-10;
    return im;
  });
}

void require_sigma(const TheoremParams& p, double lo, double hi, bool open_lo, const char* what) {
  if (!p.sigma) throw DomainError(std::string("sigma is required: ") + what);
  const double v = *p.sigma;
  const bool ok = (open_lo ? v > lo : v >= lo) && v < hi;
  if (!ok) throw DomainError(std::string("sigma outside ") + what);
}

}  // namespace

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1:
      return "T1";
    case TheoremId::T2:
      return "T2";
    case TheoremId::T3:
      return "T3";
    case TheoremId::T4:
      return "T4";
    case TheoremId::T5:
      return "T5";
    case TheoremId::T6:
      return "T6";
    case TheoremId::P1:
      return "P1";
    case TheoremId::P345:
      return "P345";
    case TheoremId::P6:
      return "P6";
    case TheoremId::P6b:
      return "P6b";
  }
  return "?";
}

TheoremId parse_theorem(const std::string& text) {
  std::string u;
  for (char ch : text) u.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(ch))));
  for (TheoremId id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T4, TheoremId::T5, TheoremId::T6,
                       TheoremId::P1, TheoremId::P345, TheoremId::P6, TheoremId::P6b}) {
    std::string name = to_string(id);
    for (auto& ch : name) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (name == u) return id;
  }
  throw ParseError("unknown theorem '" + text + "'");
}

bool TheoremReport::all_pass() const {
  return !implications.empty() &&
         std::all_of(implications.begin(), implications.end(), [](const Implication& i) { return i.pass; });
}

void validate_params(TheoremId id, const TheoremParams& p, int N) {
  if (p.r0 && !(*p.r0 > 0.0)) throw DomainError("r0 must be positive");
  if (id == TheoremId::P6b) {
    if (N < 0) throw DomainError("N must be >= 0");
  } else if (N < 8) {
    throw DomainError("N must be >= 8");
  }
  switch (id) {
    case TheoremId::T1:
    case TheoremId::T2:
    case TheoremId::P1:
      if (p.sigma && *p.sigma != 1.0) throw DomainError("this theorem needs sigma = 1");
      break;
    case TheoremId::T3:
      require_sigma(p, 0.5, 1.0, true, "(1/2, 1)");
      break;
    case TheoremId::T4:
      if (p.sigma && *p.sigma != 0.5) throw DomainError("this theorem needs sigma = 1/2");
      break;
    case TheoremId::T5:
      require_sigma(p, 0.0, 0.5, true, "(0, 1/2)");
      break;
    case TheoremId::P345:
      require_sigma(p, 0.0, 1.0, true, "(0, 1)");
      break;
    case TheoremId::T6:
    case TheoremId::P6:
      if (!p.s) throw DomainError("s is required");
      if (!(*p.s > 0.0 && *p.s < 0.5)) throw DomainError("s outside (0, 1/2)");
      break;
    case TheoremId::P6b:
      break;
  }
}

TheoremReport verify_theorem(TheoremId id, const TheoremParams& params, const RadialCutoff& chi, int N,
                             const QuadratureSpec& spec, Exec exec) {
  validate_params(id, params, N);
  const Ctx c{chi, N, spec, exec, chi.dim()};
  TheoremReport rep;
  rep.theorem = id;
  rep.params["d"] = static_cast<double>(c.d);
  rep.params["N"] = N;
  rep.params["t1"] = min_of(chi.t1());
  rep.params["t2"] = max_of(chi.t2());
  if (params.sigma) rep.params["sigma"] = *params.sigma;
  if (params.s) rep.params["s"] = *params.s;
  switch (id) {
    case TheoremId::T1:
    case TheoremId::P1:
      rep.params["sigma"] = 1.0;
      verify_flat_one(c, params.r0, rep);
      break;
    case TheoremId::T2:
      rep.params["sigma"] = 1.0;
      verify_beurling_one(c, rep);
      break;
    case TheoremId::T4:
      rep.params["sigma"] = 0.5;
      verify_flat_pair(id, c, 0.5, params.r0, rep);
      break;
    case TheoremId::T3:
    case TheoremId::T5:
    case TheoremId::P345:
      verify_flat_pair(id, c, *params.sigma, params.r0, rep);
      break;
    case TheoremId::T6:
    case TheoremId::P6:
      verify_log(id, c, *params.s, params.r0, rep);
      break;
    case TheoremId::P6b:
      verify_polynomial(c, rep);
      break;
  }
  return rep;
}

}  // namespace fockpw
