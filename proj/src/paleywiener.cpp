#include "fockpw/paleywiener.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "fockpw/errors.hpp"
#include "fockpw/special.hpp"

namespace fockpw {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kInf = std::numeric_limits<double>::infinity();

struct AxisData {
  std::vector<double> alpha, y;
};

AxisData axis_data(const CoefficientSeries& F, std::size_t j, int lo, int hi) {
  AxisData out;
  for (int k = std::max(lo, 0); k <= hi; ++k) {
    MultiIndex a(F.dim());
    a[j] = k;
    const LogComplex c = F.get(a);
    if (c.is_zero()) continue;
    out.alpha.push_back(k);
    out.y.push_back(c.log_mag());
  }
  return out;
}

int axis_support(const CoefficientSeries& F, std::size_t j) {
  int n = 0;
  for (const auto& [a, c] : F.entries()) {
    bool on_axis = true;
    for (std::size_t k = 0; k < a.dim(); ++k)
      if (k != j && a[k] != 0) on_axis = false;
    if (on_axis) ++n;
  }
  return n;
}

struct Fit {
  double residual = kInf;
  Eigen::VectorXd coef;
};

using Regressor = std::function<double(double)>;

// Weighted least squares, weights growing with alpha so the asymptotic end dominates.
Fit wls(const AxisData& d, const std::vector<Regressor>& cols, const std::vector<double>& offset = {}) {
  const auto n = static_cast<Eigen::Index>(d.alpha.size());
  const auto m = static_cast<Eigen::Index>(cols.size());
  Eigen::MatrixXd A(n, m);
  Eigen::VectorXd b(n), w(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = d.alpha[i];
    w(i) = std::sqrt(a + 1.0);
    for (Eigen::Index k = 0; k < m; ++k) A(i, k) = cols[k](a) * w(i);
    b(i) = (d.y[i] + (offset.empty() ? 0.0 : offset[i])) * w(i);
  }
  Fit f;
  f.coef = A.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd r = A * f.coef - b;
  f.residual = std::sqrt(r.squaredNorm() / w.squaredNorm());
  return f;
}

const Regressor kOne = [](double) { return 1.0; };
const Regressor kLin = [](double a) { return a; };
const Regressor kLogFact = [](double a) { return log_factorial(static_cast<int>(a)); };
const Regressor kLogPoly = [](double a) { return std::log(a + 1.0); };
const Regressor kInvPoly = [](double a) { return 1.0 / (a + 1.0); };
const Regressor kInvPoly2 = [](double a) { return 1.0 / ((a + 1.0) * (a + 1.0)); };

Fit fit_flat(const AxisData& d) { return wls(d, {kOne, kLin, kLogFact, kLogPoly, kInvPoly, kInvPoly2}); }
Fit fit_geometric(const AxisData& d) { return wls(d, {kOne, kLin, kLogPoly, kInvPoly, kInvPoly2}); }
Fit fit_logpower_at(const AxisData& d, double p) {
  Fit f = wls(d, {kOne, [p](double a) { return std::pow(a, p); }, kLogPoly, kInvPoly, kInvPoly2});
  if (!(f.coef(1) < 0.0)) f.residual = kInf;  // must decay
  return f;
}

struct LogPowerFit {
  Fit fit;
  double p = 0.0;
};

LogPowerFit fit_logpower(const AxisData& d) {
  // coarse scan in log p, then golden-section refinement
  const double lo = std::log(1.02), hi = std::log(12.0);
  constexpr int kScan = 48;
  int best = -1;
  double best_res = kInf;
  std::vector<double> grid(kScan + 1);
  for (int i = 0; i <= kScan; ++i) {
    grid[i] = lo + (hi - lo) * i / kScan;
    const double r = fit_logpower_at(d, std::exp(grid[i])).residual;
    if (r < best_res) {
      best_res = r;
      best = i;
    }
  }
  LogPowerFit out;
  if (best < 0) return out;
  double a = grid[std::max(best - 1, 0)], b = grid[std::min(best + 1, kScan)];
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = fit_logpower_at(d, std::exp(x1)).residual, f2 = fit_logpower_at(d, std::exp(x2)).residual;
  for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = fit_logpower_at(d, std::exp(x1)).residual;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = fit_logpower_at(d, std::exp(x2)).residual;
    }
  }
  double p = std::exp(0.5 * (a + b));
  Fit f = fit_logpower_at(d, p);
  if (f.residual > best_res) {
    p = std::exp(grid[best]);
    f = fit_logpower_at(d, p);
  }
  out.fit = f;
  out.p = p;
  return out;
}

double flat_radius_from_slope(double tau, double a) {
  if (tau > 0.0) return (2.0 * tau + 1.0) / 2.0 * std::exp(2.0 * a / (2.0 * tau + 1.0));
  return std::exp(a);
}

// Radius with the class parameter frozen, for the side flag.
double window_radius(const CoefficientSeries& F, const GrowthSpec& g, std::size_t j, int lo, int hi) {
  const AxisData d = axis_data(F, j, lo, hi);
  if (d.alpha.size() < 5) return std::numeric_limits<double>::quiet_NaN();
  switch (g.cls) {
    case GrowthClass::Flat: {
      std::vector<double> off;
      for (double a : d.alpha) off.push_back(g.tau * log_factorial(static_cast<int>(a)));
      const Fit f = wls(d, {kOne, kLin, kLogPoly, kInvPoly, kInvPoly2}, off);
      return flat_radius_from_slope(g.tau, f.coef(1));
    }
    case GrowthClass::Geometric:
      return std::exp(fit_geometric(d).coef(1));
    case GrowthClass::LogPower: {
      const Fit f = fit_logpower_at(d, 1.0 / (2.0 * g.s));
      return std::isfinite(f.residual) ? log_class_r(g.s, -f.coef(1)) : std::numeric_limits<double>::quiet_NaN();
    }
    case GrowthClass::Polynomial:
      break;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

LogComplex coeff_bound_flat(double tau, const RadiusVector& r, const MultiIndex& alpha) {
  if (!(tau > -0.5)) throw DomainError("coeff_bound_flat needs tau > -1/2");
  if (r.dim() != alpha.dim()) throw DimensionMismatch("coeff_bound_flat: dimension mismatch");
  const double k = 2.0 * tau + 1.0;
  double lm = -tau * log_factorial(alpha);
  for (std::size_t j = 0; j < alpha.dim(); ++j)
    if (alpha[j] != 0) lm += 0.5 * k * alpha[j] * std::log(2.0 * r[j] / k);
  return LogComplex::from_log(lm);
}

double log_class_R(double s, double r) {
  if (!(s > 0.0 && s < 0.5)) throw DomainError("log class needs 0 < s < 1/2");
  if (!(r > 0.0)) throw DomainError("log class needs r > 0");
  return s * std::pow((1.0 - 2.0 * s) / r, (1.0 - 2.0 * s) / (2.0 * s));
}

double log_class_r(double s, double R) {
  if (!(s > 0.0 && s < 0.5)) throw DomainError("log class needs 0 < s < 1/2");
  if (!(R > 0.0)) throw DomainError("log class needs R > 0");
  return (1.0 - 2.0 * s) * std::pow(R / s, -2.0 * s / (1.0 - 2.0 * s));
}

LogComplex coeff_bound_log(double s, const RadiusVector& r, const MultiIndex& alpha) {
  if (r.dim() != alpha.dim()) throw DimensionMismatch("coeff_bound_log: dimension mismatch");
  double e = 0.0;
  for (std::size_t j = 0; j < alpha.dim(); ++j) e += log_class_R(s, r[j]) * std::pow(alpha[j], 1.0 / (2.0 * s));
  return LogComplex::from_log(-e);
}

RadiusVector radius_map_flat(double tau, const RadiusVector& r0, const RadiusVector& t) {
  if (!(tau > 0.5)) throw DomainError("radius_map_flat needs tau > 1/2");
  if (r0.dim() != t.dim()) throw DimensionMismatch("radius_map_flat: dimension mismatch");
  std::vector<double> out;
  for (std::size_t j = 0; j < r0.dim(); ++j)
    out.push_back((2.0 * tau - 1.0) / 2.0 * std::pow(2.0 * r0[j] / (2.0 * tau + 1.0), (2.0 * tau + 1.0) / (2.0 * tau - 1.0)) *
                  std::pow(t[j], -4.0 / (2.0 * tau - 1.0)));
  return RadiusVector(out);
}

RadiusVector radius_map_flat_inverse(double tau, const RadiusVector& R0, const RadiusVector& t) {
  if (!(tau > 0.5)) throw DomainError("radius_map_flat needs tau > 1/2");
  if (R0.dim() != t.dim()) throw DimensionMismatch("radius_map_flat: dimension mismatch");
  std::vector<double> out;
  for (std::size_t j = 0; j < R0.dim(); ++j) {
    const double q = 2.0 * R0[j] / (2.0 * tau - 1.0) * std::pow(t[j], 4.0 / (2.0 * tau - 1.0));
    out.push_back((2.0 * tau + 1.0) / 2.0 * std::pow(q, (2.0 * tau - 1.0) / (2.0 * tau + 1.0)));
  }
  return RadiusVector(out);
}

double sigma_dual(double sigma) {
  if (sigma > 0.5 && sigma < 1.0) return sigma / (2.0 * sigma - 1.0);
  if (sigma > 0.0 && sigma < 0.5) return sigma / (1.0 - 2.0 * sigma);
  throw DomainError("sigma_dual needs sigma in (0, 1/2) or (1/2, 1)");
}

double log_weight_maximizer(double r, double s, int alpha) {
  if (!(r > 0.0) || !(s > 0.0 && s < 0.5) || alpha < 1) throw DomainError("log_weight_maximizer: bad arguments");
  const double theta = 1.0 / (1.0 - 2.0 * s);
  return std::exp(std::pow(alpha / (theta * r), (1.0 - 2.0 * s) / (2.0 * s)));
}

std::string to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::Polynomial:
      return "Polynomial";
    case GrowthClass::LogPower:
      return "LogPower";
    case GrowthClass::Geometric:
      return "Geometric";
    case GrowthClass::Flat:
      return "Flat";
  }
  return "?";
}

std::string to_string(Side s) {
  switch (s) {
    case Side::Roumieu:
      return "Roumieu";
    case Side::Beurling:
      return "Beurling";
    case Side::Undecided:
      return "Undecided";
  }
  return "?";
}

GrowthSpec classify(const CoefficientSeries& F, const ClassifyOptions& opts) {
  const std::size_t d = F.dim();
  const int N = F.truncation();
  GrowthSpec out;
  out.radius = RadiusVector::uniform(d, 1.0);
  int max_order = 0;
  for (const auto& [a, c] : F.entries()) max_order = std::max(max_order, a.order());
  for (std::size_t j = 0; j < d; ++j) {
    if (axis_support(F, j) < opts.min_terms) {
      out.cls = GrowthClass::Polynomial;
      out.degree = max_order;
      return out;
    }
  }
  const int lo = N / 4;
  std::vector<GrowthSpec> per_axis;
  for (std::size_t j = 0; j < d; ++j) {
    const AxisData data = axis_data(F, j, lo, N);
    if (data.alpha.size() < 6) throw InsufficientData("fewer than 6 nonzero coefficients in the fit window");
    const Fit flat = fit_flat(data);
    const Fit geo = fit_geometric(data);
    const LogPowerFit lp = fit_logpower(data);
    GrowthSpec g;
    g.residuals = {0.0, lp.fit.residual, geo.residual, flat.residual};
    const double best = std::min({flat.residual, geo.residual, lp.fit.residual});
    const double cut = best + std::max(opts.tie_abs, opts.tie_rel * best);
    if (lp.fit.residual <= cut) {
      g.cls = GrowthClass::LogPower;
      g.s = 1.0 / (2.0 * lp.p);
      g.residual = lp.fit.residual;
      g.radius = RadiusVector{log_class_r(g.s, -lp.fit.coef(1))};
    } else if (geo.residual <= cut || std::abs(flat.coef(2)) <= opts.flat_tau_zero) {
      g.cls = GrowthClass::Geometric;
      g.residual = geo.residual;
      g.radius = RadiusVector{std::exp(geo.coef(1))};
    } else {
      g.cls = GrowthClass::Flat;
      g.residual = flat.residual;
      g.tau = -flat.coef(2);
      if (g.tau > 0.0) {
        g.sigma = 1.0 / (2.0 * g.tau);
      } else {
        g.dual = true;
        g.sigma = -1.0 / (2.0 * g.tau);
      }
      g.radius = RadiusVector{flat_radius_from_slope(g.tau, flat.coef(1))};
    }
    per_axis.push_back(g);
  }
  // combine: the most general class wins; parameters averaged over axes of that class
  out = per_axis[0];
  for (const auto& g : per_axis)
    if (static_cast<int>(g.cls) > static_cast<int>(out.cls)) out = g;
  std::vector<double> radii;
  double tau = 0.0, s = 0.0;
  int n = 0;
  for (const auto& g : per_axis) {
    radii.push_back(g.radius[0]);
    out.residual = std::max(out.residual, g.residual);
    for (std::size_t k = 0; k < 4; ++k) out.residuals[k] = std::max(out.residuals[k], g.residuals[k]);
    if (g.cls == out.cls) {
      tau += g.tau;
      s += g.s;
      ++n;
    }
  }
  out.radius = RadiusVector(radii);
  if (out.cls == GrowthClass::Flat) {
    out.tau = tau / n;
    out.dual = out.tau <= 0.0;
    out.sigma = out.dual ? -1.0 / (2.0 * out.tau) : 1.0 / (2.0 * out.tau);
  } else if (out.cls == GrowthClass::LogPower) {
    out.s = s / n;
  }
  // side flag from two disjoint windows
  bool roumieu = true, beurling = true;
  for (std::size_t j = 0; j < d; ++j) {
    const double r1 = window_radius(F, out, j, lo, N / 2);
    const double r2 = window_radius(F, out, j, N / 2 + 1, N);
    if (!std::isfinite(r1) || !std::isfinite(r2)) {
      roumieu = beurling = false;
      break;
    }
    const double ratio = r2 / r1;
    if (std::abs(ratio - 1.0) > 0.05) roumieu = false;
    if (!(ratio < 0.95)) beurling = false;
  }
  out.side = roumieu ? Side::Roumieu : beurling ? Side::Beurling : Side::Undecided;
  return out;
}

RadiusVector fit_flat_radius(const CoefficientSeries& F, double tau, int lo, int hi) {
  std::vector<double> radii;
  for (std::size_t j = 0; j < F.dim(); ++j) {
    const AxisData d = axis_data(F, j, lo, hi);
    if (d.alpha.size() < 5) throw InsufficientData("fewer than 5 nonzero coefficients in the fit window");
    std::vector<double> off;
    for (double a : d.alpha) off.push_back(tau * log_factorial(static_cast<int>(a)));
    const Fit f = wls(d, {kOne, kLin, kLogPoly, kInvPoly, kInvPoly2}, off);
    if (!(tau > -0.5)) throw DomainError("fit_flat_radius needs tau > -1/2");
    radii.push_back((2.0 * tau + 1.0) / 2.0 * std::exp(2.0 * f.coef(1) / (2.0 * tau + 1.0)));
  }
  return RadiusVector(radii);
}

GrowthSampler::GrowthSampler(const CoefficientSeries& F, const StabilityProbe& probe, Exec exec)
    : probe_(probe), exec_(exec) {
  if (probe.caps.empty()) throw DomainError("stability probe needs at least one cap");
  const double cap = *std::max_element(probe.caps.begin(), probe.caps.end());
  GridSpec g;
  g.radius = cap;
  if (F.dim() == 1) {
    g.n_radial = static_cast<int>(probe.density * cap) + 1;
    g.n_angle = probe.n_angle;
  } else {
    g.n_radial = static_cast<int>(2.0 * cap) + 1;
    g.n_angle = 8;
  }
  points_ = polar_grid(g, F.dim());
  log_abs_ = grid_log_abs(F, points_, exec);
  for (const auto& p : points_) {
    double m = 0.0;
    for (const auto& z : p) m = std::max(m, std::abs(z));
    max_abs_.push_back(m);
  }
}

StabilityResult GrowthSampler::check(const Majorant& M) const {
  const long n = static_cast<long>(points_.size());
  std::vector<double> v(n);
  if (exec_ == Exec::serial) {
    for (long i = 0; i < n; ++i) v[i] = log_abs_[i] - M(points_[i]);
  } else {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) v[i] = log_abs_[i] - M(points_[i]);
  }
  StabilityResult out;
  out.log_sups.assign(probe_.caps.size(), kNegInf);
  for (long i = 0; i < n; ++i)
    for (std::size_t k = 0; k < probe_.caps.size(); ++k)
      if (max_abs_[i] <= probe_.caps[k] * (1.0 + 1e-12)) out.log_sups[k] = std::max(out.log_sups[k], v[i]);
  out.stable = true;
  for (std::size_t k = 1; k < out.log_sups.size(); ++k)
    if (!(std::abs(out.log_sups[k] - out.log_sups[k - 1]) < std::log1p(probe_.tolerance))) out.stable = false;
  return out;
}

Majorant majorant_for(const OrderParam& order, double r, std::size_t d) {
  const RadiusVector rv = RadiusVector::uniform(d, r);
  return [order, rv](std::span<const std::complex<double>> z) { return growth_majorant(1, false, order, rv, z); };
}

RadiusVector growth_to_coeff(const CoefficientSeries& F, const OrderParam& order, const StabilityProbe& probe,
                             Exec exec, double r_min, double r_max) {
  const GrowthSampler sampler(F, probe, exec);
  for (double r = r_min; r <= r_max; r *= 1.02)
    if (sampler.check(majorant_for(order, r, F.dim())).stable) return RadiusVector::uniform(F.dim(), r);
  throw NoStabilization("sup of |F| e^{-M} keeps growing for every probed radius");
}

CoefficientSeries reconstruct(const CoefficientSeries& F, const VarsigmaTable& table) {
  if (F.dim() != table.dim()) throw DimensionMismatch("reconstruct: dimension mismatch");
  CoefficientSeries out(F.dim(), F.truncation());
  for (const auto& [alpha, c] : F.entries())
    out.set(alpha, c * table(alpha) * LogComplex::from_log(0.5 * log_factorial(alpha)));
  return out;
}

CoefficientSeries reconstruct(const CoefficientSeries& F, const RadialCutoff& chi, const QuadratureSpec& spec,
                              Exec exec) {
  return reconstruct(F, VarsigmaTable(chi, F.truncation(), spec, exec));
}

}  // namespace fockpw
