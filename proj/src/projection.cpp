#include "fockpw/projection.hpp"

#include <cmath>
#include <numbers>

#include "fockpw/errors.hpp"
#include "fockpw/special.hpp"

namespace fockpw {

namespace {

constexpr double kUnderflow = -700.0;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLog2 = std::log(2.0);

double check_moment(double lm) {
  if (!(lm > kUnderflow)) throw DegenerateCutoff("varsigma denominator underflows");
  return lm;
}

// ln of the joint radial moment integral (d <= 2).
double joint_moment_log(const RadialCutoff& chi, const MultiIndex& alpha, const QuadratureSpec& spec) {
  const auto& t2 = chi.t2();
  double v = 0.0;
  if (chi.dim() == 1) {
    v = integrate(
            [&](double u) {
              return chi.radial_value(std::span<const double>(&u, 1)) * std::exp(-u * u) * std::pow(u, 2 * alpha[0] + 1);
            },
            0.0, t2[0], spec)
            .value;
  } else {
    v = integrate_2d(
            [&](double u1, double u2) {
              const double u[2] = {u1, u2};
              return chi.radial_value(u) * std::exp(-u1 * u1 - u2 * u2) * std::pow(u1, 2 * alpha[0] + 1) *
                     std::pow(u2, 2 * alpha[1] + 1);
            },
            0.0, t2[0], 0.0, t2[1], spec)
            .value;
  }
  return check_moment(v > 0.0 ? std::log(v) : kNegInf);
}

}  // namespace

LogComplex varsigma(const MultiIndex& alpha, const RadialCutoff& chi, const QuadratureSpec& spec) {
  if (alpha.dim() != chi.dim()) throw DimensionMismatch("varsigma: dimension mismatch");
  double lm = -static_cast<double>(alpha.dim()) * kLog2 + 0.5 * log_factorial(alpha);
  if (!chi.is_tensor()) return LogComplex::from_log(lm - joint_moment_log(chi, alpha, spec));
  lm -= std::log(chi.amplitude());
  for (std::size_t j = 0; j < alpha.dim(); ++j) {
    const auto& ax = chi.axes()[j];
    const int a = alpha[j];
    auto g = [&](double u) {
      const double c = ax.value(u);
      if (c <= 0.0 || u <= 0.0) return kNegInf;
      return std::log(c) - u * u + (2.0 * a + 1.0) * std::log(u);
    };
    const auto br = ax.breaks();
    lm -= check_moment(log_integrate(g, 0.0, ax.t2(), spec, br));
  }
  return LogComplex::from_log(lm);
}

VarsigmaTable::VarsigmaTable(const RadialCutoff& chi, int N, const QuadratureSpec& spec, Exec exec)
    : d_(chi.dim()), N_(N) {
  if (N < 0) throw DomainError("varsigma table needs N >= 0");
  if (chi.is_tensor()) {
    log_amplitude_ = std::log(chi.amplitude());
    for (const auto& ax : chi.axes()) {
      auto logs = axis_moment_logs(ax, N, spec, exec);
      for (double v : logs) check_moment(v);
      axis_logs_.push_back(std::move(logs));
    }
  } else {
    for (const auto& a : indices_up_to(d_, N)) joint_logs_[a] = joint_moment_log(chi, a, spec);
  }
}

LogComplex VarsigmaTable::operator()(const MultiIndex& alpha) const {
  if (alpha.dim() != d_) throw DimensionMismatch("varsigma table: dimension mismatch");
  if (alpha.order() > N_) throw DomainError("index " + alpha.to_string() + " beyond varsigma table");
  double lm = -static_cast<double>(d_) * kLog2 + 0.5 * log_factorial(alpha);
  if (axis_logs_.empty()) return LogComplex::from_log(lm - joint_logs_.at(alpha));
  lm -= log_amplitude_;
  for (std::size_t j = 0; j < d_; ++j) lm -= axis_logs_[j][alpha[j]];
  return LogComplex::from_log(lm);
}

VarsigmaBounds varsigma_bounds_check(const MultiIndex& alpha, const RadialCutoff& chi, const QuadratureSpec& spec) {
  const double ls = varsigma(alpha, chi, spec).log_mag();
  const double half_lf = 0.5 * log_factorial(alpha);
  double lower = half_lf, upper = half_lf;
  for (std::size_t j = 0; j < alpha.dim(); ++j) {
    const double t1 = chi.t1()[j], t2 = chi.t2()[j];
    lower += std::log(alpha[j] + 1.0) - (2.0 * alpha[j] + 2.0) * std::log(t2);
    upper += t1 * t1 + std::log(alpha[j] + 1.0) - (2.0 * alpha[j] + 2.0) * std::log(t1);
  }
  VarsigmaBounds b;
  b.lower_ok = lower <= ls;
  b.upper_ok = ls <= upper;
  b.witnessed_c = std::exp(std::max(lower - ls, ls - upper));
  return b;
}

CoefficientSeries project_monomial(const MultiIndex& alpha, const RadialCutoff& chi, const QuadratureSpec& spec) {
  CoefficientSeries out(alpha.dim(), alpha.order());
  out.set(alpha, LogComplex::one() / varsigma(alpha, chi, spec));
  return out;
}

CoefficientSeries project(const CoefficientSeries& F0, const VarsigmaTable& table) {
  if (F0.dim() != table.dim()) throw DimensionMismatch("project: dimension mismatch");
  CoefficientSeries out(F0.dim(), F0.truncation());
  for (const auto& [alpha, c] : F0.entries())
    out.set(alpha, c / (table(alpha) * LogComplex::from_log(0.5 * log_factorial(alpha))));
  return out;
}

CoefficientSeries project(const CoefficientSeries& F0, const RadialCutoff& chi, const QuadratureSpec& spec, Exec exec) {
  return project(F0, VarsigmaTable(chi, F0.truncation(), spec, exec));
}

CoefficientSeries project_quadrature(const EntireFn& F0, const RadialCutoff& chi, int N, const QuadratureSpec& spec) {
  const std::size_t d = chi.dim();
  if (d > 2) throw DomainError("project_quadrature supports d <= 2");
  if (N < 0) throw DomainError("project_quadrature needs N >= 0");
  const int M = std::max(2 * N + 2, 64);
  constexpr int kNodes = 20;

  // per-axis radial rule over [0, t2] split at the cutoff's kinks
  auto radial_rule = [&](std::size_t j, int panels) {
    std::vector<double> pts{0.0};
    if (chi.is_tensor())
      for (double b : chi.axes()[j].breaks()) pts.push_back(b);
    else
      pts.push_back(chi.t1()[j]);
    pts.push_back(chi.t2()[j]);
    GaussRule rule;
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      if (!(pts[k] < pts[k + 1])) continue;
      auto r = composite_gauss_legendre(pts[k], pts[k + 1], panels, kNodes);
      rule.nodes.insert(rule.nodes.end(), r.nodes.begin(), r.nodes.end());
      rule.weights.insert(rule.weights.end(), r.weights.begin(), r.weights.end());
    }
    return rule;
  };

  auto run = [&](int panels) {
    const auto indices = indices_up_to(d, N);
    std::vector<std::complex<double>> acc(indices.size());
    std::vector<GaussRule> rules;
    for (std::size_t j = 0; j < d; ++j) rules.push_back(radial_rule(j, panels));
    const double dtheta = 2.0 * std::numbers::pi / M;
    if (d == 1) {
      std::vector<std::complex<double>> samples(M);
      for (std::size_t i = 0; i < rules[0].nodes.size(); ++i) {
        const double rho = rules[0].nodes[i];
        const double w = rules[0].weights[i] * rho * std::exp(-rho * rho) * chi.radial_value(std::span<const double>(&rho, 1));
        if (w == 0.0) continue;
        for (int m = 0; m < M; ++m) {
          const std::complex<double> z = std::polar(rho, m * dtheta);
          samples[m] = F0(std::span<const std::complex<double>>(&z, 1));
        }
        for (std::size_t k = 0; k < indices.size(); ++k) {
          const int a = indices[k][0];
          std::complex<double> s{};
          for (int m = 0; m < M; ++m) s += samples[m] * std::polar(1.0, -a * m * dtheta);
          acc[k] += w * std::pow(rho, a) * s * dtheta;
        }
      }
    } else {
      // separable angular transform: rows first, then columns
      const int Md = 2 * N + 2;
      const double dth = 2.0 * std::numbers::pi / Md;
      std::vector<std::complex<double>> tw(static_cast<std::size_t>(Md) * (N + 1));
      for (int a = 0; a <= N; ++a)
        for (int m = 0; m < Md; ++m) tw[static_cast<std::size_t>(a) * Md + m] = std::polar(1.0, -a * m * dth);
      std::vector<std::complex<double>> samples(static_cast<std::size_t>(Md) * Md);
      std::vector<std::complex<double>> rows(static_cast<std::size_t>(Md) * (N + 1));
      for (std::size_t i1 = 0; i1 < rules[0].nodes.size(); ++i1) {
        for (std::size_t i2 = 0; i2 < rules[1].nodes.size(); ++i2) {
          const double r1 = rules[0].nodes[i1], r2 = rules[1].nodes[i2];
          const double rr[2] = {r1, r2};
          const double w = rules[0].weights[i1] * rules[1].weights[i2] * r1 * r2 * std::exp(-r1 * r1 - r2 * r2) *
                           chi.radial_value(rr);
          if (w == 0.0) continue;
          for (int m1 = 0; m1 < Md; ++m1)
            for (int m2 = 0; m2 < Md; ++m2) {
              const std::complex<double> z[2] = {std::polar(r1, m1 * dth), std::polar(r2, m2 * dth)};
              samples[static_cast<std::size_t>(m1) * Md + m2] = F0(z);
            }
          for (int m1 = 0; m1 < Md; ++m1)
            for (int a2 = 0; a2 <= N; ++a2) {
              std::complex<double> s{};
              for (int m2 = 0; m2 < Md; ++m2)
                s += samples[static_cast<std::size_t>(m1) * Md + m2] * tw[static_cast<std::size_t>(a2) * Md + m2];
              rows[static_cast<std::size_t>(a2) * Md + m1] = s;
            }
          for (std::size_t k = 0; k < indices.size(); ++k) {
            const int a1 = indices[k][0], a2 = indices[k][1];
            std::complex<double> s{};
            for (int m1 = 0; m1 < Md; ++m1)
              s += rows[static_cast<std::size_t>(a2) * Md + m1] * tw[static_cast<std::size_t>(a1) * Md + m1];
            acc[k] += w * std::pow(r1, a1) * std::pow(r2, a2) * s * dth * dth;
          }
        }
      }
    }
    const double norm = std::pow(std::numbers::pi, -static_cast<double>(d));
    for (std::size_t k = 0; k < indices.size(); ++k) acc[k] *= norm * std::exp(-0.5 * log_factorial(indices[k]));
    return std::make_pair(indices, acc);
  };

  auto prev = run(2);
  for (int panels = 4; panels <= 64; panels *= 2) {
    auto cur = run(panels);
    double diff = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < cur.second.size(); ++k) {
      diff = std::max(diff, std::abs(cur.second[k] - prev.second[k]));
      scale = std::max(scale, std::abs(cur.second[k]));
    }
    if (diff <= std::max(spec.abs_tol, spec.rel_tol * scale) * 100.0 || diff <= 1e-15 * scale) {
      CoefficientSeries out(d, N);
      for (std::size_t k = 0; k < cur.first.size(); ++k) {
        // angular sums leave roundoff where the exact coefficient is zero
        if (std::abs(cur.second[k]) <= 1e-14 * scale) continue;
        out.set(cur.first[k], LogComplex::from_complex(cur.second[k]));
      }
      return out;
    }
    prev = std::move(cur);
  }
  throw NonConvergence("project_quadrature: radial rule did not settle");
}

GrowthCheck growth_bound_check(const CoefficientSeries& F, const Majorant& M, const GridSpec& grid, Exec exec) {
  const auto pts = polar_grid(grid, F.dim());
  const auto la = grid_log_abs(F, pts, exec);
  const auto best = weighted_sup(la, pts, M, exec);
  return {best.log_sup, pts[best.index]};
}

GrowthCheck growth_bound_check(const CoefficientSeries& F, const RadiusVector& r, const GridSpec& grid, Exec exec) {
  if (r.dim() != F.dim()) throw DimensionMismatch("growth check: dimension mismatch");
  Majorant M = [r](std::span<const std::complex<double>> z) {
    double s = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) s += r[j] * std::abs(z[j]);
    return s;
  };
  return growth_bound_check(F, M, grid, exec);
}

}  // namespace fockpw
