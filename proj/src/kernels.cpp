#include "fockpw/kernels.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <omp.h>

#include "fockpw/errors.hpp"

namespace fockpw {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool lex_less(const CVec& a, const CVec& b) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].real() != b[j].real()) return a[j].real() < b[j].real();
    if (a[j].imag() != b[j].imag()) return a[j].imag() < b[j].imag();
  }
  return false;
}

// true if candidate (v, i) beats the current best (bv, bi)
bool better(double v, std::size_t i, double bv, std::size_t bi, const std::vector<CVec>& pts, bool have) {
  if (!have) return true;
  if (v != bv) return v > bv;
  return lex_less(pts[i], pts[bi]);
}

double moment_log(const CutoffAxis& axis, int a, const QuadratureSpec& spec) {
  auto g = [&](double u) {
    const double c = axis.value(u);
    if (c <= 0.0 || u <= 0.0) return kNegInf;
    return std::log(c) - u * u + (2.0 * a + 1.0) * std::log(u);
  };
  const auto br = axis.breaks();
  return log_integrate(g, 0.0, axis.t2(), spec, br);
}

}  // namespace

std::vector<CVec> polar_grid(const GridSpec& grid, std::size_t d) {
  if (d == 0 || grid.n_radial < 2 || grid.n_angle < 1 || !(grid.radius > 0.0))
    throw DomainError("grid needs d >= 1, n_radial >= 2, n_angle >= 1, radius > 0");
  std::vector<std::complex<double>> axis;
  axis.emplace_back(0.0, 0.0);
  for (int i = 1; i < grid.n_radial; ++i) {
    const double rho = grid.radius * i / (grid.n_radial - 1);
    for (int k = 0; k < grid.n_angle; ++k) axis.push_back(std::polar(rho, 2.0 * std::numbers::pi * k / grid.n_angle));
  }
  std::vector<CVec> pts{CVec{}};
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<CVec> next;
    next.reserve(pts.size() * axis.size());
    for (const auto& p : pts)
      for (const auto& a : axis) {
        CVec q = p;
        q.push_back(a);
        next.push_back(std::move(q));
      }
    pts = std::move(next);
  }
  return pts;
}

std::vector<double> grid_log_abs(const CoefficientSeries& F, const std::vector<CVec>& points, Exec exec) {
  std::vector<double> out(points.size());
  const long n = static_cast<long>(points.size());
  if (exec == Exec::serial) {
    for (long i = 0; i < n; ++i) out[i] = F.evaluate(points[i]).log_mag();
  } else {
#pragma omp parallel for schedule(dynamic, 64)
    for (long i = 0; i < n; ++i) out[i] = F.evaluate(points[i]).log_mag();
  }
  return out;
}

SupResult weighted_sup(std::span<const double> log_abs, const std::vector<CVec>& points, const Majorant& M, Exec exec) {
  if (log_abs.size() != points.size()) throw DimensionMismatch("grid values and points differ in size");
  const long n = static_cast<long>(points.size());
  if (exec == Exec::serial) {
    SupResult best;
    bool have = false;
    for (long i = 0; i < n; ++i) {
      const double v = log_abs[i] - M(points[i]);
      if (better(v, i, best.log_sup, best.index, points, have)) {
        best = {v, static_cast<std::size_t>(i)};
        have = true;
      }
    }
    return best;
  }
  SupResult best;
  bool have = false;
#pragma omp parallel
  {
    SupResult local;
    bool lhave = false;
#pragma omp for schedule(static) nowait
    for (long i = 0; i < n; ++i) {
      const double v = log_abs[i] - M(points[i]);
      if (better(v, i, local.log_sup, local.index, points, lhave)) {
        local = {v, static_cast<std::size_t>(i)};
        lhave = true;
      }
    }
#pragma omp critical
    if (lhave && better(local.log_sup, local.index, best.log_sup, best.index, points, have)) {
      best = local;
      have = true;
    }
  }
  return best;
}

std::vector<double> axis_moment_logs(const CutoffAxis& axis, int N, const QuadratureSpec& spec, Exec exec) {
  if (N < 0) throw DomainError("moment table needs N >= 0");
  std::vector<double> out(N + 1);
  if (exec == Exec::serial) {
    for (int a = 0; a <= N; ++a) out[a] = moment_log(axis, a, spec);
    return out;
  }
  // exceptions must not cross the parallel region
  std::vector<std::string> errors(N + 1);
#pragma omp parallel for schedule(dynamic)
  for (int a = 0; a <= N; ++a) {
    try {
      out[a] = moment_log(axis, a, spec);
    } catch (const std::exception& e) {
      errors[a] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw NonConvergence(e);
  return out;
}

void set_worker_count(int n) {
  if (n > 0) omp_set_num_threads(n);
}

}  // namespace fockpw
