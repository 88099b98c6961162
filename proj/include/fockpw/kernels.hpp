#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "fockpw/cutoff.hpp"
#include "fockpw/exec.hpp"
#include "fockpw/quadrature.hpp"
#include "fockpw/series.hpp"

namespace fockpw {

/// Per-axis polar grid rho_i e^{i theta_k}, rho_i = radius * i / (n_radial - 1),
/// theta_k = 2 pi k / n_angle; the d-dimensional grid is the Cartesian product.
struct GridSpec {
  double radius = 10.0;
  int n_radial = 81;
  int n_angle = 32;
};

std::vector<CVec> polar_grid(const GridSpec& grid, std::size_t d);

using Majorant = std::function<double(std::span<const std::complex<double>>)>;

/// ln|F(z)| at every point.
std::vector<double> grid_log_abs(const CoefficientSeries& F, const std::vector<CVec>& points, Exec exec);

struct SupResult {
  double log_sup = -std::numeric_limits<double>::infinity();
  std::size_t index = 0;
};

/// max_i (log_abs[i] - M(points[i])); among equal values the lexicographically smallest
/// point (Re z_1, Im z_1, ...) wins, so serial and parallel runs agree exactly.
SupResult weighted_sup(std::span<const double> log_abs, const std::vector<CVec>& points, const Majorant& M, Exec exec);

/// ln int_0^{t2} chi_0(u) e^{-u^2} u^{2a+1} du for a = 0..N.
std::vector<double> axis_moment_logs(const CutoffAxis& axis, int N, const QuadratureSpec& spec, Exec exec);

/// Sets the worker count for Exec::parallel (<= 0 keeps the runtime default).
void set_worker_count(int n);

}  // namespace fockpw
