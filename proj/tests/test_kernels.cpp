#include <doctest.h>

#include <cmath>
#include <random>

#include "fockpw/cutoff.hpp"
#include "fockpw/errors.hpp"
#include "fockpw/kernels.hpp"
#include "fockpw/paleywiener.hpp"

using namespace fockpw;

namespace {
CoefficientSeries random_series(std::size_t d, int N, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  CoefficientSeries F(d, N);
  for (const auto& a : indices_up_to(d, N)) F.set(a, LogComplex::from_complex({n(rng), n(rng)}));
  return F;
}
}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("polar grid size") {
    CHECK(polar_grid(GridSpec{2.0, 5, 4}, 1).size() == 17);
    CHECK(polar_grid(GridSpec{2.0, 5, 4}, 2).size() == 17 * 17);
    CHECK_THROWS_AS(polar_grid(GridSpec{2.0, 1, 4}, 1), DomainError);
  }

  TEST_CASE("grid_log_abs serial equals parallel") {
    for (std::size_t d : {1u, 2u}) {
      const auto F = random_series(d, 12, 3 + d);
      const auto pts = polar_grid(GridSpec{4.0, 21, 8}, d);
      const auto a = grid_log_abs(F, pts, Exec::serial);
      const auto b = grid_log_abs(F, pts, Exec::parallel);
      REQUIRE(a.size() == b.size());
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
      const std::size_t k = pts.size() / 3;
      CHECK(a[k] == doctest::Approx(F.evaluate(pts[k]).log_mag()).epsilon(1e-12));
    }
  }

  TEST_CASE("weighted_sup serial equals parallel") {
    const auto F = random_series(1, 20, 9);
    const auto pts = polar_grid(GridSpec{8.0, 81, 16}, 1);
    const auto v = grid_log_abs(F, pts, Exec::serial);
    const auto M = majorant_for(OrderParam::flat(1.0), 1.0, 1);
    const auto a = weighted_sup(v, pts, M, Exec::serial);
    const auto b = weighted_sup(v, pts, M, Exec::parallel);
    CHECK(a.log_sup == b.log_sup);
    CHECK(a.index == b.index);
    double best = -INFINITY;
    for (std::size_t i = 0; i < pts.size(); ++i) best = std::max(best, v[i] - M(pts[i]));
    CHECK(a.log_sup == best);
  }

  TEST_CASE("axis moments serial equals parallel") {
    for (const auto& ax : {CutoffAxis::indicator(1.0), CutoffAxis::trapezoid(0.5, 2.0)}) {
      const auto a = axis_moment_logs(ax, 40, {}, Exec::serial);
      const auto b = axis_moment_logs(ax, 40, {}, Exec::parallel);
      for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
  }
}
