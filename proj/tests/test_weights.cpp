#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fockpw/errors.hpp"
#include "fockpw/special.hpp"
#include "fockpw/weights.hpp"

using namespace fockpw;

TEST_SUITE("weights") {
  TEST_CASE("vartheta examples") {
    CHECK(vartheta(OrderParam::flat(1.0), RadiusVector{1.0}, MultiIndex{0}).magnitude() == doctest::Approx(1.0));
    CHECK(vartheta(OrderParam::flat(1.0), RadiusVector{2.0}, MultiIndex{3}).magnitude() ==
          doctest::Approx(8.0 / std::sqrt(6.0)).epsilon(1e-14));
    CHECK(vartheta(OrderParam::real(0.25), RadiusVector{1.0}, MultiIndex{4}).log_mag() ==
          doctest::Approx(-16.0).epsilon(1e-14));
  }

  TEST_CASE("vartheta_dual examples and product law") {
    CHECK(vartheta_dual(OrderParam::flat(1.0), RadiusVector{1.0}, MultiIndex{0}).magnitude() == doctest::Approx(1.0));
    CHECK(vartheta_dual(OrderParam::flat(1.0), RadiusVector{1.0}, MultiIndex{2}).magnitude() ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    for (double sigma : {0.3, 1.0, 2.5})
      for (const auto& a : indices_up_to(2, 8)) {
        const auto p = vartheta(OrderParam::flat(sigma), RadiusVector{2.0, 0.5}, a) *
                       vartheta_dual(OrderParam::flat(sigma), RadiusVector{3.0, 1.5}, a);
        CHECK(p.log_mag() == doctest::Approx(a[0] * std::log(6.0) + a[1] * std::log(0.75)).epsilon(1e-13));
      }
  }

  TEST_CASE("order comparison") {
    CHECK(OrderParam::real(0.3) < OrderParam::flat(2.0));
    CHECK(OrderParam::flat(2.0) < OrderParam::real(0.5));
    CHECK(OrderParam::flat(0.5) < OrderParam::flat(1.0));
  }

  TEST_CASE("growth_majorant examples") {
    const std::complex<double> z0[] = {0.0};
    CHECK(growth_majorant(1, false, OrderParam::flat(1.0), RadiusVector{1.0}, z0) == doctest::Approx(0.0));
    const std::complex<double> z2[] = {2.0};
    CHECK(growth_majorant(1, false, OrderParam::flat(1.0), RadiusVector{3.0}, z2) == doctest::Approx(6.0));
    const std::complex<double> ze[] = {std::sqrt(std::exp(2.0) - 1.0)};
    CHECK(japanese_bracket(ze[0]) == doctest::Approx(std::exp(1.0)));
    CHECK(growth_majorant(1, false, OrderParam::real(0.25), RadiusVector{1.0}, ze) == doctest::Approx(1.0));
  }

  TEST_CASE("weight_from_radial closed form at alpha = 0") {
    for (std::size_t d : {1u, 2u, 3u}) {
      const RadialProfile p = RadialProfile::tensor(std::vector<AxisProfile>(d, AxisProfile::exponential(1.0)));
      CHECK(weight_from_radial(p, MultiIndex(d)).magnitude() == doctest::Approx(std::pow(2.0, -0.5 * d)).epsilon(1e-12));
    }
  }

  TEST_CASE("tensor weight equals joint quadrature") {
    const RadialProfile tensor = RadialProfile::tensor({AxisProfile::exponential(1.0), AxisProfile::exponential(2.0)});
    const RadialProfile joint = RadialProfile::joint(
        2, [](std::span<const double> u) { return std::exp(-u[0] - 2.0 * u[1]); }, 40.0);
    for (const MultiIndex a : {MultiIndex{0, 0}, MultiIndex{2, 1}, MultiIndex{3, 4}}) {
      const double lt = weight_from_radial(tensor, a).log_mag();
      const double lj = weight_from_radial(joint, a).log_mag();
      CHECK(std::abs(std::expm1(lt - lj)) <= 1e-9);
    }
  }

  TEST_CASE("vartheta_flat_L2 examples") {
    CHECK(vartheta_flat_L2(0.5, RadiusVector{1.0}, MultiIndex{0}).magnitude() ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    for (double r : {0.25, 1.0, 3.0})
      CHECK(vartheta_flat_L2(0.5, RadiusVector{r}, MultiIndex{0}).magnitude() ==
            doctest::Approx(std::sqrt(2.0) / (2.0 * r)).epsilon(1e-14));
  }

  TEST_CASE("stretched profile reproduces vartheta_flat_L2") {
    for (double tau : {0.5, 1.0, 2.0})
      for (double r : {0.5, 1.0})
        for (int a : {0, 1, 5, 12}) {
          const RadialProfile p = RadialProfile::tensor({AxisProfile::stretched_exp(r, 1.0 / (2.0 * tau + 1.0))});
          const double q = weight_from_radial(p, MultiIndex{a}).log_mag();
          const double c = vartheta_flat_L2(tau, RadiusVector{r}, MultiIndex{a}).log_mag();
          CAPTURE(tau);
          CAPTURE(a);
          CHECK(std::abs(std::expm1(q - c)) <= 1e-10);
        }
  }

  TEST_CASE("vartheta_flat_L2 decreases in r") {
    for (int a : {0, 3, 10}) {
      double prev = INFINITY;
      for (double r = 0.2; r < 5.0; r += 0.3) {
        const double v = vartheta_flat_L2(1.0, RadiusVector{r}, MultiIndex{a}).log_mag();
        CHECK(v < prev);
        prev = v;
      }
    }
  }

  TEST_CASE("normalized monomials are dominated by vartheta_flat_L2") {
    // rho^a / sqrt(a!) <= K vartheta_flat_L2(tau, r, a) over a <= 200
    for (double rho : {0.5, 2.0, 5.0}) {
      double k = -INFINITY;
      for (int a = 0; a <= 200; ++a)
        k = std::max(k, a * std::log(rho) - 0.5 * log_factorial(a) -
                            vartheta_flat_L2(1.0, RadiusVector{1.0}, MultiIndex{a}).log_mag());
      CHECK(std::isfinite(k));
      CHECK(k < 200.0);
    }
  }

  TEST_CASE("invalid orders") {
    CHECK_THROWS_AS(OrderParam::flat(0.0), DomainError);
    CHECK_THROWS_AS(OrderParam::real(-1.0), DomainError);
    CHECK_THROWS_AS(vartheta(OrderParam::flat(1.0), RadiusVector{1.0, 1.0}, MultiIndex{1}), DimensionMismatch);
  }
}
