#include <doctest.h>

#include <cmath>
#include <random>

#include "fockpw/errors.hpp"
#include "fockpw/paleywiener.hpp"
#include "fockpw/projection.hpp"
#include "fockpw/special.hpp"
#include "fockpw/theorems.hpp"

using namespace fockpw;

namespace {
CoefficientSeries flat_template(double tau, double r, int N) {
  return series_from(1, N, [&](const MultiIndex& a) { return coeff_bound_flat(tau, RadiusVector{r}, a); });
}
}  // namespace

TEST_SUITE("paleywiener") {
  TEST_CASE("coefficient templates") {
    CHECK(coeff_bound_flat(1.0, RadiusVector{1.5}, MultiIndex{0}).magnitude() == doctest::Approx(1.0));
    CHECK(coeff_bound_flat(1.0, RadiusVector{1.5}, MultiIndex{2}).magnitude() == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(coeff_bound_flat(0.5, RadiusVector{1.0}, MultiIndex{1}).magnitude() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(coeff_bound_log(0.25, RadiusVector{1.0}, MultiIndex{0}).magnitude() == doctest::Approx(1.0));
    CHECK(coeff_bound_log(0.25, RadiusVector{1.0}, MultiIndex{2}).log_mag() == doctest::Approx(-0.5).epsilon(1e-14));
  }

  TEST_CASE("log-class constants") {
    CHECK(log_class_R(0.25, 1.0) == 0.125);
    CHECK(log_class_R(0.25, 2.0) == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    for (double s : {0.1, 0.25, 0.4})
      for (double r : {0.5, 1.0, 3.0}) CHECK(log_class_r(s, log_class_R(s, r)) == doctest::Approx(r).epsilon(1e-12));
  }

  TEST_CASE("radius map") {
    CHECK(radius_map_flat(1.0, RadiusVector{1.5}, RadiusVector{1.0})[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(radius_map_flat(1.5, RadiusVector{2.0}, RadiusVector{1.0})[0] == doctest::Approx(1.0).epsilon(1e-14));
    for (double tau : {0.75, 1.0, 2.0})
      for (double lambda : {0.5, 2.0, 3.0}) {
        const double base = radius_map_flat(tau, RadiusVector{1.2}, RadiusVector{1.0})[0];
        const double scaled = radius_map_flat(tau, RadiusVector{1.2}, RadiusVector{lambda})[0];
        CHECK(scaled == doctest::Approx(base * std::pow(lambda, -4.0 / (2.0 * tau - 1.0))).epsilon(1e-13));
        const RadiusVector R = radius_map_flat(tau, RadiusVector{1.2}, RadiusVector{lambda});
        CHECK(radius_map_flat_inverse(tau, R, RadiusVector{lambda})[0] == doctest::Approx(1.2).epsilon(1e-13));
      }
    CHECK_THROWS_AS(radius_map_flat(0.5, RadiusVector{1.0}, RadiusVector{1.0}), DomainError);
  }

  TEST_CASE("sigma_dual") {
    CHECK(sigma_dual(0.75) == doctest::Approx(1.5).epsilon(1e-15));
    CHECK(sigma_dual(0.25) == doctest::Approx(0.5).epsilon(1e-15));
    // 2 sigma / (sigma + 1) at 3/4 equals 2 / (2 tau + 1) at tau = 2/3
    CHECK(2.0 * 0.75 / 1.75 == doctest::Approx(2.0 / (2.0 * (2.0 / 3.0) + 1.0)));
    CHECK(2.0 * 0.75 / 1.75 == doctest::Approx(6.0 / 7.0));
    CHECK_THROWS_AS(sigma_dual(0.5), DomainError);
    CHECK_THROWS_AS(sigma_dual(1.2), DomainError);
  }

  TEST_CASE("log weight maximizer") {
    CHECK(log_weight_maximizer(1.0, 0.25, 2) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
    for (int a = 1; a <= 10; ++a)
      CHECK(log_weight_maximizer(1.0, 0.25, 2 * a) ==
            doctest::Approx(std::pow(log_weight_maximizer(1.0, 0.25, a), 2.0)).epsilon(1e-12));
  }

  TEST_CASE("classify examples") {
    CoefficientSeries one(1, 60);
    one.set(MultiIndex{7}, LogComplex::one());
    const GrowthSpec p = classify(one);
    CHECK(p.cls == GrowthClass::Polynomial);
    CHECK(p.degree == 7);

    const GrowthSpec f = classify(flat_template(1.0, 1.5, 60));
    CHECK(f.cls == GrowthClass::Flat);
    CHECK(f.sigma == doctest::Approx(0.5).epsilon(0.02));
    CHECK(std::abs(f.radius[0] / 1.5 - 1.0) <= 0.1);
    CHECK(f.side == Side::Roumieu);

    const GrowthSpec l = classify(series_from(1, 60, [](const MultiIndex& a) { return LogComplex::from_log(-a[0] * a[0] / 8.0); }));
    CHECK(l.cls == GrowthClass::LogPower);
    CHECK(l.s == doctest::Approx(0.25).epsilon(0.02));
    CHECK(std::abs(l.radius[0] - 1.0) <= 0.1);

    const GrowthSpec g = classify(series_from(1, 60, [](const MultiIndex& a) { return LogComplex::from_log(a[0] * std::log(0.4)); }));
    CHECK(g.cls == GrowthClass::Geometric);
    CHECK(g.radius[0] == doctest::Approx(0.4).epsilon(0.05));
  }

  TEST_CASE("classify reads reciprocal templates as dual") {
    // |c| = alpha!^{+1/3}: flat of dual order 3/2
    const GrowthSpec g = classify(series_from(1, 60, [](const MultiIndex& a) { return LogComplex::from_log(log_factorial(a) / 3.0); }));
    CHECK(g.cls == GrowthClass::Flat);
    CHECK(g.dual);
    CHECK(g.sigma == doctest::Approx(1.5).epsilon(0.05));
  }

  TEST_CASE("classify in two variables") {
    const CoefficientSeries F = series_from(2, 40, [](const MultiIndex& a) {
      return coeff_bound_flat(1.0, RadiusVector{1.0, 2.0}, a);
    });
    const GrowthSpec g = classify(F);
    CHECK(g.cls == GrowthClass::Flat);
    CHECK(g.sigma == doctest::Approx(0.5).epsilon(0.05));
    CHECK(std::abs(g.radius[0] - 1.0) <= 0.1);
    CHECK(std::abs(g.radius[1] / 2.0 - 1.0) <= 0.1);
  }

  TEST_CASE("short series are polynomials") {
    CoefficientSeries F(1, 60);
    for (int a = 0; a < 5; ++a) F.set(MultiIndex{a}, LogComplex::one());
    CHECK(classify(F).cls == GrowthClass::Polynomial);
    CHECK(classify(F).degree == 4);
    CHECK(classify(CoefficientSeries(1, 60)).cls == GrowthClass::Polynomial);
  }

  TEST_CASE("growth stability for a flat template") {
    const CoefficientSeries F = flat_template(1.0, 1.0, 60);
    const GrowthSampler s(F);
    CHECK(s.check(majorant_for(OrderParam::flat(0.5), 1.25, 1)).stable);
    CHECK(s.check(majorant_for(OrderParam::flat(0.5), 1.5, 1)).stable);
    CHECK_FALSE(s.check(majorant_for(OrderParam::flat(0.5), 0.8, 1)).stable);
    const double r = growth_to_coeff(F, OrderParam::flat(0.5))[0];
    CHECK(r > 0.8);
    CHECK(r < 1.25);
  }

  TEST_CASE("growth_to_coeff examples") {
    CoefficientSeries e0(1, 0);
    e0.set(MultiIndex{0}, LogComplex::one());
    CHECK(growth_to_coeff(e0, OrderParam::flat(1.0))[0] == doctest::Approx(0.02));
    CoefficientSeries poly(1, 5);
    for (int a = 0; a <= 5; ++a) poly.set(MultiIndex{a}, LogComplex::one());
    // 5 log|z| - r (log|z|)^2 peaks at |z| = e^{5/(2r)}, inside the caps for these r
    StabilityProbe probe;
    probe.caps = {20.0, 40.0, 80.0};
    const GrowthSampler s(poly, probe);
    for (double r : {1.0, 2.0, 4.0}) CHECK(s.check(majorant_for(OrderParam::real(0.25), r, 1)).stable);
    // e^{z}: coefficients alpha!^{-1/2}, growth e^{|z|}
    const CoefficientSeries g = series_from(1, 120, [](const MultiIndex& a) { return LogComplex::from_log(-0.5 * log_factorial(a)); });
    const double fitted = fit_flat_radius(g, 0.5, 30, 120)[0];
    const double r = growth_to_coeff(g, OrderParam::flat(1.0))[0];
    CHECK(std::abs(r / fitted - 1.0) <= 0.15);
    CHECK(fitted == doctest::Approx(1.0).epsilon(0.05));
  }

  TEST_CASE("reconstruct examples") {
    const RadialCutoff chi = RadialCutoff::indicator(RadiusVector{1.0});
    CHECK(reconstruct(CoefficientSeries(1, 4), chi).empty());
    for (int a : {0, 3, 9}) {
      CoefficientSeries e(1, 10);
      e.set(MultiIndex{a}, LogComplex::one());
      const auto F0 = reconstruct(e, chi);
      CHECK(F0.size() == 1);
      CHECK(F0.get(MultiIndex{a}).log_mag() ==
            doctest::Approx(varsigma(MultiIndex{a}, chi).log_mag() + 0.5 * log_factorial(a)).epsilon(1e-13));
    }
  }

  TEST_CASE("round trips") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> n;
    const RadialCutoff chi = RadialCutoff::indicator(RadiusVector{1.0});
    CoefficientSeries F(1, 10);
    for (int a = 0; a <= 10; a += (a % 3 ? 1 : 2)) F.set(MultiIndex{a}, LogComplex::from_complex({n(rng), n(rng)}));
    const auto back = project(reconstruct(F, chi), chi);
    CHECK(back.size() == F.size());
    for (const auto& [a, c] : F.entries()) CHECK(std::abs(back.get(a).value() / c.value() - 1.0) < 1e-10);
  }

  TEST_CASE("serial and parallel growth sampling agree") {
    const CoefficientSeries F = flat_template(1.0, 1.0, 40);
    const auto M = majorant_for(OrderParam::flat(0.5), 1.25, 1);
    const auto a = GrowthSampler(F, {}, Exec::serial).check(M);
    const auto b = GrowthSampler(F, {}, Exec::parallel).check(M);
    CHECK(a.stable == b.stable);
    for (std::size_t i = 0; i < a.log_sups.size(); ++i) CHECK(a.log_sups[i] == b.log_sups[i]);
  }

  TEST_CASE("theorem verifiers pass at the default truncation") {
    const RadialCutoff chi = RadialCutoff::indicator(RadiusVector{1.0});
    const std::pair<TheoremId, TheoremParams> runs[] = {
        {TheoremId::T1, {1.0, {}, {}}},   {TheoremId::T2, {}},           {TheoremId::T3, {0.75, {}, {}}},
        {TheoremId::T4, {0.5, {}, {}}},   {TheoremId::T5, {0.25, {}, {}}}, {TheoremId::T6, {{}, 0.25, {}}},
        {TheoremId::P1, {}},              {TheoremId::P345, {0.75, {}, {}}}, {TheoremId::P6, {{}, 0.25, {}}},
        {TheoremId::P6b, {}}};
    for (const auto& [id, params] : runs) {
      const TheoremReport r = verify_theorem(id, params, chi, 40);
      CAPTURE(to_string(id));
      for (const auto& imp : r.implications) {
        CAPTURE(imp.name);
        CAPTURE(imp.note);
        CHECK(imp.pass);
      }
    }
    const TheoremReport t3 = verify_theorem(TheoremId::T3, {0.75, {}, {}}, chi, 40);
    CHECK(t3.params.at("sigma_dual") == doctest::Approx(1.5));
  }

  TEST_CASE("theorem parameters are validated") {
    CHECK_THROWS_AS(validate_params(TheoremId::T3, {1.5, {}, {}}, 40), DomainError);
    CHECK_THROWS_AS(validate_params(TheoremId::T3, {}, 40), DomainError);
    CHECK_THROWS_AS(validate_params(TheoremId::T5, {0.75, {}, {}}, 40), DomainError);
    CHECK_THROWS_AS(validate_params(TheoremId::T6, {{}, 0.5, {}}, 40), DomainError);
    CHECK_THROWS_AS(validate_params(TheoremId::T1, {1.0, {}, {}}, 4), DomainError);
    CHECK_NOTHROW(validate_params(TheoremId::T4, {0.5, {}, {}}, 40));
    CHECK(parse_theorem("p6B") == TheoremId::P6b);
    CHECK_THROWS_AS(parse_theorem("T7"), ParseError);
  }
}
