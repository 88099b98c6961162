#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "fockpw/errors.hpp"

namespace fockpw {

struct QuadratureSpec {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  int max_subdivisions = 2000;
};

template <class T>
struct QuadResult {
  T value{};
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

// 21-point Kronrod extension of 10-point Gauss, positive half (index 0 is the centre).
inline constexpr std::array<double, 11> kGkNodes = {
    0.0,
    0.14887433898163121088,
    0.29439286270146019813,
    0.4333953941292471908,
    0.56275713466860468334,
    0.67940956829902440623,
    0.78081772658641689706,
    0.86506336668898451073,
    0.930157491355708226,
    0.97390652851717172008,
    0.99565716302580808074};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.14944555400291690566,  0.14773910490133849137, 0.1427759385770600808,
    0.13470921731147332593,  0.12349197626206585108, 0.1093871588022976419,
    0.093125454583697605535, 0.075039674810919952767, 0.054755896574351996031,
    0.032558162307964727479, 0.011694638867371874278};
// Gauss weights at kGkNodes[1], [3], [5], [7], [9].
inline constexpr std::array<double, 5> kGaussWeights = {
    0.29552422471475287017, 0.26926671930999635509, 0.219086362515982044,
    0.14945134915058059315, 0.066671344308688137594};

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  double roundoff;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gk21(F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const T fc = f(c);
  T kron = fc * kKronrodWeights[0];
  T gauss{};
  double resabs = std::abs(fc) * kKronrodWeights[0];
  std::array<T, 21> fv{};
  fv[0] = fc;
  for (int i = 1; i <= 10; ++i) {
    const double dx = h * kGkNodes[i];
    const T f1 = f(c - dx);
    const T f2 = f(c + dx);
    fv[2 * i - 1] = f1;
    fv[2 * i] = f2;
    kron += (f1 + f2) * kKronrodWeights[i];
    resabs += (std::abs(f1) + std::abs(f2)) * kKronrodWeights[i];
    if (i % 2 == 1) gauss += (f1 + f2) * kGaussWeights[i / 2];
  }
  const T mean = kron * 0.5;
  double resasc = std::abs(fc - mean) * kKronrodWeights[0];
  for (int i = 1; i <= 10; ++i)
    resasc += (std::abs(fv[2 * i - 1] - mean) + std::abs(fv[2 * i] - mean)) * kKronrodWeights[i];
  const double ah = std::abs(h);
  resabs *= ah;
  resasc *= ah;
  double err = std::abs((kron - gauss) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double eps = std::numeric_limits<double>::epsilon();
  const double roundoff = 50.0 * eps * resabs;
  err = std::max(err, roundoff);
  return {a, b, kron * h, err, roundoff};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod (21 point) integration of f over [a, b].  T is double or
/// std::complex<double>.  Stops once the summed error estimate meets the spec or sits at
/// the floating-point roundoff floor; throws NonConvergence when subdivisions run out.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureSpec& spec = {})
    -> QuadResult<decltype(f(a))> {
  using T = decltype(f(a));
  if (!(a < b)) throw DomainError("integrate requires a < b");
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate requires a finite interval");
  std::priority_queue<detail::Panel<T>> heap;
  auto first = detail::gk21<T>(f, a, b);
  T total = first.value;
  double err = first.error;
  double roundoff = first.roundoff;
  heap.push(first);
  int intervals = 1;
  while (true) {
    const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total));
    if (err <= tol || err <= 2.0 * roundoff) break;
    if (!std::isfinite(err)) throw NonConvergence("integrand is not finite");
    if (intervals >= spec.max_subdivisions) throw NonConvergence("subdivision limit reached");
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;  // interval can no longer be split
    auto left = detail::gk21<T>(f, worst.a, mid);
    auto right = detail::gk21<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    roundoff += left.roundoff + right.roundoff - worst.roundoff;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // resum to shed the drift from incremental updates
  T sum{};
  double esum = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    esum += heap.top().error;
    heap.pop();
  }
  return {sum, esum, intervals};
}

/// Same as integrate, split at the given interior breakpoints.
template <class F>
auto integrate_pieces(F&& f, std::span<const double> points, const QuadratureSpec& spec = {})
    -> QuadResult<decltype(f(points[0]))> {
  QuadResult<decltype(f(points[0]))> out;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i] < points[i + 1])) continue;
    auto r = integrate(f, points[i], points[i + 1], spec);
    out.value += r.value;
    out.error += r.error;
    out.intervals += r.intervals;
  }
  return out;
}

QuadResult<double> integrate_1d(const std::function<double(double)>& f, double a, double b,
                                const QuadratureSpec& spec = {});

/// ln of the integral of exp(log_f(u)) over [a, b]; b may be +inf.  The integrand is
/// scaled by its sampled peak and truncated where it falls 45 nats below it, so the
/// result is finite far outside double range.  `breaks` are kinks of the integrand
/// (e.g. cutoff edges) that panels should not straddle.  Returns -inf if log_f is -inf
/// on every sample.
double log_integrate(const std::function<double(double)>& log_f, double a, double b,
                     const QuadratureSpec& spec = {}, std::span<const double> breaks = {});

/// Iterated integral over [ax, bx] x [ay, by].
QuadResult<double> integrate_2d(const std::function<double(double, double)>& f, double ax, double bx,
                                double ay, double by, const QuadratureSpec& spec = {});

/// n-point Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

/// Composite rule: `panels` equal panels of an n-point Gauss rule on [a, b].
GaussRule composite_gauss_legendre(double a, double b, int panels, int n);

}  // namespace fockpw
