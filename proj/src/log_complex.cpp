#include "fockpw/log_complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fockpw {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
}

double wrap_phase(double phase) {
  if (phase > -std::numbers::pi && phase <= std::numbers::pi) return phase;
  double w = std::remainder(phase, 2.0 * std::numbers::pi);
  if (w <= -std::numbers::pi) w += 2.0 * std::numbers::pi;
  return w;
}

double log_add(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

LogComplex LogComplex::from_log(double log_mag, double phase) {
  if (std::isnan(log_mag)) return LogComplex(log_mag, 0.0);
  if (log_mag == kNegInf) return LogComplex{};
  return LogComplex(log_mag, wrap_phase(phase));
}

LogComplex LogComplex::from_complex(std::complex<double> z) {
  if (z == std::complex<double>{}) return LogComplex{};
  return LogComplex(std::log(std::abs(z)), std::arg(z));
}

LogComplex LogComplex::from_real(double x) {
  if (x == 0.0) return LogComplex{};
  return LogComplex(std::log(std::abs(x)), x < 0 ? std::numbers::pi : 0.0);
}

std::complex<double> LogComplex::value() const {
  if (is_zero()) return {};
  return std::polar(std::exp(log_mag_), phase_);
}

double LogComplex::magnitude() const { return is_zero() ? 0.0 : std::exp(log_mag_); }

LogComplex LogComplex::conj() const {
  if (is_zero()) return *this;
  return from_log(log_mag_, -phase_);
}

LogComplex LogComplex::pow(double p) const {
  if (is_zero()) {
    return p == 0.0 ? one() : LogComplex{};
  }
  return from_log(p * log_mag_, p * phase_);
}

LogComplex& LogComplex::operator*=(const LogComplex& o) {
  if (is_zero() || o.is_zero()) {
    *this = LogComplex{};
    return *this;
  }
  *this = from_log(log_mag_ + o.log_mag_, phase_ + o.phase_);
  return *this;
}

LogComplex& LogComplex::operator/=(const LogComplex& o) {
  if (o.is_zero()) {
    *this = from_log(std::numeric_limits<double>::infinity(), phase_);
    return *this;
  }
  if (is_zero()) return *this;
  *this = from_log(log_mag_ - o.log_mag_, phase_ - o.phase_);
  return *this;
}

LogComplex& LogComplex::operator+=(const LogComplex& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  // Factor out the larger magnitude: a + b = A (e^{i pa} + e^{lb-la} e^{i pb}).
  const bool this_big = log_mag_ >= o.log_mag_;
  const LogComplex& big = this_big ? *this : o;
  const LogComplex& small = this_big ? o : *this;
  const std::complex<double> rel =
      std::polar(1.0, big.phase_) + std::polar(std::exp(small.log_mag_ - big.log_mag_), small.phase_);
  const double r = std::abs(rel);
  if (r == 0.0) {
    *this = LogComplex{};
    return *this;
  }
  *this = from_log(big.log_mag_ + std::log(r), std::arg(rel));
  return *this;
}

LogComplex LogComplex::operator-() const {
  if (is_zero()) return *this;
  return from_log(log_mag_, phase_ + std::numbers::pi);
}

LogComplex& LogComplex::operator-=(const LogComplex& o) { return *this += -o; }

LogComplex log_sum(std::span<const LogComplex> terms) {
  double top = kNegInf;
  for (const auto& t : terms) top = std::max(top, t.log_mag());
  if (top == kNegInf) return LogComplex::zero();
  std::complex<double> acc{};
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    acc += std::polar(std::exp(t.log_mag() - top), t.phase());
  }
  if (acc == std::complex<double>{}) return LogComplex::zero();
  return LogComplex::from_log(top + std::log(std::abs(acc)), std::arg(acc));
}

}  // namespace fockpw
