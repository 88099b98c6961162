#pragma once

#include <complex>
#include <limits>
#include <span>

namespace fockpw {

/// A complex number stored as (log|z|, arg z).
///
/// Magnitudes such as alpha!^{1/2}, e^{|t|^2} or Gamma((2tau+1)(alpha+1)) leave the
/// double range long before the indices of interest do; every such quantity is
/// carried in this form.  Zero is log_mag == -inf with phase 0.
class LogComplex {
 public:
  constexpr LogComplex() = default;

  static LogComplex from_log(double log_mag, double phase = 0.0);
  static LogComplex from_complex(std::complex<double> z);
  static LogComplex from_real(double x);
  static constexpr LogComplex zero() { return LogComplex{}; }
  static constexpr LogComplex one() { return LogComplex(0.0, 0.0); }

  double log_mag() const { return log_mag_; }
  double phase() const { return phase_; }
  bool is_zero() const { return log_mag_ == -std::numeric_limits<double>::infinity(); }

  /// Plain value; overflows to inf / underflows to 0 outside double range.
  std::complex<double> value() const;
  double magnitude() const;

  LogComplex conj() const;
  /// Real power of the magnitude, phase scaled accordingly.
  LogComplex pow(double p) const;

  LogComplex& operator*=(const LogComplex& o);
  LogComplex& operator/=(const LogComplex& o);
  LogComplex& operator+=(const LogComplex& o);
  LogComplex& operator-=(const LogComplex& o);

  friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }
  friend LogComplex operator/(LogComplex a, const LogComplex& b) { return a /= b; }
  friend LogComplex operator+(LogComplex a, const LogComplex& b) { return a += b; }
  friend LogComplex operator-(LogComplex a, const LogComplex& b) { return a -= b; }
  LogComplex operator-() const;

  friend bool operator==(const LogComplex&, const LogComplex&) = default;

 private:
  constexpr LogComplex(double lm, double ph) : log_mag_(lm), phase_(ph) {}

  double log_mag_ = -std::numeric_limits<double>::infinity();
  double phase_ = 0.0;
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

/// Numerically stable sum of many terms (log-sum-exp with phases).
LogComplex log_sum(std::span<const LogComplex> terms);

/// log(e^a + e^b) for extended reals.
double log_add(double a, double b);

}  // namespace fockpw
