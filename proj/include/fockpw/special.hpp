#pragma once

#include "fockpw/multi_index.hpp"

namespace fockpw {

/// ln Gamma(x) for x > 0.  Lanczos (g = 7, n = 9) away from the zeros at 1 and 2,
/// Taylor series in zeta values near them; exact factorial logs at small integers.
/// Throws DomainError for x <= 0 or NaN.
double log_gamma(double x);

/// ln alpha! = sum_j ln Gamma(alpha_j + 1).
double log_factorial(const MultiIndex& alpha);
double log_factorial(int n);

/// [Gamma((2tau+1)(n+1)) / n!] / [(2tau+1)^{(2tau+1) n} (n+1)^tau n!^{2tau}], evaluated
/// in log domain and exponentiated.  Requires tau > -1/2.
double stirling_ratio(double tau, int n);

/// ln of stirling_ratio; finite even where the ratio itself would overflow.
double log_stirling_ratio(double tau, int n);

}  // namespace fockpw
