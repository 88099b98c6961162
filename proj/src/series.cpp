#include "fockpw/series.hpp"

#include <cmath>

#include "fockpw/errors.hpp"
#include "fockpw/special.hpp"

namespace fockpw {

LogComplex normalized_monomial(const MultiIndex& alpha, std::span<const std::complex<double>> z) {
  if (z.size() != alpha.dim()) throw DimensionMismatch("e_alpha: dimension mismatch");
  double lm = -0.5 * log_factorial(alpha);
  double ph = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    const int a = alpha[j];
    if (a == 0) continue;
    if (z[j] == std::complex<double>{}) return LogComplex::zero();
    lm += a * std::log(std::abs(z[j]));
    ph += a * std::arg(z[j]);
  }
  return LogComplex::from_log(lm, ph);
}

CoefficientSeries::CoefficientSeries(std::size_t d, int truncation) : d_(d), truncation_(truncation) {
  if (d == 0) throw DomainError("series dimension must be >= 1");
  if (truncation < 0) throw DomainError("truncation must be >= 0");
}

void CoefficientSeries::set(const MultiIndex& alpha, LogComplex c) {
  if (alpha.dim() != d_) throw DimensionMismatch("series index has wrong dimension");
  if (alpha.order() > truncation_) throw DomainError("index " + alpha.to_string() + " exceeds truncation");
  if (c.is_zero())
    coeffs_.erase(alpha);
  else
    coeffs_[alpha] = c;
}

LogComplex CoefficientSeries::get(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? LogComplex::zero() : it->second;
}

LogComplex CoefficientSeries::evaluate(std::span<const std::complex<double>> z) const {
  if (z.size() != d_) throw DimensionMismatch("evaluation point has wrong dimension");
  std::vector<LogComplex> terms;
  terms.reserve(coeffs_.size());
  for (const auto& [alpha, c] : coeffs_) terms.push_back(c * normalized_monomial(alpha, z));
  return log_sum(terms);
}

}  // namespace fockpw
