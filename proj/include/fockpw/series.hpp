#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "fockpw/log_complex.hpp"
#include "fockpw/multi_index.hpp"

namespace fockpw {

using CVec = std::vector<std::complex<double>>;

/// e_alpha(z) = z^alpha / sqrt(alpha!).
LogComplex normalized_monomial(const MultiIndex& alpha, std::span<const std::complex<double>> z);

/// Truncated power series in the normalized basis e_alpha.  Zero coefficients are not
/// stored, so `entries()` is exactly the support.
class CoefficientSeries {
 public:
  CoefficientSeries(std::size_t d, int truncation);

  std::size_t dim() const { return d_; }
  int truncation() const { return truncation_; }

  /// Stores c; a zero value erases the entry.  Throws DimensionMismatch or DomainError
  /// (|alpha| above the truncation).
  void set(const MultiIndex& alpha, LogComplex c);
  LogComplex get(const MultiIndex& alpha) const;
  bool contains(const MultiIndex& alpha) const { return coeffs_.count(alpha) != 0; }

  const std::map<MultiIndex, LogComplex>& entries() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  /// F(z) = sum_alpha c(F, alpha) e_alpha(z).
  LogComplex evaluate(std::span<const std::complex<double>> z) const;

 private:
  std::size_t d_;
  int truncation_;
  std::map<MultiIndex, LogComplex> coeffs_;
};

}  // namespace fockpw
