#pragma once

#include <stdexcept>
#include <string>

namespace fockpw {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (x <= 0 for log_gamma, a >= b, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

// The (j, order) pair of a growth majorant has no defining branch.
class UnsupportedBranch : public Error {
 public:
  using Error::Error;
};

// The Gaussian moment of a cutoff underflowed, so varsigma would be infinite.
class DegenerateCutoff : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

class NoStabilization : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace fockpw
