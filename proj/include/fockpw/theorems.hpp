#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fockpw/cutoff.hpp"
#include "fockpw/exec.hpp"
#include "fockpw/quadrature.hpp"

namespace fockpw {

enum class TheoremId { T1, T2, T3, T4, T5, T6, P1, P345, P6, P6b };

std::string to_string(TheoremId id);
/// Accepts "T1".."T6", "P1", "P345", "P6", "P6b" (case-insensitive).  Throws ParseError.
TheoremId parse_theorem(const std::string& text);

struct TheoremParams {
  std::optional<double> sigma;
  std::optional<double> s;
  std::optional<double> r0;  // witness radius; defaults depend on the theorem
};

struct Implication {
  std::string name;
  bool pass = false;
  double witnessed_constant = 0.0;
  double residual = 0.0;
  std::string note;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::T1;
  std::map<std::string, double> params;
  std::vector<Implication> implications;

  bool all_pass() const;
};

/// Checks params against the theorem's hypothesis (DomainError otherwise).
void validate_params(TheoremId id, const TheoremParams& params, int N);

/// Builds witness series from the coefficient templates and runs each implication of the
/// theorem at truncation N (and 2N, where a bound must be stable).  Numerical failures
/// inside an implication are recorded as a failed implication.
TheoremReport verify_theorem(TheoremId id, const TheoremParams& params, const RadialCutoff& chi, int N,
                             const QuadratureSpec& spec = {}, Exec exec = Exec::serial);

}  // namespace fockpw
