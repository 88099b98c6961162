#pragma once

#include <iosfwd>
#include <string>

#include "fockpw/series.hpp"

namespace fockpw {

/// Text format:
///   bargmann-series v1 d=<d> basis=normalized
///   # truncation=<N>            (optional; default is the largest |alpha| present)
///   a_1 ... a_d  log_mag  phase
/// Zero magnitude is written `-inf`.  Throws ParseError.
CoefficientSeries read_series(std::istream& in);
void write_series(std::ostream& out, const CoefficientSeries& series);

CoefficientSeries read_series_file(const std::string& path);
void write_series_file(const std::string& path, const CoefficientSeries& series);

}  // namespace fockpw
