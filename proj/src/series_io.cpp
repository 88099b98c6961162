#include "fockpw/series_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "fockpw/errors.hpp"

namespace fockpw {

namespace {

double parse_real(const std::string& tok, int line) {
  if (tok == "-inf") return -std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(tok, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != tok.size() || std::isnan(v))
    throw ParseError("line " + std::to_string(line) + ": bad number '" + tok + "'");
  return v;
}

std::string fmt(double v) {
  if (v == -std::numeric_limits<double>::infinity()) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

CoefficientSeries read_series(std::istream& in) {
  std::string line;
  int lineno = 0;
  std::size_t d = 0;
  int truncation = -1;
  bool header = false;
  std::vector<std::pair<MultiIndex, LogComplex>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream cs(line.substr(hash + 1));
      std::string tok;
      while (cs >> tok)
        if (tok.rfind("truncation=", 0) == 0) truncation = static_cast<int>(parse_real(tok.substr(11), lineno));
      line.resize(hash);
    }
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 4 || toks[0] != "bargmann-series" || toks[1] != "v1" || toks[2].rfind("d=", 0) != 0 ||
          toks[3] != "basis=normalized")
        throw ParseError("line " + std::to_string(lineno) + ": expected 'bargmann-series v1 d=<d> basis=normalized'");
      const double dv = parse_real(toks[2].substr(2), lineno);
      if (dv < 1 || dv != std::floor(dv)) throw ParseError("bad dimension in header");
      d = static_cast<std::size_t>(dv);
      header = true;
      continue;
    }
    if (toks.size() != d + 2)
      throw ParseError("line " + std::to_string(lineno) + ": expected " + std::to_string(d + 2) + " fields");
    std::vector<int> a(d);
    for (std::size_t j = 0; j < d; ++j) {
      const double v = parse_real(toks[j], lineno);
      if (v < 0 || v != std::floor(v) || v > 1e6)
        throw ParseError("line " + std::to_string(lineno) + ": bad index '" + toks[j] + "'");
      a[j] = static_cast<int>(v);
    }
    const double lm = parse_real(toks[d], lineno);
    const double ph = parse_real(toks[d + 1], lineno);
    if (lm == std::numeric_limits<double>::infinity()) throw ParseError("line " + std::to_string(lineno) + ": infinite magnitude");
    rows.emplace_back(MultiIndex(std::move(a)), LogComplex::from_log(lm, ph));
  }
  if (!header) throw ParseError("missing header");
  int max_order = 0;
  for (const auto& [a, c] : rows) max_order = std::max(max_order, a.order());
  if (truncation < 0) truncation = max_order;
  if (max_order > truncation) throw ParseError("entry exceeds declared truncation");
  CoefficientSeries s(d, truncation);
  for (const auto& [a, c] : rows) {
    if (s.contains(a)) throw ParseError("duplicate index " + a.to_string());
    s.set(a, c);
  }
  return s;
}

void write_series(std::ostream& out, const CoefficientSeries& series) {
  out << "bargmann-series v1 d=" << series.dim() << " basis=normalized\n";
  out << "# truncation=" << series.truncation() << "\n";
  for (const auto& [a, c] : series.entries()) {
    for (int e : a.entries()) out << e << ' ';
    out << fmt(c.log_mag()) << ' ' << fmt(c.phase()) << '\n';
  }
}

CoefficientSeries read_series_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_series(in);
}

void write_series_file(const std::string& path, const CoefficientSeries& series) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  write_series(out, series);
}

}  // namespace fockpw
