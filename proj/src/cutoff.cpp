#include "fockpw/cutoff.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fockpw/errors.hpp"

namespace fockpw {

CutoffAxis CutoffAxis::indicator(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DegenerateCutoff("indicator radius must be positive");
  CutoffAxis a;
  a.kind_ = Kind::Indicator;
  a.t1_ = a.t2_ = t;
  return a;
}

CutoffAxis CutoffAxis::trapezoid(double t1, double t2) {
  if (!(t1 > 0.0) || !(t2 > t1) || !std::isfinite(t2)) throw DegenerateCutoff("trapezoid needs 0 < t1 < t2");
  CutoffAxis a;
  a.kind_ = Kind::Trapezoid;
  a.t1_ = t1;
  a.t2_ = t2;
  return a;
}

CutoffAxis CutoffAxis::tabulated(std::vector<double> rho, std::vector<double> v, double t1) {
  if (rho.size() < 2 || rho.size() != v.size() || rho.front() != 0.0)
    throw DegenerateCutoff("tabulated cutoff needs >= 2 nodes starting at 0");
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (i > 0 && !(rho[i] > rho[i - 1])) throw DegenerateCutoff("cutoff nodes must increase");
    if (!(v[i] >= 0.0) || !std::isfinite(v[i])) throw DegenerateCutoff("cutoff values must be finite and >= 0");
  }
  if (!(t1 > 0.0) || t1 > rho.back()) throw DegenerateCutoff("t1 must lie in (0, last node]");
  CutoffAxis a;
  a.kind_ = Kind::Tabulated;
  a.t1_ = t1;
  a.t2_ = rho.back();
  a.rho_ = std::move(rho);
  a.v_ = std::move(v);
  if (!(a.lower_bound() > 0.0)) throw DegenerateCutoff("cutoff vanishes somewhere on [0, t1]");
  return a;
}

double CutoffAxis::value(double rho) const {
  if (rho < 0.0 || rho > t2_) return 0.0;
  switch (kind_) {
    case Kind::Indicator:
      return 1.0;
    case Kind::Trapezoid:
      return rho <= t1_ ? 1.0 : (t2_ - rho) / (t2_ - t1_);
    case Kind::Tabulated: {
      auto it = std::upper_bound(rho_.begin(), rho_.end(), rho);
      std::size_t i = it == rho_.end() ? rho_.size() - 1 : static_cast<std::size_t>(it - rho_.begin());
      const double w = (rho - rho_[i - 1]) / (rho_[i] - rho_[i - 1]);
      return v_[i - 1] + w * (v_[i] - v_[i - 1]);
    }
  }
  return 0.0;
}

std::vector<double> CutoffAxis::breaks() const {
  switch (kind_) {
    case Kind::Indicator:
      return {};
    case Kind::Trapezoid:
      return {t1_};
    case Kind::Tabulated:
      return {rho_.begin() + 1, rho_.end() - 1};
  }
  return {};
}

double CutoffAxis::lower_bound() const {
  if (kind_ != Kind::Tabulated) return 1.0;
  double m = value(t1_);
  for (std::size_t i = 0; i < rho_.size() && rho_[i] <= t1_; ++i) m = std::min(m, v_[i]);
  return m;
}

double CutoffAxis::sup() const {
  if (kind_ != Kind::Tabulated) return 1.0;
  return *std::max_element(v_.begin(), v_.end());
}

RadialCutoff RadialCutoff::indicator(const RadiusVector& t) {
  std::vector<CutoffAxis> axes;
  for (double v : t.values()) axes.push_back(CutoffAxis::indicator(v));
  return tensor(std::move(axes));
}

RadialCutoff RadialCutoff::trapezoid(const RadiusVector& t1, const RadiusVector& t2) {
  if (t1.dim() != t2.dim()) throw DimensionMismatch("trapezoid radii differ in dimension");
  std::vector<CutoffAxis> axes;
  for (std::size_t j = 0; j < t1.dim(); ++j) axes.push_back(CutoffAxis::trapezoid(t1[j], t2[j]));
  return tensor(std::move(axes));
}

RadialCutoff RadialCutoff::tensor(std::vector<CutoffAxis> axes, double amplitude) {
  if (axes.empty()) throw DegenerateCutoff("cutoff needs at least one axis");
  if (!(amplitude > 0.0) || !std::isfinite(amplitude)) throw DegenerateCutoff("cutoff amplitude must be positive");
  RadialCutoff c;
  c.d_ = axes.size();
  std::vector<double> t1, t2;
  double lb = amplitude;
  for (const auto& a : axes) {
    t1.push_back(a.t1());
    t2.push_back(a.t2());
    lb *= a.lower_bound();
  }
  c.axes_ = std::move(axes);
  c.amplitude_ = amplitude;
  c.t1_ = RadiusVector(t1);
  c.t2_ = RadiusVector(t2);
  c.c_ = lb;
  return c;
}

RadialCutoff RadialCutoff::joint(std::function<double(std::span<const double>)> chi0, const RadiusVector& t1,
                                 const RadiusVector& t2, double c) {
  if (t1.dim() != t2.dim()) throw DimensionMismatch("cutoff radii differ in dimension");
  if (t1.dim() > 2) throw DegenerateCutoff("joint cutoffs are supported for d <= 2 only");
  for (std::size_t j = 0; j < t1.dim(); ++j)
    if (t1[j] > t2[j]) throw DegenerateCutoff("cutoff needs t1 <= t2");
  if (!(c > 0.0)) throw DegenerateCutoff("cutoff lower bound must be positive");
  RadialCutoff out;
  out.d_ = t1.dim();
  out.joint_ = std::move(chi0);
  out.t1_ = t1;
  out.t2_ = t2;
  out.c_ = c;
  return out;
}

RadialCutoff RadialCutoff::parse(const std::string& text, std::size_t d) {
  std::string body = text;
  double amp = 1.0;
  const auto star = body.find('*');
  auto num = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw ParseError("bad number '" + s + "' in cutoff '" + text + "'");
    return v;
  };
  if (star != std::string::npos) {
    amp = num(body.substr(star + 1));
    body.resize(star);
  }
  const auto colon = body.find(':');
  if (colon == std::string::npos) throw ParseError("cutoff must look like kind:t or kind:t1,t2");
  const std::string kind = body.substr(0, colon);
  std::vector<double> ts;
  std::stringstream ss(body.substr(colon + 1));
  for (std::string tok; std::getline(ss, tok, ',');) ts.push_back(num(tok));
  std::vector<CutoffAxis> axes;
  try {
    if (kind == "indicator" && ts.size() == 1) {
      for (std::size_t j = 0; j < d; ++j) axes.push_back(CutoffAxis::indicator(ts[0]));
    } else if (kind == "trapezoid" && ts.size() == 2) {
      for (std::size_t j = 0; j < d; ++j) axes.push_back(CutoffAxis::trapezoid(ts[0], ts[1]));
    } else {
      throw ParseError("unknown cutoff '" + text + "'");
    }
    return tensor(std::move(axes), amp);
  } catch (const DegenerateCutoff& e) {
    throw ParseError(std::string("cutoff '") + text + "': " + e.what());
  }
}

RadialCutoff RadialCutoff::scaled(double lambda) const {
  if (!(lambda > 0.0)) throw DegenerateCutoff("cutoff scale must be positive");
  RadialCutoff out = *this;
  if (is_tensor()) {
    out.amplitude_ *= lambda;
    out.c_ *= lambda;
  } else {
    auto f = joint_;
    out.joint_ = [f, lambda](std::span<const double> r) { return lambda * f(r); };
    out.c_ *= lambda;
  }
  return out;
}

double RadialCutoff::radial_value(std::span<const double> rho) const {
  if (rho.size() != d_) throw DimensionMismatch("cutoff: dimension mismatch");
  if (!is_tensor()) {
    for (std::size_t j = 0; j < d_; ++j)
      if (rho[j] > t2_[j]) return 0.0;
    return joint_(rho);
  }
  double v = amplitude_;
  for (std::size_t j = 0; j < d_ && v != 0.0; ++j) v *= axes_[j].value(rho[j]);
  return v;
}

double RadialCutoff::value(std::span<const std::complex<double>> z) const {
  std::vector<double> rho(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) rho[j] = std::abs(z[j]);
  return radial_value(rho);
}

}  // namespace fockpw
