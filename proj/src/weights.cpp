#include "fockpw/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fockpw/errors.hpp"
#include "fockpw/special.hpp"

namespace fockpw {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_dims(const RadiusVector& r, const MultiIndex& alpha) {
  if (r.dim() != alpha.dim()) throw DimensionMismatch("radius and index dimensions differ");
}

// Sum_j alpha_j^{1/(2s)} / r_j, the exponent of the real-order weights.
double real_order_exponent(double s, const RadiusVector& r, const MultiIndex& alpha) {
  if (!(s > 0.0)) throw DomainError("real order weight needs s > 0");
  double e = 0.0;
  for (std::size_t j = 0; j < alpha.dim(); ++j) e += std::pow(alpha[j], 1.0 / (2.0 * s)) / r[j];
  return e;
}

double log_r_alpha(const RadiusVector& r, const MultiIndex& alpha) {
  double e = 0.0;
  for (std::size_t j = 0; j < alpha.dim(); ++j)
    if (alpha[j] != 0) e += alpha[j] * std::log(r[j]);
  return e;
}

}  // namespace

OrderParam OrderParam::real(double s) {
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("order s must be a finite real >= 0");
  return OrderParam(Kind::Real, s);
}

OrderParam OrderParam::flat(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("flat order needs sigma > 0");
  return OrderParam(Kind::Flat, sigma);
}

std::string OrderParam::to_string() const {
  std::ostringstream os;
  os << (is_flat() ? "flat_" : "") << value_;
  return os.str();
}

std::partial_ordering operator<=>(const OrderParam& a, const OrderParam& b) {
  if (a.kind_ == b.kind_) return a.value_ <=> b.value_;
  if (a.kind_ == OrderParam::Kind::Real)  // a real, b flat
    return a.value_ < 0.5 ? std::partial_ordering::less : std::partial_ordering::greater;
  return b.value_ < 0.5 ? std::partial_ordering::greater : std::partial_ordering::less;
}

RadiusVector::RadiusVector(std::vector<double> r) : r_(std::move(r)) {
  if (r_.empty()) throw DomainError("radius vector must be non-empty");
  for (double v : r_)
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("radii must be finite and positive");
}

bool RadiusVector::lt(const RadiusVector& o) const {
  if (o.dim() != dim()) throw DimensionMismatch("radius dimensions differ");
  for (std::size_t j = 0; j < dim(); ++j)
    if (!(r_[j] < o.r_[j])) return false;
  return true;
}

RadiusVector RadiusVector::scaled(double lambda) const {
  auto v = r_;
  for (double& x : v) x *= lambda;
  return RadiusVector(std::move(v));
}

AxisProfile AxisProfile::exponential(double rate) {
  if (!(rate > 0.0)) throw DomainError("exponential profile needs rate > 0");
  AxisProfile p;
  p.kind_ = Kind::Exponential;
  p.rate_ = rate;
  return p;
}

AxisProfile AxisProfile::stretched_exp(double rate, double power) {
  if (!(rate > 0.0) || !(power > 0.0)) throw DomainError("stretched exponential needs rate, power > 0");
  AxisProfile p;
  p.kind_ = Kind::StretchedExp;
  p.rate_ = rate;
  p.power_ = power;
  return p;
}

AxisProfile AxisProfile::tabulated(std::vector<double> u, std::vector<double> v) {
  if (u.size() < 2 || u.size() != v.size()) throw DomainError("tabulated profile needs >= 2 matching nodes");
  if (u.front() != 0.0) throw DomainError("tabulated profile must start at u = 0");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0 && !(u[i] > u[i - 1])) throw DomainError("tabulated nodes must increase");
    if (!(v[i] >= 0.0) || !std::isfinite(v[i])) throw DomainError("tabulated values must be finite and >= 0");
  }
  AxisProfile p;
  p.kind_ = Kind::Tabulated;
  p.u_ = std::move(u);
  p.v_ = std::move(v);
  return p;
}

double AxisProfile::log_value(double u) const {
  switch (kind_) {
    case Kind::Exponential:
      return -rate_ * u;
    case Kind::StretchedExp:
      return -rate_ * std::pow(u, power_);
    case Kind::Tabulated: {
      if (u < 0.0 || u > u_.back()) return kNegInf;
      auto it = std::upper_bound(u_.begin(), u_.end(), u);
      std::size_t i = it == u_.end() ? u_.size() - 1 : static_cast<std::size_t>(it - u_.begin());
      const double w = (u - u_[i - 1]) / (u_[i] - u_[i - 1]);
      const double v = v_[i - 1] + w * (v_[i] - v_[i - 1]);
      return v > 0.0 ? std::log(v) : kNegInf;
    }
  }
  return kNegInf;
}

std::vector<double> AxisProfile::breaks() const {
  if (kind_ == Kind::Tabulated) return u_;
  return {};
}

RadialProfile RadialProfile::tensor(std::vector<AxisProfile> axes) {
  if (axes.empty()) throw DomainError("profile needs at least one axis");
  RadialProfile p;
  p.d_ = axes.size();
  p.axes_ = std::move(axes);
  return p;
}

RadialProfile RadialProfile::joint(std::size_t d, std::function<double(std::span<const double>)> omega0, double cap) {
  if (d < 1 || d > 2) throw DomainError("joint radial profiles are supported for d <= 2 only");
  if (!(cap > 0.0)) throw DomainError("joint profile needs a positive integration cap");
  RadialProfile p;
  p.d_ = d;
  p.joint_ = std::move(omega0);
  p.cap_ = cap;
  return p;
}

LogComplex vartheta(const OrderParam& order, const RadiusVector& r, const MultiIndex& alpha) {
  check_dims(r, alpha);
  if (order.is_flat())
    return LogComplex::from_log(log_r_alpha(r, alpha) - log_factorial(alpha) / (2.0 * order.value()));
  if (order.is_half()) return LogComplex::from_log(log_r_alpha(r, alpha));
  return LogComplex::from_log(-real_order_exponent(order.value(), r, alpha));
}

LogComplex vartheta_dual(const OrderParam& order, const RadiusVector& r, const MultiIndex& alpha) {
  check_dims(r, alpha);
  if (order.is_flat())
    return LogComplex::from_log(log_r_alpha(r, alpha) + log_factorial(alpha) / (2.0 * order.value()));
  if (order.is_half()) return LogComplex::from_log(log_r_alpha(r, alpha));
  return LogComplex::from_log(real_order_exponent(order.value(), r, alpha));
}

double japanese_bracket(std::complex<double> z) { return std::sqrt(1.0 + std::norm(z)); }

double growth_majorant(int j, bool zero_variant, const OrderParam& order, const RadiusVector& r,
                       std::span<const std::complex<double>> z) {
  if (j != 1 && j != 2) throw UnsupportedBranch("majorant index must be 1 or 2");
  if (z.size() != r.dim()) throw DimensionMismatch("majorant: dimension mismatch");
  const std::size_t d = z.size();
  double acc = 0.0;
  if (zero_variant && order.is_half()) {
    for (std::size_t k = 0; k < d; ++k) acc += r[k] * std::norm(z[k]);
    return acc;
  }
  double z2 = 0.0;
  for (auto zk : z) z2 += std::norm(zk);
  if (order.is_flat()) {
    const double sigma = order.value();
    if (j == 2 && !(sigma > 1.0)) throw UnsupportedBranch("M_2 for flat orders needs sigma > 1");
    const double p = j == 1 ? 2.0 * sigma / (sigma + 1.0) : 2.0 * sigma / (sigma - 1.0);
    for (std::size_t k = 0; k < d; ++k) acc += r[k] * std::pow(std::abs(z[k]), p);
    return acc;
  }
  const double s = order.value();
  if (s < 0.5) {
    if (j == 2) throw UnsupportedBranch("M_2 is undefined for s < 1/2");
    for (std::size_t k = 0; k < d; ++k) acc += r[k] * std::pow(std::log(japanese_bracket(z[k])), 1.0 / (1.0 - 2.0 * s));
    return acc;
  }
  for (std::size_t k = 0; k < d; ++k) acc += r[k] * std::pow(std::abs(z[k]), 1.0 / s);
  return j == 1 ? 0.5 * z2 - acc : 0.5 * z2 + acc;
}

LogComplex weight_from_radial(const RadialProfile& profile, const MultiIndex& alpha, const QuadratureSpec& spec) {
  if (alpha.dim() != profile.dim()) throw DimensionMismatch("profile and index dimensions differ");
  if (profile.is_tensor()) {
    double lm = 0.0;
    for (std::size_t j = 0; j < alpha.dim(); ++j) {
      const AxisProfile& ax = profile.axes_[j];
      const int a = alpha[j];
      auto g = [&](double u) {
        const double w = ax.log_value(u);
        if (w == kNegInf) return kNegInf;
        if (a == 0) return 2.0 * w;
        return u > 0.0 ? 2.0 * w + a * std::log(u) : kNegInf;
      };
      const auto br = ax.breaks();
      const double li = log_integrate(g, 0.0, std::numeric_limits<double>::infinity(), spec, br);
      if (li == kNegInf) return LogComplex::zero();
      lm += 0.5 * (li - log_factorial(a));
    }
    return LogComplex::from_log(lm);
  }
  const double cap = profile.cap_;
  double value = 0.0;
  if (profile.d_ == 1) {
    value = integrate(
                [&](double u) {
                  const double w = profile.joint_(std::span<const double>(&u, 1));
                  return w * w * std::pow(u, alpha[0]);
                },
                0.0, cap, spec)
                .value;
  } else {
    value = integrate_2d(
                [&](double u1, double u2) {
                  const double uu[2] = {u1, u2};
                  const double w = profile.joint_(std::span<const double>(uu, 2));
                  return w * w * std::pow(u1, alpha[0]) * std::pow(u2, alpha[1]);
                },
                0.0, cap, 0.0, cap, spec)
                .value;
  }
  if (!(value > 0.0)) return LogComplex::zero();
  return LogComplex::from_log(0.5 * (std::log(value) - log_factorial(alpha)));
}

LogComplex vartheta_flat_L2(double tau, const RadiusVector& r, const MultiIndex& alpha) {
  check_dims(r, alpha);
  if (!(tau > -0.5)) throw DomainError("vartheta_flat_L2 needs tau > -1/2");
  const double k = 2.0 * tau + 1.0;
  double lm = 0.0;
  for (std::size_t j = 0; j < alpha.dim(); ++j) {
    const double m = k * (alpha[j] + 1.0);
    lm += 0.5 * (std::log(k) - m * std::log(2.0 * r[j]) + log_gamma(m) - log_factorial(alpha[j]));
  }
  return LogComplex::from_log(lm);
}

}  // namespace fockpw
