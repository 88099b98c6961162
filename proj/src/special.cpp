#include "fockpw/special.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fockpw/errors.hpp"

namespace fockpw {

namespace {

constexpr double kEulerGamma = 0.5772156649015328606065121;

// zeta(k) - 1 for k = 2..40
constexpr std::array<double, 39> kZetaMinusOne = {
    0.64493406684822643647,   0.2020569031595942854,    0.082323233711138191516,
    0.036927755143369926331,  0.017343061984449139715,  0.0083492773819228268398,
    0.0040773561979443393787, 0.0020083928260822144179, 0.00099457512781808533715,
    0.0004941886041194645587, 0.00024608655330804829864, 0.00012271334757848914675,
    6.1248135058704829259e-5, 3.0588236307020493552e-5, 1.5282259408651871733e-5,
    7.6371976378997622736e-6, 3.8172932649998398565e-6, 1.9082127165539389257e-6,
    9.5396203387279611315e-7, 4.7693298678780646312e-7, 2.3845050272773299e-7,
    1.1921992596531107307e-7, 5.9608189051259479612e-8, 2.9803503514652280186e-8,
    1.4901554828365041235e-8, 7.450711789835429492e-9,  3.7253340247884570548e-9,
    1.8626597235130490064e-9, 9.3132743241966818287e-10, 4.656629065033784073e-10,
    2.328311833676505492e-10, 1.1641550172700519776e-10, 5.8207720879027008892e-11,
    2.9103850444970996869e-11, 1.4551921891041984236e-11, 7.2759598350574810145e-12,
    3.6379795473786511902e-12, 1.8189896503070659476e-12, 9.0949478402638892825e-13};

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

// ln Gamma(1 + eps), |eps| <= 0.25
double log_gamma_near_one(double eps) {
  double sum = 0.0;
  double pw = eps;  // eps^k
  for (int k = 2; k <= 40; ++k) {
    pw *= eps;
    const double zeta = 1.0 + kZetaMinusOne[k - 2];
    sum += ((k % 2 == 0) ? 1.0 : -1.0) * zeta * pw / k;
  }
  return -kEulerGamma * eps + sum;
}

// ln Gamma(2 + eps), |eps| <= 0.25
double log_gamma_near_two(double eps) {
  double sum = 0.0;
  double pw = eps;
  for (int k = 2; k <= 40; ++k) {
    pw *= eps;
    sum += ((k % 2 == 0) ? 1.0 : -1.0) * kZetaMinusOne[k - 2] * pw / k;
  }
  return (1.0 - kEulerGamma) * eps + sum;
}

double log_gamma_lanczos(double x) {
  // x >= 0.5
  const double xm = x - 1.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (xm + i);
  const double t = xm + 7.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm + 0.5) * std::log(t) - t + std::log(a);
}

struct FactorialLogs {
  std::array<double, 171> v{};  // ln n!, n = 0..170
  FactorialLogs() {
    double f = 1.0;
    v[0] = 0.0;
    for (int n = 1; n <= 170; ++n) {
      f *= n;
      v[n] = std::log(f);
    }
  }
};

const FactorialLogs& factorial_logs() {
  static const FactorialLogs table;
  return table;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  if (std::isinf(x)) return x;
  if (x <= 171.0 && x == std::floor(x)) return factorial_logs().v[static_cast<int>(x) - 1];
  if (std::abs(x - 1.0) <= 0.25) return log_gamma_near_one(x - 1.0);
  if (std::abs(x - 2.0) <= 0.25) return log_gamma_near_two(x - 2.0);
  if (x < 0.75) return log_gamma(x + 1.0) - std::log(x);
  return log_gamma_lanczos(x);
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("factorial of a negative integer");
  if (n <= 170) return factorial_logs().v[n];
  return log_gamma_lanczos(n + 1.0);
}

double log_factorial(const MultiIndex& alpha) {
  double s = 0.0;
  for (int a : alpha.entries()) s += log_factorial(a);
  return s;
}

double log_stirling_ratio(double tau, int n) {
  if (!(tau > -0.5)) throw DomainError("stirling_ratio requires tau > -1/2");
  if (n < 0) throw DomainError("stirling_ratio requires n >= 0");
  const double k = 2.0 * tau + 1.0;
  const double lf = log_factorial(n);
  const double lhs = log_gamma(k * (n + 1.0)) - lf;
  const double rhs = k * n * std::log(k) + tau * std::log(n + 1.0) + 2.0 * tau * lf;
  return lhs - rhs;
}

double stirling_ratio(double tau, int n) { return std::exp(log_stirling_ratio(tau, n)); }

}  // namespace fockpw
