#include "sdt/errors.hpp"
#include "sdt/numerics/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sdt::numerics {
namespace {

constexpr double kSeriesLimit = 8.0;

// Power series for integer n >= 0.
double bessel_jn_series(int n, double x) {
  const double half = 0.5 * x;
  double term = std::exp(n * std::log(half) - std::lgamma(n + 1.0));
  if (n == 0) term = 1.0;
  const double q = -half * half;
  double sum = term;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<double>(m) * (m + n));
    sum += term;
    if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

// Miller's algorithm: backward recurrence from far above max(n, x), normalised
// with J_0 + 2 sum_k J_2k = 1.
double bessel_jn_miller(int n, double x) {
  const int top = std::max(n, static_cast<int>(x));
  const int start = 2 * ((top + 20 + static_cast<int>(std::sqrt(40.0 * top))) / 2);
  constexpr double kBig = 1e250;
  double above = 0.0;   // J_{k+1}
  double cur = 1e-30;   // J_k, k = start (even)
  double norm = 2.0 * cur;
  double wanted = 0.0;
  for (int k = start; k > 0; --k) {
    const double below = (2.0 * k / x) * cur - above;
    above = cur;
    cur = below;  // J_{k-1}
    const int idx = k - 1;
    if (idx == n) wanted = cur;
    if (idx > 0 && idx % 2 == 0) norm += 2.0 * cur;
    if (std::abs(cur) > kBig) {
      cur /= kBig;
      above /= kBig;
      norm /= kBig;
      wanted /= kBig;
    }
  }
  norm += cur;  // J_0
  return wanted / norm;
}

// Hankel's asymptotic expansion, used once x >= max(25, n^2): the smallest
// term of the divergent series is ~e^{-2x}.
double bessel_jn_asymptotic(int n, double x) {
  const double mu = 4.0 * n * n;
  double p = 1.0;
  double q = 0.0;
  double term = 1.0;
  double last = HUGE_VAL;
  for (int k = 1; k < 60; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (mu - odd * odd) / (k * 8.0 * x);
    if (std::abs(term) >= last) break;
    last = std::abs(term);
    const int sign = (k / 2) % 2 == 0 ? 1 : -1;
    if (k % 2 == 1) {
      q += sign * term;
    } else {
      p += sign * term;
    }
    if (last < 1e-17) break;
  }
  // chi = x - phi with phi = (n/2 + 1/4) pi; expanded so that large x keeps its digits
  const double phi = (0.5 * n + 0.25) * std::numbers::pi;
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  const double cos_chi = cx * std::cos(phi) + sx * std::sin(phi);
  const double sin_chi = sx * std::cos(phi) - cx * std::sin(phi);
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

double bessel_jn(int n, double x) {
  if (n < 0) {
    const double v = bessel_jn(-n, x);
    return (n % 2 == 0) ? v : -v;
  }
  if (x == 0.0) return n == 0 ? 1.0 : 0.0;
  if (x < kSeriesLimit) return bessel_jn_series(n, x);
  if (x >= std::max(25.0, static_cast<double>(n) * n)) return bessel_jn_asymptotic(n, x);
  return bessel_jn_miller(n, x);
}

// Spherical Bessel j_n, n >= -1.
double spherical_jn(int n, double x) {
  if (n == -1) return std::cos(x) / x;
  if (n == 0) return std::sin(x) / x;
  if (x < n + 1.0) {
    // x^n / (2n+1)!! * sum_m (-x^2/2)^m / (m! (2n+3)(2n+5)...(2n+2m+1))
    double lead = 1.0;
    for (int k = 1; k <= n; ++k) lead *= x / (2.0 * k + 1.0);
    double term = 1.0;
    double sum = 1.0;
    const double q = -0.5 * x * x;
    for (int m = 1; m < 100; ++m) {
      term *= q / (static_cast<double>(m) * (2.0 * n + 2.0 * m + 1.0));
      sum += term;
      if (std::abs(term) <= 1e-17 * std::abs(sum)) break;
    }
    return lead * sum;
  }
  double prev = std::sin(x) / x;
  double cur = prev / x - std::cos(x) / x;
  for (int k = 1; k < n; ++k) {
    const double next = (2.0 * k + 1.0) / x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

bool is_supported_bessel_order(double order) {
  if (!std::isfinite(order)) return false;
  const double twice = 2.0 * order;
  if (twice != std::round(twice)) return false;
  if (order == std::round(order)) return true;
  return order >= -0.5;
}

double bessel_j(double order, double x) {
  if (!is_supported_bessel_order(order)) {
    throw DomainError("bessel_j: unsupported order " + std::to_string(order));
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("bessel_j: x must be finite and >= 0");
  }
  if (order == std::round(order)) {
    return bessel_jn(static_cast<int>(order), x);
  }
  const int n = static_cast<int>(std::floor(order));  // order = n + 1/2
  if (x == 0.0) return n == -1 ? HUGE_VAL : 0.0;
  if (n == -1) return std::sqrt(2.0 / (std::numbers::pi * x)) * std::cos(x);
  if (n == 0) return std::sqrt(2.0 / (std::numbers::pi * x)) * std::sin(x);
  return std::sqrt(2.0 * x / std::numbers::pi) * spherical_jn(n, x);
}

double bessel_j_zero(double order, int m) {
  if (!is_supported_bessel_order(order) || order < 0.0) {
    throw DomainError("bessel_j_zero: order must be a non-negative integer or half-integer");
  }
  if (m < 1) throw DomainError("bessel_j_zero: m must be >= 1");
  const double mu = 4.0 * order * order;
  const double beta = (m + 0.5 * order - 0.25) * std::numbers::pi;
  const double e = 8.0 * beta;
  double x = beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e) -
             32.0 * (mu - 1.0) * (83.0 * mu * mu - 982.0 * mu + 3779.0) / (15.0 * std::pow(e, 5));
  for (int it = 0; it < 60; ++it) {
    const double j = bessel_j(order, x);
    const double dj = 0.5 * (bessel_j(order - 1.0, x) - bessel_j(order + 1.0, x));
    const double step = j / dj;
    x -= step;
    if (std::abs(step) <= 1e-15 * x) break;
  }
  return x;
}

}  // namespace sdt::numerics
