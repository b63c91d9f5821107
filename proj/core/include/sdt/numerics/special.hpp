#pragma once

namespace sdt::numerics {

/// Bessel function of the first kind J_order(x) for integer orders (any sign)
/// and half-integer orders n + 1/2 with n >= -1, x >= 0.
///
/// Half-integer orders use the closed trigonometric (spherical Bessel) forms.
/// Integer orders use the power series for x < 8, Hankel's asymptotic
/// expansion for x >= max(25, order^2), and Miller's normalised backward
/// recurrence in between. Absolute accuracy is about 1e-14 for x <= 100.
///
/// Throws DomainError for any other order or for negative/non-finite x.
double bessel_j(double order, double x);

/// m-th positive zero (m >= 1) of J_order, order >= 0 and integer or
/// half-integer. McMahon's expansion refined by Newton iteration.
double bessel_j_zero(double order, int m);

/// Gamma function for x > 0; throws DomainError otherwise.
double gamma_fn(double x);

/// True when `order` is an integer or a half-integer.
bool is_supported_bessel_order(double order);

}  // namespace sdt::numerics
