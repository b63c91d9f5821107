#pragma once

#include "sdt/numerics/quadrature.hpp"

#include <complex>
#include <functional>
#include <limits>
#include <optional>
#include <span>

namespace sdt::laplace {

using complex = std::complex<double>;
/// Image evaluations along inversion contours run in extended precision.
using complex_ext = std::complex<long double>;

using numerics::IntegralResult;
using numerics::QuadratureSpec;

/// Dirac mass `weight * delta(t - location)`; never integrated numerically.
struct Atom {
  double location = 0.0;
  double weight = 1.0;
};

/// A Laplace original f(t), t >= 0, bounded by C e^{sigma0 t}.
struct TimeOriginal {
  std::function<double(double)> eval;
  double sigma0 = 0.0;
  std::optional<Atom> atom;
  double support_upper = std::numeric_limits<double>::infinity();
  /// Optional holomorphic extension of the smooth part, and its exponential
  /// type (|analytic(z)| <= C e^{type |z|}). Needed to continue the image to
  /// Re s <= sigma0 by integrating along a rotated ray.
  std::function<complex(complex)> analytic;
  double exponential_type = 0.0;
};

/// A Laplace image F(s), analytic for Re s > sigma0.
struct LaplaceImage {
  std::function<complex_ext(complex_ext)> eval;
  double sigma0 = 0.0;
  /// Bound on |Im s| of the singularities left of sigma0 (branch points at
  /// +-ik, complex poles). Raises the node count of the inversion contour.
  double singularity_height = 0.0;

  [[nodiscard]] complex operator()(complex s) const {
    const complex_ext v = eval(complex_ext(s.real(), s.imag()));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
  }
};

inline constexpr double kDefaultMargin = 0.1;

/// Atom contribution plus int_0^support e^{-st} f(t) dt. Requires
/// Re s > sigma0 + margin (DomainError otherwise). Uses the oscillatory
/// engine when |Im s| dominates the damping.
IntegralResult<complex> forward_laplace(const TimeOriginal& f, complex s, const QuadratureSpec& spec = {},
                                        double margin = kDefaultMargin);

/// Analytic continuation of the image to any s with |s| > exponential_type +
/// margin, integrating along the ray t = rho e^{-i arg s}. Compactly supported
/// originals are integrated on the real axis (their image is entire).
IntegralResult<complex> continued_laplace(const TimeOriginal& f, complex s, const QuadratureSpec& spec = {},
                                          double margin = kDefaultMargin);

/// Node count actually used by inverse_laplace: `nodes` raised to
/// ceil(6.4 * singularity_height * t) and rounded up to an even number.
int effective_nodes(const LaplaceImage& F, double t, int nodes);

/// Numerical inversion on Weideman's optimised Talbot contour
///   z(th) = (N/t) (-0.6122 + 0.5017 th cot(0.6407 th) + 0.2645 i th),
/// midpoint rule in th, conjugate symmetry, extended-precision summation.
/// Images with sigma0 > 0 are inverted through the shift F(s + sigma0).
/// Throws DomainError for t <= 0, nodes < 2, or a non-finite image value.
double inverse_laplace(const LaplaceImage& F, double t, int nodes = 48);

/// max_t |inverse(forward(f))(t) - f(t)| / max(|f(t)|, 1e-12). Contour nodes with
/// Re s <= sigma0 + margin use continued_laplace.
double roundtrip_check(const TimeOriginal& f, std::span<const double> t_grid, int nodes = 48,
                       const QuadratureSpec& spec = {});

/// Image of `f` obtained by numerical quadrature (forward_laplace, or
/// continued_laplace left of the abscissa). Throws ConvergenceError on failure.
LaplaceImage numerical_image(TimeOriginal f, const QuadratureSpec& spec = {});

// Elementary transformations of originals used by the shift/damping checks.
TimeOriginal shifted(TimeOriginal f, double a);   // f(t-a) Theta(t-a)
TimeOriginal damped(TimeOriginal f, double b);    // e^{-bt} f(t)
TimeOriginal combined(const TimeOriginal& f, double alpha, const TimeOriginal& g, double beta);

}  // namespace sdt::laplace
