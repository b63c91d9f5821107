#pragma once

#include "sdt/numerics/quadrature.hpp"

#include <functional>
#include <limits>
#include <string>
#include <vector>

namespace sdt {

/// Space dimension d >= 1.
class Dimension {
 public:
  explicit Dimension(int d);
  [[nodiscard]] int value() const { return d_; }
  friend bool operator==(Dimension, Dimension) = default;

 private:
  int d_;
};

enum class DecayClass { compact, exponential, gaussian, algebraic };

/// A function of the radius r = |x| on R^d (or of the wavenumber k when it
/// holds a Fourier image). Values outside [support_lower, support_upper] are 0.
struct RadialProfile {
  std::function<double(double)> eval;
  double support_lower = 0.0;
  double support_upper = std::numeric_limits<double>::infinity();
  /// Integrable singularity (or non-smooth edge) at an end of the support.
  bool singular_at_support_edge = false;
  DecayClass decay_class = DecayClass::exponential;

  [[nodiscard]] double operator()(double r) const {
    if (r < support_lower || r > support_upper) return 0.0;
    return eval(r);
  }
};

namespace radial_fourier {

using numerics::IntegralResult;
using numerics::QuadratureSpec;

/// Measure of the unit sphere in R^d, 2 pi^{d/2} / Gamma(d/2).
double sphere_measure(Dimension d);

/// Directional average of exp(-i k.u x) over the unit sphere:
/// ((2pi)^{d/2}/S_d) (kx)^{1-d/2} J_{d/2-1}(kx), equal to 1 at kx = 0.
/// d = 1, 2, 3 use cos, J0 and sin(z)/z directly.
double kernel_ghat(Dimension d, double k, double x);

/// Same kernel through the general Bessel expression for every d (no closed-form
/// dispatch); used to cross-check the closed forms.
double kernel_ghat_bessel(Dimension d, double k, double x);

/// S_d int_0^inf f(r) r^{d-1} ghat_d(k, r) dr.
IntegralResult<double> forward(Dimension d, const RadialProfile& f, double k, const QuadratureSpec& spec = {});

/// (S_d / (2pi)^d) int_0^inf fhat(k) k^{d-1} ghat_d(k, r) dk.
IntegralResult<double> inverse(Dimension d, const RadialProfile& fhat, double r, const QuadratureSpec& spec = {});

/// Profile of the forward transform of `f`, evaluated by quadrature on demand.
/// Values no larger than their own error estimate are returned as 0.
/// Throws ConvergenceError at a wavenumber where the quadrature fails.
RadialProfile transformed(Dimension d, RadialProfile f, DecayClass image_decay, const QuadratureSpec& spec = {});

/// A named radial profile with its closed-form d-dimensional image.
struct NamedProfile {
  std::string name;
  RadialProfile profile;
  RadialProfile image;
};

/// Test profiles in dimension d:
///  - "gaussian": exp(-r^2/2), image (2pi)^{d/2} exp(-k^2/2)
///  - "yukawa": S_d times the Green's function of (1 - Laplacian) (d=1: e^{-r},
///    d=2: K0(r), d=3: e^{-r}/r, general d via K_{d/2-1}); image S_d/(1+k^2)
///  - "exponential": e^{-r}, image Gamma((d+1)/2) 2^d pi^{(d-1)/2}/(1+k^2)^{(d+1)/2}
NamedProfile named_profile(const std::string& name, Dimension d);

/// Names accepted by named_profile (a name with suffix "-image" selects the
/// image as the profile, for inverse transforms).
std::vector<std::string> profile_names();

}  // namespace radial_fourier
}  // namespace sdt
