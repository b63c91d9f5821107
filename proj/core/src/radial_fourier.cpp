#include "sdt/radial_fourier.hpp"

#include "sdt/errors.hpp"
#include "sdt/numerics/special.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sdt {

Dimension::Dimension(int d) : d_(d) {
  if (d < 1) throw DomainError("dimension must be >= 1, got " + std::to_string(d));
}

namespace radial_fourier {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
// Above this evaluation point panel quadrature spends O(x) cells on the
// oscillations; the zero-partitioned engine does not.
constexpr double kOscillatoryFrom = 20.0;

// (2pi)^{d/2} / S_d = 2^{d/2-1} Gamma(d/2)
double kernel_norm(int d) { return std::pow(2.0, 0.5 * d - 1.0) * numerics::gamma_fn(0.5 * d); }

// S_d int_lo^hi p(y) y^{d-1} ghat_d(x, y) dy, the common body of both transforms.
IntegralResult<double> radial_integral(int dim, const RadialProfile& p, double x, const QuadratureSpec& spec) {
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("radial transform: evaluation point must be >= 0");
  const Dimension d(dim);
  const double sd = sphere_measure(d);
  const double lo = p.support_lower;
  const double hi = p.support_upper;
  auto integrand = [&](double y) { return sd * p.eval(y) * std::pow(y, dim - 1) * kernel_ghat(d, x, y); };

  if (std::isfinite(hi)) {
    if (hi <= lo) return {0.0, 0.0, true, 0};
    return p.singular_at_support_edge ? numerics::integrate_endpoint_singular(integrand, lo, hi, spec)
                                      : numerics::integrate_adaptive(integrand, lo, hi, spec);
  }
  if (x == 0.0 && p.decay_class == DecayClass::algebraic) {
    // Non-oscillatory algebraic tail: y = split / w maps [split, inf) onto (0, 1].
    const double split = std::max(lo, 1.0);
    auto tail = [&](double w) { return integrand(split / w) * split / (w * w); };
    auto res = numerics::integrate_adaptive(tail, 0.0, 1.0, spec);
    if (lo < split) {
      const auto head = numerics::integrate_adaptive(integrand, lo, split, spec);
      res.value += head.value;
      res.error_estimate += head.error_estimate;
      res.converged = res.converged && head.converged;
      res.evaluations += head.evaluations;
    }
    return res;
  }
  if (x == 0.0 || (p.decay_class != DecayClass::algebraic && x < kOscillatoryFrom)) {
    const double first = x > 0.0 ? std::min(1.0, std::numbers::pi / x) : 1.0;
    return numerics::integrate_semi_infinite(integrand, lo, spec, first);
  }

  // Slowly decaying profile or many oscillations per unit length: split off
  // the oscillatory factor of the kernel.
  using Kernel = numerics::OscillatoryKernel;
  if (dim == 1) {
    auto env = [&](double y) { return sd * p.eval(y); };
    return numerics::integrate_oscillatory(env, Kernel{Kernel::Kind::cosine, x, 0.0}, lo, spec);
  }
  if (dim == 3) {
    auto env = [&](double y) { return sd * p.eval(y) * y / x; };
    return numerics::integrate_oscillatory(env, Kernel{Kernel::Kind::sine, x, 0.0}, lo, spec);
  }
  const double norm = kernel_norm(dim);
  auto env = [&](double y) {
    return sd * p.eval(y) * std::pow(y, dim - 1) * norm * std::pow(x * y, 1.0 - 0.5 * dim);
  };
  return numerics::integrate_oscillatory(env, Kernel{Kernel::Kind::bessel, x, 0.5 * dim - 1.0}, lo, spec);
}

}  // namespace

double sphere_measure(Dimension d) {
  const double h = 0.5 * d.value();
  return 2.0 * std::pow(std::numbers::pi, h) / numerics::gamma_fn(h);
}

double kernel_ghat(Dimension d, double k, double x) {
  const double z = k * x;
  switch (d.value()) {
    case 1:
      return std::cos(z);
    case 2:
      return numerics::bessel_j(0.0, std::abs(z));
    case 3:
      if (std::abs(z) < 1e-4) return 1.0 - z * z / 6.0;
      return std::sin(z) / z;
    default:
      return kernel_ghat_bessel(d, k, x);
  }
}

double kernel_ghat_bessel(Dimension d, double k, double x) {
  const double z = std::abs(k * x);
  if (z == 0.0) return 1.0;
  const int dim = d.value();
  return kernel_norm(dim) * std::pow(z, 1.0 - 0.5 * dim) * numerics::bessel_j(0.5 * dim - 1.0, z);
}

IntegralResult<double> forward(Dimension d, const RadialProfile& f, double k, const QuadratureSpec& spec) {
  return radial_integral(d.value(), f, k, spec);
}

IntegralResult<double> inverse(Dimension d, const RadialProfile& fhat, double r, const QuadratureSpec& spec) {
  auto res = radial_integral(d.value(), fhat, r, spec);
  const double scale = std::pow(kTwoPi, -d.value());
  res.value *= scale;
  res.error_estimate *= scale;
  return res;
}

RadialProfile transformed(Dimension d, RadialProfile f, DecayClass image_decay, const QuadratureSpec& spec) {
  RadialProfile out;
  out.decay_class = image_decay;
  out.eval = [d, f = std::move(f), spec](double k) {
    const auto res = forward(d, f, k, spec);
    if (!res.converged) throw ConvergenceError("forward radial transform did not converge at k=" + std::to_string(k));
    // quadrature noise in an exponentially small tail would otherwise never truncate
    return std::abs(res.value) <= res.error_estimate ? 0.0 : res.value;
  };
  return out;
}

}  // namespace radial_fourier
}  // namespace sdt
