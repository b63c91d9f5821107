#include "sdt/laplace.hpp"

#include "sdt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace sdt::laplace {
namespace {

complex atom_image(const TimeOriginal& f, complex s) {
  if (!f.atom) return {};
  return f.atom->weight * std::exp(-s * f.atom->location);
}

IntegralResult<complex> finite_support_image(const TimeOriginal& f, complex s, const QuadratureSpec& spec) {
  auto integrand = [&](double t) { return std::exp(-s * t) * f.eval(t); };
  auto res = numerics::integrate_adaptive(integrand, 0.0, f.support_upper, spec);
  res.value += atom_image(f, s);
  return res;
}

}  // namespace

IntegralResult<complex> forward_laplace(const TimeOriginal& f, complex s, const QuadratureSpec& spec,
                                        double margin) {
  if (!f.eval) throw DomainError("forward_laplace: original has no evaluator");
  if (!(s.real() > f.sigma0 + margin)) {
    throw DomainError("forward_laplace: Re s = " + std::to_string(s.real()) +
                      " is not right of sigma0 + margin = " + std::to_string(f.sigma0 + margin));
  }
  if (std::isfinite(f.support_upper)) return finite_support_image(f, s, spec);

  const double damping = s.real() - f.sigma0;
  const double omega = std::abs(s.imag());
  IntegralResult<complex> res;
  if (omega > 8.0 * std::max(1.0, damping)) {
    const double sigma = s.real();
    auto envelope = [&](double t) { return std::exp(-sigma * t) * f.eval(t); };
    using Kernel = numerics::OscillatoryKernel;
    const auto re = numerics::integrate_oscillatory(envelope, Kernel{Kernel::Kind::cosine, omega, 0.0}, 0.0, spec);
    const auto im = numerics::integrate_oscillatory(envelope, Kernel{Kernel::Kind::sine, omega, 0.0}, 0.0, spec);
    const double sign = s.imag() > 0.0 ? -1.0 : 1.0;
    res.value = complex(re.value, sign * im.value);
    res.error_estimate = re.error_estimate + im.error_estimate;
    res.converged = re.converged && im.converged;
    res.evaluations = re.evaluations + im.evaluations;
  } else {
    auto integrand = [&](double t) { return std::exp(-s * t) * f.eval(t); };
    const double first = std::clamp(1.0 / damping, 1e-3, 10.0);
    res = numerics::integrate_semi_infinite(integrand, 0.0, spec, first);
  }
  res.value += atom_image(f, s);
  return res;
}

IntegralResult<complex> continued_laplace(const TimeOriginal& f, complex s, const QuadratureSpec& spec,
                                          double margin) {
  if (!f.eval) throw DomainError("continued_laplace: original has no evaluator");
  if (std::isfinite(f.support_upper)) return finite_support_image(f, s, spec);
  if (!f.analytic) {
    if (s.real() > f.sigma0 + margin) return forward_laplace(f, s, spec, margin);
    throw DomainError("continued_laplace: original has no holomorphic extension");
  }
  const double radius = std::abs(s);
  if (!(radius > f.exponential_type + margin)) {
    throw DomainError("continued_laplace: |s| must exceed the exponential type of the original");
  }
  const complex dir = std::conj(s) / radius;
  auto integrand = [&](double rho) { return std::exp(-radius * rho) * f.analytic(rho * dir) * dir; };
  const double first = std::clamp(1.0 / (radius - f.exponential_type), 1e-3, 10.0);
  auto res = numerics::integrate_semi_infinite(integrand, 0.0, spec, first);
  res.value += atom_image(f, s);
  return res;
}

int effective_nodes(const LaplaceImage& F, double t, int nodes) {
  int n = std::max(nodes, static_cast<int>(std::ceil(6.4 * F.singularity_height * t)));
  if (n % 2 != 0) ++n;
  return n;
}

double inverse_laplace(const LaplaceImage& F, double t, int nodes) {
  if (!F.eval) throw DomainError("inverse_laplace: image has no evaluator");
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("inverse_laplace: t must be finite and > 0");
  if (nodes < 2) throw DomainError("inverse_laplace: nodes must be >= 2");
  using ld = long double;
  constexpr ld kSigma = 0.6122L;
  constexpr ld kMu = 0.5017L;
  constexpr ld kAlpha = 0.6407L;
  constexpr ld kNu = 0.2645L;
  constexpr ld kPi = std::numbers::pi_v<ld>;

  const int n = effective_nodes(F, t, nodes);
  const ld tt = t;
  const ld scale = static_cast<ld>(n) / tt;
  const ld h = 2.0L * kPi / static_cast<ld>(n);
  const ld shift = F.sigma0 > 0.0 ? static_cast<ld>(F.sigma0) : 0.0L;
  ld acc = 0.0L;
  for (int j = 0; j < n / 2; ++j) {
    const ld th = (static_cast<ld>(j) + 0.5L) * h;
    const ld sn = std::sin(kAlpha * th);
    const ld ct = std::cos(kAlpha * th) / sn;
    const complex_ext z = scale * complex_ext(-kSigma + kMu * th * ct, kNu * th);
    const complex_ext dz = scale * complex_ext(kMu * (ct - kAlpha * th / (sn * sn)), kNu);
    const complex_ext value = F.eval(z + shift);
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
      throw DomainError("inverse_laplace: image is not finite at a contour node (singularity on the contour?)");
    }
    acc += (std::exp(z * tt) * value * dz).imag();
  }
  return static_cast<double>(std::exp(shift * tt) * h / kPi * acc);
}

LaplaceImage numerical_image(TimeOriginal f, const QuadratureSpec& spec) {
  LaplaceImage img;
  img.sigma0 = std::isfinite(f.support_upper) ? -std::numeric_limits<double>::infinity() : f.sigma0;
  if (!std::isfinite(img.sigma0)) img.sigma0 = 0.0;
  img.eval = [f = std::move(f), spec](complex_ext s_ext) {
    const complex s(static_cast<double>(s_ext.real()), static_cast<double>(s_ext.imag()));
    const auto res = (s.real() > f.sigma0 + kDefaultMargin) ? forward_laplace(f, s, spec)
                                                            : continued_laplace(f, s, spec);
    if (!res.converged) throw ConvergenceError("numerical Laplace image did not converge");
    return complex_ext(res.value.real(), res.value.imag());
  };
  return img;
}

double roundtrip_check(const TimeOriginal& f, std::span<const double> t_grid, int nodes,
                       const QuadratureSpec& spec) {
  if (f.atom) throw DomainError("roundtrip_check: original must not carry an atom");
  const LaplaceImage img = numerical_image(f, spec);
  double worst = 0.0;
  for (const double t : t_grid) {
    const double expected = f.eval(t);
    const double got = inverse_laplace(img, t, nodes);
    worst = std::max(worst, std::abs(got - expected) / std::max(std::abs(expected), 1e-12));
  }
  return worst;
}

TimeOriginal shifted(TimeOriginal f, double a) {
  if (!(a >= 0.0)) throw DomainError("shifted: a must be >= 0");
  TimeOriginal g;
  g.sigma0 = f.sigma0;
  g.support_upper = f.support_upper + a;
  if (f.atom) g.atom = Atom{f.atom->location + a, f.atom->weight};
  g.eval = [a, inner = std::move(f.eval)](double t) { return t > a ? inner(t - a) : 0.0; };
  return g;
}

TimeOriginal damped(TimeOriginal f, double b) {
  TimeOriginal g;
  g.sigma0 = f.sigma0 - b;
  g.support_upper = f.support_upper;
  if (f.atom) g.atom = Atom{f.atom->location, f.atom->weight * std::exp(-b * f.atom->location)};
  g.eval = [b, inner = f.eval](double t) { return std::exp(-b * t) * inner(t); };
  if (f.analytic) {
    g.analytic = [b, inner = std::move(f.analytic)](complex z) { return std::exp(-b * z) * inner(z); };
    g.exponential_type = f.exponential_type + std::abs(b);
  }
  return g;
}

TimeOriginal combined(const TimeOriginal& f, double alpha, const TimeOriginal& g, double beta) {
  if (f.atom && g.atom && f.atom->location != g.atom->location) {
    throw DomainError("combined: originals carry atoms at different locations");
  }
  TimeOriginal h;
  h.sigma0 = std::max(f.sigma0, g.sigma0);
  h.support_upper = std::max(f.support_upper, g.support_upper);
  if (f.atom || g.atom) {
    const double loc = f.atom ? f.atom->location : g.atom->location;
    const double w = alpha * (f.atom ? f.atom->weight : 0.0) + beta * (g.atom ? g.atom->weight : 0.0);
    h.atom = Atom{loc, w};
  }
  h.eval = [f, g, alpha, beta](double t) { return alpha * f.eval(t) + beta * g.eval(t); };
  if (f.analytic && g.analytic) {
    h.analytic = [f, g, alpha, beta](complex z) { return alpha * f.analytic(z) + beta * g.analytic(z); };
    h.exponential_type = std::max(f.exponential_type, g.exponential_type);
  }
  return h;
}

}  // namespace sdt::laplace
