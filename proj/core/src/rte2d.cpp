#include "sdt/rte2d.hpp"

#include "sdt/errors.hpp"
#include "sdt/numerics/special.hpp"
#include "sdt/pairs.hpp"
#include "sdt/report.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace sdt::rte2d {
namespace {

using laplace::complex_ext;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_right_half_plane(complex s, const char* what) {
  if (!(s.real() > 0.0)) throw DomainError(std::string(what) + ": requires Re s > 0");
}

}  // namespace

void TransportParams::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!ok(c) || !ok(ell) || !ok(A0)) throw DomainError("transport parameters c, ell, A0 must be finite and > 0");
}

IntensityValue intensity(const TransportParams& p, double r, double t) {
  p.validate();
  if (!(r >= 0.0) || !(t > 0.0)) throw DomainError("intensity: need r >= 0 and t > 0");
  const double ct = p.c * t;
  if (std::abs(r - ct) <= 1e-12 * std::max(1.0, ct)) {
    throw EdgeError("intensity: r = ct is the ballistic shell; only its weight is defined");
  }
  IntensityValue v;
  const double norm = p.A0 / kTwoPi;
  v.ballistic_weight = norm * std::exp(-ct / p.ell);
  if (r < ct) {
    const double q = std::sqrt((ct - r) * (ct + r));
    v.smooth = norm * std::exp((q - ct) / p.ell) / (p.ell * q);
  }
  return v;
}

complex fl_greens_avg(const TransportParams& p, double k, complex s) {
  p.validate();
  require_right_half_plane(s, "fl_greens_avg");
  const double ck = p.c * k;
  const complex z = s * s + ck * ck;
  if (z.imag() == 0.0 && z.real() <= 0.0) throw DomainError("fl_greens_avg: s^2 + c^2 k^2 on the branch cut");
  return 1.0 / std::sqrt(z);
}

complex fl_intensity(const TransportParams& p, double k, complex s) {
  require_right_half_plane(s, "fl_intensity");
  const double kappa = p.c / p.ell;
  const complex g = fl_greens_avg(p, k, s + kappa);
  const complex den = 1.0 - kappa * g;
  if (std::abs(den) <= 1e-14) throw PoleError("fl_intensity: s sits on the diffusive pole");
  return p.A0 * g / den;
}

complex fl_intensity_via_pair(const TransportParams& p, double k, complex s) {
  p.validate();
  require_right_half_plane(s, "fl_intensity_via_pair");
  const double kappa = p.c / p.ell;
  laplace::LaplaceImage resolvent;
  resolvent.sigma0 = kappa;
  resolvent.eval = [kappa](complex_ext z) { return z / (z - static_cast<long double>(kappa)); };
  const complex_ext shifted(s.real() + kappa, s.imag());
  const complex_ext v = pairs::eval_fl_ext(pairs::lookup("2.1"), 2, resolvent, p.c * k, shifted);
  return p.A0 * complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
}

laplace::LaplaceImage fl_intensity_image(const TransportParams& p, double k) {
  p.validate();
  if (!(k >= 0.0)) throw DomainError("fl_intensity_image: k must be >= 0");
  const long double kappa = p.c / p.ell;
  const double ck = p.c * k;
  const long double a0 = p.A0;
  laplace::LaplaceImage img;
  img.sigma0 = 0.0;
  img.singularity_height = ck;
  img.eval = [kappa, ck, a0](complex_ext s) { return a0 / (pairs::branch::root(ck, s + kappa) - kappa); };
  return img;
}

laplace::TimeOriginal resolvent_original(const TransportParams& p) {
  p.validate();
  const double kappa = p.c / p.ell;
  laplace::TimeOriginal f;
  f.eval = [kappa](double t) { return kappa * std::exp(kappa * t); };
  f.sigma0 = kappa;
  f.atom = laplace::Atom{0.0, 1.0};
  f.analytic = [kappa](complex z) { return kappa * std::exp(kappa * z); };
  f.exponential_type = kappa;
  return f;
}

numerics::IntegralResult<double> spatial_transform(const TransportParams& p, double k, double t,
                                                   const QuadratureSpec& spec) {
  p.validate();
  if (!(k >= 0.0) || !(t > 0.0)) throw DomainError("spatial_transform: need k >= 0 and t > 0");
  const double ct = p.c * t;
  // 2 pi r smooth(r) dr with r = ct sin(th): the 1/sqrt(c^2t^2 - r^2) edge cancels.
  auto integrand = [&](double th) {
    const double r = ct * std::sin(th);
    return p.A0 / p.ell * std::exp(ct * (std::cos(th) - 1.0) / p.ell) * r * numerics::bessel_j(0.0, k * r);
  };
  auto res = numerics::integrate_adaptive(integrand, 0.0, 0.5 * std::numbers::pi, spec);
  res.value += p.A0 * numerics::bessel_j(0.0, k * ct) * std::exp(-ct / p.ell);
  return res;
}

double check_energy(const TransportParams& p, double t, const QuadratureSpec& spec) {
  const auto res = spatial_transform(p, 0.0, t, spec);
  if (!res.converged) throw ConvergenceError("check_energy: quadrature did not converge");
  return res.value;
}

verify::VerificationReport verify_rte_mixed(const TransportParams& p, std::span<const RteSample> samples,
                                            const QuadratureSpec& spec, int nodes, double tolerance) {
  p.validate();
  const auto start = std::chrono::steady_clock::now();
  verify::VerificationReport rep;
  rep.pair_id = "rte2d";
  rep.dimension = 2;
  rep.original_id = "resolvent";
  rep.coordinates = {"k", "t"};
  rep.tolerance = tolerance;
  rep.engine_settings = {spec, nodes};
  rep.passed = true;
  for (const auto& [k, t] : samples) {
    double lhs = std::numeric_limits<double>::quiet_NaN();
    double rhs = lhs;
    std::string error;
    try {
      const auto res = spatial_transform(p, k, t, spec);
      lhs = res.value;
      if (!res.converged) error = "radial transform did not converge";
      rhs = laplace::inverse_laplace(fl_intensity_image(p, k), t, nodes);
    } catch (const std::exception& e) {
      error = e.what();
    }
    rep.sample_points.push_back({k, t});
    rep.lhs_values.push_back(lhs);
    rep.rhs_values.push_back(rhs);
    const double abs_err = std::abs(lhs - rhs);
    const double rel_err = error.empty() ? verify::relative_error(lhs, rhs) : std::numeric_limits<double>::quiet_NaN();
    rep.abs_errors.push_back(error.empty() ? abs_err : rel_err);
    rep.rel_errors.push_back(rel_err);
    if (!error.empty() || !(rel_err <= tolerance)) rep.passed = false;
    rep.point_errors.push_back(std::move(error));
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace sdt::rte2d
