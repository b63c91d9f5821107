#include "sdt/verify.hpp"

#include "sdt/errors.hpp"
#include "sdt/numerics/special.hpp"
#include "sdt/radial_fourier.hpp"
#include "sdt/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace sdt::verify {
namespace {

using Clock = std::chrono::steady_clock;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void record(VerificationReport& rep, std::vector<double> point, double lhs, double rhs, std::string error) {
  rep.sample_points.push_back(std::move(point));
  rep.lhs_values.push_back(lhs);
  rep.rhs_values.push_back(rhs);
  if (error.empty()) {
    rep.abs_errors.push_back(std::abs(lhs - rhs));
    rep.rel_errors.push_back(relative_error(lhs, rhs));
  } else {
    rep.abs_errors.push_back(kNaN);
    rep.rel_errors.push_back(kNaN);
  }
  rep.point_errors.push_back(std::move(error));
}

void finish(VerificationReport& rep, Clock::time_point start) {
  rep.passed = std::all_of(rep.point_errors.begin(), rep.point_errors.end(), [](const auto& e) { return e.empty(); });
  for (const double e : rep.rel_errors) {
    if (!(e <= rep.tolerance)) rep.passed = false;
  }
  rep.wall_time = std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

double VerificationReport::max_rel_error() const {
  double worst = 0.0;
  for (const double e : rel_errors) {
    if (std::isnan(e)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, e);
  }
  return worst;
}

bool VerifyAllResult::all_passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
}

double relative_error(double lhs, double rhs) {
  const double diff = std::abs(lhs - rhs);
  return std::abs(rhs) >= kRelFloor ? diff / std::abs(rhs) : diff;
}

std::vector<MixedSample> default_grid() {
  std::vector<MixedSample> grid;
  for (const double k : {0.0, 0.5, 1.0, 2.0}) {
    for (const double t : {0.5, 1.0, 2.0, 3.0, 5.0}) grid.push_back({k, t});
  }
  return grid;
}

VerificationReport verify_base_pair(double k, double u, std::span<const double> s_grid, double tolerance,
                                    const QuadratureSpec& spec) {
  if (!(k >= 0.0) || !(u >= 0.0)) throw DomainError("verify_base_pair: need k >= 0 and u >= 0");
  const auto start = Clock::now();
  VerificationReport rep;
  rep.pair_id = "J0-base";
  rep.dimension = 2;
  rep.original_id = "J0(k sqrt(t^2-u^2))";
  rep.coordinates = {"k", "u", "s"};
  rep.tolerance = tolerance;
  rep.engine_settings.quadrature = spec;
  rep.engine_settings.nodes = 0;
  for (const double s : s_grid) {
    const double rhs = pairs::base_pair_image(k, u, s).real();
    if (!(s > 0.0)) {
      record(rep, {k, u, s}, kNaN, rhs, "s must be > 0");
      continue;
    }
    try {
      numerics::IntegralResult<double> res;
      if (u > 0.0) {
        // t = u cosh v removes the square root at the onset t = u.
        auto integrand = [&](double v) {
          const double sh = std::sinh(v);
          return std::exp(-s * u * std::cosh(v)) * numerics::bessel_j(0.0, k * u * sh) * u * sh;
        };
        res = numerics::integrate_semi_infinite(integrand, 0.0, spec, 1.0);
      } else {
        auto integrand = [&](double t) { return std::exp(-s * t) * numerics::bessel_j(0.0, k * t); };
        res = numerics::integrate_semi_infinite(integrand, 0.0, spec, std::min(1.0 / s, 1.0));
      }
      record(rep, {k, u, s}, res.value, rhs, res.converged ? "" : "quadrature did not converge");
    } catch (const std::exception& e) {
      record(rep, {k, u, s}, kNaN, rhs, e.what());
    }
  }
  finish(rep, start);
  return rep;
}

void assert_catalog_consistency(const pairs::TestOriginal& f, const QuadratureSpec& spec) {
  const double base = f.f.sigma0;
  for (const laplace::complex s : {laplace::complex(base + 0.5, 0.0), laplace::complex(base + 1.0, 0.0),
                                   laplace::complex(base + 2.0, 0.0), laplace::complex(base + 1.0, 2.0)}) {
    const auto res = laplace::forward_laplace(f.f, s, spec);
    const laplace::complex expected = f.fhat(s);
    const double err = std::abs(res.value - expected) / std::max(std::abs(expected), kRelFloor);
    if (!res.converged || !(err <= 1e-9)) {
      throw DomainError("catalog original " + f.id + ": closed-form image disagrees with quadrature at s = " +
                        report::format_double(s.real()) + "+" + report::format_double(s.imag()) + "i");
    }
  }
}

VerificationReport verify_pair_mixed(const pairs::PairDescriptor& pair, Dimension d, const pairs::TestOriginal& f,
                                     std::span<const MixedSample> samples, const EngineSettings& settings,
                                     double tolerance) {
  pairs::require_dimension(pair, d);
  for (const auto& p : samples) {
    if (!(p.k >= 0.0)) throw DomainError("verify_pair_mixed: k must be >= 0");
    if (!(p.t >= kMinSampleTime)) {
      throw EdgeError("verify_pair_mixed: t = " + report::format_double(p.t) + " is at the support onset");
    }
  }
  assert_catalog_consistency(f, settings.quadrature);

  const auto start = Clock::now();
  VerificationReport rep;
  rep.pair_id = pair.id;
  rep.dimension = d.value();
  rep.original_id = f.id;
  rep.coordinates = {"k", "t"};
  rep.tolerance = tolerance;
  rep.engine_settings = settings;
  const int dim = d.value();
  for (const auto& [k, t] : samples) {
    double lhs = kNaN;
    double rhs = kNaN;
    std::string error;
    try {
      RadialProfile profile;
      const auto [lo, hi] = pair.radial_support(t);
      profile.support_lower = lo;
      profile.support_upper = hi;
      profile.singular_at_support_edge = std::isfinite(hi);
      profile.decay_class = DecayClass::exponential;
      profile.eval = [&, t = t](double r) { return pairs::eval_spacetime_unchecked(pair, dim, f.f.eval, r, t); };
      const auto res = radial_fourier::forward(d, profile, k, settings.quadrature);
      lhs = res.value;
      if (!res.converged) error = "radial transform did not converge";
      rhs = laplace::inverse_laplace(pairs::fl_image(pair, d, f, k), t, settings.nodes);
    } catch (const std::exception& e) {
      error = e.what();
    }
    if (error.empty() && !(std::isfinite(lhs) && std::isfinite(rhs))) error = "non-finite value";
    record(rep, {k, t}, lhs, rhs, std::move(error));
  }
  finish(rep, start);
  return rep;
}

VerificationReport verify_pair_mixed(const std::string& pair_id, Dimension d, const pairs::TestOriginal& f,
                                     std::span<const MixedSample> samples, const EngineSettings& settings,
                                     double tolerance) {
  return verify_pair_mixed(pairs::lookup(pair_id), d, f, samples, settings, tolerance);
}

std::string skip_reason(const pairs::PairDescriptor& pair, int d, const pairs::TestOriginal& f,
                        std::span<const MixedSample> grid) {
  if (!pair.dim_allowed(d)) return "dimension constraint " + pair.dim_text;
  if (!pair.locally_integrable(d)) return "space-time side not locally integrable in d = " + std::to_string(d);
  for (const auto& p : grid) {
    const auto phi = pair.fl_phi(p.k, laplace::complex_ext(1e3L, 0.0L));
    if (!(static_cast<double>(phi.real()) > f.fhat.sigma0 + laplace::kDefaultMargin)) {
      return "Re phi(k, s) stays at the abscissa of " + f.id + " as s grows (k = " + report::format_double(p.k) +
             ")";
    }
  }
  return {};
}

VerifyAllResult verify_all(std::span<const Dimension> dims, double tolerance, const VerifyAllOptions& options) {
  VerifyAllResult out;
  std::vector<const pairs::PairDescriptor*> rows = options.rows;
  if (rows.empty()) {
    for (const auto& p : pairs::registry()) rows.push_back(&p);
  }
  std::vector<MixedSample> grid;
  std::copy_if(options.grid.begin(), options.grid.end(), std::back_inserter(grid),
               [](const MixedSample& p) { return p.t >= kMinSampleTime; });

  if (!dims.empty()) {
    for (const auto& f : options.originals) assert_catalog_consistency(f, options.settings.quadrature);
  }
  for (const auto* pair : rows) {
    for (const Dimension d : dims) {
      for (const auto& f : options.originals) {
        std::string reason = skip_reason(*pair, d.value(), f, grid);
        if (!reason.empty()) {
          out.skipped.push_back({pair->id, d.value(), f.id, std::move(reason)});
          continue;
        }
        out.reports.push_back(verify_pair_mixed(*pair, d, f, grid, options.settings, tolerance));
      }
    }
  }
  if (!options.output_path.empty()) {
    report::write_file(options.output_path,
                       options.format == "json" ? report::to_json(out.reports) : report::to_text(out.reports, out.skipped));
  }
  return out;
}

}  // namespace sdt::verify
