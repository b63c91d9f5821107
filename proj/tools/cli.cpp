#include "cli.hpp"

#include "sdt/catalog.hpp"
#include "sdt/errors.hpp"
#include "sdt/pairs.hpp"
#include "sdt/radial_fourier.hpp"
#include "sdt/report.hpp"
#include "sdt/rte2d.hpp"
#include "sdt/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace sdt::cli {
namespace {

using report::format_double;

struct GlobalOptions {
  std::optional<double> tol;
  int nodes = verify::kDefaultNodes;
  std::string out;
  std::string format;
};

// Raised for configurations rejected before any computation.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const GlobalOptions& g, std::ostream& out, const std::string& content) {
  if (g.out.empty()) {
    out << content;
  } else {
    report::write_file(g.out, content);
  }
}

std::string verify_csv(std::span<const verify::VerificationReport> reports) {
  std::ostringstream os;
  os << "pair,d,f,k,t,lhs,rhs,abs_err,rel_err,status\n";
  for (const auto& rep : reports) {
    for (std::size_t i = 0; i < rep.sample_points.size(); ++i) {
      const auto& p = rep.sample_points[i];
      os << rep.pair_id << ',' << rep.dimension << ',' << rep.original_id << ',' << format_double(p.at(0)) << ','
         << format_double(p.size() > 1 ? p[1] : 0.0) << ',' << format_double(rep.lhs_values[i]) << ','
         << format_double(rep.rhs_values[i]) << ',' << format_double(rep.abs_errors[i]) << ','
         << format_double(rep.rel_errors[i]) << ',' << (rep.point_errors[i].empty() ? "ok" : "error") << '\n';
    }
  }
  return os.str();
}

std::string render_reports(const GlobalOptions& g, std::span<const verify::VerificationReport> reports,
                           std::span<const verify::SkipRecord> skipped) {
  if (g.format == "json-report") return report::to_json(reports);
  if (g.format == "csv") return verify_csv(reports);
  return report::to_text(reports, skipped);
}

std::vector<Dimension> to_dims(const std::vector<int>& ds) {
  std::vector<Dimension> dims;
  for (const int d : ds) {
    if (d < 1) throw ConfigError("dimension must be >= 1, got " + std::to_string(d));
    dims.emplace_back(d);
  }
  return dims;
}

int cmd_pairs(const GlobalOptions& g, const std::string& id, std::ostream& out) {
  std::vector<const pairs::PairDescriptor*> rows;
  if (id.empty()) {
    for (const auto& p : pairs::registry()) rows.push_back(&p);
  } else {
    rows.push_back(&pairs::lookup(id));
  }
  emit(g, out, pairs::registry_text(rows));
  return kOk;
}

struct VerifyArgs {
  std::string pair = "all";
  std::vector<int> dims = {2};
  std::vector<std::string> originals = {"all"};
  std::vector<double> k;
  std::vector<double> t;
  std::vector<double> u = {0.0, 0.5, 1.0, 2.0};
  std::vector<double> s = {0.5, 1.0, 2.0, 4.0};
};

int cmd_verify(const GlobalOptions& g, const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  if (g.nodes < 2) throw ConfigError("--nodes must be >= 2");
  if (a.pair == "base") {
    const double tol = g.tol.value_or(verify::kDefaultBaseTolerance);
    std::vector<double> ks = a.k.empty() ? std::vector<double>{0.0, 0.5, 1.0, 2.0} : a.k;
    std::vector<verify::VerificationReport> reports;
    for (const double k : ks) {
      for (const double u : a.u) reports.push_back(verify::verify_base_pair(k, u, a.s, tol));
    }
    emit(g, out, render_reports(g, reports, {}));
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    return ok ? kOk : kCheckFailed;
  }

  const auto dims = to_dims(a.dims);
  verify::VerifyAllOptions opts;
  opts.settings.nodes = g.nodes;
  if (a.pair != "all") {
    const auto& row = pairs::lookup(a.pair);
    for (const Dimension d : dims) pairs::require_dimension(row, d);
    opts.rows = {&row};
  }
  if (!(a.originals.size() == 1 && a.originals[0] == "all")) {
    opts.originals.clear();
    for (const auto& spec : a.originals) opts.originals.push_back(pairs::make_original(spec));
  }
  if (!a.k.empty() || !a.t.empty()) {
    std::vector<double> ks = a.k.empty() ? std::vector<double>{0.0, 0.5, 1.0, 2.0} : a.k;
    std::vector<double> ts = a.t.empty() ? std::vector<double>{0.5, 1.0, 2.0, 3.0, 5.0} : a.t;
    opts.grid.clear();
    for (const double k : ks) {
      for (const double t : ts) {
        if (k < 0.0) throw ConfigError("k must be >= 0");
        if (t < verify::kMinSampleTime) throw ConfigError("t = " + format_double(t) + " is at the support onset");
        opts.grid.push_back({k, t});
      }
    }
  }
  const double tol = g.tol.value_or(verify::kDefaultMixedTolerance);
  const auto result = verify::verify_all(dims, tol, opts);
  emit(g, out, render_reports(g, result.reports, result.skipped));
  for (const auto& s : result.skipped) {
    err << "skipped " << s.pair_id << " d=" << s.dimension << " " << s.original_id << ": " << s.reason << '\n';
  }
  for (const auto& r : result.reports) {
    err << (r.passed ? "PASS " : "FAIL ") << r.pair_id << " d=" << r.dimension << " " << r.original_id
        << " max_rel_err=" << format_double(r.max_rel_error()) << '\n';
  }
  if (result.reports.empty()) {
    err << "nothing was verified\n";
    return kCheckFailed;
  }
  return result.all_passed() ? kOk : kCheckFailed;
}

struct RteArgs {
  rte2d::TransportParams params;
  std::vector<double> t;
  std::vector<double> r;
  bool energy = false;
  std::string energy_out;
};

int cmd_rte(const GlobalOptions& g, const RteArgs& a, std::ostream& out) {
  try {
    a.params.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (a.t.empty()) throw ConfigError("rte: --t is required");
  if (a.r.empty() && !a.energy) throw ConfigError("rte: give --r or --energy");
  for (const double t : a.t) {
    if (!(t > 0.0)) throw ConfigError("rte: t must be > 0");
    for (const double r : a.r) {
      if (!(r >= 0.0)) throw ConfigError("rte: r must be >= 0");
      const double ct = a.params.c * t;
      if (std::abs(r - ct) <= 1e-12 * std::max(1.0, ct)) {
        throw ConfigError("rte: grid point r = " + format_double(r) + ", t = " + format_double(t) +
                          " lies on the ballistic shell r = ct; the atom has a weight, not a value");
      }
    }
  }

  std::ostringstream grid;
  if (!a.r.empty()) {
    grid << "r,t,smooth,ballistic_weight\n";
    for (const double t : a.t) {
      for (const double r : a.r) {
        const auto v = rte2d::intensity(a.params, r, t);
        grid << format_double(r) << ',' << format_double(t) << ',' << format_double(v.smooth) << ','
             << format_double(v.ballistic_weight) << '\n';
      }
    }
  }
  std::ostringstream energy;
  bool ok = true;
  if (a.energy) {
    energy << "t,energy\n";
    for (const double t : a.t) {
      double e = std::numeric_limits<double>::quiet_NaN();
      try {
        e = rte2d::check_energy(a.params, t);
      } catch (const ConvergenceError&) {
        ok = false;
      }
      energy << format_double(t) << ',' << format_double(e) << '\n';
    }
  }

  if (!a.r.empty()) {
    emit(g, out, grid.str());
  }
  if (a.energy) {
    std::string path = a.energy_out;
    if (path.empty() && !g.out.empty() && !a.r.empty()) path = g.out + ".energy.csv";
    if (path.empty() && !g.out.empty()) path = g.out;
    if (path.empty()) {
      if (!a.r.empty()) out << '\n';
      out << energy.str();
    } else {
      report::write_file(path, energy.str());
    }
  }
  return ok ? kOk : kCheckFailed;
}

struct TransformArgs {
  std::string direction = "forward";
  int dim = 0;
  std::string profile;
  std::vector<double> x;
};

int cmd_transform(const GlobalOptions& g, const TransformArgs& a, std::ostream& out) {
  if (a.dim < 1) throw ConfigError("transform: --dim must be >= 1");
  if (a.direction != "forward" && a.direction != "inverse") {
    throw ConfigError("transform: --direction must be forward or inverse");
  }
  if (a.x.empty()) throw ConfigError("transform: --x is required");
  for (const double x : a.x) {
    if (!(x >= 0.0)) throw ConfigError("transform: grid values must be >= 0");
  }
  const Dimension d(a.dim);
  const auto named = radial_fourier::named_profile(a.profile, d);
  numerics::QuadratureSpec spec;
  if (g.tol) {
    spec.rel_tol = *g.tol;
    spec.abs_tol = std::min(spec.abs_tol, *g.tol);
  }
  spec.validate();

  std::ostringstream os;
  os << "x,value,error_estimate,converged\n";
  bool ok = true;
  for (const double x : a.x) {
    numerics::IntegralResult<double> res;
    res.value = std::numeric_limits<double>::quiet_NaN();
    res.error_estimate = std::numeric_limits<double>::quiet_NaN();
    try {
      res = a.direction == "forward" ? radial_fourier::forward(d, named.profile, x, spec)
                                     : radial_fourier::inverse(d, named.profile, x, spec);
    } catch (const std::exception&) {
      res.converged = false;
    }
    if (!res.converged || !std::isfinite(res.value)) ok = false;
    os << format_double(x) << ',' << format_double(res.value) << ',' << format_double(res.error_estimate) << ','
       << (res.converged ? "true" : "false") << '\n';
  }
  emit(g, out, os.str());
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simultaneous Fourier-Laplace transform pairs: registry, verification, radiative transfer"};
  app.require_subcommand(1);

  GlobalOptions g;
  auto add_globals = [&g](CLI::App* cmd) {
    cmd->add_option("--tol", g.tol, "Tolerance (verification pass threshold or quadrature rel_tol)");
    cmd->add_option("--nodes", g.nodes, "Talbot inversion nodes")->capture_default_str();
    cmd->add_option("--out", g.out, "Output file (default: stdout)");
    cmd->add_option("--format", g.format, "Output format (csv, json-report, text-table)")
        ->check(CLI::IsMember({"csv", "json-report", "text-table"}));
  };

  std::string pair_id;
  auto* pairs_cmd = app.add_subcommand("pairs", "List the transform-pair registry");
  pairs_cmd->add_option("--id", pair_id, "Show a single row");

  VerifyArgs va;
  auto* verify_cmd = app.add_subcommand("verify", "Verify pairs by the mixed (k, t) comparison");
  verify_cmd->add_option("--pair", va.pair, "Row id, 'all', or 'base' for the J0 base identity");
  verify_cmd->add_option("--dim", va.dims, "Dimensions")->delimiter(',');
  verify_cmd->add_option("--f", va.originals, "Test originals (name:p1,p2) or 'all'")->delimiter(';');
  verify_cmd->add_option("--k", va.k, "Wavenumbers")->delimiter(',');
  verify_cmd->add_option("--t", va.t, "Times")->delimiter(',');
  verify_cmd->add_option("--u", va.u, "Base identity: u values")->delimiter(',');
  verify_cmd->add_option("--s", va.s, "Base identity: Laplace parameters")->delimiter(',');

  RteArgs ra;
  auto* rte_cmd = app.add_subcommand("rte", "Two-dimensional radiative transfer intensity");
  rte_cmd->add_option("--c", ra.params.c, "Celerity")->capture_default_str();
  rte_cmd->add_option("--ell", ra.params.ell, "Extinction length")->capture_default_str();
  rte_cmd->add_option("--A0", ra.params.A0, "Initial energy")->capture_default_str();
  rte_cmd->add_option("--t", ra.t, "Times")->delimiter(',');
  rte_cmd->add_option("--r", ra.r, "Radii")->delimiter(',');
  rte_cmd->add_flag("--energy", ra.energy, "Also emit the t,energy table");
  rte_cmd->add_option("--energy-out", ra.energy_out, "File for the t,energy table");

  TransformArgs ta;
  auto* transform_cmd = app.add_subcommand("transform", "Radial Fourier transform of a named profile");
  transform_cmd->add_option("--direction", ta.direction, "forward or inverse")->capture_default_str();
  transform_cmd->add_option("--dim", ta.dim, "Dimension")->required();
  transform_cmd->add_option("--profile", ta.profile, "Profile name")->required();
  transform_cmd->add_option("--x", ta.x, "Evaluation points (k or r)")->delimiter(',')->required();

  add_globals(pairs_cmd);
  add_globals(verify_cmd);
  add_globals(rte_cmd);
  add_globals(transform_cmd);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }
  if (g.format.empty()) g.format = (*rte_cmd || *transform_cmd) ? "csv" : "text-table";

  try {
    if (*pairs_cmd) return cmd_pairs(g, pair_id, out);
    if (*verify_cmd) return cmd_verify(g, va, out, err);
    if (*rte_cmd) return cmd_rte(g, ra, out);
    if (*transform_cmd) return cmd_transform(g, ta, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const UnknownIdError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kConfigError;
}

}  // namespace sdt::cli
