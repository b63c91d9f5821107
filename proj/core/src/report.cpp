#include "sdt/report.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sdt::report {
namespace {

nlohmann::json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

nlohmann::json numbers(const std::vector<double>& vs) {
  auto arr = nlohmann::json::array();
  for (const double v : vs) arr.push_back(number(v));
  return arr;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string to_text(std::span<const verify::VerificationReport> reports,
                    std::span<const verify::SkipRecord> skipped) {
  std::ostringstream os;
  for (const auto& rep : reports) {
    const std::string head = "pair=" + rep.pair_id + " d=" + std::to_string(rep.dimension) + " f=" + rep.original_id;
    for (std::size_t i = 0; i < rep.sample_points.size(); ++i) {
      os << "record " << head;
      for (std::size_t c = 0; c < rep.coordinates.size() && c < rep.sample_points[i].size(); ++c) {
        os << ' ' << rep.coordinates[c] << '=' << format_double(rep.sample_points[i][c]);
      }
      os << " lhs=" << format_double(rep.lhs_values[i]) << " rhs=" << format_double(rep.rhs_values[i])
         << " abs_err=" << format_double(rep.abs_errors[i]) << " rel_err=" << format_double(rep.rel_errors[i])
         << " status=" << (rep.point_errors[i].empty() ? "ok" : "error: " + rep.point_errors[i]) << '\n';
    }
    os << "summary " << head << " points=" << rep.sample_points.size()
       << " max_rel_err=" << format_double(rep.max_rel_error()) << " tol=" << format_double(rep.tolerance)
       << " passed=" << (rep.passed ? "true" : "false") << '\n';
  }
  for (const auto& s : skipped) {
    os << "skipped pair=" << s.pair_id << " d=" << s.dimension << " f=" << s.original_id << " reason=" << s.reason
       << '\n';
  }
  return os.str();
}

std::string to_json(std::span<const verify::VerificationReport> reports) {
  auto arr = nlohmann::json::array();
  for (const auto& rep : reports) {
    nlohmann::json j;
    j["schema"] = 1;
    j["pair_id"] = rep.pair_id;
    j["dimension"] = rep.dimension;
    j["test_original"] = rep.original_id;
    j["coordinates"] = rep.coordinates;
    auto points = nlohmann::json::array();
    for (const auto& p : rep.sample_points) points.push_back(numbers(p));
    j["sample_points"] = points;
    j["lhs_values"] = numbers(rep.lhs_values);
    j["rhs_values"] = numbers(rep.rhs_values);
    j["abs_errors"] = numbers(rep.abs_errors);
    j["rel_errors"] = numbers(rep.rel_errors);
    j["point_errors"] = rep.point_errors;
    j["tolerance"] = rep.tolerance;
    j["passed"] = rep.passed;
    j["wall_time"] = rep.wall_time;
    const auto& q = rep.engine_settings.quadrature;
    j["engine_settings"] = {{"abs_tol", q.abs_tol},
                            {"rel_tol", q.rel_tol},
                            {"max_subdivisions", q.max_subdivisions},
                            {"max_oscillation_cells", q.max_oscillation_cells},
                            {"truncation_threshold", q.truncation_threshold},
                            {"nodes", rep.engine_settings.nodes}};
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace sdt::report
