#pragma once

#include "sdt/catalog.hpp"
#include "sdt/pairs.hpp"

#include <span>
#include <string>
#include <vector>

namespace sdt::verify {

using numerics::QuadratureSpec;

inline constexpr double kRelFloor = 1e-12;
inline constexpr double kDefaultMixedTolerance = 1e-6;
inline constexpr double kDefaultBaseTolerance = 1e-8;
inline constexpr int kDefaultNodes = 48;
/// Smallest sample time; below it the support collapses onto its edge.
inline constexpr double kMinSampleTime = 1e-3;

struct EngineSettings {
  QuadratureSpec quadrature;
  int nodes = kDefaultNodes;
};

struct VerificationReport {
  std::string pair_id;
  int dimension = 0;
  std::string original_id;
  /// Names of the sample coordinates, ("k", "t") or ("k", "u", "s").
  std::vector<std::string> coordinates;
  std::vector<std::vector<double>> sample_points;
  std::vector<double> lhs_values;
  std::vector<double> rhs_values;
  std::vector<double> abs_errors;
  std::vector<double> rel_errors;
  /// Empty for points that evaluated; the engine message otherwise.
  std::vector<std::string> point_errors;
  double tolerance = 0.0;
  bool passed = false;
  double wall_time = 0.0;
  EngineSettings engine_settings;

  [[nodiscard]] double max_rel_error() const;
};

/// |lhs - rhs| / |rhs|, or the absolute error when |rhs| < 1e-12.
double relative_error(double lhs, double rhs);

struct MixedSample {
  double k;
  double t;
};

/// k in {0, 0.5, 1, 2} x t in {0.5, 1, 2, 3, 5}.
std::vector<MixedSample> default_grid();

/// L[J0(k sqrt(t^2-u^2)) Theta(t-u)](s) by quadrature (t = u cosh v) against
/// e^{-u sqrt(s^2+k^2)}/sqrt(s^2+k^2).
VerificationReport verify_base_pair(double k, double u, std::span<const double> s_grid,
                                    double tolerance = kDefaultBaseTolerance, const QuadratureSpec& spec = {});

/// Compares, at each (k, t), the radial Fourier transform of the space-time side
/// with the numerical Laplace inversion of the Fourier-Laplace side.
/// Throws ConstraintError for an inadmissible d and EdgeError for t < 1e-3.
VerificationReport verify_pair_mixed(const pairs::PairDescriptor& pair, Dimension d, const pairs::TestOriginal& f,
                                     std::span<const MixedSample> samples, const EngineSettings& settings = {},
                                     double tolerance = kDefaultMixedTolerance);
VerificationReport verify_pair_mixed(const std::string& pair_id, Dimension d, const pairs::TestOriginal& f,
                                     std::span<const MixedSample> samples, const EngineSettings& settings = {},
                                     double tolerance = kDefaultMixedTolerance);

/// Throws DomainError unless forward_laplace(f) matches the closed-form image to
/// 1e-9 at a few points right of the abscissa.
void assert_catalog_consistency(const pairs::TestOriginal& f, const QuadratureSpec& spec = {});

/// Why (pair, d, f) is not run, or empty when it is admissible.
std::string skip_reason(const pairs::PairDescriptor& pair, int d, const pairs::TestOriginal& f,
                        std::span<const MixedSample> grid);

struct SkipRecord {
  std::string pair_id;
  int dimension;
  std::string original_id;
  std::string reason;
};

struct VerifyAllOptions {
  std::vector<pairs::TestOriginal> originals = pairs::catalog_list();
  std::vector<const pairs::PairDescriptor*> rows;  // empty: the whole registry
  std::vector<MixedSample> grid = default_grid();
  EngineSettings settings;
  std::string output_path;  // empty: no file
  std::string format = "text";  // "text" or "json"
};

struct VerifyAllResult {
  std::vector<VerificationReport> reports;
  std::vector<SkipRecord> skipped;
  [[nodiscard]] bool all_passed() const;
};

VerifyAllResult verify_all(std::span<const Dimension> dims, double tolerance, const VerifyAllOptions& options = {});

}  // namespace sdt::verify
