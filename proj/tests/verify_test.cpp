#include "oracle.hpp"

#include "sdt/errors.hpp"
#include "sdt/report.hpp"
#include "sdt/verify.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>

namespace {

using namespace sdt;
using namespace sdt::verify;

std::vector<MixedSample> one(double k, double t) { return {{k, t}}; }

TEST(RelativeError, AbsoluteFallbackBelowFloor) {
  EXPECT_NEAR(relative_error(1.1, 1.0), 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(relative_error(3e-13, 0.0), 3e-13);
  EXPECT_DOUBLE_EQ(relative_error(2e-12, 1e-12), 1.0);
}

TEST(DefaultGrid, TwentyPoints) {
  const auto g = default_grid();
  ASSERT_EQ(g.size(), 20u);
  EXPECT_EQ(g.front().k, 0.0);
  EXPECT_EQ(g.front().t, 0.5);
  EXPECT_EQ(g.back().k, 2.0);
  EXPECT_EQ(g.back().t, 5.0);
}

TEST(BasePair, Examples) {
  const std::vector<double> s{1.0};
  // independent oracle: Simpson on t = u + x^2, which removes the square-root onset
  auto oracle = [](double k, double u, double s) {
    auto g = [&](double x) {
      const double t = u + x * x;
      return std::exp(-s * t) * std::cyl_bessel_j(0.0, k * std::sqrt(t * t - u * u)) * 2.0 * x;
    };
    return sdt_test::simpson(g, 0.0, 8.0, 200000);
  };
  auto r = verify_base_pair(1.0, 0.5, s);
  EXPECT_NEAR(r.rhs_values[0], std::exp(-0.5 * std::sqrt(2.0)) / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(r.lhs_values[0], oracle(1.0, 0.5, 1.0), 1e-9);
  EXPECT_TRUE(r.passed);

  r = verify_base_pair(0.0, 1.0, s);
  EXPECT_NEAR(r.lhs_values[0], std::exp(-1.0), 1e-12);
  EXPECT_NEAR(r.rhs_values[0], std::exp(-1.0), 1e-15);

  r = verify_base_pair(1.0, 0.0, s);
  EXPECT_NEAR(r.lhs_values[0], 1.0 / std::sqrt(2.0), 1e-10);
  EXPECT_TRUE(r.passed);
}

TEST(BasePair, FullGrid) {
  const std::vector<double> s{0.5, 1.0, 2.0, 4.0};
  for (const double k : {0.0, 0.5, 1.0, 2.0}) {
    for (const double u : {0.0, 0.5, 1.0, 2.0}) {
      const auto r = verify_base_pair(k, u, s);
      EXPECT_TRUE(r.passed) << "k=" << k << " u=" << u << " max=" << r.max_rel_error();
    }
  }
}

TEST(BasePair, BadSIsAFailedPointNotASkip) {
  const std::vector<double> s{1.0, -1.0};
  const auto r = verify_base_pair(1.0, 0.5, s);
  ASSERT_EQ(r.sample_points.size(), 2u);
  EXPECT_FALSE(r.point_errors[1].empty());
  EXPECT_FALSE(r.passed);
}

TEST(Mixed, RowTwoOneExample) {
  // Both sides equal int_0^1 J0(sqrt(1-u^2)) e^{-u} du.
  const double oracle = sdt_test::simpson(
      [](double u) { return std::cyl_bessel_j(0.0, std::sqrt(std::max(0.0, 1.0 - u * u))) * std::exp(-u); }, 0.0, 1.0,
      20000);
  const auto r = verify_pair_mixed("2.1", Dimension(2), pairs::exp_decay(1.0), one(1.0, 1.0));
  EXPECT_NEAR(r.lhs_values[0], oracle, 1e-9);
  EXPECT_NEAR(r.rhs_values[0], oracle, 1e-9);
  EXPECT_TRUE(r.passed);
}

TEST(Mixed, RowTwoTwoAtZeroWavenumber) {
  const auto r = verify_pair_mixed("2.2", Dimension(2), pairs::exp_decay(1.0), one(0.0, 1.0));
  EXPECT_NEAR(r.rhs_values[0], 1.0, 1e-10);
  EXPECT_NEAR(r.lhs_values[0], 1.0, 1e-10);
}

TEST(Mixed, RejectsEdgeAndConstraint) {
  EXPECT_THROW(verify_pair_mixed("2.1", Dimension(2), pairs::unit(), one(1.0, 0.0)), EdgeError);
  EXPECT_THROW(verify_pair_mixed("1.3", Dimension(2), pairs::exp_decay(1.0), one(1.0, 1.0)), ConstraintError);
  EXPECT_THROW(verify_pair_mixed("7.7", Dimension(2), pairs::exp_decay(1.0), one(1.0, 1.0)), UnknownIdError);
}

TEST(Mixed, CatalogConsistencyIsAsserted) {
  auto bad = pairs::exp_decay(1.0);
  bad.fhat.eval = [](laplace::complex_ext s) { return 1.0L / (s + 2.0L); };
  EXPECT_THROW(assert_catalog_consistency(bad), DomainError);
  EXPECT_THROW(verify_pair_mixed("2.1", Dimension(2), bad, one(1.0, 1.0)), DomainError);
}

TEST(Mixed, Deterministic) {
  const auto grid = default_grid();
  const auto a = verify_pair_mixed("1.5", Dimension(3), pairs::poly_exp(1, 1.0), grid);
  const auto b = verify_pair_mixed("1.5", Dimension(3), pairs::poly_exp(1, 1.0), grid);
  EXPECT_EQ(a.lhs_values, b.lhs_values);
  EXPECT_EQ(a.rhs_values, b.rhs_values);
  EXPECT_EQ(a.rel_errors, b.rel_errors);
}

TEST(Mixed, RefinementDoesNotDegrade) {
  // Tighter quadrature plus doubled nodes; Talbot roundoff grows with the node
  // count, so increases inside the 1e-10 noise band are not counted.
  const auto grid = default_grid();
  EngineSettings fine;
  fine.quadrature = QuadratureSpec{}.scaled(0.01);
  fine.nodes = 2 * kDefaultNodes;
  for (const char* id : {"1.2", "1.4", "2.1", "2.3"}) {
    const auto base = verify_pair_mixed(id, Dimension(3), pairs::exp_decay(1.0), grid);
    ASSERT_TRUE(base.passed) << id;
    const auto refined = verify_pair_mixed(id, Dimension(3), pairs::exp_decay(1.0), grid, fine);
    EXPECT_LE(refined.max_rel_error(), std::max(base.max_rel_error(), 1e-10)) << id;
  }
}

TEST(Mixed, TwoRootFormOfRowTwoFour) {
  const auto row = pairs::row_2_4_two_root();
  const auto grid = default_grid();
  for (int d = 1; d <= 3; ++d) {
    for (const auto& f : {pairs::exp_decay(1.0), pairs::poly_exp(1, 1.0)}) {
      const auto r = verify_pair_mixed(row, Dimension(d), f, grid);
      EXPECT_TRUE(r.passed) << "d=" << d << " " << f.id << " max=" << r.max_rel_error();
    }
  }
}

TEST(Mixed, TabulatedRowTwoFourDisagrees) {
  const auto r = verify_pair_mixed("2.4", Dimension(2), pairs::exp_decay(1.0), one(0.0, 1.0));
  EXPECT_GT(r.rel_errors[0], 1e-2);
  EXPECT_FALSE(r.passed);
}

TEST(SkipReason, Rules) {
  const auto grid = default_grid();
  EXPECT_NE(skip_reason(pairs::lookup("1.3"), 2, pairs::exp_decay(1.0), grid).find("dimension"), std::string::npos);
  EXPECT_FALSE(skip_reason(pairs::lookup("1.3"), 1, pairs::exp_decay(1.0), grid).empty());
  EXPECT_FALSE(skip_reason(pairs::lookup("2.2"), 2, pairs::unit(), grid).empty());
  EXPECT_TRUE(skip_reason(pairs::lookup("2.1"), 2, pairs::unit(), grid).empty());
}

TEST(VerifyAll, EmptyDimensionList) {
  const auto res = verify_all({}, 1e-6);
  EXPECT_TRUE(res.reports.empty());
  EXPECT_TRUE(res.skipped.empty());
}

TEST(VerifyAll, AcceptanceOriginals) {
  VerifyAllOptions opt;
  opt.originals = {pairs::exp_decay(1.0), pairs::poly_exp(1, 1.0)};
  const std::vector<Dimension> dims{Dimension(2), Dimension(3)};
  const auto res = verify_all(dims, 1e-6, opt);
  bool skipped_13 = false;
  for (const auto& s : res.skipped) skipped_13 = skipped_13 || (s.pair_id == "1.3" && s.dimension == 2);
  EXPECT_TRUE(skipped_13);
  EXPECT_EQ(res.reports.size(), 2u * (9 * 2 - 1));
  for (const auto& r : res.reports) {
    EXPECT_GE(r.sample_points.size(), 20u);
    if (r.pair_id == "2.4") {
      EXPECT_FALSE(r.passed);  // tabulated row does not satisfy the pair
    } else {
      EXPECT_TRUE(r.passed) << r.pair_id << " d=" << r.dimension << " " << r.original_id << " " << r.max_rel_error();
    }
  }
  EXPECT_FALSE(res.all_passed());
}

TEST(VerifyAll, UnreachableToleranceFailsHonestly) {
  VerifyAllOptions opt;
  opt.originals = {pairs::exp_decay(1.0)};
  opt.rows = {&pairs::lookup("2.1"), &pairs::lookup("1.4")};
  const std::vector<Dimension> dims{Dimension(2)};
  const auto res = verify_all(dims, 1e-15, opt);
  ASSERT_EQ(res.reports.size(), 2u);
  for (const auto& r : res.reports) EXPECT_FALSE(r.passed) << r.pair_id;
}

TEST(VerifyAll, PassedMatchesMaxError) {
  VerifyAllOptions opt;
  opt.originals = {pairs::poly_exp(2, 1.0), pairs::sine(1.0)};
  const std::vector<Dimension> dims{Dimension(1), Dimension(2)};
  for (const auto& r : verify_all(dims, 1e-6, opt).reports) {
    EXPECT_EQ(r.passed, r.max_rel_error() <= r.tolerance) << r.pair_id;
    EXPECT_EQ(r.lhs_values.size(), r.sample_points.size());
    EXPECT_EQ(r.rhs_values.size(), r.sample_points.size());
  }
}

TEST(Report, TextFormat) {
  const auto r = verify_pair_mixed("2.1", Dimension(2), pairs::exp_decay(1.0), one(1.0, 1.0));
  const std::vector<VerificationReport> reps{r};
  const std::vector<SkipRecord> skipped{{"1.3", 2, "unit", "dimension constraint d != 2"}};
  const std::string text = report::to_text(reps, skipped);
  EXPECT_EQ(text.rfind("record pair=2.1 d=2 f=exp_decay:1 k=1 t=1 lhs=", 0), 0u);
  EXPECT_NE(text.find("status=ok\nsummary pair=2.1 d=2 f=exp_decay:1 points=1 max_rel_err="), std::string::npos);
  EXPECT_NE(text.find("passed=true\nskipped pair=1.3 d=2 f=unit reason="), std::string::npos);
}

TEST(Report, FormatDoubleRoundTrips) {
  sdt_test::Gen gen(51);
  for (int i = 0; i < 200; ++i) {
    const double v = gen.uniform(-1, 1) * std::pow(10.0, gen.integer(-300, 300));
    EXPECT_EQ(std::stod(report::format_double(v)), v);
  }
  EXPECT_EQ(report::format_double(std::nan("")), "nan");
  EXPECT_EQ(report::format_double(1.0), "1");
}

TEST(Report, JsonSchema) {
  auto r = verify_pair_mixed("2.1", Dimension(2), pairs::exp_decay(1.0), one(1.0, 1.0));
  r.rel_errors.push_back(std::nan(""));
  const std::vector<VerificationReport> reps{r};
  const auto j = nlohmann::json::parse(report::to_json(reps));
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 1u);
  const auto& o = j[0];
  EXPECT_EQ(o["schema"], 1);
  for (const char* key : {"pair_id", "dimension", "test_original", "sample_points", "lhs_values", "rhs_values",
                          "abs_errors", "rel_errors", "tolerance", "passed", "wall_time", "engine_settings"}) {
    EXPECT_TRUE(o.contains(key)) << key;
  }
  EXPECT_EQ(o["pair_id"], "2.1");
  EXPECT_TRUE(o["rel_errors"].back().is_null());
  EXPECT_EQ(o["engine_settings"]["nodes"], kDefaultNodes);
}

TEST(Report, WriteFile) {
  const auto path = std::filesystem::temp_directory_path() / "sdt_report_test.txt";
  report::write_file(path.string(), "abc\n");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "abc");
  std::filesystem::remove(path);
  EXPECT_THROW(report::write_file("/nonexistent-dir/x/y.txt", "z"), std::runtime_error);
}

}  // namespace
