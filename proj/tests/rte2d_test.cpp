#include "oracle.hpp"

#include "sdt/errors.hpp"
#include "sdt/pairs.hpp"
#include "sdt/rte2d.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace {

using namespace sdt;
using namespace sdt::rte2d;
constexpr double kPi = std::numbers::pi;

// Smooth part written out independently of the library.
double smooth_oracle(const TransportParams& p, double r, double t) {
  if (r >= p.c * t) return 0.0;
  const double q = std::sqrt(p.c * p.c * t * t - r * r);
  return p.A0 / (2 * kPi) * std::exp(q / p.ell) / (p.ell * q) * std::exp(-p.c * t / p.ell);
}

TEST(Params, Validation) {
  EXPECT_NO_THROW(TransportParams{}.validate());
  EXPECT_THROW((TransportParams{0.0, 1.0, 1.0}.validate()), DomainError);
  EXPECT_THROW((TransportParams{1.0, -1.0, 1.0}.validate()), DomainError);
  EXPECT_THROW((TransportParams{1.0, 1.0, std::nan("")}.validate()), DomainError);
}

TEST(Intensity, Examples) {
  const TransportParams p;
  // 30-digit evaluation of the closed form: 0.160733007929697990947...
  EXPECT_NEAR(intensity(p, 0.5, 1.0).smooth, 0.160733007929698, 1e-15);
  EXPECT_EQ(intensity(p, 2.0, 1.0).smooth, 0.0);
  for (const double r : {0.0, 0.3, 2.0}) {
    EXPECT_NEAR(intensity(p, r, 1.0).ballistic_weight, std::exp(-1.0) / (2 * kPi), 1e-16);
  }
  EXPECT_THROW(intensity(p, 1.0, 1.0), EdgeError);
  EXPECT_THROW(intensity(p, -1.0, 1.0), DomainError);
}

TEST(Intensity, MatchesClosedForm) {
  sdt_test::Gen gen(61);
  for (int i = 0; i < 300; ++i) {
    const TransportParams p{gen.log_uniform(0.1, 10), gen.log_uniform(0.1, 10), gen.log_uniform(0.1, 10)};
    const double t = gen.log_uniform(0.01, 10);
    const double r = gen.uniform(0.0, 2.0) * p.c * t;
    if (std::abs(r - p.c * t) < 1e-9 * p.c * t) continue;
    const auto v = intensity(p, r, t);
    const double expected = smooth_oracle(p, r, t);
    EXPECT_NEAR(v.smooth, expected, 1e-13 * std::max(1e-300, expected));
    EXPECT_GE(v.smooth, 0.0);
    EXPECT_GE(v.ballistic_weight, 0.0);
  }
}

TEST(Intensity, Causality) {
  sdt_test::Gen gen(62);
  for (int i = 0; i < 200; ++i) {
    const TransportParams p{gen.log_uniform(0.1, 10), gen.log_uniform(0.1, 10), 1.0};
    const double t = gen.log_uniform(0.01, 10);
    const double r = p.c * t * gen.uniform(1.0001, 5.0);
    EXPECT_EQ(intensity(p, r, t).smooth, 0.0);
  }
}

TEST(Intensity, WeakScatteringLimit) {
  const TransportParams strong;
  const TransportParams weak{1.0, 1e6, 1.0};
  for (const double r : {0.0, 0.5, 0.9}) {
    EXPECT_LT(intensity(weak, r, 1.0).smooth, 1e-5 * intensity(strong, r, 1.0).smooth);
  }
}

TEST(GreensAvg, Examples) {
  EXPECT_NEAR(fl_greens_avg(TransportParams{}, 0.0, 2.0).real(), 0.5, 1e-16);
  EXPECT_NEAR(fl_greens_avg(TransportParams{}, 1.0, 1.0).real(), 1.0 / std::sqrt(2.0), 1e-16);
  EXPECT_NEAR(fl_greens_avg(TransportParams{2.0, 1.0, 1.0}, 1.0, 1e-4).real(), 0.5, 1e-8);
  EXPECT_THROW(fl_greens_avg(TransportParams{}, 1.0, -1.0), DomainError);
}

TEST(FlIntensity, Examples) {
  EXPECT_NEAR(fl_intensity(TransportParams{}, 0.0, 1.0).real(), 1.0, 1e-15);
  EXPECT_NEAR(fl_intensity(TransportParams{}, 1.0, 1.0).real(), 0.8090169943749475, 1e-15);
  EXPECT_NEAR(fl_intensity(TransportParams{1.0, 1.0, 2.0}, 0.0, 1.0).real(), 2.0, 1e-15);
}

TEST(FlIntensity, EnergyIsConstantInTime) {
  // k = 0: A0/s for every s, the image of a constant.
  for (const double s : {0.1, 1.0, 10.0}) {
    EXPECT_NEAR(fl_intensity(TransportParams{1.0, 1.0, 3.0}, 0.0, s).real(), 3.0 / s, 1e-12 * 3.0 / s);
  }
}

TEST(FlIntensity, DiffusivePole) {
  EXPECT_THROW(fl_intensity(TransportParams{}, 0.0, 1e-17), PoleError);
}

TEST(FlIntensity, AgreesWithPairMachinery) {
  sdt_test::Gen gen(63);
  for (int i = 0; i < 200; ++i) {
    const TransportParams p{gen.log_uniform(0.2, 5), gen.log_uniform(0.2, 5), gen.log_uniform(0.2, 5)};
    const double k = gen.uniform(0.0, 4.0);
    const complex s(gen.uniform(0.05, 5.0), gen.uniform(-5.0, 5.0));
    const complex a = fl_intensity(p, k, s);
    const complex b = fl_intensity_via_pair(p, k, s);
    EXPECT_LE(std::abs(a - b), 1e-12 * std::abs(a)) << k << " " << s;
  }
}

TEST(Resolvent, Examples) {
  const auto f = resolvent_original(TransportParams{});
  EXPECT_NEAR(f.eval(1.0), std::exp(1.0), 1e-15);
  ASSERT_TRUE(f.atom.has_value());
  EXPECT_EQ(f.atom->location, 0.0);
  EXPECT_EQ(f.atom->weight, 1.0);
  EXPECT_EQ(f.sigma0, 1.0);
  EXPECT_NEAR(laplace::forward_laplace(f, 2.0).value.real(), 2.0, 1e-10);
}

TEST(Energy, Conservation) {
  for (const double A0 : {1.0, 3.0}) {
    const TransportParams p{1.5, 0.7, A0};
    for (const double tau : {0.5, 1.0, 2.0, 5.0}) {
      const double t = tau * p.ell / p.c;
      EXPECT_LE(std::abs(check_energy(p, t) - A0) / A0, 1e-8) << tau;
    }
  }
  EXPECT_NEAR(check_energy(TransportParams{1.0, 1.0, 3.0}, 2.0), 3.0, 1e-8);
  EXPECT_NEAR(check_energy(TransportParams{}, 1e-6), 1.0, 1e-8);
}

TEST(SpatialTransform, ZeroWavenumberIsEnergy) {
  const auto r = spatial_transform(TransportParams{}, 0.0, 1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 1.0, 1e-10);
}

TEST(SpatialTransform, EarlyTimeIsBallistic) {
  for (const double k : {0.5, 2.0, 10.0}) {
    EXPECT_NEAR(spatial_transform(TransportParams{}, k, 1e-6).value, 1.0, 1e-5) << k;
  }
}

TEST(SpatialTransform, AgainstOracle) {
  // LHS at (k=1, t=1): atom J0(1) e^{-1} plus the smooth part's transform.
  const TransportParams p;
  // r = sin(th) cancels the 1/sqrt(1 - r^2) edge: smooth * dr = e^{cos th - 1} / (2 pi) dth
  const double smooth = sdt_test::simpson(
      [&](double th) {
        const double r = std::sin(th);
        return std::exp(std::cos(th) - 1.0) / (2 * kPi) * std::cyl_bessel_j(0.0, r) * 2 * kPi * r;
      },
      0.0, kPi / 2, 20000);
  const double expected = std::cyl_bessel_j(0.0, 1.0) * std::exp(-1.0) + smooth;
  EXPECT_NEAR(spatial_transform(p, 1.0, 1.0).value, expected, 1e-9);
}

TEST(MixedCheck, Examples) {
  const TransportParams p;
  const std::vector<RteSample> samples{{0.0, 1.0}, {1.0, 1.0}};
  const auto rep = verify_rte_mixed(p, samples);
  EXPECT_NEAR(rep.lhs_values[0], 1.0, 1e-10);
  EXPECT_NEAR(rep.rhs_values[0], 1.0, 1e-10);
  EXPECT_TRUE(rep.passed);
  EXPECT_EQ(rep.tolerance, 1e-5);
}

TEST(MixedCheck, ParameterSweep) {
  sdt_test::Gen gen(64);
  std::vector<RteSample> samples;
  for (const double k : {0.0, 0.5, 1.0, 2.0}) {
    for (const double t : {0.5, 1.0, 2.0}) samples.push_back({k, t});
  }
  for (int i = 0; i < 4; ++i) {
    const TransportParams p{gen.log_uniform(0.5, 2), gen.log_uniform(0.5, 2), gen.log_uniform(0.5, 2)};
    const auto rep = verify_rte_mixed(p, samples);
    EXPECT_TRUE(rep.passed) << p.c << " " << p.ell << " " << rep.max_rel_error();
  }
}

}  // namespace
