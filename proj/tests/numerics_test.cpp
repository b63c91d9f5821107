#include "oracle.hpp"

#include "sdt/errors.hpp"
#include "sdt/numerics/quadrature.hpp"
#include "sdt/numerics/special.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace {

using namespace sdt::numerics;
using sdt::DomainError;
constexpr double kPi = std::numbers::pi;

TEST(Bessel, SpecExamples) {
  EXPECT_DOUBLE_EQ(bessel_j(0.0, 0.0), 1.0);
  EXPECT_NEAR(bessel_j(0.5, kPi / 2), 2.0 / kPi, 1e-14);
  EXPECT_NEAR(bessel_j(0.0, 2.404825557695773), 0.0, 1e-10);
}

TEST(Bessel, IntegerOrdersMatchStdlib) {
  sdt_test::Gen gen(11);
  for (int i = 0; i < 400; ++i) {
    const int n = gen.integer(0, 6);
    const double x = gen.uniform(0.0, 100.0);
    EXPECT_NEAR(bessel_j(n, x), std::cyl_bessel_j(static_cast<double>(n), x), 1e-12) << "n=" << n << " x=" << x;
  }
}

TEST(Bessel, LargeArgumentReferenceValues) {
  // 30-digit reference values; they straddle the series/recurrence/asymptotic switches.
  struct Ref {
    int n;
    double x;
    double j;
  };
  const Ref refs[] = {{0, 500.5, -0.034945768284930254748}, {3, 1234.25, -0.020979489310834964666},
                      {1, 25.0, -0.12535024958028990465},   {5, 25.5, 0.010891362408706043012},
                      {6, 30.0, 0.0048622351506279932981},  {0, 8.0, 0.17165080713755390609},
                      {2, 24.99, -0.10512084080970958884}};
  for (const auto& r : refs) EXPECT_NEAR(bessel_j(r.n, r.x), r.j, 1e-15) << r.n << " " << r.x;
}

TEST(Bessel, NegativeIntegerOrderReflects) {
  for (const double x : {0.3, 2.0, 17.5}) {
    EXPECT_NEAR(bessel_j(-1.0, x), -bessel_j(1.0, x), 1e-15);
    EXPECT_NEAR(bessel_j(-2.0, x), bessel_j(2.0, x), 1e-15);
  }
}

TEST(Bessel, HalfIntegerClosedForms) {
  for (double x = 1e-3; x <= 100.0; x *= 1.17) {
    const double c = std::sqrt(2.0 / (kPi * x));
    EXPECT_NEAR(bessel_j(-0.5, x), c * std::cos(x), 1e-12);
    EXPECT_NEAR(bessel_j(0.5, x), c * std::sin(x), 1e-12);
    EXPECT_NEAR(bessel_j(1.5, x), c * (std::sin(x) / x - std::cos(x)), 1e-12);
  }
}

TEST(Bessel, RecurrenceOnLogGrid) {
  for (double x = 1e-2; x <= 100.0; x *= 1.3) {
    EXPECT_NEAR(bessel_j(0.0, x) + bessel_j(2.0, x), (2.0 / x) * bessel_j(1.0, x), 1e-10) << x;
    EXPECT_NEAR(bessel_j(1.0, x) + bessel_j(3.0, x), (4.0 / x) * bessel_j(2.0, x), 1e-10) << x;
  }
}

TEST(Bessel, Zeros) {
  EXPECT_NEAR(bessel_j_zero(0.0, 1), 2.404825557695773, 1e-12);
  EXPECT_NEAR(bessel_j_zero(0.5, 3), 3.0 * kPi, 1e-12);
  for (int m = 1; m <= 20; ++m) EXPECT_NEAR(bessel_j(1.0, bessel_j_zero(1.0, m)), 0.0, 1e-12);
}

TEST(Bessel, RejectsBadInput) {
  EXPECT_THROW(bessel_j(0.3, 1.0), DomainError);
  EXPECT_THROW(bessel_j(0.0, -1.0), DomainError);
  EXPECT_THROW(bessel_j(-1.5, 1.0), DomainError);
  EXPECT_FALSE(is_supported_bessel_order(0.25));
  EXPECT_TRUE(is_supported_bessel_order(2.5));
}

TEST(Gamma, Examples) {
  EXPECT_DOUBLE_EQ(gamma_fn(1.0), 1.0);
  EXPECT_NEAR(gamma_fn(0.5), std::sqrt(kPi), 1e-15);
  EXPECT_NEAR(gamma_fn(5.0), 24.0, 1e-12);
  EXPECT_THROW(gamma_fn(0.0), DomainError);
  EXPECT_THROW(gamma_fn(-2.5), DomainError);
}

TEST(Gamma, FactorialsAndRecurrence) {
  double fact = 1.0;
  for (int n = 1; n <= 40; ++n) {
    EXPECT_NEAR(gamma_fn(n) / fact, 1.0, 1e-12) << n;
    fact *= n;
  }
  sdt_test::Gen gen(3);
  for (int i = 0; i < 200; ++i) {
    const double x = gen.uniform(0.05, 49.0);
    EXPECT_NEAR(gamma_fn(x + 1.0) / (x * gamma_fn(x)), 1.0, 1e-12);
  }
}

TEST(Quadrature, SpecValidation) {
  QuadratureSpec s;
  EXPECT_NO_THROW(s.validate());
  s.abs_tol = 0.0;
  EXPECT_THROW(s.validate(), DomainError);
  s = {};
  s.max_oscillation_cells = 3;
  EXPECT_THROW(s.validate(), DomainError);
}

TEST(Quadrature, AdaptiveExamples) {
  const QuadratureSpec spec;
  EXPECT_NEAR(integrate_adaptive([](double) { return 1.0; }, 0.0, 2.0, spec).value, 2.0, 1e-14);
  EXPECT_NEAR(integrate_adaptive([](double x) { return std::exp(-x); }, 0.0, 1.0, spec).value, 1.0 - std::exp(-1.0),
              1e-14);
  const auto r = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec);
  EXPECT_NEAR(r.value, 2.0, 1e-9);
  EXPECT_TRUE(r.converged);
}

TEST(Quadrature, PolynomialsExact) {
  sdt_test::Gen gen(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int degree = gen.integer(0, 20);
    std::vector<double> c(degree + 1);
    for (auto& v : c) v = gen.uniform(-1.0, 1.0);
    const double a = gen.uniform(-2.0, 0.0);
    const double b = gen.uniform(0.5, 2.0);
    auto p = [&](double x) {
      double acc = 0.0;
      for (int i = degree; i >= 0; --i) acc = acc * x + c[i];
      return acc;
    };
    auto antiderivative = [&](double x) {
      double acc = 0.0;
      for (int i = degree; i >= 0; --i) acc = acc * x + c[i] / (i + 1);
      return acc * x;
    };
    const double exact = antiderivative(b) - antiderivative(a);
    const double got = integrate_adaptive(p, a, b, QuadratureSpec{}).value;
    EXPECT_LE(std::abs(got - exact), 1e-14 * std::max(1.0, std::abs(exact))) << "degree " << degree;
  }
}

TEST(Quadrature, ConvergedImpliesTarget) {
  sdt_test::Gen gen(9);
  for (int i = 0; i < 40; ++i) {
    const double w = gen.uniform(0.1, 30.0);
    QuadratureSpec spec;
    spec.max_subdivisions = gen.integer(1, 50);
    const auto r = integrate_adaptive([w](double x) { return std::sin(w * x * x); }, 0.0, 3.0, spec);
    if (r.converged) EXPECT_LE(r.error_estimate, spec.target(std::abs(r.value)));
  }
}

TEST(Quadrature, BudgetExhaustionIsFlagged) {
  QuadratureSpec spec;
  spec.max_subdivisions = 1;
  const auto r = integrate_adaptive([](double x) { return std::sin(200.0 * x); }, 0.0, 10.0, spec);
  EXPECT_FALSE(r.converged);
}

TEST(Quadrature, EndpointSingular) {
  const QuadratureSpec spec;
  // int_0^1 dx / sqrt(1 - x^2) = pi/2
  const auto r = integrate_endpoint_singular([](double x) { return 1.0 / std::sqrt(1.0 - x * x); }, 0.0, 1.0, spec);
  EXPECT_NEAR(r.value, kPi / 2, 1e-12);
  EXPECT_TRUE(r.converged);
}

TEST(Quadrature, SemiInfiniteExamples) {
  const QuadratureSpec spec;
  EXPECT_NEAR(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0, spec).value, 1.0, 1e-12);
  EXPECT_NEAR(integrate_semi_infinite([](double x) { return std::exp(-x * x); }, 0.0, spec).value,
              std::sqrt(kPi) / 2, 1e-12);
  EXPECT_NEAR(integrate_semi_infinite([](double x) { return std::exp(-2 * x); }, 1.0, spec).value,
              std::exp(-2.0) / 2, 1e-13);
}

TEST(Quadrature, SemiInfiniteCancellingPanels) {
  // int_0^inf e^{-x^2/24} J0(2x) x dx = 12 e^{-24}: panels of O(1) cancel to 1e-10.
  const auto r = integrate_semi_infinite(
      [](double x) { return std::exp(-x * x / 24.0) * std::cyl_bessel_j(0.0, 2.0 * x) * x; }, 0.0, QuadratureSpec{},
      1.0);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 12.0 * std::exp(-24.0), 1e-14);
}

TEST(Quadrature, ComplexIntegrand) {
  using C = std::complex<double>;
  const auto r = integrate_semi_infinite([](double x) { return std::exp(C(-1.0, 1.0) * x); }, 0.0, QuadratureSpec{});
  EXPECT_NEAR(std::abs(r.value - C(0.5, 0.5)), 0.0, 1e-12);
}

TEST(Quadrature, OscillatoryExamples) {
  const QuadratureSpec spec;
  const OscillatoryKernel cosine{OscillatoryKernel::Kind::cosine, 1.0, 0.0};
  EXPECT_NEAR(integrate_oscillatory([](double x) { return std::exp(-x); }, cosine, 0.0, spec).value, 0.5, 1e-10);
  const OscillatoryKernel j0{OscillatoryKernel::Kind::bessel, 1.0, 0.0};
  EXPECT_NEAR(integrate_oscillatory([](double x) { return std::exp(-x); }, j0, 0.0, spec).value, 1.0 / std::sqrt(2.0),
              1e-9);
  EXPECT_EQ(integrate_oscillatory([](double) { return 0.0; }, j0, 0.0, spec).value, 0.0);
}

TEST(Quadrature, OscillatoryDampedCosine) {
  for (const double a : {0.5, 1.0, 2.0}) {
    for (const double w : {0.5, 1.0, 2.0}) {
      const OscillatoryKernel k{OscillatoryKernel::Kind::cosine, w, 0.0};
      const auto r = integrate_oscillatory([a](double x) { return std::exp(-a * x); }, k, 0.0, QuadratureSpec{});
      EXPECT_NEAR(r.value, a / (a * a + w * w), 1e-9) << a << " " << w;
    }
  }
}

TEST(Quadrature, OscillatorySlowDecay) {
  // int_0^inf sin(x)/x dx = pi/2: algebraic envelope, needs the extrapolation.
  const OscillatoryKernel sine{OscillatoryKernel::Kind::sine, 1.0, 0.0};
  const auto r = integrate_oscillatory([](double x) { return x == 0.0 ? 1.0 : 1.0 / x; }, sine, 0.0, QuadratureSpec{});
  EXPECT_NEAR(r.value, kPi / 2, 1e-8);
}

TEST(Quadrature, WynnOnAlternatingSeries) {
  // partial sums of log 2 = 1 - 1/2 + 1/3 - ...
  std::vector<double> sums;
  double s = 0.0;
  for (int n = 1; n <= 20; ++n) {
    s += (n % 2 == 1 ? 1.0 : -1.0) / n;
    sums.push_back(s);
  }
  EXPECT_NEAR(wynn_epsilon<double>(sums), std::log(2.0), 1e-12);
}

TEST(Quadrature, KernelZeros) {
  const OscillatoryKernel j1{OscillatoryKernel::Kind::bessel, 2.0, 1.0};
  for (int m = 1; m < 10; ++m) EXPECT_NEAR(j1(j1.zero(m)), 0.0, 1e-12);
  EXPECT_GT(j1.zero(j1.first_zero_after(5.0)), 5.0);
  const OscillatoryKernel c{OscillatoryKernel::Kind::cosine, kPi, 0.0};
  EXPECT_NEAR(c.zero(1), 0.5, 1e-15);
}

}  // namespace
