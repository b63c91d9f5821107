#include "sdt/numerics/quadrature.hpp"

#include "sdt/numerics/special.hpp"

#include <cmath>
#include <numbers>

namespace sdt::numerics {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("QuadratureSpec: abs_tol must be > 0");
  if (!(rel_tol > 0.0)) throw DomainError("QuadratureSpec: rel_tol must be > 0");
  if (max_subdivisions < 1) throw DomainError("QuadratureSpec: max_subdivisions must be >= 1");
  if (max_oscillation_cells < 4) throw DomainError("QuadratureSpec: max_oscillation_cells must be >= 4");
}

double OscillatoryKernel::operator()(double x) const {
  switch (kind) {
    case Kind::cosine:
      return std::cos(omega * x);
    case Kind::sine:
      return std::sin(omega * x);
    case Kind::bessel:
      return bessel_j(order, omega * x);
  }
  return 0.0;
}

double OscillatoryKernel::zero(int m) const {
  switch (kind) {
    case Kind::cosine:
      return (m - 0.5) * std::numbers::pi / omega;
    case Kind::sine:
      return m * std::numbers::pi / omega;
    case Kind::bessel:
      return bessel_j_zero(order, m) / omega;
  }
  return 0.0;
}

int OscillatoryKernel::first_zero_after(double x) const {
  const double scaled = omega * x / std::numbers::pi;
  int m = 1;
  switch (kind) {
    case Kind::cosine:
      m = std::max(1, static_cast<int>(std::floor(scaled + 0.5)) + 1);
      break;
    case Kind::sine:
      m = std::max(1, static_cast<int>(std::floor(scaled)) + 1);
      break;
    case Kind::bessel:
      // zeros of J_order are spaced by about pi; start a little early
      m = std::max(1, static_cast<int>(std::floor(scaled - 0.5 * order)) - 1);
      break;
  }
  while (zero(m) <= x) ++m;
  return m;
}

}  // namespace sdt::numerics
