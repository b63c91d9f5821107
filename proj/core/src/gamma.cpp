#include "sdt/errors.hpp"
#include "sdt/numerics/special.hpp"

#include <cmath>

namespace sdt::numerics {

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma_fn: argument must be finite and > 0");
  }
  return std::tgamma(x);
}

}  // namespace sdt::numerics
