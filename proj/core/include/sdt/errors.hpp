#pragma once

#include <stdexcept>

namespace sdt {

/// Argument outside the mathematical domain of an operation (negative radius,
/// unsupported Bessel order, Re s below the abscissa, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Pointwise evaluation requested on a declared edge set (support boundary or
/// integrable singularity). Edges are only ever crossed by quadrature.
class EdgeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Resolvent or image evaluated at (or numerically on top of) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A pair was evaluated in a dimension its table row does not admit.
class ConstraintError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownIdError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric engine failed to reach its tolerance where the caller cannot
/// carry a `converged` flag forward.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sdt
