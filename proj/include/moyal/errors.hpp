#pragma once

#include <stdexcept>
#include <string>

namespace moyal {

/// Base class for failures of the metric/counterpart solvers.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The exponential ansatz class admits no exact solution; callers in auto
/// mode fall back to the perturbative solver.
struct NoExactSolution : SolverError {
  using SolverError::SolverError;
};

/// The order-n linear system is inconsistent at the current degree bound.
struct InconsistentSystem : SolverError {
  int order = 0;
  int degree_bound = 0;
  InconsistentSystem(int order_, int bound_)
      : SolverError("inconsistent linear system at order " + std::to_string(order_) +
                    " with degree bound " + std::to_string(bound_)),
        order(order_),
        degree_bound(bound_) {}
};

/// Degree escalation exceeded its configured cap.
struct Unsolvable : SolverError {
  using SolverError::SolverError;
};

/// The normalization condition cannot be satisfied within the kernel span.
struct NormalizationObstruction : SolverError {
  using SolverError::SolverError;
};

/// A nonzero odd-power coefficient survived in the Hermitian counterpart.
struct OddOrderResidual : SolverError {
  using SolverError::SolverError;
};

/// Matrix basis too small for the requested operator.
struct DimensionTooSmall : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Hamiltonian text failed to parse.
struct SyntaxError : std::runtime_error {
  int line = 1;
  int column = 1;
  std::string expected;
  SyntaxError(std::string message, int line_, int column_, std::string expected_ = "")
      : std::runtime_error(std::move(message)), line(line_), column(column_), expected(std::move(expected_)) {}
};

/// Well-formed input that does not satisfy the required Hamiltonian shape.
struct HamiltonianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace moyal
