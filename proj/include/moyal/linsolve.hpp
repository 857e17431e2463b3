#pragma once

#include <optional>
#include <vector>

#include "moyal/rational.hpp"

namespace moyal {

/// Sparse exact linear system A v = rhs over GaussianRational.
struct SparseLinearSystem {
  int ncols = 0;
  // Each row: sorted (column, coefficient) pairs, no zero coefficients.
  std::vector<std::vector<std::pair<int, GaussianRational>>> rows;
  std::vector<GaussianRational> rhs;
};

struct LinearSolveResult {
  bool consistent = false;
  // Particular solution with all free columns set to zero.
  std::vector<GaussianRational> solution;
};

/// Fraction-free (Bareiss) elimination: rows are first scaled to Gaussian
/// integers, and every elimination step divides exactly by the previous
/// pivot. Column order is fixed (0..ncols-1); pivot rows are chosen by
/// fewest nonzeros, ties by row index, so the result is deterministic.
/// The `parallel` flag switches the per-step row updates to OpenMP; results
/// are identical either way.
LinearSolveResult solve_fraction_free(SparseLinearSystem system, bool parallel = true);

/// Reference implementation (always serial).
inline LinearSolveResult solve_fraction_free_serial(SparseLinearSystem system) {
  return solve_fraction_free(std::move(system), false);
}

}  // namespace moyal
