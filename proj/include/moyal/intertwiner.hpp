#pragma once

#include <optional>
#include <vector>

#include "moyal/diffop.hpp"
#include "moyal/errors.hpp"
#include "moyal/gseries.hpp"
#include "moyal/hamiltonian.hpp"
#include "moyal/kernel.hpp"

namespace moyal {

enum class SolveMode { automatic, exact, perturbative };

struct SolveOptions {
  int order = 6;
  SolveMode mode = SolveMode::automatic;
  int exact_ansatz_degree = 5;
  int escalation_rounds = 2;
  bool parity_pruning = true;
};

struct OrderDiagnostic {
  int order = 0;
  int degree_bound = 0;
  bool parity_pruned = false;
  // Even orders: the kernel addition is forced by the normalization
  // condition; odd orders: the condition leaves the kernel direction
  // undetermined and the zero convention is applied.
  bool kernel_fixed_by_normalization = false;
  bool kernel_undetermined_set_zero = false;
  std::vector<GaussianRational> kernel_coords;  // coordinates in powers of h0
};

struct ResidualReport {
  std::vector<int> nonzero_terms_per_order;
  bool all_zero() const {
    for (int n : nonzero_terms_per_order)
      if (n != 0) return false;
    return true;
  }
};

struct ExactSolution {
  ExpWeightedPoly eta_squared;
  ExpWeightedPoly eta;
  ExpWeightedPoly eta_inverse;
  PhasePoly h;  // polynomial in x, p, g (the exponential weights cancel)
};

struct MetricSolution {
  SolveMode mode = SolveMode::perturbative;  // resolved mode
  std::optional<ExactSolution> exact;
  GSeries eta_squared;
  GSeries eta;
  GSeries eta_inverse;
  GSeries h;
  ResidualReport intertwining_residual;
  bool inverse_matches_reflection = false;
  std::vector<OrderDiagnostic> order_diagnostics;
};

/// The linear differential operator L with L[eta^2] = 0 equivalent to
/// H^† (*) eta^2 = eta^2 (*) H for the chosen product, scaled by 2i into the
/// conventional real form.
LinearDiffOp build_pde(const HamiltonianSplit& H, Product product);

struct RawTower {
  std::vector<PhasePoly> coefficients;  // particular solutions, index = order
  std::vector<OrderDiagnostic> diagnostics;
};

/// Order-by-order particular solutions of the recursion induced by the
/// Moyal-product PDE, with c_0 = 1 and each order's kernel component
/// projected to zero (canonical representative).
RawTower solve_perturbative(const HamiltonianSplit& H, int order, const SolveOptions& options = {});

struct NormalizedTower {
  GSeries eta_squared;
  std::vector<OrderDiagnostic> diagnostics;
};

/// Kernel additions chosen order by order so that
/// eta^2(g) (star) eta^2(-g) = 1 holds exactly through the truncation order.
/// A kernel function introduced at an even order propagates through the
/// recursion, so every higher order is re-solved against the corrected tail.
NormalizedTower normalize(const HamiltonianSplit& H, int order, const SolveOptions& options = {});

/// eta with eta (star) eta = eta^2, computed order by order; requires c_0 = 1.
GSeries star_sqrt(const GSeries& eta_squared);

/// Series inverse: eta (star) result = 1; requires leading coefficient 1.
GSeries star_inverse(const GSeries& eta);

/// Exact similarity transformation from the exponential ansatz
/// eta^2 = exp(g * sigma(p)), sigma a polynomial of degree <= ansatz_degree
/// with unknown rational coefficients. Throws NoExactSolution when the
/// ansatz class admits none.
ExactSolution solve_exact(const HamiltonianSplit& H, int ansatz_degree = 5);

/// h = eta (star) H (star) eta^{-1}, collected in powers of g. Throws
/// OddOrderResidual if any odd-power coefficient survives.
GSeries hermitian_counterpart(const HamiltonianSplit& H, const GSeries& eta);

/// Recomputes H^† (star) eta^2 - eta^2 (star) H order by order and reports
/// the number of surviving terms per order (all zero on success).
ResidualReport verify_intertwining(const HamiltonianSplit& H, const GSeries& eta_squared);
ResidualReport verify_intertwining(const HamiltonianSplit& H, const ExpWeightedPoly& eta_squared,
                                   int order_cap);

/// Full pipeline: exact mode when available (or requested), otherwise
/// perturbative; populates series views, diagnostics and residuals.
MetricSolution solve_metric(const HamiltonianSplit& H, const SolveOptions& options = {});

}  // namespace moyal
