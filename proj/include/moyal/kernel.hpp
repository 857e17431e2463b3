#pragma once

#include <optional>
#include <vector>

#include "moyal/poly.hpp"

namespace moyal {

/// Span of the powers of h0 up to a total-degree cap: the functions of h0
/// that may be added to a perturbative order without disturbing the
/// intertwining relation. Construction verifies that every generator
/// star-commutes with h0 exactly.
class KernelBasis {
 public:
  KernelBasis(const PhasePoly& h0, int max_total_degree);

  /// Generator j is h0^j, ascending j.
  const std::vector<PhasePoly>& generators() const { return gens_; }
  /// Leading (graded-lex) monomial of each generator.
  const std::vector<PhaseMonomial>& pivots() const { return pivots_; }

  /// Canonical representative of f modulo the kernel span: the coefficients
  /// at every pivot monomial are reduced to zero, from the highest pivot
  /// down.
  PhasePoly project_out(const PhasePoly& f) const;

  /// Coordinates of f in the span, or nullopt if f is not exactly a
  /// combination of the generators.
  std::optional<std::vector<GaussianRational>> coordinates(const PhasePoly& f) const;

  /// Linear combination sum_j coords[j] * h0^j.
  PhasePoly combine(const std::vector<GaussianRational>& coords) const;

 private:
  std::vector<PhasePoly> gens_;
  std::vector<PhaseMonomial> pivots_;
};

}  // namespace moyal
