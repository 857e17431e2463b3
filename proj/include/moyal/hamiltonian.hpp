#pragma once

#include <map>
#include <string>

#include "moyal/ordering.hpp"
#include "moyal/poly.hpp"

namespace moyal {

using ParamMap = std::map<std::string, Rational>;

/// H = h0 + i g h1 at the Weyl-symbol level, with h0 and h1 real-coefficient
/// polynomials in x, p (their Weyl quantizations are Hermitian). Named
/// parameters are recorded after substitution for reporting only.
struct HamiltonianSplit {
  PhasePoly h0;
  PhasePoly h1;
  ParamMap parameters;

  /// h0 + i*g*h1 as one g-carrying polynomial.
  PhasePoly weyl_symbol_full() const;
  /// Weyl quantization of the full symbol.
  OperatorPoly to_operator() const;
};

/// Validates and splits a full Weyl symbol. Throws HamiltonianError if the
/// symbol is not of the form h0 + i g h1 with real h0, h1.
HamiltonianSplit split_weyl_symbol(const PhasePoly& symbol, ParamMap parameters = {});

/// Same, starting from an operator expression.
HamiltonianSplit split_operator(const OperatorPoly& op, ParamMap parameters = {});

}  // namespace moyal
