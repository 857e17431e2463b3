#include "moyal/hamiltonian.hpp"

#include "moyal/errors.hpp"

namespace moyal {

PhasePoly HamiltonianSplit::weyl_symbol_full() const {
  return h0 + (GaussianRational::imaginary_unit() * h1).times_g_power(1);
}

OperatorPoly HamiltonianSplit::to_operator() const { return weyl_quantize(weyl_symbol_full()); }

HamiltonianSplit split_weyl_symbol(const PhasePoly& symbol, ParamMap parameters) {
  if (symbol.max_gdeg() > 1)
    throw HamiltonianError("Hamiltonian must be at most linear in the coupling G; got G^" +
                           std::to_string(symbol.max_gdeg()));
  HamiltonianSplit split;
  split.h0 = symbol.g_slice(0);
  PhasePoly ig_part = symbol.g_slice(1);
  // h1 = (g^1 part)/i; require the result to be real.
  split.h1 = -GaussianRational::imaginary_unit() * ig_part;
  if (!split.h0.is_real())
    throw HamiltonianError("the G-independent part must be real (Hermitian); got " +
                           split.h0.str());
  if (!split.h1.is_real())
    throw HamiltonianError("the G-linear part must be i*G times a real symbol; got i*G*(" +
                           split.h1.str() + ")");
  split.parameters = std::move(parameters);
  return split;
}

HamiltonianSplit split_operator(const OperatorPoly& op, ParamMap parameters) {
  return split_weyl_symbol(weyl_symbol(op), std::move(parameters));
}

}  // namespace moyal
