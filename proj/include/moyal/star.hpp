#pragma once

#include "moyal/exppoly.hpp"
#include "moyal/gseries.hpp"

namespace moyal {

/// f*g = sum_s (i^s/s!) dx^s f dp^s g. Encodes p-left normal ordering.
/// Terminates at s = x-degree of f's body.
ExpWeightedPoly star_standard(const ExpWeightedPoly& f, const ExpWeightedPoly& g);
PhasePoly star_standard(const PhasePoly& f, const PhasePoly& g);

/// The symmetric Moyal product, computed from its explicit double-sum
/// expansion; p-derivatives thread through the exponential weight, and the
/// sum terminates once the combined x-degree budget of the two bodies is
/// exhausted. The result exponent is the sum of the operand exponents.
ExpWeightedPoly star_moyal(const ExpWeightedPoly& f, const ExpWeightedPoly& g);
PhasePoly star_moyal(const PhasePoly& f, const PhasePoly& g);

/// Serial reference for the parallel (s,t)-grid accumulation.
ExpWeightedPoly star_moyal_serial(const ExpWeightedPoly& f, const ExpWeightedPoly& g);

ExpWeightedPoly star(const ExpWeightedPoly& f, const ExpWeightedPoly& g, Product product);

ExpWeightedPoly star_commutator(const ExpWeightedPoly& f, const ExpWeightedPoly& g, Product product);
ExpWeightedPoly star_anticommutator(const ExpWeightedPoly& f, const ExpWeightedPoly& g, Product product);

}  // namespace moyal
