#pragma once

#include <string>

#include "moyal/diffop.hpp"
#include "moyal/gseries.hpp"
#include "moyal/intertwiner.hpp"
#include "moyal/specverify.hpp"

#include "json.hpp"

namespace moyal {

using Json = nlohmann::ordered_json;

/// Symbol rendered in the symmetric operator basis: p^m x^n prints as
/// S(m,n) (pure powers as P^m / X^n), which is the Weyl quantization of the
/// symbol term by term.
std::string sbasis_str(const PhasePoly& symbol);

std::string latex(const Rational& r);
std::string latex(const GaussianRational& c);
std::string latex(const PhasePoly& f, bool operator_hats = false);
std::string latex(const ExpWeightedPoly& f);

Json to_json(const PhasePoly& f);
Json to_json(const ExpWeightedPoly& f);
Json series_to_json(const GSeries& s);

PhasePoly phase_poly_from_json(const Json& j);
ExpWeightedPoly exp_poly_from_json(const Json& j);
GSeries series_from_json(const Json& j);

Json to_json(const ResidualReport& r);
Json to_json(const SpectralReport& r);

}  // namespace moyal
