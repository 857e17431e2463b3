#pragma once

#include <random>
#include <string>

#include "moyal/exppoly.hpp"
#include "moyal/ordering.hpp"
#include "moyal/parser.hpp"
#include "moyal/poly.hpp"

namespace moyal::testsupport {

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline GaussianRational random_coeff(std::mt19937_64& rng, bool complex_ok = true) {
  std::bernoulli_distribution flip(0.5);
  Rational re = random_rational(rng);
  Rational im(0);
  if (complex_ok && flip(rng)) im = random_rational(rng);
  if (re == 0 && im == 0) re = 1;
  return {re, im};
}

inline PhasePoly random_poly(std::mt19937_64& rng, int max_degree, int terms = 6,
                             bool complex_ok = true) {
  PhasePoly out;
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    int a = deg(rng);
    std::uniform_int_distribution<int> rest(0, max_degree - a);
    int b = rest(rng);
    out.add_term({a, b, 0}, random_coeff(rng, complex_ok));
  }
  return out;
}

inline ExpWeightedPoly random_exp_poly(std::mt19937_64& rng, int max_degree, int terms = 5) {
  PhasePoly exponent;
  std::uniform_int_distribution<int> pd(1, 3);
  exponent.add_term({0, pd(rng), 1}, GaussianRational(random_rational(rng)));
  return {exponent, random_poly(rng, max_degree, terms)};
}

inline OperatorPoly random_operator(std::mt19937_64& rng, int max_degree, int terms = 6,
                                    bool complex_ok = true) {
  OperatorPoly out;
  std::uniform_int_distribution<int> deg(0, max_degree);
  for (int t = 0; t < terms; ++t) {
    int m = deg(rng);
    std::uniform_int_distribution<int> rest(0, max_degree - m);
    int n = rest(rng);
    out.add_term({m, n, 0}, random_coeff(rng, complex_ok));
  }
  return out;
}

/// Lowers expression text with commuting symbols; used to state expected
/// polynomials readably in tests.
inline PhasePoly sym(const std::string& text, const ParamMap& params = {}) {
  return lower_to_symbol(parse(text), params);
}

inline OperatorPoly op(const std::string& text, const ParamMap& params = {}) {
  return lower_to_operator(parse(text), params);
}

}  // namespace moyal::testsupport
