#include "doctest.h"
#include "moyal/ordering.hpp"
#include "moyal/star.hpp"
#include "support.hpp"

using namespace moyal;
using testsupport::random_exp_poly;
using testsupport::random_poly;
using testsupport::sym;

TEST_CASE("the two products differ exactly by the known commutator anchors") {
  PhasePoly x2 = PhasePoly::x(2), p2 = PhasePoly::p(2);
  CHECK(star_moyal(x2, p2) - star_moyal(p2, x2) == sym("4*i*P*X"));
  CHECK(star_standard(x2, p2) - star_standard(p2, x2) == sym("4*i*P*X - 2"));
}

TEST_CASE("units") {
  std::mt19937_64 rng(3);
  PhasePoly one = PhasePoly::one();
  for (int trial = 0; trial < 10; ++trial) {
    PhasePoly f = random_poly(rng, 6, 5);
    CHECK(star_standard(f, one) == f);
    CHECK(star_standard(one, f) == f);
    CHECK(star_moyal(f, one) == f);
    CHECK(star_moyal(one, f) == f);
  }
}

TEST_CASE("single-step expansions") {
  CHECK(star_standard(PhasePoly::x(), PhasePoly::p()) == sym("X*P + i"));
  CHECK(star_standard(PhasePoly::p(), PhasePoly::x()) == sym("P*X"));
  ExpWeightedPoly w(sym("-2*G*P"), sym("1"));
  CHECK(star_moyal(w, ExpWeightedPoly(sym("X"))) ==
        ExpWeightedPoly(sym("-2*G*P"), sym("X + i*G")));
}

TEST_CASE("anticommutators of the quadratic kinetic symbol") {
  PhasePoly x = PhasePoly::x(), p2 = PhasePoly::p(2);
  GaussianRational half(Rational(1, 2));
  CHECK(star_anticommutator(x, p2, Product::moyal) * half == ExpWeightedPoly(sym("X*P^2")));
  CHECK(star_anticommutator(x, p2, Product::standard) * half ==
        ExpWeightedPoly(sym("X*P^2 + i*P")));
}

TEST_CASE("commutator of anything with itself vanishes") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    ExpWeightedPoly f = random_exp_poly(rng, 5);
    CHECK(star_commutator(f, f, Product::moyal).is_zero());
    CHECK(star_commutator(f, f, Product::standard).is_zero());
  }
}

TEST_CASE("associativity on randomized polynomials") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    PhasePoly f = random_poly(rng, 6, 4);
    PhasePoly g = random_poly(rng, 6, 4);
    PhasePoly h = random_poly(rng, 6, 4);
    CHECK(star_moyal(star_moyal(f, g), h) == star_moyal(f, star_moyal(g, h)));
    CHECK(star_standard(star_standard(f, g), h) == star_standard(f, star_standard(g, h)));
  }
}

TEST_CASE("associativity with exponential weights") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 6; ++trial) {
    ExpWeightedPoly f = random_exp_poly(rng, 4, 3);
    ExpWeightedPoly g = random_exp_poly(rng, 4, 3);
    ExpWeightedPoly h = random_exp_poly(rng, 4, 3);
    CHECK(star_moyal(star_moyal(f, g), h) == star_moyal(f, star_moyal(g, h)));
  }
}

TEST_CASE("result exponent is the sum of operand exponents") {
  ExpWeightedPoly f(sym("G*P^3"), sym("X^2 + P"));
  ExpWeightedPoly g(sym("-2*G*P"), sym("X"));
  CHECK(star_moyal(f, g).exponent() == sym("G*P^3 - 2*G*P"));
  CHECK(star_standard(f, g).exponent() == sym("G*P^3 - 2*G*P"));
}

TEST_CASE("higher star corrections drop total degree in steps of two") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    PhasePoly f = random_poly(rng, 5, 4);
    PhasePoly g = random_poly(rng, 5, 4);
    PhasePoly corrections = star_moyal(f, g) - f * g;
    int top = f.max_total_degree() + g.max_total_degree();
    for (const auto& [m, c] : corrections.terms()) CHECK(m.total_xp() <= top - 2);
  }
}

TEST_CASE("conjugation reverses the symmetric product") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 15; ++trial) {
    PhasePoly f = random_poly(rng, 5, 4);
    PhasePoly g = random_poly(rng, 5, 4);
    CHECK(star_moyal(f, g).conj() == star_moyal(g.conj(), f.conj()));
  }
  // The ordered product has no such rule: (f*g)^* differs from f^* * g^*.
  PhasePoly x = PhasePoly::x(), p = PhasePoly::p();
  CHECK_FALSE(star_standard(x, p).conj() == star_standard(x.conj(), p.conj()));
}

TEST_CASE("parallel grid accumulation matches the serial reference") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 5; ++trial) {
    ExpWeightedPoly f = random_exp_poly(rng, 10, 30);
    ExpWeightedPoly g = random_exp_poly(rng, 10, 30);
    CHECK(star_moyal(f, g) == star_moyal_serial(f, g));
  }
}

TEST_CASE("quantization homomorphisms hold for both products") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    PhasePoly f = random_poly(rng, 6, 4);
    PhasePoly g = random_poly(rng, 6, 4);
    CHECK(weyl_quantize(star_moyal(f, g)) == op_mul(weyl_quantize(f), weyl_quantize(g)));
    CHECK(standard_quantize(star_standard(f, g)) ==
          op_mul(standard_quantize(f), standard_quantize(g)));
  }
}
