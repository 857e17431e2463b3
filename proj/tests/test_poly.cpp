#include "doctest.h"
#include "moyal/gseries.hpp"
#include "moyal/star.hpp"
#include "support.hpp"

using namespace moyal;
using testsupport::random_coeff;
using testsupport::random_exp_poly;
using testsupport::random_poly;
using testsupport::sym;

TEST_CASE("commuting product basics") {
  PhasePoly x = PhasePoly::x(), p = PhasePoly::p();
  CHECK((x + p) * (x - p) == sym("X^2 - P^2"));
  CHECK((PhasePoly() * sym("3*X^2 + P")).is_zero());
  CHECK(PhasePoly::x(2) * PhasePoly::p(2) == sym("X^2*P^2"));
}

TEST_CASE("product matches the term-by-term convolution reference") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    PhasePoly a = random_poly(rng, 8, 10);
    PhasePoly b = random_poly(rng, 8, 10);
    CHECK(a * b == poly_mul_serial(a, b));
    CHECK(poly_mul_parallel(a, b) == poly_mul_serial(a, b));
  }
}

TEST_CASE("ring axioms on randomized triples") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    PhasePoly a = random_poly(rng, 8, 5);
    PhasePoly b = random_poly(rng, 8, 5);
    PhasePoly c = random_poly(rng, 8, 5);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("no stored coefficient is zero") {
  PhasePoly a = sym("X + P");
  PhasePoly b = sym("X - P");
  PhasePoly s = a;
  s -= a;
  CHECK(s.is_zero());
  CHECK(s.term_count() == 0);
  PhasePoly prod = (a + b) * (a - b);  // 4 X P exactly, cross terms cancel
  CHECK(prod == sym("4*X*P"));
}

TEST_CASE("derivatives") {
  CHECK(sym("X^2*P^3").diff_p() == sym("3*X^2*P^2"));
  ExpWeightedPoly f(sym("G*P^3"), sym("X^2"));
  CHECK(f.diff_x() == ExpWeightedPoly(sym("G*P^3"), sym("2*X")));
  ExpWeightedPoly g(sym("-2*G*P"), sym("P"));
  CHECK(g.diff_p() == ExpWeightedPoly(sym("-2*G*P"), sym("1 - 2*G*P")));
}

TEST_CASE("mixed partials commute through the exponential weight") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    ExpWeightedPoly f = random_exp_poly(rng, 6);
    CHECK(f.diff_x().diff_p() == f.diff_p().diff_x());
  }
}

TEST_CASE("symbol conjugation") {
  CHECK(sym("i*X^3").conj() == sym("-i*X^3"));
  CHECK(sym("P^2 + X^2").conj() == sym("P^2 + X^2"));
  CHECK(sym("P^2/2 + X^2/2 + i*G*X^3").conj() == sym("P^2/2 + X^2/2 - i*G*X^3"));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    ExpWeightedPoly f = random_exp_poly(rng, 6);
    CHECK(f.conj().conj() == f);
  }
}

TEST_CASE("exponent restricted to x-free polynomials") {
  CHECK_THROWS_AS(ExpWeightedPoly(sym("X*P"), sym("1")), std::invalid_argument);
  CHECK_NOTHROW(ExpWeightedPoly(sym("G*P^3 - 2*G*P"), sym("X")));
}

TEST_CASE("adding mismatched exponents is rejected, zero is neutral") {
  ExpWeightedPoly a(sym("G*P"), sym("X"));
  ExpWeightedPoly b(sym("G*P^2"), sym("X"));
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK(a + ExpWeightedPoly() == a);
  CHECK((a - a).is_zero());
  CHECK((a - a) + b == b);
}

TEST_CASE("g utilities") {
  PhasePoly f = sym("G^2*P^4 + 3*G*X - 7");
  CHECK(f.g_slice(1) == sym("3*X"));
  CHECK(f.g_slice(2) == sym("P^4"));
  CHECK(f.substitute_g(Rational(2)) == sym("4*P^4 + 6*X - 7"));
  CHECK(f.reflect_g() == sym("G^2*P^4 - 3*G*X - 7"));
  CHECK(sym("P").times_g_power(3) == sym("G^3*P"));
}

TEST_CASE("series product truncates at the minimum order") {
  GSeries a(4), b(2);
  a.set_coeff(0, ExpWeightedPoly::one());
  b.set_coeff(0, ExpWeightedPoly::one());
  a.set_coeff(3, ExpWeightedPoly(sym("X")));
  CHECK(series_mul(a, b, SeriesProduct::pointwise).truncation_order() == 2);
}

TEST_CASE("series square to first order") {
  PhasePoly f = sym("X^2 + P");
  GSeries s(1);
  s.set_coeff(0, ExpWeightedPoly::one());
  s.set_coeff(1, ExpWeightedPoly(f));
  GSeries sq = series_mul(s, s, SeriesProduct::star);
  CHECK(sq.coeff(0) == ExpWeightedPoly::one());
  CHECK(sq.coeff(1) == ExpWeightedPoly(sym("2*X^2 + 2*P")));
}

TEST_CASE("order-g terms cancel against the reflected series") {
  GSeries s(1);
  s.set_coeff(0, ExpWeightedPoly::one());
  s.set_coeff(1, ExpWeightedPoly(sym("4/3*P^3 + 2*P*X^2")));
  GSeries prod = series_mul(s, s.reflect_g(), SeriesProduct::star);
  CHECK(prod.is_one());
}

TEST_CASE("series convolution matches the direct sum") {
  std::mt19937_64 rng(2024);
  GSeries a(2), b(2);
  for (int n = 0; n <= 2; ++n) {
    a.set_coeff(n, ExpWeightedPoly(random_poly(rng, 4, 4)));
    b.set_coeff(n, ExpWeightedPoly(random_poly(rng, 4, 4)));
  }
  GSeries prod = series_mul(a, b, SeriesProduct::pointwise);
  ExpWeightedPoly expected =
      a.coeff(0) * b.coeff(2) + a.coeff(1) * b.coeff(1) + a.coeff(2) * b.coeff(0);
  CHECK(prod.coeff(2) == expected);
}

TEST_CASE("pointwise series product is commutative, star is not") {
  std::mt19937_64 rng(5);
  GSeries a(2), b(2);
  for (int n = 0; n <= 2; ++n) {
    a.set_coeff(n, ExpWeightedPoly(random_poly(rng, 4, 4)));
    b.set_coeff(n, ExpWeightedPoly(random_poly(rng, 4, 4)));
  }
  CHECK(series_mul(a, b, SeriesProduct::pointwise) == series_mul(b, a, SeriesProduct::pointwise));
  // Witness of star noncommutativity.
  CHECK_FALSE(star_moyal(PhasePoly::x(), PhasePoly::p()) ==
              star_moyal(PhasePoly::p(), PhasePoly::x()));
}

TEST_CASE("canonical printing uses descending graded order") {
  CHECK(sym("2*P*X^2 + 4/3*P^3").str() == "4/3*P^3 + 2*P*X^2");
  CHECK(PhasePoly().str() == "0");
  CHECK(sym("X^2 - 1").str() == "X^2 - 1");
  CHECK(ExpWeightedPoly(sym("G*P^3"), sym("X")).str() == "exp(G*P^3)*(X)");
}
