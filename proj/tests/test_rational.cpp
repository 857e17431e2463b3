#include "doctest.h"
#include "moyal/rational.hpp"

using namespace moyal;

TEST_CASE("rational parsing keeps reduced form with positive denominator") {
  Rational r = rational_from_string("-6/8");
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 4);
  CHECK(to_string(r) == "-3/4");
  CHECK(rational_from_string("10/5") == Rational(2));
}

TEST_CASE("rational parsing rejects malformed input") {
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("gaussian rational field arithmetic") {
  GaussianRational i = GaussianRational::imaginary_unit();
  CHECK(i * i == GaussianRational(-1));
  GaussianRational a{Rational(1, 2), Rational(3)};
  GaussianRational b{Rational(-2), Rational(1, 3)};
  CHECK((a + b) - b == a);
  CHECK(a * b == b * a);
  CHECK((a / b) * b == a);
  CHECK_THROWS_AS(a / GaussianRational(0), std::domain_error);
}

TEST_CASE("conjugation is an involution and fixes reals") {
  GaussianRational a{Rational(4, 7), Rational(-2, 5)};
  CHECK(a.conj().conj() == a);
  CHECK(GaussianRational(Rational(3)).conj() == GaussianRational(Rational(3)));
  CHECK((a * a.conj()).is_real());
}

TEST_CASE("exact equality distinguishes close values") {
  CHECK(GaussianRational(Rational(1, 3)) != GaussianRational(Rational(333333333, 1000000000)));
}

TEST_CASE("imaginary powers cycle with period four") {
  CHECK(imaginary_power(0) == GaussianRational(1));
  CHECK(imaginary_power(1) == GaussianRational::imaginary_unit());
  CHECK(imaginary_power(2) == GaussianRational(-1));
  CHECK(imaginary_power(3) == -GaussianRational::imaginary_unit());
  CHECK(imaginary_power(-1) == -GaussianRational::imaginary_unit());
  CHECK(imaginary_power(6) == GaussianRational(-1));
}

TEST_CASE("coefficient formatting") {
  CHECK(to_string(GaussianRational(0)) == "0");
  CHECK(to_string(GaussianRational(Rational(-4, 3))) == "-4/3");
  CHECK(to_string(GaussianRational::imaginary_unit()) == "i");
  CHECK(to_string(-GaussianRational::imaginary_unit()) == "-i");
  CHECK(to_string(GaussianRational{Rational(0), Rational(2, 3)}) == "2/3*i");
  CHECK(to_string(GaussianRational{Rational(1, 2), Rational(3)}) == "(1/2+3*i)");
  CHECK(to_string(GaussianRational{Rational(1, 2), Rational(-1)}) == "(1/2-i)");
}

TEST_CASE("binomial and factorial helpers") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(6, 2) == Rational(15));
  CHECK(binomial(3, 5) == Rational(0));
}
