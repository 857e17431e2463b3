#pragma once

#include <string>

#include "moyal/poly.hpp"

namespace moyal {

/// Value semantics: exp(exponent) * body, where the exponent is a polynomial
/// in p (and g) only — construction rejects x-dependent exponents. With a
/// zero exponent this degrades to a plain polynomial. The zero value is
/// canonicalized to exponent 0 so equality is structural.
class ExpWeightedPoly {
 public:
  ExpWeightedPoly() = default;
  ExpWeightedPoly(PhasePoly body);  // exponent 0, implicit lift
  ExpWeightedPoly(PhasePoly exponent, PhasePoly body);
  explicit ExpWeightedPoly(GaussianRational constant) : ExpWeightedPoly(PhasePoly(constant)) {}

  static ExpWeightedPoly one() { return ExpWeightedPoly(PhasePoly::one()); }

  const PhasePoly& exponent() const { return exponent_; }
  const PhasePoly& body() const { return body_; }

  bool is_zero() const { return body_.is_zero(); }
  bool is_plain_poly() const { return exponent_.is_zero(); }

  /// Body, requiring a zero exponent.
  const PhasePoly& as_poly() const;

  ExpWeightedPoly conj() const;
  ExpWeightedPoly diff_x() const;
  /// Product rule through the exponential: exp(s)*(s' * body + body').
  ExpWeightedPoly diff_p() const;

  ExpWeightedPoly reflect_g() const;

  /// Addition requires equal exponents (or a zero operand).
  ExpWeightedPoly& operator+=(const ExpWeightedPoly& o);
  ExpWeightedPoly& operator-=(const ExpWeightedPoly& o);
  ExpWeightedPoly& operator*=(const GaussianRational& c);

  friend ExpWeightedPoly operator+(ExpWeightedPoly a, const ExpWeightedPoly& b) { return a += b; }
  friend ExpWeightedPoly operator-(ExpWeightedPoly a, const ExpWeightedPoly& b) { return a -= b; }
  friend ExpWeightedPoly operator-(const ExpWeightedPoly& a);
  friend ExpWeightedPoly operator*(ExpWeightedPoly a, const GaussianRational& c) { return a *= c; }
  friend ExpWeightedPoly operator*(const GaussianRational& c, ExpWeightedPoly a) { return a *= c; }
  /// Pointwise product; exponents add.
  friend ExpWeightedPoly operator*(const ExpWeightedPoly& a, const ExpWeightedPoly& b);

  friend bool operator==(const ExpWeightedPoly& a, const ExpWeightedPoly& b) {
    return a.exponent_ == b.exponent_ && a.body_ == b.body_;
  }

  std::string str() const;

 private:
  PhasePoly exponent_;
  PhasePoly body_;
};

}  // namespace moyal
