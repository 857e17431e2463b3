#include "moyal/exppoly.hpp"

#include <stdexcept>

namespace moyal {

ExpWeightedPoly::ExpWeightedPoly(PhasePoly body) : body_(std::move(body)) {}

ExpWeightedPoly::ExpWeightedPoly(PhasePoly exponent, PhasePoly body)
    : exponent_(std::move(exponent)), body_(std::move(body)) {
  for (const auto& [m, c] : exponent_.terms()) {
    if (m.xdeg != 0)
      throw std::invalid_argument("ExpWeightedPoly exponent must not depend on x: exp(" +
                                  exponent_.str() + ")");
  }
  if (body_.is_zero()) exponent_ = PhasePoly();
}

const PhasePoly& ExpWeightedPoly::as_poly() const {
  if (!exponent_.is_zero())
    throw std::logic_error("ExpWeightedPoly is not a plain polynomial: exp(" + exponent_.str() +
                           ") weight present");
  return body_;
}

ExpWeightedPoly ExpWeightedPoly::conj() const {
  return {exponent_.conj(), body_.conj()};
}

ExpWeightedPoly ExpWeightedPoly::diff_x() const { return {exponent_, body_.diff_x()}; }

ExpWeightedPoly ExpWeightedPoly::diff_p() const {
  return {exponent_, exponent_.diff_p() * body_ + body_.diff_p()};
}

ExpWeightedPoly ExpWeightedPoly::reflect_g() const {
  return {exponent_.reflect_g(), body_.reflect_g()};
}

ExpWeightedPoly& ExpWeightedPoly::operator+=(const ExpWeightedPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    *this = o;
    return *this;
  }
  if (!(exponent_ == o.exponent_))
    throw std::invalid_argument("cannot add ExpWeightedPoly values with different exponents: exp(" +
                                exponent_.str() + ") vs exp(" + o.exponent_.str() + ")");
  body_ += o.body_;
  if (body_.is_zero()) exponent_ = PhasePoly();
  return *this;
}

ExpWeightedPoly& ExpWeightedPoly::operator-=(const ExpWeightedPoly& o) {
  return *this += -o;
}

ExpWeightedPoly& ExpWeightedPoly::operator*=(const GaussianRational& c) {
  body_ *= c;
  if (body_.is_zero()) exponent_ = PhasePoly();
  return *this;
}

ExpWeightedPoly operator-(const ExpWeightedPoly& a) {
  return {a.exponent_, -a.body_};
}

ExpWeightedPoly operator*(const ExpWeightedPoly& a, const ExpWeightedPoly& b) {
  PhasePoly body = a.body_ * b.body_;
  if (body.is_zero()) return ExpWeightedPoly();
  return {a.exponent_ + b.exponent_, std::move(body)};
}

std::string ExpWeightedPoly::str() const {
  if (exponent_.is_zero()) return body_.str();
  std::string out = "exp(" + exponent_.str() + ")";
  if (!(body_ == PhasePoly::one())) out += "*(" + body_.str() + ")";
  return out;
}

}  // namespace moyal
