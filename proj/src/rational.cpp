#include "moyal/rational.hpp"

#include <stdexcept>

namespace moyal {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : text) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
      throw std::invalid_argument("malformed rational literal: " + text);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& r) { return r.get_str(); }

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  Rational n = o.re * o.re + o.im * o.im;
  if (n == 0) throw std::domain_error("division by zero GaussianRational");
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational imaginary_power(long k) {
  long m = ((k % 4) + 4) % 4;
  switch (m) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::imaginary_unit();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::imaginary_unit();
  }
}

GaussianRational pow(const GaussianRational& c, unsigned long k) {
  GaussianRational acc(1);
  for (unsigned long j = 0; j < k; ++j) acc *= c;
  return acc;
}

Rational rational_pow(const Rational& r, unsigned long k) {
  Rational acc(1);
  for (unsigned long j = 0; j < k; ++j) acc *= r;
  return acc;
}

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

namespace {

std::string imaginary_part_string(const Rational& im) {
  if (im == 1) return "i";
  if (im == -1) return "-i";
  return to_string(im) + "*i";
}

}  // namespace

std::string to_string(const GaussianRational& c) {
  if (c.is_zero()) return "0";
  if (c.im == 0) return to_string(c.re);
  if (c.re == 0) return imaginary_part_string(c.im);
  std::string out = "(" + to_string(c.re);
  if (c.im > 0) out += "+";
  out += imaginary_part_string(c.im) + ")";
  return out;
}

}  // namespace moyal
