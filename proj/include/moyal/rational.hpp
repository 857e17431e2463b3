#pragma once

#include <gmpxx.h>

#include <string>

namespace moyal {

using Rational = mpq_class;

// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
// (including decimal literals) or zero denominator.
Rational rational_from_string(const std::string& text);

std::string to_string(const Rational& r);

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  GaussianRational() = default;
  GaussianRational(int v) : re(v) {}
  GaussianRational(long v) : re(v) {}
  GaussianRational(const Rational& r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, -im}; }

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

// i^k for any k (negative allowed).
GaussianRational imaginary_power(long k);

// c^k for k >= 0.
GaussianRational pow(const GaussianRational& c, unsigned long k);

Rational rational_pow(const Rational& r, unsigned long k);

Rational factorial(unsigned long n);
Rational binomial(unsigned long n, unsigned long k);

// Canonical text form: "0", "2", "-4/3", "i", "-2/3*i", "(1/2+3*i)".
std::string to_string(const GaussianRational& c);

}  // namespace moyal
