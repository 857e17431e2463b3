#pragma once

#include <compare>
#include <map>
#include <string>

#include "moyal/rational.hpp"

namespace moyal {

/// Commuting monomial x^xdeg p^pdeg g^gdeg. The coupling g rides along as a
/// commuting scalar symbol; derivatives ignore it.
struct PhaseMonomial {
  int xdeg = 0;
  int pdeg = 0;
  int gdeg = 0;

  int total_xp() const { return xdeg + pdeg; }

  // Graded lexicographic with p ranked before x; the g power groups outermost.
  friend std::strong_ordering operator<=>(const PhaseMonomial& a, const PhaseMonomial& b) {
    if (auto c = a.gdeg <=> b.gdeg; c != 0) return c;
    if (auto c = a.total_xp() <=> b.total_xp(); c != 0) return c;
    return a.pdeg <=> b.pdeg;
  }
  friend bool operator==(const PhaseMonomial& a, const PhaseMonomial& b) {
    return a.xdeg == b.xdeg && a.pdeg == b.pdeg && a.gdeg == b.gdeg;
  }
};

/// Sparse polynomial over GaussianRational in the commuting symbols x, p, g.
/// No stored coefficient is zero.
class PhasePoly {
 public:
  using TermMap = std::map<PhaseMonomial, GaussianRational>;

  PhasePoly() = default;
  explicit PhasePoly(GaussianRational constant);

  static PhasePoly monomial(PhaseMonomial m, GaussianRational c = GaussianRational(1));
  static PhasePoly x(int deg = 1) { return monomial({deg, 0, 0}); }
  static PhasePoly p(int deg = 1) { return monomial({0, deg, 0}); }
  static PhasePoly g(int deg = 1) { return monomial({0, 0, deg}); }
  static PhasePoly one() { return PhasePoly(GaussianRational(1)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_real() const;
  bool is_g_free() const;
  std::size_t term_count() const { return terms_.size(); }

  GaussianRational coeff(const PhaseMonomial& m) const;
  GaussianRational constant_term() const { return coeff({0, 0, 0}); }

  int max_total_degree() const;  // max over terms of xdeg+pdeg
  int max_xdeg() const;
  int max_pdeg() const;
  int max_gdeg() const;

  void add_term(const PhaseMonomial& m, const GaussianRational& c);

  PhasePoly& operator+=(const PhasePoly& o);
  PhasePoly& operator-=(const PhasePoly& o);
  PhasePoly& operator*=(const GaussianRational& c);

  friend PhasePoly operator+(PhasePoly a, const PhasePoly& b) { return a += b; }
  friend PhasePoly operator-(PhasePoly a, const PhasePoly& b) { return a -= b; }
  friend PhasePoly operator-(const PhasePoly& a);
  friend PhasePoly operator*(PhasePoly a, const GaussianRational& c) { return a *= c; }
  friend PhasePoly operator*(const GaussianRational& c, PhasePoly a) { return a *= c; }
  friend PhasePoly operator*(const PhasePoly& a, const PhasePoly& b);

  friend bool operator==(const PhasePoly& a, const PhasePoly& b) { return a.terms_ == b.terms_; }

  PhasePoly conj() const;
  PhasePoly diff_x() const;
  PhasePoly diff_p() const;

  PhasePoly reflect_g() const;                       // g -> -g
  PhasePoly substitute_g(const Rational& value) const;
  PhasePoly g_slice(int n) const;                    // coefficient of g^n, g stripped
  PhasePoly times_g_power(int n) const;

  std::string str() const;  // canonical text, descending monomial order

 private:
  TermMap terms_;
};

/// Plain term-by-term convolution; reference implementation for the
/// parallel product and the oracle used in tests.
PhasePoly poly_mul_serial(const PhasePoly& a, const PhasePoly& b);

/// OpenMP product over left-term buckets; identical result to the serial
/// reference (exact arithmetic, order-independent merge).
PhasePoly poly_mul_parallel(const PhasePoly& a, const PhasePoly& b);

}  // namespace moyal
