#pragma once

#include <compare>
#include <map>
#include <string>

#include "moyal/poly.hpp"

namespace moyal {

/// One normal-ordered word p̂^pdeg x̂^xdeg (all p̂ factors to the left of all
/// x̂ factors), times the commuting coupling g^gdeg.
struct OperatorMonomial {
  int pdeg = 0;
  int xdeg = 0;
  int gdeg = 0;

  int total() const { return pdeg + xdeg; }

  friend std::strong_ordering operator<=>(const OperatorMonomial& a, const OperatorMonomial& b) {
    if (auto c = a.gdeg <=> b.gdeg; c != 0) return c;
    if (auto c = a.total() <=> b.total(); c != 0) return c;
    return a.pdeg <=> b.pdeg;
  }
  friend bool operator==(const OperatorMonomial& a, const OperatorMonomial& b) {
    return a.pdeg == b.pdeg && a.xdeg == b.xdeg && a.gdeg == b.gdeg;
  }
};

/// Noncommutative polynomial in x̂, p̂ held in standard (p̂-left) normal
/// order. Multiplication re-normalizes via [x̂,p̂] = i.
class OperatorPoly {
 public:
  using TermMap = std::map<OperatorMonomial, GaussianRational>;

  OperatorPoly() = default;
  explicit OperatorPoly(GaussianRational constant);

  static OperatorPoly monomial(OperatorMonomial m, GaussianRational c = GaussianRational(1));
  static OperatorPoly x(int deg = 1) { return monomial({0, deg, 0}); }
  static OperatorPoly p(int deg = 1) { return monomial({deg, 0, 0}); }
  static OperatorPoly g(int deg = 1) { return monomial({0, 0, deg}); }
  static OperatorPoly one() { return OperatorPoly(GaussianRational(1)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coeff(const OperatorMonomial& m) const;
  int max_total_degree() const;
  int max_gdeg() const;
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const OperatorMonomial& m, const GaussianRational& c);

  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  OperatorPoly& operator*=(const GaussianRational& c);
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator-(const OperatorPoly& a);
  friend OperatorPoly operator*(OperatorPoly a, const GaussianRational& c) { return a *= c; }
  friend OperatorPoly operator*(const GaussianRational& c, OperatorPoly a) { return a *= c; }

  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;  // canonical text; juxtaposition means operator product

 private:
  TermMap terms_;
};

/// Exact product re-expressed in normal order via x̂^n p̂^m =
/// sum_k C(m,k) C(n,k) k! i^k p̂^{m-k} x̂^{n-k}.
OperatorPoly op_mul(const OperatorPoly& a, const OperatorPoly& b);

/// Reverse each word, conjugate coefficients, re-normal-order. Involution.
OperatorPoly op_adjoint(const OperatorPoly& a);

bool hermitian_check(const OperatorPoly& a);

/// Monomial relabeling p^m x^n -> p̂^m x̂^n (bijective onto normal order).
OperatorPoly standard_quantize(const PhasePoly& f);
/// Inverse of standard_quantize: read the normal-ordered coefficients back.
PhasePoly standard_symbol(const OperatorPoly& a);

/// Totally symmetric Weyl polynomial S_{m,n}, expanded into normal order.
/// Memoized recurrence S_{m,n} = (p̂ S_{m-1,n} + S_{m-1,n} p̂)/2.
OperatorPoly symmetrized_product(int m, int n);

/// Weyl quantization: each monomial p^m x^n maps through S_{m,n}.
OperatorPoly weyl_quantize(const PhasePoly& f);

/// Inverse of weyl_quantize, by triangular back-substitution from the
/// highest total degree down.
PhasePoly weyl_symbol(const OperatorPoly& a);

}  // namespace moyal
