#pragma once

#include <compare>
#include <map>
#include <string>

#include "moyal/exppoly.hpp"

namespace moyal {

struct DerivIndex {
  int dx = 0;
  int dp = 0;

  friend std::strong_ordering operator<=>(const DerivIndex& a, const DerivIndex& b) {
    if (auto c = (a.dx + a.dp) <=> (b.dx + b.dp); c != 0) return c;
    return a.dx <=> b.dx;
  }
  friend bool operator==(const DerivIndex&, const DerivIndex&) = default;
};

/// Linear differential operator sum_{a,b} coeff_{a,b}(x,p,g) dx^a dp^b.
class LinearDiffOp {
 public:
  using TermMap = std::map<DerivIndex, PhasePoly>;

  LinearDiffOp() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const DerivIndex& d, const PhasePoly& coeff);
  PhasePoly coeff(const DerivIndex& d) const;

  LinearDiffOp& operator+=(const LinearDiffOp& o);
  LinearDiffOp& operator*=(const GaussianRational& c);
  friend bool operator==(const LinearDiffOp& a, const LinearDiffOp& b) {
    return a.terms_ == b.terms_;
  }

  ExpWeightedPoly apply(const ExpWeightedPoly& u) const;
  PhasePoly apply(const PhasePoly& u) const;

  /// Keep only the g^n slice of every coefficient (g stripped).
  LinearDiffOp g_slice(int n) const;
  int max_coeff_gdeg() const;

  /// Canonical text: "0 = (c00)*u + (c01)*dp[u] + ... + (c10)*dx[u] + ..."
  std::string str(const std::string& unknown = "eta2") const;

 private:
  TermMap terms_;
};

}  // namespace moyal
