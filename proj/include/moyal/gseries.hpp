#pragma once

#include <vector>

#include "moyal/exppoly.hpp"

namespace moyal {

enum class Product { moyal, standard };        // ⋆ resp. ∗
enum class SeriesProduct { pointwise, star };  // star = Moyal

/// Truncated formal power series in the coupling g. Coefficient n houses c_n
/// with the g^n factor stripped; operations between two series truncate at
/// the minimum of the two truncation orders.
class GSeries {
 public:
  GSeries() : coeffs_(1) {}
  explicit GSeries(int truncation_order) : coeffs_(truncation_order + 1) {}
  explicit GSeries(std::vector<ExpWeightedPoly> coeffs);

  static GSeries one(int truncation_order);

  int truncation_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ExpWeightedPoly& coeff(int n) const { return coeffs_.at(n); }
  void set_coeff(int n, ExpWeightedPoly c) { coeffs_.at(n) = std::move(c); }

  GSeries truncated(int order) const;

  /// g -> -g: flips odd-index coefficients and reflects any g carried inside.
  GSeries reflect_g() const;

  GSeries& operator+=(const GSeries& o);
  GSeries& operator-=(const GSeries& o);
  GSeries& operator*=(const GaussianRational& c);
  friend GSeries operator+(GSeries a, const GSeries& b) { return a += b; }
  friend GSeries operator-(GSeries a, const GSeries& b) { return a -= b; }
  friend GSeries operator*(GSeries a, const GaussianRational& c) { return a *= c; }

  friend bool operator==(const GSeries& a, const GSeries& b) { return a.coeffs_ == b.coeffs_; }

  /// Sum of g^n * coeff(n) as one polynomial; requires every coefficient to
  /// be a plain polynomial (zero exponent).
  PhasePoly materialize() const;

  bool is_one() const;

 private:
  std::vector<ExpWeightedPoly> coeffs_;
};

/// Cauchy product: coefficient n of the result is sum_k product(a_k, b_{n-k}),
/// truncated at the minimum truncation order.
GSeries series_mul(const GSeries& a, const GSeries& b, SeriesProduct product);

}  // namespace moyal
