#include "moyal/gseries.hpp"

#include <stdexcept>

#include "moyal/star.hpp"

namespace moyal {

GSeries::GSeries(std::vector<ExpWeightedPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

GSeries GSeries::one(int truncation_order) {
  GSeries s(truncation_order);
  s.set_coeff(0, ExpWeightedPoly::one());
  return s;
}

GSeries GSeries::truncated(int order) const {
  GSeries out(order);
  for (int n = 0; n <= order && n <= truncation_order(); ++n) out.coeffs_[n] = coeffs_[n];
  return out;
}

GSeries GSeries::reflect_g() const {
  GSeries out(truncation_order());
  for (int n = 0; n <= truncation_order(); ++n) {
    ExpWeightedPoly c = coeffs_[n].reflect_g();
    out.coeffs_[n] = (n % 2 == 0) ? c : -c;
  }
  return out;
}

GSeries& GSeries::operator+=(const GSeries& o) {
  if (o.truncation_order() < truncation_order()) *this = truncated(o.truncation_order());
  for (int n = 0; n <= truncation_order(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

GSeries& GSeries::operator-=(const GSeries& o) {
  if (o.truncation_order() < truncation_order()) *this = truncated(o.truncation_order());
  for (int n = 0; n <= truncation_order(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

GSeries& GSeries::operator*=(const GaussianRational& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

PhasePoly GSeries::materialize() const {
  PhasePoly out;
  for (int n = 0; n <= truncation_order(); ++n) out += coeffs_[n].as_poly().times_g_power(n);
  return out;
}

bool GSeries::is_one() const {
  if (!(coeffs_[0] == ExpWeightedPoly::one())) return false;
  for (int n = 1; n <= truncation_order(); ++n)
    if (!coeffs_[n].is_zero()) return false;
  return true;
}

GSeries series_mul(const GSeries& a, const GSeries& b, SeriesProduct product) {
  const int order = std::min(a.truncation_order(), b.truncation_order());
  GSeries out(order);
  for (int n = 0; n <= order; ++n) {
    ExpWeightedPoly acc;
    for (int k = 0; k <= n; ++k) {
      const ExpWeightedPoly& u = a.coeff(k);
      const ExpWeightedPoly& v = b.coeff(n - k);
      if (u.is_zero() || v.is_zero()) continue;
      acc += (product == SeriesProduct::star) ? star_moyal(u, v) : u * v;
    }
    out.set_coeff(n, std::move(acc));
  }
  return out;
}

}  // namespace moyal
