#include "moyal/kernel.hpp"

#include <stdexcept>

#include "moyal/star.hpp"

namespace moyal {

KernelBasis::KernelBasis(const PhasePoly& h0, int max_total_degree) {
  if (h0.is_constant()) throw std::invalid_argument("kernel basis needs a nonconstant h0");
  if (!h0.is_g_free()) throw std::invalid_argument("kernel basis expects a g-free h0");
  PhasePoly power = PhasePoly::one();
  const int step = h0.max_total_degree();
  for (int j = 0; j * step <= max_total_degree; ++j) {
    if (j > 0) power = power * h0;
    if (j > 0 && !star_commutator(power, h0, Product::moyal).is_zero())
      throw std::logic_error("kernel generator h0^" + std::to_string(j) +
                             " does not star-commute with h0");
    gens_.push_back(power);
    pivots_.push_back(power.terms().rbegin()->first);
  }
}

PhasePoly KernelBasis::project_out(const PhasePoly& f) const {
  PhasePoly out = f;
  for (int j = static_cast<int>(gens_.size()) - 1; j >= 0; --j) {
    GaussianRational c = out.coeff(pivots_[j]);
    if (c.is_zero()) continue;
    GaussianRational lead = gens_[j].coeff(pivots_[j]);
    out -= (c / lead) * gens_[j];
  }
  return out;
}

std::optional<std::vector<GaussianRational>> KernelBasis::coordinates(const PhasePoly& f) const {
  std::vector<GaussianRational> coords(gens_.size(), GaussianRational(0));
  PhasePoly rest = f;
  for (int j = static_cast<int>(gens_.size()) - 1; j >= 0; --j) {
    GaussianRational c = rest.coeff(pivots_[j]);
    if (c.is_zero()) continue;
    GaussianRational lead = gens_[j].coeff(pivots_[j]);
    coords[j] = c / lead;
    rest -= coords[j] * gens_[j];
  }
  if (!rest.is_zero()) return std::nullopt;
  return coords;
}

PhasePoly KernelBasis::combine(const std::vector<GaussianRational>& coords) const {
  PhasePoly out;
  for (std::size_t j = 0; j < coords.size() && j < gens_.size(); ++j)
    out += coords[j] * gens_[j];
  return out;
}

}  // namespace moyal
