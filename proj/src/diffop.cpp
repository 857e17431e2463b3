#include "moyal/diffop.hpp"

#include <algorithm>

namespace moyal {

void LinearDiffOp::add_term(const DerivIndex& d, const PhasePoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(d, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhasePoly LinearDiffOp::coeff(const DerivIndex& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? PhasePoly() : it->second;
}

LinearDiffOp& LinearDiffOp::operator+=(const LinearDiffOp& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

LinearDiffOp& LinearDiffOp::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [d, v] : terms_) v *= c;
  return *this;
}

ExpWeightedPoly LinearDiffOp::apply(const ExpWeightedPoly& u) const {
  int maxdx = 0, maxdp = 0;
  for (const auto& [d, c] : terms_) {
    maxdx = std::max(maxdx, d.dx);
    maxdp = std::max(maxdp, d.dp);
  }
  // Derivative ladder, reused across terms.
  std::vector<std::vector<ExpWeightedPoly>> grid(maxdx + 1);
  grid[0].resize(maxdp + 1);
  grid[0][0] = u;
  for (int b = 1; b <= maxdp; ++b) grid[0][b] = grid[0][b - 1].diff_p();
  for (int a = 1; a <= maxdx; ++a) {
    grid[a].resize(maxdp + 1);
    for (int b = 0; b <= maxdp; ++b) grid[a][b] = grid[a - 1][b].diff_x();
  }
  ExpWeightedPoly acc;
  for (const auto& [d, c] : terms_) acc += ExpWeightedPoly(c) * grid[d.dx][d.dp];
  return acc;
}

PhasePoly LinearDiffOp::apply(const PhasePoly& u) const {
  return apply(ExpWeightedPoly(u)).as_poly();
}

LinearDiffOp LinearDiffOp::g_slice(int n) const {
  LinearDiffOp out;
  for (const auto& [d, c] : terms_) out.add_term(d, c.g_slice(n));
  return out;
}

int LinearDiffOp::max_coeff_gdeg() const {
  int d = 0;
  for (const auto& [di, c] : terms_) d = std::max(d, c.max_gdeg());
  return d;
}

std::string LinearDiffOp::str(const std::string& unknown) const {
  if (terms_.empty()) return "0 = 0";
  std::string out = "0 =";
  bool first = true;
  for (const auto& [d, c] : terms_) {
    out += first ? " " : " + ";
    first = false;
    out += "(" + c.str() + ")*";
    std::string slot;
    if (d.dx > 0) {
      slot += "dx";
      if (d.dx > 1) slot += "^" + std::to_string(d.dx);
    }
    if (d.dp > 0) {
      if (!slot.empty()) slot += " ";
      slot += "dp";
      if (d.dp > 1) slot += "^" + std::to_string(d.dp);
    }
    if (slot.empty())
      out += unknown;
    else
      out += slot + "[" + unknown + "]";
  }
  return out;
}

}  // namespace moyal
