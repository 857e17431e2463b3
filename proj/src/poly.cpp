#include "moyal/poly.hpp"

#include <omp.h>

#include <algorithm>
#include <vector>

namespace moyal {

PhasePoly::PhasePoly(GaussianRational constant) {
  if (!constant.is_zero()) terms_.emplace(PhaseMonomial{}, std::move(constant));
}

PhasePoly PhasePoly::monomial(PhaseMonomial m, GaussianRational c) {
  PhasePoly out;
  if (!c.is_zero()) out.terms_.emplace(m, std::move(c));
  return out;
}

bool PhasePoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == PhaseMonomial{});
}

bool PhasePoly::is_real() const {
  for (const auto& [m, c] : terms_)
    if (c.im != 0) return false;
  return true;
}

bool PhasePoly::is_g_free() const {
  for (const auto& [m, c] : terms_)
    if (m.gdeg != 0) return false;
  return true;
}

GaussianRational PhasePoly::coeff(const PhaseMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

int PhasePoly::max_total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_xp());
  return d;
}

int PhasePoly::max_xdeg() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.xdeg);
  return d;
}

int PhasePoly::max_pdeg() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.pdeg);
  return d;
}

int PhasePoly::max_gdeg() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.gdeg);
  return d;
}

void PhasePoly::add_term(const PhaseMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PhasePoly& PhasePoly::operator+=(const PhasePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

PhasePoly& PhasePoly::operator-=(const PhasePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

PhasePoly& PhasePoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

PhasePoly operator-(const PhasePoly& a) {
  PhasePoly out = a;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

PhasePoly poly_mul_serial(const PhasePoly& a, const PhasePoly& b) {
  PhasePoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      out.add_term({ma.xdeg + mb.xdeg, ma.pdeg + mb.pdeg, ma.gdeg + mb.gdeg}, ca * cb);
    }
  }
  return out;
}

PhasePoly poly_mul_parallel(const PhasePoly& a, const PhasePoly& b) {
  std::vector<const PhasePoly::TermMap::value_type*> left;
  left.reserve(a.terms().size());
  for (const auto& t : a.terms()) left.push_back(&t);

  int nthreads = omp_get_max_threads();
  std::vector<PhasePoly> partial(nthreads);
#pragma omp parallel num_threads(nthreads)
  {
    PhasePoly local;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(left.size()); ++i) {
      const auto& [ma, ca] = *left[i];
      for (const auto& [mb, cb] : b.terms()) {
        local.add_term({ma.xdeg + mb.xdeg, ma.pdeg + mb.pdeg, ma.gdeg + mb.gdeg}, ca * cb);
      }
    }
    partial[omp_get_thread_num()] = std::move(local);
  }
  PhasePoly out;
  for (auto& part : partial) out += part;
  return out;
}

PhasePoly operator*(const PhasePoly& a, const PhasePoly& b) {
  // Parallel path only pays off for large operands.
  constexpr std::size_t kParallelWork = 16384;
  if (a.term_count() * b.term_count() >= kParallelWork && omp_get_max_threads() > 1)
    return poly_mul_parallel(a, b);
  return poly_mul_serial(a, b);
}

PhasePoly PhasePoly::conj() const {
  PhasePoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c.conj());
  return out;
}

PhasePoly PhasePoly::diff_x() const {
  PhasePoly out;
  for (const auto& [m, c] : terms_) {
    if (m.xdeg == 0) continue;
    out.add_term({m.xdeg - 1, m.pdeg, m.gdeg}, c * GaussianRational(m.xdeg));
  }
  return out;
}

PhasePoly PhasePoly::diff_p() const {
  PhasePoly out;
  for (const auto& [m, c] : terms_) {
    if (m.pdeg == 0) continue;
    out.add_term({m.xdeg, m.pdeg - 1, m.gdeg}, c * GaussianRational(m.pdeg));
  }
  return out;
}

PhasePoly PhasePoly::reflect_g() const {
  PhasePoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, (m.gdeg % 2 == 0) ? c : -c);
  return out;
}

PhasePoly PhasePoly::substitute_g(const Rational& value) const {
  PhasePoly out;
  for (const auto& [m, c] : terms_)
    out.add_term({m.xdeg, m.pdeg, 0}, c * GaussianRational(rational_pow(value, m.gdeg)));
  return out;
}

PhasePoly PhasePoly::g_slice(int n) const {
  PhasePoly out;
  for (const auto& [m, c] : terms_)
    if (m.gdeg == n) out.terms_.emplace(PhaseMonomial{m.xdeg, m.pdeg, 0}, c);
  return out;
}

PhasePoly PhasePoly::times_g_power(int n) const {
  PhasePoly out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(PhaseMonomial{m.xdeg, m.pdeg, m.gdeg + n}, c);
  return out;
}

namespace {

void append_power(std::string& s, const char* name, int deg) {
  if (deg == 0) return;
  if (!s.empty()) s += "*";
  s += name;
  if (deg != 1) s += "^" + std::to_string(deg);
}

}  // namespace

std::string monomial_str(const PhaseMonomial& m) {
  std::string s;
  append_power(s, "G", m.gdeg);
  append_power(s, "P", m.pdeg);
  append_power(s, "X", m.xdeg);
  return s.empty() ? "1" : s;
}

std::string PhasePoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    GaussianRational shown = c;
    const bool negative = (c.im == 0 && c.re < 0) || (c.re == 0 && c.im < 0);
    if (out.empty()) {
      if (negative) {
        out += "-";
        shown = -c;
      }
    } else {
      if (negative) {
        out += " - ";
        shown = -c;
      } else {
        out += " + ";
      }
    }
    std::string mono = monomial_str(m);
    if (mono == "1") {
      out += to_string(shown);
    } else if (shown == GaussianRational(1)) {
      out += mono;
    } else {
      out += to_string(shown) + "*" + mono;
    }
  }
  return out;
}

}  // namespace moyal
