#include "moyal/ordering.hpp"

#include <algorithm>
#include <mutex>
#include <utility>

namespace moyal {

OperatorPoly::OperatorPoly(GaussianRational constant) {
  if (!constant.is_zero()) terms_.emplace(OperatorMonomial{}, std::move(constant));
}

OperatorPoly OperatorPoly::monomial(OperatorMonomial m, GaussianRational c) {
  OperatorPoly out;
  if (!c.is_zero()) out.terms_.emplace(m, std::move(c));
  return out;
}

GaussianRational OperatorPoly::coeff(const OperatorMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

int OperatorPoly::max_total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total());
  return d;
}

int OperatorPoly::max_gdeg() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.gdeg);
  return d;
}

void OperatorPoly::add_term(const OperatorMonomial& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

OperatorPoly& OperatorPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

OperatorPoly operator-(const OperatorPoly& a) {
  OperatorPoly out = a;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

OperatorPoly op_mul(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      // (p^A x^B)(p^C x^D): reorder x^B p^C.
      const int B = ma.xdeg, C = mb.pdeg;
      const GaussianRational cc = ca * cb;
      const int kmax = std::min(B, C);
      for (int k = 0; k <= kmax; ++k) {
        GaussianRational w = cc * imaginary_power(k) *
                             GaussianRational(binomial(C, k) * binomial(B, k) * factorial(k));
        out.add_term({ma.pdeg + C - k, B - k + mb.xdeg, ma.gdeg + mb.gdeg}, w);
      }
    }
  }
  return out;
}

OperatorPoly op_adjoint(const OperatorPoly& a) {
  OperatorPoly out;
  for (const auto& [m, c] : a.terms()) {
    // (p^M x^N)^† = x^N p^M, re-normal-ordered.
    const int M = m.pdeg, N = m.xdeg;
    const GaussianRational cc = c.conj();
    const int kmax = std::min(M, N);
    for (int k = 0; k <= kmax; ++k) {
      GaussianRational w = cc * imaginary_power(k) *
                           GaussianRational(binomial(M, k) * binomial(N, k) * factorial(k));
      out.add_term({M - k, N - k, m.gdeg}, w);
    }
  }
  return out;
}

bool hermitian_check(const OperatorPoly& a) { return op_adjoint(a) == a; }

OperatorPoly standard_quantize(const PhasePoly& f) {
  OperatorPoly out;
  for (const auto& [m, c] : f.terms()) out.add_term({m.pdeg, m.xdeg, m.gdeg}, c);
  return out;
}

PhasePoly standard_symbol(const OperatorPoly& a) {
  PhasePoly out;
  for (const auto& [m, c] : a.terms()) out.add_term({m.xdeg, m.pdeg, m.gdeg}, c);
  return out;
}

OperatorPoly symmetrized_product(int m, int n) {
  static std::map<std::pair<int, int>, OperatorPoly> memo;
  static std::mutex memo_mutex;
  std::lock_guard<std::mutex> lock(memo_mutex);

  // Iterative fill so the recurrence never re-locks.
  for (int mm = 0; mm <= m; ++mm) {
    for (int nn = 0; nn <= n; ++nn) {
      auto key = std::make_pair(mm, nn);
      if (memo.count(key)) continue;
      OperatorPoly value;
      if (mm == 0) {
        value = OperatorPoly::x(nn);
      } else {
        const OperatorPoly& prev = memo.at(std::make_pair(mm - 1, nn));
        OperatorPoly p1 = op_mul(OperatorPoly::p(), prev);
        p1 += op_mul(prev, OperatorPoly::p());
        p1 *= GaussianRational(Rational(1, 2));
        value = std::move(p1);
      }
      memo.emplace(key, std::move(value));
    }
  }
  return memo.at(std::make_pair(m, n));
}

OperatorPoly weyl_quantize(const PhasePoly& f) {
  OperatorPoly out;
  for (const auto& [m, c] : f.terms()) {
    OperatorPoly s = symmetrized_product(m.pdeg, m.xdeg);
    for (const auto& [om, oc] : s.terms())
      out.add_term({om.pdeg, om.xdeg, om.gdeg + m.gdeg}, oc * c);
  }
  return out;
}

PhasePoly weyl_symbol(const OperatorPoly& a) {
  PhasePoly out;
  OperatorPoly rest = a;
  while (!rest.is_zero()) {
    // Highest total degree first: S_{m,n} = p̂^m x̂^n + lower-degree terms,
    // so each subtraction strictly reduces the leading block.
    auto it = rest.terms().rbegin();
    OperatorMonomial m = it->first;
    GaussianRational c = it->second;
    out.add_term({m.xdeg, m.pdeg, m.gdeg}, c);
    OperatorPoly s = symmetrized_product(m.pdeg, m.xdeg);
    for (const auto& [om, oc] : s.terms())
      rest.add_term({om.pdeg, om.xdeg, om.gdeg + m.gdeg}, -(oc * c));
  }
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

std::string OperatorPoly::str() const {
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
    std::string mono;
    append_power(mono, "G", m.gdeg);
    append_power(mono, "P", m.pdeg);
    append_power(mono, "X", m.xdeg);
    if (mono.empty()) {
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
