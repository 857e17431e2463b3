#include "moyal/emit.hpp"

namespace moyal {

namespace {

void append_sbasis_monomial(std::string& out, const PhaseMonomial& m) {
  std::string mono;
  if (m.gdeg > 0) {
    mono += "G";
    if (m.gdeg != 1) mono += "^" + std::to_string(m.gdeg);
  }
  auto add = [&mono](const std::string& part) {
    if (!mono.empty()) mono += "*";
    mono += part;
  };
  if (m.pdeg > 0 && m.xdeg > 0) {
    add("S(" + std::to_string(m.pdeg) + "," + std::to_string(m.xdeg) + ")");
  } else if (m.pdeg > 0) {
    add(m.pdeg == 1 ? "P" : "P^" + std::to_string(m.pdeg));
  } else if (m.xdeg > 0) {
    add(m.xdeg == 1 ? "X" : "X^" + std::to_string(m.xdeg));
  }
  out += mono;
}

}  // namespace

std::string sbasis_str(const PhasePoly& symbol) {
  if (symbol.is_zero()) return "0";
  std::string out;
  for (auto it = symbol.terms().rbegin(); it != symbol.terms().rend(); ++it) {
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
    if (m.total_xp() == 0 && m.gdeg == 0) {
      out += to_string(shown);
    } else {
      std::string mono;
      append_sbasis_monomial(mono, m);
      if (shown == GaussianRational(1))
        out += mono;
      else
        out += to_string(shown) + "*" + mono;
    }
  }
  return out;
}

std::string latex(const Rational& r) {
  if (r.get_den() == 1) return r.get_str();
  std::string num = mpz_class(r.get_num()).get_str();
  bool neg = false;
  if (!num.empty() && num[0] == '-') {
    neg = true;
    num = num.substr(1);
  }
  return std::string(neg ? "-" : "") + "\\frac{" + num + "}{" + mpz_class(r.get_den()).get_str() +
         "}";
}

std::string latex(const GaussianRational& c) {
  if (c.is_zero()) return "0";
  if (c.im == 0) return latex(c.re);
  std::string imag = (c.im == 1) ? "i" : (c.im == -1 ? "-i" : latex(c.im) + "i");
  if (c.re == 0) return imag;
  std::string out = "\\left(" + latex(c.re);
  if (c.im > 0) out += "+";
  out += imag + "\\right)";
  return out;
}

namespace {

void latex_power(std::string& s, const char* name, int deg, bool hat) {
  if (deg == 0) return;
  s += hat ? ("\\hat{" + std::string(name) + "}") : std::string(name);
  if (deg != 1) s += "^{" + std::to_string(deg) + "}";
}

}  // namespace

std::string latex(const PhasePoly& f, bool operator_hats) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
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
    latex_power(mono, "g", m.gdeg, false);
    latex_power(mono, "p", m.pdeg, operator_hats);
    latex_power(mono, "x", m.xdeg, operator_hats);
    if (mono.empty())
      out += latex(shown);
    else if (shown == GaussianRational(1))
      out += mono;
    else
      out += latex(shown) + mono;
  }
  return out;
}

std::string latex(const ExpWeightedPoly& f) {
  if (f.is_plain_poly()) return latex(f.body());
  std::string out = "e^{" + latex(f.exponent()) + "}";
  if (!(f.body() == PhasePoly::one())) out += "\\left(" + latex(f.body()) + "\\right)";
  return out;
}

namespace {

Json term_to_json(const PhaseMonomial& m, const GaussianRational& c) {
  Json t;
  t["xdeg"] = m.xdeg;
  t["pdeg"] = m.pdeg;
  if (m.gdeg != 0) t["gdeg"] = m.gdeg;
  t["re"] = to_string(c.re);
  t["im"] = to_string(c.im);
  return t;
}

}  // namespace

Json to_json(const PhasePoly& f) {
  Json arr = Json::array();
  for (const auto& [m, c] : f.terms()) arr.push_back(term_to_json(m, c));
  return arr;
}

Json to_json(const ExpWeightedPoly& f) {
  Json j;
  j["terms"] = to_json(f.body());
  j["exponent_terms"] = to_json(f.exponent());
  return j;
}

Json series_to_json(const GSeries& s) {
  Json arr = Json::array();
  for (int n = 0; n <= s.truncation_order(); ++n) {
    Json entry;
    entry["power"] = n;
    entry["terms"] = to_json(s.coeff(n).body());
    entry["exponent_terms"] = to_json(s.coeff(n).exponent());
    arr.push_back(entry);
  }
  return arr;
}

PhasePoly phase_poly_from_json(const Json& j) {
  PhasePoly out;
  for (const auto& t : j) {
    PhaseMonomial m{t.at("xdeg").get<int>(), t.at("pdeg").get<int>(),
                    t.contains("gdeg") ? t.at("gdeg").get<int>() : 0};
    GaussianRational c{rational_from_string(t.at("re").get<std::string>()),
                       rational_from_string(t.at("im").get<std::string>())};
    out.add_term(m, c);
  }
  return out;
}

ExpWeightedPoly exp_poly_from_json(const Json& j) {
  return {phase_poly_from_json(j.at("exponent_terms")), phase_poly_from_json(j.at("terms"))};
}

GSeries series_from_json(const Json& j) {
  GSeries out(static_cast<int>(j.size()) - 1);
  for (const auto& entry : j) {
    int n = entry.at("power").get<int>();
    out.set_coeff(n, ExpWeightedPoly(phase_poly_from_json(entry.at("exponent_terms")),
                                     phase_poly_from_json(entry.at("terms"))));
  }
  return out;
}

Json to_json(const ResidualReport& r) {
  Json j;
  j["nonzero_terms_per_order"] = r.nonzero_terms_per_order;
  j["all_zero"] = r.all_zero();
  return j;
}

Json to_json(const SpectralReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["g_values"] = r.g_values;
  j["trusted_count"] = r.trusted_count;
  j["max_imag"] = r.max_imag;
  j["max_gap"] = r.max_gap;
  j["fitted_exponents"] = r.fitted_exponents;
  Json eh = Json::array();
  for (const auto& list : r.eigenvalues_H) {
    Json one = Json::array();
    for (const auto& e : list) one.push_back(Json::array({e.real(), e.imag()}));
    eh.push_back(one);
  }
  j["eigenvalues_H"] = eh;
  j["eigenvalues_h"] = r.eigenvalues_h;
  j["pairwise_gaps"] = r.pairwise_gaps;
  return j;
}

}  // namespace moyal
