// Acceptance suite: one line per criterion, everything exact unless stated.
// Returns nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cubic_reference.hpp"
#include "moyal/intertwiner.hpp"
#include "moyal/parser.hpp"
#include "moyal/specverify.hpp"
#include "moyal/star.hpp"
#include "quartic_reference.hpp"
#include "support.hpp"

using namespace moyal;
using testsupport::op;
using testsupport::random_operator;
using testsupport::random_poly;
using testsupport::sym;

namespace {

struct Criterion {
  std::string name;
  double limit_ms = 0;  // 0 = no runtime limit
  std::function<void(std::string&)> body;
};

#define ACCEPT(cond)                                                    \
  do {                                                                  \
    if (!(cond)) throw std::runtime_error("failed: " #cond);            \
  } while (0)

HamiltonianSplit cubic() { return parse_hamiltonian(cubic_reference::kHamiltonian, {}); }

HamiltonianSplit quartic(const Rational& a) {
  return parse_hamiltonian(quartic_reference::kHamiltonian, {{"a", a}});
}

LinearDiffOp make_op(std::initializer_list<std::pair<DerivIndex, const char*>> slots,
                     const ParamMap& params = {}) {
  LinearDiffOp out;
  for (const auto& [d, text] : slots) out.add_term(d, sym(text, params));
  return out;
}

void criterion_isomorphism_anchors(std::string&) {
  PhasePoly x2 = PhasePoly::x(2), p2 = PhasePoly::p(2);
  ACCEPT(star_moyal(x2, p2) - star_moyal(p2, x2) == sym("4*i*P*X"));
  ACCEPT(star_standard(x2, p2) - star_standard(p2, x2) == sym("4*i*P*X - 2"));
}

void criterion_pde_reproduction(std::string&) {
  HamiltonianSplit Hc = cubic();
  ACCEPT(build_pde(Hc, Product::moyal) == make_op({
                                              {{0, 0}, "4*G*X^3"},
                                              {{0, 1}, "-2*X"},
                                              {{0, 2}, "-3*G*X"},
                                              {{1, 0}, "2*P"},
                                          }));
  ACCEPT(build_pde(Hc, Product::standard) == make_op({
                                                 {{0, 0}, "4*G*X^3"},
                                                 {{0, 1}, "-2*X + 6*i*G*X^2"},
                                                 {{0, 2}, "-i - 6*G*X"},
                                                 {{0, 3}, "-2*i*G"},
                                                 {{1, 0}, "2*P"},
                                                 {{2, 0}, "i"},
                                             }));
  ParamMap pa{{"a", Rational(16)}};
  HamiltonianSplit Hq = quartic(16);
  ACCEPT(build_pde(Hq, Product::moyal) == make_op(
                                              {
                                                  {{0, 0}, "4*G*P^2*X - 8*G*X*a"},
                                                  {{0, 1}, "-4*X*a"},
                                                  {{1, 0}, "-1 + 4*P"},
                                                  {{1, 1}, "2*G*P"},
                                                  {{2, 0}, "-G*X"},
                                              },
                                              pa));
  ACCEPT(build_pde(Hq, Product::standard) ==
         make_op(
             {
                 {{0, 0}, "4*G*P^2*X - 8*G*X*a + 4*i*G*P"},
                 {{0, 1}, "-4*X*a + 2*i*G*P^2 - 4*i*G*a"},
                 {{0, 2}, "-2*i*a"},
                 {{1, 0}, "-1 - 2*G + 4*P + 4*i*G*P*X"},
                 {{2, 0}, "2*i - 2*G*X"},
             },
             pa));
}

void criterion_exact_pipeline(std::string&) {
  for (const Rational& a : {Rational(1), Rational(16), Rational(3, 2)}) {
    ParamMap pa{{"a", a}};
    ExactSolution sol = solve_exact(quartic(a));
    ACCEPT(sol.eta_squared.exponent() == sym(quartic_reference::kEta2Exponent, pa));
    ACCEPT(sol.eta.exponent() == sym(quartic_reference::kEtaExponent, pa));
    ACCEPT(sol.eta_inverse == sol.eta.reflect_g());
    ACCEPT(sol.h == sym(quartic_reference::kCounterpart, pa));
    ACCEPT(sol.h.substitute_g(1) == sym(quartic_reference::kCounterpartAtG1, pa));
    ACCEPT(verify_intertwining(quartic(a), sol.eta_squared, 6).all_zero());
  }
  for (const Rational& m2 : {Rational(1), Rational(2)}) {
    ParamMap pm{{"a", Rational(16)}, {"m2", m2}};
    HamiltonianSplit H = parse_hamiltonian(quartic_reference::kHamiltonianMassive, pm);
    ExactSolution sol = solve_exact(H);
    ACCEPT(sol.eta.exponent() == sym(quartic_reference::kEtaExponentMassive, pm));
    ACCEPT(sol.h == sym(quartic_reference::kCounterpartMassive, pm));
    ACCEPT(verify_intertwining(H, sol.eta_squared, 6).all_zero());
  }
}

// Shared across criteria 4-6 so the order-6 tower is computed once.
struct CubicPipeline {
  NormalizedTower tower;
  GSeries eta;
  GSeries h;
};
CubicPipeline* pipeline = nullptr;

void criterion_cubic_tables(std::string&) {
  HamiltonianSplit H = cubic();
  RawTower raw = solve_perturbative(H, 5);
  for (int n = 0; n <= 5; ++n) ACCEPT(raw.coefficients[n] == sym(cubic_reference::kCtilde[n]));

  pipeline = new CubicPipeline{normalize(H, 6), GSeries(), GSeries()};
  for (int n = 0; n <= 6; ++n)
    ACCEPT(pipeline->tower.eta_squared.coeff(n).as_poly() == sym(cubic_reference::kC[n]));
  // Spot anchors inside the order-5 and order-6 tables.
  ACCEPT(pipeline->tower.eta_squared.coeff(5).as_poly().coeff({0, 15, 0}) ==
         GaussianRational(Rational(128, 3645)));

  pipeline->eta = star_sqrt(pipeline->tower.eta_squared);
  for (int n = 0; n <= 6; ++n)
    ACCEPT(pipeline->eta.coeff(n).as_poly() == sym(cubic_reference::kQ[n]));
  ACCEPT(pipeline->eta.coeff(6).as_poly().coeff({12, 6, 0}) ==
         GaussianRational(Rational(1, 720)));
}

void criterion_hermitian_counterpart(std::string&) {
  ACCEPT(pipeline != nullptr);
  pipeline->h = hermitian_counterpart(cubic(), pipeline->eta);
  const GSeries& h = pipeline->h;
  ACCEPT(h.coeff(0).as_poly() == sym(cubic_reference::kH0));
  ACCEPT(h.coeff(2).as_poly() == sym(cubic_reference::kH2));
  ACCEPT(h.coeff(4).as_poly() == sym(cubic_reference::kH4));
  ACCEPT(h.coeff(6).as_poly() == sym(cubic_reference::kH6));
  ACCEPT(h.coeff(6).as_poly().coeff({0, 0, 0}) == GaussianRational(128));
  ACCEPT(h.coeff(6).as_poly().coeff({0, 8, 0}) == GaussianRational(-72));
  for (int n = 1; n <= 5; n += 2) ACCEPT(h.coeff(n).is_zero());
  for (int n = 0; n <= 6; n += 2) ACCEPT(hermitian_check(weyl_quantize(h.coeff(n).as_poly())));
}

void criterion_normalization(std::string&) {
  ACCEPT(pipeline != nullptr);
  const GSeries& eta2 = pipeline->tower.eta_squared;
  ACCEPT(series_mul(eta2, eta2.reflect_g(), SeriesProduct::star).is_one());
  ACCEPT(star_inverse(pipeline->eta) == pipeline->eta.reflect_g());
}

void criterion_homomorphisms(std::string& detail) {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    PhasePoly f = random_poly(rng, 6, 5);
    PhasePoly g = random_poly(rng, 6, 5);
    ACCEPT(weyl_quantize(star_moyal(f, g)) == op_mul(weyl_quantize(f), weyl_quantize(g)));
    ACCEPT(standard_quantize(star_standard(f, g)) ==
           op_mul(standard_quantize(f), standard_quantize(g)));
  }
  for (int trial = 0; trial < 100; ++trial) {
    PhasePoly f = random_poly(rng, 6, 4);
    PhasePoly g = random_poly(rng, 6, 4);
    PhasePoly h = random_poly(rng, 6, 4);
    ACCEPT(star_moyal(star_moyal(f, g), h) == star_moyal(f, star_moyal(g, h)));
    ACCEPT(star_standard(star_standard(f, g), h) == star_standard(f, star_standard(g, h)));
  }
  detail = "200 pairs, 100 triples";
}

void criterion_isospectrality(std::string& detail) {
  ACCEPT(pipeline != nullptr);
  HamiltonianSplit Hc = cubic();
  SpectralReport cubic_report =
      isospectral_check(Hc, pipeline->h, {1.0 / 20.0, 1.0 / 40.0}, 200);
  ACCEPT(cubic_report.trusted_count >= 4);
  ACCEPT(cubic_report.max_imag < 1e-8);
  ACCEPT(cubic_report.fitted_exponents.size() == 1);
  double exponent = cubic_report.fitted_exponents[0];
  ACCEPT(exponent >= 7.0 && exponent <= 9.0);

  HamiltonianSplit Hq = quartic(16);
  SolveOptions opts;
  opts.order = 2;
  MetricSolution quartic_sol = solve_metric(Hq, opts);
  ACCEPT(quartic_sol.mode == SolveMode::exact);
  SpectralReport quartic_report = isospectral_check(Hq, quartic_sol.h, {1.0}, 400);
  ACCEPT(quartic_report.trusted_count >= 4);
  ACCEPT(quartic_report.max_gap[0] < 1e-6);

  char buf[160];
  std::snprintf(buf, sizeof buf,
                "exponent %.2f in [7,9]; max imag %.1e; quartic gap %.1e over %d levels",
                exponent, cubic_report.max_imag, quartic_report.max_gap[0],
                quartic_report.trusted_count);
  detail = buf;
}

void criterion_roundtrips_and_oracles(std::string&) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    PhasePoly f = random_poly(rng, 8, 6);
    ACCEPT(weyl_symbol(weyl_quantize(f)) == f);
  }
  // Fast symmetrization against the brute-force permutation expansion.
  for (int m = 0; m <= 8; ++m) {
    for (int n = 0; m + n <= 8; ++n) {
      std::vector<int> word(m, 1);
      word.insert(word.end(), n, 0);
      std::sort(word.begin(), word.end());
      OperatorPoly acc;
      long count = 0;
      do {
        OperatorPoly w = OperatorPoly::one();
        for (int letter : word) w = op_mul(w, letter ? OperatorPoly::p() : OperatorPoly::x());
        acc += w;
        ++count;
      } while (std::next_permutation(word.begin(), word.end()));
      ACCEPT(symmetrized_product(m, n) == acc * GaussianRational(Rational(1, count)));
    }
  }
  // Operator product against dense matrix multiplication on interior blocks.
  const int dim = 40;
  for (int trial = 0; trial < 50; ++trial) {
    OperatorPoly a = random_operator(rng, 4, 4);
    OperatorPoly b = random_operator(rng, 4, 4);
    MatrixRep direct = matrix_of(op_mul(a, b), dim);
    MatrixRep product = mat_mul(matrix_of(a, dim), matrix_of(b, dim));
    double worst = 0;
    for (int j = 0; j < dim - 12; ++j)
      for (int i = 0; i < dim - 12; ++i)
        worst = std::max(worst, std::abs(direct.at(i, j) - product.at(i, j)));
    ACCEPT(worst < 1e-8);
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {"isomorphism anchors", 1.0, criterion_isomorphism_anchors},
      {"pde reproduction (both products, both Hamiltonians)", 10.0, criterion_pde_reproduction},
      {"exact quartic pipeline (a in {1,16,3/2}, m2 in {1,2})", 100.0, criterion_exact_pipeline},
      {"cubic tables ctilde_1..5, c_1..6, q_1..6", 30000.0, criterion_cubic_tables},
      {"hermitian counterpart h_0,h_2,h_4,h_6", 0.0, criterion_hermitian_counterpart},
      {"normalization and reflection identities", 0.0, criterion_normalization},
      {"quantization homomorphism suite", 60000.0, criterion_homomorphisms},
      {"numerical isospectrality", 120000.0, criterion_isospectrality},
      {"round-trip and oracle suites", 0.0, criterion_roundtrips_and_oracles},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto& crit = criteria[k];
    std::string detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string message;
    try {
      crit.body(detail);
    } catch (const std::exception& e) {
      ok = false;
      message = e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ok && crit.limit_ms > 0 && ms > crit.limit_ms) {
      ok = false;
      message = "runtime limit exceeded";
    }
    std::printf("[%zu] %s  %s (%.2f ms%s)%s%s\n", k + 1, ok ? "PASS" : "FAIL", crit.name.c_str(),
                ms,
                crit.limit_ms > 0 ? (" < " + std::to_string((long)crit.limit_ms) + " ms").c_str()
                                  : "",
                detail.empty() ? "" : ("  -- " + detail).c_str(),
                message.empty() ? "" : ("  !! " + message).c_str());
    if (!ok) ++failures;
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
