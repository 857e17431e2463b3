#include "moyal/intertwiner.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>

#include "moyal/linsolve.hpp"
#include "moyal/star.hpp"

namespace moyal {

namespace {

GaussianRational moyal_prefactor(int s, int t) {
  GaussianRational pre = imaginary_power(-s);
  Rational scale = binomial(s, t) / (rational_pow(Rational(2), s) * factorial(s));
  if (t % 2 != 0) scale = -scale;
  return pre * GaussianRational(scale);
}

// dx^a dp^b applied to one monomial times a coefficient polynomial.
PhasePoly apply_term_to_monomial(const DerivIndex& d, const PhasePoly& coeff,
                                 const PhaseMonomial& m) {
  if (m.xdeg < d.dx || m.pdeg < d.dp) return PhasePoly();
  Rational ff(1);
  for (int j = 0; j < d.dx; ++j) ff *= (m.xdeg - j);
  for (int j = 0; j < d.dp; ++j) ff *= (m.pdeg - j);
  PhasePoly shifted = PhasePoly::monomial({m.xdeg - d.dx, m.pdeg - d.dp, m.gdeg},
                                          GaussianRational(ff));
  return coeff * shifted;
}

PhasePoly apply_op_to_monomial(const LinearDiffOp& op, const PhaseMonomial& m) {
  PhasePoly out;
  for (const auto& [d, coeff] : op.terms()) out += apply_term_to_monomial(d, coeff, m);
  return out;
}

struct ParityClass {
  int x = 0, p = 0;
  friend auto operator<=>(const ParityClass&, const ParityClass&) = default;
};

// If every component of op shifts monomial parities by the same amount,
// return that shift; otherwise nullopt (no pruning possible).
std::optional<ParityClass> uniform_parity_shift(const LinearDiffOp& op) {
  std::optional<ParityClass> shift;
  for (const auto& [d, coeff] : op.terms()) {
    for (const auto& [m, c] : coeff.terms()) {
      ParityClass s{((m.xdeg - d.dx) % 2 + 2) % 2, ((m.pdeg - d.dp) % 2 + 2) % 2};
      if (!shift)
        shift = s;
      else if (!(*shift == s))
        return std::nullopt;
    }
  }
  return shift;
}

std::set<ParityClass> parity_classes(const PhasePoly& f) {
  std::set<ParityClass> classes;
  for (const auto& [m, c] : f.terms()) classes.insert({m.xdeg % 2, m.pdeg % 2});
  return classes;
}

// One order of the recursion: solve L0[u] = rhs with a bounded-degree
// polynomial ansatz and exact elimination; canonical kernel projection is
// the caller's job.
PhasePoly solve_linear_order(const LinearDiffOp& L0, const PhasePoly& rhs, int degree_bound,
                             bool parity_pruning, bool& pruned_out) {
  std::vector<PhaseMonomial> ansatz;
  std::optional<std::set<ParityClass>> allowed;
  pruned_out = false;
  if (parity_pruning && !rhs.is_zero()) {
    if (auto shift = uniform_parity_shift(L0)) {
      allowed.emplace();
      for (const auto& r : parity_classes(rhs))
        allowed->insert({((r.x - shift->x) % 2 + 2) % 2, ((r.p - shift->p) % 2 + 2) % 2});
      pruned_out = true;
    }
  }
  for (int a = 0; a <= degree_bound; ++a) {
    for (int b = 0; a + b <= degree_bound; ++b) {
      if (allowed && !allowed->count({a % 2, b % 2})) continue;
      ansatz.push_back({a, b, 0});
    }
  }

  const int ncols = static_cast<int>(ansatz.size());
  std::vector<PhasePoly> images(ncols);
#pragma omp parallel for schedule(dynamic, 16) if (ncols > 64)
  for (int j = 0; j < ncols; ++j) images[j] = apply_op_to_monomial(L0, ansatz[j]);

  std::map<PhaseMonomial, int> row_of;
  auto row_id = [&row_of](const PhaseMonomial& m) {
    auto [it, inserted] = row_of.emplace(m, static_cast<int>(row_of.size()));
    return it->second;
  };
  for (const auto& [m, c] : rhs.terms()) row_id(m);
  for (const auto& img : images)
    for (const auto& [m, c] : img.terms()) row_id(m);

  SparseLinearSystem sys;
  sys.ncols = ncols;
  sys.rows.resize(row_of.size());
  sys.rhs.assign(row_of.size(), GaussianRational(0));
  for (int j = 0; j < ncols; ++j)
    for (const auto& [m, c] : images[j].terms()) sys.rows[row_of.at(m)].emplace_back(j, c);
  for (auto& row : sys.rows)
    std::sort(row.begin(), row.end(), [](const auto& u, const auto& v) { return u.first < v.first; });
  for (const auto& [m, c] : rhs.terms()) sys.rhs[row_of.at(m)] = c;

  LinearSolveResult res = solve_fraction_free(std::move(sys));
  if (!res.consistent) return PhasePoly::monomial({-1, -1, -1});  // sentinel, caller retries

  PhasePoly u;
  for (int j = 0; j < ncols; ++j)
    if (!res.solution[j].is_zero()) u.add_term(ansatz[j], res.solution[j]);
  return u;
}

bool is_sentinel(const PhasePoly& f) {
  return f.term_count() == 1 && f.terms().begin()->first.xdeg == -1;
}

struct RecursionContext {
  std::vector<LinearDiffOp> slices;  // L_k, g-free coefficients
  int hamiltonian_degree = 0;
  KernelBasis kernel;
};

RecursionContext make_context(const HamiltonianSplit& H, int order,
                              const SolveOptions& options) {
  LinearDiffOp L = build_pde(H, Product::moyal);
  const int kmax = L.max_coeff_gdeg();
  std::vector<LinearDiffOp> slices;
  for (int k = 0; k <= kmax; ++k) slices.push_back(L.g_slice(k));
  int hdeg = std::max(H.h0.max_total_degree(), H.h1.max_total_degree() + 1);
  hdeg = std::max(hdeg, 1);
  int max_kernel_degree = order * hdeg + options.escalation_rounds * hdeg;
  return {std::move(slices), hdeg, KernelBasis(H.h0, max_kernel_degree)};
}

// Solve order n against the given lower-order tail, with degree escalation.
PhasePoly solve_one_order(const RecursionContext& ctx, const std::vector<PhasePoly>& lower, int n,
                          const SolveOptions& options, OrderDiagnostic& diag) {
  PhasePoly rhs;
  for (std::size_t k = 1; k < ctx.slices.size() && static_cast<int>(k) <= n; ++k)
    rhs -= ctx.slices[k].apply(lower[n - k]);

  const LinearDiffOp& L0 = ctx.slices[0];
  for (int round = 0; round <= options.escalation_rounds; ++round) {
    int bound = (n + round) * ctx.hamiltonian_degree;
    bool pruned = false;
    PhasePoly u = solve_linear_order(L0, rhs, bound, options.parity_pruning, pruned);
    if (!is_sentinel(u)) {
      // Exact residual guard; protects the parity pruning as well.
      if (!(L0.apply(u) - rhs).is_zero()) {
        if (pruned) {
          u = solve_linear_order(L0, rhs, bound, false, pruned);
          if (!is_sentinel(u) && (L0.apply(u) - rhs).is_zero()) {
            diag.degree_bound = bound;
            diag.parity_pruned = false;
            return ctx.kernel.project_out(u);
          }
        }
        throw Unsolvable("order-" + std::to_string(n) + " solution failed the residual check");
      }
      diag.degree_bound = bound;
      diag.parity_pruned = pruned;
      return ctx.kernel.project_out(u);
    }
  }
  throw Unsolvable("degree escalation exhausted at order " + std::to_string(n) +
                   " (InconsistentSystem at every bound)");
}

// Order-n coefficient of eta^2(g) (star) eta^2(-g) for the candidate tower.
PhasePoly et_condition(const std::vector<PhasePoly>& c, int n) {
  PhasePoly acc;
  for (int k = 0; k <= n; ++k) {
    PhasePoly term = star_moyal(c[k], c[n - k]);
    if ((n - k) % 2 != 0) term = -term;
    acc += term;
  }
  return acc;
}

}  // namespace

LinearDiffOp build_pde(const HamiltonianSplit& H, Product product) {
  LinearDiffOp L;
  if (product == Product::moyal) {
    PhasePoly B = H.weyl_symbol_full();
    PhasePoly A = B.conj();
    const int smax_left = A.max_xdeg() + A.max_pdeg();
    for (int s = 0; s <= smax_left; ++s) {
      for (int t = 0; t <= s; ++t) {
        // H^† (star) u : derivative (t, s-t) lands on A, (s-t, t) on u.
        PhasePoly dA = A;
        for (int j = 0; j < t; ++j) dA = dA.diff_x();
        for (int j = 0; j < s - t; ++j) dA = dA.diff_p();
        if (!dA.is_zero()) L.add_term({s - t, t}, moyal_prefactor(s, t) * dA);
      }
    }
    const int smax_right = B.max_xdeg() + B.max_pdeg();
    for (int s = 0; s <= smax_right; ++s) {
      for (int t = 0; t <= s; ++t) {
        // u (star) H : derivative (t, s-t) lands on u, (s-t, t) on B.
        PhasePoly dB = B;
        for (int j = 0; j < s - t; ++j) dB = dB.diff_x();
        for (int j = 0; j < t; ++j) dB = dB.diff_p();
        if (!dB.is_zero()) L.add_term({t, s - t}, -(moyal_prefactor(s, t) * dB));
      }
    }
  } else {
    OperatorPoly Hop = H.to_operator();
    PhasePoly A = standard_symbol(op_adjoint(Hop));
    PhasePoly B = standard_symbol(Hop);
    for (int s = 0; s <= A.max_xdeg(); ++s) {
      PhasePoly dA = A;
      for (int j = 0; j < s; ++j) dA = dA.diff_x();
      if (dA.is_zero()) break;
      GaussianRational pre = imaginary_power(s) * GaussianRational(Rational(1) / factorial(s));
      L.add_term({0, s}, pre * dA);
    }
    for (int s = 0; s <= B.max_pdeg(); ++s) {
      PhasePoly dB = B;
      for (int j = 0; j < s; ++j) dB = dB.diff_p();
      if (dB.is_zero()) break;
      GaussianRational pre = imaginary_power(s) * GaussianRational(Rational(1) / factorial(s));
      L.add_term({s, 0}, -(pre * dB));
    }
  }
  // Conventional real form.
  L *= GaussianRational(Rational(0), Rational(2));
  return L;
}

RawTower solve_perturbative(const HamiltonianSplit& H, int order, const SolveOptions& options) {
  RecursionContext ctx = make_context(H, order, options);
  RawTower tower;
  tower.coefficients.push_back(PhasePoly::one());
  for (int n = 1; n <= order; ++n) {
    OrderDiagnostic diag;
    diag.order = n;
    tower.coefficients.push_back(solve_one_order(ctx, tower.coefficients, n, options, diag));
    tower.diagnostics.push_back(diag);
  }
  return tower;
}

NormalizedTower normalize(const HamiltonianSplit& H, int order, const SolveOptions& options) {
  RecursionContext ctx = make_context(H, order, options);
  std::vector<PhasePoly> c;
  c.push_back(PhasePoly::one());
  std::vector<OrderDiagnostic> diags;
  for (int n = 1; n <= order; ++n) {
    OrderDiagnostic diag;
    diag.order = n;
    PhasePoly u = solve_one_order(ctx, c, n, options, diag);
    c.push_back(u);
    PhasePoly condition = et_condition(c, n);
    if (n % 2 == 0) {
      // condition + 2 z = 0 with z in the kernel span.
      PhasePoly z = condition * GaussianRational(Rational(-1, 2));
      auto coords = ctx.kernel.coordinates(z);
      if (!coords)
        throw NormalizationObstruction(
            "normalization condition at order " + std::to_string(n) +
            " is not solvable within the kernel span; residual " + z.str());
      c.back() += z;
      diag.kernel_fixed_by_normalization = true;
      diag.kernel_coords = *coords;
    } else {
      if (!condition.is_zero())
        throw NormalizationObstruction("normalization condition fails at odd order " +
                                       std::to_string(n) +
                                       " where no kernel freedom exists; residual " +
                                       condition.str());
      diag.kernel_undetermined_set_zero = true;
    }
    diags.push_back(diag);
  }
  GSeries eta2(order);
  for (int n = 0; n <= order; ++n) eta2.set_coeff(n, ExpWeightedPoly(c[n]));
  return {std::move(eta2), std::move(diags)};
}

GSeries star_sqrt(const GSeries& eta_squared) {
  const int order = eta_squared.truncation_order();
  if (!(eta_squared.coeff(0) == ExpWeightedPoly::one()))
    throw std::invalid_argument("star_sqrt requires leading coefficient 1");
  GSeries q(order);
  q.set_coeff(0, ExpWeightedPoly::one());
  for (int n = 1; n <= order; ++n) {
    ExpWeightedPoly acc = eta_squared.coeff(n);
    for (int k = 1; k < n; ++k) acc -= star_moyal(q.coeff(k), q.coeff(n - k));
    q.set_coeff(n, acc * GaussianRational(Rational(1, 2)));
  }
  return q;
}

GSeries star_inverse(const GSeries& eta) {
  const int order = eta.truncation_order();
  if (!(eta.coeff(0) == ExpWeightedPoly::one()))
    throw std::invalid_argument("star_inverse requires leading coefficient 1");
  GSeries r(order);
  r.set_coeff(0, ExpWeightedPoly::one());
  for (int n = 1; n <= order; ++n) {
    ExpWeightedPoly acc;
    for (int k = 1; k <= n; ++k) acc -= star_moyal(eta.coeff(k), r.coeff(n - k));
    r.set_coeff(n, acc);
  }
  return r;
}

ExactSolution solve_exact(const HamiltonianSplit& H, int ansatz_degree) {
  LinearDiffOp L = build_pde(H, Product::moyal);

  // sigma(p) = sum_{j=1..d} sigma_j p^j with unknown rational coefficients;
  // eta^2 = exp(g sigma). The constant sigma_0 never enters the equation
  // (only derivatives appear) and is fixed to 0.
  const int d = ansatz_degree;

  // Polynomials in (p, g) whose coefficients are polynomials in the
  // unknowns: map (sigma exponent vector) -> PhasePoly.
  using SigmaKey = std::vector<int>;
  using SigmaPoly = std::map<SigmaKey, PhasePoly>;
  const SigmaKey kconst(d, 0);

  auto mul_phase = [&](const SigmaPoly& a, const PhasePoly& f) {
    SigmaPoly out;
    for (const auto& [key, poly] : a) {
      PhasePoly prod = poly * f;
      if (!prod.is_zero()) out[key] += prod;
    }
    return out;
  };
  auto mul_sigma = [&](const SigmaPoly& a, const SigmaPoly& b) {
    SigmaPoly out;
    for (const auto& [ka, pa] : a)
      for (const auto& [kb, pb] : b) {
        SigmaKey k(d, 0);
        for (int j = 0; j < d; ++j) k[j] = ka[j] + kb[j];
        PhasePoly prod = pa * pb;
        if (!prod.is_zero()) out[k] += prod;
      }
    for (auto it = out.begin(); it != out.end();)
      it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
  };
  auto diff_p_sigma = [&](const SigmaPoly& a) {
    SigmaPoly out;
    for (const auto& [key, poly] : a) {
      PhasePoly der = poly.diff_p();
      if (!der.is_zero()) out[key] += der;
    }
    return out;
  };

  // g * sigma'(p) as a SigmaPoly.
  SigmaPoly g_sigma_prime;
  for (int j = 1; j <= d; ++j) {
    SigmaKey key(d, 0);
    key[j - 1] = 1;
    g_sigma_prime[key] = PhasePoly::monomial({0, j - 1, 1}, GaussianRational(j));
  }

  // bell[b] = dp^b exp(g sigma) / exp(g sigma).
  int max_dp = 0;
  for (const auto& [di, coeff] : L.terms()) max_dp = std::max(max_dp, di.dp);
  std::vector<SigmaPoly> bell(max_dp + 1);
  bell[0][kconst] = PhasePoly::one();
  for (int b = 1; b <= max_dp; ++b)
    bell[b] = [&] {
      SigmaPoly out = mul_sigma(g_sigma_prime, bell[b - 1]);
      for (auto& [key, poly] : diff_p_sigma(bell[b - 1])) out[key] += poly;
      for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
      return out;
    }();

  // Identity: sum over (dx=0, dp=b) slots of coeff * bell[b] must vanish.
  SigmaPoly identity;
  for (const auto& [di, coeff] : L.terms()) {
    if (di.dx > 0) continue;  // x-free ansatz: x-derivatives vanish
    for (auto& [key, poly] : mul_phase(bell[di.dp], coeff)) identity[key] += poly;
  }

  // Collect equations: coefficient of every (x,p,g) monomial across all
  // sigma keys must vanish. Equation form: map sigma-key -> GaussianRational.
  using Equation = std::map<SigmaKey, GaussianRational>;
  std::map<PhaseMonomial, Equation> equations;
  for (const auto& [key, poly] : identity)
    for (const auto& [m, cc] : poly.terms()) equations[m][key] = cc;

  // Iterated elimination of unknowns that appear alone and linearly.
  std::vector<std::optional<Rational>> value(d);
  auto substitute = [&](Equation& eq) {
    Equation out;
    for (const auto& [key, cc] : eq) {
      GaussianRational c = cc;
      SigmaKey k = key;
      for (int j = 0; j < d; ++j) {
        if (k[j] > 0 && value[j]) {
          c *= GaussianRational(rational_pow(*value[j], k[j]));
          k[j] = 0;
        }
      }
      if (!c.is_zero()) {
        auto [it, inserted] = out.emplace(k, c);
        if (!inserted) {
          it->second += c;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
    eq = std::move(out);
  };

  std::vector<Equation> eqs;
  for (auto& [m, eq] : equations) eqs.push_back(eq);

  bool progress = true;
  while (progress) {
    progress = false;
    for (auto& eq : eqs) {
      substitute(eq);
      if (eq.empty()) continue;
      // Contradiction: constant-only nonzero equation.
      if (eq.size() == 1 && eq.begin()->first == kconst)
        throw NoExactSolution("exponential ansatz admits no solution: condition " +
                              to_string(eq.begin()->second) + " = 0 is violated");
      // Single unknown, degree one: a*sigma_j + c = 0.
      int unknown = -1;
      bool linear = true;
      GaussianRational a(0), c0(0);
      for (const auto& [key, cc] : eq) {
        int deg = 0, which = -1;
        for (int j = 0; j < d; ++j) {
          deg += key[j];
          if (key[j] > 0) which = j;
        }
        if (deg == 0) {
          c0 = cc;
        } else if (deg == 1) {
          if (unknown < 0) unknown = which;
          if (which != unknown) {
            linear = false;
            break;
          }
          a = cc;
        } else {
          linear = false;
          break;
        }
      }
      if (linear && unknown >= 0 && !a.is_zero()) {
        GaussianRational v = -(c0 / a);
        if (v.im != 0)
          throw NoExactSolution("exponential ansatz forces a non-real coefficient");
        value[unknown] = v.re;
        eq.clear();
        progress = true;
      }
    }
  }
  // Remaining free unknowns default to zero, then everything must vanish.
  for (int j = 0; j < d; ++j)
    if (!value[j]) value[j] = Rational(0);
  for (auto& eq : eqs) {
    substitute(eq);
    if (!eq.empty())
      throw NoExactSolution("exponential ansatz leaves unsatisfied conditions");
  }

  PhasePoly sigma;  // g * sigma(p)
  for (int j = 1; j <= d; ++j)
    sigma += PhasePoly::monomial({0, j, 1}, GaussianRational(*value[j - 1]));

  ExactSolution sol;
  sol.eta_squared = ExpWeightedPoly(sigma, PhasePoly::one());
  sol.eta = ExpWeightedPoly(sigma * GaussianRational(Rational(1, 2)), PhasePoly::one());
  sol.eta_inverse = ExpWeightedPoly(sigma * GaussianRational(Rational(-1, 2)), PhasePoly::one());

  if (!L.apply(sol.eta_squared).is_zero())
    throw NoExactSolution("candidate exponent fails the differential equation");

  ExpWeightedPoly W(H.weyl_symbol_full());
  ExpWeightedPoly h = star_moyal(star_moyal(sol.eta, W), sol.eta_inverse);
  sol.h = h.as_poly();  // exponents cancel by construction
  if (!sol.h.is_real())
    throw SolverError("exact Hermitian counterpart has non-real coefficients: " + sol.h.str());
  return sol;
}

GSeries hermitian_counterpart(const HamiltonianSplit& H, const GSeries& eta) {
  const int order = eta.truncation_order();
  GSeries Hs(order);
  Hs.set_coeff(0, ExpWeightedPoly(H.h0));
  if (order >= 1)
    Hs.set_coeff(1, ExpWeightedPoly(GaussianRational::imaginary_unit() * H.h1));
  GSeries h = series_mul(series_mul(eta, Hs, SeriesProduct::star), star_inverse(eta),
                         SeriesProduct::star);
  for (int n = 1; n <= order; n += 2) {
    if (!h.coeff(n).is_zero())
      throw OddOrderResidual("nonzero odd-order coefficient at g^" + std::to_string(n) + ": " +
                             h.coeff(n).body().str());
  }
  for (int n = 0; n <= order; n += 2) {
    if (!h.coeff(n).as_poly().is_real())
      throw SolverError("Hermitian counterpart coefficient at g^" + std::to_string(n) +
                        " is not real: " + h.coeff(n).body().str());
  }
  return h;
}

ResidualReport verify_intertwining(const HamiltonianSplit& H, const GSeries& eta_squared) {
  const int order = eta_squared.truncation_order();
  GSeries Hs(order), Hdag(order);
  Hs.set_coeff(0, ExpWeightedPoly(H.h0));
  Hdag.set_coeff(0, ExpWeightedPoly(H.h0));
  if (order >= 1) {
    Hs.set_coeff(1, ExpWeightedPoly(GaussianRational::imaginary_unit() * H.h1));
    Hdag.set_coeff(1, ExpWeightedPoly(-GaussianRational::imaginary_unit() * H.h1));
  }
  GSeries lhs = series_mul(Hdag, eta_squared, SeriesProduct::star);
  GSeries rhs = series_mul(eta_squared, Hs, SeriesProduct::star);
  ResidualReport report;
  for (int n = 0; n <= order; ++n) {
    ExpWeightedPoly diff = lhs.coeff(n) - rhs.coeff(n);
    report.nonzero_terms_per_order.push_back(static_cast<int>(diff.body().term_count()));
  }
  return report;
}

ResidualReport verify_intertwining(const HamiltonianSplit& H, const ExpWeightedPoly& eta_squared,
                                   int order_cap) {
  ExpWeightedPoly W(H.weyl_symbol_full());
  ExpWeightedPoly residual =
      star_moyal(W.conj(), eta_squared) - star_moyal(eta_squared, W);
  ResidualReport report;
  for (int n = 0; n <= order_cap; ++n)
    report.nonzero_terms_per_order.push_back(
        static_cast<int>(residual.body().g_slice(n).term_count()));
  return report;
}

namespace {

// Series view of exp(g * sigma): coefficient n is sigma^n / n!.
GSeries exponential_series(const PhasePoly& g_sigma, int order) {
  PhasePoly sigma = g_sigma.g_slice(1);
  GSeries out(order);
  PhasePoly power = PhasePoly::one();
  for (int n = 0; n <= order; ++n) {
    if (n > 0) power = power * sigma;
    out.set_coeff(n, ExpWeightedPoly(power * GaussianRational(Rational(1) / factorial(n))));
  }
  return out;
}

}  // namespace

MetricSolution solve_metric(const HamiltonianSplit& H, const SolveOptions& options) {
  MetricSolution out;
  if (options.mode == SolveMode::exact || options.mode == SolveMode::automatic) {
    try {
      ExactSolution exact = solve_exact(H, options.exact_ansatz_degree);
      out.mode = SolveMode::exact;
      out.eta_squared = exponential_series(exact.eta_squared.exponent(), options.order);
      out.eta = exponential_series(exact.eta.exponent(), options.order);
      out.eta_inverse = exponential_series(exact.eta_inverse.exponent(), options.order);
      GSeries h(options.order);
      for (int n = 0; n <= options.order; ++n)
        h.set_coeff(n, ExpWeightedPoly(exact.h.g_slice(n)));
      out.h = std::move(h);
      out.intertwining_residual = verify_intertwining(H, exact.eta_squared, options.order);
      out.inverse_matches_reflection =
          exact.eta_inverse == exact.eta.reflect_g();
      out.exact = std::move(exact);
      return out;
    } catch (const NoExactSolution&) {
      if (options.mode == SolveMode::exact) throw;
    }
  }
  NormalizedTower tower = normalize(H, options.order, options);
  out.mode = SolveMode::perturbative;
  out.eta_squared = tower.eta_squared;
  out.order_diagnostics = std::move(tower.diagnostics);
  out.eta = star_sqrt(out.eta_squared);
  out.eta_inverse = star_inverse(out.eta);
  out.inverse_matches_reflection = out.eta_inverse == out.eta.reflect_g();
  out.h = hermitian_counterpart(H, out.eta);
  out.intertwining_residual = verify_intertwining(H, out.eta_squared);
  return out;
}

}  // namespace moyal
