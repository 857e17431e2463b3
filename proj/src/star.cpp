#include "moyal/star.hpp"

#include <omp.h>

#include <vector>

namespace moyal {

namespace {

// grid[t][u] = dx^t dp^u f, derivatives threaded through the exponential.
std::vector<std::vector<ExpWeightedPoly>> derivative_grid(const ExpWeightedPoly& f, int max_dx,
                                                          int max_dp) {
  std::vector<std::vector<ExpWeightedPoly>> grid(max_dx + 1);
  grid[0].resize(max_dp + 1);
  grid[0][0] = f;
  for (int u = 1; u <= max_dp; ++u) grid[0][u] = grid[0][u - 1].diff_p();
  for (int t = 1; t <= max_dx; ++t) {
    grid[t].resize(max_dp + 1);
    for (int u = 0; u <= max_dp; ++u) grid[t][u] = grid[t - 1][u].diff_x();
  }
  return grid;
}

struct MoyalTerm {
  int s, t;
};

GaussianRational moyal_prefactor(int s, int t) {
  // (-i/2)^s / s! * (-1)^t * C(s,t)
  GaussianRational pre = imaginary_power(-s);
  Rational scale = binomial(s, t) / (rational_pow(Rational(2), s) * factorial(s));
  if (t % 2 != 0) scale = -scale;
  return pre * GaussianRational(scale);
}

}  // namespace

ExpWeightedPoly star_moyal_serial(const ExpWeightedPoly& f, const ExpWeightedPoly& g) {
  if (f.is_zero() || g.is_zero()) return ExpWeightedPoly();
  const int fx = f.body().max_xdeg();
  const int gx = g.body().max_xdeg();
  const int smax = fx + gx;
  auto df = derivative_grid(f, fx, smax);
  auto dg = derivative_grid(g, gx, smax);

  ExpWeightedPoly acc;
  for (int s = 0; s <= smax; ++s) {
    for (int t = 0; t <= s; ++t) {
      if (t > fx || s - t > gx) continue;  // an x-derivative has killed the term
      acc += moyal_prefactor(s, t) * (df[t][s - t] * dg[s - t][t]);
    }
  }
  return acc;
}

ExpWeightedPoly star_moyal(const ExpWeightedPoly& f, const ExpWeightedPoly& g) {
  if (f.is_zero() || g.is_zero()) return ExpWeightedPoly();
  const int fx = f.body().max_xdeg();
  const int gx = g.body().max_xdeg();
  const int smax = fx + gx;

  const std::size_t work = f.body().term_count() * g.body().term_count() * (smax + 1);
  if (work < 8192 || omp_get_max_threads() <= 1) return star_moyal_serial(f, g);

  auto df = derivative_grid(f, fx, smax);
  auto dg = derivative_grid(g, gx, smax);

  std::vector<MoyalTerm> jobs;
  for (int s = 0; s <= smax; ++s)
    for (int t = 0; t <= s; ++t)
      if (t <= fx && s - t <= gx) jobs.push_back({s, t});

  int nthreads = omp_get_max_threads();
  std::vector<ExpWeightedPoly> partial(nthreads);
#pragma omp parallel num_threads(nthreads)
  {
    ExpWeightedPoly local;
#pragma omp for schedule(dynamic) nowait
    for (std::ptrdiff_t j = 0; j < static_cast<std::ptrdiff_t>(jobs.size()); ++j) {
      const auto [s, t] = jobs[j];
      local += moyal_prefactor(s, t) * (df[t][s - t] * dg[s - t][t]);
    }
    partial[omp_get_thread_num()] = std::move(local);
  }
  ExpWeightedPoly acc;
  for (auto& part : partial) acc += part;
  return acc;
}

PhasePoly star_moyal(const PhasePoly& f, const PhasePoly& g) {
  return star_moyal(ExpWeightedPoly(f), ExpWeightedPoly(g)).as_poly();
}

ExpWeightedPoly star_standard(const ExpWeightedPoly& f, const ExpWeightedPoly& g) {
  if (f.is_zero() || g.is_zero()) return ExpWeightedPoly();
  const int smax = f.body().max_xdeg();
  ExpWeightedPoly acc;
  ExpWeightedPoly fx = f;
  ExpWeightedPoly gp = g;
  for (int s = 0; s <= smax; ++s) {
    if (s > 0) {
      fx = fx.diff_x();
      gp = gp.diff_p();
      if (fx.is_zero()) break;
    }
    GaussianRational pre = imaginary_power(s) * GaussianRational(Rational(1) / factorial(s));
    acc += pre * (fx * gp);
  }
  return acc;
}

PhasePoly star_standard(const PhasePoly& f, const PhasePoly& g) {
  return star_standard(ExpWeightedPoly(f), ExpWeightedPoly(g)).as_poly();
}

ExpWeightedPoly star(const ExpWeightedPoly& f, const ExpWeightedPoly& g, Product product) {
  return product == Product::moyal ? star_moyal(f, g) : star_standard(f, g);
}

ExpWeightedPoly star_commutator(const ExpWeightedPoly& f, const ExpWeightedPoly& g,
                                Product product) {
  return star(f, g, product) - star(g, f, product);
}

ExpWeightedPoly star_anticommutator(const ExpWeightedPoly& f, const ExpWeightedPoly& g,
                                    Product product) {
  return star(f, g, product) + star(g, f, product);
}

}  // namespace moyal
