#include "moyal/linsolve.hpp"

#include <omp.h>

#include <algorithm>

namespace moyal {

namespace {

using Row = std::vector<std::pair<int, GaussianRational>>;

GaussianRational row_coeff(const Row& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it != row.end() && it->first == col) return it->second;
  return GaussianRational(0);
}

// Scale one equation so that all coefficients (and the rhs) become Gaussian
// integers; scaling an equation by a nonzero rational keeps the solution set.
void clear_denominators(Row& row, GaussianRational& rhs) {
  mpz_class l(1);
  auto fold = [&l](const GaussianRational& c) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re.get_den().get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im.get_den().get_mpz_t());
  };
  for (const auto& [col, c] : row) fold(c);
  fold(rhs);
  if (l == 1) return;
  GaussianRational scale{Rational(l)};
  for (auto& [col, c] : row) c *= scale;
  rhs *= scale;
}

// new_row = (row * pivot_val - factor * pivot_row) / previous_pivot, merging
// sparse entries; divisions are exact by the Bareiss identity.
void eliminate_into(Row& row, GaussianRational& rhs, const Row& pivot_row,
                    const GaussianRational& pivot_rhs, const GaussianRational& pivot_val,
                    const GaussianRational& factor, const GaussianRational& prev_pivot,
                    int pivot_col) {
  Row out;
  out.reserve(row.size() + pivot_row.size());
  auto a = row.begin();
  auto b = pivot_row.begin();
  while (a != row.end() || b != pivot_row.end()) {
    if (b == pivot_row.end() || (a != row.end() && a->first < b->first)) {
      GaussianRational v = (a->second * pivot_val) / prev_pivot;
      if (!v.is_zero()) out.emplace_back(a->first, std::move(v));
      ++a;
    } else if (a == row.end() || b->first < a->first) {
      GaussianRational v = -(factor * b->second) / prev_pivot;
      if (!v.is_zero() && b->first != pivot_col) out.emplace_back(b->first, std::move(v));
      ++b;
    } else {
      GaussianRational v = (a->second * pivot_val - factor * b->second) / prev_pivot;
      if (!v.is_zero() && a->first != pivot_col) out.emplace_back(a->first, std::move(v));
      ++a;
      ++b;
    }
  }
  row = std::move(out);
  rhs = (rhs * pivot_val - factor * pivot_rhs) / prev_pivot;
}

}  // namespace

LinearSolveResult solve_fraction_free(SparseLinearSystem system, bool parallel) {
  const int ncols = system.ncols;
  auto& rows = system.rows;
  auto& rhs = system.rhs;
  const int nrows = static_cast<int>(rows.size());

  for (int r = 0; r < nrows; ++r) clear_denominators(rows[r], rhs[r]);

  std::vector<bool> used(nrows, false);
  std::vector<int> pivot_row_of_col(ncols, -1);
  GaussianRational prev_pivot(1);

  for (int col = 0; col < ncols; ++col) {
    int pick = -1;
    std::size_t best = 0;
    for (int r = 0; r < nrows; ++r) {
      if (used[r]) continue;
      if (row_coeff(rows[r], col).is_zero()) continue;
      if (pick < 0 || rows[r].size() < best) {
        pick = r;
        best = rows[r].size();
      }
    }
    if (pick < 0) continue;  // free column

    used[pick] = true;
    pivot_row_of_col[col] = pick;
    const GaussianRational pivot_val = row_coeff(rows[pick], col);
    const Row pivot_row = rows[pick];
    const GaussianRational pivot_rhs = rhs[pick];

    std::vector<int> targets;
    for (int r = 0; r < nrows; ++r)
      if (!used[r] && !rows[r].empty()) targets.push_back(r);

    auto update = [&](int r) {
      GaussianRational factor = row_coeff(rows[r], col);
      eliminate_into(rows[r], rhs[r], pivot_row, pivot_rhs, pivot_val, factor, prev_pivot, col);
    };

    if (parallel && targets.size() >= 32 && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(dynamic, 8)
      for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(targets.size()); ++idx)
        update(targets[idx]);
    } else {
      for (int r : targets) update(r);
    }
    prev_pivot = pivot_val;
  }

  LinearSolveResult result;
  for (int r = 0; r < nrows; ++r) {
    if (!used[r] && rows[r].empty() && !rhs[r].is_zero()) {
      result.consistent = false;
      return result;
    }
    if (!used[r] && !rows[r].empty()) {
      // Leftover nonempty row without pivot cannot happen: every nonzero
      // row gets a pivot at its first nonzero column.
    }
  }
  result.consistent = true;
  result.solution.assign(ncols, GaussianRational(0));
  // Echelon rows have pivot at `col` and tails only in later columns.
  for (int col = ncols - 1; col >= 0; --col) {
    int r = pivot_row_of_col[col];
    if (r < 0) continue;  // free -> 0
    GaussianRational acc = rhs[r];
    for (const auto& [c, v] : rows[r]) {
      if (c == col) continue;
      if (result.solution[c].is_zero()) continue;
      acc -= v * result.solution[c];
    }
    result.solution[col] = acc / row_coeff(rows[r], col);
  }
  return result;
}

}  // namespace moyal
