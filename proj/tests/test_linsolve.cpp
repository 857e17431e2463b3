#include "doctest.h"
#include "moyal/linsolve.hpp"
#include "support.hpp"

using namespace moyal;
using testsupport::random_coeff;

namespace {

GaussianRational dot_row(const std::vector<std::pair<int, GaussianRational>>& row,
                         const std::vector<GaussianRational>& v) {
  GaussianRational acc(0);
  for (const auto& [c, a] : row) acc += a * v[c];
  return acc;
}

}  // namespace

TEST_CASE("two by two system") {
  SparseLinearSystem sys;
  sys.ncols = 2;
  sys.rows = {{{0, GaussianRational(1)}, {1, GaussianRational(2)}},
              {{0, GaussianRational(3)}, {1, GaussianRational(Rational(1, 2))}}};
  sys.rhs = {GaussianRational(5), GaussianRational(4)};
  auto res = solve_fraction_free(sys);
  REQUIRE(res.consistent);
  CHECK(res.solution[0] == GaussianRational(Rational(6, 11)));
  CHECK(res.solution[1] == GaussianRational(Rational(49, 22)));
}

TEST_CASE("inconsistent system is detected exactly") {
  SparseLinearSystem sys;
  sys.ncols = 1;
  sys.rows = {{{0, GaussianRational(1)}}, {{0, GaussianRational(2)}}};
  sys.rhs = {GaussianRational(1), GaussianRational(3)};
  CHECK_FALSE(solve_fraction_free(sys).consistent);
}

TEST_CASE("free columns default to zero") {
  SparseLinearSystem sys;
  sys.ncols = 3;
  sys.rows = {{{0, GaussianRational(2)}, {2, GaussianRational(1)}}};
  sys.rhs = {GaussianRational(4)};
  auto res = solve_fraction_free(sys);
  REQUIRE(res.consistent);
  CHECK(res.solution[0] == GaussianRational(2));
  CHECK(res.solution[1] == GaussianRational(0));
  CHECK(res.solution[2] == GaussianRational(0));
}

TEST_CASE("complex coefficients solve exactly") {
  GaussianRational i = GaussianRational::imaginary_unit();
  SparseLinearSystem sys;
  sys.ncols = 2;
  sys.rows = {{{0, i}, {1, GaussianRational(1)}}, {{0, GaussianRational(1)}, {1, -i}}};
  sys.rhs = {GaussianRational(0), GaussianRational(2)};
  auto res = solve_fraction_free(sys);
  REQUIRE(res.consistent);
  // i*x + y = 0, x - i*y = 2: singular pair? second = -i*(first) + 2 -> x free.
  CHECK(dot_row(sys.rows[0], res.solution) == sys.rhs[0]);
  CHECK(dot_row(sys.rows[1], res.solution) == sys.rhs[1]);
}

TEST_CASE("randomized systems verify against their residual") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<int> size(3, 14);
  std::bernoulli_distribution fill(0.4);
  for (int trial = 0; trial < 25; ++trial) {
    int n = size(rng);
    int m = n + (trial % 3);
    SparseLinearSystem sys;
    sys.ncols = n;
    std::vector<GaussianRational> truth;
    for (int c = 0; c < n; ++c) truth.push_back(random_coeff(rng));
    for (int r = 0; r < m; ++r) {
      std::vector<std::pair<int, GaussianRational>> row;
      for (int c = 0; c < n; ++c)
        if (fill(rng)) row.emplace_back(c, random_coeff(rng));
      sys.rows.push_back(row);
      sys.rhs.push_back(dot_row(row, truth));
    }
    auto sys_copy = sys;
    auto res = solve_fraction_free(sys);
    REQUIRE(res.consistent);  // consistent by construction
    for (int r = 0; r < m; ++r)
      CHECK(dot_row(sys_copy.rows[r], res.solution) == sys_copy.rhs[r]);
    // The parallel row updates must not change the result.
    auto serial = solve_fraction_free_serial(sys_copy);
    REQUIRE(serial.consistent);
    for (int c = 0; c < n; ++c) CHECK(serial.solution[c] == res.solution[c]);
  }
}
