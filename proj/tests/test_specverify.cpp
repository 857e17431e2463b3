#include <cmath>

#include "doctest.h"
#include "moyal/intertwiner.hpp"
#include "moyal/parser.hpp"
#include "moyal/specverify.hpp"
#include "support.hpp"

using namespace moyal;
using testsupport::op;
using testsupport::random_operator;
using testsupport::sym;

namespace {

double interior_block_diff(const MatrixRep& a, const MatrixRep& b, int margin) {
  double worst = 0.0;
  for (int j = 0; j < a.dim - margin; ++j)
    for (int i = 0; i < a.dim - margin; ++i) worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
  return worst;
}

}  // namespace

TEST_CASE("oscillator matrix elements of x squared") {
  MatrixRep m = matrix_of(op("X^2"), 30);
  for (int k = 0; k < 30; ++k) CHECK(std::abs(m.at(k, k) - (2.0 * k + 1.0) / 2.0) < 1e-12);
}

TEST_CASE("harmonic oscillator spectrum") {
  MatrixRep m = matrix_of(weyl_quantize(sym("P^2/2 + X^2/2")), 60);
  std::vector<double> e = eigenvalues_hermitian(m);
  for (int k = 0; k < 30; ++k) CHECK(std::abs(e[k] - (k + 0.5)) < 1e-10);
}

TEST_CASE("commutator identity holds to roundoff on the interior block") {
  const int n = 40;
  MatrixRep lhs = matrix_of(op_mul(op("X^2"), op("P^2")) - op_mul(op("P^2"), op("X^2")), n);
  MatrixRep rhs = matrix_of(op("4*i*P*X - 2"), n);
  CHECK(interior_block_diff(lhs, rhs, 8) < 1e-10);
}

TEST_CASE("matrix map is linear and multiplicative up to truncation") {
  std::mt19937_64 rng(79);
  const int n = 40;
  for (int trial = 0; trial < 10; ++trial) {
    OperatorPoly a = random_operator(rng, 4, 4);
    OperatorPoly b = random_operator(rng, 4, 4);
    MatrixRep direct = matrix_of(op_mul(a, b), n);
    MatrixRep product = mat_mul(matrix_of(a, n), matrix_of(b, n));
    CHECK(interior_block_diff(direct, product, 12) < 1e-8);
    MatrixRep sum = matrix_of(a + b, n);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        CHECK(std::abs(sum.at(i, j) - (matrix_of(a, n).at(i, j) + matrix_of(b, n).at(i, j))) <
              1e-12);
  }
}

TEST_CASE("adjoint corresponds to the conjugate transpose") {
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    OperatorPoly a = random_operator(rng, 5, 5);
    MatrixRep m = matrix_of(op_adjoint(a), 36);
    MatrixRep t = mat_adjoint(matrix_of(a, 36));
    CHECK(interior_block_diff(m, t, 0) < 1e-10);
  }
}

TEST_CASE("adjoint of the mixed word against the matrix oracle") {
  MatrixRep lhs = matrix_of(op_adjoint(op("P^2*X")), 36);
  MatrixRep rhs = mat_adjoint(matrix_of(op("P^2*X"), 36));
  CHECK(interior_block_diff(lhs, rhs, 0) < 1e-10);
}

TEST_CASE("hermitian operators have real spectra") {
  std::mt19937_64 rng(89);
  PhasePoly f = testsupport::random_poly(rng, 4, 5, /*complex_ok=*/false);
  OperatorPoly h = weyl_quantize(f);
  REQUIRE(hermitian_check(h));
  MatrixRep m = matrix_of(h, 50);
  // Hermitian to roundoff entrywise.
  MatrixRep t = mat_adjoint(m);
  CHECK(interior_block_diff(m, t, 0) < 1e-9);
}

TEST_CASE("basis dimension guard") {
  CHECK_THROWS_AS(matrix_of(op("X^8"), 9), DimensionTooSmall);
  CHECK_NOTHROW(matrix_of(op("X^8"), 10));
}

TEST_CASE("cubic pair at zero coupling recovers the oscillator ladder") {
  HamiltonianSplit H = parse_hamiltonian("P^2/2 + X^2/2 + i*G*X^3", {});
  MetricSolution sol = solve_metric(H, {.order = 2});
  SpectralReport report = isospectral_check(H, sol.h, {0.0}, 64);
  REQUIRE(report.trusted_count >= 10);
  for (int k = 0; k < 10; ++k) {
    CHECK(std::abs(report.eigenvalues_H[0][k] - (k + 0.5)) < 1e-9);
    CHECK(std::abs(report.eigenvalues_h[0][k] - (k + 0.5)) < 1e-9);
  }
  CHECK(report.max_imag < 1e-10);
  CHECK(report.max_gap[0] < 1e-9);
}

TEST_CASE("gate discards unconverged levels") {
  HamiltonianSplit H = parse_hamiltonian("P^2/2 + X^2/2 + i*G*X^3", {});
  MetricSolution sol = solve_metric(H, {.order = 6});
  SpectralReport report = isospectral_check(H, sol.h, {0.05}, 120);
  CHECK(report.trusted_count >= 3);
  CHECK(report.trusted_count <= 30);  // never more than dim/4
  CHECK(report.max_imag < 1e-8);
}
