#pragma once

#include <complex>
#include <vector>

#include "moyal/errors.hpp"
#include "moyal/gseries.hpp"
#include "moyal/hamiltonian.hpp"
#include "moyal/ordering.hpp"

namespace moyal {

/// Dense complex matrix in the truncated harmonic-oscillator basis,
/// column-major. Floating point is quarantined to this module.
struct MatrixRep {
  int dim = 0;
  std::vector<std::complex<double>> a;

  MatrixRep() = default;
  explicit MatrixRep(int n) : dim(n), a(static_cast<std::size_t>(n) * n) {}

  std::complex<double>& at(int i, int j) { return a[static_cast<std::size_t>(j) * dim + i]; }
  const std::complex<double>& at(int i, int j) const {
    return a[static_cast<std::size_t>(j) * dim + i];
  }
};

MatrixRep mat_mul(const MatrixRep& a, const MatrixRep& b);
MatrixRep mat_adjoint(const MatrixRep& a);

/// Matrix of a normal-ordered operator on the lowest `dim` oscillator
/// states, using x̂ = (a+a†)/√2, p̂ = i(a†−a)/√2. A symbolic coupling g in
/// the operator is substituted with `g_value`. Throws DimensionTooSmall
/// unless dim >= 2 + max operator degree.
MatrixRep matrix_of(const OperatorPoly& op, int dim, double g_value = 1.0);

/// Eigenvalues of a general complex matrix, sorted by real part (then
/// imaginary part).
std::vector<std::complex<double>> eigenvalues(const MatrixRep& m);

/// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> eigenvalues_hermitian(const MatrixRep& m);

struct SpectralReport {
  int dim = 0;
  std::vector<double> g_values;
  // Per g value: trusted eigenvalues after the convergence gate, lowest first.
  std::vector<std::vector<std::complex<double>>> eigenvalues_H;
  std::vector<std::vector<double>> eigenvalues_h;
  std::vector<std::vector<double>> pairwise_gaps;  // |E_k(H) - E_k(h)| per g
  std::vector<double> max_gap;                     // per g, over the common trusted set
  double max_imag = 0.0;                           // over trusted H eigenvalues, all g
  int trusted_count = 0;                           // common across g values
  // log2(max_gap[i]/max_gap[i+1]) between successive halved couplings;
  // empty unless at least two g values were given.
  std::vector<double> fitted_exponents;
};

/// Compares the spectrum of H = h0 + i g h1 against the truncated Hermitian
/// counterpart series at each coupling in g_values. An eigenvalue is trusted
/// only if it moves by less than gate_tol when the basis grows by
/// gate_increment (matched to the nearest eigenvalue, which is robust
/// against spurious truncation states), and at most dim/4 levels are kept.
SpectralReport isospectral_check(const HamiltonianSplit& H, const GSeries& h_series,
                                 const std::vector<double>& g_values, int dim,
                                 double gate_tol = 1e-8, int gate_increment = 50);

}  // namespace moyal
