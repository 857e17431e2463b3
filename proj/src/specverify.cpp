#include "moyal/specverify.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <algorithm>
#include <cmath>

#

namespace moyal {

namespace {

using cd = std::complex<double>;

double to_double(const Rational& r) { return mpq_get_d(r.get_mpq_t()); }
cd to_complex(const GaussianRational& c) { return {to_double(c.re), to_double(c.im)}; }

}  // namespace

MatrixRep mat_mul(const MatrixRep& a, const MatrixRep& b) {
  MatrixRep out(a.dim);
  const cd one(1.0), zero(0.0);
  cblas_zgemm(CblasColMajor, CblasNoTrans, CblasNoTrans, a.dim, a.dim, a.dim, &one, a.a.data(),
              a.dim, b.a.data(), b.dim, &zero, out.a.data(), out.dim);
  return out;
}

MatrixRep mat_adjoint(const MatrixRep& a) {
  MatrixRep out(a.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) out.at(i, j) = std::conj(a.at(j, i));
  return out;
}

MatrixRep matrix_of(const OperatorPoly& op, int dim, double g_value) {
  if (dim < 2 + op.max_total_degree())
    throw DimensionTooSmall("basis dimension " + std::to_string(dim) +
                            " too small for an operator of degree " +
                            std::to_string(op.max_total_degree()));
  // x̂ = (a + a†)/√2, p̂ = i(a† − a)/√2 with ⟨k−1|a|k⟩ = √k.
  MatrixRep X(dim), P(dim);
  for (int k = 1; k < dim; ++k) {
    const double s = std::sqrt(0.5 * k);
    X.at(k - 1, k) = s;
    X.at(k, k - 1) = s;
    P.at(k - 1, k) = cd(0, -s);
    P.at(k, k - 1) = cd(0, s);
  }

  // Cache powers of X and P up to the needed degree.
  int max_p = 0, max_x = 0;
  for (const auto& [m, c] : op.terms()) {
    max_p = std::max(max_p, m.pdeg);
    max_x = std::max(max_x, m.xdeg);
  }
  std::vector<MatrixRep> Xp(max_x + 1), Pp(max_p + 1);
  Xp[0] = MatrixRep(dim);
  for (int i = 0; i < dim; ++i) Xp[0].at(i, i) = 1.0;
  Pp[0] = Xp[0];
  for (int k = 1; k <= max_x; ++k) Xp[k] = mat_mul(Xp[k - 1], X);
  for (int k = 1; k <= max_p; ++k) Pp[k] = mat_mul(Pp[k - 1], P);

  // Group by p power: A = sum_m P^m (sum_n c_{mn} g^gdeg X^n).
  MatrixRep out(dim);
  for (int m = 0; m <= max_p; ++m) {
    MatrixRep right(dim);
    bool any = false;
    for (const auto& [mono, c] : op.terms()) {
      if (mono.pdeg != m) continue;
      any = true;
      cd w = to_complex(c) * std::pow(g_value, mono.gdeg);
      const MatrixRep& Xn = Xp[mono.xdeg];
      for (std::size_t idx = 0; idx < right.a.size(); ++idx) right.a[idx] += w * Xn.a[idx];
    }
    if (!any) continue;
    MatrixRep contrib = (m == 0) ? right : mat_mul(Pp[m], right);
    for (std::size_t idx = 0; idx < out.a.size(); ++idx) out.a[idx] += contrib.a[idx];
  }
  return out;
}

std::vector<cd> eigenvalues(const MatrixRep& m) {
  MatrixRep work = m;
  std::vector<cd> w(m.dim);
  int info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', m.dim,
                           reinterpret_cast<lapack_complex_double*>(work.a.data()), m.dim,
                           reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1, nullptr,
                           1);
  if (info != 0) throw std::runtime_error("zgeev failed with info " + std::to_string(info));
  std::sort(w.begin(), w.end(), [](const cd& a, const cd& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return w;
}

std::vector<double> eigenvalues_hermitian(const MatrixRep& m) {
  MatrixRep work = m;
  std::vector<double> w(m.dim);
  int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'N', 'L', m.dim,
                            reinterpret_cast<lapack_complex_double*>(work.a.data()), m.dim,
                            w.data());
  if (info != 0) throw std::runtime_error("zheevd failed with info " + std::to_string(info));
  return w;  // ascending by LAPACK contract
}

namespace {

// Keep eigenvalues that move less than tol when the basis grows, matching
// against the nearest eigenvalue of the bigger computation.
template <typename T>
std::vector<T> gate(const std::vector<T>& small_basis, const std::vector<T>& big_basis,
                    double tol) {
  std::vector<T> kept;
  for (const T& e : small_basis) {
    double best = std::numeric_limits<double>::infinity();
    for (const T& f : big_basis) best = std::min(best, std::abs(cd(e) - cd(f)));
    if (best < tol) kept.push_back(e);
  }
  return kept;
}

}  // namespace

SpectralReport isospectral_check(const HamiltonianSplit& H, const GSeries& h_series,
                                 const std::vector<double>& g_values, int dim, double gate_tol,
                                 int gate_increment) {
  SpectralReport report;
  report.dim = dim;
  report.g_values = g_values;

  OperatorPoly H0 = weyl_quantize(H.h0);
  OperatorPoly H1 = weyl_quantize(H.h1);
  std::vector<OperatorPoly> h_ops;
  for (int n = 0; n <= h_series.truncation_order(); ++n)
    h_ops.push_back(weyl_quantize(h_series.coeff(n).as_poly()));

  const int quarter = dim / 4;
  std::vector<std::vector<cd>> trusted_H;
  std::vector<std::vector<double>> trusted_h;

  for (double g : g_values) {
    std::vector<std::vector<cd>> eH(2);
    std::vector<std::vector<double>> eh(2);
    for (int pass = 0; pass < 2; ++pass) {
      const int n = dim + pass * gate_increment;
      MatrixRep mH = matrix_of(H0, n);
      {
        MatrixRep m1 = matrix_of(H1, n);
        for (std::size_t idx = 0; idx < mH.a.size(); ++idx)
          mH.a[idx] += cd(0, g) * m1.a[idx];
      }
      eH[pass] = eigenvalues(mH);

      MatrixRep mh(n);
      double gn = 1.0;
      for (std::size_t k = 0; k < h_ops.size(); ++k) {
        MatrixRep mk = matrix_of(h_ops[k], n);
        for (std::size_t idx = 0; idx < mh.a.size(); ++idx) mh.a[idx] += gn * mk.a[idx];
        gn *= g;
      }
      eh[pass] = eigenvalues_hermitian(mh);
    }
    std::vector<cd> keptH = gate(eH[0], eH[1], gate_tol);
    std::vector<double> kepth = gate(eh[0], eh[1], gate_tol);
    if (static_cast<int>(keptH.size()) > quarter) keptH.resize(quarter);
    if (static_cast<int>(kepth.size()) > quarter) kepth.resize(quarter);
    trusted_H.push_back(std::move(keptH));
    trusted_h.push_back(std::move(kepth));
  }

  int common = dim;
  for (std::size_t i = 0; i < g_values.size(); ++i)
    common = std::min(common, static_cast<int>(std::min(trusted_H[i].size(), trusted_h[i].size())));
  report.trusted_count = common;

  for (std::size_t i = 0; i < g_values.size(); ++i) {
    trusted_H[i].resize(common);
    trusted_h[i].resize(common);
    std::vector<double> gaps(common);
    double mg = 0.0;
    for (int k = 0; k < common; ++k) {
      gaps[k] = std::abs(trusted_H[i][k].real() - trusted_h[i][k]);
      mg = std::max(mg, gaps[k]);
      report.max_imag = std::max(report.max_imag, std::abs(trusted_H[i][k].imag()));
    }
    report.max_gap.push_back(mg);
    report.pairwise_gaps.push_back(std::move(gaps));
    report.eigenvalues_H.push_back(std::move(trusted_H[i]));
    report.eigenvalues_h.push_back(std::move(trusted_h[i]));
  }
  for (std::size_t i = 0; i + 1 < report.max_gap.size(); ++i) {
    if (report.max_gap[i + 1] > 0)
      report.fitted_exponents.push_back(std::log2(report.max_gap[i] / report.max_gap[i + 1]));
  }
  return report;
}

}  // namespace moyal
