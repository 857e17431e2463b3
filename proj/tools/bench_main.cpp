// Timing comparison of the serial reference kernels against their OpenMP
// counterparts: sparse polynomial product, the symmetric star product, and
// fraction-free elimination.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>

#include "moyal/linsolve.hpp"
#include "moyal/poly.hpp"
#include "moyal/star.hpp"

using namespace moyal;

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int repeats = 3) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

PhasePoly random_poly(std::mt19937_64& rng, int max_degree, int terms) {
  std::uniform_int_distribution<int> deg(0, max_degree), num(-9, 9), den(1, 9);
  PhasePoly out;
  while (static_cast<int>(out.term_count()) < terms) {
    int a = deg(rng);
    std::uniform_int_distribution<int> rest(0, max_degree - a);
    Rational re(num(rng), den(rng));
    re.canonicalize();
    if (re == 0) re = 1;
    out.add_term({a, rest(rng), 0}, GaussianRational(re));
  }
  return out;
}

SparseLinearSystem random_system(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  std::bernoulli_distribution fill(0.25);
  SparseLinearSystem sys;
  sys.ncols = n;
  for (int r = 0; r < n; ++r) {
    std::vector<std::pair<int, GaussianRational>> row;
    for (int c = 0; c < n; ++c) {
      if (c == r || fill(rng)) {
        Rational v(num(rng), den(rng));
        v.canonicalize();
        if (v == 0) v = 1;
        row.emplace_back(c, GaussianRational(v));
      }
    }
    sys.rows.push_back(row);
    sys.rhs.push_back(GaussianRational(num(rng)));
  }
  return sys;
}

}  // namespace

int main() {
  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-34s %12s %12s %8s\n", "kernel", "serial ms", "openmp ms", "speedup");

  std::mt19937_64 rng(12345);

  {
    PhasePoly a = random_poly(rng, 40, 400);
    PhasePoly b = random_poly(rng, 40, 400);
    PhasePoly out_serial, out_parallel;
    double ts = time_ms([&] { out_serial = poly_mul_serial(a, b); });
    double tp = time_ms([&] { out_parallel = poly_mul_parallel(a, b); });
    if (!(out_serial == out_parallel)) {
      std::printf("poly_mul results differ!\n");
      return 1;
    }
    std::printf("%-34s %12.2f %12.2f %7.2fx\n", "poly_mul (400x400 terms)", ts, tp, ts / tp);
  }

  {
    std::mt19937_64 rng2(7);
    PhasePoly ea;
    ea.add_term({0, 3, 1}, GaussianRational(Rational(1, 3)));
    ExpWeightedPoly f(ea, random_poly(rng2, 18, 120));
    ExpWeightedPoly g(ea, random_poly(rng2, 18, 120));
    ExpWeightedPoly out_serial, out_parallel;
    double ts = time_ms([&] { out_serial = star_moyal_serial(f, g); });
    double tp = time_ms([&] { out_parallel = star_moyal(f, g); });
    if (!(out_serial == out_parallel)) {
      std::printf("star_moyal results differ!\n");
      return 1;
    }
    std::printf("%-34s %12.2f %12.2f %7.2fx\n", "star_moyal (exp-weighted, deg 18)", ts, tp,
                ts / tp);
  }

  {
    SparseLinearSystem sys = random_system(rng, 220);
    LinearSolveResult rs, rp;
    double ts = time_ms([&] { rs = solve_fraction_free(sys, false); }, 1);
    double tp = time_ms([&] { rp = solve_fraction_free(sys, true); }, 1);
    bool same = rs.consistent == rp.consistent && rs.solution.size() == rp.solution.size();
    for (std::size_t i = 0; same && i < rs.solution.size(); ++i)
      same = rs.solution[i] == rp.solution[i];
    if (!same) {
      std::printf("solve_fraction_free results differ!\n");
      return 1;
    }
    std::printf("%-34s %12.2f %12.2f %7.2fx\n", "fraction-free solve (220x220)", ts, tp, ts / tp);
  }

  return 0;
}
