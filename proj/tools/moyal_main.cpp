// Command-line front end: parse a Hamiltonian, run the metric/counterpart
// pipeline, and emit text, JSON or LaTeX.
//
// Exit codes: 0 success, 1 usage, 2 parse, 3 solver, 4 verification.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "moyal/emit.hpp"
#include "moyal/intertwiner.hpp"
#include "moyal/parser.hpp"
#include "moyal/specverify.hpp"
#include "moyal/star.hpp"

namespace {

using namespace moyal;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerification = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string expression;
  std::vector<std::string> raw_params;
  std::string input_mode = "operator";
  std::string format = "text";
  std::string mode = "auto";
  int order = 6;
  int ansatz_degree = 5;
};

void add_common(CLI::App* cmd, CommonOptions& opts, bool with_solver_flags = true) {
  cmd->add_option("expression", opts.expression, "Hamiltonian expression, e.g. \"P^2/2 + X^2/2 + i*G*X^3\"")
      ->required();
  cmd->add_option("--param", opts.raw_params,
                  "substitute a named rational parameter, e.g. --param a=16 or --param m2=3/2");
  cmd->add_option("--input-mode", opts.input_mode, "operator|symbol (default operator)")
      ->check(CLI::IsMember({"operator", "symbol"}));
  cmd->add_option("--format", opts.format, "text|json|latex (default text)")
      ->check(CLI::IsMember({"text", "json", "latex"}));
  if (with_solver_flags) {
    cmd->add_option("--order", opts.order, "truncation order in the coupling (default 6)")
        ->check(CLI::Range(0, 64));
    cmd->add_option("--mode", opts.mode, "exact|perturbative|auto (default auto)")
        ->check(CLI::IsMember({"exact", "perturbative", "auto"}));
    cmd->add_option("--ansatz-degree", opts.ansatz_degree,
                    "degree of the exponential ansatz in exact mode (default 5)")
        ->check(CLI::Range(1, 32));
  }
}

ParamMap parse_params(const std::vector<std::string>& raw) {
  ParamMap out;
  for (const std::string& entry : raw) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError("--param expects name=rational, got '" + entry + "'");
    std::string name = entry.substr(0, eq);
    try {
      out[name] = rational_from_string(entry.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw UsageError("--param " + name + ": " + e.what());
    }
  }
  return out;
}

HamiltonianSplit load_hamiltonian(const CommonOptions& opts) {
  InputMode mode =
      opts.input_mode == "symbol" ? InputMode::symbol_mode : InputMode::operator_mode;
  return parse_hamiltonian(opts.expression, parse_params(opts.raw_params), mode);
}

SolveOptions solve_options(const CommonOptions& opts) {
  SolveOptions s;
  s.order = opts.order;
  s.exact_ansatz_degree = opts.ansatz_degree;
  if (opts.mode == "exact") s.mode = SolveMode::exact;
  if (opts.mode == "perturbative") s.mode = SolveMode::perturbative;
  return s;
}

Json command_header(const char* command, const CommonOptions& opts) {
  Json j;
  j["command"] = command;
  j["input"] = opts.expression;
  Json params = Json::object();
  for (const auto& [name, value] : parse_params(opts.raw_params)) params[name] = to_string(value);
  j["parameters"] = params;
  j["input_mode"] = opts.input_mode;
  return j;
}

std::string latex_pde(const LinearDiffOp& op) {
  std::string out = "0 = ";
  bool first = true;
  for (const auto& [d, coeff] : op.terms()) {
    if (!first) out += " + ";
    first = false;
    out += "\\left(" + latex(coeff) + "\\right)";
    if (d.dx > 0) out += "\\partial_x" + (d.dx > 1 ? "^{" + std::to_string(d.dx) + "}" : "");
    if (d.dp > 0) out += "\\partial_p" + (d.dp > 1 ? "^{" + std::to_string(d.dp) + "}" : "");
    out += "\\eta^2";
  }
  return out;
}

Json pde_to_json(const LinearDiffOp& op) {
  Json arr = Json::array();
  for (const auto& [d, coeff] : op.terms()) {
    Json slot;
    slot["dx"] = d.dx;
    slot["dp"] = d.dp;
    slot["coeff"] = to_json(coeff);
    arr.push_back(slot);
  }
  return arr;
}

int run_pde(const CommonOptions& opts, const std::string& product) {
  HamiltonianSplit H = load_hamiltonian(opts);
  std::vector<std::pair<std::string, Product>> products;
  if (product == "star" || product == "both") products.emplace_back("star", Product::moyal);
  if (product == "standard" || product == "both")
    products.emplace_back("standard", Product::standard);

  if (opts.format == "json") {
    Json j = command_header("pde", opts);
    Json eqs = Json::object();
    for (const auto& [name, prod] : products) eqs[name] = pde_to_json(build_pde(H, prod));
    j["equations"] = eqs;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const auto& [name, prod] : products) {
    LinearDiffOp op = build_pde(H, prod);
    if (opts.format == "latex")
      std::cout << name << ": " << latex_pde(op) << "\n";
    else
      std::cout << name << ": " << op.str() << "\n";
  }
  return 0;
}

Json diagnostics_to_json(const MetricSolution& sol) {
  Json d;
  d["mode"] = sol.mode == SolveMode::exact ? "exact" : "perturbative";
  d["intertwining_residual"] = to_json(sol.intertwining_residual);
  d["inverse_matches_reflection"] = sol.inverse_matches_reflection;
  Json orders = Json::array();
  for (const auto& od : sol.order_diagnostics) {
    Json o;
    o["order"] = od.order;
    o["degree_bound"] = od.degree_bound;
    o["parity_pruned"] = od.parity_pruned;
    o["kernel_fixed_by_normalization"] = od.kernel_fixed_by_normalization;
    o["kernel_undetermined_set_zero"] = od.kernel_undetermined_set_zero;
    Json coords = Json::array();
    for (const auto& c : od.kernel_coords) coords.push_back(to_string(c));
    o["kernel_coords_in_h0_powers"] = coords;
    orders.push_back(o);
  }
  d["orders"] = orders;
  return d;
}

void print_series_text(const std::string& name, const GSeries& s, bool sbasis) {
  for (int n = 0; n <= s.truncation_order(); ++n) {
    const ExpWeightedPoly& c = s.coeff(n);
    if (c.is_zero() && n > 0) continue;
    std::cout << name << "[" << n << "] = " << (sbasis ? sbasis_str(c.as_poly()) : c.str())
              << "\n";
  }
}

enum class SeriesCommand { eta2, eta, hermitian };

int run_series_command(SeriesCommand which, const CommonOptions& opts) {
  HamiltonianSplit H = load_hamiltonian(opts);
  MetricSolution sol = solve_metric(H, solve_options(opts));
  const char* name = which == SeriesCommand::eta2  ? "eta2"
                     : which == SeriesCommand::eta ? "eta"
                                                   : "h";
  const GSeries& series = which == SeriesCommand::eta2  ? sol.eta_squared
                          : which == SeriesCommand::eta ? sol.eta
                                                        : sol.h;

  if (opts.format == "json") {
    Json j = command_header(name, opts);
    j["mode"] = sol.mode == SolveMode::exact ? "exact" : "perturbative";
    if (sol.exact) {
      Json closed;
      closed["eta2"] = to_json(sol.exact->eta_squared);
      closed["eta"] = to_json(sol.exact->eta);
      closed["eta_inverse"] = to_json(sol.exact->eta_inverse);
      closed["h"] = to_json(sol.exact->h);
      j["closed_form"] = closed;
    }
    j["series"] = series_to_json(series);
    j["diagnostics"] = diagnostics_to_json(sol);
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  if (opts.format == "latex") {
    if (sol.exact) {
      const ExpWeightedPoly& closed = which == SeriesCommand::eta2  ? sol.exact->eta_squared
                                      : which == SeriesCommand::eta ? sol.exact->eta
                                                                    : ExpWeightedPoly(sol.exact->h);
      std::cout << latex(closed) << "\n";
    } else {
      for (int n = 0; n <= series.truncation_order(); ++n) {
        if (series.coeff(n).is_zero() && n > 0) continue;
        std::cout << name << "_{" << n << "} = " << latex(series.coeff(n)) << "\n";
      }
    }
    return 0;
  }

  std::cout << "mode: " << (sol.mode == SolveMode::exact ? "exact" : "perturbative") << "\n";
  if (sol.exact) {
    switch (which) {
      case SeriesCommand::eta2:
        std::cout << "eta2 = " << sol.exact->eta_squared.str() << "\n";
        break;
      case SeriesCommand::eta:
        std::cout << "eta = " << sol.exact->eta.str() << "\n";
        std::cout << "eta_inverse = " << sol.exact->eta_inverse.str() << "\n";
        break;
      case SeriesCommand::hermitian:
        std::cout << "h = " << sol.exact->h.str() << "\n";
        std::cout << "h(G=1) = " << sol.exact->h.substitute_g(1).str() << "\n";
        break;
    }
    return 0;
  }
  if (which == SeriesCommand::hermitian) {
    print_series_text("h", series, /*sbasis=*/true);
    for (int n = 0; n <= series.truncation_order(); ++n) {
      if (series.coeff(n).is_zero() && n > 0) continue;
      std::cout << "h_op[" << n << "] = " << weyl_quantize(series.coeff(n).as_poly()).str()
                << "\n";
    }
  } else {
    print_series_text(name, series, /*sbasis=*/false);
  }
  return 0;
}

// Local random polynomial used by the verify spot checks.
PhasePoly spot_check_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 6), num(-9, 9), den(1, 9);
  PhasePoly out;
  for (int t = 0; t < 5; ++t) {
    int a = deg(rng);
    std::uniform_int_distribution<int> rest(0, 6 - a);
    int b = rest(rng);
    Rational re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    out.add_term({a, b, 0}, {re, im});
  }
  return out;
}

int run_verify(const CommonOptions& opts, const std::string& eta2_file, unsigned seed) {
  HamiltonianSplit H = load_hamiltonian(opts);

  ResidualReport residual;
  bool reflection_ok = true;
  bool odd_ok = true;
  if (!eta2_file.empty()) {
    std::ifstream in(eta2_file);
    if (!in) throw UsageError("cannot open --eta2-file " + eta2_file);
    Json j = Json::parse(in);
    GSeries eta2 = series_from_json(j.contains("series") ? j["series"] : j);
    residual = verify_intertwining(H, eta2);
    reflection_ok =
        series_mul(eta2, eta2.reflect_g(), SeriesProduct::star).is_one();
  } else {
    MetricSolution sol = solve_metric(H, solve_options(opts));
    residual = sol.intertwining_residual;
    reflection_ok = sol.inverse_matches_reflection &&
                    series_mul(sol.eta_squared, sol.eta_squared.reflect_g(), SeriesProduct::star)
                        .is_one();
    for (int n = 1; n <= sol.h.truncation_order(); n += 2)
      if (!sol.h.coeff(n).is_zero()) odd_ok = false;
  }

  // Randomized spot checks of the quantization homomorphisms.
  std::mt19937_64 rng(seed);
  bool homomorphism_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    PhasePoly f = spot_check_poly(rng);
    PhasePoly g = spot_check_poly(rng);
    if (!(weyl_quantize(star_moyal(f, g)) == op_mul(weyl_quantize(f), weyl_quantize(g))))
      homomorphism_ok = false;
    if (!(standard_quantize(star_standard(f, g)) ==
          op_mul(standard_quantize(f), standard_quantize(g))))
      homomorphism_ok = false;
  }

  bool pass = residual.all_zero() && reflection_ok && odd_ok && homomorphism_ok;
  if (opts.format == "json") {
    Json j = command_header("verify", opts);
    j["intertwining_residual"] = to_json(residual);
    j["normalization_holds"] = reflection_ok;
    j["odd_orders_vanish"] = odd_ok;
    j["quantization_homomorphism_spot_checks"] = homomorphism_ok;
    j["seed"] = seed;
    j["pass"] = pass;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "intertwining residual per order:";
    for (int n : residual.nonzero_terms_per_order) std::cout << " " << n;
    std::cout << "\nnormalization eta2(g)*eta2(-g) = 1: " << (reflection_ok ? "yes" : "NO")
              << "\nodd-order counterpart coefficients vanish: " << (odd_ok ? "yes" : "NO")
              << "\nquantization homomorphism spot checks (seed " << seed
              << "): " << (homomorphism_ok ? "pass" : "FAIL") << "\n"
              << (pass ? "verified" : "VERIFICATION FAILED") << "\n";
  }
  return pass ? 0 : kExitVerification;
}

int run_spectrum(const CommonOptions& opts, std::vector<double> g_values, int dim) {
  if (g_values.empty()) g_values = {0.05};
  HamiltonianSplit H = load_hamiltonian(opts);
  MetricSolution sol = solve_metric(H, solve_options(opts));
  SpectralReport report = isospectral_check(H, sol.h, g_values, dim);

  if (opts.format == "json") {
    Json j = command_header("spectrum", opts);
    j["mode"] = sol.mode == SolveMode::exact ? "exact" : "perturbative";
    j["order"] = opts.order;
    j["report"] = to_json(report);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "dim: " << report.dim << "  trusted levels: " << report.trusted_count
            << "  max |Im E(H)|: " << report.max_imag << "\n";
  for (std::size_t i = 0; i < report.g_values.size(); ++i) {
    std::cout << "g = " << report.g_values[i] << ": max |E_k(H) - E_k(h)| = "
              << report.max_gap[i] << "\n";
  }
  for (double e : report.fitted_exponents) std::cout << "fitted gap exponent: " << e << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact phase-space similarity transformations for pseudo-Hermitian Hamiltonians"};
  app.require_subcommand(1);

  CommonOptions pde_opts;
  std::string pde_product = "star";
  CLI::App* pde = app.add_subcommand("pde", "print the differential equation for the metric");
  add_common(pde, pde_opts, /*with_solver_flags=*/false);
  pde->add_option("--product", pde_product, "star|standard|both (default star)")
      ->check(CLI::IsMember({"star", "standard", "both"}));

  CommonOptions eta2_opts, eta_opts, herm_opts, verify_opts, spectrum_opts;
  CLI::App* eta2 = app.add_subcommand("eta2", "solve for the metric eta^2");
  add_common(eta2, eta2_opts);
  CLI::App* eta = app.add_subcommand("eta", "solve for the similarity transformation eta");
  add_common(eta, eta_opts);
  CLI::App* herm = app.add_subcommand("hermitian", "compute the Hermitian counterpart");
  add_common(herm, herm_opts);

  CLI::App* verify = app.add_subcommand("verify", "re-check the defining relations");
  add_common(verify, verify_opts);
  std::string eta2_file;
  unsigned seed = 42;
  verify->add_option("--eta2-file", eta2_file,
                     "verify a stored eta^2 JSON series instead of solving");
  verify->add_option("--seed", seed, "seed for the randomized spot checks");

  CLI::App* spectrum = app.add_subcommand("spectrum", "numerical isospectrality report");
  add_common(spectrum, spectrum_opts);
  std::vector<double> g_values;
  int dim = 200;
  spectrum->add_option("--g", g_values, "coupling value(s); repeat for a convergence fit");
  spectrum->add_option("--dim", dim, "oscillator basis size (default 200)")
      ->check(CLI::Range(4, 4096));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (pde->parsed()) return run_pde(pde_opts, pde_product);
    if (eta2->parsed()) return run_series_command(SeriesCommand::eta2, eta2_opts);
    if (eta->parsed()) return run_series_command(SeriesCommand::eta, eta_opts);
    if (herm->parsed()) return run_series_command(SeriesCommand::hermitian, herm_opts);
    if (verify->parsed()) return run_verify(verify_opts, eta2_file, seed);
    if (spectrum->parsed()) return run_spectrum(spectrum_opts, g_values, dim);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "parse error at " << e.line << ":" << e.column << ": " << e.what();
    if (!e.expected.empty()) std::cerr << " (expected " << e.expected << ")";
    std::cerr << "\n";
    return kExitParse;
  } catch (const HamiltonianError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const OddOrderResidual& e) {
    std::cerr << "verification error: " << e.what() << "\n";
    return kExitVerification;
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
