#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "rumin/ce_model.hpp"
#include "rumin/cohomology.hpp"
#include "rumin/expr.hpp"
#include "rumin/finite_algebra.hpp"
#include "rumin/forms.hpp"
#include "rumin/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_eval(const std::string& text, int n) {
  rumin::ContactModel model(n);
  try {
    std::cout << rumin::eval_command(text, model) << "\n";
    return kExitPass;
  } catch (const rumin::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

int cmd_verify(rumin::VerifyOptions opt, const std::string& json_path) {
  if (!rumin::is_suite_name(opt.suite)) {
    std::cerr << "unknown suite '" << opt.suite << "'; expected one of: all";
    for (const auto& s : rumin::suite_names()) std::cerr << " " << s;
    std::cerr << "\n";
    return kExitUsage;
  }
  rumin::VerifyReport report = rumin::run_verify(opt);
  std::cout << report.summary();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) {
      std::cerr << "cannot write " << json_path << "\n";
      return kExitUsage;
    }
    out << report.to_json().dump(2) << "\n";
  }
  return report.passed ? kExitPass : kExitFail;
}

int cmd_basis(int n, int degree, bool vertical) {
  rumin::ContactModel model(n);
  if (degree < 0 || degree > model.dim()) {
    std::cerr << "degree must lie in [0, " << model.dim() << "]\n";
    return kExitUsage;
  }
  auto basis = vertical ? rumin::vertical_basis(model, degree) : rumin::coframe_basis(model, degree);
  for (auto m : basis) std::cout << rumin::monomial_name(model, m) << "\n";
  return kExitPass;
}

int cmd_model(int n) {
  rumin::ContactModel model(n);
  std::cout << "H^" << model.dim() << " (n = " << n << "), coordinates";
  for (int i = 0; i < model.nvars(); ++i) std::cout << " " << rumin::coordinate_name(model.nvars(), i);
  std::cout << "\ncoframe:";
  for (int i = 0; i < model.dim(); ++i) std::cout << " " << model.generator_name(i);
  std::cout << "\ntheta = dz";
  for (int i = 1; i <= n; ++i) std::cout << " - y" << i << " dx" << i;
  std::cout << "\ndtheta = " << rumin::to_string(rumin::Form::dtheta(model)) << "\n";
  std::cout << "d(z) = " << rumin::to_string(rumin::exterior_d(rumin::Form::coordinate(model, model.z_index()))) << "\n";
  std::cout << "volume theta^dtheta^" << n << " = " << rumin::to_string(rumin::contact_volume(model)) << "\n";
  return kExitPass;
}

int cmd_cohomology(const std::string& path) {
  rumin::AlgebraPtr algebra;
  try {
    algebra = path.empty() ? rumin::heisenberg_ce_algebra()
                           : std::make_shared<const rumin::FiniteGradedAlgebra>(
                                 rumin::FiniteGradedAlgebra::parse(read_file(path)));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  rumin::Cohomology h = rumin::cohomology(algebra->cochain_data());
  auto element = [&](int degree, const rumin::RationalVector& v) {
    return rumin::to_string(rumin::FiniteVector(algebra, degree, v));
  };
  std::cout << "Betti numbers:";
  for (int b : h.betti_numbers()) std::cout << " " << b;
  std::cout << "\n";
  for (int k = h.min_degree(); k <= h.max_degree(); ++k) {
    const auto& reps = h.representatives(k);
    for (std::size_t i = 0; i < reps.size(); ++i) {
      std::cout << "H^" << k << "[" << i << "] = [" << element(k, reps[i]) << "]\n";
    }
  }
  for (int p = h.min_degree(); p <= h.max_degree(); ++p) {
    for (int q = p; q <= h.max_degree(); ++q) {
      if (p + q > h.max_degree() || p + q < h.min_degree()) continue;
      for (int i = 0; i < h.betti(p); ++i) {
        for (int j = 0; j < h.betti(q); ++j) {
          if (p == q && j < i) continue;
          rumin::RationalVector x(static_cast<std::size_t>(h.betti(p)));
          rumin::RationalVector y(static_cast<std::size_t>(h.betti(q)));
          x[static_cast<std::size_t>(i)] = 1;
          y[static_cast<std::size_t>(j)] = 1;
          rumin::RationalVector c = h.class_product(p, x, q, y);
          if (rumin::is_zero_vector(c)) continue;
          std::cout << "H^" << p << "[" << i << "] * H^" << q << "[" << j << "] = [" << element(p + q, h.lift(p + q, c))
                    << "]\n";
        }
      }
    }
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rumin complex and its C-infinity structure on Heisenberg groups"};
  app.require_subcommand(1);
  app.fallthrough();

  int n = 1;
  rumin::VerifyOptions opt;
  std::string json_path;
  app.add_option("--n", n, "Heisenberg group H^(2n+1)")->check(CLI::Range(1, rumin::kMaxContactN));
  app.add_option("--trials", opt.trials, "Random trials per suite")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", opt.seed, "PRNG seed");
  app.add_option("--max-poly-degree", opt.max_poly_degree, "Degree bound for random coefficients")
      ->check(CLI::Range(0, 6));
  app.add_option("--json", json_path, "Write the verification report as JSON");
  app.add_option("--threads", opt.threads, "Worker threads for random trials")->check(CLI::Range(1u, 256u));

  std::string expr;
  auto* eval = app.add_subcommand("eval", "Evaluate a form expression");
  eval->add_option("expr", expr, "Expression, e.g. 'm3(dx1; dy1; dx1)'")->required();

  std::string suite_pos, suite_flag;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("SUITE", suite_pos, "Suite name (default all)");
  verify->add_option("--suite", suite_flag, "Suite name");

  int degree = 0;
  bool vertical = false;
  auto* basis = app.add_subcommand("basis", "List coframe basis monomials of a degree");
  basis->add_option("--degree", degree, "Form degree")->required();
  basis->add_flag("--vertical", vertical, "Only monomials containing theta");

  auto* model = app.add_subcommand("model", "Print the contact form and coframe");

  std::string algebra_path;
  auto* coh = app.add_subcommand("cohomology", "Cohomology ring of a finite graded algebra");
  coh->add_option("--algebra", algebra_path, "Algebra file (default: CE algebra of the Heisenberg algebra)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(expr, n);
    if (*verify) {
      if (!suite_pos.empty() && !suite_flag.empty() && suite_pos != suite_flag) {
        std::cerr << "conflicting suite names\n";
        return kExitUsage;
      }
      opt.suite = !suite_flag.empty() ? suite_flag : !suite_pos.empty() ? suite_pos : "all";
      opt.n = n;
      return cmd_verify(opt, json_path);
    }
    if (*basis) return cmd_basis(n, degree, vertical);
    if (*model) return cmd_model(n);
    if (*coh) return cmd_cohomology(algebra_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
