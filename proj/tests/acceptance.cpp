// Acceptance run: one PASS/FAIL line per criterion. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rumin/ce_model.hpp"
#include "rumin/forms.hpp"
#include "rumin/graded.hpp"
#include "rumin/verify.hpp"

using namespace rumin;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

VerifyReport verify(const std::string& suite, int n, int trials, std::uint64_t seed = 0) {
  VerifyOptions opt;
  opt.suite = suite;
  opt.n = n;
  opt.trials = trials;
  opt.seed = seed;
  opt.max_poly_degree = 2;
  return run_verify(opt);
}

/// Requires the suite to pass with at least `min_checks` checks, of which at
/// least `min_nontrivial` (a fraction) compared nonzero quantities.
void require_suite(Outcome& out, const VerifyReport& report, long min_checks, double min_nontrivial) {
  for (const auto& s : report.suites) {
    std::string tag = s.suite + " n=" + std::to_string(report.options.n);
    if (!s.passed) {
      const auto& f = s.failures.front();
      out.require(false, tag + ": " + f.check + ", residual " + f.residual);
    }
    out.require(s.checks >= min_checks, tag + ": only " + std::to_string(s.checks) + " checks");
    out.require(static_cast<double>(s.nontrivial) >= min_nontrivial * static_cast<double>(s.checks),
                tag + ": only " + std::to_string(s.nontrivial) + " nontrivial checks of " + std::to_string(s.checks));
  }
}

Outcome shuffle_ground_truth() {
  Outcome out;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> d{mask & 1, (mask >> 1) & 1, (mask >> 2) & 1};
    std::vector<int> d2{d[0], d[1]};
    out.require(shuffle_product(1, 1, d2) == oracle::displayed_nu(1, 1, d2), "nu_{1,1} parity " + std::to_string(mask));
    out.require(shuffle_product(1, 2, d) == oracle::displayed_nu(1, 2, d), "nu_{1,2} parity " + std::to_string(mask));
    out.require(shuffle_product(2, 1, d) == oracle::displayed_nu(2, 1, d), "nu_{2,1} parity " + std::to_string(mask));
  }
  return out;
}

Outcome dsa_lemma() {
  Outcome out;
  for (int n : {1, 2}) require_suite(out, verify("dsa-lemma", n, 100), 100L * (2 * n + 1), 0.1);
  return out;
}

Outcome baby_lefschetz() {
  Outcome out;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= n; ++k) {
      Matrix m = lefschetz_power_matrix(ContactModel(n), k);
      std::string tag = "n=" + std::to_string(n) + " k=" + std::to_string(k);
      out.require(m.rows() == m.cols() && m.rows() > 0, tag + " not square");
      out.require(sgn(m.determinant()) != 0, tag + " singular");
      out.require(m == oracle::lefschetz_matrix(n, k), tag + " differs from the bubble-sort expansion");
    }
  }
  return out;
}

Outcome prop_lefschetz() {
  Outcome out;
  for (int n : {1, 2}) {
    require_suite(out, verify("gamma-props", n, 100), 100, 0.1);
    require_suite(out, verify("gamma-invariance", n, 100), 100, 0.05);
  }
  return out;
}

Outcome theorem_projection() {
  Outcome out;
  for (int n : {1, 2}) {
    require_suite(out, verify("retract", n, 100), 100, 0.5);
    require_suite(out, verify("rumin-membership", n, 100), 100, 0.5);
  }
  return out;
}

Outcome corollary_structure() {
  Outcome out;
  for (int n : {1, 2}) {
    require_suite(out, verify("stasheff", n, 50), 50 * 5, 0.5);
    require_suite(out, verify("shuffle-vanishing", n, 50), 50 * 12, 0.5);
    require_suite(out, verify("morphism", n, 50), 50 * 4, 0.5);
  }
  return out;
}

Outcome transfer_cross_check() {
  Outcome out;
  for (int n : {1, 2}) {
    require_suite(out, verify("transfer-match", n, 50), 50 * 3, 0.3);
    require_suite(out, verify("higher-vanish", n, 50), 50 * 4, 0.5);
  }
  return out;
}

Outcome finite_model() {
  Outcome out;
  auto report = verify("ce-cohomology", 1, 0);
  require_suite(out, report, 9330, 1.0);
  // Independent Betti numbers from minors of the hand-written CE differential.
  Matrix d1(3, 3);
  d1.at(0, 2) = 1;
  out.require(oracle::betti({1, 3, 3, 1}, {Matrix(3, 1), d1, Matrix(1, 3)}) == std::vector<int>{1, 2, 2, 1},
              "oracle Betti numbers");
  auto model = heisenberg_rumin_model();
  auto tr = markl_transfer(model.retract, 3);
  auto e = [&](const char* l) { return FiniteVector::basis(model.algebra, l); };
  out.require(tr.m({e("a"), e("b"), e("a")}) == multiply(e("c"), e("a")).scaled(2), "m3(a, b, a) != 2 c^a");
  return out;
}

Outcome negative_controls() {
  Outcome out;
  VerifyOptions st;
  st.suite = "stasheff";
  st.trials = 50;
  st.relations = {3};
  st.m_family = std::make_shared<const GradedOpSet<Form>>(oracle::corrupted_m_family());
  auto s = run_verify(st);
  out.require(!s.passed, "corrupted m3 passed Stasheff n=3");
  out.require(!s.passed && !s.suites[0].failures[0].inputs.empty() && s.suites[0].failures[0].residual != "0",
              "corrupted m3 failure lacks a witness");

  VerifyOptions mo;
  mo.suite = "morphism";
  mo.trials = 50;
  mo.relations = {2};
  mo.f_family = std::make_shared<const GradedOpSet<Form>>(oracle::corrupted_f_family());
  auto m = run_verify(mo);
  out.require(!m.passed, "negated f2 passed the n=2 morphism relation");
  out.require(!m.passed && !m.suites[0].failures[0].inputs.empty() && m.suites[0].failures[0].residual != "0",
              "negated f2 failure lacks a witness");
  return out;
}

struct Criterion {
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 shuffle expansions nu_{1,1}, nu_{1,2}, nu_{2,1}, all parities", 1, shuffle_ground_truth},
      {"2 theta^dw = w^dtheta on vertical forms, n=1,2", 30, dsa_lemma},
      {"3 Lefschetz power matrices invertible, k<=n<=3", 5, baby_lefschetz},
      {"4 Gamma: vertical kernel, GdG=G, Gd=1, rescaling", 120, prop_lefschetz},
      {"5 projection identities and membership criteria", 120, theorem_projection},
      {"6 Stasheff n<=5, shuffle vanishing, morphism n<=4", 600, corollary_structure},
      {"7 transfer reproduces m2, m3, f2; m4, m5, f3, f4 vanish", 300, transfer_cross_check},
      {"8 finite model: Betti, ring iso, exhaustive Stasheff, m3", 60, finite_model},
      {"9 negative controls fail with witnesses", 60, negative_controls},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.ok && seconds > c.limit_seconds) {
      out.ok = false;
      out.detail = "over time limit";
    }
    if (!out.ok) ++failed;
    std::printf("%s  criterion %s  (%.2fs / %.0fs)%s%s\n", out.ok ? "PASS" : "FAIL", c.name, seconds, c.limit_seconds,
                out.ok ? "" : "  ", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
