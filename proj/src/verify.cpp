#include "rumin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "rumin/ce_model.hpp"
#include "rumin/cohomology.hpp"
#include "rumin/random.hpp"
#include "rumin/rumin.hpp"

namespace rumin {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct TrialOutcome {
  long checks = 0;
  long nontrivial = 0;
  std::vector<VerifyFailure> failures;
};

std::vector<std::string> printed(std::initializer_list<const Form*> forms) {
  std::vector<std::string> out;
  for (const Form* f : forms) out.push_back(to_string(*f));
  return out;
}

std::vector<std::string> printed(std::span<const Form> forms) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(to_string(f));
  return out;
}

class Recorder {
 public:
  Recorder(TrialOutcome& out, int trial) : out_(out), trial_(trial) {}

  /// Records a failure unless the residual vanishes.
  void zero(const std::string& check, const Form& residual, std::vector<std::string> inputs, bool nontrivial = true) {
    ++out_.checks;
    if (nontrivial) ++out_.nontrivial;
    if (!residual.is_zero()) out_.failures.push_back({check, trial_, std::move(inputs), to_string(residual)});
  }

  void equal(const std::string& check, const Form& lhs, const Form& rhs, std::vector<std::string> inputs) {
    bool nontrivial = !lhs.is_zero() || !rhs.is_zero();
    Form residual = lhs.degree() == rhs.degree() || lhs.is_zero() || rhs.is_zero() ? lhs - rhs : lhs;
    if (lhs.degree() != rhs.degree() && !lhs.is_zero() && !rhs.is_zero()) {
      ++out_.checks;
      out_.failures.push_back({check + " (degree mismatch)", trial_, std::move(inputs), to_string(lhs)});
      return;
    }
    zero(check, residual, std::move(inputs), nontrivial);
  }

  void truth(const std::string& check, bool ok, std::vector<std::string> inputs, const std::string& detail = "false") {
    ++out_.checks;
    ++out_.nontrivial;
    if (!ok) out_.failures.push_back({check, trial_, std::move(inputs), detail});
  }

 private:
  TrialOutcome& out_;
  int trial_;
};

using TrialFn = std::function<void(SplitMix64& rng, Recorder& rec)>;

SuiteReport run_trials(const std::string& name, const VerifyOptions& opt, const TrialFn& fn) {
  SuiteReport report;
  report.suite = name;
  const int trials = std::max(opt.trials, 0);
  std::vector<TrialOutcome> outcomes(static_cast<std::size_t>(trials));
  const std::uint64_t salt = suite_salt(name.c_str());
  auto work = [&](int first, int stride) {
    for (int t = first; t < trials; t += stride) {
      SplitMix64 rng = trial_stream(opt.seed, salt, static_cast<std::uint64_t>(t));
      Recorder rec(outcomes[static_cast<std::size_t>(t)], t);
      try {
        fn(rng, rec);
      } catch (const std::exception& e) {
        rec.truth("exception", false, {}, e.what());
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(std::max(trials, 1))));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(work, static_cast<int>(k), static_cast<int>(threads));
    for (auto& th : pool) th.join();
  }
  for (auto& o : outcomes) {
    report.checks += o.checks;
    report.nontrivial += o.nontrivial;
    for (auto& f : o.failures) report.failures.push_back(std::move(f));
  }
  report.passed = report.failures.empty();
  return report;
}

int random_degree(SplitMix64& rng, const ContactModel& model) {
  return static_cast<int>(rng.uniform(0, model.dim()));
}

Form certified(SplitMix64& rng, const ContactModel& model, int degree, int maxdeg) {
  return pi(random_form(rng, model, degree, maxdeg)).form();
}

/// Random certified tuple whose relation residual (degree sum + shift) is a
/// degree that can carry nonzero forms.
std::vector<Form> certified_tuple(SplitMix64& rng, const ContactModel& model, int length, int shift, int maxdeg) {
  std::vector<int> degrees(static_cast<std::size_t>(length));
  while (true) {
    int sum = shift;
    for (auto& k : degrees) {
      k = random_degree(rng, model);
      sum += k;
    }
    if (sum >= 0 && sum <= model.dim()) break;
  }
  std::vector<Form> out;
  for (int k : degrees) out.push_back(certified(rng, model, k, maxdeg));
  return out;
}

/// Whether some m_2 or m_3 on a contiguous window of the tuple is nonzero.
bool active(const GradedOpSet<Form>& m, std::span<const Form> xs) {
  for (std::size_t s = 2; s <= std::min<std::size_t>(3, xs.size()); ++s) {
    if (!m.has(static_cast<int>(s))) continue;
    for (std::size_t r = 0; r + s <= xs.size(); ++r) {
      if (!m(xs.subspan(r, s)).is_zero()) return true;
    }
  }
  return xs.size() == 1 && !exterior_d(xs[0]).is_zero();
}

constexpr int kActiveAttempts = 12;

/// Like certified_tuple, redrawn a few times until `keep` accepts it.
std::vector<Form> sample_tuple(SplitMix64& rng, const ContactModel& model, int length, int shift, int maxdeg,
                               const std::function<bool(std::span<const Form>)>& keep) {
  std::vector<Form> tuple;
  for (int attempt = 0; attempt < kActiveAttempts; ++attempt) {
    tuple = certified_tuple(rng, model, length, shift, maxdeg);
    if (keep(tuple)) break;
  }
  return tuple;
}

std::vector<Form> active_tuple(SplitMix64& rng, const ContactModel& model, int length, int shift, int maxdeg,
                               const GradedOpSet<Form>& m) {
  return sample_tuple(rng, model, length, shift, maxdeg, [&](std::span<const Form> xs) { return active(m, xs); });
}

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
  return out;
}

// ---------------------------------------------------------------- suites

SuiteReport suite_dsq(const VerifyOptions& opt, const ContactModel& model) {
  return run_trials("dsq", opt, [&](SplitMix64& rng, Recorder& rec) {
    for (int k = 0; k <= model.dim(); ++k) {
      Form w = random_form(rng, model, k, opt.max_poly_degree);
      rec.zero("d d = 0", exterior_d(exterior_d(w)), printed({&w}), !exterior_d(w).is_zero());
    }
  });
}

SuiteReport suite_leibniz(const VerifyOptions& opt, const ContactModel& model) {
  return run_trials("leibniz", opt, [&](SplitMix64& rng, Recorder& rec) {
    int p, q;
    do {
      p = random_degree(rng, model);
      q = random_degree(rng, model);
    } while (p + q + 1 > model.dim());
    Form a = random_form(rng, model, p, opt.max_poly_degree);
    Form b = random_form(rng, model, q, opt.max_poly_degree);
    Form rhs = wedge(exterior_d(a), b);
    Form second = wedge(a, exterior_d(b));
    rhs = p % 2 == 0 ? rhs + second : rhs - second;
    rec.equal("d(a^b) = da^b + (-1)^|a| a^db", exterior_d(wedge(a, b)), rhs, printed({&a, &b}));
  });
}

SuiteReport suite_dsa(const VerifyOptions& opt, const ContactModel& model) {
  return run_trials("dsa-lemma", opt, [&](SplitMix64& rng, Recorder& rec) {
    const Form theta = Form::theta(model);
    const Form dtheta = Form::dtheta(model);
    for (int k = 1; k <= model.dim(); ++k) {
      Form w = random_vertical_form(rng, model, k, opt.max_poly_degree);
      rec.equal("theta^dw = w^dtheta", wedge(theta, exterior_d(w)), wedge(w, dtheta), printed({&w}));
    }
  });
}

SuiteReport suite_lefschetz(const VerifyOptions& opt, const ContactModel& model) {
  const int n = model.n();
  SuiteReport report = run_trials("lefschetz-iso", opt, [&](SplitMix64& rng, Recorder& rec) {
    for (int k = 1; k <= n; ++k) {
      Form w = random_vertical_form(rng, model, n - k + 1, opt.max_poly_degree);
      if (w.is_zero()) continue;
      Form image = lefschetz(w, k);
      rec.truth("L^" + std::to_string(k) + " injective", !image.is_zero(), printed({&w}), "0");
    }
  });
  for (int k = 1; k <= n; ++k) {
    Matrix m = lefschetz_power_matrix(model, k);
    ++report.checks;
    ++report.nontrivial;
    bool ok = m.rows() == m.cols() && m.rows() > 0 && sgn(m.determinant()) != 0;
    report.notes.push_back("L^" + std::to_string(k) + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           ", det " + to_string(m.determinant()));
    if (!ok) report.failures.push_back({"Lefschetz matrix k=" + std::to_string(k) + " invertible", -1, {}, to_string(m)});
  }
  report.passed = report.failures.empty();
  return report;
}

SuiteReport suite_gamma_props(const VerifyOptions& opt, const ContactModel& model) {
  return run_trials("gamma-props", opt, [&](SplitMix64& rng, Recorder& rec) {
    const int D = opt.max_poly_degree;
    for (int k = 0; k <= model.dim(); ++k) {
      Form w = random_form(rng, model, k, D);
      Form g = gamma(w);
      rec.truth("Gamma vertical", is_vertical(g), printed({&w}), to_string(g));
      rec.equal("Gamma d Gamma = Gamma", gamma(exterior_d(g)), g, printed({&w}));
      rec.zero("Gamma^2 = 0", gamma(g), printed({&w}), !g.is_zero());

      Form v = random_vertical_form(rng, model, k, D);
      rec.zero("Gamma(vertical) = 0", gamma(v), printed({&v}), !v.is_zero());
      if (k >= 1 && k <= model.n()) {
        rec.equal("Gamma d = 1 on vertical forms", gamma(exterior_d(v)), v, printed({&v}));
      }

      Form t = random_form(rng, model, random_degree(rng, model), D);
      Form gt = gamma(t);
      std::vector<std::string> pair = printed({&w, &t});
      rec.zero("Gamma w ^ Gamma t = 0", wedge(g, gt), pair, !g.is_zero() && !gt.is_zero());
      rec.zero("Gamma(Gamma w ^ t) = 0", gamma(wedge(g, t)), pair, !g.is_zero());
      rec.zero("Gamma(w ^ Gamma t) = 0", gamma(wedge(w, gt)), pair, !gt.is_zero());
    }
  });
}

SuiteReport suite_gamma_invariance(const VerifyOptions& opt, const ContactModel& model) {
  const Rational lambdas[] = {Rational(2), Rational(3, 7)};
  SuiteReport report = run_trials("gamma-invariance", opt, [&](SplitMix64& rng, Recorder& rec) {
    for (int k = 0; k <= model.dim(); ++k) {
      Form w = random_form(rng, model, k, opt.max_poly_degree);
      for (const auto& lambda : lambdas) {
        rec.equal("Gamma invariant under theta -> " + to_string(lambda) + " theta", gamma_rescaled(w, lambda), gamma(w),
                  printed({&w}));
      }
    }
  });
  report.notes.push_back("constant rescalings only: lambda in {2, 3/7}");
  return report;
}

SuiteReport suite_retract(const VerifyOptions& opt, const ContactModel& model) {
  return run_trials("retract", opt, [&](SplitMix64& rng, Recorder& rec) {
    for (int k = 0; k <= model.dim(); ++k) {
      Form w = random_form(rng, model, k, opt.max_poly_degree);
      Form p = pi(w).form();
      auto in = printed({&w});
      rec.equal("pi^2 = pi", pi(p).form(), p, in);
      rec.equal("d pi = pi d", exterior_d(p), pi(exterior_d(w)).form(), in);
      rec.equal("pi i = 1", pi(p).form(), p, in);
      rec.zero("Gamma i = 0", gamma(p), in, !p.is_zero());
      rec.equal("i pi = 1 - d Gamma - Gamma d", p, w - exterior_d(gamma(w)) - gamma(exterior_d(w)), in);
      rec.truth("pi(w) in R", in_rumin(p), in);
      rec.truth("m1 preserves R", in_rumin(m1(RuminElement::certify(p)).form()), in);
    }
  });
}

SuiteReport suite_membership(const VerifyOptions& opt, const ContactModel& model) {
  return run_trials("rumin-membership", opt, [&](SplitMix64& rng, Recorder& rec) {
    const int D = opt.max_poly_degree;
    for (int k = 0; k <= model.dim(); ++k) {
      Form w = random_form(rng, model, k, D);
      Form p = pi(w).form();
      Form perturbed = p + random_vertical_form(rng, model, k, D);
      for (const Form* x : {&w, &p, &perturbed}) {
        bool by_gamma = gamma(*x).is_zero() && gamma(exterior_d(*x)).is_zero();
        bool by_lefschetz = in_rumin(*x);
        rec.truth("in R via L-powers <=> Gamma w = Gamma dw = 0", by_gamma == by_lefschetz, printed({x}),
                  std::string("L-powers ") + (by_lefschetz ? "true" : "false") + ", Gamma " + (by_gamma ? "true" : "false"));
        bool primitive_pair = is_primitive(*x) && is_primitive(exterior_d(*x));
        rec.truth("in R <=> w and dw primitive", primitive_pair == by_lefschetz, printed({x}));
      }
      rec.truth("pi(w) in R", in_rumin(p), printed({&w}));
    }
  });
}

struct Families {
  std::shared_ptr<const GradedOpSet<Form>> m;
  std::shared_ptr<const GradedOpSet<Form>> f;
  GradedOpSet<Form> de_rham = de_rham_family(5);
};

Families families(const VerifyOptions& opt) {
  Families out;
  out.m = opt.m_family ? opt.m_family : std::make_shared<const GradedOpSet<Form>>(rumin_m_family(5));
  out.f = opt.f_family ? opt.f_family : std::make_shared<const GradedOpSet<Form>>(rumin_f_family(5));
  return out;
}

std::vector<int> relation_list(const VerifyOptions& opt, int max) {
  if (!opt.relations.empty()) return opt.relations;
  std::vector<int> out;
  for (int k = 1; k <= max; ++k) out.push_back(k);
  return out;
}

SuiteReport suite_stasheff(const VerifyOptions& opt, const ContactModel& model) {
  Families fam = families(opt);
  auto relations = relation_list(opt, 5);
  SuiteReport report = run_trials("stasheff", opt, [&](SplitMix64& rng, Recorder& rec) {
    for (int N : relations) {
      auto tuple = active_tuple(rng, model, N, 3 - N, opt.max_poly_degree, *fam.m);
      std::span<const Form> xs(tuple);
      rec.zero("Stasheff n=" + std::to_string(N), check_stasheff(*fam.m, N, xs), printed(xs), active(*fam.m, xs));
    }
  });
  report.notes.push_back("relations " + join(relations));
  return report;
}

SuiteReport suite_shuffle(const VerifyOptions& opt, const ContactModel& model) {
  Families fam = families(opt);
  return run_trials("shuffle-vanishing", opt, [&](SplitMix64& rng, Recorder& rec) {
    for (int total = 2; total <= 4; ++total) {
      for (int p = 1; p < total; ++p) {
        int q = total - p;
        std::string pq = std::to_string(p) + "," + std::to_string(q);
        auto tuple = active_tuple(rng, model, total, 2 - total, opt.max_poly_degree, *fam.m);
        std::span<const Form> xs(tuple);
        rec.zero("m_" + std::to_string(total) + " nu_" + pq + " = 0", check_shuffle_vanishing(*fam.m, p, q, xs),
                 printed(xs), active(*fam.m, xs));
        auto ftuple = active_tuple(rng, model, total, 1 - total, opt.max_poly_degree, *fam.m);
        std::span<const Form> ys(ftuple);
        rec.zero("f_" + std::to_string(total) + " nu_" + pq + " = 0", check_shuffle_vanishing(*fam.f, p, q, ys),
                 printed(ys), active(*fam.m, ys));
      }
    }
  });
}

SuiteReport suite_morphism(const VerifyOptions& opt, const ContactModel& model) {
  Families fam = families(opt);
  auto relations = relation_list(opt, 4);
  SuiteReport report = run_trials("morphism", opt, [&](SplitMix64& rng, Recorder& rec) {
    for (int N : relations) {
      auto tuple = active_tuple(rng, model, N, 2 - N, opt.max_poly_degree, *fam.m);
      std::span<const Form> xs(tuple);
      rec.zero("A-infinity morphism n=" + std::to_string(N), check_morphism(*fam.f, *fam.m, fam.de_rham, N, xs),
               printed(xs), active(*fam.m, xs));
    }
  });
  report.notes.push_back("relations " + join(relations));
  return report;
}

/// The transferred structure on the Rumin retract, after verifying the retract
/// on seeded samples.
struct Transferred {
  RetractData<Form> retract = rumin_retract();
  std::vector<RetractFailure> failures;
  std::vector<Form> samples;
  std::optional<TransferResult<Form>> result;
};

Transferred transferred(const VerifyOptions& opt, const ContactModel& model) {
  Transferred out;
  SplitMix64 rng = trial_stream(opt.seed, suite_salt("retract-samples"), 0);
  for (int k = 0; k <= model.dim(); ++k) {
    for (int t = 0; t < 4; ++t) out.samples.push_back(random_form(rng, model, k, opt.max_poly_degree));
  }
  out.failures = verify_retract(out.retract, std::span<const Form>(out.samples));
  if (out.failures.empty()) out.result.emplace(markl_transfer(out.retract, 5));
  return out;
}

SuiteReport retract_failure_report(const std::string& name, const Transferred& tr) {
  SuiteReport report;
  report.suite = name;
  report.passed = false;
  for (const auto& f : tr.failures) {
    report.failures.push_back({"retract: " + f.identity, -1, {to_string(tr.samples[f.sample])}, "identity fails"});
  }
  return report;
}

SuiteReport suite_transfer_match(const VerifyOptions& opt, const ContactModel& model) {
  Transferred tr = transferred(opt, model);
  if (!tr.result) return retract_failure_report("transfer-match", tr);
  Families fam = families(opt);
  return run_trials("transfer-match", opt, [&](SplitMix64& rng, Recorder& rec) {
    for (int N : {2, 3}) {
      auto tuple = sample_tuple(rng, model, N, 2 - N, opt.max_poly_degree,
                                [&](std::span<const Form> xs) { return !(*fam.m)(xs).is_zero(); });
      std::span<const Form> xs(tuple);
      rec.equal("transferred m" + std::to_string(N) + " = closed form", tr.result->m(xs), (*fam.m)(xs), printed(xs));
    }
    auto tuple = sample_tuple(rng, model, 2, -1, opt.max_poly_degree,
                              [&](std::span<const Form> xs) { return !(*fam.f)(xs).is_zero(); });
    std::span<const Form> xs(tuple);
    rec.equal("transferred f2 = closed form", tr.result->f(xs), (*fam.f)(xs), printed(xs));
  });
}

SuiteReport suite_higher_vanish(const VerifyOptions& opt, const ContactModel& model) {
  Transferred tr = transferred(opt, model);
  if (!tr.result) return retract_failure_report("higher-vanish", tr);
  const auto closed = rumin_m_family(3);
  return run_trials("higher-vanish", opt, [&](SplitMix64& rng, Recorder& rec) {
    for (int N : {4, 5}) {
      auto tuple = active_tuple(rng, model, N, 2 - N, opt.max_poly_degree, closed);
      std::span<const Form> xs(tuple);
      rec.zero("transferred m" + std::to_string(N) + " = 0", tr.result->m(xs), printed(xs), active(closed, xs));
    }
    for (int N : {3, 4}) {
      auto tuple = active_tuple(rng, model, N, 1 - N, opt.max_poly_degree, closed);
      std::span<const Form> xs(tuple);
      rec.zero("transferred f" + std::to_string(N) + " = 0", tr.result->f(xs), printed(xs), active(closed, xs));
    }
  });
}

/// Calls visit(tuple) on every tuple of basis elements of the given length.
template <class Visit>
void for_each_tuple(const std::vector<FiniteVector>& basis, int length, Visit visit) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(length), 0);
  std::vector<FiniteVector> tuple;
  while (true) {
    tuple.clear();
    for (auto i : idx) tuple.push_back(basis[i]);
    visit(std::span<const FiniteVector>(tuple));
    std::size_t j = 0;
    while (j < idx.size() && ++idx[j] == basis.size()) idx[j++] = 0;
    if (j == idx.size()) return;
  }
}

std::vector<std::string> printed(std::span<const FiniteVector> xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(to_string(to_form(x)));
  return out;
}

SuiteReport suite_ce_cohomology(const VerifyOptions&) {
  SuiteReport report;
  report.suite = "ce-cohomology";
  auto fail = [&](const std::string& check, std::vector<std::string> inputs, const std::string& residual) {
    report.failures.push_back({check, -1, std::move(inputs), residual});
  };
  auto model = heisenberg_rumin_model();
  if (!model.retract.verified) fail("finite retract verified", {}, "false");
  auto tr = markl_transfer(model.retract, 5);

  Cohomology ce = cohomology(model.algebra->cochain_data());
  Cohomology sub = cohomology(subcomplex_cochain_data(model, tr.m));
  const std::vector<int> expected{1, 2, 2, 1};
  report.notes.push_back("Betti numbers, CE algebra: " + join(ce.betti_numbers()));
  report.notes.push_back("Betti numbers, Rumin subcomplex: " + join(sub.betti_numbers()));
  report.checks += 2;
  if (ce.betti_numbers() != expected) fail("CE Betti numbers 1 2 2 1", {}, join(ce.betti_numbers()));
  if (sub.betti_numbers() != expected) fail("Rumin Betti numbers 1 2 2 1", {}, join(sub.betti_numbers()));

  auto iso = check_ring_isomorphism(
      [&](int k, const RationalVector& x) { return subcomplex_element(model, k, x).coords(); }, sub, ce);
  ++report.checks;
  report.notes.push_back(std::string("ring isomorphism [f1]: ") + (iso.isomorphism ? "true" : "false"));
  if (!iso.isomorphism) {
    for (const auto& w : iso.witnesses) fail("[f1] ring isomorphism", {}, w);
  }

  auto e = [&](const char* label) { return FiniteVector::basis(model.algebra, label); };
  FiniteVector m3aba = tr.m({e("a"), e("b"), e("a")});
  FiniteVector expected_m3 = e("a^c").scaled(-2);
  report.checks += 2;
  report.notes.push_back("m3(a, b, a) = " + to_string(m3aba));
  if (!(m3aba == expected_m3)) fail("m3(a, b, a) = 2 c^a", {"dx1", "dy1", "dx1"}, to_string(to_form(m3aba - expected_m3)));
  RationalVector cls = sub.classify(2, subcomplex_coordinates(model, m3aba));
  if (is_zero_vector(cls)) fail("m3(a, b, a) nonzero in cohomology", {"dx1", "dy1", "dx1"}, "class 0");

  auto basis = subcomplex_basis_elements(model);
  long stasheff = 0, shuffle = 0;
  for (int N = 1; N <= 5; ++N) {
    for_each_tuple(basis, N, [&](std::span<const FiniteVector> xs) {
      ++stasheff;
      FiniteVector r = check_stasheff(tr.m, N, xs);
      if (!r.is_zero()) fail("exhaustive Stasheff n=" + std::to_string(N), printed(xs), to_string(to_form(r)));
      for (int p = 1; p < N && N <= 4; ++p) {
        shuffle += 2;
        FiniteVector rm = check_shuffle_vanishing(tr.m, p, N - p, xs);
        if (!rm.is_zero()) fail("exhaustive m nu_" + std::to_string(p) + "," + std::to_string(N - p), printed(xs), to_string(to_form(rm)));
        FiniteVector rf = check_shuffle_vanishing(tr.f, p, N - p, xs);
        if (!rf.is_zero()) fail("exhaustive f nu_" + std::to_string(p) + "," + std::to_string(N - p), printed(xs), to_string(to_form(rf)));
      }
    });
  }
  report.checks += stasheff + shuffle;
  report.nontrivial = report.checks;
  report.notes.push_back("exhaustive Stasheff tuples: " + std::to_string(stasheff));
  report.notes.push_back("exhaustive shuffle checks: " + std::to_string(shuffle));
  report.passed = report.failures.empty();
  return report;
}

using SuiteFn = std::function<SuiteReport(const VerifyOptions&, const ContactModel&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"dsq", suite_dsq},
      {"leibniz", suite_leibniz},
      {"dsa-lemma", suite_dsa},
      {"lefschetz-iso", suite_lefschetz},
      {"gamma-props", suite_gamma_props},
      {"gamma-invariance", suite_gamma_invariance},
      {"retract", suite_retract},
      {"rumin-membership", suite_membership},
      {"stasheff", suite_stasheff},
      {"shuffle-vanishing", suite_shuffle},
      {"morphism", suite_morphism},
      {"transfer-match", suite_transfer_match},
      {"higher-vanish", suite_higher_vanish},
      {"ce-cohomology", [](const VerifyOptions& o, const ContactModel&) { return suite_ce_cohomology(o); }},
  };
  return suites;
}

nlohmann::json failure_json(const VerifyFailure& f) {
  return {{"check", f.check}, {"trial", f.trial}, {"inputs", f.inputs}, {"residual", f.residual}};
}

nlohmann::json suite_json(const SuiteReport& s, bool timing) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : s.failures) failures.push_back(failure_json(f));
  nlohmann::json out{{"suite", s.suite},           {"passed", s.passed}, {"checks", s.checks},
                     {"nontrivialChecks", s.nontrivial}, {"failures", failures}, {"notes", s.notes}};
  if (timing) out["wallTimeMs"] = s.wall_ms;
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

bool is_suite_name(const std::string& name) {
  const auto& names = suite_names();
  return name == "all" || std::find(names.begin(), names.end(), name) != names.end();
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (!is_suite_name(options.suite)) throw DomainError("unknown suite '" + options.suite + "'");
  if (options.trials < 0) throw DomainError("trial count must be non-negative");
  if (options.max_poly_degree < 0) throw DomainError("polynomial degree bound must be non-negative");
  ContactModel model(options.n);
  VerifyReport report;
  report.options = options;
  auto start = Clock::now();
  for (const auto& [name, fn] : registry()) {
    if (options.suite != "all" && options.suite != name) continue;
    auto suite_start = Clock::now();
    SuiteReport s = fn(options, model);
    s.wall_ms = elapsed_ms(suite_start);
    report.passed = report.passed && s.passed;
    report.suites.push_back(std::move(s));
  }
  report.wall_ms = elapsed_ms(start);
  return report;
}

nlohmann::json VerifyReport::to_json(bool include_timing) const {
  nlohmann::json failures = nlohmann::json::array();
  long checks = 0;
  std::vector<std::string> notes;
  for (const auto& s : suites) {
    checks += s.checks;
    for (const auto& f : s.failures) {
      auto j = failure_json(f);
      if (suites.size() > 1) j["suite"] = s.suite;
      failures.push_back(j);
    }
    for (const auto& n : s.notes) notes.push_back(suites.size() > 1 ? s.suite + ": " + n : n);
  }
  nlohmann::json out{{"suite", options.suite},
                     {"n", options.n},
                     {"trials", options.trials},
                     {"seed", options.seed},
                     {"maxPolyDegree", options.max_poly_degree},
                     {"passed", passed},
                     {"failures", failures},
                     {"version", kVersion},
                     {"checks", checks},
                     {"notes", notes}};
  if (include_timing) out["wallTimeMs"] = wall_ms;
  nlohmann::json per_suite = nlohmann::json::array();
  for (const auto& s : suites) per_suite.push_back(suite_json(s, include_timing));
  out["suites"] = per_suite;
  return out;
}

std::string VerifyReport::summary() const {
  std::ostringstream out;
  for (const auto& s : suites) {
    out << (s.passed ? "PASS " : "FAIL ") << s.suite << "  n=" << options.n << " checks=" << s.checks
        << " nontrivial=" << s.nontrivial << " failures=" << s.failures.size() << "\n";
    for (const auto& note : s.notes) out << "    " << note << "\n";
    for (const auto& f : s.failures) {
      out << "    [" << f.check << "]";
      if (f.trial >= 0) out << " trial " << f.trial;
      out << "\n";
      for (std::size_t i = 0; i < f.inputs.size(); ++i) out << "      input " << i + 1 << ": " << f.inputs[i] << "\n";
      out << "      residual: " << f.residual << "\n";
    }
  }
  out << (passed ? "PASS" : "FAIL") << " (" << suites.size() << " suite" << (suites.size() == 1 ? "" : "s") << ")\n";
  return out.str();
}

}  // namespace rumin
