#include "rumin/rumin.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "rumin/errors.hpp"

namespace rumin {

namespace {

Matrix lefschetz_matrix_with(const ContactModel& model, int power, const Form& dtheta) {
  auto source = vertical_basis(model, model.n() - power + 1);
  auto target = vertical_basis(model, model.n() + power + 1);
  Form dtheta_power = Form::scalar(model, Rational(1));
  for (int i = 0; i < power; ++i) dtheta_power = wedge(dtheta_power, dtheta);
  Matrix mat(static_cast<int>(target.size()), static_cast<int>(source.size()));
  for (std::size_t c = 0; c < source.size(); ++c) {
    Form image = wedge(Form::monomial(model, source[c], Poly::constant(model.nvars(), 1)), dtheta_power);
    for (std::size_t r = 0; r < target.size(); ++r) {
      mat.at(static_cast<int>(r), static_cast<int>(c)) = image.coefficient(target[r]).constant_term();
    }
  }
  return mat;
}

// Inverse Lefschetz matrices keyed by (n, power); write-once, shared across threads.
std::shared_ptr<const Matrix> cached_inverse(const ContactModel& model, int power) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const Matrix>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(model.n(), power);
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto inverse = std::make_shared<const Matrix>(lefschetz_power_matrix(model, power).inverse());
    it = cache.emplace(key, std::move(inverse)).first;
  }
  return it->second;
}

// The unique vertical zeta of degree n-power+1 with zeta ^ dtheta^power = target.
Form solve_lefschetz(const Form& target, int power, const Matrix& inverse) {
  const ContactModel& model = target.model();
  auto source = vertical_basis(model, model.n() - power + 1);
  auto image_basis = vertical_basis(model, model.n() + power + 1);
  std::vector<Poly> rhs;
  std::size_t matched = 0;
  for (Monomial m : image_basis) {
    rhs.push_back(target.coefficient(m));
    matched += rhs.back().is_zero() ? 0 : 1;
  }
  if (matched != target.terms().size()) throw DomainError("Lefschetz system with a non-vertical right-hand side");
  Form zeta(model, model.n() - power + 1);
  for (std::size_t c = 0; c < source.size(); ++c) {
    Poly coeff(model.nvars());
    for (std::size_t r = 0; r < image_basis.size(); ++r) {
      const Rational& entry = inverse.at(static_cast<int>(c), static_cast<int>(r));
      if (sgn(entry) != 0 && !rhs[r].is_zero()) coeff += rhs[r].scaled(entry);
    }
    if (!coeff.is_zero()) zeta += Form::monomial(model, source[c], coeff);
  }
  return zeta;
}

Form gamma_impl(const Form& form, const Rational& lambda, bool use_cache) {
  const ContactModel& model = form.model();
  const int n = model.n();
  const int k = form.degree();
  Form zero(model, k - 1);
  if (form.is_zero() || k <= 0 || k >= model.dim()) return zero;

  Form theta = Form::theta(model).scaled(lambda);
  Form dtheta = Form::dtheta(model).scaled(lambda);
  auto dtheta_power = [&](const Form& f, int power) {
    Form out = f;
    for (int i = 0; i < power; ++i) out = wedge(out, dtheta);
    return out;
  };
  auto solve = [&](const Form& target, int power) {
    if (use_cache) return solve_lefschetz(target, power, *cached_inverse(model, power));
    return solve_lefschetz(target, power, lefschetz_matrix_with(model, power, dtheta).inverse());
  };

  if (k <= n) {
    int power = n + 2 - k;
    if (power > n) return zero;  // target A_0^0 is trivial
    return solve(dtheta_power(wedge(theta, form), n + 1 - k), power);
  }
  Form zeta = solve(wedge(theta, form), k - n);
  return dtheta_power(zeta, k - n - 1);
}

void require_certified(const RuminElement& x, const char* op, int position) {
  if (!x.certified()) {
    throw DomainError(std::string(op) + ": argument " + std::to_string(position) +
                      " is not a certified element of the Rumin complex");
  }
}

// mu (Gamma mu (x) 1 - 1 (x) Gamma mu), before projection.
Form m3_unprojected(const Form& a, const Form& b, const Form& c) {
  using Op = Operator<Form>;
  const Op gamma_mu{[](std::span<const Form> xs) { return gamma(wedge(xs[0], xs[1])); }, 2, -1, false};
  const std::vector<Form> tuple{a, b, c};
  auto evaluate = [&](const std::vector<Op>& word) {
    auto applied = apply_tensor_ops<Form>(word, tuple);
    Form product = wedge(applied.factors[0], applied.factors[1]);
    return applied.sign < 0 ? -product : product;
  };
  Form left = evaluate({gamma_mu, Op::identity()});
  Form right = evaluate({Op::identity(), gamma_mu});
  return left - right;
}

}  // namespace

RuminElement RuminElement::certify(const Form& form) {
  if (!in_rumin(form)) throw DomainError("form is not in the Rumin complex: " + to_string(form));
  return RuminElement(form, true);
}

Form gamma(const Form& form) { return gamma_impl(form, Rational(1), true); }

Form gamma_rescaled(const Form& form, const Rational& lambda) {
  if (sgn(lambda) <= 0) throw DomainError("contact form rescaling must be positive");
  return gamma_impl(form, lambda, false);
}

bool gamma_invariance_check(const Form& form, const Rational& lambda) {
  return gamma_rescaled(form, lambda) == gamma(form);
}

bool is_primitive(const Form& form) {
  const int power = form.model().n() + 1 - form.degree();
  Form theta_form = wedge(Form::theta(form.model()), form);
  if (power < 0) return theta_form.is_zero();
  return wedge_dtheta_power(theta_form, power).is_zero();
}

RuminElement pi(const Form& form) {
  Form projected = form - exterior_d(gamma(form)) - gamma(exterior_d(form));
  return RuminElement(std::move(projected), true);
}

bool in_rumin(const Form& form) {
  const ContactModel& model = form.model();
  const int n = model.n();
  const int k = form.degree();
  const Form theta = Form::theta(model);
  Form theta_form = wedge(theta, form);
  Form theta_dform = wedge(theta, exterior_d(form));
  if (k <= n) {
    return wedge_dtheta_power(theta_form, n + 1 - k).is_zero() && wedge_dtheta_power(theta_dform, n - k).is_zero();
  }
  return theta_form.is_zero() && theta_dform.is_zero();
}

RuminElement m1(const RuminElement& a) {
  require_certified(a, "m1", 1);
  return RuminElement::certify(exterior_d(a.form()));
}

RuminElement m2(const RuminElement& a, const RuminElement& b) {
  require_certified(a, "m2", 1);
  require_certified(b, "m2", 2);
  return pi(wedge(a.form(), b.form()));
}

RuminElement m3(const RuminElement& a, const RuminElement& b, const RuminElement& c) {
  require_certified(a, "m3", 1);
  require_certified(b, "m3", 2);
  require_certified(c, "m3", 3);
  return pi(m3_unprojected(a.form(), b.form(), c.form()));
}

RuminElement mk_zero(std::span<const RuminElement> args) {
  if (args.size() < 4) throw DomainError("mk_zero is defined for arity >= 4");
  int degree = 2 - static_cast<int>(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    require_certified(args[i], "mk", static_cast<int>(i) + 1);
    degree += args[i].degree();
  }
  return pi(Form(args[0].form().model(), degree));
}

Form f1(const RuminElement& a) {
  require_certified(a, "f1", 1);
  return a.form();
}

Form f2(const RuminElement& a, const RuminElement& b) {
  require_certified(a, "f2", 1);
  require_certified(b, "f2", 2);
  return -gamma(wedge(a.form(), b.form()));
}

Form fk_zero(std::span<const RuminElement> args) {
  if (args.size() < 3) throw DomainError("fk_zero is defined for arity >= 3");
  int degree = 1 - static_cast<int>(args.size());
  for (std::size_t i = 0; i < args.size(); ++i) {
    require_certified(args[i], "fk", static_cast<int>(i) + 1);
    degree += args[i].degree();
  }
  return Form(args[0].form().model(), degree);
}

RetractData<Form> rumin_retract() {
  RetractData<Form> retract;
  retract.d = [](const Form& x) { return exterior_d(x); };
  retract.mu = [](const Form& x, const Form& y) { return wedge(x, y); };
  retract.h = [](const Form& x) { return gamma(x); };
  retract.pi = [](const Form& x) { return pi(x).form(); };
  retract.i = [](const Form& x) { return x; };
  return retract;
}

GradedOpSet<Form> rumin_m_family(int max_arity) {
  GradedOpSet<Form> m("rumin m");
  m.set(1, 1, [](std::span<const Form> xs) { return exterior_d(xs[0]); });
  m.set(2, 0, [](std::span<const Form> xs) { return pi(wedge(xs[0], xs[1])).form(); });
  m.set(3, -1, [](std::span<const Form> xs) { return pi(m3_unprojected(xs[0], xs[1], xs[2])).form(); });
  for (int k = 4; k <= max_arity; ++k) m.set_vanishing(k, 2 - k);
  return m;
}

GradedOpSet<Form> rumin_f_family(int max_arity) {
  GradedOpSet<Form> f("rumin f");
  f.set(1, 0, [](std::span<const Form> xs) { return xs[0]; });
  f.set(2, -1, [](std::span<const Form> xs) { return -gamma(wedge(xs[0], xs[1])); });
  for (int k = 3; k <= max_arity; ++k) f.set_vanishing(k, 1 - k);
  return f;
}

GradedOpSet<Form> de_rham_family(int max_arity) {
  GradedOpSet<Form> m("de Rham");
  m.set(1, 1, [](std::span<const Form> xs) { return exterior_d(xs[0]); });
  m.set(2, 0, [](std::span<const Form> xs) { return wedge(xs[0], xs[1]); });
  for (int k = 3; k <= max_arity; ++k) m.set_vanishing(k, 2 - k);
  return m;
}

}  // namespace rumin
