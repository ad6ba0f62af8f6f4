#include "rumin/forms.hpp"

#include <bit>

#include "rumin/errors.hpp"

namespace rumin {

ContactModel::ContactModel(int n) : n_(n) {
  if (n < 1 || n > kMaxContactN) {
    throw DomainError("contact model parameter n must lie in [1, " + std::to_string(kMaxContactN) + "], got " +
                      std::to_string(n));
  }
}

std::string ContactModel::generator_name(int index) const {
  if (index < 0 || index >= dim()) throw DimensionError("coframe index out of range");
  if (index == 0) return "theta";
  if (index <= n_) return "dx" + std::to_string(index);
  return "dy" + std::to_string(index - n_);
}

int monomial_degree(Monomial m) { return std::popcount(m); }

bool contains(Monomial m, int index) { return (m >> index) & 1U; }

bool MonomialLess::operator()(Monomial a, Monomial b) const {
  if (a == b) return false;
  int da = std::popcount(a);
  int db = std::popcount(b);
  if (da != db) return da < db;
  // Same cardinality: the list holding the lowest differing index sorts first.
  Monomial lowest = (a ^ b) & (~(a ^ b) + 1);
  return (a & lowest) != 0;
}

int wedge_sign(Monomial a, Monomial b) {
  if (a & b) return 0;
  int swaps = 0;
  for (Monomial rest = b; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);
    Monomial above = j >= 31 ? 0 : ~((Monomial{2} << j) - 1);
    swaps += std::popcount(a & above);
  }
  return swaps % 2 ? -1 : 1;
}

Form::Form(const ContactModel& model, int degree) : model_(model), degree_(degree) {}

Form Form::scalar(const ContactModel& model, const Poly& f) { return monomial(model, 0, f); }

Form Form::scalar(const ContactModel& model, const Rational& c) {
  return scalar(model, Poly::constant(model.nvars(), c));
}

Form Form::monomial(const ContactModel& model, Monomial m, const Poly& coeff) {
  if (m >> model.dim()) throw DimensionError("monomial uses a generator beyond the model");
  if (coeff.nvars() != model.nvars()) throw DimensionError("coefficient over the wrong coordinate count");
  Form f(model, monomial_degree(m));
  f.add_term(m, coeff);
  return f;
}

Form Form::generator(const ContactModel& model, int index) {
  if (index < 0 || index >= model.dim()) throw DimensionError("coframe index out of range");
  return monomial(model, Monomial{1} << index, Poly::constant(model.nvars(), 1));
}

Form Form::theta(const ContactModel& model) { return generator(model, 0); }

Form Form::dtheta(const ContactModel& model) {
  Form out(model, 2);
  for (int i = 1; i <= model.n(); ++i) {
    out.add_term((Monomial{1} << i) | (Monomial{1} << (model.n() + i)), Poly::constant(model.nvars(), 1));
  }
  return out;
}

Form Form::dz(const ContactModel& model) {
  Form out = theta(model);
  for (int i = 1; i <= model.n(); ++i) {
    out.add_term(Monomial{1} << i, Poly::variable(model.nvars(), model.y_index(i)));
  }
  return out;
}

Form Form::coordinate(const ContactModel& model, int coord) {
  return scalar(model, Poly::variable(model.nvars(), coord));
}

Poly Form::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Poly(model_.nvars()) : it->second;
}

void Form::add_term(Monomial m, const Poly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Form::check_compatible(const Form& other, const char* what) const {
  if (!(model_ == other.model_)) throw DimensionError(std::string(what) + " of forms over different models");
}

Form Form::operator-() const {
  Form out = *this;
  for (auto& [m, p] : out.terms_) p = -p;
  return out;
}

Form Form::operator+(const Form& other) const {
  check_compatible(other, "sum");
  if (degree_ != other.degree_) {
    if (other.is_zero()) return *this;
    if (is_zero()) return other;
    throw DimensionError("sum of forms of degrees " + std::to_string(degree_) + " and " +
                         std::to_string(other.degree_));
  }
  Form out = *this;
  for (const auto& [m, p] : other.terms_) out.add_term(m, p);
  return out;
}

Form Form::operator-(const Form& other) const { return *this + (-other); }

Form Form::scaled(const Rational& c) const {
  Form out(model_, degree_);
  if (sgn(c) == 0) return out;
  for (const auto& [m, p] : terms_) out.terms_.emplace(m, p.scaled(c));
  return out;
}

Form Form::times(const Poly& f) const {
  Form out(model_, degree_);
  for (const auto& [m, p] : terms_) out.add_term(m, p * f);
  return out;
}

bool operator==(const Form& a, const Form& b) {
  if (!(a.model_ == b.model_)) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

Form wedge(const Form& a, const Form& b) {
  if (!(a.model() == b.model())) throw DimensionError("wedge of forms over different models");
  int degree = a.degree() + b.degree();
  if (degree > a.model().dim()) return Form(a.model(), degree);
  Form::TermMap acc;
  for (const auto& [ma, pa] : a.terms()) {
    for (const auto& [mb, pb] : b.terms()) {
      int sign = wedge_sign(ma, mb);
      if (sign == 0) continue;
      Poly prod = pa * pb;
      if (sign < 0) prod = -prod;
      auto [it, inserted] = acc.try_emplace(ma | mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  Form out(a.model(), degree);
  for (auto& [m, p] : acc) {
    if (!p.is_zero()) out += Form::monomial(a.model(), m, p);
  }
  return out;
}

Form exterior_d(const Form& form) {
  const ContactModel& model = form.model();
  const int n = model.n();
  if (form.degree() + 1 > model.dim()) return Form(model, form.degree() + 1);
  Form out(model, form.degree() + 1);
  const Form dtheta = Form::dtheta(model);

  for (const auto& [m, f] : form.terms()) {
    Poly fz = f.derivative(model.z_index());
    auto add_generator = [&](int j, const Poly& coeff) {
      if (coeff.is_zero() || contains(m, j)) return;
      Monomial gen = Monomial{1} << j;
      out += Form::monomial(model, gen | m, wedge_sign(gen, m) > 0 ? coeff : -coeff);
    };
    add_generator(0, fz);
    for (int i = 1; i <= n; ++i) {
      Poly xi = f.derivative(model.x_index(i)) + Poly::variable(model.nvars(), model.y_index(i)) * fz;
      add_generator(i, xi);
      add_generator(n + i, f.derivative(model.y_index(i)));
    }
    // Only e0 has a nonzero differential and it sits first in a sorted monomial.
    if (contains(m, 0)) {
      Form rest = Form::monomial(model, m & ~Monomial{1}, f);
      out += wedge(dtheta, rest);
    }
  }
  return out;
}

bool is_vertical(const Form& form) {
  for (const auto& [m, p] : form.terms()) {
    if (!contains(m, 0)) return false;
  }
  return true;
}

Form wedge_dtheta_power(const Form& form, int power) {
  if (power < 0) throw DomainError("negative Lefschetz power");
  Form out = form;
  const Form dtheta = Form::dtheta(form.model());
  for (int i = 0; i < power; ++i) {
    if (out.degree() + 2 > form.model().dim()) return Form(form.model(), form.degree() + 2 * power);
    out = wedge(out, dtheta);
  }
  return out;
}

Form lefschetz(const Form& form, int power) {
  if (!is_vertical(form)) throw DomainError("Lefschetz operator applied to a non-vertical form");
  return wedge_dtheta_power(form, power);
}

std::vector<Monomial> coframe_basis(const ContactModel& model, int degree) {
  std::vector<Monomial> out;
  if (degree < 0 || degree > model.dim()) return out;
  for (Monomial m = 0; m < (Monomial{1} << model.dim()); ++m) {
    if (monomial_degree(m) == degree) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), MonomialLess{});
  return out;
}

std::vector<Monomial> vertical_basis(const ContactModel& model, int degree) {
  std::vector<Monomial> out;
  for (Monomial m : coframe_basis(model, degree)) {
    if (contains(m, 0)) out.push_back(m);
  }
  return out;
}

Matrix lefschetz_power_matrix(const ContactModel& model, int k) {
  if (k < 1 || k > model.n()) {
    throw DomainError("Lefschetz power " + std::to_string(k) + " outside [1, " + std::to_string(model.n()) + "]");
  }
  auto source = vertical_basis(model, model.n() - k + 1);
  auto target = vertical_basis(model, model.n() + k + 1);
  Matrix mat(static_cast<int>(target.size()), static_cast<int>(source.size()));
  for (std::size_t c = 0; c < source.size(); ++c) {
    Form image = lefschetz(Form::monomial(model, source[c], Poly::constant(model.nvars(), 1)), k);
    for (std::size_t r = 0; r < target.size(); ++r) {
      Poly coeff = image.coefficient(target[r]);
      mat.at(static_cast<int>(r), static_cast<int>(c)) = coeff.constant_term();
    }
  }
  return mat;
}

Form contact_volume(const ContactModel& model) { return wedge_dtheta_power(Form::theta(model), model.n()); }

std::string monomial_name(const ContactModel& model, Monomial m) {
  std::string out;
  for (int j = 0; j < model.dim(); ++j) {
    if (!contains(m, j)) continue;
    if (!out.empty()) out += "^";
    out += model.generator_name(j);
  }
  return out;
}

std::string to_string(const Form& form) {
  if (form.is_zero()) return "0";
  if (form.degree() == 0) return to_string(form.coefficient(0));
  std::string out;
  bool first = true;
  for (const auto& [m, p] : form.terms()) {
    std::string name = monomial_name(form.model(), m);
    if (p.is_constant()) {
      Rational c = p.constant_term();
      bool negative = sgn(c) < 0;
      Rational mag = abs(c);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (mag != 1) out += to_string(mag) + " ";
      out += name;
    } else {
      if (!first) out += " + ";
      out += "(" + to_string(p) + ") " + name;
    }
    first = false;
  }
  return out;
}

}  // namespace rumin
