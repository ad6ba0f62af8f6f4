#include "rumin/ce_model.hpp"

#include <map>

#include "rumin/errors.hpp"
#include "rumin/rumin.hpp"

namespace rumin {

namespace {

// CE generators a, b, c as bits 0, 1, 2; basis labels list them in that order.
const std::vector<std::pair<Monomial, std::string>>& ce_basis() {
  static const std::vector<std::pair<Monomial, std::string>> basis = {
      {0b000, "1"},   {0b001, "a"},   {0b010, "b"},   {0b100, "c"},
      {0b011, "a^b"}, {0b101, "a^c"}, {0b110, "b^c"}, {0b111, "a^b^c"},
  };
  return basis;
}

// a = dx1 = e1, b = dy1 = e2, c = theta = e0
Form ce_monomial_form(const ContactModel& model, Monomial mask) {
  static const int coframe_of[3] = {1, 2, 0};
  Form out = Form::scalar(model, Rational(1));
  for (int g = 0; g < 3; ++g) {
    if (contains(mask, g)) out = wedge(out, Form::generator(model, coframe_of[g]));
  }
  return out;
}

Matrix matrix_of(const AlgebraPtr& algebra, int from, int to, const std::function<Form(const Form&)>& op) {
  Matrix out(algebra->dim(to), algebra->dim(from));
  for (int j = 0; j < algebra->dim(from); ++j) {
    FiniteVector e = FiniteVector::basis(algebra, algebra->label(from, j));
    FiniteVector image = from_form(algebra, op(to_form(e)));
    if (image.is_zero()) continue;
    if (image.degree() != to) throw DomainError("operator changed degree unexpectedly");
    for (int i = 0; i < algebra->dim(to); ++i) out.at(i, j) = image.coords()[static_cast<std::size_t>(i)];
  }
  return out;
}

}  // namespace

FiniteVector subcomplex_element(const FiniteRuminModel& model, int degree, const RationalVector& coords) {
  FiniteVector out(model.algebra, degree);
  if (degree < 0 || degree >= static_cast<int>(model.subcomplex_basis.size())) return out;
  const auto& basis = model.subcomplex_basis[static_cast<std::size_t>(degree)];
  if (coords.size() != basis.size()) throw DimensionError("subcomplex coordinate size mismatch");
  for (std::size_t j = 0; j < coords.size(); ++j) out = out + basis[j].scaled(coords[j]);
  return out;
}

AlgebraPtr heisenberg_ce_algebra() {
  std::vector<FiniteGradedAlgebra::BasisElement> basis;
  for (const auto& [mask, label] : ce_basis()) basis.push_back({label, monomial_degree(mask)});
  std::vector<FiniteGradedAlgebra::DifferentialEntry> d = {{"c", "a^b", Rational(1)}};
  std::vector<FiniteGradedAlgebra::ProductEntry> mul;
  for (const auto& [left, ll] : ce_basis()) {
    for (const auto& [right, rl] : ce_basis()) {
      int sign = wedge_sign(left, right);
      if (sign == 0) continue;
      for (const auto& [res, resl] : ce_basis()) {
        if (res == (left | right)) mul.push_back({ll, rl, resl, Rational(sign)});
      }
    }
  }
  return std::make_shared<const FiniteGradedAlgebra>(std::move(basis), d, mul);
}

Form to_form(const FiniteVector& x) {
  ContactModel model(1);
  Form out(model, x.degree());
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    if (sgn(x.coords()[i]) == 0) continue;
    const std::string& label = x.algebra()->label(x.degree(), static_cast<int>(i));
    for (const auto& [mask, name] : ce_basis()) {
      if (name == label) out += ce_monomial_form(model, mask).scaled(x.coords()[i]);
    }
  }
  return out;
}

FiniteVector from_form(const AlgebraPtr& algebra, const Form& form) {
  if (form.model().n() != 1) throw DimensionError("the finite model lives on H^3");
  FiniteVector out(algebra, form.degree());
  if (form.is_zero()) return out;
  RationalVector coords(static_cast<std::size_t>(algebra->dim(form.degree())), Rational(0));
  std::size_t used = 0;
  for (int i = 0; i < algebra->dim(form.degree()); ++i) {
    const std::string& label = algebra->label(form.degree(), i);
    for (const auto& [mask, name] : ce_basis()) {
      if (name != label) continue;
      Form basis_form = ce_monomial_form(form.model(), mask);
      const auto& [monomial, unit] = *basis_form.terms().begin();
      Poly coeff = form.coefficient(monomial);
      if (coeff.is_zero()) continue;
      if (!coeff.is_constant()) throw DomainError("form has non-constant coefficients: " + to_string(form));
      coords[static_cast<std::size_t>(i)] = coeff.constant_term() / unit.constant_term();
      ++used;
    }
  }
  if (used != form.terms().size()) throw DomainError("form is not in the span of the CE basis");
  return FiniteVector(algebra, form.degree(), std::move(coords));
}

FiniteRuminModel heisenberg_rumin_model() {
  FiniteRuminModel model;
  model.algebra = heisenberg_ce_algebra();
  const AlgebraPtr& alg = model.algebra;

  std::map<int, Matrix> h, p;
  for (int k = alg->min_degree(); k <= alg->max_degree(); ++k) {
    h.emplace(k, matrix_of(alg, k, k - 1, [](const Form& f) { return gamma(f); }));
    p.emplace(k, matrix_of(alg, k, k, [](const Form& f) { return pi(f).form(); }));
  }
  auto apply = [alg](const std::map<int, Matrix>& mats, int shift) {
    return [alg, mats, shift](const FiniteVector& x) {
      auto it = mats.find(x.degree());
      if (it == mats.end()) return FiniteVector(alg, x.degree() + shift);
      return FiniteVector(alg, x.degree() + shift, it->second * x.coords());
    };
  };
  model.retract.d = [](const FiniteVector& x) { return differential(x); };
  model.retract.mu = [](const FiniteVector& x, const FiniteVector& y) { return multiply(x, y); };
  model.retract.h = apply(h, -1);
  model.retract.pi = apply(p, 0);
  model.retract.i = [](const FiniteVector& x) { return x; };

  std::vector<FiniteVector> samples;
  for (int k = alg->min_degree(); k <= alg->max_degree(); ++k) {
    for (int j = 0; j < alg->dim(k); ++j) samples.push_back(FiniteVector::basis(alg, alg->label(k, j)));
  }
  auto failures = verify_retract(model.retract, std::span<const FiniteVector>(samples));
  if (!failures.empty()) throw DomainError("finite Rumin retract fails: " + failures.front().identity);

  auto e = [&](const char* label) { return FiniteVector::basis(alg, label); };
  model.subcomplex_basis = {
      {e("1")},
      {e("a"), e("b")},
      {multiply(e("c"), e("a")), multiply(e("c"), e("b"))},
      {multiply(multiply(e("c"), e("a")), e("b"))},
  };
  model.subcomplex_labels = {{"1"}, {"a", "b"}, {"c^a", "c^b"}, {"c^a^b"}};
  return model;
}

RationalVector subcomplex_coordinates(const FiniteRuminModel& model, const FiniteVector& x) {
  int k = x.degree();
  if (k < 0 || k >= static_cast<int>(model.subcomplex_basis.size())) {
    if (x.is_zero()) return {};
    throw DomainError("element outside the subcomplex degrees");
  }
  const auto& basis = model.subcomplex_basis[static_cast<std::size_t>(k)];
  std::vector<RationalVector> columns;
  for (const auto& b : basis) columns.push_back(b.coords());
  auto solution = Matrix::from_columns(model.algebra->dim(k), columns).solve(x.coords());
  if (!solution) throw DomainError("element " + to_string(x) + " is not in the Rumin subcomplex");
  return *solution;
}

std::vector<FiniteVector> subcomplex_basis_elements(const FiniteRuminModel& model) {
  std::vector<FiniteVector> out;
  for (const auto& degree : model.subcomplex_basis) out.insert(out.end(), degree.begin(), degree.end());
  return out;
}

CochainData subcomplex_cochain_data(const FiniteRuminModel& model, const GradedOpSet<FiniteVector>& m) {
  const auto& basis = model.subcomplex_basis;
  CochainData data;
  data.min_degree = 0;
  data.labels = model.subcomplex_labels;
  for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
    int dim_k = static_cast<int>(basis[static_cast<std::size_t>(k)].size());
    int dim_next = k + 1 < static_cast<int>(basis.size()) ? static_cast<int>(basis[static_cast<std::size_t>(k + 1)].size()) : 0;
    data.dims.push_back(dim_k);
    Matrix d(dim_next, dim_k);
    for (int j = 0; j < dim_k; ++j) {
      FiniteVector image = m({basis[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]});
      if (image.is_zero()) continue;
      RationalVector coords = subcomplex_coordinates(model, image);
      for (int i = 0; i < dim_next; ++i) d.at(i, j) = coords[static_cast<std::size_t>(i)];
    }
    data.differentials.push_back(std::move(d));
  }
  // m is copied so the cochain data stays valid on its own.
  data.product = [model, m](int p, const RationalVector& x, int q, const RationalVector& y) {
    FiniteVector product = m({subcomplex_element(model, p, x), subcomplex_element(model, q, y)});
    int size = p + q < static_cast<int>(model.subcomplex_basis.size())
                   ? static_cast<int>(model.subcomplex_basis[static_cast<std::size_t>(p + q)].size())
                   : 0;
    if (product.is_zero()) return RationalVector(static_cast<std::size_t>(size), Rational(0));
    return subcomplex_coordinates(model, product);
  };
  return data;
}

}  // namespace rumin
