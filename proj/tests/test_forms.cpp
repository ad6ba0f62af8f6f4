#include <doctest.h>

#include "oracles.hpp"
#include "rumin/errors.hpp"
#include "rumin/forms.hpp"
#include "rumin/random.hpp"

using namespace rumin;

namespace {

Monomial mask(std::initializer_list<int> indices) {
  Monomial m = 0;
  for (int i : indices) m |= Monomial{1} << i;
  return m;
}

}  // namespace

TEST_CASE("contact model") {
  ContactModel h1(1);
  CHECK(h1.dim() == 3);
  CHECK(h1.generator_name(0) == "theta");
  CHECK(h1.generator_name(1) == "dx1");
  CHECK(h1.generator_name(2) == "dy1");
  CHECK_THROWS_AS(ContactModel(0), DomainError);
  CHECK_THROWS_AS(ContactModel(kMaxContactN + 1), DomainError);
  for (int n = 1; n <= 3; ++n) {
    ContactModel m(n);
    Form vol = contact_volume(m);
    CHECK(!vol.is_zero());
    CHECK(vol.degree() == m.dim());
  }
}

TEST_CASE("wedge examples") {
  ContactModel h1(1);
  Form dx = Form::generator(h1, 1), dy = Form::generator(h1, 2), th = Form::theta(h1);
  CHECK(wedge(dx, dx).is_zero());
  CHECK(wedge(dx, dx).degree() == 2);
  Form tdx = wedge(th, dx);
  CHECK(tdx.terms().size() == 1);
  CHECK(tdx.coefficient(mask({0, 1})) == Poly::constant(3, 1));
  Form a = dx.times(Poly::variable(3, h1.y_index(1)));
  Form b = dy.times(Poly::variable(3, h1.x_index(1)));
  CHECK(wedge(a, b) == wedge(dx, dy).times(Poly::variable(3, 0) * Poly::variable(3, 1)));
  CHECK(wedge(dy, dx) == -wedge(dx, dy));
  CHECK_THROWS_AS(wedge(dx, Form::generator(ContactModel(2), 1)), DimensionError);
}

TEST_CASE("wedge signs agree with bubble sort") {
  for (Monomial a = 0; a < 32; ++a) {
    for (Monomial b = 0; b < 32; ++b) {
      std::vector<int> word;
      for (int i = 0; i < 5; ++i) if (contains(a, i)) word.push_back(i);
      for (int i = 0; i < 5; ++i) if (contains(b, i)) word.push_back(i);
      CHECK(wedge_sign(a, b) == oracle::bubble_sign(word));
    }
  }
}

TEST_CASE("exterior derivative examples") {
  for (int n = 1; n <= 3; ++n) {
    ContactModel m(n);
    Form sum = Form(m, 2);
    for (int i = 1; i <= n; ++i) sum += wedge(Form::generator(m, i), Form::generator(m, n + i));
    CHECK(exterior_d(Form::theta(m)) == sum);
    CHECK(Form::dtheta(m) == sum);
    Form dz = Form::theta(m);
    for (int i = 1; i <= n; ++i) dz += Form::generator(m, i).times(Poly::variable(m.nvars(), m.y_index(i)));
    CHECK(exterior_d(Form::coordinate(m, m.z_index())) == dz);
    CHECK(Form::dz(m) == dz);
  }
}

TEST_CASE("d squared vanishes and d is a graded derivation") {
  for (int n = 1; n <= 2; ++n) {
    ContactModel m(n);
    for (int t = 0; t < 40; ++t) {
      SplitMix64 rng = trial_stream(3, suite_salt("forms-d"), static_cast<std::uint64_t>(t));
      int p = static_cast<int>(rng.uniform(0, m.dim()));
      int q = static_cast<int>(rng.uniform(0, m.dim()));
      Form a = random_form(rng, m, p, 2);
      Form b = random_form(rng, m, q, 2);
      CHECK(exterior_d(exterior_d(a)).is_zero());
      Form rhs = wedge(exterior_d(a), b) + wedge(a, exterior_d(b)).scaled(p % 2 == 0 ? 1 : -1);
      CHECK(exterior_d(wedge(a, b)) == rhs);
      CHECK(wedge(a, b) == wedge(b, a).scaled((p * q) % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("vertical forms") {
  ContactModel h1(1);
  Form dx = Form::generator(h1, 1), dy = Form::generator(h1, 2), th = Form::theta(h1);
  CHECK(is_vertical(wedge(th, dx)));
  CHECK(!is_vertical(wedge(dx, dy)));
  CHECK(is_vertical(Form(h1, 2)));
  for (int t = 0; t < 30; ++t) {
    SplitMix64 rng = trial_stream(4, suite_salt("vertical"), static_cast<std::uint64_t>(t));
    Form v = random_vertical_form(rng, h1, 1 + t % 3, 2);
    CHECK(is_vertical(v));
    CHECK(wedge(th, v).is_zero());
  }
}

TEST_CASE("Lefschetz operator") {
  ContactModel h1(1);
  Form dx = Form::generator(h1, 1), dy = Form::generator(h1, 2), th = Form::theta(h1);
  CHECK(lefschetz(th, 1) == wedge(wedge(th, dx), dy));
  CHECK(lefschetz(wedge(th, dx), 1).is_zero());
  CHECK_THROWS_AS(lefschetz(dx, 1), DomainError);
  for (int n = 1; n <= 3; ++n) {
    ContactModel m(n);
    CHECK(lefschetz(Form::theta(m), n) == contact_volume(m));
  }
}

TEST_CASE("Lefschetz matrices match the bubble-sort expansion") {
  for (int n = 1; n <= 3; ++n) {
    ContactModel m(n);
    for (int k = 1; k <= n; ++k) {
      Matrix lib = lefschetz_power_matrix(m, k);
      Matrix ref = oracle::lefschetz_matrix(n, k);
      CHECK(lib == ref);
      CHECK(lib.rows() == lib.cols());
      CHECK(oracle::bareiss_determinant(ref) != 0);
      CHECK(oracle::bareiss_determinant(ref) == lib.determinant());
    }
    CHECK_THROWS_AS(lefschetz_power_matrix(m, 0), DomainError);
    CHECK_THROWS_AS(lefschetz_power_matrix(m, n + 1), DomainError);
  }
  CHECK(lefschetz_power_matrix(ContactModel(2), 2) == oracle::lefschetz_matrix(2, 2));
  CHECK(lefschetz_power_matrix(ContactModel(2), 2).at(0, 0) == -2);
}

TEST_CASE("bases and printing") {
  ContactModel h2(2);
  CHECK(coframe_basis(h2, 2).size() == 10);
  CHECK(vertical_basis(h2, 2).size() == 4);
  CHECK(coframe_basis(h2, 6).empty());
  auto basis = coframe_basis(h2, 2);
  for (std::size_t i = 0; i + 1 < basis.size(); ++i) CHECK(MonomialLess{}(basis[i], basis[i + 1]));
  ContactModel h1(1);
  CHECK(to_string(Form(h1, 1)) == "0");
  CHECK(to_string(Form::theta(h1).scaled(-1)) == "-theta");
  CHECK(to_string(wedge(Form::theta(h1), Form::generator(h1, 1)).scaled(2)) == "2 theta^dx1");
  CHECK(to_string(Form::dz(h1)) == "theta + (y1) dx1");
  CHECK(to_string(Form::scalar(h1, Poly::variable(3, 2))) == "z");
}
