#include <doctest.h>

#include "oracles.hpp"
#include "rumin/ce_model.hpp"
#include "rumin/cohomology.hpp"
#include "rumin/errors.hpp"
#include "rumin/finite_algebra.hpp"
#include "rumin/rumin.hpp"

using namespace rumin;

namespace {

const char* kExterior2 = R"(# exterior algebra on two closed generators
basis 1 0
basis u 1
basis v 1
basis uv 2
mul 1 1 1 1
mul 1 u u 1
mul 1 v v 1
mul 1 uv uv 1
mul u 1 u 1
mul v 1 v 1
mul uv 1 uv 1
mul u v uv 1
mul v u uv -1
)";

Matrix hand_matrix(int rows, int cols, std::initializer_list<std::tuple<int, int, int>> entries) {
  Matrix m(rows, cols);
  for (auto [r, c, v] : entries) m.at(r, c) = v;
  return m;
}

}  // namespace

TEST_CASE("algebra files round-trip") {
  auto alg = FiniteGradedAlgebra::parse(kExterior2);
  CHECK(alg.dim(1) == 2);
  CHECK(alg.locate("uv") == std::make_pair(2, 0));
  auto again = FiniteGradedAlgebra::parse(alg.serialize());
  CHECK(again.serialize() == alg.serialize());
  auto ce = heisenberg_ce_algebra();
  CHECK(FiniteGradedAlgebra::parse(ce->serialize()).serialize() == ce->serialize());
}

TEST_CASE("algebra validation") {
  std::string text = kExterior2;
  CHECK_THROWS_AS(FiniteGradedAlgebra::parse(text + "mul u u uv 1\n"), DomainError);  // not graded commutative
  CHECK_THROWS_AS(FiniteGradedAlgebra::parse(text + "d u w 1\n"), DomainError);        // unknown label
  CHECK_THROWS_AS(FiniteGradedAlgebra::parse(text + "d 1 u 1\n"), DomainError);        // Leibniz fails
  CHECK_NOTHROW(FiniteGradedAlgebra::parse(text + "d u uv 1\n"));
  CHECK_THROWS_AS(FiniteGradedAlgebra::parse(text + "frob u\n"), DomainError);
  CHECK_THROWS_AS(FiniteGradedAlgebra::parse("basis a x\n"), DomainError);
  CHECK_THROWS_AS(FiniteGradedAlgebra::parse("basis a 1\nbasis a 1\n"), DomainError);
  try {
    FiniteGradedAlgebra::parse("basis a 1\nbasis b 2\nd a q 1\n");
    FAIL("expected an error");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("d = 0 gives cohomology equal to the algebra") {
  auto alg = std::make_shared<const FiniteGradedAlgebra>(FiniteGradedAlgebra::parse(kExterior2));
  Cohomology h = cohomology(alg->cochain_data());
  CHECK(h.betti_numbers() == std::vector<int>{1, 2, 1});
  CHECK(check_ring_isomorphism([](int, const RationalVector& x) { return x; }, h, h).isomorphism);
}

TEST_CASE("CE algebra of the Heisenberg algebra") {
  auto model = heisenberg_rumin_model();
  const auto& ce = *model.algebra;
  CHECK(ce.total_dim() == 8);
  // Only dc = a^b: degree 1 basis a, b, c; degree 2 basis a^b, a^c, b^c.
  std::vector<Matrix> hand{Matrix(3, 1), hand_matrix(3, 3, {{0, 2, 1}}), Matrix(1, 3)};
  for (int k = 0; k < 3; ++k) CHECK(ce.differential_matrix(k) == hand[static_cast<std::size_t>(k)]);
  auto expected = oracle::betti({1, 3, 3, 1}, hand);
  CHECK(expected == std::vector<int>{1, 2, 2, 1});
  CHECK(cohomology(ce.cochain_data()).betti_numbers() == expected);

  auto e = [&](const char* l) { return FiniteVector::basis(model.algebra, l); };
  CHECK(multiply(e("b"), e("a")) == e("a^b").scaled(-1));
  CHECK(differential(e("c")) == e("a^b"));
  CHECK(to_string(e("a^c").scaled(-2)) == "-2 a^c");
  CHECK(to_form(e("c")) == Form::theta(ContactModel(1)));
  for (const auto& label : {"1", "a", "b", "c", "a^b", "a^c", "b^c", "a^b^c"}) {
    CHECK(from_form(model.algebra, to_form(e(label))) == e(label));
  }
}

TEST_CASE("Rumin subcomplex of the finite model") {
  auto model = heisenberg_rumin_model();
  CHECK(model.retract.verified);
  auto tr = markl_transfer(model.retract, 5);
  CochainData sub = subcomplex_cochain_data(model, tr.m);
  CHECK(sub.dims == std::vector<int>{1, 2, 2, 1});
  std::vector<Matrix> ds;
  for (int k = 0; k < 3; ++k) ds.push_back(sub.d(k));
  CHECK(oracle::betti(sub.dims, ds) == std::vector<int>{1, 2, 2, 1});
  Cohomology hs = cohomology(sub);
  CHECK(hs.betti_numbers() == std::vector<int>{1, 2, 2, 1});

  Cohomology hce = cohomology(model.algebra->cochain_data());
  auto inclusion = [&](int k, const RationalVector& x) { return subcomplex_element(model, k, x).coords(); };
  auto report = check_ring_isomorphism(inclusion, hs, hce);
  CHECK(report.isomorphism);
  CHECK(report.degree_maps.at(1).rows() == 2);

  auto broken = [&](int k, const RationalVector& x) {
    RationalVector image = inclusion(k, x);
    if (k == 1) std::fill(image.begin(), image.end(), Rational(0));
    return image;
  };
  auto bad = check_ring_isomorphism(broken, hs, hce);
  CHECK(!bad.isomorphism);
  CHECK(!bad.witnesses.empty());

  auto e = [&](const char* l) { return FiniteVector::basis(model.algebra, l); };
  FiniteVector m3aba = tr.m({e("a"), e("b"), e("a")});
  CHECK(m3aba == multiply(e("c"), e("a")).scaled(2));
  CHECK(!is_zero_vector(hs.classify(2, subcomplex_coordinates(model, m3aba))));
  // The finite transfer agrees with the symbolic closed form through to_form.
  auto a = RuminElement::certify(to_form(e("a"))), b = RuminElement::certify(to_form(e("b")));
  CHECK(to_form(m3aba) == m3(a, b, a).form());
}

TEST_CASE("cohomology rejects inconsistent data") {
  CochainData bad;
  bad.dims = {1, 1, 1};
  bad.differentials = {hand_matrix(1, 1, {{0, 0, 1}}), hand_matrix(1, 1, {{0, 0, 1}}), Matrix(0, 1)};
  bad.product = [](int, const RationalVector& x, int, const RationalVector&) { return x; };
  CHECK_THROWS_AS(cohomology(bad), DomainError);
  auto model = heisenberg_rumin_model();
  Cohomology h = cohomology(model.algebra->cochain_data());
  RationalVector c_vec(3);
  c_vec[2] = 1;
  CHECK(!h.is_cocycle(1, c_vec));
  CHECK_THROWS_AS(h.classify(1, c_vec), DomainError);
}
