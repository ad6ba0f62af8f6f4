#include <doctest.h>

#include "rumin/errors.hpp"
#include "rumin/poly.hpp"
#include "rumin/random.hpp"

using namespace rumin;

namespace {

constexpr int kVars = 3;  // x1, y1, z
Poly x1() { return Poly::variable(kVars, 0); }
Poly y1() { return Poly::variable(kVars, 1); }
Poly z() { return Poly::variable(kVars, 2); }
Poly c(long num, long den = 1) { return Poly::constant(kVars, make_rational(num, den)); }

}  // namespace

TEST_CASE("rationals are reduced with a positive denominator") {
  CHECK(parse_rational("-6/4") == make_rational(-3, 2));
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(to_string(parse_rational("+7")) == "7");
  CHECK(make_rational(2, -4).get_den() == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("ring identities from the examples") {
  CHECK((x1() + y1()) * (x1() - y1()) == x1() * x1() - y1() * y1());
  CHECK(((x1() + z()) * Poly(kVars)).is_zero());
  CHECK(x1().scaled(make_rational(1, 2)) + x1().scaled(make_rational(1, 2)) == x1());
  CHECK(poly_arith(x1(), y1(), PolyOp::mul) == x1() * y1());
  CHECK(poly_scale(x1(), 0).is_zero());
}

TEST_CASE("partial derivatives") {
  CHECK(poly_deriv(z() * z(), 2) == z().scaled(2));
  CHECK(poly_deriv(y1(), 0).is_zero());
  CHECK(poly_deriv(x1() * y1() * y1(), 1) == (x1() * y1()).scaled(2));
  CHECK_THROWS_AS(poly_deriv(x1(), 3), DimensionError);
  CHECK_THROWS_AS(poly_deriv(x1(), -1), DimensionError);
}

TEST_CASE("mismatched coordinate counts are rejected") {
  Poly p = Poly::variable(3, 0);
  Poly q = Poly::variable(5, 0);
  CHECK_THROWS_AS(p + q, DimensionError);
  CHECK_THROWS_AS(poly_arith(p, q, PolyOp::mul), DimensionError);
  CHECK_THROWS_AS(Poly::variable(3, 3), DimensionError);
}

TEST_CASE("canonical printing") {
  Poly p = (x1() * x1()).scaled(make_rational(3, 2)) - y1() * z() + c(1);
  CHECK(to_string(p) == "3/2*x1**2 - y1*z + 1");
  CHECK(to_string(Poly(kVars)) == "0");
  CHECK(to_string(c(-2, 3)) == "-2/3");
  CHECK(to_string(x1() - x1()) == "0");
  CHECK(coordinate_name(5, 4) == "z");
  CHECK(coordinate_name(5, 3) == "y2");
}

TEST_CASE("exponent overflow is reported") {
  Exponent e;
  CHECK_THROWS(e.set(0, 256));
  e.set(0, 200);
  CHECK_THROWS(e + e);
}

TEST_CASE("randomized ring axioms and the Leibniz rule") {
  for (int t = 0; t < 200; ++t) {
    SplitMix64 rng = trial_stream(11, suite_salt("poly-axioms"), static_cast<std::uint64_t>(t));
    int nvars = t % 2 == 0 ? 3 : 5;
    Poly p = random_poly(rng, nvars, 2);
    Poly q = random_poly(rng, nvars, 2);
    Poly r = random_poly(rng, nvars, 2);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * q == q * p);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).terms().empty());
    CHECK((p + (-p)).is_zero());
    for (int i = 0; i < nvars; ++i) {
      CHECK(poly_deriv(p * q, i) == poly_deriv(p, i) * q + p * poly_deriv(q, i));
    }
  }
}

TEST_CASE("random polynomials are reproducible and degree bounded") {
  SplitMix64 a = trial_stream(5, suite_salt("x"), 3);
  SplitMix64 b = trial_stream(5, suite_salt("x"), 3);
  for (int k = 0; k < 20; ++k) {
    Poly p = random_poly(a, 5, 3);
    CHECK(p == random_poly(b, 5, 3));
    CHECK(p.total_degree() <= 3);
  }
}
