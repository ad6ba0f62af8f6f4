#include <doctest.h>

#include "oracles.hpp"
#include "rumin/errors.hpp"
#include "rumin/random.hpp"
#include "rumin/rumin.hpp"

#include <thread>

using namespace rumin;

namespace {

struct H1 {
  ContactModel m{1};
  Form dx = Form::generator(m, 1);
  Form dy = Form::generator(m, 2);
  Form th = Form::theta(m);
  Poly f = Poly::variable(3, 0) * Poly::variable(3, 2) + Poly::constant(3, 3);
};

Form random_certified(SplitMix64& rng, const ContactModel& m, int degree) {
  return pi(random_form(rng, m, degree, 2)).form();
}

}  // namespace

TEST_CASE("gamma examples") {
  H1 h;
  CHECK(gamma(wedge(h.dx, h.dy).times(h.f)) == h.th.times(h.f));
  CHECK(gamma(h.dx).is_zero());
  CHECK(gamma(h.dx).degree() == 0);
  CHECK(gamma(wedge(h.th, h.dx).times(h.f)).is_zero());
  CHECK(gamma(Form::scalar(h.m, h.f)).is_zero());
  CHECK(gamma(contact_volume(h.m)).is_zero());
}

TEST_CASE("gamma invariance under constant rescaling") {
  H1 h;
  CHECK(gamma_invariance_check(wedge(h.dx, h.dy), 2));
  CHECK(gamma_invariance_check(wedge(h.th, h.dx), make_rational(5, 3)));
  CHECK_THROWS_AS(gamma_invariance_check(h.dx, 0), DomainError);
  CHECK_THROWS_AS(gamma_rescaled(h.dx, -1), DomainError);
  for (int n = 1; n <= 2; ++n) {
    ContactModel m(n);
    for (int k = 0; k <= m.dim(); ++k) {
      SplitMix64 rng = trial_stream(8, suite_salt("invariance"), static_cast<std::uint64_t>(k));
      Form w = random_form(rng, m, k, 2);
      CHECK(gamma_invariance_check(w, make_rational(3, 7)));
    }
  }
}

TEST_CASE("primitivity and membership examples") {
  H1 h;
  CHECK(is_primitive(h.dx));
  CHECK(!is_primitive(wedge(h.dx, h.dy).times(h.f)));
  CHECK(is_primitive(Form(h.m, 2)));
  CHECK(in_rumin(wedge(h.th, h.dx)));
  CHECK(!in_rumin(wedge(h.dx, h.dy)));
  CHECK(in_rumin(h.dx));
  CHECK(!in_rumin(h.th));
}

TEST_CASE("projection examples") {
  H1 h;
  CHECK(pi(wedge(h.dx, h.dy)).form().is_zero());
  CHECK(pi(wedge(h.th, h.dx)).form() == wedge(h.th, h.dx));
  Form x = pi(h.dx.times(h.f)).form();
  CHECK(pi(x).form() == x);
  CHECK(pi(h.dx).certified());
}

TEST_CASE("structure map examples") {
  H1 h;
  auto a = RuminElement::certify(h.dx);
  auto b = RuminElement::certify(h.dy);
  CHECK(m1(a).form().is_zero());
  CHECK(m2(a, b).form().is_zero());
  CHECK(m3(a, b, a).form() == wedge(h.th, h.dx).scaled(2));
  CHECK(f1(RuminElement::certify(wedge(h.th, h.dx))) == wedge(h.th, h.dx));
  CHECK(f2(a, b) == h.th.scaled(-1));
  std::vector<RuminElement> four{a, b, a, b};
  CHECK(mk_zero(four).form().is_zero());
  CHECK(mk_zero(four).form().degree() == 2);
  CHECK(fk_zero(std::span<const RuminElement>(four).first(3)).is_zero());
  CHECK_THROWS_AS(mk_zero(std::span<const RuminElement>(four).first(3)), DomainError);
}

TEST_CASE("uncertified inputs are refused") {
  H1 h;
  auto raw = RuminElement::uncertified(h.dx);
  auto ok = RuminElement::certify(h.dy);
  CHECK_THROWS_AS(m1(raw), DomainError);
  CHECK_THROWS_AS(m2(ok, raw), DomainError);
  CHECK_THROWS_AS(m3(ok, ok, raw), DomainError);
  CHECK_THROWS_AS(f2(raw, ok), DomainError);
  CHECK_THROWS_AS(RuminElement::certify(wedge(h.dx, h.dy)), DomainError);
}

TEST_CASE("f2 vanishes on nu_{1,1}") {
  for (int n = 1; n <= 2; ++n) {
    ContactModel m(n);
    for (int t = 0; t < 30; ++t) {
      SplitMix64 rng = trial_stream(2, suite_salt("f2-sym"), static_cast<std::uint64_t>(t));
      int p = static_cast<int>(rng.uniform(0, m.dim()));
      int q = static_cast<int>(rng.uniform(0, m.dim()));
      auto r = RuminElement::certify(random_certified(rng, m, p));
      auto s = RuminElement::certify(random_certified(rng, m, q));
      Form sum = f2(r, s) - f2(s, r).scaled((p * q) % 2 == 0 ? 1 : -1);
      CHECK(sum.is_zero());
    }
  }
}

TEST_CASE("m3 agrees with the hand-written second transfer step") {
  H1 h;
  CHECK(oracle::psi3_m3(h.dx, h.dy, h.dx) == wedge(h.th, h.dx).scaled(2));
  int nonzero = 0;
  for (int n = 1; n <= 2; ++n) {
    ContactModel m(n);
    auto retract = rumin_retract();
    std::vector<Form> samples;
    SplitMix64 srng = trial_stream(1, suite_salt("samples"), 0);
    for (int k = 0; k <= m.dim(); ++k) samples.push_back(random_form(srng, m, k, 2));
    REQUIRE(verify_retract(retract, std::span<const Form>(samples)).empty());
    auto transferred = markl_transfer(retract, 3);
    for (int t = 0; t < 60; ++t) {
      SplitMix64 rng = trial_stream(1, suite_salt("psi3"), static_cast<std::uint64_t>(t));
      std::vector<Form> xs;
      for (int j = 0; j < 3; ++j) {
        int degree = t % 2 == 0 ? 1 : static_cast<int>(rng.uniform(0, n + 1));
        xs.push_back(random_certified(rng, m, degree));
      }
      Form expected = oracle::psi3_m3(xs[0], xs[1], xs[2]);
      auto a = RuminElement::certify(xs[0]), b = RuminElement::certify(xs[1]), c = RuminElement::certify(xs[2]);
      CHECK(m3(a, b, c).form() == expected);
      CHECK(transferred.m(std::span<const Form>(xs)) == expected);
      if (!expected.is_zero()) ++nonzero;
    }
  }
  CHECK(nonzero > 10);
}

TEST_CASE("Gamma properties on random forms") {
  for (int n = 1; n <= 2; ++n) {
    ContactModel m(n);
    for (int k = 0; k <= m.dim(); ++k) {
      for (int t = 0; t < 15; ++t) {
        SplitMix64 rng = trial_stream(21, suite_salt("gamma") + static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(t));
        Form w = random_form(rng, m, k, 2);
        Form g = gamma(w);
        CHECK(is_vertical(g));
        CHECK(gamma(g).is_zero());
        CHECK(gamma(exterior_d(g)) == g);
        Form v = random_vertical_form(rng, m, k, 2);
        CHECK(gamma(v).is_zero());
        if (k >= 1 && k <= n) CHECK(gamma(exterior_d(v)) == v);
        CHECK(in_rumin(w) == (g.is_zero() && gamma(exterior_d(w)).is_zero()));
        Form p = pi(w).form();
        CHECK(in_rumin(p));
        CHECK(exterior_d(p) == pi(exterior_d(w)).form());
      }
    }
  }
}

TEST_CASE("the Gamma cache is safe under concurrent use") {
  ContactModel m(3);
  std::vector<Form> inputs;
  SplitMix64 rng(99);
  for (int k = 0; k <= m.dim(); ++k) inputs.push_back(random_form(rng, m, k, 1));
  std::vector<Form> serial;
  for (const auto& w : inputs) serial.push_back(gamma_rescaled(w, 1));
  std::vector<std::vector<Form>> results(4);
  std::vector<std::thread> pool;
  for (int t = 0; t < 4; ++t) {
    pool.emplace_back([&, t] {
      for (const auto& w : inputs) results[static_cast<std::size_t>(t)].push_back(gamma(w));
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& r : results) CHECK(r == serial);
}
