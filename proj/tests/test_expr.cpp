#include <doctest.h>

#include "rumin/expr.hpp"
#include "rumin/random.hpp"
#include "rumin/rumin.hpp"

using namespace rumin;

namespace {

ParseError parse_failure(const std::string& text, const ContactModel& model) {
  try {
    parse_form(text, model);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << text);
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("parsing examples") {
  ContactModel h1(1);
  Form th = Form::theta(h1), dx = Form::generator(h1, 1), dy = Form::generator(h1, 2);
  CHECK(evaluate(*parse_form("theta^dx1", h1), h1) == wedge(th, dx));
  Form two_term = evaluate(*parse_form("(3/2*x1**2) dx1^dy1 + theta^dx1", h1), h1);
  CHECK(two_term.degree() == 2);
  CHECK(two_term.terms().size() == 2);
  CHECK(two_term == wedge(dx, dy).times(Poly::variable(3, 0) * Poly::variable(3, 0)).scaled(make_rational(3, 2)) +
                        wedge(th, dx));
  CHECK(evaluate(*parse_form("dz", h1), h1) == th + dx.times(Poly::variable(3, 1)));
  CHECK(parse_form("  theta\n ^ dx1 ", h1)->degree == 2);
}

TEST_CASE("evaluation examples") {
  ContactModel h1(1);
  CHECK(eval_command("pi(dx1^dy1)", h1) == "0");
  CHECK(eval_command("gamma(dx1^dy1)", h1) == "theta");
  CHECK(eval_command("m3(dx1; dy1; dx1)", h1) == "2 theta^dx1");
  CHECK(eval_command("f2(dx1; dy1)", h1) == "-theta");
  CHECK(eval_command("m2(dx1; dy1)", h1) == "0");
  CHECK(eval_command("d(z**2)", h1) == "(2*z) theta + (2*y1*z) dx1");
  CHECK(eval_command("L(theta, 1)", h1) == "theta^dx1^dy1");
  CHECK(eval_command("-(x1 - x1) dy1", h1) == "0");
  CHECK(eval_command("2 * 3 theta", h1) == "6 theta");
  ContactModel h2(2);
  CHECK(eval_command("L(theta, 2)", h2) == to_string(contact_volume(h2)));
}

TEST_CASE("operator errors carry context") {
  ContactModel h1(1);
  try {
    eval_command("m2(theta; dx1)", h1);
    FAIL("expected an error");
  } catch (const DomainError& e) {
    std::string msg = e.what();
    CHECK(msg.find("m2") != std::string::npos);
    CHECK(msg.find("argument 1") != std::string::npos);
  }
  CHECK_THROWS_AS(eval_command("L(dx1, 1)", h1), DomainError);
}

TEST_CASE("syntax errors report line and column") {
  ContactModel h1(1);
  auto e = parse_failure("theta +\n  dx1 dy1", h1);
  CHECK(e.line() == 2);
  CHECK(e.column() == 7);
  e = parse_failure("dx2", h1);
  CHECK(std::string(e.what()).find("unknown generator") != std::string::npos);
  e = parse_failure("theta + 1", h1);
  CHECK(e.column() == 7);
  e = parse_failure("(dx1", h1);
  CHECK(e.column() == 5);
  e = parse_failure("x1 ** dx1", h1);
  CHECK(e.column() == 7);
  e = parse_failure("dx1 ** 2", h1);
  CHECK(e.column() == 5);
  e = parse_failure("m3(dx1; dy1)", h1);
  CHECK(e.column() == 12);
  e = parse_failure("gamma", h1);
  CHECK(std::string(e.what()).find("argument list") != std::string::npos);
  e = parse_failure("3 $", h1);
  CHECK(e.column() == 3);
  e = parse_failure("", h1);
  CHECK(e.line() == 1);
  e = parse_failure("x0", h1);
  CHECK(e.column() == 1);
  e = parse_failure("L(theta, 1/2)", h1);
  CHECK(e.column() == 10);
}

TEST_CASE("printing round-trips") {
  ContactModel h2(2);
  const char* inputs[] = {
      "theta^dx1",
      "-(3/2*x1**2 - y2 z) dx1^dy2 + theta^dx2",
      "m3(dx1; dy1 + dx2; x1 dy2)",
      "-x1 - (-2)",
      "(x1 + 1)**3 theta",
      "2 (x1 y1) (z) dx1",
      "d(gamma(dx1^dy1 - dx2^dy2)) + pi(dx1^dy2)",
      "L(theta, 1) - theta^dx2^dy2",
      "f2(z; dz) - m2(1; x2)",
      "dx1^(dx2^dy1)",
  };
  for (const char* text : inputs) {
    ExprPtr e = parse_form(text, h2);
    std::string printed = to_string(*e, h2);
    ExprPtr again = parse_form(printed, h2);
    CHECK_MESSAGE(same_expression(*e, *again), text << " -> " << printed);
    CHECK(to_string(*again, h2) == printed);
  }
}

TEST_CASE("canonical form output reparses to the same form") {
  for (int n = 1; n <= 2; ++n) {
    ContactModel m(n);
    for (int t = 0; t < 60; ++t) {
      SplitMix64 rng = trial_stream(31, suite_salt("print-form"), static_cast<std::uint64_t>(t));
      Form w = random_form(rng, m, t % (m.dim() + 1), 3);
      std::string text = to_string(w);
      if (w.is_zero()) continue;
      CHECK_MESSAGE(evaluate(*parse_form(text, m), m) == w, text);
    }
  }
}
