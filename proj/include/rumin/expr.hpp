#pragma once

// Form-expression language.
//
//   expr   := ['+' | '-'] term (('+' | '-') term)*
//   term   := factor (('^' | '*' | <juxtaposition>) factor)*
//   factor := atom ['**' INT]
//   atom   := NUMBER | name | call | '(' expr ')'
//   NUMBER := INT ['/' INT]
//   name   := theta | dz | dx<i> | dy<i> | x<i> | y<i> | z
//   call   := d(expr) | gamma(expr) | pi(expr) | L(expr, INT)
//           | m2(expr; expr) | m3(expr; expr; expr) | f2(expr; expr)
//
// '^' is the wedge product. '*' and juxtaposition multiply by a 0-form, so
// one side must have degree 0; '**' raises a 0-form to a power. Sums must
// be homogeneous. dz is rewritten as theta + sum_i y_i dx_i on evaluation.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rumin/errors.hpp"
#include "rumin/forms.hpp"

namespace rumin {

class ParseError : public DomainError {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { number, coordinate, generator, dz, sum, negate, product, power, call };

  Kind kind = Kind::number;
  Rational value;            // number
  int index = 0;             // coordinate / generator index, power exponent, L power
  char op = '+';             // sum: '+' or '-'; product: '^', '*' or ' '
  std::string name;          // call
  std::vector<ExprPtr> args;
  int line = 1;
  int column = 1;
  int degree = 0;            // computed at parse time
};

/// Structural equality (ignores source positions).
bool same_expression(const Expr& a, const Expr& b);

/// Parses and degree-checks an expression for the given model.
ExprPtr parse_form(std::string_view text, const ContactModel& model);

/// Prints an expression back in the grammar; reparsing gives an equal tree.
std::string to_string(const Expr& expr, const ContactModel& model);

/// Evaluates to a Form; operator failures are reported with the operator name.
Form evaluate(const Expr& expr, const ContactModel& model);

/// Parse, evaluate and print canonically.
std::string eval_command(std::string_view text, const ContactModel& model);

}  // namespace rumin
