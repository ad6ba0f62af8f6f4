#include "rumin/expr.hpp"

#include <cctype>
#include <charconv>

#include "rumin/rumin.hpp"

namespace rumin {

ParseError::ParseError(int line, int column, const std::string& message)
    : DomainError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

namespace {

enum class Tok { number, ident, plus, minus, wedge, star, starstar, lparen, rparen, comma, semicolon, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, column = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count) {
    for (std::size_t k = 0; k < count; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
  };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    int tl = line, tc = column;
    if (is_digit(c)) {
      std::size_t j = i;
      while (j < text.size() && is_digit(text[j])) ++j;
      if (j + 1 < text.size() && text[j] == '/' && is_digit(text[j + 1])) {
        ++j;
        while (j < text.size() && is_digit(text[j])) ++j;
      }
      out.push_back({Tok::number, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Tok::ident, std::string(text.substr(i, j - i)), tl, tc});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t width = 1;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '^': kind = Tok::wedge; break;
      case '*':
        if (i + 1 < text.size() && text[i + 1] == '*') {
          kind = Tok::starstar;
          width = 2;
        } else {
          kind = Tok::star;
        }
        break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case ';': kind = Tok::semicolon; break;
      default: throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(text.substr(i, width)), tl, tc});
    advance(width);
  }
  out.push_back({Tok::end, "", line, column});
  return out;
}

struct CallShape {
  const char* name;
  int forms;        // number of form arguments
  bool power_arg;   // trailing ", INT"
  int degree_shift;
};

constexpr CallShape kCalls[] = {
    {"d", 1, false, 1},   {"gamma", 1, false, -1}, {"pi", 1, false, 0}, {"L", 1, true, 0},
    {"m2", 2, false, 0},  {"m3", 3, false, -1},    {"f2", 2, false, -1},
};

const CallShape* find_call(const std::string& name) {
  for (const auto& shape : kCalls) {
    if (name == shape.name) return &shape;
  }
  return nullptr;
}

std::optional<int> indexed_name(const std::string& text, std::string_view prefix) {
  if (text.size() <= prefix.size() || text.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int value = 0;
  const char* first = text.data() + prefix.size();
  const char* last = text.data() + text.size();
  if (*first == '0') return std::nullopt;
  auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || end != last) return std::nullopt;
  return value;
}

class Parser {
 public:
  Parser(std::string_view text, const ContactModel& model) : tokens_(tokenize(text)), model_(model) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    if (peek().kind != Tok::end) fail(peek(), "unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_++]; }
  [[noreturn]] void fail(const Token& at, const std::string& message) const {
    throw ParseError(at.line, at.column, message);
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      fail(peek(), std::string("expected ") + what + (peek().kind == Tok::end ? " at end of input" : ", found '" + peek().text + "'"));
    }
    return take();
  }

  static std::shared_ptr<Expr> node(Expr::Kind kind, const Token& at) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr expression() {
    const Token& start = peek();
    ExprPtr left;
    if (start.kind == Tok::minus) {
      take();
      auto neg = node(Expr::Kind::negate, start);
      ExprPtr operand = term();
      neg->degree = operand->degree;
      neg->args = {operand};
      left = neg;
    } else {
      if (start.kind == Tok::plus) take();
      left = term();
    }
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token& op = take();
      ExprPtr right = term();
      if (left->degree != right->degree) {
        fail(op, "sum mixes degrees " + std::to_string(left->degree) + " and " + std::to_string(right->degree));
      }
      auto sum = node(Expr::Kind::sum, op);
      sum->op = op.kind == Tok::plus ? '+' : '-';
      sum->degree = left->degree;
      sum->args = {left, right};
      left = sum;
    }
    return left;
  }

  static bool starts_atom(Tok kind) { return kind == Tok::number || kind == Tok::ident || kind == Tok::lparen; }

  ExprPtr term() {
    ExprPtr left = factor();
    while (true) {
      char op;
      const Token& at = peek();
      if (at.kind == Tok::wedge) {
        op = '^';
        take();
      } else if (at.kind == Tok::star) {
        op = '*';
        take();
      } else if (starts_atom(at.kind)) {
        op = ' ';
      } else {
        break;
      }
      ExprPtr right = factor();
      if (op != '^' && left->degree != 0 && right->degree != 0) {
        fail(at, "'*' and juxtaposition multiply by a 0-form; use '^' to wedge forms of degrees " +
                     std::to_string(left->degree) + " and " + std::to_string(right->degree));
      }
      auto prod = node(Expr::Kind::product, at);
      prod->op = op;
      prod->degree = left->degree + right->degree;
      prod->args = {left, right};
      left = prod;
    }
    return left;
  }

  int integer_literal(const char* what) {
    const Token& tok = expect(Tok::number, what);
    if (tok.text.find('/') != std::string::npos) fail(tok, std::string(what) + " must be an integer");
    int value = 0;
    auto [end, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc{} || end != tok.text.data() + tok.text.size()) fail(tok, "integer literal out of range");
    return value;
  }

  ExprPtr factor() {
    ExprPtr base = atom();
    if (peek().kind != Tok::starstar) return base;
    const Token& op = take();
    if (base->degree != 0) fail(op, "'**' applies to 0-forms only");
    auto pow = node(Expr::Kind::power, op);
    pow->index = integer_literal("exponent");
    if (pow->index > 255) fail(op, "exponent too large");
    pow->args = {base};
    return pow;
  }

  ExprPtr atom() {
    const Token& tok = peek();
    switch (tok.kind) {
      case Tok::number: {
        take();
        auto num = node(Expr::Kind::number, tok);
        num->value = parse_rational(tok.text);
        return num;
      }
      case Tok::lparen: {
        take();
        ExprPtr inner = expression();
        expect(Tok::rparen, "')'");
        return inner;
      }
      case Tok::ident:
        take();
        return name(tok);
      default:
        fail(tok, tok.kind == Tok::end ? "unexpected end of input" : "unexpected '" + tok.text + "'");
    }
  }

  ExprPtr name(const Token& tok) {
    const std::string& id = tok.text;
    if (const CallShape* shape = find_call(id); shape && peek().kind == Tok::lparen) return call(tok, *shape);
    const int n = model_.n();
    auto in_range = [&](std::optional<int> i) {
      if (i && (*i < 1 || *i > n)) fail(tok, "unknown generator '" + id + "' for n = " + std::to_string(n));
      return i;
    };
    if (id == "theta") {
      auto g = node(Expr::Kind::generator, tok);
      g->index = 0;
      g->degree = 1;
      return g;
    }
    if (id == "dz") {
      auto g = node(Expr::Kind::dz, tok);
      g->degree = 1;
      return g;
    }
    if (id == "z") {
      auto c = node(Expr::Kind::coordinate, tok);
      c->index = model_.z_index();
      return c;
    }
    if (auto i = in_range(indexed_name(id, "dx"))) {
      auto g = node(Expr::Kind::generator, tok);
      g->index = *i;
      g->degree = 1;
      return g;
    }
    if (auto i = in_range(indexed_name(id, "dy"))) {
      auto g = node(Expr::Kind::generator, tok);
      g->index = n + *i;
      g->degree = 1;
      return g;
    }
    if (auto i = in_range(indexed_name(id, "x"))) {
      auto c = node(Expr::Kind::coordinate, tok);
      c->index = model_.x_index(*i);
      return c;
    }
    if (auto i = in_range(indexed_name(id, "y"))) {
      auto c = node(Expr::Kind::coordinate, tok);
      c->index = model_.y_index(*i);
      return c;
    }
    if (find_call(id)) fail(tok, "operator '" + id + "' needs an argument list");
    fail(tok, "unknown name '" + id + "'");
  }

  ExprPtr call(const Token& tok, const CallShape& shape) {
    expect(Tok::lparen, "'('");
    auto c = node(Expr::Kind::call, tok);
    c->name = shape.name;
    int degree = shape.degree_shift;
    for (int k = 0; k < shape.forms; ++k) {
      if (k > 0) expect(Tok::semicolon, "';' between operator arguments");
      ExprPtr arg = expression();
      degree += arg->degree;
      c->args.push_back(arg);
    }
    if (shape.power_arg) {
      expect(Tok::comma, "',' before the Lefschetz power");
      c->index = integer_literal("Lefschetz power");
      degree += 2 * c->index;
    }
    expect(Tok::rparen, "')'");
    c->degree = degree;
    return c;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const ContactModel& model_;
};

bool is_atomic(const Expr& e) {
  return e.kind == Expr::Kind::number || e.kind == Expr::Kind::coordinate || e.kind == Expr::Kind::generator ||
         e.kind == Expr::Kind::dz || e.kind == Expr::Kind::call;
}

bool is_term(const Expr& e) { return is_atomic(e) || e.kind == Expr::Kind::power || e.kind == Expr::Kind::product; }

std::string wrapped(const Expr& e, const ContactModel& model, bool bare) {
  std::string text = to_string(e, model);
  return bare ? text : "(" + text + ")";
}

}  // namespace

bool same_expression(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.index != b.index || a.degree != b.degree || a.name != b.name ||
      a.args.size() != b.args.size()) {
    return false;
  }
  if (a.kind == Expr::Kind::number && a.value != b.value) return false;
  if ((a.kind == Expr::Kind::sum || a.kind == Expr::Kind::product) && a.op != b.op) return false;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_expression(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

ExprPtr parse_form(std::string_view text, const ContactModel& model) { return Parser(text, model).parse(); }

std::string to_string(const Expr& e, const ContactModel& model) {
  switch (e.kind) {
    case Expr::Kind::number: return to_string(e.value);
    case Expr::Kind::coordinate: return coordinate_name(model.nvars(), e.index);
    case Expr::Kind::generator: return model.generator_name(e.index);
    case Expr::Kind::dz: return "dz";
    case Expr::Kind::sum: {
      const Expr& l = *e.args[0];
      const Expr& r = *e.args[1];
      bool bare_left = is_term(l) || l.kind == Expr::Kind::sum || l.kind == Expr::Kind::negate;
      return wrapped(l, model, bare_left) + " " + e.op + " " + wrapped(r, model, is_term(r));
    }
    case Expr::Kind::negate: return "-" + wrapped(*e.args[0], model, is_term(*e.args[0]));
    case Expr::Kind::product: {
      const Expr& r = *e.args[1];
      std::string sep = e.op == ' ' ? " " : std::string(" ") + e.op + " ";
      return wrapped(*e.args[0], model, is_term(*e.args[0])) + sep +
             wrapped(r, model, is_atomic(r) || r.kind == Expr::Kind::power);
    }
    case Expr::Kind::power: return wrapped(*e.args[0], model, is_atomic(*e.args[0])) + "**" + std::to_string(e.index);
    case Expr::Kind::call: {
      std::string out = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) out += (i ? "; " : "") + to_string(*e.args[i], model);
      if (e.name == "L") out += ", " + std::to_string(e.index);
      return out + ")";
    }
  }
  return "";
}

Form evaluate(const Expr& e, const ContactModel& model) {
  switch (e.kind) {
    case Expr::Kind::number: return Form::scalar(model, e.value);
    case Expr::Kind::coordinate: return Form::coordinate(model, e.index);
    case Expr::Kind::generator: return Form::generator(model, e.index);
    case Expr::Kind::dz: return Form::dz(model);
    case Expr::Kind::sum: {
      Form left = evaluate(*e.args[0], model);
      Form right = evaluate(*e.args[1], model);
      return e.op == '+' ? left + right : left - right;
    }
    case Expr::Kind::negate: return -evaluate(*e.args[0], model);
    case Expr::Kind::product: return wedge(evaluate(*e.args[0], model), evaluate(*e.args[1], model));
    case Expr::Kind::power: {
      Form base = evaluate(*e.args[0], model);
      Form out = Form::scalar(model, Rational(1));
      for (int k = 0; k < e.index; ++k) out = wedge(out, base);
      return out;
    }
    case Expr::Kind::call: {
      std::vector<Form> args;
      for (const auto& a : e.args) args.push_back(evaluate(*a, model));
      try {
        std::vector<RuminElement> certified;
        auto rumin_arg = [&](std::size_t k) {
          if (!in_rumin(args[k])) {
            throw DomainError("argument " + std::to_string(k + 1) + " is not in the Rumin complex: " +
                              to_string(args[k]));
          }
          return RuminElement::certify(args[k]);
        };
        if (e.name == "d") return exterior_d(args[0]);
        if (e.name == "gamma") return gamma(args[0]);
        if (e.name == "pi") return pi(args[0]).form();
        if (e.name == "L") return lefschetz(args[0], e.index);
        if (e.name == "m2" || e.name == "m3" || e.name == "f2") {
          for (std::size_t k = 0; k < args.size(); ++k) certified.push_back(rumin_arg(k));
        }
        if (e.name == "m2") return m2(certified[0], certified[1]).form();
        if (e.name == "m3") return m3(certified[0], certified[1], certified[2]).form();
        if (e.name == "f2") return f2(certified[0], certified[1]);
      } catch (const std::exception& ex) {
        throw DomainError(e.name + " at line " + std::to_string(e.line) + ", column " + std::to_string(e.column) +
                          ": " + ex.what());
      }
      throw DomainError("unknown operator '" + e.name + "'");
    }
  }
  throw DomainError("malformed expression");
}

std::string eval_command(std::string_view text, const ContactModel& model) {
  return to_string(evaluate(*parse_form(text, model), model));
}

}  // namespace rumin
