#include "rumin/poly.hpp"

#include <algorithm>
#include <cctype>

#include "rumin/errors.hpp"

namespace rumin {

Rational make_rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (allow_sign && !part.empty() && (part[0] == '-' || part[0] == '+')) part.remove_prefix(1);
    return !part.empty() &&
           std::all_of(part.begin(), part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw DomainError("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw DomainError("rational with zero denominator");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

void Exponent::set(int i, int power) {
  if (i < 0 || i >= kMaxVars) throw DimensionError("exponent index out of range");
  if (power < 0 || power > 255) throw DomainError("exponent out of range [0, 255]");
  powers_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(power);
}

int Exponent::total_degree() const {
  int total = 0;
  for (auto p : powers_) total += p;
  return total;
}

Exponent Exponent::operator+(const Exponent& other) const {
  Exponent out;
  for (std::size_t i = 0; i < powers_.size(); ++i) {
    int sum = powers_[i] + other.powers_[i];
    if (sum > 255) throw DomainError("exponent overflow");
    out.powers_[i] = static_cast<std::uint8_t>(sum);
  }
  return out;
}

Poly::Poly(int nvars) : nvars_(nvars) {
  if (nvars < 0 || nvars > kMaxVars) throw DimensionError("unsupported coordinate count " + std::to_string(nvars));
}

Poly Poly::constant(int nvars, const Rational& c) { return monomial(nvars, Exponent{}, c); }

Poly Poly::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw DimensionError("coordinate index out of range");
  Exponent e;
  e.set(index, 1);
  return monomial(nvars, e, Rational(1));
}

Poly Poly::monomial(int nvars, const Exponent& exponent, const Rational& c) {
  Poly p(nvars);
  for (int i = nvars; i < kMaxVars; ++i) {
    if (exponent[i] != 0) throw DimensionError("exponent uses a coordinate beyond nvars");
  }
  if (sgn(c) != 0) p.terms_.push_back({exponent, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent == Exponent{});
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().exponent == Exponent{}) return terms_.back().coeff;
  return Rational(0);
}

int Poly::total_degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, t.exponent.total_degree());
  return deg;
}

void Poly::check_same(const Poly& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionError("polynomials over " + std::to_string(nvars_) + " and " + std::to_string(other.nvars_) +
                         " coordinates");
  }
}

Poly Poly::from_unsorted(int nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exponent > b.exponent; });
  Poly out(nvars);
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().exponent == t.exponent) {
      out.terms_.back().coeff += t.coeff;
    } else {
      if (!out.terms_.empty() && sgn(out.terms_.back().coeff) == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && sgn(out.terms_.back().coeff) == 0) out.terms_.pop_back();
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Poly Poly::operator+(const Poly& other) const {
  check_same(other);
  Poly out(nvars_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent > b->exponent)) {
      out.terms_.push_back(*a++);
    } else if (a == terms_.end() || b->exponent > a->exponent) {
      out.terms_.push_back(*b++);
    } else {
      Rational sum = a->coeff + b->coeff;
      if (sgn(sum) != 0) out.terms_.push_back({a->exponent, std::move(sum)});
      ++a;
      ++b;
    }
  }
  return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  check_same(other);
  if (is_zero() || other.is_zero()) return Poly(nvars_);
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) products.push_back({a.exponent + b.exponent, a.coeff * b.coeff});
  }
  return from_unsorted(nvars_, std::move(products));
}

Poly Poly::scaled(const Rational& c) const {
  if (sgn(c) == 0) return Poly(nvars_);
  Poly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

Poly Poly::derivative(int coord) const {
  if (coord < 0 || coord >= nvars_) {
    throw DimensionError("derivative index " + std::to_string(coord) + " out of range for " +
                         std::to_string(nvars_) + " coordinates");
  }
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int power = t.exponent[coord];
    if (power == 0) continue;
    Exponent e = t.exponent;
    e.set(coord, power - 1);
    out.push_back({e, t.coeff * power});
  }
  Poly result(nvars_);
  result.terms_ = std::move(out);  // lowering one slot preserves the lex order
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponent != b.terms_[i].exponent || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
  switch (op) {
    case PolyOp::add: return p + q;
    case PolyOp::sub: return p - q;
    case PolyOp::mul: return p * q;
  }
  throw DomainError("unknown polynomial operation");
}

Poly poly_scale(const Poly& p, const Rational& c) { return p.scaled(c); }

Poly poly_deriv(const Poly& p, int coord) { return p.derivative(coord); }

std::string coordinate_name(int nvars, int coord) {
  int n = (nvars - 1) / 2;
  if (coord < 0 || coord >= nvars) throw DimensionError("coordinate index out of range");
  if (coord < n) return "x" + std::to_string(coord + 1);
  if (coord < 2 * n) return "y" + std::to_string(coord - n + 1);
  return "z";
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational mag = abs(t.coeff);
    bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string vars;
    for (int i = 0; i < p.nvars(); ++i) {
      int power = t.exponent[i];
      if (power == 0) continue;
      if (!vars.empty()) vars += "*";
      vars += coordinate_name(p.nvars(), i);
      if (power > 1) vars += "**" + std::to_string(power);
    }
    if (vars.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += vars;
    } else {
      out += to_string(mag) + "*" + vars;
    }
  }
  return out;
}

}  // namespace rumin
