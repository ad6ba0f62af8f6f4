#pragma once

// Exact multivariate polynomials with rational coefficients over the
// coordinates x1..xn, y1..yn, z of the Heisenberg group.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace rumin {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
/// Parses "a" or "a/b" (optionally signed) and canonicalizes.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);

inline constexpr int kMaxContactN = 7;
inline constexpr int kMaxVars = 2 * kMaxContactN + 1;

/// Dense exponent vector; unused trailing slots stay zero.
class Exponent {
 public:
  Exponent() { powers_.fill(0); }

  std::uint8_t operator[](int i) const { return powers_[static_cast<std::size_t>(i)]; }
  void set(int i, int power);
  int total_degree() const;
  Exponent operator+(const Exponent& other) const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

 private:
  std::array<std::uint8_t, kMaxVars> powers_;
};

struct Term {
  Exponent exponent;
  Rational coeff;
};

/// Polynomial in `nvars` variables. Terms are stored in strictly decreasing
/// lexicographic order of exponents with no zero coefficients, so the zero
/// polynomial has no terms and equality is structural.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars);

  static Poly constant(int nvars, const Rational& c);
  static Poly variable(int nvars, int index);
  static Poly monomial(int nvars, const Exponent& exponent, const Rational& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Rational constant_term() const;
  int total_degree() const;
  const std::vector<Term>& terms() const { return terms_; }

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly scaled(const Rational& c) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }

  Poly derivative(int coord) const;

  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void check_same(const Poly& other) const;
  static Poly from_unsorted(int nvars, std::vector<Term> terms);

  int nvars_ = 0;
  std::vector<Term> terms_;
};

enum class PolyOp { add, sub, mul };

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);
Poly poly_scale(const Poly& p, const Rational& c);
Poly poly_deriv(const Poly& p, int coord);

/// Coordinate name for index `coord` with 2n+1 = nvars: x1..xn, y1..yn, z.
std::string coordinate_name(int nvars, int coord);

/// Prints terms in stored order, e.g. "3/2*x1**2 - y1*z + 1".
std::string to_string(const Poly& p);

}  // namespace rumin
