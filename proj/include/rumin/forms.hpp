#pragma once

// Polynomial-coefficient differential forms on the Heisenberg group
// H^{2n+1}, written in the adapted coframe
//
//   e0 = theta = dz - sum_i y_i dx_i,   e^i = dx_i,   e^{n+i} = dy_i,
//
// in which d(theta) = sum_i e^i ^ e^{n+i} has constant coefficients.

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rumin/linalg.hpp"
#include "rumin/poly.hpp"

namespace rumin {

class ContactModel {
 public:
  explicit ContactModel(int n);

  int n() const { return n_; }
  /// Manifold dimension 2n+1, also the number of coframe generators and coordinates.
  int dim() const { return 2 * n_ + 1; }
  int nvars() const { return dim(); }

  int x_index(int i) const { return i - 1; }
  int y_index(int i) const { return n_ + i - 1; }
  int z_index() const { return 2 * n_; }

  /// Coframe generator names: "theta", "dx1".., "dy1"..
  std::string generator_name(int index) const;

  friend bool operator==(const ContactModel&, const ContactModel&) = default;

 private:
  int n_;
};

/// Set of coframe indices, bit j standing for e^j.
using Monomial = std::uint32_t;

int monomial_degree(Monomial m);
bool contains(Monomial m, int index);
/// Lexicographic order on the sorted index lists.
struct MonomialLess {
  bool operator()(Monomial a, Monomial b) const;
};

/// Sign of e^A ^ e^B relative to the sorted monomial e^{A u B}; 0 if they share an index.
int wedge_sign(Monomial a, Monomial b);

/// Homogeneous form. The zero form still carries its degree, which may lie
/// outside [0, 2n+1] (those spaces are trivial).
class Form {
 public:
  using TermMap = std::map<Monomial, Poly, MonomialLess>;

  Form(const ContactModel& model, int degree);

  static Form scalar(const ContactModel& model, const Poly& f);
  static Form scalar(const ContactModel& model, const Rational& c);
  static Form monomial(const ContactModel& model, Monomial m, const Poly& coeff);
  static Form generator(const ContactModel& model, int index);
  static Form theta(const ContactModel& model);
  static Form dtheta(const ContactModel& model);
  /// dz rewritten in the coframe: e0 + sum_i y_i e^i.
  static Form dz(const ContactModel& model);
  static Form coordinate(const ContactModel& model, int coord);

  const ContactModel& model() const { return model_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coefficient(Monomial m) const;

  Form zero_of_degree(int degree) const { return Form(model_, degree); }
  Form operator-() const;
  Form operator+(const Form& other) const;
  Form operator-(const Form& other) const;
  Form& operator+=(const Form& other) { return *this = *this + other; }
  Form& operator-=(const Form& other) { return *this = *this - other; }
  Form scaled(const Rational& c) const;
  Form times(const Poly& f) const;

  /// Zero forms compare equal whatever their declared degree.
  friend bool operator==(const Form& a, const Form& b);

 private:
  void add_term(Monomial m, const Poly& coeff);
  void check_compatible(const Form& other, const char* what) const;

  ContactModel model_;
  int degree_;
  TermMap terms_;
};

Form wedge(const Form& a, const Form& b);
Form exterior_d(const Form& form);
bool is_vertical(const Form& form);

/// form ^ (d theta)^power with no verticality requirement.
Form wedge_dtheta_power(const Form& form, int power);
/// The Lefschetz operator L^power on vertical forms; DomainError otherwise.
Form lefschetz(const Form& form, int power);

/// All coframe monomials of a degree, in canonical order.
std::vector<Monomial> coframe_basis(const ContactModel& model, int degree);
/// Coframe monomials of a degree that contain e0.
std::vector<Monomial> vertical_basis(const ContactModel& model, int degree);

/// Matrix of L^k : A_0^{n-k+1} -> A_0^{n+k+1} on vertical monomial bases
/// (columns = source, rows = target). Requires 1 <= k <= n.
Matrix lefschetz_power_matrix(const ContactModel& model, int k);

/// theta ^ (d theta)^n, the contact volume form.
Form contact_volume(const ContactModel& model);

std::string monomial_name(const ContactModel& model, Monomial m);
/// Canonical text in the expression grammar, "0" for the zero form.
std::string to_string(const Form& form);

}  // namespace rumin
