#pragma once

// The contact-invariant operator Gamma, the Rumin projection and spaces R^k,
// and the closed-form Rumin C-infinity structure m_1, m_2, m_3 together with
// the quasi-isomorphism f_1, f_2 into the de Rham algebra.

#include <span>

#include "rumin/forms.hpp"
#include "rumin/graded.hpp"

namespace rumin {

/// A form together with a flag recording that membership in R^k was checked.
class RuminElement {
 public:
  /// Checks membership; throws DomainError if the form is not in R^k.
  static RuminElement certify(const Form& form);
  /// Wraps a form without checking; operators on it will refuse to run.
  static RuminElement uncertified(const Form& form) { return RuminElement(form, false); }

  const Form& form() const { return form_; }
  bool certified() const { return certified_; }
  int degree() const { return form_.degree(); }

 private:
  friend RuminElement pi(const Form& form);
  RuminElement(Form form, bool certified) : form_(std::move(form)), certified_(certified) {}

  Form form_;
  bool certified_;
};

/// Gamma: A^k -> A_0^{k-1}, solving the Lefschetz systems with the cached
/// inverse Lefschetz matrices.
Form gamma(const Form& form);

/// Gamma recomputed from scratch for the contact form lambda * theta.
Form gamma_rescaled(const Form& form, const Rational& lambda);

/// Whether Gamma computed from lambda * theta agrees with gamma(form). lambda > 0.
bool gamma_invariance_check(const Form& form, const Rational& lambda);

bool is_primitive(const Form& form);
RuminElement pi(const Form& form);
bool in_rumin(const Form& form);

RuminElement m1(const RuminElement& a);
RuminElement m2(const RuminElement& a, const RuminElement& b);
RuminElement m3(const RuminElement& a, const RuminElement& b, const RuminElement& c);
/// m_k for k >= 4 vanishes identically.
RuminElement mk_zero(std::span<const RuminElement> args);

Form f1(const RuminElement& a);
Form f2(const RuminElement& a, const RuminElement& b);
/// f_k for k >= 3 vanishes identically.
Form fk_zero(std::span<const RuminElement> args);

/// The retract (A, d) <-> (R, d) with homotopy Gamma, over forms; not yet verified.
RetractData<Form> rumin_retract();

/// Closed-form structure maps as generic operator families on forms (the
/// arguments are certified on entry), up to the given arity.
GradedOpSet<Form> rumin_m_family(int max_arity);
GradedOpSet<Form> rumin_f_family(int max_arity);
/// The de Rham algebra (d, wedge, 0, ...) as an operator family up to the given arity.
GradedOpSet<Form> de_rham_family(int max_arity);

}  // namespace rumin
