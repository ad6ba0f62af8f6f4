#pragma once

// The finite model: left-invariant forms on the 3-dimensional Heisenberg
// group, i.e. the Chevalley-Eilenberg algebra Lambda(a, b, c) with
// da = db = 0 and dc = a^b, together with the deformation retract onto its
// Rumin subcomplex obtained by restricting Gamma and pi to
// constant-coefficient forms (a = dx1, b = dy1, c = theta).

#include <string>
#include <vector>

#include "rumin/cohomology.hpp"
#include "rumin/finite_algebra.hpp"
#include "rumin/forms.hpp"
#include "rumin/graded.hpp"

namespace rumin {

/// Labels 1; a, b, c; a^b, a^c, b^c; a^b^c.
AlgebraPtr heisenberg_ce_algebra();

struct FiniteRuminModel {
  AlgebraPtr algebra;
  /// Basis of the Rumin subcomplex per degree, as vectors in the algebra:
  /// 1; a, b; c^a, c^b; c^a^b.
  std::vector<std::vector<FiniteVector>> subcomplex_basis;
  std::vector<std::vector<std::string>> subcomplex_labels;
  /// Verified on every basis element of the algebra.
  RetractData<FiniteVector> retract;
};

FiniteRuminModel heisenberg_rumin_model();

/// Constant-coefficient form on H^3 for an element of the CE algebra, and back.
Form to_form(const FiniteVector& x);
FiniteVector from_form(const AlgebraPtr& algebra, const Form& form);

/// Cochain data of the subcomplex in its own basis, with product m_2 and
/// differential m_1 taken from the operator family.
CochainData subcomplex_cochain_data(const FiniteRuminModel& model, const GradedOpSet<FiniteVector>& m);

/// Coordinates of a subcomplex element in the subcomplex basis of its degree.
RationalVector subcomplex_coordinates(const FiniteRuminModel& model, const FiniteVector& x);

/// Element of the subcomplex with the given coordinates in its basis.
FiniteVector subcomplex_element(const FiniteRuminModel& model, int degree, const RationalVector& coords);

/// All elements of the subcomplex basis, in degree order.
std::vector<FiniteVector> subcomplex_basis_elements(const FiniteRuminModel& model);

}  // namespace rumin
