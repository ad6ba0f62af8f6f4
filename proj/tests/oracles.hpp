#pragma once

// Reference computations for the tests, written without the library's
// wedge signs, elimination routines or sign engine.

#include <vector>

#include "rumin/forms.hpp"
#include "rumin/graded.hpp"
#include "rumin/linalg.hpp"

namespace oracle {

using rumin::Form;
using rumin::Matrix;
using rumin::Rational;

/// Sign of the permutation sorting `indices` (bubble sort); 0 on a repeat.
int bubble_sign(std::vector<int> indices);

/// Increasing index lists of the given size drawn from [0, dim), in lex order.
std::vector<std::vector<int>> combinations(int dim, int size);

/// Matrix of wedging with dtheta^k from vertical degree n-k+1 to n+k+1,
/// from an explicit expansion of dtheta^k as ordered index words.
Matrix lefschetz_matrix(int n, int k);

/// Determinant by expansion over all permutations.
Rational permutation_determinant(const Matrix& m);

/// Determinant by fraction-free (Bareiss) elimination with row swaps.
Rational bareiss_determinant(Matrix m);

/// Rank as the size of the largest nonzero minor.
int minor_rank(const Matrix& m);

/// Betti numbers of a complex given by its dimensions and differentials
/// (ds[k] : degree k -> k+1).
std::vector<int> betti(const std::vector<int>& dims, const std::vector<Matrix>& ds);

/// pi(Gamma(a^b)^c - (-1)^|a| a^Gamma(b^c)), the second transfer step
/// written out by hand.
Form psi3_m3(const Form& a, const Form& b, const Form& c);

/// The displayed expansions of nu_{1,1}, nu_{1,2}, nu_{2,1} on letters
/// 0, 1, 2 of the given degrees.
std::vector<rumin::SignedWord> displayed_nu(int p, int q, const std::vector<int>& degrees);

/// Closed-form m family with the sign of the a^Gamma(b^c) term in m3 flipped.
rumin::GradedOpSet<Form> corrupted_m_family();
/// Closed-form f family with f2 negated.
rumin::GradedOpSet<Form> corrupted_f_family();

}  // namespace oracle
