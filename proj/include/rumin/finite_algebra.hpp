#pragma once

// Finite-dimensional commutative differential graded algebras given by
// structure constants, and their elements.
//
// Text format, one directive per line, '#' starts a comment:
//
//   basis <label> <degree>
//   d     <source> <target> <rational>          d(source) has coefficient on target
//   mul   <left> <right> <result> <rational>    left * right has coefficient on result
//
// Labels are whitespace-free tokens; every label must be declared by a
// basis line before use. Unlisted differential and product entries are
// zero. Construction checks d^2 = 0, graded commutativity, associativity
// and the Leibniz rule on all basis tuples.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rumin/cohomology.hpp"
#include "rumin/linalg.hpp"

namespace rumin {

class FiniteGradedAlgebra {
 public:
  struct BasisElement {
    std::string label;
    int degree;
  };
  struct DifferentialEntry {
    std::string source;
    std::string target;
    Rational coeff;
  };
  struct ProductEntry {
    std::string left;
    std::string right;
    std::string result;
    Rational coeff;
  };

  FiniteGradedAlgebra(std::vector<BasisElement> basis, const std::vector<DifferentialEntry>& differential,
                      const std::vector<ProductEntry>& product);

  /// Parses the text format; errors carry the line number.
  static FiniteGradedAlgebra parse(std::string_view text);
  std::string serialize() const;

  int min_degree() const { return min_degree_; }
  int max_degree() const { return max_degree_; }
  int dim(int degree) const;
  int total_dim() const { return static_cast<int>(basis_.size()); }
  const std::string& label(int degree, int index) const;
  /// (degree, index within degree) of a label; DomainError if unknown.
  std::pair<int, int> locate(const std::string& label) const;

  /// Matrix of d out of `degree`, size dim(degree+1) x dim(degree).
  Matrix differential_matrix(int degree) const;
  RationalVector differential(int degree, const RationalVector& x) const;
  RationalVector multiply(int p, const RationalVector& x, int q, const RationalVector& y) const;

  CochainData cochain_data() const;

 private:
  void validate() const;
  const std::vector<int>& indices(int degree) const;

  std::vector<BasisElement> basis_;
  std::map<std::string, int> by_label_;
  int min_degree_ = 0;
  int max_degree_ = -1;
  std::map<int, std::vector<int>> per_degree_;  // degree -> global indices
  std::vector<int> local_index_;                // global -> index within its degree
  std::map<int, Matrix> d_;                     // degree -> matrix
  // (global left, global right) -> coordinates in degree of the result
  std::map<std::pair<int, int>, RationalVector> mul_;
};

using AlgebraPtr = std::shared_ptr<const FiniteGradedAlgebra>;

/// Homogeneous element of a FiniteGradedAlgebra in basis coordinates.
class FiniteVector {
 public:
  FiniteVector(AlgebraPtr algebra, int degree);
  FiniteVector(AlgebraPtr algebra, int degree, RationalVector coords);
  static FiniteVector basis(const AlgebraPtr& algebra, const std::string& label);

  const AlgebraPtr& algebra() const { return algebra_; }
  int degree() const { return degree_; }
  const RationalVector& coords() const { return coords_; }
  bool is_zero() const { return is_zero_vector(coords_); }

  FiniteVector zero_of_degree(int degree) const { return FiniteVector(algebra_, degree); }
  FiniteVector operator+(const FiniteVector& other) const;
  FiniteVector operator-(const FiniteVector& other) const;
  FiniteVector scaled(const Rational& c) const;

  friend bool operator==(const FiniteVector& a, const FiniteVector& b);

 private:
  AlgebraPtr algebra_;
  int degree_;
  RationalVector coords_;
};

FiniteVector differential(const FiniteVector& x);
FiniteVector multiply(const FiniteVector& x, const FiniteVector& y);
/// e.g. "2 a^b - 1/2 c", "0" for zero.
std::string to_string(const FiniteVector& x);

}  // namespace rumin
