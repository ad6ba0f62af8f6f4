#pragma once

// Cohomology rings of finite-dimensional cochain complexes with a product,
// computed by exact rational linear algebra.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rumin/linalg.hpp"

namespace rumin {

/// Bilinear product of coordinate vectors in degrees p and q, landing in degree p+q.
using CoordinateProduct =
    std::function<RationalVector(int p, const RationalVector& x, int q, const RationalVector& y)>;

/// A finite cochain complex in degrees [min_degree, min_degree + dims.size()),
/// given in coordinates, with a (not necessarily associative) product.
struct CochainData {
  int min_degree = 0;
  std::vector<int> dims;
  /// differentials[k - min_degree] : degree k -> degree k+1, size dim(k+1) x dim(k).
  std::vector<Matrix> differentials;
  CoordinateProduct product;
  /// Optional basis labels per degree, for printing.
  std::vector<std::vector<std::string>> labels;

  int max_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
  int dim(int degree) const;
  /// The differential out of `degree` (a zero-size matrix outside the range).
  Matrix d(int degree) const;
};

class Cohomology {
 public:
  explicit Cohomology(CochainData data);

  int min_degree() const { return data_.min_degree; }
  int max_degree() const { return data_.max_degree(); }
  int betti(int degree) const;
  std::vector<int> betti_numbers() const;

  /// Cocycles whose classes form the chosen basis of H^degree.
  const std::vector<RationalVector>& representatives(int degree) const;
  /// Coordinates of the class of a cocycle; throws DomainError if not a cocycle.
  RationalVector classify(int degree, const RationalVector& cocycle) const;
  bool is_cocycle(int degree, const RationalVector& v) const;
  /// Product of two classes given in cohomology coordinates.
  RationalVector class_product(int p, const RationalVector& x, int q, const RationalVector& y) const;
  /// Cocycle representing the class with the given coordinates.
  RationalVector lift(int degree, const RationalVector& class_coords) const;

  const CochainData& data() const { return data_; }

 private:
  struct Degree {
    std::vector<RationalVector> boundaries;
    std::vector<RationalVector> representatives;
    Matrix combined;  // columns: boundaries then representatives
  };
  const Degree& at(int degree) const;

  CochainData data_;
  std::vector<Degree> degrees_;
};

Cohomology cohomology(const CochainData& data);

struct RingIsomorphismReport {
  bool isomorphism = false;
  /// Per degree, the matrix of the induced map on cohomology bases.
  std::map<int, Matrix> degree_maps;
  std::vector<std::string> witnesses;
};

/// Cochain map given degree-wise in coordinates.
using CoordinateMap = std::function<RationalVector(int degree, const RationalVector& x)>;

/// Whether the cochain map induces an isomorphism of graded cohomology rings.
RingIsomorphismReport check_ring_isomorphism(const CoordinateMap& f1, const Cohomology& source,
                                             const Cohomology& target);

}  // namespace rumin
