#pragma once

// Dense exact linear algebra over the rationals.

#include <optional>
#include <string>
#include <vector>

#include "rumin/poly.hpp"

namespace rumin {

using RationalVector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int size);
  /// Builds a matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(int rows, const std::vector<RationalVector>& columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return data_[index(r, c)]; }
  const Rational& at(int r, int c) const { return data_[index(r, c)]; }

  RationalVector column(int c) const;
  RationalVector operator*(const RationalVector& v) const;
  Matrix operator*(const Matrix& other) const;
  Matrix scaled(const Rational& c) const;
  bool is_zero() const;

  int rank() const;
  Rational determinant() const;
  /// Throws DomainError when singular or not square.
  Matrix inverse() const;
  /// Basis of the null space.
  std::vector<RationalVector> kernel() const;
  /// Indices of a maximal independent set of columns, chosen greedily left to right.
  std::vector<int> pivot_columns() const;
  /// Some x with (*this) x = b, or nullopt if b is outside the column space.
  std::optional<RationalVector> solve(const RationalVector& b) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t index(int r, int c) const { return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c); }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form; returns pivot column per pivot row.
std::vector<int> row_reduce(Matrix& m);

bool is_zero_vector(const RationalVector& v);
std::string to_string(const Matrix& m);

}  // namespace rumin
