#include "rumin/linalg.hpp"

#include "rumin/errors.hpp"

namespace rumin {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix size");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

Matrix Matrix::identity(int size) {
  Matrix m(size, size);
  for (int i = 0; i < size; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(int rows, const std::vector<RationalVector>& columns) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    const auto& col = columns[static_cast<std::size_t>(c)];
    if (static_cast<int>(col.size()) != rows) throw DimensionError("column length mismatch");
    for (int r = 0; r < rows; ++r) m.at(r, c) = col[static_cast<std::size_t>(r)];
  }
  return m;
}

RationalVector Matrix::column(int c) const {
  RationalVector out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[static_cast<std::size_t>(r)] = at(r, c);
  return out;
}

RationalVector Matrix::operator*(const RationalVector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionError("matrix-vector size mismatch");
  RationalVector out(static_cast<std::size_t>(rows_), Rational(0));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (sgn(at(r, c)) != 0) out[static_cast<std::size_t>(r)] += at(r, c) * v[static_cast<std::size_t>(c)];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw DimensionError("matrix product size mismatch");
  Matrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      if (sgn(at(r, k)) == 0) continue;
      for (int c = 0; c < other.cols_; ++c) out.at(r, c) += at(r, k) * other.at(k, c);
    }
  }
  return out;
}

Matrix Matrix::scaled(const Rational& c) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (sgn(m.at(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < m.cols(); ++c) std::swap(m.at(row, c), m.at(pivot, c));
    }
    Rational inv = 1 / m.at(row, col);
    for (int c = 0; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m.at(r, col)) == 0) continue;
      Rational factor = m.at(r, col);
      for (int c = 0; c < m.cols(); ++c) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix copy = *this;
  return static_cast<int>(row_reduce(copy).size());
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw DimensionError("determinant of a non-square matrix");
  Matrix m = *this;
  Rational det = 1;
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r) {
      if (sgn(m.at(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = 0; c < cols_; ++c) std::swap(m.at(col, c), m.at(pivot, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < rows_; ++r) {
      if (sgn(m.at(r, col)) == 0) continue;
      Rational factor = m.at(r, col) / m.at(col, col);
      for (int c = col; c < cols_; ++c) m.at(r, c) -= factor * m.at(col, c);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw DomainError("inverse of a non-square matrix");
  Matrix augmented(rows_, 2 * cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) augmented.at(r, c) = at(r, c);
    augmented.at(r, cols_ + r) = 1;
  }
  auto pivots = row_reduce(augmented);
  if (static_cast<int>(pivots.size()) < rows_ || (rows_ > 0 && pivots.back() >= cols_)) {
    throw DomainError("matrix is singular");
  }
  Matrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(r, c) = augmented.at(r, cols_ + c);
  }
  return out;
}

std::vector<RationalVector> Matrix::kernel() const {
  Matrix m = *this;
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RationalVector v(static_cast<std::size_t>(cols_), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> Matrix::pivot_columns() const {
  Matrix m = *this;
  return row_reduce(m);
}

std::optional<RationalVector> Matrix::solve(const RationalVector& b) const {
  if (static_cast<int>(b.size()) != rows_) throw DimensionError("right-hand side size mismatch");
  Matrix augmented(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) augmented.at(r, c) = at(r, c);
    augmented.at(r, cols_) = b[static_cast<std::size_t>(r)];
  }
  auto pivots = row_reduce(augmented);
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  RationalVector x(static_cast<std::size_t>(cols_), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    x[static_cast<std::size_t>(pivots[r])] = augmented.at(static_cast<int>(r), cols_);
  }
  return x;
}

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) out += "; ";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += " ";
      out += to_string(m.at(r, c));
    }
  }
  return out + "]";
}

}  // namespace rumin
