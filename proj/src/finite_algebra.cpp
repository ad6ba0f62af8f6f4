#include "rumin/finite_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "rumin/errors.hpp"

namespace rumin {

FiniteGradedAlgebra::FiniteGradedAlgebra(std::vector<BasisElement> basis,
                                         const std::vector<DifferentialEntry>& differential,
                                         const std::vector<ProductEntry>& product)
    : basis_(std::move(basis)) {
  if (basis_.empty()) throw DomainError("algebra needs at least one basis element");
  min_degree_ = basis_[0].degree;
  max_degree_ = basis_[0].degree;
  local_index_.resize(basis_.size());
  for (std::size_t g = 0; g < basis_.size(); ++g) {
    const auto& b = basis_[g];
    if (!by_label_.emplace(b.label, static_cast<int>(g)).second) {
      throw DomainError("duplicate basis label '" + b.label + "'");
    }
    min_degree_ = std::min(min_degree_, b.degree);
    max_degree_ = std::max(max_degree_, b.degree);
    auto& list = per_degree_[b.degree];
    local_index_[g] = static_cast<int>(list.size());
    list.push_back(static_cast<int>(g));
  }
  for (int k = min_degree_; k <= max_degree_; ++k) d_.emplace(k, Matrix(dim(k + 1), dim(k)));

  auto global = [&](const std::string& label) {
    auto it = by_label_.find(label);
    if (it == by_label_.end()) throw DomainError("unknown basis label '" + label + "'");
    return it->second;
  };
  for (const auto& e : differential) {
    int s = global(e.source), t = global(e.target);
    if (basis_[static_cast<std::size_t>(t)].degree != basis_[static_cast<std::size_t>(s)].degree + 1) {
      throw DomainError("differential entry " + e.source + " -> " + e.target + " does not raise degree by one");
    }
    d_.at(basis_[static_cast<std::size_t>(s)].degree)
        .at(local_index_[static_cast<std::size_t>(t)], local_index_[static_cast<std::size_t>(s)]) += e.coeff;
  }
  for (const auto& e : product) {
    int l = global(e.left), r = global(e.right), res = global(e.result);
    int degree = basis_[static_cast<std::size_t>(l)].degree + basis_[static_cast<std::size_t>(r)].degree;
    if (basis_[static_cast<std::size_t>(res)].degree != degree) {
      throw DomainError("product entry " + e.left + " * " + e.right + " -> " + e.result + " is not homogeneous");
    }
    auto [it, inserted] = mul_.try_emplace({l, r}, RationalVector(static_cast<std::size_t>(dim(degree)), Rational(0)));
    it->second[static_cast<std::size_t>(local_index_[static_cast<std::size_t>(res)])] += e.coeff;
  }
  validate();
}

int FiniteGradedAlgebra::dim(int degree) const {
  auto it = per_degree_.find(degree);
  return it == per_degree_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<int>& FiniteGradedAlgebra::indices(int degree) const {
  static const std::vector<int> empty;
  auto it = per_degree_.find(degree);
  return it == per_degree_.end() ? empty : it->second;
}

const std::string& FiniteGradedAlgebra::label(int degree, int index) const {
  const auto& list = indices(degree);
  if (index < 0 || index >= static_cast<int>(list.size())) throw DimensionError("basis index out of range");
  return basis_[static_cast<std::size_t>(list[static_cast<std::size_t>(index)])].label;
}

std::pair<int, int> FiniteGradedAlgebra::locate(const std::string& label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) throw DomainError("unknown basis label '" + label + "'");
  auto g = static_cast<std::size_t>(it->second);
  return {basis_[g].degree, local_index_[g]};
}

Matrix FiniteGradedAlgebra::differential_matrix(int degree) const {
  auto it = d_.find(degree);
  return it == d_.end() ? Matrix(dim(degree + 1), dim(degree)) : it->second;
}

RationalVector FiniteGradedAlgebra::differential(int degree, const RationalVector& x) const {
  if (static_cast<int>(x.size()) != dim(degree)) throw DimensionError("coordinate vector has the wrong length");
  return differential_matrix(degree) * x;
}

RationalVector FiniteGradedAlgebra::multiply(int p, const RationalVector& x, int q, const RationalVector& y) const {
  if (static_cast<int>(x.size()) != dim(p) || static_cast<int>(y.size()) != dim(q)) {
    throw DimensionError("coordinate vector has the wrong length");
  }
  RationalVector out(static_cast<std::size_t>(dim(p + q)), Rational(0));
  const auto& left = indices(p);
  const auto& right = indices(q);
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (sgn(y[j]) == 0) continue;
      auto it = mul_.find({left[i], right[j]});
      if (it == mul_.end()) continue;
      Rational c = x[i] * y[j];
      for (std::size_t r = 0; r < out.size(); ++r) out[r] += c * it->second[r];
    }
  }
  return out;
}

void FiniteGradedAlgebra::validate() const {
  auto unit = [&](int degree, int index) {
    RationalVector v(static_cast<std::size_t>(dim(degree)), Rational(0));
    v[static_cast<std::size_t>(index)] = 1;
    return v;
  };
  auto describe = [&](std::initializer_list<std::pair<int, int>> items) {
    std::string out;
    for (auto [deg, idx] : items) out += (out.empty() ? "" : ", ") + label(deg, idx);
    return out;
  };
  for (int k = min_degree_; k <= max_degree_; ++k) {
    if (!(differential_matrix(k + 1) * differential_matrix(k)).is_zero()) {
      throw DomainError("d^2 != 0 on degree " + std::to_string(k));
    }
  }
  for (const auto& [p, lp] : per_degree_) {
    for (const auto& [q, lq] : per_degree_) {
      for (int i = 0; i < static_cast<int>(lp.size()); ++i) {
        for (int j = 0; j < static_cast<int>(lq.size()); ++j) {
          auto x = unit(p, i), y = unit(q, j);
          RationalVector xy = multiply(p, x, q, y);
          RationalVector yx = multiply(q, y, p, x);
          if ((p * q) % 2 != 0) {
            for (auto& c : yx) c = -c;
          }
          if (xy != yx) throw DomainError("product not graded commutative on (" + describe({{p, i}, {q, j}}) + ")");

          // Leibniz: d(xy) = dx y + (-1)^p x dy
          RationalVector lhs = differential(p + q, xy);
          RationalVector rhs = multiply(p + 1, differential(p, x), q, y);
          RationalVector second = multiply(p, x, q + 1, differential(q, y));
          for (std::size_t r = 0; r < rhs.size(); ++r) rhs[r] += (p % 2 == 0 ? 1 : -1) * second[r];
          if (lhs != rhs) throw DomainError("Leibniz rule fails on (" + describe({{p, i}, {q, j}}) + ")");

          for (const auto& [s, ls] : per_degree_) {
            for (int l = 0; l < static_cast<int>(ls.size()); ++l) {
              auto z = unit(s, l);
              if (multiply(p + q, xy, s, z) != multiply(p, x, q + s, multiply(q, y, s, z))) {
                throw DomainError("product not associative on (" + describe({{p, i}, {q, j}, {s, l}}) + ")");
              }
            }
          }
        }
      }
    }
  }
}

CochainData FiniteGradedAlgebra::cochain_data() const {
  CochainData data;
  data.min_degree = min_degree_;
  for (int k = min_degree_; k <= max_degree_; ++k) {
    data.dims.push_back(dim(k));
    data.differentials.push_back(differential_matrix(k));
    std::vector<std::string> names;
    for (int i = 0; i < dim(k); ++i) names.push_back(label(k, i));
    data.labels.push_back(std::move(names));
  }
  data.product = [this](int p, const RationalVector& x, int q, const RationalVector& y) {
    return multiply(p, x, q, y);
  };
  return data;
}

FiniteGradedAlgebra FiniteGradedAlgebra::parse(std::string_view text) {
  std::vector<BasisElement> basis;
  std::vector<DifferentialEntry> differential;
  std::vector<ProductEntry> product;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  std::set<std::string> declared;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw DomainError("line " + std::to_string(line_no) + ": " + what);
    };
    auto known = [&](std::initializer_list<std::size_t> positions) {
      for (auto i : positions) {
        if (!declared.count(tok[i])) fail("unknown basis label '" + tok[i] + "'");
      }
    };
    try {
      if (tok[0] == "basis") {
        if (tok.size() != 3) fail("expected 'basis <label> <degree>'");
        int degree = 0;
        auto [end, ec] = std::from_chars(tok[2].data(), tok[2].data() + tok[2].size(), degree);
        if (ec != std::errc{} || end != tok[2].data() + tok[2].size()) fail("malformed degree '" + tok[2] + "'");
        if (!declared.insert(tok[1]).second) fail("duplicate basis label '" + tok[1] + "'");
        basis.push_back({tok[1], degree});
      } else if (tok[0] == "d") {
        if (tok.size() != 4) fail("expected 'd <source> <target> <rational>'");
        known({1, 2});
        differential.push_back({tok[1], tok[2], parse_rational(tok[3])});
      } else if (tok[0] == "mul") {
        if (tok.size() != 5) fail("expected 'mul <left> <right> <result> <rational>'");
        known({1, 2, 3});
        product.push_back({tok[1], tok[2], tok[3], parse_rational(tok[4])});
      } else {
        fail("unknown directive '" + tok[0] + "'");
      }
    } catch (const std::exception& e) {
      std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      fail(what);
    }
  }
  return FiniteGradedAlgebra(std::move(basis), differential, product);
}

std::string FiniteGradedAlgebra::serialize() const {
  std::string out;
  for (const auto& b : basis_) out += "basis " + b.label + " " + std::to_string(b.degree) + "\n";
  for (const auto& [k, mat] : d_) {
    for (int r = 0; r < mat.rows(); ++r) {
      for (int c = 0; c < mat.cols(); ++c) {
        if (sgn(mat.at(r, c)) == 0) continue;
        out += "d " + label(k, c) + " " + label(k + 1, r) + " " + to_string(mat.at(r, c)) + "\n";
      }
    }
  }
  for (const auto& [key, coords] : mul_) {
    int degree = basis_[static_cast<std::size_t>(key.first)].degree + basis_[static_cast<std::size_t>(key.second)].degree;
    for (std::size_t r = 0; r < coords.size(); ++r) {
      if (sgn(coords[r]) == 0) continue;
      out += "mul " + basis_[static_cast<std::size_t>(key.first)].label + " " +
             basis_[static_cast<std::size_t>(key.second)].label + " " + label(degree, static_cast<int>(r)) + " " +
             to_string(coords[r]) + "\n";
    }
  }
  return out;
}

FiniteVector::FiniteVector(AlgebraPtr algebra, int degree)
    : algebra_(std::move(algebra)), degree_(degree),
      coords_(static_cast<std::size_t>(algebra_->dim(degree)), Rational(0)) {}

FiniteVector::FiniteVector(AlgebraPtr algebra, int degree, RationalVector coords)
    : algebra_(std::move(algebra)), degree_(degree), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != algebra_->dim(degree)) {
    throw DimensionError("coordinate vector has the wrong length for degree " + std::to_string(degree));
  }
}

FiniteVector FiniteVector::basis(const AlgebraPtr& algebra, const std::string& label) {
  auto [degree, index] = algebra->locate(label);
  FiniteVector out(algebra, degree);
  out.coords_[static_cast<std::size_t>(index)] = 1;
  return out;
}

FiniteVector FiniteVector::operator+(const FiniteVector& other) const {
  if (algebra_ != other.algebra_) throw DimensionError("sum of elements of different algebras");
  if (degree_ != other.degree_) {
    if (other.is_zero()) return *this;
    if (is_zero()) return other;
    throw DimensionError("sum of elements of degrees " + std::to_string(degree_) + " and " +
                         std::to_string(other.degree_));
  }
  FiniteVector out = *this;
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] += other.coords_[i];
  return out;
}

FiniteVector FiniteVector::operator-(const FiniteVector& other) const { return *this + other.scaled(-1); }

FiniteVector FiniteVector::scaled(const Rational& c) const {
  FiniteVector out = *this;
  for (auto& x : out.coords_) x *= c;
  return out;
}

bool operator==(const FiniteVector& a, const FiniteVector& b) {
  if (a.algebra_ != b.algebra_) return false;
  if (a.is_zero() && b.is_zero()) return true;
  return a.degree_ == b.degree_ && a.coords_ == b.coords_;
}

FiniteVector differential(const FiniteVector& x) {
  return FiniteVector(x.algebra(), x.degree() + 1, x.algebra()->differential(x.degree(), x.coords()));
}

FiniteVector multiply(const FiniteVector& x, const FiniteVector& y) {
  if (x.algebra() != y.algebra()) throw DimensionError("product of elements of different algebras");
  return FiniteVector(x.algebra(), x.degree() + y.degree(),
                      x.algebra()->multiply(x.degree(), x.coords(), y.degree(), y.coords()));
}

std::string to_string(const FiniteVector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    const Rational& c = x.coords()[i];
    if (sgn(c) == 0) continue;
    bool negative = sgn(c) < 0;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    Rational mag = abs(c);
    if (mag != 1) out += to_string(mag) + " ";
    out += x.algebra()->label(x.degree(), static_cast<int>(i));
  }
  return out;
}

}  // namespace rumin
