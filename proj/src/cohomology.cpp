#include "rumin/cohomology.hpp"

#include <algorithm>

#include "rumin/errors.hpp"

namespace rumin {

int CochainData::dim(int degree) const {
  if (degree < min_degree || degree > max_degree()) return 0;
  return dims[static_cast<std::size_t>(degree - min_degree)];
}

Matrix CochainData::d(int degree) const {
  if (degree < min_degree || degree > max_degree()) return Matrix(dim(degree + 1), 0);
  return differentials[static_cast<std::size_t>(degree - min_degree)];
}

Cohomology::Cohomology(CochainData data) : data_(std::move(data)) {
  if (data_.differentials.size() != data_.dims.size()) throw DimensionError("one differential per degree expected");
  for (int k = data_.min_degree; k <= data_.max_degree(); ++k) {
    Matrix dk = data_.d(k);
    if (dk.rows() != data_.dim(k + 1) || dk.cols() != data_.dim(k)) {
      throw DimensionError("differential out of degree " + std::to_string(k) + " has the wrong shape");
    }
    if (!(data_.d(k + 1) * dk).is_zero()) throw DomainError("d^2 != 0 out of degree " + std::to_string(k));
  }
  for (int k = data_.min_degree; k <= data_.max_degree(); ++k) {
    Degree deg;
    Matrix incoming = data_.d(k - 1);
    for (int c : incoming.pivot_columns()) deg.boundaries.push_back(incoming.column(c));
    std::vector<RationalVector> basis = deg.boundaries;
    int rank = static_cast<int>(basis.size());
    for (auto& z : data_.d(k).kernel()) {
      basis.push_back(z);
      int new_rank = Matrix::from_columns(data_.dim(k), basis).rank();
      if (new_rank > rank) {
        rank = new_rank;
        deg.representatives.push_back(std::move(z));
      } else {
        basis.pop_back();
      }
    }
    deg.combined = Matrix::from_columns(data_.dim(k), basis);
    degrees_.push_back(std::move(deg));
  }
}

const Cohomology::Degree& Cohomology::at(int degree) const {
  static const Degree empty{};
  if (degree < min_degree() || degree > max_degree()) return empty;
  return degrees_[static_cast<std::size_t>(degree - min_degree())];
}

int Cohomology::betti(int degree) const { return static_cast<int>(at(degree).representatives.size()); }

std::vector<int> Cohomology::betti_numbers() const {
  std::vector<int> out;
  for (int k = min_degree(); k <= max_degree(); ++k) out.push_back(betti(k));
  return out;
}

const std::vector<RationalVector>& Cohomology::representatives(int degree) const {
  return at(degree).representatives;
}

bool Cohomology::is_cocycle(int degree, const RationalVector& v) const {
  if (static_cast<int>(v.size()) != data_.dim(degree)) return false;
  return is_zero_vector(data_.d(degree) * v);
}

RationalVector Cohomology::classify(int degree, const RationalVector& cocycle) const {
  if (static_cast<int>(cocycle.size()) != data_.dim(degree)) {
    throw DimensionError("vector of length " + std::to_string(cocycle.size()) + " in degree " +
                         std::to_string(degree) + " of dimension " + std::to_string(data_.dim(degree)));
  }
  if (!is_cocycle(degree, cocycle)) throw DomainError("not a cocycle in degree " + std::to_string(degree));
  const Degree& deg = at(degree);
  RationalVector out;
  if (deg.representatives.empty()) return out;
  auto solution = deg.combined.solve(cocycle);
  if (!solution) throw DomainError("cocycle outside the computed cocycle space");
  out.assign(solution->begin() + static_cast<std::ptrdiff_t>(deg.boundaries.size()), solution->end());
  return out;
}

RationalVector Cohomology::lift(int degree, const RationalVector& class_coords) const {
  const Degree& deg = at(degree);
  if (class_coords.size() != deg.representatives.size()) throw DimensionError("class coordinate size mismatch");
  RationalVector out(static_cast<std::size_t>(data_.dim(degree)), Rational(0));
  for (std::size_t i = 0; i < class_coords.size(); ++i) {
    if (sgn(class_coords[i]) == 0) continue;
    for (std::size_t r = 0; r < out.size(); ++r) out[r] += class_coords[i] * deg.representatives[i][r];
  }
  return out;
}

RationalVector Cohomology::class_product(int p, const RationalVector& x, int q, const RationalVector& y) const {
  if (!data_.product) throw DomainError("cochain data carries no product");
  RationalVector chain = data_.product(p, lift(p, x), q, lift(q, y));
  if (data_.dim(p + q) == 0) return {};
  return classify(p + q, chain);
}

Cohomology cohomology(const CochainData& data) { return Cohomology(data); }

namespace {

RationalVector unit(std::size_t size, std::size_t index) {
  RationalVector v(size, Rational(0));
  v[index] = 1;
  return v;
}

std::string vector_text(const RationalVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

}  // namespace

RingIsomorphismReport check_ring_isomorphism(const CoordinateMap& f1, const Cohomology& source,
                                             const Cohomology& target) {
  RingIsomorphismReport report;
  int lo = std::min(source.min_degree(), target.min_degree());
  int hi = std::max(source.max_degree(), target.max_degree());
  bool ok = true;
  for (int k = lo; k <= hi; ++k) {
    int bs = source.betti(k), bt = target.betti(k);
    Matrix map(bt, bs);
    bool defined = true;
    for (int i = 0; i < bs; ++i) {
      RationalVector image = f1(k, source.representatives(k)[static_cast<std::size_t>(i)]);
      if (!target.is_cocycle(k, image)) {
        report.witnesses.push_back("degree " + std::to_string(k) + ": image of class " + std::to_string(i) +
                                   " is not a cocycle");
        defined = false;
        continue;
      }
      RationalVector coords = target.classify(k, image);
      for (int r = 0; r < bt; ++r) map.at(r, i) = coords[static_cast<std::size_t>(r)];
    }
    report.degree_maps.emplace(k, map);
    if (!defined) {
      ok = false;
      continue;
    }
    if (bs != bt) {
      report.witnesses.push_back("degree " + std::to_string(k) + ": Betti numbers differ (" + std::to_string(bs) +
                                 " vs " + std::to_string(bt) + ")");
      ok = false;
    } else if (bs > 0 && sgn(map.determinant()) == 0) {
      report.witnesses.push_back("degree " + std::to_string(k) + ": induced map " + to_string(map) +
                                 " is singular");
      ok = false;
    }
  }
  if (!ok) return report;

  for (int p = lo; p <= hi; ++p) {
    for (int q = lo; q <= hi; ++q) {
      int bp = source.betti(p), bq = source.betti(q);
      if (bp == 0 || bq == 0 || target.max_degree() < p + q || source.max_degree() < p + q) continue;
      const Matrix& fp = report.degree_maps.at(p);
      const Matrix& fq = report.degree_maps.at(q);
      for (int i = 0; i < bp; ++i) {
        for (int j = 0; j < bq; ++j) {
          auto ei = unit(static_cast<std::size_t>(bp), static_cast<std::size_t>(i));
          auto ej = unit(static_cast<std::size_t>(bq), static_cast<std::size_t>(j));
          RationalVector lhs = source.class_product(p, ei, q, ej);
          if (source.betti(p + q) > 0) lhs = report.degree_maps.at(p + q) * lhs;
          RationalVector rhs = target.class_product(p, fp * ei, q, fq * ej);
          if (lhs != rhs) {
            report.witnesses.push_back("[f1]([x" + std::to_string(i) + "]*[y" + std::to_string(j) + "]) in degrees (" +
                                       std::to_string(p) + "," + std::to_string(q) + "): " + vector_text(lhs) +
                                       " != " + vector_text(rhs));
            ok = false;
          }
        }
      }
    }
  }
  report.isomorphism = ok;
  return report;
}

}  // namespace rumin
