#pragma once

// Generic machinery for A-infinity / C-infinity algebras over exact
// rational graded vector spaces: Koszul signs, shuffle products, operator
// words, Stasheff and morphism relation residuals, and the homotopy
// transfer recursion along a deformation retract.

#include <concepts>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rumin/errors.hpp"
#include "rumin/poly.hpp"

namespace rumin {

/// Homogeneous element of an exact rational graded vector space.
template <class E>
concept GradedElement = std::copyable<E> && requires(const E& a, const E& b, const Rational& c, int d) {
  { a.degree() } -> std::convertible_to<int>;
  { a + b } -> std::same_as<E>;
  { a - b } -> std::same_as<E>;
  { a.scaled(c) } -> std::same_as<E>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.zero_of_degree(d) } -> std::same_as<E>;
};

/// sigma[i] is the (0-based) image of position i.
using Permutation = std::vector<int>;

int permutation_sign(const Permutation& sigma);

/// Product over inversions i < j, sigma(i) > sigma(j), of (-1)^{deg_i deg_j}.
int koszul_sign(const Permutation& sigma, std::span<const int> degrees);

/// All (p,q)-shuffles in lexicographic order of (sigma(0), ..., sigma(p+q-1)).
std::vector<Permutation> shuffles(int p, int q);

/// One term of a formal sum of tensor words: coeff * x_{word[0]} (x) ... (x) x_{word[k-1]}.
struct SignedWord {
  int coeff;
  std::vector<int> word;

  friend bool operator==(const SignedWord&, const SignedWord&) = default;
};

/// nu_{p,q}(x_1 (x) ... (x) x_{p+q}) as sgn(sigma) * koszul * x_{sigma^{-1}(1)} (x) ...
std::vector<SignedWord> shuffle_product(int p, int q, std::span<const int> degrees);

/// Sign picked up when the operator word op_1 (x) ... (x) op_r is applied to a
/// tuple: each operator contributes (-1)^{deg(op) * (degrees of inputs to its left)}.
int tensor_word_sign(std::span<const int> op_degrees, std::span<const int> arities,
                     std::span<const int> element_degrees);

template <GradedElement E>
using Evaluator = std::function<E(std::span<const E>)>;

/// A multilinear homogeneous operator of fixed arity. `vanishes` marks an
/// operator known to be identically zero so evaluation can short-circuit.
template <GradedElement E>
struct Operator {
  Evaluator<E> eval;
  int arity = 1;
  int degree = 0;
  bool vanishes = false;

  static Operator identity() {
    return {[](std::span<const E> xs) { return xs[0]; }, 1, 0, false};
  }

  E operator()(std::span<const E> xs) const {
    if (static_cast<int>(xs.size()) != arity) {
      throw DomainError("operator of arity " + std::to_string(arity) + " applied to " + std::to_string(xs.size()) +
                        " arguments");
    }
    int out_degree = degree;
    bool any_zero = false;
    for (const auto& x : xs) {
      out_degree += x.degree();
      any_zero = any_zero || x.is_zero();
    }
    if (vanishes || any_zero) return xs[0].zero_of_degree(out_degree);
    return eval(xs);
  }
};

template <GradedElement E>
struct SignedTensor {
  int sign = 1;
  std::vector<E> factors;
};

/// Applies op_1 (x) ... (x) op_r to x_1 (x) ... (x) x_n with the Koszul rule.
template <GradedElement E>
SignedTensor<E> apply_tensor_ops(std::span<const Operator<E>> ops, std::span<const E> tuple) {
  std::vector<int> op_degrees, arities, element_degrees;
  std::size_t total = 0;
  for (const auto& op : ops) {
    op_degrees.push_back(op.degree);
    arities.push_back(op.arity);
    total += static_cast<std::size_t>(op.arity);
  }
  if (total != tuple.size()) {
    throw DomainError("operator word of total arity " + std::to_string(total) + " applied to a tuple of length " +
                      std::to_string(tuple.size()));
  }
  for (const auto& x : tuple) element_degrees.push_back(x.degree());

  SignedTensor<E> out;
  out.sign = tensor_word_sign(op_degrees, arities, element_degrees);
  std::size_t offset = 0;
  for (const auto& op : ops) {
    out.factors.push_back(op(tuple.subspan(offset, static_cast<std::size_t>(op.arity))));
    offset += static_cast<std::size_t>(op.arity);
  }
  return out;
}

/// Arity-indexed family {op_k} of homogeneous multilinear operators.
template <GradedElement E>
class GradedOpSet {
 public:
  GradedOpSet() = default;
  explicit GradedOpSet(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  void set(int arity, int degree, Evaluator<E> eval) { ops_[arity] = Operator<E>{std::move(eval), arity, degree, false}; }
  void set_vanishing(int arity, int degree) { ops_[arity] = Operator<E>{nullptr, arity, degree, true}; }

  bool has(int arity) const { return ops_.count(arity) != 0; }
  int max_arity() const { return ops_.empty() ? 0 : ops_.rbegin()->first; }

  const Operator<E>& op(int arity) const {
    auto it = ops_.find(arity);
    if (it == ops_.end()) {
      throw DomainError("operator family '" + name_ + "' has no member of arity " + std::to_string(arity));
    }
    return it->second;
  }

  E operator()(std::span<const E> xs) const { return op(static_cast<int>(xs.size()))(xs); }
  E operator()(std::initializer_list<E> xs) const { return (*this)(std::span<const E>(xs.begin(), xs.size())); }

 private:
  std::string name_;
  std::map<int, Operator<E>> ops_;
};

namespace detail {

template <GradedElement E>
int total_degree(std::span<const E> tuple) {
  int total = 0;
  for (const auto& x : tuple) total += x.degree();
  return total;
}

inline int parity_sign(int exponent) { return exponent % 2 == 0 ? 1 : -1; }

template <GradedElement E>
void require_length(std::span<const E> tuple, int n) {
  if (n < 1) throw DomainError("relation index must be positive");
  if (static_cast<int>(tuple.size()) != n) {
    throw DomainError("relation " + std::to_string(n) + " needs a tuple of length " + std::to_string(n) + ", got " +
                      std::to_string(tuple.size()));
  }
}

/// Evaluates op_outer(1^{(x)r} (x) op_inner (x) 1^{(x)t}) on the tuple, including the Koszul sign.
template <GradedElement E>
E compose_inner(const Operator<E>& outer, const Operator<E>& inner, int r, std::span<const E> tuple) {
  std::vector<Operator<E>> word;
  for (int i = 0; i < r; ++i) word.push_back(Operator<E>::identity());
  word.push_back(inner);
  int t = static_cast<int>(tuple.size()) - r - inner.arity;
  for (int i = 0; i < t; ++i) word.push_back(Operator<E>::identity());
  auto applied = apply_tensor_ops<E>(word, tuple);
  E value = outer(std::span<const E>(applied.factors));
  return applied.sign < 0 ? value.scaled(-1) : value;
}

}  // namespace detail

/// Residual sum_{r+s+t=n} (-1)^{r+st} m_{r+t+1}(1^r (x) m_s (x) 1^t) on the tuple.
template <GradedElement E>
E check_stasheff(const GradedOpSet<E>& m, int n, std::span<const E> tuple) {
  detail::require_length(tuple, n);
  for (int k = 1; k <= n; ++k) m.op(k);
  E residual = tuple[0].zero_of_degree(detail::total_degree(tuple) + 3 - n);
  for (int s = 1; s <= n; ++s) {
    for (int r = 0; r + s <= n; ++r) {
      int t = n - r - s;
      const auto& outer = m.op(r + t + 1);
      const auto& inner = m.op(s);
      if (outer.vanishes || inner.vanishes) continue;
      E term = detail::compose_inner(outer, inner, r, tuple);
      residual = detail::parity_sign(r + s * t) > 0 ? residual + term : residual - term;
    }
  }
  return residual;
}

/// All compositions (i_1, ..., i_r) of n into positive parts.
std::vector<std::vector<int>> compositions(int n);

/// Residual LHS - RHS of the A-infinity morphism relation for f : (A, m) -> (B, mbar).
template <GradedElement E>
E check_morphism(const GradedOpSet<E>& f, const GradedOpSet<E>& m, const GradedOpSet<E>& mbar, int n,
                 std::span<const E> tuple) {
  detail::require_length(tuple, n);
  for (int k = 1; k <= n; ++k) {
    f.op(k);
    m.op(k);
    mbar.op(k);
  }
  E residual = tuple[0].zero_of_degree(detail::total_degree(tuple) + 2 - n);
  for (int s = 1; s <= n; ++s) {
    for (int r = 0; r + s <= n; ++r) {
      int t = n - r - s;
      const auto& outer = f.op(r + t + 1);
      const auto& inner = m.op(s);
      if (outer.vanishes || inner.vanishes) continue;
      E term = detail::compose_inner(outer, inner, r, tuple);
      residual = detail::parity_sign(r + s * t) > 0 ? residual + term : residual - term;
    }
  }
  for (const auto& parts : compositions(n)) {
    int r = static_cast<int>(parts.size());
    const auto& outer = mbar.op(r);
    if (outer.vanishes) continue;
    std::vector<Operator<E>> word;
    bool vanishes = false;
    int ell = 0;
    for (int j = 1; j <= r; ++j) {
      const auto& fj = f.op(parts[static_cast<std::size_t>(j - 1)]);
      vanishes = vanishes || fj.vanishes;
      word.push_back(fj);
      ell += (r - j) * (parts[static_cast<std::size_t>(j - 1)] - 1);
    }
    if (vanishes) continue;
    auto applied = apply_tensor_ops<E>(word, tuple);
    E term = outer(std::span<const E>(applied.factors));
    residual = applied.sign * detail::parity_sign(ell) > 0 ? residual - term : residual + term;
  }
  return residual;
}

/// Residual op_{p+q}(nu_{p,q}(tuple)); zero for C-infinity structures and morphisms.
template <GradedElement E>
E check_shuffle_vanishing(const GradedOpSet<E>& ops, int p, int q, std::span<const E> tuple) {
  if (p < 1 || q < 1) throw DomainError("shuffle sizes must be positive");
  detail::require_length(tuple, p + q);
  const auto& op = ops.op(p + q);
  E residual = tuple[0].zero_of_degree(detail::total_degree(tuple) + op.degree);
  if (op.vanishes) return residual;
  std::vector<int> degrees;
  for (const auto& x : tuple) degrees.push_back(x.degree());
  for (const auto& term : shuffle_product(p, q, degrees)) {
    std::vector<E> word;
    for (int idx : term.word) word.push_back(tuple[static_cast<std::size_t>(idx)]);
    E value = op(std::span<const E>(word));
    residual = term.coeff > 0 ? residual + value : residual - value;
  }
  return residual;
}

/// Deformation retract (A, d) <-> (B, d) with homotopy h on A; B is a
/// subspace of A, so both sides share the element type.
template <GradedElement E>
struct RetractData {
  std::function<E(const E&)> d;
  std::function<E(const E&, const E&)> mu;
  std::function<E(const E&)> h;
  std::function<E(const E&)> pi;
  std::function<E(const E&)> i;
  bool verified = false;
};

struct RetractFailure {
  std::string identity;
  std::size_t sample = 0;
};

/// Checks pi, i cochain maps, i pi = 1 - dh - hd, pi i = 1 and deg h = -1 on
/// the samples (elements of A); B samples are their projections. Marks the
/// retract verified when every identity holds.
template <GradedElement E>
std::vector<RetractFailure> verify_retract(RetractData<E>& retract, std::span<const E> samples) {
  std::vector<RetractFailure> failures;
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const E& x = samples[k];
    E px = retract.pi(x);
    E hx = retract.h(x);
    E dx = retract.d(x);
    if (!(retract.pi(dx) == retract.d(px))) failures.push_back({"d pi = pi d", k});
    if (!(retract.i(retract.d(px)) == retract.d(retract.i(px)))) failures.push_back({"d i = i d", k});
    if (!(retract.i(px) == x - retract.d(hx) - retract.h(dx))) failures.push_back({"i pi = 1 - dh - hd", k});
    if (!(retract.pi(retract.i(px)) == px)) failures.push_back({"pi i = 1", k});
    if (!hx.is_zero() && hx.degree() != x.degree() - 1) failures.push_back({"deg h = -1", k});
  }
  retract.verified = failures.empty();
  return failures;
}

/// psi_n of the transfer recursion, with h psi_1 = -1, evaluated on a tuple
/// of A elements. Sub-results are memoized per contiguous sub-range.
template <GradedElement E>
class TransferRecursion {
 public:
  explicit TransferRecursion(const RetractData<E>& retract) : retract_(retract) {}

  E psi(std::span<const E> tuple) {
    memo_.clear();
    h_memo_.clear();
    tuple_ = tuple;
    return psi_range(0, static_cast<int>(tuple.size()));
  }

  /// h psi_n on the tuple (n = 1 gives -x).
  E h_psi(std::span<const E> tuple) {
    memo_.clear();
    h_memo_.clear();
    tuple_ = tuple;
    return h_psi_range(0, static_cast<int>(tuple.size()));
  }

 private:
  E h_psi_range(int begin, int length) {
    if (length == 1) return tuple_[static_cast<std::size_t>(begin)].scaled(-1);
    auto key = std::make_pair(begin, length);
    if (auto it = h_memo_.find(key); it != h_memo_.end()) return it->second;
    E value = retract_.h(psi_range(begin, length));
    h_memo_.emplace(key, value);
    return value;
  }

  E psi_range(int begin, int length) {
    if (length < 2) throw DomainError("psi is defined for arity >= 2");
    auto key = std::make_pair(begin, length);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    int out_degree = 2 - length;
    for (int k = 0; k < length; ++k) out_degree += tuple_[static_cast<std::size_t>(begin + k)].degree();
    E sum = tuple_[static_cast<std::size_t>(begin)].zero_of_degree(out_degree);
    std::vector<int> element_degrees;
    for (int k = 0; k < length; ++k) element_degrees.push_back(tuple_[static_cast<std::size_t>(begin + k)].degree());

    for (int s = 1; s < length; ++s) {
      int t = length - s;
      // h psi_k has degree 1 - k.
      std::vector<int> op_degrees{1 - s, 1 - t};
      std::vector<int> arities{s, t};
      int sign = tensor_word_sign(op_degrees, arities, element_degrees) * detail::parity_sign(s + 1);
      E left = h_psi_range(begin, s);
      if (left.is_zero()) continue;
      E right = h_psi_range(begin + s, t);
      if (right.is_zero()) continue;
      E product = retract_.mu(left, right);
      sum = sign > 0 ? sum + product : sum - product;
    }
    memo_.emplace(key, sum);
    return sum;
  }

  const RetractData<E>& retract_;
  std::span<const E> tuple_;
  std::map<std::pair<int, int>, E> memo_;
  std::map<std::pair<int, int>, E> h_memo_;
};

template <GradedElement E>
struct TransferResult {
  GradedOpSet<E> m;
  GradedOpSet<E> f;
};

/// Transferred structure m_1 = d, m_k = pi psi_k i^{(x)k}, and morphism
/// f_k = -h psi_k i^{(x)k} (so f_1 = i), for arities up to max_arity.
template <GradedElement E>
TransferResult<E> markl_transfer(const RetractData<E>& retract, int max_arity) {
  if (!retract.verified) throw DomainError("homotopy transfer needs a verified deformation retract");
  if (max_arity < 2) throw DomainError("homotopy transfer needs max arity >= 2");
  TransferResult<E> out{GradedOpSet<E>("m"), GradedOpSet<E>("f")};
  auto included = [retract](std::span<const E> xs) {
    std::vector<E> image;
    for (const auto& x : xs) image.push_back(retract.i(x));
    return image;
  };
  out.m.set(1, 1, [retract](std::span<const E> xs) { return retract.d(xs[0]); });
  out.f.set(1, 0, [retract](std::span<const E> xs) { return retract.i(xs[0]); });
  for (int k = 2; k <= max_arity; ++k) {
    out.m.set(k, 2 - k, [retract, included](std::span<const E> xs) {
      auto image = included(xs);
      TransferRecursion<E> rec(retract);
      return retract.pi(rec.psi(image));
    });
    out.f.set(k, 1 - k, [retract, included](std::span<const E> xs) {
      auto image = included(xs);
      TransferRecursion<E> rec(retract);
      return retract.h(rec.psi(image)).scaled(-1);
    });
  }
  return out;
}

}  // namespace rumin
