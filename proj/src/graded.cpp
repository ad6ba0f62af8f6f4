#include "rumin/graded.hpp"

#include <algorithm>
#include <numeric>

namespace rumin {

namespace {

void require_permutation(const Permutation& sigma) {
  std::vector<bool> seen(sigma.size(), false);
  for (int v : sigma) {
    if (v < 0 || v >= static_cast<int>(sigma.size()) || seen[static_cast<std::size_t>(v)]) {
      throw DomainError("not a permutation");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

int permutation_sign(const Permutation& sigma) {
  require_permutation(sigma);
  int inversions = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) inversions += sigma[i] > sigma[j];
  }
  return inversions % 2 ? -1 : 1;
}

int koszul_sign(const Permutation& sigma, std::span<const int> degrees) {
  if (sigma.size() != degrees.size()) throw DomainError("permutation and degree list differ in length");
  require_permutation(sigma);
  int exponent = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (sigma[i] > sigma[j]) exponent += (degrees[i] * degrees[j]) & 1;
    }
  }
  return exponent % 2 ? -1 : 1;
}

std::vector<Permutation> shuffles(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("shuffle sizes must be non-negative");
  std::vector<Permutation> out;
  // Choose the image set of the first p positions; the rest go to the last q in order.
  std::vector<bool> chosen(static_cast<std::size_t>(p + q), false);
  std::fill(chosen.begin(), chosen.begin() + p, true);
  do {
    Permutation sigma(static_cast<std::size_t>(p + q));
    int first = 0, second = p;
    for (int v = 0; v < p + q; ++v) {
      if (chosen[static_cast<std::size_t>(v)]) {
        sigma[static_cast<std::size_t>(first++)] = v;
      } else {
        sigma[static_cast<std::size_t>(second++)] = v;
      }
    }
    out.push_back(std::move(sigma));
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedWord> shuffle_product(int p, int q, std::span<const int> degrees) {
  if (p < 1 || q < 1) throw DomainError("shuffle sizes must be positive");
  if (static_cast<int>(degrees.size()) != p + q) {
    throw DomainError("shuffle product nu_{" + std::to_string(p) + "," + std::to_string(q) + "} needs " +
                      std::to_string(p + q) + " elements, got " + std::to_string(degrees.size()));
  }
  std::vector<SignedWord> out;
  for (const auto& sigma : shuffles(p, q)) {
    std::vector<int> word(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) word[static_cast<std::size_t>(sigma[i])] = static_cast<int>(i);
    out.push_back({permutation_sign(sigma) * koszul_sign(sigma, degrees), std::move(word)});
  }
  return out;
}

int tensor_word_sign(std::span<const int> op_degrees, std::span<const int> arities,
                     std::span<const int> element_degrees) {
  if (op_degrees.size() != arities.size()) throw DomainError("operator degree and arity lists differ in length");
  int exponent = 0;
  int left = 0;
  std::size_t offset = 0;
  for (std::size_t k = 0; k < op_degrees.size(); ++k) {
    exponent += (op_degrees[k] * left) & 1;
    for (int a = 0; a < arities[k]; ++a) {
      if (offset >= element_degrees.size()) throw DomainError("operator word longer than the tuple");
      left += element_degrees[offset++];
    }
  }
  if (offset != element_degrees.size()) throw DomainError("operator word shorter than the tuple");
  return exponent % 2 ? -1 : 1;
}

std::vector<std::vector<int>> compositions(int n) {
  std::vector<std::vector<int>> out;
  if (n < 1) return out;
  // Bit b of mask set means a cut after position b+1.
  for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int b = 0; b < n - 1; ++b) {
      if (mask & (1U << b)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.push_back(std::move(parts));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

}  // namespace rumin
