#pragma once

// Seeded generators for randomized property checks.
//
// The PRNG is SplitMix64 (Steele, Lea, Flood 2014): a 64-bit counter
// advanced by the golden-ratio increment and passed through a fixed
// mixing function. Streams are split by hashing (seed, salt, index), so
// trial t of a suite always sees the same numbers regardless of how many
// trials run before it or on which thread.

#include <cstdint>

#include "rumin/forms.hpp"

namespace rumin {

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()();

  /// Independent stream for (salt, index) derived from this generator's seed.
  SplitMix64 split(std::uint64_t salt, std::uint64_t index) const;

  /// Uniform integer in [lo, hi], unbiased.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return ((*this)() >> 63) != 0; }

 private:
  std::uint64_t state_;
};

/// Stream for trial `trial` of the suite identified by `salt`.
SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t salt, std::uint64_t trial);
/// Stable 64-bit salt for a suite name.
std::uint64_t suite_salt(const char* name);

/// Each monomial of total degree <= max_degree is kept with probability 1/2,
/// with a nonzero integer coefficient in [-9, 9].
Poly random_poly(SplitMix64& rng, int nvars, int max_degree);

/// Each coframe monomial of the degree is kept with probability 1/2 and
/// given a random polynomial coefficient.
Form random_form(SplitMix64& rng, const ContactModel& model, int degree, int max_poly_degree);

/// Random form restricted to monomials containing theta.
Form random_vertical_form(SplitMix64& rng, const ContactModel& model, int degree, int max_poly_degree);

}  // namespace rumin
