#include "rumin/random.hpp"

#include "rumin/errors.hpp"

namespace rumin {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

void exponents_up_to(int nvars, int max_degree, int position, Exponent& current, int used,
                     std::vector<Exponent>& out) {
  if (position == nvars) {
    out.push_back(current);
    return;
  }
  for (int p = 0; used + p <= max_degree; ++p) {
    current.set(position, p);
    exponents_up_to(nvars, max_degree, position + 1, current, used + p, out);
  }
  current.set(position, 0);
}

Form random_form_over(SplitMix64& rng, const ContactModel& model, const std::vector<Monomial>& basis,
                      int degree, int max_poly_degree) {
  Form out(model, degree);
  for (Monomial m : basis) {
    if (!rng.coin()) continue;
    Poly coeff = random_poly(rng, model.nvars(), max_poly_degree);
    if (!coeff.is_zero()) out += Form::monomial(model, m, coeff);
  }
  return out;
}

}  // namespace

SplitMix64::result_type SplitMix64::operator()() {
  state_ += kGolden;
  return mix(state_);
}

SplitMix64 SplitMix64::split(std::uint64_t salt, std::uint64_t index) const {
  return SplitMix64(mix(mix(state_ ^ mix(salt + kGolden)) + index * kGolden));
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>((*this)());
  std::uint64_t limit = max() - max() % span;
  std::uint64_t draw;
  do {
    draw = (*this)();
  } while (draw >= limit);
  return lo + static_cast<std::int64_t>(draw % span);
}

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t salt, std::uint64_t trial) {
  return SplitMix64(seed).split(salt, trial);
}

std::uint64_t suite_salt(const char* name) {
  // FNV-1a
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const char* c = name; *c; ++c) {
    hash ^= static_cast<unsigned char>(*c);
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

Poly random_poly(SplitMix64& rng, int nvars, int max_degree) {
  std::vector<Exponent> exponents;
  Exponent current;
  exponents_up_to(nvars, max_degree, 0, current, 0, exponents);
  Poly out(nvars);
  for (const auto& e : exponents) {
    if (!rng.coin()) continue;
    std::int64_t c = rng.uniform(1, 9);
    if (rng.coin()) c = -c;
    out += Poly::monomial(nvars, e, Rational(static_cast<long>(c)));
  }
  return out;
}

Form random_form(SplitMix64& rng, const ContactModel& model, int degree, int max_poly_degree) {
  return random_form_over(rng, model, coframe_basis(model, degree), degree, max_poly_degree);
}

Form random_vertical_form(SplitMix64& rng, const ContactModel& model, int degree, int max_poly_degree) {
  return random_form_over(rng, model, vertical_basis(model, degree), degree, max_poly_degree);
}

}  // namespace rumin
