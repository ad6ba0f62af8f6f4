#pragma once

// Seeded verification suites. Every suite draws trial t from its own PRNG
// stream, so reports depend only on (suite, n, trials, seed, degree bound)
// and not on the thread count.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "rumin/forms.hpp"
#include "rumin/graded.hpp"

namespace rumin {

inline constexpr const char* kVersion = "0.1.0";

struct VerifyOptions {
  std::string suite = "all";
  int n = 1;
  int trials = 100;
  std::uint64_t seed = 0;
  int max_poly_degree = 2;
  unsigned threads = 1;
  /// Relation arities for stasheff / morphism; empty means 1..5 and 1..4.
  std::vector<int> relations;
  /// Replacements for the closed-form Rumin structure (used by negative controls).
  std::shared_ptr<const GradedOpSet<Form>> m_family;
  std::shared_ptr<const GradedOpSet<Form>> f_family;
};

struct VerifyFailure {
  std::string check;
  int trial = 0;
  std::vector<std::string> inputs;
  std::string residual;
};

struct SuiteReport {
  std::string suite;
  bool passed = true;
  long checks = 0;
  /// Checks in which the quantities compared were not all zero.
  long nontrivial = 0;
  std::vector<VerifyFailure> failures;
  std::vector<std::string> notes;
  double wall_ms = 0;
};

struct VerifyReport {
  VerifyOptions options;
  bool passed = true;
  std::vector<SuiteReport> suites;
  double wall_ms = 0;

  nlohmann::json to_json(bool include_timing = true) const;
  /// One line per suite plus the failure witnesses.
  std::string summary() const;
};

/// The suite names accepted by run_verify, without "all".
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite, or every suite for "all". Throws DomainError for an unknown suite.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace rumin
