#pragma once

// Cross-checks between the state-sum oracle, the recurrences, the closed
// forms and the published tables.

#include "weave/bracket.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace weave {

struct VerifyOptions {
  int max_n = 8;   // W(3,n) checked against the oracle for n <= max_n
  int max_p = 10;  // W(p,2) checked against the oracle for p <= max_p
  OracleOptions oracle;
  std::uint64_t seed = 0x5eed'2024;
  int markov_trials = 50;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // first counterexample when !passed
};

// Throws DomainError for max_n < 1 or max_p < 2, and TooLarge when the
// requested oracle comparisons do not fit the state budget.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace weave
