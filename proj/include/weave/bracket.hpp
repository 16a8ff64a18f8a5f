#pragma once

// Brute-force Kauffman bracket of a closed braid diagram, and the Jones
// polynomial derived from it. Exponential in the crossing count; used as the
// ground truth that the recurrences are checked against.
//
// Conventions: the closure of sigma_i is a positive crossing. Its A-smoothing
// keeps the strands vertical, its B-smoothing joins i to i+1 above and below;
// for sigma_i^-1 the roles swap. With delta = -A^2 - A^-2,
//   V(t) = (-A^3)^(-writhe) <D>,   A = t^(-1/4).
// Under these conventions the closure of sigma_1^2 has V = -t^(1/2) - t^(5/2).

#include "weave/braid.hpp"
#include "weave/laurent_poly.hpp"

#include <cstdint>

namespace weave {

struct OracleOptions {
  // Largest number of smoothing states (2^crossings) the oracle will visit.
  std::uint64_t state_budget = std::uint64_t{1} << 26;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct StateSumResult {
  LaurentPoly bracket;  // polynomial in A, keys are whole powers of A
  int writhe = 0;
  LaurentPoly jones;    // polynomial in s = t^(1/2)
};

// Number of states the oracle would enumerate for b.
std::uint64_t state_count(const BraidWord& b);

// Throws TooLarge if state_count(b) exceeds the budget.
StateSumResult state_sum(const BraidWord& b, const OracleOptions& options = {});

LaurentPoly kauffman_bracket(const BraidWord& b, const OracleOptions& options = {});
LaurentPoly jones_via_bracket(const BraidWord& b, const OracleOptions& options = {});

// (-A^3)^(-writhe) * bracket with A -> t^(-1/4). Throws InternalParityError on
// an odd normalized A-exponent.
LaurentPoly normalize_bracket(const LaurentPoly& bracket, int writhe);

}  // namespace weave
