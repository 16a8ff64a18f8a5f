#pragma once

#include "weave/bracket.hpp"
#include "weave/braid.hpp"
#include "weave/cyclotomic.hpp"
#include "weave/laurent_poly.hpp"

#include <optional>
#include <string>

namespace weave {

struct Family {
  int p = 2;
  int n = 1;
  friend bool operator==(const Family&, const Family&) = default;
};

// "W(p,n)", with the classical knot-table name appended when known,
// e.g. "W(3,4) = 8_18".
std::string family_label(const Family& f);
// Classical names for the small members: 4_1, 6_3^2, 8_12, 12a477, ...
std::optional<std::string> knot_name(const Family& f);

struct InvariantReport {
  std::string label;
  std::optional<Family> family;
  std::optional<BraidWord> braid;
  std::optional<LaurentPoly> jones;
  BigInt determinant = 0;
  CycloInt v_at_w;
  int mu = 1;
  unsigned n_L = 0;
  int lm_sign = 1;
  std::optional<unsigned> unknotting_lower;
  std::optional<unsigned> unknotting_upper;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

// W(3,n) and W(p,2) use the recurrences and closed forms; any other W(p,n)
// falls back to the state-sum oracle on the weaving word.
InvariantReport invariant_report(const Family& f, const OracleOptions& options = {});
InvariantReport invariant_report(const BraidWord& b, const OracleOptions& options = {});

// Report for the mirror image: t -> 1/t on the polynomial, V(w) conjugated.
InvariantReport mirrored(const InvariantReport& r);

}  // namespace weave
