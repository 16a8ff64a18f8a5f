#include "weave/report.hpp"

#include "weave/errors.hpp"
#include "weave/weaving.hpp"

#include <map>
#include <utility>

namespace weave {

std::optional<std::string> knot_name(const Family& f) {
  static const std::map<std::pair<int, int>, std::string> names = {
      {{2, 2}, "2_1^2"},  {{3, 2}, "4_1"},   {{4, 2}, "6_3^2"},   {{5, 2}, "8_12"},
      {{7, 2}, "12a477"}, {{3, 1}, "0_1"},   {{3, 3}, "6_2^3"},   {{3, 4}, "8_18"},
      {{3, 5}, "10_123"}, {{4, 3}, "9_40"},
  };
  auto it = names.find({f.p, f.n});
  if (it == names.end()) return std::nullopt;
  return it->second;
}

std::string family_label(const Family& f) {
  std::string label = "W(" + std::to_string(f.p) + "," + std::to_string(f.n) + ")";
  if (auto name = knot_name(f)) label += " = " + *name;
  return label;
}

namespace {

void fill_bounds(InvariantReport& r) {
  auto lm = lm_decompose(r.v_at_w, static_cast<unsigned>(r.mu));
  r.n_L = lm.n_L;
  r.lm_sign = lm.sign;
  // Unknotting bounds only make sense for knots.
  if (r.mu == 1) r.unknotting_lower = r.n_L;
  if (r.unknotting_lower && r.unknotting_upper && *r.unknotting_lower > *r.unknotting_upper)
    throw std::logic_error("unknotting lower bound exceeds upper bound for " + r.label);
}

}  // namespace

InvariantReport invariant_report(const Family& f, const OracleOptions& options) {
  const BraidWord word = weaving_word(f.p, f.n);
  InvariantReport r;
  r.label = family_label(f);
  r.family = f;
  r.mu = component_count(word);

  if (f.p == 3) {
    r.jones = jones_w3n(f.n);
    r.determinant = det_w3n(f.n);
    r.v_at_w = eval_w3n_at_w(f.n);
  } else if (f.n == 2) {
    r.jones = jones_wp2(f.p);
    r.determinant = det_wp2(f.p);
    r.v_at_w = eval_wp2_at_w(f.p);
  } else {
    r.jones = jones_via_bracket(word, options);
    r.determinant = abs_if_real_integerlike(eval_at(*r.jones, kAtMinusOne));
    r.v_at_w = eval_at(*r.jones, kAtOmega);
  }

  // W(2m+1,2) unknots by m crossing changes; W(3,4) by two.
  if (f.n == 2 && f.p % 2 == 1) r.unknotting_upper = static_cast<unsigned>((f.p - 1) / 2);
  if (f.p == 3 && f.n == 4) r.unknotting_upper = 2u;

  fill_bounds(r);
  return r;
}

InvariantReport invariant_report(const BraidWord& b, const OracleOptions& options) {
  InvariantReport r;
  r.label = format_braid(b);
  r.braid = b;
  r.mu = component_count(b);
  r.jones = jones_via_bracket(b, options);
  r.determinant = abs_if_real_integerlike(eval_at(*r.jones, kAtMinusOne));
  r.v_at_w = eval_at(*r.jones, kAtOmega);
  fill_bounds(r);
  return r;
}

InvariantReport mirrored(const InvariantReport& r) {
  InvariantReport m = r;
  m.label += " (mirror)";
  if (m.braid) m.braid = mirror(*m.braid);
  if (m.jones) m.jones = m.jones->mirror();
  m.v_at_w = r.v_at_w.conj();
  fill_bounds(m);
  return m;
}

}  // namespace weave
