#pragma once

// Published values for the weaving families, used by `weave verify`.

#include "weave/report.hpp"

#include <span>
#include <string_view>

namespace weave {

struct DetValueRow {
  Family family;
  std::string_view determinant;
  std::string_view v_at_w;  // pretty symbol
};

struct JonesRow {
  Family family;
  std::string_view jones;  // in the textual polynomial grammar
};

// W(p,2), p = 2..15.
std::span<const DetValueRow> published_wp2_values();
// W(3,n), n = 2..15.
std::span<const DetValueRow> published_w3n_values();
// W(p,2), p = 2..9.
std::span<const JonesRow> published_wp2_jones();

}  // namespace weave
