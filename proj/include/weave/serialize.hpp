#pragma once

// JSON forms.
//   polynomial: [[half_exponent, "coefficient"], ...] sorted by exponent
//   cyclotomic: {"value": ["c0", "c1", "c2", "c3"], "pretty": "√3"}
//   report:     flat object carrying the InvariantReport fields
// Coefficients are decimal strings so arbitrary precision survives.

#include "weave/cyclotomic.hpp"
#include "weave/laurent_poly.hpp"
#include "weave/report.hpp"

#include <json.hpp>

namespace weave {

using Json = nlohmann::ordered_json;

Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);  // throws SchemaError

Json cyclo_to_json(const CycloInt& v);
CycloInt cyclo_from_json(const Json& j);  // throws SchemaError

Json report_to_json(const InvariantReport& r);
InvariantReport report_from_json(const Json& j);  // throws SchemaError

}  // namespace weave
