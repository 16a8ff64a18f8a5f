#include "weave/serialize.hpp"

#include "weave/errors.hpp"

#include <cctype>

namespace weave {

namespace {

BigInt parse_bigint(const Json& j) {
  if (!j.is_string()) throw SchemaError("expected a decimal string, got " + j.dump());
  const auto& s = j.get_ref<const std::string&>();
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw SchemaError("empty integer string");
  for (std::size_t k = start; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw SchemaError("invalid integer string \"" + s + "\"");
  return BigInt(s);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw SchemaError(std::string("field \"") + what + "\" has wrong type");
  }
}

Json optional_uint(const std::optional<unsigned>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::optional<unsigned> optional_uint_from(const Json& j, const char* key) {
  const Json& v = member(j, key);
  if (v.is_null()) return std::nullopt;
  return get_as<unsigned>(v, key);
}

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.str()}));
  return out;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("polynomial must be an array of pairs");
  LaurentPoly::TermMap terms;
  std::optional<LaurentPoly::Exponent> last;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer())
      throw SchemaError("polynomial term must be [half_exponent, \"coefficient\"]: " +
                        pair.dump());
    const auto e = pair[0].get<LaurentPoly::Exponent>();
    if (last && e <= *last) throw SchemaError("polynomial terms must be strictly increasing");
    last = e;
    BigInt c = parse_bigint(pair[1]);
    if (c == 0) throw SchemaError("polynomial term with zero coefficient");
    terms.emplace(e, std::move(c));
  }
  return LaurentPoly::from_terms(terms);
}

Json cyclo_to_json(const CycloInt& v) {
  Json out = Json::object();
  Json value = Json::array();
  for (const auto& c : v.coeffs()) value.push_back(c.str());
  out["value"] = std::move(value);
  if (auto symbol = pretty_symbol(v)) out["pretty"] = *symbol;
  return out;
}

CycloInt cyclo_from_json(const Json& j) {
  const Json& value = member(j, "value");
  if (!value.is_array() || value.size() != 4)
    throw SchemaError("cyclotomic value must have four coefficients");
  CycloInt v(parse_bigint(value[0]), parse_bigint(value[1]), parse_bigint(value[2]),
             parse_bigint(value[3]));
  if (j.contains("pretty")) {
    auto symbol = pretty_symbol(v);
    if (!symbol || !j["pretty"].is_string() || *symbol != j["pretty"].get<std::string>())
      throw SchemaError("\"pretty\" field disagrees with the value");
  }
  return v;
}

Json report_to_json(const InvariantReport& r) {
  Json out = Json::object();
  out["label"] = r.label;
  out["p"] = r.family ? Json(r.family->p) : Json(nullptr);
  out["n"] = r.family ? Json(r.family->n) : Json(nullptr);
  out["braid"] = r.braid ? Json(format_braid(*r.braid)) : Json(nullptr);
  out["jones"] = r.jones ? poly_to_json(*r.jones) : Json(nullptr);
  out["determinant"] = r.determinant.str();
  out["v_at_w"] = cyclo_to_json(r.v_at_w);
  out["mu"] = r.mu;
  out["n_L"] = r.n_L;
  out["lm_sign"] = r.lm_sign;
  out["unknotting_lower"] = optional_uint(r.unknotting_lower);
  out["unknotting_upper"] = optional_uint(r.unknotting_upper);
  return out;
}

InvariantReport report_from_json(const Json& j) {
  InvariantReport r;
  r.label = get_as<std::string>(member(j, "label"), "label");
  const Json& p = member(j, "p");
  const Json& n = member(j, "n");
  if (p.is_null() != n.is_null()) throw SchemaError("\"p\" and \"n\" must both be set or null");
  if (!p.is_null()) r.family = Family{get_as<int>(p, "p"), get_as<int>(n, "n")};
  const Json& braid = member(j, "braid");
  if (!braid.is_null()) {
    try {
      r.braid = parse_braid(get_as<std::string>(braid, "braid"));
    } catch (const ParseError& e) {
      throw SchemaError(std::string("bad braid field: ") + e.what());
    }
  }
  const Json& jones = member(j, "jones");
  if (!jones.is_null()) r.jones = poly_from_json(jones);
  r.determinant = parse_bigint(member(j, "determinant"));
  r.v_at_w = cyclo_from_json(member(j, "v_at_w"));
  r.mu = get_as<int>(member(j, "mu"), "mu");
  r.n_L = get_as<unsigned>(member(j, "n_L"), "n_L");
  r.lm_sign = get_as<int>(member(j, "lm_sign"), "lm_sign");
  r.unknotting_lower = optional_uint_from(j, "unknotting_lower");
  r.unknotting_upper = optional_uint_from(j, "unknotting_upper");
  if (r.mu < 1) throw SchemaError("\"mu\" must be positive");
  if (r.lm_sign != 1 && r.lm_sign != -1) throw SchemaError("\"lm_sign\" must be +1 or -1");
  return r;
}

}  // namespace weave
