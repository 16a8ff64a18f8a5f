#include "generators.hpp"

#include "weave/errors.hpp"
#include "weave/serialize.hpp"

#include <doctest.h>

using namespace weave;
using weave::testing::random_cyclo;
using weave::testing::random_poly;

TEST_CASE("polynomial JSON") {
  const LaurentPoly hopf = LaurentPoly::monomial(-1, 1) + LaurentPoly::monomial(-1, 5);
  CHECK(poly_to_json(hopf).dump() == R"([[1,"-1"],[5,"-1"]])");
  CHECK(poly_to_json(LaurentPoly()).dump() == "[]");
  CHECK(poly_from_json(Json::parse(R"([[-4,"2"],[0,"1"]])")) ==
        LaurentPoly::monomial(2, -4) + LaurentPoly(1));

  for (int k = 0; k < 100; ++k) {
    const LaurentPoly p = random_poly(8, -40, 40, 1'000'000'000);
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_from_json(Json::parse(poly_to_json(p).dump())) == p);
  }
}

TEST_CASE("polynomial schema errors") {
  for (const char* bad : {R"({"a":1})", R"([[1]])", R"([[1,2]])", R"([["1","2"]])",
                          R"([[2,"1"],[1,"1"]])", R"([[1,"1"],[1,"2"]])", R"([[0,"0"]])",
                          R"([[0,"x"]])", R"([[0,""]])", R"([[0.5,"1"]])"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(poly_from_json(Json::parse(bad)), SchemaError);
  }
}

TEST_CASE("cyclotomic JSON") {
  const Json j = cyclo_to_json(CycloInt::sqrt3());
  CHECK(j.dump() == R"({"value":["0","2","0","-1"],"pretty":"√3"})");
  CHECK(cyclo_to_json(CycloInt::omega()).dump() == R"({"value":["0","0","1","0"]})");
  CHECK(cyclo_from_json(j) == CycloInt::sqrt3());

  for (int k = 0; k < 100; ++k) {
    const CycloInt v = random_cyclo(1'000'000);
    CHECK(cyclo_from_json(cyclo_to_json(v)) == v);
  }

  CHECK_THROWS_AS(cyclo_from_json(Json::parse(R"({"value":["1","0","0"]})")), SchemaError);
  CHECK_THROWS_AS(cyclo_from_json(Json::parse(R"(["1","0","0","0"])")), SchemaError);
  CHECK_THROWS_AS(cyclo_from_json(Json::parse(R"({"value":["1","0","0","0"],"pretty":"-1"})")),
                  SchemaError);
}

TEST_CASE("report JSON round-trips") {
  for (const Family f : {Family{3, 4}, Family{7, 2}, Family{4, 2}, Family{3, 1}, Family{12, 2},
                         Family{4, 3}}) {
    const InvariantReport r = invariant_report(f);
    CAPTURE(r.label);
    CHECK(report_from_json(report_to_json(r)) == r);
    CHECK(report_from_json(Json::parse(report_to_json(r).dump())) == r);
    const InvariantReport m = mirrored(r);
    CHECK(report_from_json(report_to_json(m)) == m);
  }
  const InvariantReport b = invariant_report(parse_braid("3; 1 1 1 2 -1 2"));
  CHECK(report_from_json(report_to_json(b)) == b);

  const Json j = report_to_json(invariant_report(Family{4, 2}));
  CHECK(j["unknotting_lower"].is_null());
  CHECK(j["determinant"] == "12");
  CHECK(j["p"] == 4);
}

TEST_CASE("report schema errors") {
  const Json good = report_to_json(invariant_report(Family{3, 4}));
  for (const char* field : {"label", "determinant", "v_at_w", "mu", "n_L", "lm_sign", "jones"}) {
    Json bad = good;
    bad.erase(field);
    CAPTURE(field);
    CHECK_THROWS_AS(report_from_json(bad), SchemaError);
  }
  Json bad = good;
  bad["lm_sign"] = 2;
  CHECK_THROWS_AS(report_from_json(bad), SchemaError);
  bad = good;
  bad["mu"] = "one";
  CHECK_THROWS_AS(report_from_json(bad), SchemaError);
  bad = good;
  bad["p"] = nullptr;
  CHECK_THROWS_AS(report_from_json(bad), SchemaError);
  bad = good;
  bad["braid"] = "3; 1 5";
  CHECK_THROWS_AS(report_from_json(bad), SchemaError);
  CHECK_THROWS_AS(report_from_json(Json::array()), SchemaError);
}
