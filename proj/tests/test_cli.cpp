#include "weave/cli.hpp"
#include "weave/serialize.hpp"

#include <doctest.h>

#include <sstream>

using namespace weave;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("jones") {
  CHECK(run({"jones", "--family", "w3n", "--n", "2"}).out == "t^-2 - t^-1 + 1 - t + t^2\n");
  CHECK(run({"jones", "--family", "wp2", "--p", "2"}).out == "-t^(1/2) - t^(5/2)\n");
  CHECK(run({"jones", "--braid", "2; 1"}).out == "1\n");
  CHECK(run({"jones", "--family", "wp2", "--p", "2", "--mirror"}).out == "-t^(-5/2) - t^(-1/2)\n");
  CHECK(run({"jones", "--braid", "3; 1 -2 1 -2"}).out == run({"jones", "--family", "wp2", "--p", "3"}).out);

  const Run json = run({"jones", "--family", "w3n", "--n", "3", "--format", "json"});
  CHECK(json.code == kExitOk);
  const Json j = Json::parse(json.out);
  CHECK(j.contains("label"));
  CHECK(poly_from_json(j["jones"]) ==
        parse_laurent("-t^-3 + 3t^-2 - 2t^-1 + 4 - 2t + 3t^2 - t^3"));
}

TEST_CASE("bracket, det and eval") {
  CHECK(run({"bracket", "--braid", "2; 1 1"}).out == "-A^-4 - A^4\n");
  CHECK(run({"det", "--family", "wp2", "--p", "14"}).out == "80782\n");
  CHECK(run({"det", "--family", "w3n", "--n", "15"}).out == "1860496\n");
  CHECK(run({"eval", "--family", "w3n", "--n", "4", "--at", "minus-one"}).out == "45\n");
  CHECK(run({"eval", "--family", "wp2", "--p", "4"}).out == "√3\n");
  CHECK(run({"eval", "--family", "wp2", "--p", "4", "--at", "omega"}).out == "√3\n");
}

TEST_CASE("invariants") {
  const Run r = run({"invariants", "--family", "w3n", "--n", "4", "--format", "json"});
  CHECK(r.code == kExitOk);
  const InvariantReport report = report_from_json(Json::parse(r.out));
  CHECK(report == invariant_report(Family{3, 4}));
  CHECK(report.unknotting_lower == 2u);

  const Run text = run({"invariants", "--family", "w3n", "--n", "8"});
  CHECK(text.code == kExitOk);
  CHECK(text.out.find("2205") != std::string::npos);
}

TEST_CASE("tables") {
  const Run md = run({"table", "--which", "1"});
  CHECK(md.code == kExitOk);
  CHECK(md.out.find("| W(14,2) | 80782 | i |") != std::string::npos);
  CHECK(md.out.find("| W(3,4) = 8_18 | 45 | 3 |") != std::string::npos);

  const Run csv = run({"table", "--which", "1", "--format", "csv"});
  CHECK(csv.out.rfind("label,p,n,determinant,v_at_w\n", 0) == 0);

  const Json j = Json::parse(run({"table", "--which", "1", "--format", "json"}).out);
  bool found = false;
  for (const Json& row : j["rows"])
    if (row["p"] == 14 && row["n"] == 2) {
      found = true;
      CHECK(row["determinant"] == "80782");
      CHECK(cyclo_from_json(row["v_at_w"]) == CycloInt::i_unit());
    }
  CHECK(found);

  const Run t2 = run({"table", "--which", "2"});
  CHECK(t2.out.find("| W(3,2) = 4_1 | t^-2 - t^-1 + 1 - t + t^2 |") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"table", "--which", "2", "--format", "json"},
        std::vector<std::string>{"invariants", "--family", "wp2", "--p", "9", "--format", "json"},
        std::vector<std::string>{"jones", "--braid", "4; 1 -2 3 1 -2 3 1 -2 3", "--threads", "3"}}) {
    CHECK(run(args).out == run(args).out);
  }
  CHECK(run({"jones", "--braid", "4; 1 -2 3 1 -2 3 1 -2 3", "--threads", "1"}).out ==
        run({"jones", "--braid", "4; 1 -2 3 1 -2 3 1 -2 3", "--threads", "4"}).out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK(run({"table", "--which", "3"}).code == kExitUsage);
  CHECK(run({"jones"}).code == kExitUsage);
  CHECK(run({"jones", "--family", "w3n"}).code == kExitUsage);
  CHECK(run({"jones", "--family", "w3n", "--n", "0"}).code == kExitUsage);
  CHECK(run({"jones", "--braid", "3; 1 4"}).code == kExitUsage);
  CHECK(run({"jones", "--family", "w3n", "--n", "2", "--format", "md"}).code == kExitUsage);
  CHECK(run({"verify", "--max-n", "0"}).code == kExitUsage);

  const Run big = run({"jones", "--braid", "3; 1 2 1 2 1 2 1 2 1 2 1 2", "--budget", "10"});
  CHECK(big.code == kExitBudget);
  CHECK_FALSE(big.err.empty());
  CHECK(run({"verify", "--max-n", "8", "--budget", "100"}).code == kExitBudget);
}

TEST_CASE("verify") {
  const Run small = run({"verify", "--max-n", "4", "--max-p", "4", "--budget", "1024"});
  CHECK(small.code == kExitOk);
  CHECK(small.out.find("FAIL") == std::string::npos);

  const Run full = run({"verify"});
  CHECK(full.code == kExitOk);
  CHECK(full.out.find("M(w)^6 + w M(w)^2 = 0: OK") != std::string::npos);
}
