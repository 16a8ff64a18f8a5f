#include "weave/cli.hpp"

#include "weave/bracket.hpp"
#include "weave/errors.hpp"
#include "weave/report.hpp"
#include "weave/serialize.hpp"
#include "weave/verify.hpp"
#include "weave/weaving.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>

namespace weave {

namespace {

struct InputOptions {
  std::string family;
  std::optional<int> n;
  std::optional<int> p;
  std::string braid;
  bool mirror = false;
  unsigned threads = 0;
  std::uint64_t budget = OracleOptions{}.state_budget;
  std::string format = "text";

  OracleOptions oracle() const { return {budget, threads}; }
};

// Either a weaving family or a raw braid word.
struct Input {
  std::optional<Family> family;
  std::optional<BraidWord> braid;
  std::string label;

  BraidWord word() const { return braid ? *braid : weaving_word(family->p, family->n); }
};

Input resolve(const InputOptions& opt) {
  const bool have_family = !opt.family.empty();
  const bool have_braid = !opt.braid.empty();
  if (have_family == have_braid)
    throw DomainError("give exactly one of --family or --braid");

  Input in;
  if (have_braid) {
    if (opt.n || opt.p) throw DomainError("--n/--p only apply to --family");
    in.braid = parse_braid(opt.braid);
    if (opt.mirror) in.braid = mirror(*in.braid);
    in.label = format_braid(*in.braid);
    return in;
  }
  if (opt.family == "w3n") {
    if (!opt.n) throw DomainError("--family w3n needs --n");
    if (opt.p) throw DomainError("--family w3n takes --n, not --p");
    in.family = Family{3, *opt.n};
    if (*opt.n < 1) throw DomainError("W(3,n) needs n >= 1");
  } else {
    if (!opt.p) throw DomainError("--family wp2 needs --p");
    if (opt.n) throw DomainError("--family wp2 takes --p, not --n");
    in.family = Family{*opt.p, 2};
    if (*opt.p < 2) throw DomainError("W(p,2) needs p >= 2");
  }
  in.label = family_label(*in.family);
  if (opt.mirror) in.label += " (mirror)";
  return in;
}

void require_format(const InputOptions& opt) {
  if (opt.format != "text" && opt.format != "json")
    throw DomainError("this command supports --format text or json");
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

LaurentPoly family_jones(const Family& f) {
  return f.p == 3 ? jones_w3n(f.n) : jones_wp2(f.p);
}

LaurentPoly jones_of(const Input& in, const InputOptions& opt) {
  if (in.braid) return jones_via_bracket(*in.braid, opt.oracle());
  LaurentPoly v = family_jones(*in.family);
  return opt.mirror ? v.mirror() : v;
}

int cmd_jones(const InputOptions& opt, std::ostream& out) {
  require_format(opt);
  const Input in = resolve(opt);
  const LaurentPoly v = jones_of(in, opt);
  if (opt.format == "json")
    print_json(out, Json{{"label", in.label}, {"jones", poly_to_json(v)}});
  else
    out << format(v) << '\n';
  return kExitOk;
}

int cmd_bracket(const InputOptions& opt, std::ostream& out) {
  require_format(opt);
  const Input in = resolve(opt);
  BraidWord word = in.word();
  if (in.family && opt.mirror) word = mirror(word);
  const StateSumResult r = state_sum(word, opt.oracle());
  if (opt.format == "json")
    print_json(out, Json{{"label", in.label},
                         {"writhe", r.writhe},
                         {"bracket", poly_to_json(r.bracket)}});
  else
    out << format_whole(r.bracket, "A") << '\n';
  return kExitOk;
}

int cmd_det(const InputOptions& opt, std::ostream& out) {
  require_format(opt);
  const Input in = resolve(opt);
  BigInt det;
  if (in.braid)
    det = abs_if_real_integerlike(eval_at(jones_via_bracket(*in.braid, opt.oracle()), kAtMinusOne));
  else
    det = in.family->p == 3 ? det_w3n(in.family->n) : det_wp2(in.family->p);
  if (opt.format == "json")
    print_json(out, Json{{"label", in.label}, {"determinant", det.str()}});
  else
    out << det << '\n';
  return kExitOk;
}

int cmd_eval(const InputOptions& opt, const std::string& at, std::ostream& out) {
  require_format(opt);
  const Input in = resolve(opt);
  CycloInt value;
  if (at == "omega" && in.family) {
    value = in.family->p == 3 ? eval_w3n_at_w(in.family->n) : eval_wp2_at_w(in.family->p);
    if (opt.mirror) value = value.conj();
  } else {
    value = eval_at(jones_of(in, opt), at == "omega" ? kAtOmega : kAtMinusOne);
  }
  if (opt.format == "json")
    print_json(out, Json{{"label", in.label}, {"at", at}, {"value", cyclo_to_json(value)}});
  else
    out << format_pretty(value) << '\n';
  return kExitOk;
}

std::string bound_text(const std::optional<unsigned>& b) {
  return b ? std::to_string(*b) : std::string("unknown");
}

int cmd_invariants(const InputOptions& opt, std::ostream& out) {
  require_format(opt);
  const Input in = resolve(opt);
  InvariantReport r =
      in.braid ? invariant_report(*in.braid, opt.oracle()) : invariant_report(*in.family, opt.oracle());
  if (in.family && opt.mirror) r = mirrored(r);
  if (opt.format == "json") {
    print_json(out, report_to_json(r));
    return kExitOk;
  }
  out << "knot: " << r.label << '\n';
  if (r.jones) out << "jones: " << format(*r.jones) << '\n';
  out << "det: " << r.determinant << '\n'
      << "V(w): " << format_pretty(r.v_at_w) << '\n'
      << "mu: " << r.mu << '\n'
      << "n_L: " << r.n_L << '\n'
      << "unknotting_lower: " << bound_text(r.unknotting_lower) << '\n'
      << "unknotting_upper: " << bound_text(r.unknotting_upper) << '\n';
  return kExitOk;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

struct Table1Row {
  Family family;
  BigInt det;
  CycloInt value;
};

std::vector<Table1Row> table1_rows(bool w3n) {
  std::vector<Table1Row> rows;
  for (int k = 2; k <= 15; ++k) {
    if (w3n)
      rows.push_back({Family{3, k}, det_w3n(k), eval_w3n_at_w(k)});
    else
      rows.push_back({Family{k, 2}, det_wp2(k), eval_wp2_at_w(k)});
  }
  return rows;
}

void table1(const std::string& fmt, std::ostream& out) {
  const auto wp2 = table1_rows(false);
  const auto w3n = table1_rows(true);
  if (fmt == "json") {
    Json rows = Json::array();
    for (const auto* part : {&wp2, &w3n})
      for (const auto& r : *part)
        rows.push_back(Json{{"label", family_label(r.family)},
                            {"p", r.family.p},
                            {"n", r.family.n},
                            {"determinant", r.det.str()},
                            {"v_at_w", cyclo_to_json(r.value)}});
    print_json(out, Json{{"table", 1}, {"rows", std::move(rows)}});
    return;
  }
  if (fmt == "csv") {
    out << "label,p,n,determinant,v_at_w\n";
    for (const auto* part : {&wp2, &w3n})
      for (const auto& r : *part)
        out << csv_quote(family_label(r.family)) << ',' << r.family.p << ',' << r.family.n << ','
            << r.det << ',' << format_pretty(r.value) << '\n';
    return;
  }
  bool first = true;
  for (const auto* part : {&wp2, &w3n}) {
    if (!first) out << '\n';
    first = false;
    if (fmt == "md") {
      out << "| K | det(K) | V_K(w) |\n|---|---:|---:|\n";
      for (const auto& r : *part)
        out << "| " << family_label(r.family) << " | " << r.det << " | "
            << format_pretty(r.value) << " |\n";
    } else {
      for (const auto& r : *part)
        out << std::left << std::setw(20) << family_label(r.family) << std::right
            << std::setw(10) << r.det << "  " << format_pretty(r.value) << '\n';
    }
  }
}

void table2(const std::string& fmt, std::ostream& out) {
  if (fmt == "json") {
    Json rows = Json::array();
    for (int p = 2; p <= 9; ++p)
      rows.push_back(Json{{"label", family_label({p, 2})},
                          {"p", p},
                          {"n", 2},
                          {"jones", poly_to_json(jones_wp2(p))}});
    print_json(out, Json{{"table", 2}, {"rows", std::move(rows)}});
    return;
  }
  if (fmt == "csv") out << "label,p,n,jones\n";
  if (fmt == "md") out << "| K | V_K(t) |\n|---|---|\n";
  for (int p = 2; p <= 9; ++p) {
    const std::string label = family_label({p, 2});
    const std::string poly = format(jones_wp2(p));
    if (fmt == "csv")
      out << csv_quote(label) << ',' << p << ",2," << csv_quote(poly) << '\n';
    else if (fmt == "md")
      out << "| " << label << " | " << poly << " |\n";
    else
      out << std::left << std::setw(20) << label << poly << '\n';
  }
}

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const auto results = run_verification(opt);
  bool all_ok = true;
  for (const auto& r : results) {
    out << r.name << ": " << (r.passed ? "OK" : "FAILED") << '\n';
    if (!r.detail.empty()) out << "  " << r.detail << '\n';
    all_ok = all_ok && r.passed;
  }
  out << (all_ok ? "all checks passed" : "verification FAILED") << '\n';
  return all_ok ? kExitOk : kExitVerifyFailed;
}

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("--family", opt.family, "weaving family")->check(CLI::IsMember({"w3n", "wp2"}));
  cmd->add_option("--n", opt.n, "n of W(3,n)");
  cmd->add_option("--p", opt.p, "p of W(p,2)");
  cmd->add_option("--braid", opt.braid, "braid word \"k; j1 j2 ...\"");
  cmd->add_flag("--mirror", opt.mirror, "use the mirror image");
  cmd->add_option("--threads", opt.threads, "state-sum worker threads (0 = all cores)");
  cmd->add_option("--budget", opt.budget, "maximum number of state-sum states");
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "md", "csv", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jones polynomials, determinants and unknotting bounds of weaving knots", "weave"};
  app.require_subcommand(1);

  InputOptions input;
  std::string at = "omega";
  int which = 1;
  std::string table_format = "md";
  VerifyOptions verify;
  unsigned verify_threads = 0;
  std::uint64_t verify_budget = verify.oracle.state_budget;

  auto* jones = app.add_subcommand("jones", "Jones polynomial");
  auto* bracket = app.add_subcommand("bracket", "Kauffman bracket by state sum");
  auto* det = app.add_subcommand("det", "knot determinant");
  auto* eval = app.add_subcommand("eval", "Jones polynomial at exp(i pi/3) or -1");
  auto* invariants = app.add_subcommand("invariants", "full invariant report");
  for (auto* cmd : {jones, bracket, det, eval, invariants}) add_input_options(cmd, input);
  eval->add_option("--at", at, "evaluation point")
      ->check(CLI::IsMember({"omega", "minus-one"}));

  auto* table = app.add_subcommand("table", "determinant/value table or Jones table");
  table->add_option("--which", which, "1 = det and V(w), 2 = Jones polynomials")
      ->check(CLI::IsMember({1, 2}));
  table->add_option("--format", table_format, "output format")
      ->check(CLI::IsMember({"text", "md", "csv", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "run every cross-check");
  verify_cmd->add_option("--max-n", verify.max_n, "largest n for W(3,n) oracle checks");
  verify_cmd->add_option("--max-p", verify.max_p, "largest p for W(p,2) oracle checks");
  verify_cmd->add_option("--budget", verify_budget, "maximum number of state-sum states");
  verify_cmd->add_option("--threads", verify_threads, "state-sum worker threads");
  verify_cmd->add_option("--seed", verify.seed, "seed for the random Markov trials");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (jones->parsed()) return cmd_jones(input, out);
    if (bracket->parsed()) return cmd_bracket(input, out);
    if (det->parsed()) return cmd_det(input, out);
    if (eval->parsed()) return cmd_eval(input, at, out);
    if (invariants->parsed()) return cmd_invariants(input, out);
    if (table->parsed()) {
      if (which == 1)
        table1(table_format, out);
      else
        table2(table_format, out);
      return kExitOk;
    }
    verify.oracle = {verify_budget, verify_threads};
    return cmd_verify(verify, out);
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace weave
