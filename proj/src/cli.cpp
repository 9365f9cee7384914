#include "folsem/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "folsem/generate.hpp"
#include "folsem/oracle.hpp"
#include "folsem/syntax.hpp"

namespace folsem {

namespace {

// Input text a diagnostic refers to.
struct Source {
  std::string label;
  std::string text;
};

void diagnose(std::ostream& err, const MalformedInput& e, const Source* src) {
  err << "malformed input";
  if (src) err << " in " << src->label;
  err << ": " << e.what() << '\n';
  if (!src || !e.span()) return;
  const SourceSpan& s = *e.span();
  // Show the offending line with a caret underline.
  std::size_t line_start = src->text.rfind('\n', s.start ? s.start - 1 : 0);
  line_start = (line_start == std::string::npos || s.start == 0) ? 0 : line_start + 1;
  if (line_start > s.start) line_start = 0;
  std::size_t line_end = src->text.find('\n', s.start);
  if (line_end == std::string::npos) line_end = src->text.size();
  err << "  " << src->text.substr(line_start, line_end - line_start) << '\n';
  std::size_t width = std::max<std::size_t>(
      1, std::min(s.end, line_end) > s.start ? std::min(s.end, line_end) - s.start : 1);
  err << "  " << std::string(s.start - line_start, ' ') << std::string(width, '^')
      << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::ordered_json outcome_json(const Outcome& out) {
  nlohmann::ordered_json answers = nlohmann::ordered_json::array();
  for (const auto& a : out.answers())
    answers.push_back({{"full", to_json(a.full)}, {"delta", to_json(a.delta)}});
  return {{"answers", answers}, {"error", out.has_error()}};
}

int exit_code(const Outcome& out) {
  if (out.has_error()) return kExitError;
  if (out.answers().empty()) return kExitFailure;
  return kExitAnswers;
}

struct EvalConfig {
  std::string interp;
  std::string query;
  std::string query_file;
  std::string subst = "{}";
  std::string format = "text";
};

int cmd_eval(const EvalConfig& c, std::ostream& out, std::ostream& err) {
  Source query{"query", c.query};
  if (!c.query_file.empty()) {
    query.label = c.query_file;
    query.text = read_file(c.query_file);
  }
  Source subst{"substitution", c.subst};
  const Source* current = nullptr;
  try {
    Interpretation interp = load_interpretation_file(c.interp);
    auto ctx = SyntaxContext::of(interp);
    current = &query;
    Formula phi = parse_formula(query.text, ctx);
    validate(phi, interp.signature());
    current = &subst;
    Substitution theta = parse_subst(subst.text, ctx);
    current = &query;
    Outcome result = eval_answers(phi, theta, interp);
    if (c.format == "json") {
      out << outcome_json(result).dump() << '\n';
    } else {
      for (const auto& a : result.answers())
        out << print(a.full) << "  delta " << print(a.delta) << '\n';
      if (result.has_error()) out << "error\n";
      if (result.empty()) out << "fail\n";
    }
    return exit_code(result);
  } catch (const MalformedInput& e) {
    diagnose(err, e, current);
    return kExitMalformed;
  }
}

struct ParseConfig {
  std::string query;
  std::string interp;
  std::string kind = "formula";
  std::string format = "text";
};

int cmd_parse(const ParseConfig& c, std::ostream& out, std::ostream& err) {
  Source query{"query", c.query};
  const Source* current = nullptr;
  try {
    std::optional<Interpretation> interp;
    if (!c.interp.empty()) interp = load_interpretation_file(c.interp);
    SyntaxContext ctx = interp ? SyntaxContext::of(*interp) : SyntaxContext{};
    current = &query;
    bool sexp = c.format == "sexp";
    if (c.kind == "term") {
      Term t = parse_term(query.text, ctx);
      out << (sexp ? to_sexp(t) : print(t)) << '\n';
    } else if (c.kind == "subst") {
      out << print(parse_subst(query.text, ctx)) << '\n';
    } else {
      Formula phi = parse_formula(query.text, ctx);
      out << (sexp ? to_sexp(phi) : print(phi)) << '\n';
    }
    return kExitAnswers;
  } catch (const MalformedInput& e) {
    diagnose(err, e, current);
    return kExitMalformed;
  }
}

struct CheckConfig {
  std::uint64_t count = 100;
  std::uint64_t seed = 0;
  std::string report;
  std::string interp;
  std::vector<std::string> mutations;
};

int cmd_check(const CheckConfig& c, std::ostream& out, std::ostream& err) {
  try {
    std::optional<Interpretation> interp;
    if (!c.interp.empty()) interp = load_interpretation_file(c.interp);
    SuiteOptions o;
    o.seed = c.seed;
    o.count = c.count;
    o.interp = interp ? &*interp : nullptr;
    for (const auto& m : c.mutations) {
      if (m == "case4") o.mutations.ground_mismatch_succeeds = true;
      if (m == "negation") o.mutations.negation_error_fails = true;
      if (m == "drop") o.mutations.skip_drop = true;
    }
    SuiteResult r = run_suite(o);
    for (const auto& [name, t] : r.tallies)
      out << name << ": pass " << t.pass << ", fail " << t.fail
          << ", not applicable " << t.not_applicable << '\n';
    out << (r.failures == 0 ? "all checks passed" : "FAILURES: ")
        << (r.failures == 0 ? "" : std::to_string(r.failures)) << '\n';
    if (!c.report.empty()) {
      std::ofstream f(c.report, std::ios::binary);
      if (!f) throw MalformedInput("cannot write report '" + c.report + "'");
      f << r.report.dump(2) << '\n';
    }
    return r.failures == 0 ? 0 : 1;
  } catch (const UnsupportedOracle& e) {
    err << "cannot check: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const MalformedInput& e) {
    diagnose(err, e, nullptr);
    return kExitMalformed;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Run first-order formulas as programs over an algebra."};
  app.require_subcommand(1);

  EvalConfig ec;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a query");
  eval_cmd->add_option("--interp", ec.interp,
                       "Interpretation document, or 'int' for the integers")
      ->required();
  auto* q = eval_cmd->add_option("--query", ec.query, "Query text");
  auto* qf = eval_cmd->add_option("--query-file", ec.query_file, "Query file");
  q->excludes(qf);
  qf->excludes(q);
  eval_cmd->add_option("--subst", ec.subst, "Initial substitution, e.g. {x/1}");
  eval_cmd->add_option("--format", ec.format)
      ->check(CLI::IsMember({"text", "json"}));

  ParseConfig pc;
  auto* parse_cmd = app.add_subcommand("parse", "Print the canonical form");
  parse_cmd->add_option("--query", pc.query, "Text to parse")->required();
  parse_cmd->add_option("--interp", pc.interp, "Resolve symbols against it");
  parse_cmd->add_option("--kind", pc.kind)
      ->check(CLI::IsMember({"formula", "term", "subst"}));
  parse_cmd->add_option("--format", pc.format)
      ->check(CLI::IsMember({"text", "sexp"}));

  CheckConfig cc;
  auto* check_cmd = app.add_subcommand("check", "Run the soundness suites");
  check_cmd->add_option("--count", cc.count, "Number of instances");
  check_cmd->add_option("--seed", cc.seed, "Suite seed")->required();
  check_cmd->add_option("--report", cc.report, "Write the JSON report here");
  check_cmd->add_option("--interp", cc.interp,
                        "Fixed finite interpretation instead of generated ones");
  check_cmd->add_option("--mutation", cc.mutations,
                        "Enable an evaluator fault (testing the checks)")
      ->check(CLI::IsMember({"case4", "negation", "drop"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (eval_cmd->parsed() && ec.query_file.empty() && q->count() == 0)
      throw CLI::RequiredError("--query or --query-file");
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitMalformed;
  }

  if (eval_cmd->parsed()) return cmd_eval(ec, out, err);
  if (parse_cmd->parsed()) return cmd_parse(pc, out, err);
  return cmd_check(cc, out, err);
}

}  // namespace folsem
