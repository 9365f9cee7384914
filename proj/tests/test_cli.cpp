#include <fstream>
#include <sstream>

#include "doctest.h"
#include "folsem/cli.hpp"
#include "support.hpp"

using namespace folsem;

namespace {
struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string finite_file() {
  std::string path = "cli_test_finite.json";
  std::ofstream(path) << R"({"domain": ["a", "b"],
    "functions": {"f": {"arity": 1, "table": {"a": "b", "b": "a"}}},
    "predicates": {"p": {"arity": 1, "tuples": [["a"]]}}})";
  return path;
}
}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval exit codes") {
  auto ok = cli({"eval", "--interp", "int", "--query", "y=z-1 & z=x+2", "--subst", "{x/1}"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("{x/1, y/2, z/3}") == 0);
  auto err = cli({"eval", "--interp", "int", "--query", "y-1 = z-1"});
  CHECK(err.code == 2);
  CHECK(err.out == "error\n");
  auto fail = cli({"eval", "--interp", "int", "--query", "1 = 2"});
  CHECK(fail.code == 1);
  CHECK(fail.out == "fail\n");
  auto bad = cli({"eval", "--interp", "int", "--query", "p(x)"});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("unknown predicate") != std::string::npos);
  CHECK(cli({"eval", "--interp", "int", "--query", "x = (1"}).code == 3);
  CHECK(cli({"eval", "--interp", "int", "--query", "x = 1", "--subst", "{x/"}).code == 3);
  CHECK(cli({"eval", "--interp", "int"}).code == 3);
  CHECK(cli({"eval", "--interp", "missing.json", "--query", "x = 1"}).code == 3);
  CHECK(cli({"frobnicate"}).code == 3);
  // Error wins over answers.
  auto mixed = cli({"eval", "--interp", finite_file(), "--query", "x = a | p(y)"});
  CHECK(mixed.code == 2);
  CHECK(mixed.out == "{x/a}  delta {x/a}\nerror\n");
}

TEST_CASE("json output is stable") {
  std::vector<std::string> args = {"eval", "--interp", "int", "--query",
                                   "y=z-1 & z=x+2", "--subst", "{x/1}", "--format", "json"};
  auto a = cli(args), b = cli(args);
  CHECK(a.out == b.out);
  CHECK(a.out ==
        "{\"answers\":[{\"full\":{\"x\":\"1\",\"y\":\"2\",\"z\":\"3\"},"
        "\"delta\":{\"y\":\"2\",\"z\":\"3\"}}],\"error\":false}\n");
}

TEST_CASE("query file") {
  std::ofstream("cli_test_query.txt") << "exists x (x = a & y = f(x))";
  auto r = cli({"eval", "--interp", finite_file(), "--query-file", "cli_test_query.txt"});
  CHECK(r.code == 0);
  CHECK(r.out == "{y/b}  delta {y/b}\n");
  CHECK(cli({"eval", "--interp", "int", "--query", "x=1", "--query-file", "cli_test_query.txt"}).code == 3);
}

TEST_CASE("parse") {
  auto r = cli({"parse", "--query", "f(x)=z & g(z)=g(f(x))"});
  CHECK(r.code == 0);
  CHECK(r.out == "f(x) = z & g(z) = g(f(x))\n");
  auto s = cli({"parse", "--query", "exists x (z = f(x))", "--format", "sexp"});
  CHECK(s.out == "(exists x (= z (f x)))\n");
  auto t = cli({"parse", "--query", "x + (((3+2)*4) - y)", "--kind", "term"});
  CHECK(t.out == "x + ((3 + 2) * 4 - y)\n");
  CHECK(cli({"parse", "--query", "{x/6-z, y/3}", "--kind", "subst"}).out == "{x/6 - z, y/3}\n");
  CHECK(cli({"parse", "--query", "p(x"}).code == 3);
}

TEST_CASE("check") {
  auto ok = cli({"check", "--count", "100", "--seed", "42", "--report", "cli_test_report.json"});
  CHECK(ok.code == 0);
  std::ifstream in("cli_test_report.json");
  auto report = nlohmann::json::parse(in);
  CHECK(report["count"] == 100);
  CHECK(report["failures_total"] == 0);
  auto zero = cli({"check", "--count", "0", "--seed", "1"});
  CHECK(zero.code == 0);
  auto mutated = cli({"check", "--count", "300", "--seed", "42", "--mutation", "case4"});
  CHECK(mutated.code == 1);
  CHECK(mutated.out.find("FAILURES") != std::string::npos);
  CHECK(cli({"check", "--count", "10"}).code == 3);
  auto unsupported = cli({"check", "--count", "10", "--seed", "1", "--interp", "int"});
  CHECK(unsupported.code == 3);
  CHECK(unsupported.err.find("finite domain") != std::string::npos);
  CHECK(cli({"check", "--count", "20", "--seed", "1", "--interp", finite_file()}).code == 0);
}

}
