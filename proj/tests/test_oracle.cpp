#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace folsem;
using namespace fixture;

TEST_SUITE("oracle") {

TEST_CASE("truth by enumeration") {
  auto I = finite_ab();
  CHECK(truth(I, Substitution{}, F("exists x p(x)", I)));
  CHECK_FALSE(truth(I, Substitution{}, F("p(x)", I)));
  CHECK(truth(I, S("{x/a}", I), F("p(x)", I)));
  CHECK(truth(I, S("{x/f(y)}", I), F("x = x", I)));
  CHECK(truth(I, Substitution{}, F("f(f(x)) = x", I)));
  CHECK_FALSE(truth(I, Substitution{}, F("exists x (f(x) = x)", I)));
}

TEST_CASE("truth is stable under irrelevant bindings") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance inst = gen_instance(seed);
    auto free = free_variables(inst.phi);
    Substitution wider = inst.theta;
    Variable v{"v"};
    if (free.count(v) || wider.contains(v)) continue;
    wider.bind(v, Term::val(enumerate_domain(inst.interp)->front()));
    CHECK(truth(inst.interp, inst.theta, inst.phi) ==
          truth(inst.interp, wider, inst.phi));
  }
}

TEST_CASE("unsupported interpretations") {
  CHECK_THROWS_AS(truth(integers(), Substitution{}, F("x = 1", integers())),
                  UnsupportedOracle);
  CHECK_THROWS_AS(truth(herbrand(), Substitution{}, F("x = a", herbrand())),
                  UnsupportedOracle);
  CHECK_NOTHROW(truth(herbrand_constants(), Substitution{},
                      F("x = a", herbrand_constants())));
}

TEST_CASE("hat") {
  auto Z = integers();
  CHECK(print(hat(S("{x/1, y/2}", Z))) == "x = 1 & y = 2");
  CHECK(hat(Substitution{}).kind() == Formula::Kind::truth);
  Substitution s;
  s.bind(Variable{"z"}, Term::app("f", {Term::var(Variable{"_y1", 1})}));
  CHECK(print(hat(s)) == "z = f(_y1)");
  CHECK(print(answer_formula(s)) == "exists _y1 (z = f(_y1))");
}

TEST_CASE("note equality and a corrupted hat") {
  auto I = finite_ab();
  auto phi = F("p(x) | y = b", I);
  auto theta = S("{x/a}", I);
  CHECK(check_note_equality(I, Substitution{}, phi).verdict == Verdict::pass);
  CHECK(check_note_equality(I, theta, phi).verdict == Verdict::pass);
  // Binding x to the wrong element makes the implication fail.
  auto corrupt = [&](const Substitution& s) {
    Substitution t;
    for (const auto& [x, h] : s) t.bind(x, evaluate(Term::app("f", {h}), I.algebra()));
    return hat(t);
  };
  auto report = check_note_equality(I, theta, phi, corrupt);
  CHECK(report.verdict == Verdict::fail);
  CHECK_FALSE(report.counterexample.is_null());
}

TEST_CASE("note equality needs an idempotent substitution") {
  // x/y, y/a applied simultaneously turns x = a into y = a, which is not
  // valid, while x = y & y = a does imply x = a.
  auto I = finite_ab();
  auto theta = S("{x/y, y/a}", I);
  auto phi = F("x = a", I);
  CHECK_FALSE(truth(I, theta, phi));
  CHECK(check_note_equality(I, theta, phi).verdict == Verdict::fail);
  CHECK(check_note_equality(I, S("{x/a, y/a}", I), phi).verdict == Verdict::pass);
}

TEST_CASE("soundness over a constant-only Herbrand signature") {
  auto I = herbrand_constants();
  auto phi = F("x = a & z = x & ~(z = b)", I);
  CHECK(check_soundness_i(I, phi, Substitution{}).verdict == Verdict::pass);
  CHECK(check_soundness_ii(I, phi, Substitution{}).verdict == Verdict::pass);
}

TEST_CASE("finite failure makes the negation true") {
  auto I = finite_ab();
  auto phi = F("p(x) & x = b", I);
  auto theta = S("{x/b}", I);
  REQUIRE(eval_answers(phi, theta, I).empty());
  CHECK(truth(I, theta, Formula::negation(phi)));
  CHECK(check_soundness_i(I, phi, theta).verdict == Verdict::pass);
  CHECK(check_soundness_ii(I, phi, theta).verdict == Verdict::pass);
  CHECK(check_corollary(I, F("p(f(a))", I)).verdict == Verdict::pass);
  CHECK(check_corollary(I, F("p(a)", I)).verdict == Verdict::not_applicable);
}

TEST_CASE("soundness-ii is skipped when error is present") {
  auto I = finite_ab();
  CHECK(check_soundness_ii(I, F("p(x)", I), Substitution{}).verdict ==
        Verdict::not_applicable);
}

TEST_CASE("quantifying only range variables is too weak") {
  // The delta binds the fresh variable in its domain; leaving it free
  // breaks the biconditional, closing over it restores it.
  auto I = finite_ab();
  auto phi = F("(exists x (z = x)) & z = a", I);
  auto out = eval_answers(phi, Substitution{}, I);
  REQUIRE(out.answers().size() == 1);
  const auto& delta = out.answers()[0].delta;
  CHECK(print(delta) == "{z/a, _y1/a}");
  TruthOracle oracle(I);
  Formula range_only = hat(delta);  // _y1 occurs in no range
  auto cex = oracle.counterexample(free_variables(range_only), [&](const Valuation& s) {
    Valuation e = s;
    return oracle.holds_instance(phi, Substitution{}, s) == oracle.holds(range_only, e);
  });
  CHECK(cex.has_value());
  CHECK(check_soundness_ii(I, phi, Substitution{}).verdict == Verdict::pass);
}

TEST_CASE("generated instances") {
  GenParams p;
  auto a = gen_instance(99, p);
  auto b = gen_instance(99, p);
  CHECK(print(a.phi) == print(b.phi));
  CHECK(print(a.theta) == print(b.theta));
  CHECK(to_json(a.interp) == to_json(b.interp));

  GenParams zero{0, 0, 0, 0, 0, 0, 0};
  for (std::uint64_t s = 0; s < 200; ++s) {
    auto k = gen_instance(s, zero).phi.kind();
    CHECK((k == Formula::Kind::equation || k == Formula::Kind::atom));
  }

  std::set<std::string> seen;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    auto inst = gen_instance(instance_seed(1, s), p);
    seen.insert(to_json(inst.interp).dump() + print(inst.phi) + print(inst.theta));
  }
  CHECK(seen.size() > 9900);
}

TEST_CASE("generated substitutions are idempotent J-substitutions") {
  for (std::uint64_t s = 0; s < 500; ++s) {
    auto inst = gen_instance(s);
    for (const auto& [x, t] : inst.theta) {
      CHECK(evaluate(t, inst.interp.algebra()) == t);
      for (const auto& v : variables(t)) CHECK_FALSE(inst.theta.contains(v));
    }
  }
}

TEST_CASE("suite report") {
  SuiteOptions o;
  o.seed = 5;
  o.count = 0;
  auto empty = run_suite(o);
  CHECK(empty.failures == 0);
  CHECK(empty.report["failures"].empty());
  o.count = 200;
  auto r1 = run_suite(o);
  auto r2 = run_suite(o);
  CHECK(r1.failures == 0);
  CHECK(r1.report.dump() == r2.report.dump());
  o.mutations.ground_mismatch_succeeds = true;
  auto bad = run_suite(o);
  CHECK(bad.failures > 0);
  REQUIRE_FALSE(bad.report["failures"].empty());
  const auto& f = bad.report["failures"][0];
  // The counterexample can be replayed from its inputs.
  auto I = load_interpretation(nlohmann::json::parse(f["inputs"]["interpretation"].dump()));
  auto phi = F(f["inputs"]["formula"].get<std::string>(), I);
  auto theta = S(f["inputs"]["theta"].get<std::string>(), I);
  auto replay = Mutations{true, false, false};
  std::string check = f["check"];
  CheckReport again =
      check == "soundness-i"    ? check_soundness_i(I, phi, theta, replay)
      : check == "soundness-ii" ? check_soundness_ii(I, phi, theta, replay)
      : check == "note-i"       ? check_note_i(I, phi, theta, replay)
      : check == "note-ii"      ? check_note_ii(I, phi, theta, replay)
      : check == "corollary"    ? check_corollary(I, phi, replay)
                                : check_note_equality(I, theta, phi);
  CHECK(again.verdict == Verdict::fail);
}

TEST_CASE("fixed interpretation suites") {
  auto I = finite_ab();
  SuiteOptions o;
  o.seed = 1;
  o.count = 100;
  o.interp = &I;
  CHECK(run_suite(o).failures == 0);
  auto Z = integers();
  o.interp = &Z;
  CHECK_THROWS_AS(run_suite(o), UnsupportedOracle);
}

}
