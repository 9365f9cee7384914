// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>

#include "support.hpp"

using namespace folsem;
using namespace fixture;

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr std::uint64_t kInstances = 1000;
constexpr double kGoldenBudget = 1.0;
constexpr double kSuiteBudget = 60.0;
constexpr double kLawBudget = 30.0;
constexpr int kLawCases = 1000;
constexpr int kFreshCases = 200;
constexpr int kRoundTripCases = 1000;

struct Result {
  bool passed;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& name, const std::function<Result()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!r.passed) ++failures;
  std::cout << (r.passed ? "PASS" : "FAIL") << "  " << id << ". " << name << " ("
            << r.detail << "; " << secs << " s)" << std::endl;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Result goldens() {
  auto t0 = std::chrono::steady_clock::now();
  auto Z = integers();
  auto H = herbrand();
  const auto& A = Z.algebra();
  std::vector<std::pair<std::string, std::string>> cases;  // actual, expected
  auto s = T("x + (((3+2)*4) - y)", Z);
  auto theta = S("{x/6-z, y/3}", Z);
  cases.emplace_back(print(evaluate(s, A)), "x + (20 - y)");
  cases.emplace_back(print(apply(s, theta)), "6 - z + ((3 + 2) * 4 - 3)");
  cases.emplace_back(print(evaluate(apply(s, theta), A)), "6 - z + 17");
  cases.emplace_back(print(compose(theta, S("{z/4}", Z), A)), "{x/2, y/3, z/4}");
  cases.emplace_back(print(run("f(x)=z & g(z)=g(f(x))", "{x/g(y)}", H)),
                     "{x/g(y), z/f(g(y))}");
  cases.emplace_back(print(run("g(f(x)) = g(z)", "{x/g(y)}", H)), "error");
  cases.emplace_back(print(run("y = z-1 & z = x+2", "{x/1}", Z)), "{x/1, y/2, z/3}");
  cases.emplace_back(print(run("y+1 = z-1", "{y/1, z/3}", Z)), "{y/1, z/3}");
  cases.emplace_back(print(run("x*(y+1) = (v+1)*(z-1)", "{x/v+1, y/1, z/3}", Z)),
                     "{x/v + 1, y/1, z/3}");
  cases.emplace_back(print(run("y-1 = z-1", "{}", Z)), "error");
  cases.emplace_back(print(run("exists x (z = f(x))", "{}", H)), "{z/f(_y1)}");
  cases.emplace_back(print(run("x+x = 2*x", "{}", Z)), "error");
  cases.emplace_back(print(run("x+1 = x", "{}", Z)), "error");
  std::size_t ok = 0;
  std::string first_bad;
  for (const auto& [got, want] : cases) {
    if (got == want)
      ++ok;
    else if (first_bad.empty())
      first_bad = "got '" + got + "' want '" + want + "'";
  }
  double secs = elapsed_since(t0);
  std::string d = std::to_string(ok) + "/" + std::to_string(cases.size()) + " exact";
  if (!first_bad.empty()) d += ", " + first_bad;
  return {ok == cases.size() && secs < kGoldenBudget, d};
}

SuiteResult suite;
double suite_secs = 0;

Result soundness() {
  auto t0 = std::chrono::steady_clock::now();
  SuiteOptions o;
  o.seed = kSeed;
  o.count = kInstances;
  suite = run_suite(o);
  suite_secs = elapsed_since(t0);
  const auto& i = suite.tally("soundness-i");
  const auto& ii = suite.tally("soundness-ii");
  bool ok = i.fail == 0 && i.pass == kInstances && ii.fail == 0 &&
            ii.pass + ii.not_applicable == kInstances && suite_secs < kSuiteBudget;
  return {ok, "soundness-i " + std::to_string(i.pass) + "/" + std::to_string(kInstances) +
                  ", soundness-ii " + std::to_string(ii.pass) + "/" +
                  std::to_string(ii.pass + ii.fail) + " error-free"};
}

Result notes() {
  bool ok = suite_secs < kSuiteBudget;
  std::string d;
  for (const char* name : {"note-i", "note-ii", "note-equality", "corollary"}) {
    const auto& t = suite.tally(name);
    ok = ok && t.fail == 0 && t.pass + t.not_applicable == kInstances;
    if (!d.empty()) d += ", ";
    d += std::string(name) + " " + std::to_string(t.pass) + " pass/" +
         std::to_string(t.fail) + " fail/" + std::to_string(t.not_applicable) + " n/a";
  }
  return {ok, d + "; measured in the criterion 2 run, " + std::to_string(suite_secs) + " s"};
}

Result algebra_laws() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSeed);
  std::vector<Interpretation> algebras = {integers(), herbrand(), finite_ab()};
  const auto& vars = generator_variables();
  int idem = 0, herbrand_id = 0, pointwise = 0, identity = 0, commute = 0;
  auto H = herbrand();
  for (int i = 0; i < kLawCases; ++i) {
    const auto& I = algebras[i % algebras.size()];
    const auto& A = I.algebra();
    Term t = gen_term(rng, I.signature(), vars, 4);
    Term e = evaluate(t, A);
    idem += evaluate(e, A) == e && e == reference_evaluate(t, A);

    Term h = gen_term(rng, H.signature(), vars, 4);
    herbrand_id += unfold_ground_values(evaluate(h, H.algebra())) == h;

    auto theta = random_subst(rng, I, vars, 2);
    auto eta = random_subst(rng, I, vars, 2);
    auto te = compose(theta, eta, A);
    bool pw = true;
    for (const auto& x : vars)
      pw = pw && jterm_equal(apply(Term::var(x), te),
                             evaluate(apply(apply(Term::var(x), theta), eta), A), A);
    pointwise += pw;

    identity += subst_equal(compose(theta, Substitution{}, A), theta, A) &&
                subst_equal(compose(Substitution{}, theta, A), theta, A);

    Variable y{"_y1", 1};
    auto eta_y = eta;
    eta_y.bind(y, evaluate(gen_term(rng, I.signature(), vars, 2), A));
    commute += subst_equal(drop(y, compose(theta, eta_y, A)),
                           compose(theta, drop(y, eta_y), A), A);
  }
  double secs = elapsed_since(t0);
  bool ok = idem == kLawCases && herbrand_id == kLawCases && pointwise == kLawCases &&
            identity == kLawCases && commute == kLawCases && secs < kLawBudget;
  auto n = [](int k) { return std::to_string(k); };
  return {ok, "idempotence " + n(idem) + ", herbrand identity " + n(herbrand_id) +
                  ", composition " + n(pointwise) + ", epsilon " + n(identity) +
                  ", drop " + n(commute) + " of " + n(kLawCases)};
}

bool has_exists(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::exists:
      return true;
    case Formula::Kind::negation:
      return has_exists(f.body());
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      return has_exists(f.left()) || has_exists(f.right());
    default:
      return false;
  }
}

Result fresh_names() {
  int tried = 0, ok = 0;
  for (std::uint64_t s = 0; tried < kFreshCases; ++s) {
    Instance inst = gen_instance(instance_seed(kSeed + 1, s));
    if (!has_exists(inst.phi)) continue;
    ++tried;
    FreshSupply a(1), b(100000);
    ok += equal_up_to_renaming(eval(inst.phi, inst.theta, inst.interp, a),
                               eval(inst.phi, inst.theta, inst.interp, b),
                               inst.interp.algebra());
  }
  return {ok == kFreshCases, std::to_string(ok) + "/" + std::to_string(kFreshCases)};
}

Result round_trip() {
  std::mt19937_64 rng(kSeed);
  std::vector<Interpretation> algebras = {integers(), herbrand(), finite_ab()};
  const auto& vars = generator_variables();
  int terms = 0, formulas = 0, substs = 0;
  for (int i = 0; i < kRoundTripCases; ++i) {
    const auto& I = algebras[i % algebras.size()];
    auto ctx = SyntaxContext::of(I);
    Term t = gen_term(rng, I.signature(), vars, 4);
    terms += parse_term(print(t), ctx) == t;
    Formula phi = gen_formula(rng, I.signature(), vars, 5);
    formulas += parse_formula(print(phi), ctx) == phi;
    Substitution th = random_subst(rng, I, vars, 2);
    substs += parse_subst(print(th), ctx) == th;
  }
  bool ok = terms == kRoundTripCases && formulas == kRoundTripCases &&
            substs == kRoundTripCases;
  auto n = [](int k) { return std::to_string(k); };
  return {ok, "terms " + n(terms) + ", formulas " + n(formulas) + ", substitutions " +
                  n(substs) + " of " + n(kRoundTripCases)};
}

Result mutations() {
  std::vector<std::pair<std::string, Mutations>> ms = {
      {"case4", {true, false, false}},
      {"negation", {false, true, false}},
      {"drop", {false, false, true}}};
  bool ok = true;
  std::string d;
  for (const auto& [name, m] : ms) {
    SuiteOptions o;
    o.seed = kSeed;
    o.count = kInstances;
    o.mutations = m;
    auto r = run_suite(o);
    ok = ok && r.failures > 0;
    if (!d.empty()) d += ", ";
    d += name + " " + std::to_string(r.failures) + " failures";
  }
  return {ok, d};
}

}  // namespace

int main() {
  report(1, "worked-example goldens", goldens);
  report(2, "soundness suite", soundness);
  report(3, "notes suite", notes);
  report(4, "algebra laws", algebra_laws);
  report(5, "fresh-name independence", fresh_names);
  report(6, "syntax round-trip", round_trip);
  report(7, "mutation sensitivity", mutations);
  return failures == 0 ? 0 : 1;
}
