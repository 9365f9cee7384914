#pragma once

// Shared fixtures and independent reference computations for the tests.

#include <random>
#include <string>

#include "folsem/generate.hpp"
#include "folsem/interpretation.hpp"
#include "folsem/oracle.hpp"
#include "folsem/semantics.hpp"
#include "folsem/syntax.hpp"

namespace fixture {

using namespace folsem;

/// Herbrand algebra with constants a, b, unary f, g and binary h.
inline Interpretation herbrand() {
  Signature sig;
  sig.add_function("a", 0);
  sig.add_function("b", 0);
  sig.add_function("f", 1);
  sig.add_function("g", 1);
  sig.add_function("h", 2);
  Interpretation I(std::make_shared<HerbrandAlgebra>(sig));
  I.add_predicate("p", 1, {{Value::ground({"a", {}})}});
  return I;
}

/// Constant-only Herbrand algebra {a, b, c}: enumerable.
inline Interpretation herbrand_constants() {
  Signature sig;
  for (const char* c : {"a", "b", "c"}) sig.add_function(c, 0);
  Interpretation I(std::make_shared<HerbrandAlgebra>(sig));
  I.add_predicate("p", 1, {{Value::ground({"a", {}})}});
  return I;
}

inline Interpretation integers() { return make_integer_interpretation(); }

/// D = {a, b}, f swaps, p = {(a)}.
inline Interpretation finite_ab() {
  return load_interpretation(nlohmann::json::parse(R"({
    "domain": ["a", "b"],
    "functions": {"f": {"arity": 1, "table": {"a": "b", "b": "a"}}},
    "predicates": {"p": {"arity": 1, "tuples": [["a"]]}}
  })"));
}

inline Term T(const std::string& s, const Interpretation& I) {
  return parse_term(s, SyntaxContext::of(I));
}
inline Formula F(const std::string& s, const Interpretation& I) {
  return parse_formula(s, SyntaxContext::of(I));
}
inline Substitution S(const std::string& s, const Interpretation& I) {
  return parse_subst(s, SyntaxContext::of(I));
}
inline Term J(const std::string& s, const Interpretation& I) {
  return evaluate(T(s, I), I.algebra());
}

inline Outcome run(const std::string& phi, const std::string& theta,
                   const Interpretation& I, const Mutations& m = {}) {
  FreshSupply fresh;
  return eval(F(phi, I), S(theta, I), I, fresh, m);
}

/// Value of a ground term computed node by node, without `evaluate`.
inline Value reference_value(const Term& t, const Algebra& A) {
  if (t.is_value()) return t.value();
  std::vector<Value> args;
  for (const auto& a : t.args()) args.push_back(reference_value(a, A));
  return A.apply(t.functor(), args);
}

/// Replaces each maximal ground subterm by its value, top-down.
inline Term reference_evaluate(const Term& t, const Algebra& A) {
  if (t.ground()) return Term::val(reference_value(t, A));
  if (!t.is_application()) return t;
  std::vector<Term> args;
  for (const auto& a : t.args()) args.push_back(reference_evaluate(a, A));
  return Term::app(t.functor(), std::move(args));
}

/// Integer arithmetic straight from the operator names.
inline BigInt reference_integer(const Term& t) {
  if (t.is_value()) return std::get<BigInt>(t.value().payload);
  const auto& f = t.functor();
  if (t.args().empty()) return BigInt(f);
  if (f == "neg") return -reference_integer(t.args()[0]);
  BigInt l = reference_integer(t.args()[0]);
  BigInt r = reference_integer(t.args()[1]);
  if (f == "+") return l + r;
  if (f == "-") return l - r;
  return l * r;
}

/// Arbitrary (not necessarily idempotent) J-substitution over `vars`.
inline Substitution random_subst(std::mt19937_64& rng, const Interpretation& I,
                                 const std::vector<Variable>& vars,
                                 std::size_t depth) {
  Substitution s;
  for (const auto& x : vars)
    if (rng() % 2)
      s.bind(x, evaluate(gen_term(rng, I.signature(), vars, rng() % (depth + 1)),
                         I.algebra()));
  return s;
}

}  // namespace fixture
