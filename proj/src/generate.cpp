#include "folsem/generate.hpp"

#include <set>

#include "folsem/syntax.hpp"

namespace folsem {

namespace {

std::size_t below(std::mt19937_64& rng, std::size_t n) {
  return n == 0 ? 0 : static_cast<std::size_t>(rng() % n);
}

bool chance(std::mt19937_64& rng, unsigned percent) {
  return below(rng, 100) < percent;
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[below(rng, xs.size())];
}

std::string element_name(std::size_t i) {
  static const char* names[] = {"a", "b", "c", "d"};
  return i < 4 ? names[i] : "e" + std::to_string(i);
}

std::string symbol_name(const char* base, std::size_t i) {
  return std::string(1, static_cast<char>(base[0] + i));
}

// Every tuple of `arity` elements, lexicographic.
std::vector<std::vector<std::string>> tuples(
    const std::vector<std::string>& elems, std::size_t arity) {
  std::vector<std::vector<std::string>> out{{}};
  for (std::size_t k = 0; k < arity; ++k) {
    std::vector<std::vector<std::string>> next;
    for (const auto& t : out)
      for (const auto& e : elems) {
        auto u = t;
        u.push_back(e);
        next.push_back(std::move(u));
      }
    out = std::move(next);
  }
  return out;
}

struct Symbols {
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, std::size_t>> functions;  // arity > 0
};

Symbols split(const Signature& sig) {
  Symbols s;
  for (const auto& [name, arity] : sig.functions()) {
    if (arity == 0)
      s.constants.push_back(name);
    else
      s.functions.emplace_back(name, arity);
  }
  return s;
}

}  // namespace

const std::vector<Variable>& generator_variables() {
  static const std::vector<Variable> vars = {
      Variable{"x"}, Variable{"y"}, Variable{"z"}, Variable{"w"}};
  return vars;
}

Interpretation gen_interpretation(std::mt19937_64& rng, const GenParams& p) {
  std::size_t max_domain = std::max<std::size_t>(p.max_domain, 1);
  std::size_t size = 1;
  // Singleton domains make most checks trivial; keep them rare.
  if (max_domain >= 2 && !chance(rng, 10)) size = 2 + below(rng, max_domain - 1);
  std::vector<std::string> elems;
  for (std::size_t i = 0; i < size; ++i) elems.push_back(element_name(i));

  auto algebra = std::make_shared<FiniteAlgebra>(elems);
  std::size_t nf = below(rng, p.max_functions + 1);
  for (std::size_t i = 0; i < nf; ++i) {
    std::size_t arity = below(rng, p.max_function_arity + 1);
    FiniteAlgebra::Table table;
    for (auto& args : tuples(elems, arity)) table[args] = pick(rng, elems);
    algebra->add_function(symbol_name("f", i), arity, std::move(table));
  }

  Interpretation interp(algebra);
  std::size_t np = below(rng, p.max_predicates + 1);
  for (std::size_t i = 0; i < np; ++i) {
    std::size_t arity = below(rng, p.max_predicate_arity + 1);
    std::vector<std::vector<Value>> rel;
    for (const auto& args : tuples(elems, arity)) {
      if (!chance(rng, 50)) continue;
      std::vector<Value> row;
      for (const auto& e : args) row.push_back(Value::element(e));
      rel.push_back(std::move(row));
    }
    interp.add_predicate(symbol_name("p", i), arity, std::move(rel));
  }
  return interp;
}

Term gen_term(std::mt19937_64& rng, const Signature& sig,
              const std::vector<Variable>& vars, std::size_t depth) {
  Symbols s = split(sig);
  bool numerals = sig.integer_literals();
  bool has_leaf_constant = numerals || !s.constants.empty();
  if (depth == 0 || s.functions.empty() || chance(rng, 40)) {
    if (!vars.empty() && (!has_leaf_constant || chance(rng, 55)))
      return Term::var(pick(rng, vars));
    if (numerals && (s.constants.empty() || chance(rng, 80)))
      return Term::app(std::to_string(below(rng, 6)));
    if (!s.constants.empty()) return Term::app(pick(rng, s.constants));
    throw std::logic_error("no leaf available for random term");
  }
  const auto& [f, arity] = pick(rng, s.functions);
  std::vector<Term> args;
  for (std::size_t i = 0; i < arity; ++i)
    args.push_back(gen_term(rng, sig, vars, depth - 1));
  return Term::app(f, std::move(args));
}

namespace {

Formula gen_atom(std::mt19937_64& rng, const Signature& sig,
                 const std::vector<Variable>& vars, std::size_t term_depth) {
  const auto& preds = sig.predicates();
  if (preds.empty() || chance(rng, 55)) {
    Term s = gen_term(rng, sig, vars, below(rng, term_depth + 1));
    Term t = gen_term(rng, sig, vars, below(rng, term_depth + 1));
    return Formula::equation(s, t);
  }
  auto it = preds.begin();
  std::advance(it, below(rng, preds.size()));
  std::vector<Term> args;
  for (std::size_t i = 0; i < it->second; ++i)
    args.push_back(gen_term(rng, sig, vars, below(rng, term_depth + 1)));
  return Formula::atom(it->first, std::move(args));
}

Formula gen_formula_at(std::mt19937_64& rng, const Signature& sig,
                       const std::vector<Variable>& vars, std::size_t depth,
                       std::size_t term_depth) {
  if (depth == 0 || chance(rng, 20)) return gen_atom(rng, sig, vars, term_depth);
  auto sub = [&] { return gen_formula_at(rng, sig, vars, depth - 1, term_depth); };
  std::size_t k = below(rng, 100);
  if (k < 25) {
    Formula a = sub();
    return Formula::conj(a, sub());
  }
  if (k < 45) {
    Formula a = sub();
    return Formula::disj(a, sub());
  }
  if (k < 70) return Formula::negation(sub());
  Variable x = pick(rng, vars);
  return Formula::exists(x, sub());
}

}  // namespace

Formula gen_formula(std::mt19937_64& rng, const Signature& sig,
                    const std::vector<Variable>& vars, std::size_t depth) {
  return gen_formula_at(rng, sig, vars, depth, 2);
}

Substitution gen_subst(std::mt19937_64& rng, const Interpretation& interp,
                       const std::vector<Variable>& vars, std::size_t depth) {
  std::vector<Variable> dom, rest;
  for (const auto& v : vars) (chance(rng, 40) ? dom : rest).push_back(v);
  Substitution theta;
  for (const auto& x : dom)
    theta.bind(x, evaluate(gen_term(rng, interp.signature(), rest,
                                    below(rng, depth + 1)),
                           interp.algebra()));
  return theta;
}

namespace {

Substitution ground_cover(std::mt19937_64& rng, const Interpretation& interp,
                          const Formula& phi, std::size_t depth) {
  Substitution theta;
  for (const auto& x : free_variables(phi))
    theta.bind(x, evaluate(gen_term(rng, interp.signature(), {}, depth),
                           interp.algebra()));
  return theta;
}

}  // namespace

Instance gen_instance(std::uint64_t seed, const GenParams& params,
                      const Interpretation* fixed) {
  std::mt19937_64 rng(seed);
  Interpretation interp = fixed ? *fixed : gen_interpretation(rng, params);
  const auto& vars = generator_variables();
  std::size_t depth = below(rng, params.max_depth + 1);
  Formula phi = gen_formula_at(rng, interp.signature(), vars, depth,
                               params.max_term_depth);
  // Bias some instances toward a quantifier at the top.
  if (params.max_depth > 0 && chance(rng, 15))
    phi = Formula::exists(pick(rng, vars), phi);
  std::size_t mode = below(rng, 10);
  Substitution theta;
  if (mode < 3)
    theta = ground_cover(rng, interp, phi, params.max_term_depth);
  else if (mode < 7)
    theta = gen_subst(rng, interp, vars, params.max_term_depth);
  return Instance{std::move(interp), std::move(phi), std::move(theta)};
}

std::uint64_t instance_seed(std::uint64_t suite_seed, std::uint64_t index) {
  // splitmix64 finalizer over the pair.
  std::uint64_t z = suite_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

const std::vector<std::string>& suite_checks() {
  static const std::vector<std::string> names = {
      "soundness-i", "soundness-ii", "note-i",
      "note-ii",     "note-equality", "corollary"};
  return names;
}

const SuiteTally& SuiteResult::tally(const std::string& check) const {
  for (const auto& [name, t] : tallies)
    if (name == check) return t;
  throw std::out_of_range("no check named " + check);
}

SuiteResult run_suite(const SuiteOptions& o) {
  if (o.interp) TruthOracle probe(*o.interp);

  SuiteResult result;
  for (const auto& name : suite_checks()) result.tallies.emplace_back(name, SuiteTally{});
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();

  for (std::uint64_t i = 0; i < o.count; ++i) {
    std::uint64_t seed = instance_seed(o.seed, i);
    Instance inst = gen_instance(seed, o.params, o.interp);
    const auto& m = o.mutations;
    std::vector<CheckReport> reports = {
        check_soundness_i(inst.interp, inst.phi, inst.theta, m),
        check_soundness_ii(inst.interp, inst.phi, inst.theta, m),
        check_note_i(inst.interp, inst.phi, inst.theta, m),
        check_note_ii(inst.interp, inst.phi, inst.theta, m),
        check_note_equality(inst.interp, inst.theta, inst.phi),
        check_corollary(inst.interp, inst.phi, m)};
    for (std::size_t k = 0; k < reports.size(); ++k) {
      auto& t = result.tallies[k].second;
      switch (reports[k].verdict) {
        case Verdict::pass:
          ++t.pass;
          break;
        case Verdict::not_applicable:
          ++t.not_applicable;
          break;
        case Verdict::fail:
          ++t.fail;
          ++result.failures;
          if (failures.size() < o.max_failures_listed) {
            nlohmann::ordered_json f;
            f["index"] = i;
            f["instance_seed"] = seed;
            auto r = to_json(reports[k]);
            for (auto it = r.begin(); it != r.end(); ++it) f[it.key()] = it.value();
            failures.push_back(std::move(f));
          }
          break;
      }
    }
  }

  auto& rep = result.report;
  rep["seed"] = o.seed;
  rep["count"] = o.count;
  nlohmann::ordered_json muts = nlohmann::ordered_json::array();
  if (o.mutations.ground_mismatch_succeeds) muts.push_back("case4");
  if (o.mutations.negation_error_fails) muts.push_back("negation");
  if (o.mutations.skip_drop) muts.push_back("drop");
  rep["mutations"] = muts;
  rep["interpretation"] =
      o.interp ? nlohmann::ordered_json(to_json(*o.interp)) : nlohmann::ordered_json("generated");
  nlohmann::ordered_json summary;
  for (const auto& [name, t] : result.tallies)
    summary[name] = {{"pass", t.pass},
                     {"fail", t.fail},
                     {"not_applicable", t.not_applicable}};
  rep["summary"] = summary;
  rep["failures_total"] = result.failures;
  rep["failures"] = failures;
  return result;
}

}  // namespace folsem
