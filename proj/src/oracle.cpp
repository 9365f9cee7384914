#include "folsem/oracle.hpp"

#include "folsem/syntax.hpp"

namespace folsem {

TruthOracle::TruthOracle(const Interpretation& interp) : interp_(interp) {
  auto d = enumerate_domain(interp);
  if (!d)
    throw UnsupportedOracle(
        "truth oracle needs a finite domain (finite tables or a "
        "constant-only Herbrand signature)");
  domain_ = std::move(*d);
}

Value TruthOracle::value(const Term& t, const Valuation& env) const {
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = env.find(t.variable());
      if (it == env.end())
        throw std::logic_error("unassigned variable " + t.variable().name);
      return it->second;
    }
    case Term::Kind::value:
      return t.value();
    case Term::Kind::application: {
      std::vector<Value> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(value(a, env));
      return interp_.algebra().apply(t.functor(), args);
    }
  }
  throw std::logic_error("unreachable");
}

bool TruthOracle::holds(const Formula& phi, Valuation& env) const {
  const Algebra& J = interp_.algebra();
  switch (phi.kind()) {
    case Formula::Kind::truth:
      return true;
    case Formula::Kind::falsity:
      return false;
    case Formula::Kind::equation:
      return J.equal(value(phi.lhs(), env), value(phi.rhs(), env));
    case Formula::Kind::atom: {
      std::vector<Value> tuple;
      for (const auto& a : phi.args()) tuple.push_back(value(a, env));
      return interp_.contains(phi.predicate(), tuple);
    }
    case Formula::Kind::conjunction:
      return holds(phi.left(), env) && holds(phi.right(), env);
    case Formula::Kind::disjunction:
      return holds(phi.left(), env) || holds(phi.right(), env);
    case Formula::Kind::negation:
      return !holds(phi.body(), env);
    case Formula::Kind::exists: {
      const Variable& x = phi.bound();
      std::optional<Value> saved;
      if (auto it = env.find(x); it != env.end()) saved = it->second;
      bool found = false;
      for (const auto& d : domain_) {
        env.insert_or_assign(x, d);
        if (holds(phi.body(), env)) {
          found = true;
          break;
        }
      }
      if (saved)
        env.insert_or_assign(x, *saved);
      else
        env.erase(x);
      return found;
    }
  }
  return false;
}

std::set<Variable> TruthOracle::instance_variables(
    const Formula& phi, const Substitution& theta) const {
  std::set<Variable> out;
  for (const auto& x : free_variables(phi)) {
    if (const Term* t = theta.lookup(x))
      collect_variables(*t, out);
    else
      out.insert(x);
  }
  return out;
}

bool TruthOracle::holds_instance(const Formula& phi, const Substitution& theta,
                                 const Valuation& sigma) const {
  Valuation env = sigma;
  for (const auto& x : free_variables(phi))
    if (const Term* t = theta.lookup(x))
      env.insert_or_assign(x, value(*t, sigma));
  return holds(phi, env);
}

std::optional<Valuation> TruthOracle::counterexample(
    const std::set<Variable>& vars,
    const std::function<bool(const Valuation&)>& pred) const {
  std::vector<Variable> order(vars.begin(), vars.end());
  std::vector<std::size_t> digits(order.size(), 0);
  Valuation sigma;
  for (const auto& v : order) sigma.insert_or_assign(v, domain_.front());
  while (true) {
    if (!pred(sigma)) return sigma;
    // Odometer increment over domain^|vars|.
    std::size_t i = 0;
    for (; i < order.size(); ++i) {
      if (++digits[i] < domain_.size()) {
        sigma.insert_or_assign(order[i], domain_[digits[i]]);
        break;
      }
      digits[i] = 0;
      sigma.insert_or_assign(order[i], domain_.front());
    }
    if (i == order.size()) return std::nullopt;
  }
}

bool TruthOracle::truth(const Substitution& theta, const Formula& phi) const {
  return !counterexample(instance_variables(phi, theta),
                         [&](const Valuation& sigma) {
                           return holds_instance(phi, theta, sigma);
                         });
}

bool truth(const Interpretation& interp, const Substitution& theta,
           const Formula& phi) {
  return TruthOracle(interp).truth(theta, phi);
}

Formula hat(const Substitution& eta) {
  std::vector<Formula> parts;
  for (const auto& [x, h] : eta) parts.push_back(Formula::equation(Term::var(x), h));
  return conjoin(parts);
}

Formula answer_formula(const Substitution& delta) {
  std::set<Variable> generated;
  for (const auto& [x, h] : delta) {
    if (x.generated()) generated.insert(x);
    for (const auto& v : variables(h))
      if (v.generated()) generated.insert(v);
  }
  Formula f = hat(delta);
  for (auto it = generated.rbegin(); it != generated.rend(); ++it)
    f = Formula::exists(*it, f);
  return f;
}

nlohmann::ordered_json to_json(const Substitution& theta) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [x, t] : theta) j[x.name] = print(t);
  return j;
}

nlohmann::ordered_json to_json(const Valuation& sigma) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [x, v] : sigma) j[x.name] = print(v);
  return j;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not-applicable";
  }
  return "?";
}

nlohmann::ordered_json to_json(const CheckReport& report) {
  nlohmann::ordered_json j;
  j["check"] = report.check;
  j["verdict"] = to_string(report.verdict);
  j["inputs"] = report.inputs;
  j["counterexample"] = report.counterexample;
  return j;
}

namespace {

nlohmann::ordered_json inputs_json(const Interpretation& interp,
                                   const Formula& phi,
                                   const Substitution& theta) {
  nlohmann::ordered_json j;
  j["interpretation"] = to_json(interp);
  j["formula"] = print(phi);
  j["theta"] = print(theta);
  return j;
}

CheckReport start(const std::string& name, const Interpretation& interp,
                  const Formula& phi, const Substitution& theta) {
  CheckReport r;
  r.check = name;
  r.inputs = inputs_json(interp, phi, theta);
  return r;
}

Outcome run(const Interpretation& interp, const Formula& phi,
            const Substitution& theta, const Mutations& mutations) {
  FreshSupply fresh;
  return eval(phi, theta, interp, fresh, mutations);
}

nlohmann::ordered_json answer_json(const Answer& a) {
  return {{"full", to_json(a.full)}, {"delta", to_json(a.delta)}};
}

}  // namespace

CheckReport check_soundness_i(const Interpretation& interp, const Formula& phi,
                              const Substitution& theta,
                              const Mutations& mutations) {
  CheckReport r = start("soundness-i", interp, phi, theta);
  TruthOracle oracle(interp);
  Outcome out = run(interp, phi, theta, mutations);
  for (const auto& a : out.answers()) {
    auto cex = oracle.counterexample(
        oracle.instance_variables(phi, a.full),
        [&](const Valuation& s) { return oracle.holds_instance(phi, a.full, s); });
    if (cex) {
      r.verdict = Verdict::fail;
      r.counterexample = {{"answer", answer_json(a)},
                          {"falsifying_valuation", to_json(*cex)}};
      return r;
    }
  }
  if (out.empty()) {
    Formula negated = Formula::negation(phi);
    auto cex = oracle.counterexample(
        oracle.instance_variables(negated, theta), [&](const Valuation& s) {
          return oracle.holds_instance(negated, theta, s);
        });
    if (cex) {
      r.verdict = Verdict::fail;
      r.counterexample = {{"reason", "finite failure but the negation is not true"},
                          {"falsifying_valuation", to_json(*cex)}};
    }
  }
  return r;
}

CheckReport check_soundness_ii(const Interpretation& interp,
                               const Formula& phi, const Substitution& theta,
                               const Mutations& mutations) {
  CheckReport r = start("soundness-ii", interp, phi, theta);
  TruthOracle oracle(interp);
  Outcome out = run(interp, phi, theta, mutations);
  if (out.has_error()) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  std::vector<Formula> disjuncts;
  for (const auto& a : out.answers()) disjuncts.push_back(answer_formula(a.delta));
  Formula rhs = disjoin(disjuncts);

  std::set<Variable> vars = oracle.instance_variables(phi, theta);
  for (const auto& v : free_variables(rhs)) vars.insert(v);
  auto cex = oracle.counterexample(vars, [&](const Valuation& s) {
    Valuation env = s;
    return oracle.holds_instance(phi, theta, s) == oracle.holds(rhs, env);
  });
  if (cex) {
    Valuation env = *cex;
    r.verdict = Verdict::fail;
    r.counterexample = {{"answers_formula", print(rhs)},
                        {"valuation", to_json(*cex)},
                        {"instance_holds", oracle.holds_instance(phi, theta, *cex)},
                        {"answers_hold", oracle.holds(rhs, env)}};
  }
  return r;
}

CheckReport check_note_i(const Interpretation& interp, const Formula& phi,
                         const Substitution& theta,
                         const Mutations& mutations) {
  CheckReport r = start("note-i", interp, phi, theta);
  const Algebra& J = interp.algebra();
  Outcome out = run(interp, phi, theta, mutations);
  for (const auto& a : out.answers()) {
    bool factored = is_less_general(a.full, theta, J);
    bool tracked = subst_equal(compose(theta, a.delta, J), a.full, J);
    if (!factored || !tracked) {
      r.verdict = Verdict::fail;
      r.counterexample = {{"answer", answer_json(a)},
                          {"less_general", factored},
                          {"delta_composes", tracked}};
      return r;
    }
  }
  return r;
}

CheckReport check_note_ii(const Interpretation& interp, const Formula& phi,
                          const Substitution& theta,
                          const Mutations& mutations) {
  CheckReport r = start("note-ii", interp, phi, theta);
  TruthOracle oracle(interp);
  if (!oracle.instance_variables(phi, theta).empty()) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  const Algebra& J = interp.algebra();
  Outcome out = run(interp, phi, theta, mutations);
  for (const auto& a : out.answers()) {
    if (!subst_equal(a.full, theta, J)) {
      r.verdict = Verdict::fail;
      r.counterexample = {{"answer", answer_json(a)}};
      return r;
    }
  }
  return r;
}

CheckReport check_note_equality(const Interpretation& interp,
                                const Substitution& theta, const Formula& phi,
                                const HatFunction& hat_fn) {
  CheckReport r = start("note-equality", interp, phi, theta);
  TruthOracle oracle(interp);
  bool lhs = oracle.truth(theta, phi);
  Formula h = hat_fn(theta);
  std::set<Variable> vars = free_variables(h);
  for (const auto& v : free_variables(phi)) vars.insert(v);
  auto cex = oracle.counterexample(vars, [&](const Valuation& s) {
    Valuation env = s;
    if (!oracle.holds(h, env)) return true;
    env = s;
    return oracle.holds(phi, env);
  });
  bool rhs = !cex.has_value();
  if (lhs != rhs) {
    r.verdict = Verdict::fail;
    r.counterexample = {{"truth_under_theta", lhs},
                        {"implication_valid", rhs},
                        {"hat", print(h)}};
    if (cex) r.counterexample["implication_counterexample"] = to_json(*cex);
  }
  return r;
}

CheckReport check_corollary(const Interpretation& interp, const Formula& phi,
                            const Mutations& mutations) {
  Substitution empty;
  CheckReport r = start("corollary", interp, phi, empty);
  Outcome out = run(interp, phi, empty, mutations);
  if (!out.empty()) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  TruthOracle oracle(interp);
  Formula negated = Formula::negation(phi);
  auto cex = oracle.counterexample(free_variables(negated), [&](const Valuation& s) {
    Valuation env = s;
    return oracle.holds(negated, env);
  });
  if (cex) {
    r.verdict = Verdict::fail;
    r.counterexample = {{"falsifying_valuation", to_json(*cex)}};
  }
  return r;
}

namespace {

struct Renaming {
  std::map<Variable, Variable> forward;
  std::map<Variable, Variable> backward;

  bool pair(const Variable& a, const Variable& b) {
    if (a.generated() != b.generated()) return false;
    if (!a.generated()) return a == b;
    auto [f, fi] = forward.emplace(a, b);
    auto [g, gi] = backward.emplace(b, a);
    return f->second == b && g->second == a;
  }

  bool terms(const Term& a, const Term& b, const Algebra& J) {
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Term::Kind::variable:
        return pair(a.variable(), b.variable());
      case Term::Kind::value:
        return J.equal(a.value(), b.value());
      case Term::Kind::application:
        if (a.functor() != b.functor() || a.args().size() != b.args().size())
          return false;
        for (std::size_t i = 0; i < a.args().size(); ++i)
          if (!terms(a.args()[i], b.args()[i], J)) return false;
        return true;
    }
    return false;
  }

  bool substs(const Substitution& a, const Substitution& b, const Algebra& J) {
    if (a.size() != b.size()) return false;
    // Generated variables keep their relative order under a shift of the
    // supply, so bindings line up positionally.
    auto ib = b.begin();
    for (auto ia = a.begin(); ia != a.end(); ++ia, ++ib) {
      if (!pair(ia->first, ib->first)) return false;
      if (!terms(ia->second, ib->second, J)) return false;
    }
    return true;
  }
};

}  // namespace

bool equal_up_to_renaming(const Outcome& a, const Outcome& b,
                          const Algebra& algebra) {
  if (a.has_error() != b.has_error()) return false;
  if (a.answers().size() != b.answers().size()) return false;
  Renaming r;
  for (std::size_t i = 0; i < a.answers().size(); ++i) {
    if (!r.substs(a.answers()[i].full, b.answers()[i].full, algebra))
      return false;
    if (!r.substs(a.answers()[i].delta, b.answers()[i].delta, algebra))
      return false;
  }
  return true;
}

}  // namespace folsem
