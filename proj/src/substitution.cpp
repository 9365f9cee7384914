#include "folsem/substitution.hpp"

#include <functional>

namespace folsem {

Substitution::Substitution(
    std::initializer_list<std::pair<const Variable, Term>> init) {
  for (const auto& [x, t] : init) bind(x, t);
}

void Substitution::bind(const Variable& x, Term t) {
  if (t.is_variable() && t.variable() == x) {
    bindings_.erase(x);
    return;
  }
  bindings_.insert_or_assign(x, std::move(t));
}

const Term* Substitution::lookup(const Variable& x) const {
  auto it = bindings_.find(x);
  return it == bindings_.end() ? nullptr : &it->second;
}

std::set<Variable> Substitution::range_variables() const {
  std::set<Variable> out;
  for (const auto& [x, t] : bindings_) collect_variables(t, out);
  return out;
}

Term apply(const Term& t, const Substitution& theta) {
  if (t.ground() || theta.empty()) return t;
  if (t.is_variable()) {
    const Term* bound = theta.lookup(t.variable());
    return bound ? *bound : t;
  }
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(apply(a, theta));
  return Term::app(t.functor(), std::move(args), t.span());
}

Substitution compose(const Substitution& theta, const Substitution& eta,
                     const Algebra& algebra) {
  Substitution out;
  for (const auto& [x, t] : theta) out.bind(x, evaluate(apply(t, eta), algebra));
  for (const auto& [x, t] : eta)
    if (!theta.contains(x)) out.bind(x, evaluate(t, algebra));
  return out;
}

Substitution drop(const Variable& x, const Substitution& theta) {
  if (!theta.contains(x)) return theta;
  Substitution out;
  for (const auto& [y, t] : theta)
    if (!(y == x)) out.bind(y, t);
  return out;
}

bool subst_equal(const Substitution& a, const Substitution& b,
                 const Algebra& algebra) {
  if (a.size() != b.size()) return false;
  auto ib = b.begin();
  for (auto ia = a.begin(); ia != a.end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    if (!jterm_equal(ia->second, ib->second, algebra)) return false;
  }
  return true;
}

namespace {

struct Matcher {
  const Algebra& algebra;
  std::map<Variable, Term> bound;
  // Non-ground pattern subterms that must evaluate to a given value.
  std::vector<std::pair<Term, Value>> deferred;

  bool match(const Term& pattern, const Term& target) {
    switch (pattern.kind()) {
      case Term::Kind::variable: {
        auto [it, inserted] = bound.emplace(pattern.variable(), target);
        return inserted || jterm_equal(it->second, target, algebra);
      }
      case Term::Kind::value:
        return target.is_value() &&
               algebra.equal(pattern.value(), target.value());
      case Term::Kind::application:
        if (target.is_value()) {
          if (pattern.ground())
            return algebra.equal(evaluate(pattern, algebra).value(),
                                 target.value());
          deferred.emplace_back(pattern, target.value());
          return true;
        }
        if (!target.is_application() || target.functor() != pattern.functor() ||
            target.args().size() != pattern.args().size())
          return false;
        for (std::size_t i = 0; i < pattern.args().size(); ++i)
          if (!match(pattern.args()[i], target.args()[i])) return false;
        return true;
    }
    return false;
  }
};

Substitution to_substitution(const std::map<Variable, Term>& bound) {
  Substitution out;
  for (const auto& [x, t] : bound) out.bind(x, t);
  return out;
}

}  // namespace

std::optional<Substitution> factor(const Substitution& eta,
                                   const Substitution& theta,
                                   const Algebra& algebra) {
  std::set<Variable> domain;
  for (const auto& [x, t] : theta) domain.insert(x);
  for (const auto& [x, t] : eta) domain.insert(x);

  Matcher m{algebra, {}, {}};
  for (const auto& x : domain) {
    const Term* p = theta.lookup(x);
    const Term* q = eta.lookup(x);
    Term pattern = p ? *p : Term::var(x);
    Term target = q ? *q : Term::var(x);
    if (!m.match(pattern, target)) return std::nullopt;
  }

  auto accept = [&](const std::map<Variable, Term>& bound)
      -> std::optional<Substitution> {
    for (const auto& [pattern, value] : m.deferred) {
      Term t = evaluate(apply(pattern, to_substitution(bound)), algebra);
      if (!t.is_value() || !algebra.equal(t.value(), value)) return std::nullopt;
    }
    Substitution gamma = to_substitution(bound);
    if (subst_equal(compose(theta, gamma, algebra), eta, algebra)) return gamma;
    return std::nullopt;
  };

  std::vector<Variable> open;
  {
    std::set<Variable> seen;
    for (const auto& [pattern, value] : m.deferred)
      for (const auto& v : variables(pattern))
        if (!m.bound.count(v) && seen.insert(v).second) open.push_back(v);
  }
  if (open.empty()) return accept(m.bound);

  auto domain_values = algebra.enumerate();
  if (!domain_values) return std::nullopt;

  std::map<Variable, Term> bound = m.bound;
  std::function<std::optional<Substitution>(std::size_t)> search =
      [&](std::size_t i) -> std::optional<Substitution> {
    if (i == open.size()) return accept(bound);
    for (const auto& d : *domain_values) {
      bound.insert_or_assign(open[i], Term::val(d));
      if (auto g = search(i + 1)) return g;
    }
    bound.erase(open[i]);
    return std::nullopt;
  };
  return search(0);
}

bool is_less_general(const Substitution& eta, const Substitution& theta,
                     const Algebra& algebra) {
  return factor(eta, theta, algebra).has_value();
}

Substitution minimize_delta(const Substitution& theta,
                            const Substitution& gamma) {
  // x/t in γ matters iff x(θγ) differs without it: x outside dom(θ) reads
  // its own binding, otherwise only occurrences of x in θ's range read it.
  std::set<Variable> used = theta.range_variables();
  Substitution out;
  for (const auto& [x, t] : gamma)
    if (!theta.contains(x) || used.count(x)) out.bind(x, t);
  return out;
}

}  // namespace folsem
