#include "folsem/formula.hpp"

#include <algorithm>

namespace folsem {

struct Formula::Node {
  Kind kind;
  std::vector<Term> terms;  // lhs/rhs or atom arguments
  std::string predicate;
  std::vector<Formula> children;
  Variable bound;
  std::optional<SourceSpan> span;
};

Formula Formula::top() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::truth}));
  return f;
}

Formula Formula::bottom() {
  static const Formula f(std::make_shared<const Node>(Node{Kind::falsity}));
  return f;
}

Formula Formula::equation(Term lhs, Term rhs, std::optional<SourceSpan> span) {
  Node n{Kind::equation};
  n.terms = {std::move(lhs), std::move(rhs)};
  n.span = span;
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::atom(std::string predicate, std::vector<Term> args,
                      std::optional<SourceSpan> span) {
  Node n{Kind::atom};
  n.terms = std::move(args);
  n.predicate = std::move(predicate);
  n.span = span;
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::conj(Formula a, Formula b) {
  Node n{Kind::conjunction};
  n.children = {std::move(a), std::move(b)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::disj(Formula a, Formula b) {
  Node n{Kind::disjunction};
  n.children = {std::move(a), std::move(b)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::negation(Formula a) {
  Node n{Kind::negation};
  n.children = {std::move(a)};
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula Formula::exists(Variable x, Formula body) {
  Node n{Kind::exists};
  n.children = {std::move(body)};
  n.bound = std::move(x);
  return Formula(std::make_shared<const Node>(std::move(n)));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const Term& Formula::lhs() const { return node_->terms.at(0); }
const Term& Formula::rhs() const { return node_->terms.at(1); }
const std::string& Formula::predicate() const { return node_->predicate; }
const std::vector<Term>& Formula::args() const { return node_->terms; }
const Formula& Formula::left() const { return node_->children.at(0); }
const Formula& Formula::right() const { return node_->children.at(1); }
const Formula& Formula::body() const { return node_->children.at(0); }
const Variable& Formula::bound() const { return node_->bound; }
const std::optional<SourceSpan>& Formula::span() const { return node_->span; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.predicate == y.predicate && x.bound == y.bound &&
         x.terms == y.terms && x.children == y.children;
}

Formula conjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::top();
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
    acc = Formula::conj(*it, acc);
  return acc;
}

Formula disjoin(const std::vector<Formula>& parts) {
  if (parts.empty()) return Formula::bottom();
  Formula acc = parts.back();
  for (auto it = parts.rbegin() + 1; it != parts.rend(); ++it)
    acc = Formula::disj(*it, acc);
  return acc;
}

namespace {

void collect_free(const Formula& phi, std::set<Variable>& bound,
                  std::set<Variable>& out) {
  auto add_term = [&](const Term& t) {
    for (const auto& v : variables(t))
      if (!bound.count(v)) out.insert(v);
  };
  switch (phi.kind()) {
    case Formula::Kind::truth:
    case Formula::Kind::falsity:
      return;
    case Formula::Kind::equation:
    case Formula::Kind::atom:
      for (const auto& t : phi.args()) add_term(t);
      return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      collect_free(phi.left(), bound, out);
      collect_free(phi.right(), bound, out);
      return;
    case Formula::Kind::negation:
      collect_free(phi.body(), bound, out);
      return;
    case Formula::Kind::exists: {
      bool inserted = bound.insert(phi.bound()).second;
      collect_free(phi.body(), bound, out);
      if (inserted) bound.erase(phi.bound());
      return;
    }
  }
}

void collect_all(const Formula& phi, std::set<Variable>& out) {
  switch (phi.kind()) {
    case Formula::Kind::truth:
    case Formula::Kind::falsity:
      return;
    case Formula::Kind::equation:
    case Formula::Kind::atom:
      for (const auto& t : phi.args()) collect_variables(t, out);
      return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      collect_all(phi.left(), out);
      collect_all(phi.right(), out);
      return;
    case Formula::Kind::negation:
      collect_all(phi.body(), out);
      return;
    case Formula::Kind::exists:
      out.insert(phi.bound());
      collect_all(phi.body(), out);
      return;
  }
}

std::vector<Term> apply_all(const std::vector<Term>& ts,
                            const Substitution& theta) {
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(apply(t, theta));
  return out;
}

}  // namespace

std::set<Variable> free_variables(const Formula& phi) {
  std::set<Variable> bound, out;
  collect_free(phi, bound, out);
  return out;
}

std::set<Variable> all_variables(const Formula& phi) {
  std::set<Variable> out;
  collect_all(phi, out);
  return out;
}

Formula apply_formula(const Formula& phi, const Substitution& theta,
                      FreshSupply& fresh) {
  if (theta.empty()) return phi;
  switch (phi.kind()) {
    case Formula::Kind::truth:
    case Formula::Kind::falsity:
      return phi;
    case Formula::Kind::equation:
      return Formula::equation(apply(phi.lhs(), theta), apply(phi.rhs(), theta),
                               phi.span());
    case Formula::Kind::atom:
      return Formula::atom(phi.predicate(), apply_all(phi.args(), theta),
                           phi.span());
    case Formula::Kind::conjunction:
      return Formula::conj(apply_formula(phi.left(), theta, fresh),
                           apply_formula(phi.right(), theta, fresh));
    case Formula::Kind::disjunction:
      return Formula::disj(apply_formula(phi.left(), theta, fresh),
                           apply_formula(phi.right(), theta, fresh));
    case Formula::Kind::negation:
      return Formula::negation(apply_formula(phi.body(), theta, fresh));
    case Formula::Kind::exists: {
      const Variable& x = phi.bound();
      Substitution inner = drop(x, theta);
      // Only bindings for variables free in the body can introduce capture.
      auto free_in_body = free_variables(phi.body());
      Substitution relevant;
      for (const auto& [v, t] : inner)
        if (free_in_body.count(v)) relevant.bind(v, t);
      if (relevant.empty()) return phi;
      if (relevant.range_variables().count(x)) {
        Variable z = fresh.next();
        Formula renamed = rename_free(phi.body(), x, z);
        return Formula::exists(z, apply_formula(renamed, relevant, fresh));
      }
      return Formula::exists(x, apply_formula(phi.body(), relevant, fresh));
    }
  }
  return phi;
}

Formula rename_free(const Formula& phi, const Variable& x, const Variable& y) {
  Substitution s;
  s.bind(x, Term::var(y));
  // y is not bound in phi, so no renaming supply is ever consulted.
  FreshSupply unused;
  return apply_formula(phi, s, unused);
}

}  // namespace folsem
