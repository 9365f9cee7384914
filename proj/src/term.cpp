#include "folsem/term.hpp"

#include <algorithm>

namespace folsem {

void Signature::add_function(const std::string& name, std::size_t arity) {
  if (predicates_.count(name))
    throw MalformedInput("symbol '" + name +
                         "' is already declared as a predicate");
  auto [it, inserted] = functions_.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw MalformedInput("function symbol '" + name +
                         "' redeclared with a different arity");
}

void Signature::add_predicate(const std::string& name, std::size_t arity) {
  if (name == "=") throw MalformedInput("'=' cannot be declared as a predicate");
  if (functions_.count(name))
    throw MalformedInput("symbol '" + name +
                         "' is already declared as a function");
  auto [it, inserted] = predicates_.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw MalformedInput("predicate symbol '" + name +
                         "' redeclared with a different arity");
}

std::optional<std::size_t> Signature::function_arity(
    std::string_view name) const {
  if (auto it = functions_.find(name); it != functions_.end())
    return it->second;
  if (integer_literals_ && is_numeral(name)) return 0;
  return std::nullopt;
}

std::optional<std::size_t> Signature::predicate_arity(
    std::string_view name) const {
  if (auto it = predicates_.find(name); it != predicates_.end())
    return it->second;
  return std::nullopt;
}

bool is_numeral(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
}

struct Term::Node {
  struct App {
    std::string functor;
    std::vector<Term> args;
  };
  std::variant<Variable, Value, App> data;
  bool ground;
  std::optional<SourceSpan> span;
};

Term Term::var(Variable v, std::optional<SourceSpan> span) {
  return Term(std::make_shared<const Node>(Node{std::move(v), false, span}));
}

Term Term::val(Value v, std::optional<SourceSpan> span) {
  return Term(std::make_shared<const Node>(Node{std::move(v), true, span}));
}

Term Term::app(std::string functor, std::vector<Term> args,
               std::optional<SourceSpan> span) {
  bool ground = std::all_of(args.begin(), args.end(),
                            [](const Term& a) { return a.ground(); });
  return Term(std::make_shared<const Node>(
      Node{Node::App{std::move(functor), std::move(args)}, ground, span}));
}

Term::Kind Term::kind() const {
  return static_cast<Kind>(node_->data.index());
}

const Variable& Term::variable() const {
  return std::get<Variable>(node_->data);
}

const Value& Term::value() const { return std::get<Value>(node_->data); }

const std::string& Term::functor() const {
  return std::get<Node::App>(node_->data).functor;
}

std::span<const Term> Term::args() const {
  return std::get<Node::App>(node_->data).args;
}

bool Term::ground() const { return node_->ground; }

const std::optional<SourceSpan>& Term::span() const { return node_->span; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::variable:
      return a.variable() == b.variable();
    case Term::Kind::value:
      return a.value() == b.value();
    case Term::Kind::application:
      return a.functor() == b.functor() &&
             std::equal(a.args().begin(), a.args().end(), b.args().begin(),
                        b.args().end());
  }
  return false;
}

Term evaluate(const Term& t, const Algebra& algebra) {
  if (!t.is_application()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  bool all_values = true;
  for (const auto& a : t.args()) {
    args.push_back(evaluate(a, algebra));
    all_values = all_values && args.back().is_value();
  }
  if (all_values) {
    std::vector<Value> values;
    values.reserve(args.size());
    for (const auto& a : args) values.push_back(a.value());
    return Term::val(algebra.apply(t.functor(), values), t.span());
  }
  auto arity = algebra.signature().function_arity(t.functor());
  if (!arity)
    throw MalformedInput("unknown function symbol '" + t.functor() + "'", t.span());
  if (*arity != args.size())
    throw MalformedInput("'" + t.functor() + "' expects " + std::to_string(*arity) +
                             " arguments",
                         t.span());
  return Term::app(t.functor(), std::move(args), t.span());
}

void collect_variables(const Term& t, std::set<Variable>& out) {
  if (t.ground()) return;
  if (t.is_variable()) {
    out.insert(t.variable());
    return;
  }
  for (const auto& a : t.args()) collect_variables(a, out);
}

std::set<Variable> variables(const Term& t) {
  std::set<Variable> out;
  collect_variables(t, out);
  return out;
}

bool occurs(const Variable& x, const Term& t) {
  if (t.ground()) return false;
  if (t.is_variable()) return t.variable() == x;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return occurs(x, a); });
}

bool jterm_equal(const Term& a, const Term& b, const Algebra& algebra) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Term::Kind::variable:
      return a.variable() == b.variable();
    case Term::Kind::value:
      return algebra.equal(a.value(), b.value());
    case Term::Kind::application: {
      if (a.functor() != b.functor() || a.args().size() != b.args().size())
        return false;
      for (std::size_t i = 0; i < a.args().size(); ++i)
        if (!jterm_equal(a.args()[i], b.args()[i], algebra)) return false;
      return true;
    }
  }
  return false;
}

namespace {

Term from_ground(const GroundTerm& g) {
  std::vector<Term> args;
  for (const auto& a : g.args) args.push_back(from_ground(a));
  return Term::app(g.functor, std::move(args));
}

}  // namespace

Term unfold_ground_values(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::variable:
      return t;
    case Term::Kind::value:
      if (auto* g = std::get_if<GroundTerm>(&t.value().payload))
        return from_ground(*g);
      return t;
    case Term::Kind::application: {
      std::vector<Term> args;
      for (const auto& a : t.args()) args.push_back(unfold_ground_values(a));
      return Term::app(t.functor(), std::move(args));
    }
  }
  return t;
}

}  // namespace folsem
