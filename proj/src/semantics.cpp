#include "folsem/semantics.hpp"

namespace folsem {

Outcome Outcome::error() {
  Outcome o;
  o.error_ = true;
  return o;
}

Outcome Outcome::single(Answer a) {
  Outcome o;
  o.answers_.push_back(std::move(a));
  return o;
}

void Outcome::add(Answer a, const Algebra& algebra) {
  if (contains(a.full, algebra)) return;
  answers_.push_back(std::move(a));
}

void Outcome::merge(const Outcome& other, const Algebra& algebra) {
  for (const auto& a : other.answers_) add(a, algebra);
  error_ = error_ || other.error_;
}

bool Outcome::contains(const Substitution& s, const Algebra& algebra) const {
  for (const auto& a : answers_)
    if (subst_equal(a.full, s, algebra)) return true;
  return false;
}

Outcome solve_equation(const Term& s, const Term& t, const Substitution& theta,
                       const Interpretation& interp,
                       const Mutations& mutations) {
  const Algebra& J = interp.algebra();
  Term s_theta = apply(s, theta);
  Term t_theta = apply(t, theta);

  auto extend = [&](const Variable& x, const Term& rhs) {
    Substitution delta;
    delta.bind(x, evaluate(rhs, J));
    return Outcome::single({compose(theta, delta, J), delta});
  };

  if (s_theta.is_variable() && !occurs(s_theta.variable(), t_theta))
    return extend(s_theta.variable(), t_theta);
  if (t_theta.is_variable() && !occurs(t_theta.variable(), s_theta) &&
      !s_theta.is_variable())
    return extend(t_theta.variable(), s_theta);
  if (jterm_equal(evaluate(s_theta, J), evaluate(t_theta, J), J))
    return Outcome::single({theta, {}});
  if (s_theta.ground() && t_theta.ground()) {
    if (mutations.ground_mismatch_succeeds)
      return Outcome::single({theta, {}});
    return {};
  }
  return Outcome::error();
}

namespace {

void check_term(const Term& t, const Signature& sig) {
  if (!t.is_application()) return;
  auto arity = sig.function_arity(t.functor());
  if (!arity) {
    if (sig.predicate_arity(t.functor()))
      throw MalformedInput("predicate '" + t.functor() + "' used as a term",
                           t.span());
    throw MalformedInput("unknown function symbol '" + t.functor() + "'",
                         t.span());
  }
  if (*arity != t.args().size())
    throw MalformedInput("function symbol '" + t.functor() + "' expects " +
                             std::to_string(*arity) + " argument(s), got " +
                             std::to_string(t.args().size()),
                         t.span());
  for (const auto& a : t.args()) check_term(a, sig);
}

}  // namespace

void validate(const Term& t, const Signature& sig) { check_term(t, sig); }

void validate(const Formula& phi, const Signature& sig) {
  switch (phi.kind()) {
    case Formula::Kind::truth:
    case Formula::Kind::falsity:
      return;
    case Formula::Kind::equation:
      check_term(phi.lhs(), sig);
      check_term(phi.rhs(), sig);
      return;
    case Formula::Kind::atom: {
      auto arity = sig.predicate_arity(phi.predicate());
      if (!arity)
        throw MalformedInput("unknown predicate '" + phi.predicate() + "'",
                             phi.span());
      if (*arity != phi.args().size())
        throw MalformedInput("predicate '" + phi.predicate() + "' expects " +
                                 std::to_string(*arity) +
                                 " argument(s), got " +
                                 std::to_string(phi.args().size()),
                             phi.span());
      for (const auto& a : phi.args()) check_term(a, sig);
      return;
    }
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
      validate(phi.left(), sig);
      validate(phi.right(), sig);
      return;
    case Formula::Kind::negation:
    case Formula::Kind::exists:
      validate(phi.body(), sig);
      return;
  }
}

Outcome Evaluator::eval(const Formula& phi, const Substitution& theta) {
  const Algebra& J = interp_.algebra();
  switch (phi.kind()) {
    case Formula::Kind::truth:
      return Outcome::single({theta, {}});
    case Formula::Kind::falsity:
      return {};
    case Formula::Kind::equation:
      return solve_equation(phi.lhs(), phi.rhs(), theta, interp_, mutations_);
    case Formula::Kind::atom:
      return eval_atom(phi, theta);
    case Formula::Kind::conjunction:
      return eval_and(phi, theta);
    case Formula::Kind::disjunction: {
      Outcome out = eval(phi.left(), theta);
      out.merge(eval(phi.right(), theta), J);
      return out;
    }
    case Formula::Kind::negation:
      return eval_not(phi, theta);
    case Formula::Kind::exists:
      return eval_exists(phi, theta);
  }
  return Outcome::error();
}

Outcome Evaluator::eval_atom(const Formula& phi, const Substitution& theta) {
  switch (atom_status(phi.predicate(), phi.args(), theta, interp_)) {
    case AtomStatus::holds:
      return Outcome::single({theta, {}});
    case AtomStatus::fails:
      return {};
    case AtomStatus::nonground:
      return Outcome::error();
  }
  return Outcome::error();
}

Outcome Evaluator::eval_and(const Formula& phi, const Substitution& theta) {
  const Algebra& J = interp_.algebra();
  Outcome first = eval(phi.left(), theta);
  Outcome out;
  if (first.has_error()) out.add_error();
  for (const auto& a : first.answers()) {
    Outcome second = eval(phi.right(), a.full);
    if (second.has_error()) out.add_error();
    for (const auto& b : second.answers())
      out.add({b.full, minimize_delta(theta, compose(a.delta, b.delta, J))},
              J);
  }
  return out;
}

Outcome Evaluator::eval_not(const Formula& phi, const Substitution& theta) {
  const Algebra& J = interp_.algebra();
  Outcome inner = eval(phi.body(), theta);
  if (inner.empty()) return Outcome::single({theta, {}});
  if (inner.contains(theta, J)) return {};
  if (mutations_.negation_error_fails) return {};
  return Outcome::error();
}

Outcome Evaluator::eval_exists(const Formula& phi, const Substitution& theta) {
  const Algebra& J = interp_.algebra();
  Variable y = fresh_.next();
  Outcome inner = eval(rename_free(phi.body(), phi.bound(), y), theta);
  if (mutations_.skip_drop) return inner;
  // y does not occur in θ, so DROP_y(θγ) = θ·DROP_y(γ).
  Outcome out;
  if (inner.has_error()) out.add_error();
  for (const auto& a : inner.answers())
    out.add({drop(y, a.full), drop(y, a.delta)}, J);
  return out;
}

Outcome eval(const Formula& phi, const Substitution& theta,
             const Interpretation& interp, FreshSupply& fresh,
             const Mutations& mutations) {
  validate(phi, interp.signature());
  for (const auto& [x, t] : theta) validate(t, interp.signature());
  return Evaluator(interp, fresh, mutations).eval(phi, theta);
}

Outcome eval_answers(const Formula& phi, const Substitution& theta,
                     const Interpretation& interp) {
  FreshSupply fresh;
  return eval(phi, theta, interp, fresh);
}

}  // namespace folsem
