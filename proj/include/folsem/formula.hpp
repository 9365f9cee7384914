#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "folsem/substitution.hpp"
#include "folsem/term.hpp"

namespace folsem {

/// Formulas built from =, predicate atoms, and, or, not, exists.
/// `truth` and `falsity` are the empty conjunction and disjunction.
class Formula {
 public:
  enum class Kind {
    truth,
    falsity,
    equation,
    atom,
    conjunction,
    disjunction,
    negation,
    exists
  };

  static Formula top();
  static Formula bottom();
  static Formula equation(Term lhs, Term rhs,
                          std::optional<SourceSpan> span = std::nullopt);
  static Formula atom(std::string predicate, std::vector<Term> args = {},
                      std::optional<SourceSpan> span = std::nullopt);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula negation(Formula a);
  static Formula exists(Variable x, Formula body);

  Kind kind() const;

  // equation
  const Term& lhs() const;
  const Term& rhs() const;
  // atom
  const std::string& predicate() const;
  const std::vector<Term>& args() const;
  // conjunction, disjunction
  const Formula& left() const;
  const Formula& right() const;
  // negation, exists
  const Formula& body() const;
  // exists
  const Variable& bound() const;

  const std::optional<SourceSpan>& span() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Right-nested conjunction; `top()` when empty.
Formula conjoin(const std::vector<Formula>& parts);
/// Right-nested disjunction; `bottom()` when empty.
Formula disjoin(const std::vector<Formula>& parts);

std::set<Variable> free_variables(const Formula& phi);
/// Free and bound variables alike.
std::set<Variable> all_variables(const Formula& phi);

/// φθ on free occurrences. A bound variable that would capture a variable
/// of θ's range is first renamed to a variable drawn from `fresh`.
Formula apply_formula(const Formula& phi, const Substitution& theta,
                      FreshSupply& fresh);

/// Replaces free occurrences of x by the variable y. y must not occur
/// bound in phi.
Formula rename_free(const Formula& phi, const Variable& x, const Variable& y);

}  // namespace folsem
