#pragma once

// The meaning M[φ](θ) of a formula as a set of states plus the error state.

#include <vector>

#include "folsem/formula.hpp"
#include "folsem/interpretation.hpp"
#include "folsem/substitution.hpp"

namespace folsem {

/// Subset of Subs ∪ {error}: answers in discovery order, no two subst_equal,
/// plus an error flag.
class Outcome {
 public:
  static Outcome error();
  static Outcome single(Answer a);

  /// Appends unless an equal `full` is already present.
  void add(Answer a, const Algebra& algebra);
  void add_error() { error_ = true; }
  void merge(const Outcome& other, const Algebra& algebra);

  bool has_error() const { return error_; }
  /// No answers and no error: finite failure.
  bool empty() const { return answers_.empty() && !error_; }
  const std::vector<Answer>& answers() const { return answers_; }
  bool contains(const Substitution& s, const Algebra& algebra) const;

 private:
  std::vector<Answer> answers_;
  bool error_ = false;
};

/// Deliberate evaluator faults, used to show the soundness checks can fail.
struct Mutations {
  bool ground_mismatch_succeeds = false;  // equation case 4 yields {θ}
  bool negation_error_fails = false;      // negation's error clause yields ∅
  bool skip_drop = false;                 // exists keeps the fresh binding

  bool any() const {
    return ground_mismatch_succeeds || negation_error_fails || skip_drop;
  }
};

/// M[s = t](θ), the five-case analysis. Answer deltas are relative to θ.
Outcome solve_equation(const Term& s, const Term& t, const Substitution& theta,
                       const Interpretation& interp,
                       const Mutations& mutations = {});

/// Throws MalformedInput when a symbol is unknown or used with the wrong
/// arity, or when a predicate is named '='.
void validate(const Formula& phi, const Signature& sig);
void validate(const Term& t, const Signature& sig);

/// Structural evaluation. The fresh supply is consumed by each exists.
class Evaluator {
 public:
  Evaluator(const Interpretation& interp, FreshSupply& fresh,
            Mutations mutations = {})
      : interp_(interp), fresh_(fresh), mutations_(mutations) {}

  Outcome eval(const Formula& phi, const Substitution& theta);

 private:
  Outcome eval_atom(const Formula& phi, const Substitution& theta);
  Outcome eval_and(const Formula& phi, const Substitution& theta);
  Outcome eval_not(const Formula& phi, const Substitution& theta);
  Outcome eval_exists(const Formula& phi, const Substitution& theta);

  const Interpretation& interp_;
  FreshSupply& fresh_;
  Mutations mutations_;
};

/// Validates, then evaluates. Each answer carries `full` = η and the
/// smallest `delta` γ with η = θγ.
Outcome eval(const Formula& phi, const Substitution& theta,
             const Interpretation& interp, FreshSupply& fresh,
             const Mutations& mutations = {});

/// Same as eval with a supply starting at _y1.
Outcome eval_answers(const Formula& phi, const Substitution& theta,
                     const Interpretation& interp);

}  // namespace folsem
