#pragma once

#include <map>
#include <optional>

#include "folsem/term.hpp"

namespace folsem {

/// Finite mapping from variables to J-terms, the state of a computation.
/// A binding x/x is never stored.
class Substitution {
 public:
  using Map = std::map<Variable, Term>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const Variable, Term>> init);

  /// Adds or replaces x/t; an identity binding x/x removes x instead.
  void bind(const Variable& x, Term t);

  const Term* lookup(const Variable& x) const;
  bool contains(const Variable& x) const { return bindings_.count(x) != 0; }
  std::size_t size() const { return bindings_.size(); }
  bool empty() const { return bindings_.empty(); }

  Map::const_iterator begin() const { return bindings_.begin(); }
  Map::const_iterator end() const { return bindings_.end(); }

  /// Variables occurring in the range terms.
  std::set<Variable> range_variables() const;

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Map bindings_;
};

/// tθ: simultaneous replacement, no evaluation.
Term apply(const Term& t, const Substitution& theta);

/// θη: the unique γ with xγ = [(xθ)η]_J for every x.
Substitution compose(const Substitution& theta, const Substitution& eta,
                     const Algebra& algebra);

/// DROP_x: remove x from the domain when present.
Substitution drop(const Variable& x, const Substitution& theta);

bool subst_equal(const Substitution& a, const Substitution& b,
                 const Algebra& algebra);

/// Some γ with subst_equal(θγ, η), found by matching xθ against xη.
///
/// Variable leaves of xθ are matched syntactically. A non-ground subterm
/// of xθ facing a domain value is solved by enumerating the algebra's
/// domain; over an infinite algebra such constraints make the search give
/// up (returns nullopt even if a γ may exist).
std::optional<Substitution> factor(const Substitution& eta,
                                   const Substitution& theta,
                                   const Algebra& algebra);

/// η is less general than θ: η = θγ for some γ.
bool is_less_general(const Substitution& eta, const Substitution& theta,
                     const Algebra& algebra);

/// Removes from gamma every binding not needed for θγ = η. Whether a binding
/// is needed does not depend on the others, so the result is the unique
/// smallest-domain delta.
Substitution minimize_delta(const Substitution& theta,
                            const Substitution& gamma);

/// A success of evaluation: `full` = θ·`delta` for the initial state θ.
struct Answer {
  Substitution full;
  Substitution delta;
};

}  // namespace folsem
