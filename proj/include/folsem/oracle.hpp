#pragma once

// Tarskian truth over finite interpretations and executable checks relating
// it to the evaluator: soundness (i) and (ii), the two observations about
// answers, and the substitution-as-formula equivalence.

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "folsem/formula.hpp"
#include "folsem/interpretation.hpp"
#include "folsem/semantics.hpp"
#include "json.hpp"

namespace folsem {

using Valuation = std::map<Variable, Value>;

/// Brute-force classical truth. Requires an enumerable domain.
class TruthOracle {
 public:
  /// Throws UnsupportedOracle when the domain cannot be enumerated.
  explicit TruthOracle(const Interpretation& interp);

  const Interpretation& interpretation() const { return interp_; }
  const std::vector<Value>& domain() const { return domain_; }

  /// Value of a term whose variables are all assigned.
  Value value(const Term& t, const Valuation& env) const;
  /// Classical satisfaction; every free variable must be assigned.
  bool holds(const Formula& phi, Valuation& env) const;

  /// φθ under σ: θ's bindings for free variables of φ are evaluated under σ
  /// and override it, so θ acts as a simultaneous substitution.
  bool holds_instance(const Formula& phi, const Substitution& theta,
                      const Valuation& sigma) const;

  /// Free variables of φθ.
  std::set<Variable> instance_variables(const Formula& phi,
                                        const Substitution& theta) const;

  /// I ⊨_θ φ: φθ under every valuation of its remaining variables.
  bool truth(const Substitution& theta, const Formula& phi) const;

  /// First valuation of `vars` (in enumeration order) for which `pred`
  /// fails, or nullopt when it holds throughout.
  std::optional<Valuation> counterexample(
      const std::set<Variable>& vars,
      const std::function<bool(const Valuation&)>& pred) const;

 private:
  const Interpretation& interp_;
  std::vector<Value> domain_;
};

bool truth(const Interpretation& interp, const Substitution& theta,
           const Formula& phi);

/// x1 = h1 & ... & xn = hn in variable order; `top()` for ε.
Formula hat(const Substitution& eta);

/// The ∃-closed encoding of one answer: exists over every generated
/// variable occurring in the delta, around hat(delta).
Formula answer_formula(const Substitution& delta);

enum class Verdict { pass, fail, not_applicable };

struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::pass;
  nlohmann::ordered_json inputs;
  nlohmann::ordered_json counterexample;  // null unless failing

  bool failed() const { return verdict == Verdict::fail; }
};

using HatFunction = std::function<Formula(const Substitution&)>;

/// Every substitution η in M[φ](θ) satisfies I ⊨_η φ. When M[φ](θ) = ∅
/// additionally I ⊨_θ ¬φ.
CheckReport check_soundness_i(const Interpretation& interp, const Formula& phi,
                              const Substitution& theta,
                              const Mutations& mutations = {});

/// When error ∉ M[φ](θ): I ⊨ φθ ↔ ∨ ∃y_i hat(η_i) over the answer deltas.
CheckReport check_soundness_ii(const Interpretation& interp,
                               const Formula& phi, const Substitution& theta,
                               const Mutations& mutations = {});

/// Each answer η is less general than θ, and θ·delta = η.
CheckReport check_note_i(const Interpretation& interp, const Formula& phi,
                         const Substitution& theta,
                         const Mutations& mutations = {});

/// φθ ground ⇒ M[φ](θ) ⊆ {θ}.
CheckReport check_note_ii(const Interpretation& interp, const Formula& phi,
                          const Substitution& theta,
                          const Mutations& mutations = {});

/// I ⊨_θ φ iff I ⊨ hat(θ) → φ.
CheckReport check_note_equality(const Interpretation& interp,
                                const Substitution& theta, const Formula& phi,
                                const HatFunction& hat_fn = hat);

/// M[φ](ε) = ∅ ⇒ I ⊨ ¬φ.
CheckReport check_corollary(const Interpretation& interp, const Formula& phi,
                            const Mutations& mutations = {});

/// Outcomes agree up to a bijective renaming of generated variables.
bool equal_up_to_renaming(const Outcome& a, const Outcome& b,
                          const Algebra& algebra);

nlohmann::ordered_json to_json(const Substitution& theta);
nlohmann::ordered_json to_json(const Valuation& sigma);
nlohmann::ordered_json to_json(const CheckReport& report);
std::string to_string(Verdict v);

}  // namespace folsem
