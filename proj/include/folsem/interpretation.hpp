#pragma once

// Concrete algebras (Herbrand, integers, finite tables) and interpretations.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "folsem/substitution.hpp"
#include "folsem/term.hpp"
#include "json.hpp"

namespace folsem {

/// Domain = ground terms over the signature; f_J builds the term.
class HerbrandAlgebra : public Algebra {
 public:
  /// Rejects signatures without constants (empty universe).
  explicit HerbrandAlgebra(Signature functions);

  const Signature& signature() const override { return sig_; }
  Value apply(const std::string& f,
              std::span<const Value> args) const override;
  /// Only when every function symbol is a constant.
  std::optional<std::vector<Value>> enumerate() const override;

 private:
  Signature sig_;
};

/// The standard integers with binary +, -, *, unary minus (`neg`), and a
/// constant for every numeral. Arbitrary precision.
class IntegerAlgebra : public Algebra {
 public:
  IntegerAlgebra();

  const Signature& signature() const override { return sig_; }
  Value apply(const std::string& f,
              std::span<const Value> args) const override;

 private:
  Signature sig_;
};

/// Named elements with total function tables.
///
/// Every element name is also an implicit constant denoting itself, so
/// elements can be written directly in formulas and substitutions.
class FiniteAlgebra : public Algebra {
 public:
  using Table = std::map<std::vector<std::string>, std::string>;

  explicit FiniteAlgebra(std::vector<std::string> elements);

  /// Throws MalformedInput unless the table is total over D^arity and
  /// mentions only declared elements.
  void add_function(const std::string& name, std::size_t arity, Table table);

  const Signature& signature() const override { return sig_; }
  Value apply(const std::string& f,
              std::span<const Value> args) const override;
  std::optional<std::vector<Value>> enumerate() const override;

  const std::vector<std::string>& elements() const { return elements_; }
  /// User-declared functions (element constants excluded).
  const std::map<std::string, std::pair<std::size_t, Table>>& tables() const {
    return tables_;
  }

 private:
  std::vector<std::string> elements_;
  std::map<std::string, std::pair<std::size_t, Table>> tables_;
  Signature sig_;
};

enum class AtomStatus { holds, fails, nonground };

/// An algebra plus predicate relations given as explicit tuple sets.
class Interpretation {
 public:
  explicit Interpretation(std::shared_ptr<const Algebra> algebra);

  void add_predicate(const std::string& name, std::size_t arity,
                     std::vector<std::vector<Value>> tuples);

  const Algebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return algebra_; }
  /// Functions of the algebra plus the predicates.
  const Signature& signature() const { return sig_; }

  bool contains(const std::string& predicate,
                std::span<const Value> tuple) const;

  const std::map<std::string, std::vector<std::vector<Value>>>& relations()
      const {
    return relations_;
  }

 private:
  std::shared_ptr<const Algebra> algebra_;
  Signature sig_;
  std::map<std::string, std::vector<std::vector<Value>>> relations_;
};

Interpretation make_integer_interpretation();

/// Truth status of p(args)θ. Throws MalformedInput on unknown predicate or
/// arity mismatch.
AtomStatus atom_status(const std::string& predicate,
                       const std::vector<Term>& args,
                       const Substitution& theta,
                       const Interpretation& interp);

/// Finite domains only; nullopt means not enumerable.
std::optional<std::vector<Value>> enumerate_domain(const Interpretation& interp);

/// Interpretation description document:
///
///   {"domain": ["a", "b"] | "int" | "herbrand",
///    "functions": {"f": {"arity": 1, "table": {"a": "b", "b": "a"}}},
///    "predicates": {"p": {"arity": 1, "tuples": [["a"]]}}}
///
/// Table keys are comma-joined argument tuples ("" for constants). Herbrand
/// functions take no table; the integer domain takes no functions. Tuple
/// entries are element names, ground terms, or integers respectively.
Interpretation load_interpretation(const nlohmann::json& doc);
Interpretation load_interpretation_file(const std::string& path);
nlohmann::ordered_json to_json(const Interpretation& interp);

}  // namespace folsem
