#pragma once

// Terms, generalized terms and J-evaluation over an abstract algebra.
//
// A generalized term is a term tree whose leaves may be variables, constants
// (arity-0 applications) or domain values. Its evaluation under an algebra
// collapses every maximal ground subterm into a single domain value; the
// result is the evaluated normal form ("J-term").

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "folsem/error.hpp"

namespace folsem {

using BigInt = boost::multiprecision::cpp_int;

/// A logical variable. User variables have `fresh == 0`; variables produced
/// by a FreshSupply carry their positive serial number.
struct Variable {
  std::string name;
  std::uint64_t fresh = 0;

  bool generated() const { return fresh != 0; }

  friend bool operator==(const Variable&, const Variable&) = default;
  // User variables first (by name), then generated ones by serial.
  friend std::strong_ordering operator<=>(const Variable& a,
                                          const Variable& b) {
    if (auto c = a.fresh <=> b.fresh; c != 0) return c;
    return a.name.compare(b.name) <=> 0;
  }
};

/// Hands out `_y1`, `_y2`, ... The parser rejects the `_` prefix, so these
/// never collide with user identifiers.
class FreshSupply {
 public:
  explicit FreshSupply(std::uint64_t first = 1) : next_(first) {}

  Variable next() {
    auto n = next_++;
    return Variable{"_y" + std::to_string(n), n};
  }

  std::uint64_t peek() const { return next_; }

 private:
  std::uint64_t next_;
};

/// Ground term over a Herbrand signature; the payload of Herbrand values.
struct GroundTerm {
  std::string functor;
  std::vector<GroundTerm> args;

  friend bool operator==(const GroundTerm& a, const GroundTerm& b) {
    return a.functor == b.functor && a.args == b.args;
  }
};

/// Named element of a finite domain.
struct Element {
  std::string name;
  friend bool operator==(const Element&, const Element&) = default;
};

/// An element of some algebra's domain.
struct Value {
  std::variant<BigInt, Element, GroundTerm> payload;

  static Value integer(BigInt v) { return Value{std::move(v)}; }
  static Value element(std::string name) {
    return Value{Element{std::move(name)}};
  }
  static Value ground(GroundTerm t) { return Value{std::move(t)}; }

  friend bool operator==(const Value& a, const Value& b) {
    return a.payload == b.payload;
  }
};

/// Function and predicate symbols with their arities.
///
/// Function and predicate namespaces are disjoint and a name has exactly one
/// arity. With integer literals enabled every numeral is an implicit
/// arity-0 function symbol.
class Signature {
 public:
  void add_function(const std::string& name, std::size_t arity);
  void add_predicate(const std::string& name, std::size_t arity);
  void set_integer_literals(bool on) { integer_literals_ = on; }

  bool integer_literals() const { return integer_literals_; }
  std::optional<std::size_t> function_arity(std::string_view name) const;
  std::optional<std::size_t> predicate_arity(std::string_view name) const;

  const std::map<std::string, std::size_t, std::less<>>& functions() const {
    return functions_;
  }
  const std::map<std::string, std::size_t, std::less<>>& predicates() const {
    return predicates_;
  }

 private:
  std::map<std::string, std::size_t, std::less<>> functions_;
  std::map<std::string, std::size_t, std::less<>> predicates_;
  bool integer_literals_ = false;
};

/// True for a non-empty string of decimal digits.
bool is_numeral(std::string_view s);

/// Generalized term. Immutable, cheap to copy (shared structure).
class Term {
 public:
  enum class Kind { variable, value, application };

  static Term var(Variable v, std::optional<SourceSpan> span = std::nullopt);
  static Term var(std::string name) { return var(Variable{std::move(name)}); }
  static Term val(Value v, std::optional<SourceSpan> span = std::nullopt);
  static Term app(std::string functor, std::vector<Term> args = {},
                  std::optional<SourceSpan> span = std::nullopt);

  Kind kind() const;
  bool is_variable() const { return kind() == Kind::variable; }
  bool is_value() const { return kind() == Kind::value; }
  bool is_application() const { return kind() == Kind::application; }

  const Variable& variable() const;
  const Value& value() const;
  const std::string& functor() const;
  std::span<const Term> args() const;

  /// No variable occurs in the term.
  bool ground() const;
  const std::optional<SourceSpan>& span() const;

  /// Structural identity; spans are ignored, values compare by payload.
  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Domain plus total function meanings. No predicates.
class Algebra {
 public:
  virtual ~Algebra() = default;

  /// Function symbols only.
  virtual const Signature& signature() const = 0;
  /// f_J(args). Throws MalformedInput for unknown symbols or wrong arity.
  virtual Value apply(const std::string& f,
                      std::span<const Value> args) const = 0;
  virtual bool equal(const Value& a, const Value& b) const { return a == b; }
  /// Duplicate-free listing of the domain when it is finite.
  virtual std::optional<std::vector<Value>> enumerate() const {
    return std::nullopt;
  }
};

/// [t]_J: collapse every maximal ground subterm into its value.
Term evaluate(const Term& t, const Algebra& algebra);

/// Variables occurring in t.
std::set<Variable> variables(const Term& t);
void collect_variables(const Term& t, std::set<Variable>& out);

bool occurs(const Variable& x, const Term& t);

/// Structural identity of J-terms using the algebra's value equality.
bool jterm_equal(const Term& a, const Term& b, const Algebra& algebra);

/// Herbrand values back to plain applications; leaves other terms intact.
Term unfold_ground_values(const Term& t);

}  // namespace folsem
