#pragma once

// Concrete syntax.
//
//   formula  ::= disj
//   disj     ::= conj { ("|" | "∨") conj }
//   conj     ::= unary { ("&" | "∧") unary }
//   unary    ::= ("~" | "¬") unary
//              | ("exists" | "∃") ident formula     -- body runs to the end
//              | "true" | "false"                  --   of the enclosing group
//              | "(" formula ")"
//              | term "=" term
//              | pred [ "(" term { "," term } ")" ]
//   term     ::= mul { ("+" | "-") mul }           -- left associative
//   mul      ::= neg { ("*" | "·") neg }
//   neg      ::= "-" neg | primary
//   primary  ::= numeral | ident [ "(" term { "," term } ")" ] | "(" term ")"
//   subst    ::= "{" [ ident "/" term { "," ident "/" term } ] "}"
//
// Identifiers starting with '_' are reserved for generated variables.

#include <string>
#include <string_view>

#include "folsem/formula.hpp"
#include "folsem/interpretation.hpp"
#include "folsem/semantics.hpp"

namespace folsem {

/// What the parser resolves identifiers against. Without a signature every
/// application is accepted and symbol usage only has to be self-consistent;
/// integer literals and the arithmetic operators are then allowed too.
struct SyntaxContext {
  const Signature* signature = nullptr;
  /// Evaluates substitution ranges into J-terms when set.
  const Algebra* algebra = nullptr;

  static SyntaxContext of(const Interpretation& interp) {
    return {&interp.signature(), &interp.algebra()};
  }
};

Term parse_term(std::string_view text, const SyntaxContext& ctx = {});
Formula parse_formula(std::string_view text, const SyntaxContext& ctx = {});
Substitution parse_subst(std::string_view text, const SyntaxContext& ctx = {});

std::string print(const Value& v);
std::string print(const Term& t);
std::string print(const Formula& phi);
std::string print(const Substitution& theta);
/// Members in discovery order, then "error"; "fail" when empty.
std::string print(const Outcome& outcome);

/// Parenthesized prefix rendering of the AST, e.g. (and (= x 1) (p x)).
std::string to_sexp(const Term& t);
std::string to_sexp(const Formula& phi);

}  // namespace folsem
