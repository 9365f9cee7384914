#pragma once

// Seeded random instances for the check suites and property tests.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "folsem/formula.hpp"
#include "folsem/interpretation.hpp"
#include "folsem/oracle.hpp"

namespace folsem {

struct GenParams {
  std::size_t max_domain = 4;
  std::size_t max_functions = 2;
  std::size_t max_function_arity = 2;
  std::size_t max_predicates = 3;
  std::size_t max_predicate_arity = 2;
  std::size_t max_depth = 5;       // formula nesting
  std::size_t max_term_depth = 2;  // J-terms in θ and terms in atoms
};

struct Instance {
  Interpretation interp;
  Formula phi;
  Substitution theta;
};

/// Variables drawn on by generated formulas.
const std::vector<Variable>& generator_variables();

/// Random finite interpretation within the size bounds.
Interpretation gen_interpretation(std::mt19937_64& rng, const GenParams& p);

/// Random term over the interpretation's function symbols (numerals and
/// arithmetic included for the integer signature).
Term gen_term(std::mt19937_64& rng, const Signature& sig,
              const std::vector<Variable>& vars, std::size_t depth);

/// Random formula over the interpretation's symbols.
Formula gen_formula(std::mt19937_64& rng, const Signature& sig,
                    const std::vector<Variable>& vars, std::size_t depth);

/// Random idempotent J-substitution over `vars`.
Substitution gen_subst(std::mt19937_64& rng, const Interpretation& interp,
                       const std::vector<Variable>& vars, std::size_t depth);

/// Reproducible from the seed. When `fixed` is given only φ and θ are drawn.
Instance gen_instance(std::uint64_t seed, const GenParams& params = {},
                      const Interpretation* fixed = nullptr);

/// Seed of the i-th instance of a suite.
std::uint64_t instance_seed(std::uint64_t suite_seed, std::uint64_t index);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::uint64_t count = 0;
  GenParams params;
  Mutations mutations;
  const Interpretation* interp = nullptr;
  std::size_t max_failures_listed = 20;
};

struct SuiteTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t not_applicable = 0;
};

struct SuiteResult {
  std::vector<std::pair<std::string, SuiteTally>> tallies;
  std::uint64_t failures = 0;
  nlohmann::ordered_json report;

  const SuiteTally& tally(const std::string& check) const;
};

/// Names of the checks run per instance, in report order.
const std::vector<std::string>& suite_checks();

/// Runs every check on `count` instances. Throws UnsupportedOracle when a
/// fixed interpretation cannot be enumerated.
SuiteResult run_suite(const SuiteOptions& options);

}  // namespace folsem
