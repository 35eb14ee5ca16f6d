#pragma once

// Exact evaluators for every closed form of b_n(T), T a subset of B_2, and
// the registry binding each named pattern set to its formula.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "signedpat/bigint.hpp"
#include "signedpat/core.hpp"

namespace signedpat {

enum class FormulaId {
  EQ1, EQ2, EQ3, EQ4, EQ5, EQ6, EQ7, EQ8, EQ9, EQ10, EQ11, EQ12, EQ13, EQ13A,
  TH4_1, TH4_2, TH4_3, TH4_4, TH4_5, TH4_6, TH4_7,
  TH5_1, TH5_2, TH5_3, TH5_4, TH5_5,
  TH6_1, TH6_2, TH6_3,
  TH7_1, TH7_2,
  COR_EXTU1, COR_EXTU2, COR_EXTU3, COR_EXTU4, COR_EXTU5,
  EMPTYSET,
};

const std::vector<FormulaId>& all_formula_ids();
std::string_view to_string(FormulaId id);
// Throws Error{UnknownId}.
FormulaId parse_formula_id(std::string_view text);

// Primitives. Negative arguments throw Error{NegativeInput}.
BigInt factorial(long m);
BigInt binomial(long m, long k);
// C_0 = 1, C_m = sum_{j<m} C_j C_{m-1-j}
BigInt catalan(long m);
// F_1 = F_2 = 1. Throws Error{NonpositiveIndex} for m < 1.
BigInt fibonacci(long m);
// Sum over compositions of n with parts >= min_part of the product of part!.
// min_part must be >= 1.
BigInt compositions_sum(long n, long min_part);
// Sum over weak compositions of `total` into `parts` nonnegative parts of the
// product of part!.
BigInt weak_compositions_sum(long total, long parts);

// Total for n >= 0; validity ranges live in the registry.
BigInt eval_formula(FormulaId id, int n);

// The printed rational expression, evaluated exactly, for the formulas whose
// integer evaluator uses a rewritten form (EQ4, EQ8, EQ9, EQ13A).
std::optional<Rational> eval_rational_form(FormulaId id, int n);

using FormulaEvaluator = std::function<BigInt(FormulaId, int)>;
inline BigInt default_evaluator(FormulaId id, int n) { return eval_formula(id, n); }

struct RegistryEntry {
  std::string paper_name;
  PatternSet named_set;     // the set as written in the source
  PatternSet canonical_set; // canonical_representative(named_set)
  FormulaId formula;
  int min_n = 0;
  std::string citation;
  std::string note; // erratum or binding remark, empty when none
};

const std::vector<RegistryEntry>& registry();
std::vector<const RegistryEntry*> lookup(PatternSet set);

// Closed forms that the source states and then supersedes or misprints. Each
// is expected to disagree with enumeration somewhere in its range.
struct SupersededClaim {
  std::string description;
  PatternSet set;
  int min_n = 0;
  std::function<BigInt(int)> value;
};

const std::vector<SupersededClaim>& superseded_claims();

// Shorthand used by the registry and the tests, e.g. pattern_set({"12", "-1-2"}).
// Each token is two letters, a leading '-' bars the following digit.
PatternSet pattern_set(std::span<const std::string_view> tokens);
inline PatternSet pattern_set(std::initializer_list<std::string_view> tokens) {
  return pattern_set(std::span<const std::string_view>(tokens.begin(), tokens.size()));
}

} // namespace signedpat
