#pragma once

// Reversal, barring and complement, the group they generate, and orbits of
// pattern sets under that group.

#include <array>
#include <vector>

#include "signedpat/core.hpp"

namespace signedpat {

SignedPermutation reversal(const SignedPermutation& alpha);
SignedPermutation barring(const SignedPermutation& alpha);
SignedPermutation complement(const SignedPermutation& alpha);

// Composition of the three generators selected by the flags. The generators
// commute, so the triple names a single group element.
struct SymmetryElement {
  bool use_reversal = false;
  bool use_barring = false;
  bool use_complement = false;

  static constexpr SymmetryElement identity() { return {}; }
  static constexpr SymmetryElement reversal() { return {true, false, false}; }
  static constexpr SymmetryElement barring() { return {false, true, false}; }
  static constexpr SymmetryElement complement() { return {false, false, true}; }

  friend constexpr SymmetryElement compose(SymmetryElement a, SymmetryElement b) {
    return {a.use_reversal != b.use_reversal, a.use_barring != b.use_barring,
            a.use_complement != b.use_complement};
  }

  friend constexpr bool operator==(SymmetryElement, SymmetryElement) = default;
  friend constexpr auto operator<=>(SymmetryElement, SymmetryElement) = default;
};

// complement, then barring, then reversal
SignedPermutation apply(SymmetryElement g, const SignedPermutation& alpha);
Pattern apply(SymmetryElement g, Pattern tau);
PatternSet apply(SymmetryElement g, PatternSet set);

// Action of g on B_2 as a table: entry i is the index of g(pattern i).
using PatternAction = std::array<std::uint8_t, Pattern::kCount>;
PatternAction pattern_action(SymmetryElement g);

// Breadth-first closure of the three generators acting on B_2. Throws
// std::logic_error if two flag triples induce the same action, or one triple
// two different actions.
std::vector<SymmetryElement> group_elements();

struct Orbit {
  PatternSet representative;
  std::vector<PatternSet> members; // ascending by mask value
};

Orbit orbit_of_set(PatternSet set);
PatternSet canonical_representative(PatternSet set);

// All orbits of the 256 subsets of B_2, ascending by representative mask.
const std::vector<Orbit>& all_orbits();

// Index is the subset size 0..8.
std::array<int, 9> orbit_census_by_size();

} // namespace signedpat
