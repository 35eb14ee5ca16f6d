#include "signedpat/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace signedpat {

SignedPermutation reversal(const SignedPermutation& alpha) {
  auto letters = alpha.encoded();
  return SignedPermutation::from_trusted(std::vector<int>(letters.rbegin(), letters.rend()));
}

SignedPermutation barring(const SignedPermutation& alpha) {
  std::vector<int> out(alpha.encoded().begin(), alpha.encoded().end());
  for (int& v : out)
    v = -v;
  return SignedPermutation::from_trusted(std::move(out));
}

SignedPermutation complement(const SignedPermutation& alpha) {
  const int n = alpha.size();
  std::vector<int> out(alpha.encoded().begin(), alpha.encoded().end());
  for (int& v : out)
    v = v < 0 ? -(n + 1 + v) : n + 1 - v;
  return SignedPermutation::from_trusted(std::move(out));
}

SignedPermutation apply(SymmetryElement g, const SignedPermutation& alpha) {
  SignedPermutation out = alpha;
  if (g.use_complement)
    out = complement(out);
  if (g.use_barring)
    out = barring(out);
  if (g.use_reversal)
    out = reversal(out);
  return out;
}

Pattern apply(SymmetryElement g, Pattern tau) {
  auto [a, b] = tau.letters();
  const auto image = apply(g, SignedPermutation::from_trusted({a, b}));
  return Pattern::from_letters(image.encoded()[0], image.encoded()[1]);
}

PatternAction pattern_action(SymmetryElement g) {
  PatternAction table{};
  for (int i = 0; i < Pattern::kCount; ++i)
    table[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(apply(g, Pattern::from_index(i)).index());
  return table;
}

PatternSet apply(SymmetryElement g, PatternSet set) {
  const PatternAction table = pattern_action(g);
  std::uint8_t out = 0;
  for (Pattern p : set.patterns())
    out = static_cast<std::uint8_t>(out | (1u << table[static_cast<std::size_t>(p.index())]));
  return PatternSet(out);
}

std::vector<SymmetryElement> group_elements() {
  const SymmetryElement generators[] = {SymmetryElement::reversal(), SymmetryElement::barring(),
                                        SymmetryElement::complement()};
  std::map<PatternAction, SymmetryElement> seen;
  std::map<SymmetryElement, PatternAction> by_flags;
  std::deque<std::pair<PatternAction, SymmetryElement>> queue;

  PatternAction id{};
  for (int i = 0; i < Pattern::kCount; ++i)
    id[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  seen.emplace(id, SymmetryElement::identity());
  by_flags.emplace(SymmetryElement::identity(), id);
  queue.emplace_back(id, SymmetryElement::identity());

  while (!queue.empty()) {
    auto [action, flags] = queue.front();
    queue.pop_front();
    for (SymmetryElement gen : generators) {
      const PatternAction gen_action = pattern_action(gen);
      PatternAction next{};
      for (std::size_t i = 0; i < next.size(); ++i)
        next[i] = gen_action[action[i]];
      const SymmetryElement next_flags = compose(gen, flags);
      auto [it, inserted] = seen.emplace(next, next_flags);
      if (!inserted && it->second != next_flags)
        throw std::logic_error("two flag triples induce the same action on B_2");
      auto [jt, fresh] = by_flags.emplace(next_flags, next);
      if (!fresh && jt->second != next)
        throw std::logic_error("flag triple induces two different actions on B_2");
      if (inserted)
        queue.emplace_back(next, next_flags);
    }
  }

  std::vector<SymmetryElement> out;
  out.reserve(seen.size());
  for (const auto& [action, flags] : seen)
    out.push_back(flags);
  std::sort(out.begin(), out.end());
  return out;
}

Orbit orbit_of_set(PatternSet set) {
  Orbit orbit;
  for (SymmetryElement g : group_elements())
    orbit.members.push_back(apply(g, set));
  std::sort(orbit.members.begin(), orbit.members.end());
  orbit.members.erase(std::unique(orbit.members.begin(), orbit.members.end()), orbit.members.end());
  orbit.representative = orbit.members.front();
  return orbit;
}

PatternSet canonical_representative(PatternSet set) {
  return orbit_of_set(set).representative;
}

const std::vector<Orbit>& all_orbits() {
  static const std::vector<Orbit> orbits = [] {
    std::vector<Orbit> out;
    std::array<bool, 256> assigned{};
    for (int mask = 0; mask < 256; ++mask) {
      if (assigned[static_cast<std::size_t>(mask)])
        continue;
      Orbit orbit = orbit_of_set(PatternSet(static_cast<std::uint8_t>(mask)));
      for (PatternSet m : orbit.members)
        assigned[m.mask()] = true;
      out.push_back(std::move(orbit));
    }
    return out;
  }();
  return orbits;
}

std::array<int, 9> orbit_census_by_size() {
  std::array<int, 9> counts{};
  for (const Orbit& orbit : all_orbits())
    ++counts[static_cast<std::size_t>(orbit.representative.size())];
  return counts;
}

} // namespace signedpat
