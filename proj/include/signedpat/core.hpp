#pragma once

// Signed permutations, the eight 2-letter signed patterns and containment.
//
// A letter is stored as a nonzero int: the magnitude is the symbol and a
// negative sign marks a barred letter. Patterns are indexed by the fixed
// table below; every 8-bit mask in the library uses this ordering.
//
//   0: [ 1, 2]   1: [ 2, 1]   2: [-1, 2]   3: [ 1,-2]
//   4: [-1,-2]   5: [ 2,-1]   6: [-2, 1]   7: [-2,-1]

#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signedpat/error.hpp"

namespace signedpat {

inline constexpr int kDefaultCap = 9;
// Largest n the enumeration engines accept regardless of the configured cap.
inline constexpr int kHardCap = 16;

class SignedLetter {
public:
  constexpr SignedLetter() = default;
  explicit SignedLetter(int encoded);

  constexpr int encoded() const noexcept { return encoded_; }
  constexpr int magnitude() const noexcept { return encoded_ < 0 ? -encoded_ : encoded_; }
  constexpr bool barred() const noexcept { return encoded_ < 0; }

  friend constexpr bool operator==(SignedLetter, SignedLetter) = default;

private:
  int encoded_ = 1;
};

class SignedPermutation {
public:
  SignedPermutation() = default;

  // Throws Error{ZeroLetter | DuplicateMagnitude | MagnitudeOutOfRange}.
  static SignedPermutation from_letters(std::span<const int> raw);
  static SignedPermutation from_letters(std::initializer_list<int> raw) {
    return from_letters(std::span<const int>(raw.begin(), raw.size()));
  }

  // No validation. The caller guarantees the signed-permutation invariant.
  static SignedPermutation from_trusted(std::vector<int> raw);

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  SignedLetter operator[](int i) const { return SignedLetter(letters_[static_cast<std::size_t>(i)]); }
  std::span<const int> encoded() const noexcept { return letters_; }

  std::string to_string() const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&, const SignedPermutation&) = default;

private:
  explicit SignedPermutation(std::vector<int> letters) : letters_(std::move(letters)) {}
  std::vector<int> letters_;
};

SignedPermutation validate_permutation(std::span<const int> raw);

class Pattern {
public:
  static constexpr int kCount = 8;

  constexpr Pattern() = default;
  static constexpr Pattern from_index(int index) { return Pattern(index); }
  // Throws Error{InvalidArgument} unless the pair is an element of B_2.
  static Pattern from_letters(int first, int second);

  constexpr int index() const noexcept { return index_; }
  constexpr std::pair<int, int> letters() const noexcept { return kTable[static_cast<std::size_t>(index_)]; }
  std::string to_string() const;

  friend constexpr bool operator==(Pattern, Pattern) = default;
  friend constexpr auto operator<=>(Pattern, Pattern) = default;

  static constexpr std::array<std::pair<int, int>, kCount> kTable{{
    {1, 2}, {2, 1}, {-1, 2}, {1, -2}, {-1, -2}, {2, -1}, {-2, 1}, {-2, -1},
  }};

private:
  constexpr explicit Pattern(int index) : index_(index) {}
  int index_ = 0;
};

// Index of the pattern formed by an earlier letter with bar `first_barred`
// and a later letter with bar `second_barred`, given whether the earlier
// letter has the smaller magnitude.
constexpr int pattern_index(bool first_barred, bool second_barred, bool first_smaller) noexcept {
  // rows: first_smaller ? {[1,2],[1,-2],[-1,2],[-1,-2]} : {[2,1],[2,-1],[-2,1],[-2,-1]}
  constexpr int smaller[2][2] = {{0, 3}, {2, 4}};
  constexpr int larger[2][2] = {{1, 5}, {6, 7}};
  return first_smaller ? smaller[first_barred][second_barred] : larger[first_barred][second_barred];
}

// Throws Error{EqualMagnitudes}.
Pattern pair_pattern(SignedLetter a, SignedLetter b);

class PatternSet {
public:
  constexpr PatternSet() = default;
  constexpr explicit PatternSet(std::uint8_t mask) : mask_(mask) {}
  PatternSet(std::initializer_list<Pattern> patterns) {
    for (Pattern p : patterns)
      insert(p);
  }

  static constexpr PatternSet all() { return PatternSet(0xFF); }

  constexpr std::uint8_t mask() const noexcept { return mask_; }
  constexpr int size() const noexcept { return std::popcount(mask_); }
  constexpr bool empty() const noexcept { return mask_ == 0; }
  constexpr bool contains(Pattern p) const noexcept { return (mask_ >> p.index()) & 1u; }
  constexpr void insert(Pattern p) noexcept { mask_ = static_cast<std::uint8_t>(mask_ | (1u << p.index())); }
  constexpr bool is_subset_of(PatternSet other) const noexcept { return (mask_ & ~other.mask_) == 0; }
  constexpr bool disjoint_from(PatternSet other) const noexcept { return (mask_ & other.mask_) == 0; }

  std::vector<Pattern> patterns() const;

  friend constexpr PatternSet operator|(PatternSet a, PatternSet b) noexcept {
    return PatternSet(static_cast<std::uint8_t>(a.mask_ | b.mask_));
  }
  friend constexpr PatternSet operator&(PatternSet a, PatternSet b) noexcept {
    return PatternSet(static_cast<std::uint8_t>(a.mask_ & b.mask_));
  }
  friend constexpr bool operator==(PatternSet, PatternSet) = default;
  friend constexpr auto operator<=>(PatternSet, PatternSet) = default;

private:
  std::uint8_t mask_ = 0;
};

// The set of patterns occurring in one permutation.
using ContainmentMask = PatternSet;

bool contains(const SignedPermutation& alpha, Pattern tau);
ContainmentMask containment_mask(const SignedPermutation& alpha);
ContainmentMask containment_mask(std::span<const int> letters);
bool avoids(const SignedPermutation& alpha, PatternSet forbidden);

// Input range over B_n. Unsigned arrangements are visited in lexicographic
// order; within one arrangement the sign vectors run 0 .. 2^n - 1 where bit i
// set means position i is barred.
class SignedPermutations {
public:
  class iterator {
  public:
    using value_type = SignedPermutation;
    using difference_type = std::ptrdiff_t;
    using reference = const SignedPermutation&;

    iterator() = default;
    reference operator*() const { return current_; }
    const SignedPermutation* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const noexcept { return done_; }

  private:
    friend class SignedPermutations;
    iterator(int n, int first_magnitude);
    void rebuild();

    std::vector<int> arrangement_;
    std::uint32_t signs_ = 0;
    std::uint32_t sign_limit_ = 1;
    bool fixed_first_ = false;
    bool done_ = true;
    SignedPermutation current_;
  };

  iterator begin() const { return iterator(n_, first_magnitude_); }
  std::default_sentinel_t end() const noexcept { return {}; }
  int n() const noexcept { return n_; }

private:
  friend SignedPermutations iterate_bn(int, int);
  friend SignedPermutations iterate_bn_partition(int, int, int);
  SignedPermutations(int n, int first_magnitude) : n_(n), first_magnitude_(first_magnitude) {}
  int n_;
  int first_magnitude_;
};

// Throws Error{CapExceeded} when n > cap, Error{NegativeInput} when n < 0.
SignedPermutations iterate_bn(int n, int cap = kDefaultCap);
// Elements of B_n whose first letter has the given magnitude (1..n).
SignedPermutations iterate_bn_partition(int n, int first_magnitude, int cap = kDefaultCap);

void check_n(int n, int cap);

struct ParsedPatternSet {
  PatternSet set;
  std::vector<std::string> warnings;
};

// "1 2, -1 2, 2 -1". Duplicates are dropped with a warning.
ParsedPatternSet parse_pattern_set(std::string_view text);
std::string format_pattern_set(PatternSet set);

} // namespace signedpat
