#include <doctest.h>

#include "signedpat/enumeration.hpp"
#include "signedpat/formulas.hpp"

using namespace signedpat;

namespace {

// Independent prototype enumeration, per mask value.
struct Frozen {
  std::uint8_t mask;
  std::array<long, 8> values;
};

constexpr Frozen kFrozen[] = {
  {0x01, {1, 2, 7, 34, 209, 1546, 13327, 130922}},
  {0x03, {1, 2, 6, 24, 120, 720, 5040, 40320}},
  {0x11, {1, 2, 6, 20, 70, 252, 924, 3432}},
  {0x07, {1, 2, 5, 17, 74, 394, 2484, 18108}},
  {0x55, {1, 2, 4, 8, 16, 32, 64, 128}},
  {0xF0, {1, 2, 4, 11, 40, 184, 1032, 6852}},
  {0x3C, {1, 2, 4, 10, 34, 154, 874, 5914}},
  {0xFE, {1, 2, 1, 1, 1, 1, 1, 1}},
};

// Σ_T b_n(T) over all 256 subsets.
constexpr std::array<long, 8> kTotals{256, 512, 1024, 2688, 10240, 54400, 379844, 3319008};

} // namespace

TEST_CASE("methods parse") {
  CHECK(parse_method("mask") == Method::mask);
  CHECK(to_string(Method::naive) == "naive");
  CHECK_THROWS_AS(parse_method("fast"), Error);
}

TEST_CASE("small cases") {
  for (Method m : {Method::naive, Method::backtrack, Method::mask}) {
    CHECK(count(0, PatternSet::all(), m).value == 1);
    CHECK(count(1, PatternSet::all(), m).value == 2);
    CHECK(count(2, PatternSet{}, m).value == 8);
  }
  CHECK(count(2, pattern_set({"12", "21"}), Method::naive).value == 6);
  CHECK(count(3, pattern_set({"1-2", "-12"}), Method::backtrack).value == 22);
}

TEST_CASE("three engines agree on every subset for n <= 4") {
  for (int n = 0; n <= 4; ++n) {
    const SubsetCounts all = counts_all_subsets(n);
    for (int m = 0; m < 256; ++m) {
      const PatternSet set(static_cast<std::uint8_t>(m));
      const BigInt naive = count_naive(n, set).value;
      CHECK(count_backtrack(n, set).value == naive);
      CHECK(all[static_cast<std::size_t>(m)] == naive);
    }
  }
}

TEST_CASE("frozen sequences") {
  std::array<SubsetCounts, 8> tables;
  for (int n = 0; n < 8; ++n)
    tables[static_cast<std::size_t>(n)] = counts_all_subsets(n);
  for (const Frozen& f : kFrozen)
    for (int n = 0; n < 8; ++n) {
      CAPTURE(int(f.mask));
      CAPTURE(n);
      CHECK(tables[static_cast<std::size_t>(n)][f.mask] == f.values[static_cast<std::size_t>(n)]);
    }
  for (int n = 0; n < 8; ++n) {
    BigInt total = 0;
    for (const BigInt& b : tables[static_cast<std::size_t>(n)])
      total += b;
    CHECK(total == kTotals[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("histogram is independent of thread count and kernel") {
  const MaskHistogram reference = mask_histogram(6, {kDefaultCap, 1, KernelIsa::scalar});
  CHECK(reference.total() == bn_order(6));
  for (KernelIsa isa : available_isas())
    for (unsigned threads : {1u, 2u, 3u, 0u}) {
      const MaskHistogram h = mask_histogram(6, {kDefaultCap, threads, isa});
      CHECK(h.counts == reference.counts);
    }
}

TEST_CASE("disjoint sums") {
  MaskHistogram h;
  h.counts[0b001] = 3;
  h.counts[0b110] = 5;
  const SubsetCounts s = disjoint_sums(h);
  CHECK(s[0] == 8);
  CHECK(s[0b001] == 5);
  CHECK(s[0b010] == 3);
  CHECK(s[0b111] == 0);
}

TEST_CASE("cap is enforced by every engine") {
  for (Method m : {Method::naive, Method::backtrack, Method::mask})
    CHECK_THROWS_AS(count(10, PatternSet{}, m), Error);
  CHECK_THROWS_AS(count(-1, PatternSet{}, Method::backtrack), Error);
  CHECK(count(10, PatternSet::all(), Method::backtrack, {11}).value == 0);
}
