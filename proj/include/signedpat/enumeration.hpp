#pragma once

// Three independent ways to compute b_n(T):
//   naive     - walk B_n, pair-scan each element, test against T
//   backtrack - grow prefixes left to right, cut a branch as soon as the new
//               letter forms a forbidden pair with an earlier one
//   mask      - histogram of containment masks over B_n (block kernels), then
//               a sum-over-subsets transform that answers all 256 sets at once

#include <array>
#include <cstdint>
#include <string_view>

#include "signedpat/bigint.hpp"
#include "signedpat/core.hpp"
#include "signedpat/kernels.hpp"

namespace signedpat {

enum class Method { naive, backtrack, mask };

std::string_view to_string(Method method);
// Throws Error{ParseError}.
Method parse_method(std::string_view text);

struct EnumerationOptions {
  int cap = kDefaultCap;
  // 0 means std::thread::hardware_concurrency().
  unsigned threads = 1;
  KernelIsa isa = best_available_isa();
};

struct CountResult {
  int n = 0;
  PatternSet set;
  BigInt value;
  Method method = Method::backtrack;
};

struct MaskHistogram {
  int n = 0;
  std::array<BigInt, 256> counts{};

  BigInt total() const;
};

using SubsetCounts = std::array<BigInt, 256>;

CountResult count_naive(int n, PatternSet forbidden, int cap = kDefaultCap);
CountResult count_backtrack(int n, PatternSet forbidden, int cap = kDefaultCap);

MaskHistogram mask_histogram(int n, const EnumerationOptions& options = {});

// result[T] = sum of histogram[m] over masks m disjoint from T.
SubsetCounts disjoint_sums(const MaskHistogram& histogram);

SubsetCounts counts_all_subsets(int n, const EnumerationOptions& options = {});

CountResult count(int n, PatternSet forbidden, Method method, const EnumerationOptions& options = {});

// 2^n * n!
BigInt bn_order(int n);

} // namespace signedpat
