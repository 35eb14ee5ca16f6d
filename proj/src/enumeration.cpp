#include "signedpat/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <vector>

namespace signedpat {

std::string_view to_string(Method method) {
  switch (method) {
  case Method::naive: return "naive";
  case Method::backtrack: return "backtrack";
  case Method::mask: return "mask";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "naive")
    return Method::naive;
  if (text == "backtrack")
    return Method::backtrack;
  if (text == "mask")
    return Method::mask;
  throw Error(ErrorCode::ParseError, "unknown method '" + std::string(text) + "'");
}

BigInt bn_order(int n) {
  BigInt out = 1;
  for (int i = 1; i <= n; ++i)
    out *= 2 * i;
  return out;
}

BigInt MaskHistogram::total() const {
  BigInt sum = 0;
  for (const BigInt& c : counts)
    sum += c;
  return sum;
}

CountResult count_naive(int n, PatternSet forbidden, int cap) {
  std::uint64_t hits = 0;
  for (const SignedPermutation& alpha : iterate_bn(n, cap))
    if (avoids(alpha, forbidden))
      ++hits;
  return {n, forbidden, BigInt(hits), Method::naive};
}

namespace {

class Backtracker {
public:
  Backtracker(int n, PatternSet forbidden) : n_(n), forbidden_(forbidden.mask()) {}

  std::uint64_t run() { return extend(0, 0, 0); }

private:
  // Bit m of unbarred/barred marks magnitude m as already placed.
  std::uint64_t extend(int depth, std::uint32_t unbarred, std::uint32_t barred) {
    if (depth == n_)
      return 1;
    std::uint64_t total = 0;
    const std::uint32_t used = unbarred | barred;
    // ascending encoded order: -n .. -1, 1 .. n
    for (int encoded = -n_; encoded <= n_; ++encoded) {
      if (encoded == 0)
        continue;
      const int m = encoded < 0 ? -encoded : encoded;
      const std::uint32_t bit = 1u << m;
      if (used & bit)
        continue;
      if (formed_patterns(m, encoded < 0, unbarred, barred) & forbidden_)
        continue;
      total += encoded < 0 ? extend(depth + 1, unbarred, barred | bit) : extend(depth + 1, unbarred | bit, barred);
    }
    return total;
  }

  static std::uint32_t formed_patterns(int m, bool bar, std::uint32_t unbarred, std::uint32_t barred) {
    const std::uint32_t below = (1u << m) - 1u;
    std::uint32_t bits = 0;
    if (unbarred & below)
      bits |= 1u << pattern_index(false, bar, true);
    if (barred & below)
      bits |= 1u << pattern_index(true, bar, true);
    if (unbarred & ~below)
      bits |= 1u << pattern_index(false, bar, false);
    if (barred & ~below)
      bits |= 1u << pattern_index(true, bar, false);
    return bits;
  }

  int n_;
  std::uint32_t forbidden_;
};

unsigned resolve_threads(unsigned requested) {
  if (requested == 0) {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
  return requested;
}

void histogram_partition(int n, int first, KernelIsa isa, std::array<std::uint64_t, 256>& hist) {
  std::vector<std::uint8_t> arrangement(static_cast<std::size_t>(n));
  std::iota(arrangement.begin(), arrangement.end(), std::uint8_t{1});
  std::rotate(arrangement.begin(), arrangement.begin() + (first - 1), arrangement.begin() + first);
  std::vector<std::uint8_t> masks(std::size_t{1} << n);
  do {
    block_masks(isa, arrangement, masks);
    for (std::uint8_t m : masks)
      ++hist[m];
  } while (std::next_permutation(arrangement.begin() + 1, arrangement.end()));
}

} // namespace

CountResult count_backtrack(int n, PatternSet forbidden, int cap) {
  check_n(n, cap);
  return {n, forbidden, BigInt(Backtracker(n, forbidden).run()), Method::backtrack};
}

MaskHistogram mask_histogram(int n, const EnumerationOptions& options) {
  check_n(n, options.cap);
  MaskHistogram out;
  out.n = n;
  if (n == 0) {
    out.counts[0] = 1;
    return out;
  }

  const unsigned workers = std::min<unsigned>(resolve_threads(options.threads), static_cast<unsigned>(n));
  std::vector<std::array<std::uint64_t, 256>> partial(workers, std::array<std::uint64_t, 256>{});
  std::atomic<int> next_first{1};
  auto work = [&](unsigned w) {
    for (int first = next_first++; first <= n; first = next_first++)
      histogram_partition(n, first, options.isa, partial[w]);
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back(work, w);
  }

  for (const auto& h : partial)
    for (std::size_t m = 0; m < 256; ++m)
      out.counts[m] += h[m];
  return out;
}

SubsetCounts disjoint_sums(const MaskHistogram& histogram) {
  // subset_sum[S] = sum of histogram over m contained in S
  SubsetCounts subset_sum = histogram.counts;
  for (int bit = 0; bit < Pattern::kCount; ++bit)
    for (int s = 0; s < 256; ++s)
      if (s & (1 << bit))
        subset_sum[static_cast<std::size_t>(s)] += subset_sum[static_cast<std::size_t>(s ^ (1 << bit))];
  SubsetCounts out;
  for (int t = 0; t < 256; ++t)
    out[static_cast<std::size_t>(t)] = subset_sum[static_cast<std::size_t>(~t & 0xFF)];
  return out;
}

SubsetCounts counts_all_subsets(int n, const EnumerationOptions& options) {
  return disjoint_sums(mask_histogram(n, options));
}

CountResult count(int n, PatternSet forbidden, Method method, const EnumerationOptions& options) {
  switch (method) {
  case Method::naive: return count_naive(n, forbidden, options.cap);
  case Method::backtrack: return count_backtrack(n, forbidden, options.cap);
  case Method::mask: {
    const SubsetCounts all = counts_all_subsets(n, options);
    return {n, forbidden, all[forbidden.mask()], Method::mask};
  }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown method");
}

} // namespace signedpat
