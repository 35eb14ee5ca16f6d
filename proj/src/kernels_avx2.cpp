#include "signedpat/core.hpp"
#include "signedpat/kernels.hpp"

#include <array>
#include <vector>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define SIGNEDPAT_X86 1
#else
#define SIGNEDPAT_X86 0
#endif

namespace signedpat::detail {

#if SIGNEDPAT_X86

namespace {

constexpr int kLanes = 32;
constexpr int kLaneBits = 5; // log2(kLanes)

struct PairTerm {
  int i;
  int j;
  // pattern bit for (bar_i, bar_j) = (0,0), (0,1), (1,0), (1,1)
  std::array<std::uint8_t, 4> bits;
};

} // namespace

__attribute__((target("avx2")))
void block_masks_avx2(std::span<const std::uint8_t> magnitudes, std::span<std::uint8_t> out) {
  const int n = static_cast<int>(magnitudes.size());
  if (n < kLaneBits) {
    block_masks_scalar(magnitudes, out);
    return;
  }

  std::vector<PairTerm> terms;
  terms.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool smaller = magnitudes[static_cast<std::size_t>(i)] < magnitudes[static_cast<std::size_t>(j)];
      PairTerm t{i, j, {}};
      for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
          t.bits[static_cast<std::size_t>(bi * 2 + bj)] =
            static_cast<std::uint8_t>(1u << pattern_index(bi, bj, smaller));
      terms.push_back(t);
    }

  __m256i pv[kHardCap * (kHardCap - 1) / 2][4];
  for (std::size_t p = 0; p < terms.size(); ++p)
    for (std::size_t k = 0; k < 4; ++k)
      pv[p][k] = _mm256_set1_epi8(static_cast<char>(terms[p].bits[k]));

  // Positions 0..4 vary across lanes; the rest are constant within a block.
  alignas(32) std::uint8_t lane_bar[kLaneBits][kLanes];
  for (int i = 0; i < kLaneBits; ++i)
    for (int k = 0; k < kLanes; ++k)
      lane_bar[i][k] = ((k >> i) & 1) ? 0xFF : 0x00;

  __m256i bar[kHardCap];
  for (int i = 0; i < kLaneBits; ++i)
    bar[i] = _mm256_load_si256(reinterpret_cast<const __m256i*>(lane_bar[i]));

  const __m256i ones = _mm256_set1_epi8(static_cast<char>(0xFF));
  const __m256i zero = _mm256_setzero_si256();
  const std::uint32_t blocks = (1u << n) >> kLaneBits;
  for (std::uint32_t block = 0; block < blocks; ++block) {
    for (int i = kLaneBits; i < n; ++i)
      bar[i] = ((block >> (i - kLaneBits)) & 1u) ? ones : zero;

    __m256i acc = zero;
    for (std::size_t p = 0; p < terms.size(); ++p) {
      const __m256i bi = bar[terms[p].i];
      const __m256i bj = bar[terms[p].j];
      const __m256i unbarred_first = _mm256_blendv_epi8(pv[p][0], pv[p][1], bj);
      const __m256i barred_first = _mm256_blendv_epi8(pv[p][2], pv[p][3], bj);
      acc = _mm256_or_si256(acc, _mm256_blendv_epi8(unbarred_first, barred_first, bi));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + block * kLanes), acc);
  }
}

#else

void block_masks_avx2(std::span<const std::uint8_t> magnitudes, std::span<std::uint8_t> out) {
  block_masks_scalar(magnitudes, out);
}

#endif

} // namespace signedpat::detail
