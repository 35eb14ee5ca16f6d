#include "signedpat/core.hpp"
#include "signedpat/kernels.hpp"

namespace signedpat::detail {

void block_masks_scalar(std::span<const std::uint8_t> magnitudes, std::span<std::uint8_t> out) {
  const std::size_t n = magnitudes.size();
  const std::uint32_t count = 1u << n;
  for (std::uint32_t s = 0; s < count; ++s) {
    std::uint8_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const bool bar_i = (s >> i) & 1u;
      for (std::size_t j = i + 1; j < n; ++j) {
        const bool bar_j = (s >> j) & 1u;
        mask = static_cast<std::uint8_t>(
          mask | (1u << pattern_index(bar_i, bar_j, magnitudes[i] < magnitudes[j])));
      }
    }
    out[s] = mask;
  }
}

} // namespace signedpat::detail
