#pragma once

// Block containment-mask kernels.
//
// A block is one unsigned arrangement of 1..n together with all 2^n bar
// vectors. The kernel writes out[s] = containment mask of the signed
// permutation whose position i is barred iff bit i of s is set. Every
// variant must produce the same bytes as the scalar reference.

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace signedpat {

enum class KernelIsa { scalar, avx2 };

std::string_view to_string(KernelIsa isa);
bool isa_available(KernelIsa isa);
KernelIsa best_available_isa();
std::vector<KernelIsa> available_isas();

// magnitudes.size() = n <= kHardCap, out.size() >= 2^n.
void block_masks(KernelIsa isa, std::span<const std::uint8_t> magnitudes, std::span<std::uint8_t> out);

namespace detail {
void block_masks_scalar(std::span<const std::uint8_t> magnitudes, std::span<std::uint8_t> out);
// Requires the CPU to support AVX2. Blocks with n < 5 go through the scalar path.
void block_masks_avx2(std::span<const std::uint8_t> magnitudes, std::span<std::uint8_t> out);
} // namespace detail

} // namespace signedpat
