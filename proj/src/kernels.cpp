#include "signedpat/kernels.hpp"

#include "signedpat/core.hpp"

namespace signedpat {

std::string_view to_string(KernelIsa isa) {
  switch (isa) {
  case KernelIsa::scalar: return "scalar";
  case KernelIsa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(KernelIsa isa) {
  switch (isa) {
  case KernelIsa::scalar: return true;
  case KernelIsa::avx2:
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
  }
  return false;
}

KernelIsa best_available_isa() {
  static const KernelIsa best = isa_available(KernelIsa::avx2) ? KernelIsa::avx2 : KernelIsa::scalar;
  return best;
}

std::vector<KernelIsa> available_isas() {
  std::vector<KernelIsa> out{KernelIsa::scalar};
  if (isa_available(KernelIsa::avx2))
    out.push_back(KernelIsa::avx2);
  return out;
}

void block_masks(KernelIsa isa, std::span<const std::uint8_t> magnitudes, std::span<std::uint8_t> out) {
  if (magnitudes.size() > static_cast<std::size_t>(kHardCap))
    throw Error(ErrorCode::CapExceeded, "block kernel supports n <= " + std::to_string(kHardCap));
  if (out.size() < (std::size_t{1} << magnitudes.size()))
    throw Error(ErrorCode::InvalidArgument, "block kernel output buffer too small");
  if (isa == KernelIsa::avx2 && isa_available(KernelIsa::avx2))
    detail::block_masks_avx2(magnitudes, out);
  else
    detail::block_masks_scalar(magnitudes, out);
}

} // namespace signedpat
