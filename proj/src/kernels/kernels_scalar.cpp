#include <bit>

#include "qfkg/kernels.hpp"

namespace qfkg::kernels::scalar {

void addable(std::span<const std::uint64_t> down_soa, std::size_t n, std::size_t words,
             std::span<const std::uint64_t> ideal, std::span<std::uint64_t> out) {
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t jw = j / 64;
    const std::uint64_t jbit = std::uint64_t{1} << (j % 64);
    if (ideal[jw] & jbit) continue;
    std::uint64_t missing = 0;
    for (std::size_t w = 0; w < words; ++w) missing |= down_soa[w * n + j] & ~ideal[w];
    if (missing == 0) out[jw] |= jbit;
  }
}

void interval_flags(std::span<const std::uint64_t> masks_soa, std::size_t count, std::size_t words,
                    std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                    std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uint64_t bad = 0;
    for (std::size_t w = 0; w < words; ++w) {
      const std::uint64_t m = masks_soa[w * count + i];
      bad |= (m & ~hi[w]) | (lo[w] & ~m);
    }
    out[i] = bad == 0 ? 1 : 0;
  }
}

void popcounts(std::span<const std::uint64_t> masks_soa, std::size_t count, std::size_t words,
               std::span<std::uint32_t> out) {
  for (std::size_t i = 0; i < count; ++i) {
    std::uint32_t c = 0;
    for (std::size_t w = 0; w < words; ++w) c += static_cast<std::uint32_t>(std::popcount(masks_soa[w * count + i]));
    out[i] = c;
  }
}

}  // namespace qfkg::kernels::scalar
