// AVX2 variants. This translation unit is compiled with -mavx2; nothing here
// may run unless dispatch has confirmed CPU support.

#include <immintrin.h>

#include <bit>

#include "qfkg/kernels.hpp"

namespace qfkg::kernels::avx2 {

namespace {

inline __m256i load4(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

// 4-bit mask, bit k set iff 64-bit lane k of v is zero.
inline unsigned zero_lanes(__m256i v) {
  const __m256i z = _mm256_cmpeq_epi64(v, _mm256_setzero_si256());
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(z)));
}

// Per-lane popcount of four 64-bit words (nibble lookup, then byte sums).
inline __m256i popcount_epi64(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  const __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

}  // namespace

void addable(std::span<const std::uint64_t> down_soa, std::size_t n, std::size_t words,
             std::span<const std::uint64_t> ideal, std::span<std::uint64_t> out) {
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    __m256i missing = _mm256_setzero_si256();
    for (std::size_t w = 0; w < words; ++w) {
      const __m256i in = _mm256_set1_epi64x(static_cast<long long>(ideal[w]));
      missing = _mm256_or_si256(missing, _mm256_andnot_si256(in, load4(&down_soa[w * n + j])));
    }
    unsigned ok = zero_lanes(missing);
    while (ok) {
      const unsigned k = static_cast<unsigned>(std::countr_zero(ok));
      ok &= ok - 1;
      const std::size_t e = j + k;
      const std::uint64_t bit = std::uint64_t{1} << (e % 64);
      if (!(ideal[e / 64] & bit)) out[e / 64] |= bit;
    }
  }
  for (; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    if (ideal[j / 64] & bit) continue;
    std::uint64_t missing = 0;
    for (std::size_t w = 0; w < words; ++w) missing |= down_soa[w * n + j] & ~ideal[w];
    if (missing == 0) out[j / 64] |= bit;
  }
}

void interval_flags(std::span<const std::uint64_t> masks_soa, std::size_t count, std::size_t words,
                    std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                    std::span<std::uint8_t> out) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i bad = _mm256_setzero_si256();
    for (std::size_t w = 0; w < words; ++w) {
      const __m256i m = load4(&masks_soa[w * count + i]);
      const __m256i h = _mm256_set1_epi64x(static_cast<long long>(hi[w]));
      const __m256i l = _mm256_set1_epi64x(static_cast<long long>(lo[w]));
      bad = _mm256_or_si256(bad, _mm256_or_si256(_mm256_andnot_si256(h, m), _mm256_andnot_si256(m, l)));
    }
    const unsigned ok = zero_lanes(bad);
    for (unsigned k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint8_t>((ok >> k) & 1u);
  }
  for (; i < count; ++i) {
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
  std::size_t i = 0;
  alignas(32) std::uint64_t lanes[4];
  for (; i + 4 <= count; i += 4) {
    __m256i acc = _mm256_setzero_si256();
    for (std::size_t w = 0; w < words; ++w) acc = _mm256_add_epi64(acc, popcount_epi64(load4(&masks_soa[w * count + i])));
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    for (unsigned k = 0; k < 4; ++k) out[i + k] = static_cast<std::uint32_t>(lanes[k]);
  }
  for (; i < count; ++i) {
    std::uint32_t c = 0;
    for (std::size_t w = 0; w < words; ++w) c += static_cast<std::uint32_t>(std::popcount(masks_soa[w * count + i]));
    out[i] = c;
  }
}

}  // namespace qfkg::kernels::avx2
