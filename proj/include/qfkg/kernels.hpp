#pragma once

// Bitmask kernels behind ideal enumeration and interval queries.
//
// All mask arrays use a structure-of-arrays layout: word w of item i lives at
// soa[w * count + i]. Each kernel has a scalar reference implementation and an
// AVX2 variant; the active one is chosen at first use from CPUID and can be
// pinned for testing with force_isa().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace qfkg::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);

/// Currently dispatched ISA.
Isa active_isa();
/// Pins dispatch to `isa`; throws PreconditionError if the CPU lacks it.
void force_isa(Isa isa);
/// Returns to CPUID-based selection.
void reset_isa();

/// Bit j of `out` is set iff j is not in `ideal` and every strict
/// predecessor of j is in `ideal`. `down_soa` holds strict down-sets of the
/// `n` poset elements; `ideal` and `out` have `words` words.
using AddableFn = void (*)(std::span<const std::uint64_t> down_soa, std::size_t n, std::size_t words,
                           std::span<const std::uint64_t> ideal, std::span<std::uint64_t> out);

/// out[i] = 1 iff lo ⊆ mask_i ⊆ hi.
using IntervalFlagsFn = void (*)(std::span<const std::uint64_t> masks_soa, std::size_t count,
                                 std::size_t words, std::span<const std::uint64_t> lo,
                                 std::span<const std::uint64_t> hi, std::span<std::uint8_t> out);

/// out[i] = popcount(mask_i).
using PopcountFn = void (*)(std::span<const std::uint64_t> masks_soa, std::size_t count,
                            std::size_t words, std::span<std::uint32_t> out);

struct KernelTable {
  AddableFn addable;
  IntervalFlagsFn interval_flags;
  PopcountFn popcounts;
};

const KernelTable& table(Isa isa);
const KernelTable& active();

namespace scalar {
void addable(std::span<const std::uint64_t> down_soa, std::size_t n, std::size_t words,
             std::span<const std::uint64_t> ideal, std::span<std::uint64_t> out);
void interval_flags(std::span<const std::uint64_t> masks_soa, std::size_t count, std::size_t words,
                    std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                    std::span<std::uint8_t> out);
void popcounts(std::span<const std::uint64_t> masks_soa, std::size_t count, std::size_t words,
               std::span<std::uint32_t> out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void addable(std::span<const std::uint64_t> down_soa, std::size_t n, std::size_t words,
             std::span<const std::uint64_t> ideal, std::span<std::uint64_t> out);
void interval_flags(std::span<const std::uint64_t> masks_soa, std::size_t count, std::size_t words,
                    std::span<const std::uint64_t> lo, std::span<const std::uint64_t> hi,
                    std::span<std::uint8_t> out);
void popcounts(std::span<const std::uint64_t> masks_soa, std::size_t count, std::size_t words,
               std::span<std::uint32_t> out);
}  // namespace avx2
#endif

}  // namespace qfkg::kernels
