#include <atomic>
#include <string>

#include "qfkg/error.hpp"
#include "qfkg/kernels.hpp"

namespace qfkg::kernels {

namespace {

constexpr KernelTable kScalar{&scalar::addable, &scalar::interval_flags, &scalar::popcounts};
#if defined(__x86_64__) || defined(_M_X64)
constexpr KernelTable kAvx2{&avx2::addable, &avx2::interval_flags, &avx2::popcounts};
#endif

Isa detect() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

// -1: not forced.
std::atomic<int> g_forced{-1};

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_supported(Isa isa) {
  if (isa == Isa::Scalar) return true;
  static const Isa best = detect();
  return best == Isa::Avx2;
}

Isa active_isa() {
  const int forced = g_forced.load(std::memory_order_relaxed);
  if (forced >= 0) return static_cast<Isa>(forced);
  static const Isa best = detect();
  return best;
}

void force_isa(Isa isa) {
  if (!isa_supported(isa)) throw PreconditionError("ISA " + std::string(isa_name(isa)) + " not supported on this CPU");
  g_forced.store(static_cast<int>(isa), std::memory_order_relaxed);
}

void reset_isa() { g_forced.store(-1, std::memory_order_relaxed); }

const KernelTable& table(Isa isa) {
#if defined(__x86_64__) || defined(_M_X64)
  if (isa == Isa::Avx2) return kAvx2;
#endif
  (void)isa;
  return kScalar;
}

const KernelTable& active() { return table(active_isa()); }

}  // namespace qfkg::kernels
