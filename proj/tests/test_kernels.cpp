#include <doctest.h>

#include "qfkg/ideal_lattice.hpp"
#include "qfkg/kernels.hpp"
#include "qfkg/poset_catalog.hpp"
#include "qfkg/random.hpp"

using namespace qfkg;
using namespace qfkg::kernels;

namespace {

std::vector<std::uint64_t> random_words(Rng& rng, std::size_t n, int density) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) {
    w = rng.next();
    for (int d = 0; d < density; ++d) w &= rng.next();
  }
  return v;
}

struct IsaGuard {
  explicit IsaGuard(Isa isa) { force_isa(isa); }
  ~IsaGuard() { reset_isa(); }
};

}  // namespace

TEST_CASE("scalar and avx2 kernels agree") {
  if (!isa_supported(Isa::Avx2)) {
    MESSAGE("AVX2 unavailable; equivalence not exercised");
    return;
  }
  const KernelTable& s = table(Isa::Scalar);
  const KernelTable& v = table(Isa::Avx2);
  Rng rng(11);
  for (std::size_t words : {1u, 2u, 3u, 5u, 8u}) {
    for (std::size_t count : {0u, 1u, 3u, 4u, 5u, 17u, 64u, 100u}) {
      const auto soa = random_words(rng, words * count, 1);
      std::vector<std::uint64_t> lo(words), hi(words);
      for (std::size_t w = 0; w < words; ++w) {
        lo[w] = count ? soa[w * count] & rng.next() : 0;
        hi[w] = count ? soa[w * count] | rng.next() : ~0ull;
      }
      std::vector<std::uint8_t> f1(count), f2(count);
      s.interval_flags(soa, count, words, lo, hi, f1);
      v.interval_flags(soa, count, words, lo, hi, f2);
      CHECK(f1 == f2);
      std::vector<std::uint32_t> p1(count), p2(count);
      s.popcounts(soa, count, words, p1);
      v.popcounts(soa, count, words, p2);
      CHECK(p1 == p2);
    }
    for (std::size_t n : {1u, 5u, 63u, 64u, 65u}) {
      if (n > words * 64) continue;
      const auto down = random_words(rng, words * n, 2);
      const auto ideal = random_words(rng, words, 0);
      std::vector<std::uint64_t> o1(words), o2(words);
      s.addable(down, n, words, ideal, o1);
      v.addable(down, n, words, ideal, o2);
      CHECK(o1 == o2);
    }
  }
}

TEST_CASE("scalar reference semantics") {
  // popcount and interval flags on hand-built masks
  const std::vector<std::uint64_t> soa = {0b0000, 0b0011, 0b0111, 0b1000};
  std::vector<std::uint32_t> pc(4);
  scalar::popcounts(soa, 4, 1, pc);
  CHECK(pc == std::vector<std::uint32_t>{0, 2, 3, 1});
  const std::vector<std::uint64_t> lo = {0b0001}, hi = {0b0111};
  std::vector<std::uint8_t> fl(4);
  scalar::interval_flags(soa, 4, 1, lo, hi, fl);
  CHECK(fl == std::vector<std::uint8_t>{0, 1, 1, 0});
  // chain 0 < 1 < 2: from {0} only 1 is addable
  const std::vector<std::uint64_t> down = {0b000, 0b001, 0b011};
  std::vector<std::uint64_t> out(1);
  scalar::addable(down, 3, 1, std::vector<std::uint64_t>{0b001}, out);
  CHECK(out[0] == 0b010);
}

TEST_CASE("lattice construction does not depend on the dispatched isa") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Poset p = random_poset(5 + seed * 4, 60 + static_cast<unsigned>(seed), seed);
    std::vector<std::vector<std::uint64_t>> masks[2];
    std::size_t i = 0;
    for (Isa isa : {Isa::Scalar, Isa::Avx2}) {
      if (!isa_supported(isa)) continue;
      IsaGuard guard(isa);
      const auto lat = IdealLattice::of_poset(p, 20000);
      for (std::uint32_t x = 0; x < lat.size(); ++x) {
        masks[i].emplace_back(lat.mask(Elem{x}).begin(), lat.mask(Elem{x}).end());
      }
      CHECK(lat.interval_elements(lat.bottom(), lat.top()).size() == lat.size());
      ++i;
    }
    if (i == 2) CHECK(masks[0] == masks[1]);
  }
}

TEST_CASE("forcing an isa") {
  force_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  reset_isa();
  CHECK(isa_name(Isa::Scalar) == "scalar");
}
