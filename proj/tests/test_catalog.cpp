#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "qfkg/ideal_lattice.hpp"
#include "qfkg/poset_catalog.hpp"
#include "qfkg/random.hpp"

using namespace qfkg;

namespace {

using Matrix = std::vector<std::vector<bool>>;

// All strict partial orders on n points, deduplicated by trying every
// permutation.
std::size_t brute_force_classes(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.push_back({i, j});
  std::vector<Matrix> reps;
  for (std::uint32_t bits = 0; bits < (1u << slots.size()); ++bits) {
    Matrix m(n, std::vector<bool>(n, false));
    for (std::size_t k = 0; k < slots.size(); ++k)
      if ((bits >> k) & 1u) m[slots[k].first][slots[k].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (m[i][j] && m[j][i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (m[i][j] && m[j][k] && !m[i][k]) ok = false;
      }
    if (!ok) continue;
    bool seen = false;
    for (const auto& r : reps) {
      std::vector<std::size_t> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i)
          for (std::size_t j = 0; j < n && same; ++j)
            if (m[i][j] != r[perm[i]][perm[j]]) same = false;
        if (same) seen = true;
      } while (!seen && std::next_permutation(perm.begin(), perm.end()));
      if (seen) break;
    }
    if (!seen) reps.push_back(m);
  }
  return reps.size();
}

Poset relabel(const Poset& p, const std::vector<std::uint32_t>& perm) {
  std::vector<CoverPair> covers;
  for (auto [a, b] : p.covers()) covers.push_back({perm[a], perm[b]});
  return Poset::from_covers(p.size(), std::move(covers));
}

}  // namespace

TEST_CASE("poset counts match brute force") {
  const auto all = enumerate_posets(5, 1u << 20);
  std::vector<std::size_t> by_n(6, 0);
  for (const auto& p : all) ++by_n[p.size()];
  for (std::size_t n = 0; n <= 4; ++n) CHECK(by_n[n] == brute_force_classes(n));
  CHECK(by_n[5] == 63);
}

TEST_CASE("poset counts up to six elements") {
  const auto all = enumerate_posets(6, 1u << 20);
  std::vector<std::size_t> by_n(7, 0);
  for (const auto& p : all) ++by_n[p.size()];
  CHECK(by_n == std::vector<std::size_t>{1, 1, 2, 5, 16, 63, 318});
}

TEST_CASE("distributive lattices by size") {
  const auto all = enumerate_posets(15, 16);
  std::vector<std::size_t> by_size(17, 0);
  std::size_t prev = 0;
  for (const auto& p : all) {
    const auto lat = IdealLattice::of_poset(p);
    CHECK(lat.size() >= prev);
    prev = lat.size();
    ++by_size[lat.size()];
  }
  const std::vector<std::size_t> expect = {0, 1, 1, 1, 2, 3, 5, 8, 15, 26, 47, 82, 151, 269, 494, 891, 1639};
  CHECK(by_size == expect);
  CHECK(all.size() == 3635);
}

TEST_CASE("canonical keys are isomorphism invariants") {
  Rng rng(1);
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const std::size_t n = 2 + seed % 9;
    const Poset p = random_poset(n, static_cast<unsigned>(10 + seed % 60), seed);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    CHECK(canonical_key(p) == canonical_key(relabel(p, perm)));
  }
  // distinct classes get distinct keys
  const auto all = enumerate_posets(5, 1u << 20);
  std::vector<std::string> keys;
  for (const auto& p : all) keys.push_back(canonical_key(p));
  std::sort(keys.begin(), keys.end());
  CHECK(std::adjacent_find(keys.begin(), keys.end()) == keys.end());
}

TEST_CASE("random posets are valid and reproducible") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Poset a = random_poset(8, 40, seed), b = random_poset(8, 40, seed);
    CHECK(canonical_key(a) == canonical_key(b));
    CHECK(std::equal(a.covers().begin(), a.covers().end(), b.covers().begin(), b.covers().end()));
    const auto lt = oracle::less_matrix(a);
    for (std::uint32_t i = 0; i < 8; ++i)
      for (std::uint32_t j = 0; j < 8; ++j) {
        CHECK(a.less(i, j) == lt[i][j]);
        if (lt[i][j]) CHECK(i < j);
      }
  }
}
