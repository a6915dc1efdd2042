#pragma once

// Brute-force reference computations, independent of the library code paths
// they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qfkg/poset.hpp"
#include "qfkg/rational.hpp"

namespace oracle {

using Set = std::uint32_t;

inline std::vector<std::vector<bool>> less_matrix(const qfkg::Poset& p) {
  std::vector<std::vector<bool>> lt(p.size(), std::vector<bool>(p.size(), false));
  for (auto [a, b] : p.covers()) lt[a][b] = true;
  for (std::size_t k = 0; k < p.size(); ++k)
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j)
        if (lt[i][k] && lt[k][j]) lt[i][j] = true;
  return lt;
}

/// Down-closed subsets of a poset with at most 20 elements.
inline std::vector<Set> ideals(const qfkg::Poset& p) {
  const auto lt = less_matrix(p);
  const std::size_t n = p.size();
  std::vector<Set> out;
  for (Set s = 0; s < (Set{1} << n); ++s) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b) {
      if (!((s >> b) & 1u)) continue;
      for (std::size_t a = 0; a < n; ++a) {
        if (lt[a][b] && !((s >> a) & 1u)) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return out;
}

/// Saturated chains from the empty set to `top` through the given family,
/// one element added per step.
inline std::uint64_t chains_to(const std::vector<Set>& family, Set top) {
  std::map<Set, std::uint64_t> memo;
  std::function<std::uint64_t(Set)> go = [&](Set s) -> std::uint64_t {
    if (s == top) return 1;
    if (auto it = memo.find(s); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (Set t : family) {
      if ((t & s) == s && __builtin_popcount(t) == __builtin_popcount(s) + 1 && (t & top) == t) total += go(t);
    }
    return memo[s] = total;
  };
  return go(0);
}

/// Standard Young tableaux of shape `parts`: order-ideal DP over filled
/// cells, cells numbered row by row.
inline std::uint64_t syt_count(const std::vector<std::uint32_t>& parts) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cells;
  for (std::uint32_t i = 0; i < parts.size(); ++i)
    for (std::uint32_t j = 0; j < parts[i]; ++j) cells.push_back({i, j});
  const std::size_t n = cells.size();
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (Set s = 0; s < ways.size(); ++s) {
    if (!ways[s]) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if ((s >> c) & 1u) continue;
      bool ok = true;
      for (std::size_t d = 0; d < n; ++d) {
        const bool above = cells[d].first <= cells[c].first && cells[d].second <= cells[c].second && d != c;
        if (above && !((s >> d) & 1u)) ok = false;
      }
      if (ok) ways[s | (Set{1} << c)] += ways[s];
    }
  }
  return ways.back();
}

/// p(n) by Euler's pentagonal number recurrence.
inline std::vector<qfkg::BigInt> partition_counts(std::size_t nmax) {
  std::vector<qfkg::BigInt> p(nmax + 1, 0);
  p[0] = 1;
  for (long n = 1; n <= static_cast<long>(nmax); ++n) {
    for (long k = 1;; ++k) {
      const long g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2) ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

/// All partitions of n as part lists, by recursive generation.
inline void partitions(std::uint32_t n, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                       std::vector<std::vector<std::uint32_t>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::uint32_t>> partitions(std::uint32_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> cur;
  partitions(n, n, cur, out);
  return out;
}

inline qfkg::BigInt binomial(unsigned n, unsigned k) {
  qfkg::BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace oracle
