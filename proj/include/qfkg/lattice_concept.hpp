#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qfkg/rational.hpp"

namespace qfkg {

/// Index of an element inside a specific finite lattice.
struct Elem {
  std::uint32_t id = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

using LatticeElement = Elem;

/// A finite graded lattice whose element indices 0..size()-1 are ordered by
/// nondecreasing rank (so index order is a linear extension), with bottom at
/// index 0 and top at index size()-1.
template <class L>
concept FiniteLattice = requires(const L& lat, Elem x) {
  { lat.size() } -> std::convertible_to<std::size_t>;
  { lat.rank(x) } -> std::convertible_to<std::size_t>;
  { lat.max_rank() } -> std::convertible_to<std::size_t>;
  { lat.meet(x, x) } -> std::same_as<Elem>;
  { lat.join(x, x) } -> std::same_as<Elem>;
  { lat.leq(x, x) } -> std::same_as<bool>;
  { lat.upper_covers(x) } -> std::convertible_to<std::span<const Elem>>;
  { lat.lower_covers(x) } -> std::convertible_to<std::span<const Elem>>;
};

/// m(x): number of maximal chains in [bottom, x], by DP over lower covers.
template <FiniteLattice L>
std::vector<BigInt> max_chain_counts(const L& lat) {
  std::vector<BigInt> m(lat.size());
  if (m.empty()) return m;
  m[0] = 1;
  for (std::uint32_t i = 1; i < lat.size(); ++i) {
    BigInt acc = 0;
    for (Elem y : lat.lower_covers(Elem{i})) acc += m[y.id];
    m[i] = acc;
  }
  return m;
}

template <FiniteLattice L>
std::size_t lattice_distance(const L& lat, Elem x, Elem y) {
  return lat.rank(lat.join(x, y)) - lat.rank(lat.meet(x, y));
}

}  // namespace qfkg
