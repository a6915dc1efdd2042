#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "qfkg/lattice_concept.hpp"
#include "qfkg/poset.hpp"
#include "qfkg/rational.hpp"

namespace qfkg {

struct IntervalLattice;
struct ComplementedSublattice;

/// Finite distributive lattice of order ideals of a poset, ordered by
/// inclusion. Elements are bitmasks over the base poset, enumerated in
/// (cardinality, numeric bitmask value) order, so index 0 is the empty ideal
/// and the last index is the full poset. Immutable after construction.
class IdealLattice {
 public:
  static constexpr std::size_t kDefaultCap = std::size_t{1} << 20;

  /// Throws SizeLimitError once more than `cap` ideals are found.
  static IdealLattice of_poset(Poset base, std::size_t cap = kDefaultCap);

  const Poset& base() const { return base_; }
  std::size_t size() const { return rank_.size(); }
  std::size_t words() const { return words_; }
  Elem bottom() const { return Elem{0}; }
  Elem top() const { return Elem{static_cast<std::uint32_t>(size() - 1)}; }
  std::size_t rank(Elem x) const { return rank_[x.id]; }
  std::size_t max_rank() const { return base_.size(); }

  Elem meet(Elem x, Elem y) const;
  Elem join(Elem x, Elem y) const;
  bool leq(Elem x, Elem y) const;

  std::span<const Elem> upper_covers(Elem x) const {
    return {up_.data() + up_off_[x.id], up_off_[x.id + 1] - up_off_[x.id]};
  }
  std::span<const Elem> lower_covers(Elem x) const {
    return {down_.data() + down_off_[x.id], down_off_[x.id + 1] - down_off_[x.id]};
  }

  /// Words of the ideal bitmask of x.
  std::span<const std::uint64_t> mask(Elem x) const { return {masks_.data() + x.id * words_, words_}; }
  /// Word w of every element, contiguous (structure-of-arrays view).
  std::span<const std::uint64_t> masks_soa() const { return masks_soa_; }
  bool contains(Elem x, std::uint32_t poset_elem) const;
  /// Poset elements of the ideal, increasing.
  std::vector<std::uint32_t> ideal(Elem x) const;

  std::optional<Elem> find(std::span<const std::uint64_t> mask) const;
  std::optional<Elem> find_ideal(std::span<const std::uint32_t> poset_elems) const;

  BigInt max_chain_count(Elem x) const;
  std::size_t distance(Elem x, Elem y) const { return lattice_distance(*this, x, y); }

  /// All z with u <= z <= v, increasing.
  std::vector<Elem> interval_elements(Elem u, Elem v) const;
  /// [u, v] as a standalone lattice on the induced subposet of v \ u.
  /// Throws PreconditionError unless u <= v.
  IntervalLattice interval(Elem u, Elem v) const;

  /// Unordered pairs {x, y} (x.id <= y.id) with x ^ y = u and x v y = v.
  /// For u == v this is the single degenerate pair {u, u}.
  std::vector<std::pair<Elem, Elem>> relative_complements(Elem u, Elem v) const;

  /// Elements having a complement in [bottom, top]; checks that they form a
  /// Boolean sublattice and throws InternalError otherwise.
  ComplementedSublattice complemented_elements() const;

  /// Cover pairs (lower, upper), by lower index.
  std::vector<std::pair<Elem, Elem>> cover_pairs() const;

 private:
  std::size_t lookup_slot(const std::uint64_t* key) const;
  Elem must_find(const std::uint64_t* key) const;

  Poset base_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> masks_;      // AoS, words_ per element
  std::vector<std::uint64_t> masks_soa_;  // SoA copy for kernels
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> slots_;  // open-addressing mask -> index
  std::vector<std::size_t> up_off_, down_off_;
  std::vector<Elem> up_, down_;
  // Dense meet/join tables for small lattices.
  std::vector<std::uint32_t> meet_table_, join_table_;
};

struct IntervalLattice {
  IdealLattice lattice;
  /// embedding[i] is the element of the parent lattice matching element i.
  std::vector<Elem> embedding;
};

struct ComplementedSublattice {
  std::vector<Elem> elements;
  /// k with elements.size() == 2^k.
  std::size_t boolean_rank = 0;
};

static_assert(FiniteLattice<IdealLattice>);

}  // namespace qfkg
