#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "qfkg/fkg.hpp"
#include "qfkg/ideal_lattice.hpp"

namespace qfkg {

/// A hypothesis-satisfying q-FKG instance: random poset, log-supermodular
/// weight and monotone g, h.
struct RandomInstance {
  IdealLattice lattice;
  WeightTable mu;
  FuncTable g, h;
  /// "logmodular" or "rejection"
  std::string weight_kind;
};

/// Poset on 1..max_irreducibles elements with a random relation density,
/// redrawn until its lattice has at most max_lattice elements. Directions of
/// g and h are random unless given.
RandomInstance random_instance(std::uint64_t seed, std::size_t max_irreducibles, std::size_t max_lattice = 64,
                               Direction g_dir = Direction::Unknown, Direction h_dir = Direction::Unknown);

/// Random poset with at most max_irreducibles elements whose lattice has at
/// most max_lattice elements.
IdealLattice random_lattice(std::uint64_t seed, std::size_t max_irreducibles, std::size_t max_lattice);

}  // namespace qfkg
