#include "qfkg/instances.hpp"

#include "qfkg/error.hpp"
#include "qfkg/poset_catalog.hpp"
#include "qfkg/random.hpp"

namespace qfkg {

IdealLattice random_lattice(std::uint64_t seed, std::size_t max_irreducibles, std::size_t max_lattice) {
  if (max_irreducibles == 0) throw PreconditionError("need at least one join-irreducible");
  Rng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const auto n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_irreducibles)));
    const auto percent = static_cast<unsigned>(rng.between(0, 70));
    try {
      return IdealLattice::of_poset(random_poset(n, percent, rng.next()), max_lattice);
    } catch (const SizeLimitError&) {
      // too many ideals; draw again
    }
  }
  // A chain always fits when max_lattice > 1.
  return IdealLattice::of_poset(Poset::chain(std::min(max_irreducibles, max_lattice - 1)), max_lattice);
}

RandomInstance random_instance(std::uint64_t seed, std::size_t max_irreducibles, std::size_t max_lattice,
                               Direction g_dir, Direction h_dir) {
  Rng rng(seed);
  IdealLattice lat = random_lattice(rng.next(), max_irreducibles, max_lattice);
  const bool rejection = lat.size() <= kRejectionWeightMaxSize && rng.chance(1, 2);
  WeightTable mu = rejection ? gen_rejection_weight(lat, rng.next()) : gen_logmodular_weight(lat, rng.next());
  auto pick = [&rng](Direction d) {
    if (d != Direction::Unknown) return d;
    return rng.chance(1, 2) ? Direction::Increasing : Direction::Decreasing;
  };
  g_dir = pick(g_dir);
  h_dir = pick(h_dir);
  FuncTable g = gen_monotone_func(lat, rng.next(), g_dir);
  FuncTable h = gen_monotone_func(lat, rng.next(), h_dir);
  return RandomInstance{std::move(lat), std::move(mu), std::move(g), std::move(h),
                        rejection ? "rejection" : "logmodular"};
}

}  // namespace qfkg
