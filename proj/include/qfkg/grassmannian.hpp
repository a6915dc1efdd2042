#pragma once

// Type-A Grassmannians only: the Bruhat order on minimal coset
// representatives is the box lattice of partitions. The other minuscule
// families (types B, C, D and the exceptional E6, E7 cases) are not built
// here; any distributive lattice can be passed to check_qfkg directly.

#include "qfkg/fkg.hpp"
#include "qfkg/poly.hpp"
#include "qfkg/young.hpp"

namespace qfkg {

enum class Grading {
  /// q^(2|w|): Betti numbers in even degrees.
  Cohomological,
  /// q^|w|
  Combinatorial,
};

/// sum over w <= u of q^(2|w|) (or q^|w|). PreconditionError if u is not in
/// the box.
QPolynomial poincare_poly(const BoxLattice& box, const Partition& u, Grading grading = Grading::Cohomological);

struct Thm41Report {
  /// check_qfkg on the box with mu = 1 and the indicators of [empty, u] and
  /// [empty, v], in combinatorial grading.
  FkgReport fkg;
  Partition u, v, u_meet_v;
  /// P_u, P_v, P_box and P_{u ^ v} in the requested grading.
  QPolynomial p_u, p_v, p_box, p_meet;
  /// P_u P_v << P_box P_{u ^ v}
  DominanceReport dominance;
  /// The regraded FKG sides equal the Poincare products.
  bool sides_match = true;
  bool holds() const { return dominance.holds() && fkg.holds() && sides_match; }
};

/// PreconditionError if u or v is not in the box.
Thm41Report check_thm41(const BoxLattice& box, const Partition& u, const Partition& v,
                        Grading grading = Grading::Cohomological);

}  // namespace qfkg
