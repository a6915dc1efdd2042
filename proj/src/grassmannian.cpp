#include "qfkg/grassmannian.hpp"

#include "qfkg/error.hpp"

namespace qfkg {

namespace {

Elem require_in_box(const BoxLattice& box, const Partition& u) {
  auto e = box.index_of(u);
  if (!e) {
    throw PreconditionError("partition " + u.to_string() + " does not fit the " + std::to_string(box.rows()) + "x" +
                            std::to_string(box.cols()) + " box");
  }
  return *e;
}

std::size_t step(Grading g) { return g == Grading::Cohomological ? 2 : 1; }

}  // namespace

QPolynomial poincare_poly(const BoxLattice& box, const Partition& u, Grading grading) {
  const Elem eu = require_in_box(box, u);
  QPolynomial p;
  for (std::uint32_t w = 0; w <= eu.id; ++w) {
    if (box.leq(Elem{w}, eu)) p.add_term(step(grading) * box.rank(Elem{w}), 1);
  }
  return p;
}

Thm41Report check_thm41(const BoxLattice& box, const Partition& u, const Partition& v, Grading grading) {
  const Elem eu = require_in_box(box, u);
  const Elem ev = require_in_box(box, v);
  std::vector<Rational> gu(box.size()), gv(box.size());
  for (std::uint32_t w = 0; w < box.size(); ++w) {
    gu[w] = box.leq(Elem{w}, eu) ? 1 : 0;
    gv[w] = box.leq(Elem{w}, ev) ? 1 : 0;
  }
  Thm41Report rep;
  rep.fkg = check_qfkg(box, WeightTable::uniform(box.size()), FuncTable(box, std::move(gu), Direction::Decreasing),
                       FuncTable(box, std::move(gv), Direction::Decreasing));
  rep.u = u;
  rep.v = v;
  rep.u_meet_v = young_meet(u, v);
  rep.p_u = poincare_poly(box, u, grading);
  rep.p_v = poincare_poly(box, v, grading);
  rep.p_box = poincare_poly(box, box.partition(box.top()), grading);
  rep.p_meet = poincare_poly(box, rep.u_meet_v, grading);
  const QPolynomial small = rep.p_u * rep.p_v;
  const QPolynomial big = rep.p_box * rep.p_meet;
  rep.dominance = dominates(small, big);
  rep.sides_match = rep.fkg.lhs.regrade(step(grading)) == small && rep.fkg.rhs.regrade(step(grading)) == big;
  return rep;
}

}  // namespace qfkg
