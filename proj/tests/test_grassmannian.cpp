#include <doctest.h>

#include "oracles.hpp"
#include "qfkg/error.hpp"
#include "qfkg/grassmannian.hpp"

using namespace qfkg;

namespace {

Partition P(std::vector<std::uint32_t> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("Poincare polynomials") {
  const BoxLattice box(2, 2);
  CHECK(poincare_poly(box, Partition()) == QPolynomial{1});
  CHECK(poincare_poly(box, P({2, 2})) == QPolynomial{1, 0, 1, 0, 2, 0, 1, 0, 1});
  CHECK(poincare_poly(box, P({2, 2}), Grading::Combinatorial) == QPolynomial{1, 1, 2, 1, 1});
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t m = 1; m <= 4; ++m) CHECK(poincare_poly(BoxLattice(k, m), P({1})) == QPolynomial{1, 0, 1});
  CHECK_THROWS_AS(poincare_poly(box, P({3})), PreconditionError);
}

TEST_CASE("Poincare polynomial properties") {
  for (auto [k, m] : {std::pair<std::size_t, std::size_t>(2, 2), {2, 3}, {3, 3}, {2, 5}, {3, 4}}) {
    const BoxLattice box(k, m);
    const auto top = poincare_poly(box, box.partition(box.top()));
    CHECK(top.evaluate(1) == Rational(oracle::binomial(static_cast<unsigned>(k + m), static_cast<unsigned>(k))));
    for (std::size_t d = 1; d < static_cast<std::size_t>(top.degree()); d += 2) CHECK(top.coeff(d) == 0);
    for (std::uint32_t x = 0; x < box.size(); ++x) {
      const auto& u = box.partition(Elem{x});
      const auto pu = poincare_poly(box, u);
      // q^2 -> q gives the rank generating function of [empty, u]
      std::vector<Rational> k_u(box.size());
      for (std::uint32_t y = 0; y < box.size(); ++y) k_u[y] = box.leq(Elem{y}, Elem{x}) ? 1 : 0;
      const auto e = e_poly(box, WeightTable::uniform(box.size()), FuncTable(k_u));
      CHECK(pu == e.regrade(2));
      CHECK(poincare_poly(box, u, Grading::Combinatorial) == e);
      for (std::uint32_t y = 0; y < box.size(); ++y) {
        if (box.leq(Elem{x}, Elem{y})) CHECK(dominates(pu, poincare_poly(box, box.partition(Elem{y}))).holds());
      }
    }
  }
}

TEST_CASE("Schubert product inequality") {
  const BoxLattice b22(2, 2);
  const auto full = b22.partition(b22.top());
  const auto eq = check_thm41(b22, full, full);
  CHECK(eq.holds());
  CHECK(eq.p_u * eq.p_v == eq.p_box * eq.p_meet);

  std::size_t pairs = 0;
  for (auto [k, m] : {std::pair<std::size_t, std::size_t>(2, 2), {2, 3}, {3, 3}}) {
    const BoxLattice box(k, m);
    for (std::uint32_t x = 0; x < box.size(); ++x) {
      for (std::uint32_t y = 0; y < box.size(); ++y) {
        const auto r = check_thm41(box, box.partition(Elem{x}), box.partition(Elem{y}));
        CHECK(r.holds());
        CHECK(r.sides_match);
        CHECK(r.u_meet_v == young_meet(r.u, r.v));
        ++pairs;
      }
    }
  }
  CHECK(pairs == 36 + 100 + 400);
  CHECK_THROWS_AS(check_thm41(b22, P({3}), P({1})), PreconditionError);
  CHECK(check_thm41(BoxLattice(2, 3), P({2, 1}), P({3}), Grading::Combinatorial).holds());
}
