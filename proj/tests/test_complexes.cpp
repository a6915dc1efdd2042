#include <doctest.h>

#include "qfkg/complexes.hpp"
#include "qfkg/error.hpp"
#include "qfkg/random.hpp"

using namespace qfkg;

namespace {

using V = std::vector<std::string>;

// Faces counted by size: every subset of the vertex set inside some facet.
QPolynomial f_direct(const SimplicialComplex& c) {
  QPolynomial p;
  const std::size_t n = c.num_vertices();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    for (std::uint64_t f : c.facets()) {
      if ((s & f) == s) {
        p.add_term(static_cast<std::size_t>(__builtin_popcountll(s)), 1);
        break;
      }
    }
  }
  return p;
}

}  // namespace

TEST_CASE("f-polynomial examples") {
  CHECK(f_polynomial(SimplicialComplex::simplex(SimplicialComplex::numbered_vertices(4))) ==
        QPolynomial::one_plus_q_pow(4));
  CHECK(f_polynomial(SimplicialComplex::empty_face(V{"a", "b"})) == QPolynomial{1});
  const auto boundary = SimplicialComplex::from_facet_lists(V{"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(f_polynomial(boundary) == QPolynomial{1, 3, 3});
  CHECK_THROWS_AS(f_polynomial(SimplicialComplex::void_complex(V{"a"})), PreconditionError);
}

TEST_CASE("facets are reduced to maximal faces") {
  const auto c = SimplicialComplex::from_facet_lists(V{"a", "b", "c"}, {{0}, {0, 1}, {0, 1}, {}});
  CHECK(c.facets().size() == 1);
  CHECK(c.contains(0b01));
  CHECK_FALSE(c.contains(0b100));
  CHECK_THROWS_AS(SimplicialComplex::from_facet_lists(V{"a"}, {{3}}), InputError);
}

TEST_CASE("intersections") {
  const V vs{"a", "b", "c"};
  const auto d = SimplicialComplex::from_facet_lists(vs, {{0, 1}, {2}});
  CHECK(intersect(d, d) == d);
  CHECK(intersect(d, SimplicialComplex::simplex(vs)) == d);
  const auto e1 = SimplicialComplex::from_facet_lists(vs, {{0, 1}});
  const auto e2 = SimplicialComplex::from_facet_lists(vs, {{1, 2}});
  CHECK(intersect(e1, e2) == SimplicialComplex::from_facet_lists(vs, {{1}}));
  CHECK_THROWS_AS(intersect(e1, SimplicialComplex::simplex(V{"x", "y", "z"})), PreconditionError);
}

TEST_CASE("f-polynomial inequality") {
  const auto s = SimplicialComplex::simplex(SimplicialComplex::numbered_vertices(3));
  const auto r = check_thm3(s, s);
  CHECK(r.holds());
  CHECK(r.fkg.lhs == QPolynomial::one_plus_q_pow(6));
  CHECK(r.fkg.rhs == QPolynomial::one_plus_q_pow(6));

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 1 + seed % 10;
    const auto a = random_complex(n, 6, 5, derive_seed(seed, 0));
    const auto b = random_complex(n, 6, 5, derive_seed(seed, 1));
    const auto t = check_thm3(a, b);
    CHECK(t.holds());
    CHECK(t.f_a == f_direct(a));
    CHECK(t.f_b == f_direct(b));
    CHECK(t.f_meet == f_direct(intersect(a, b)));
    // q = 1: Kleitman
    CHECK(t.f_a.evaluate(1) * t.f_b.evaluate(1) <= Rational(1u << n) * t.f_meet.evaluate(1));
    CHECK(check_thm3_join_form(a, b).holds());
  }
}

TEST_CASE("f-polynomial basics on random complexes") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 9;
    const auto a = random_complex(n, 5, 4, seed);
    const auto f = f_polynomial(a);
    CHECK(f.coeff(0) == 1);
    CHECK(f.evaluate(1) == Rational(static_cast<long>(a.faces().size())));
    // adding facets only grows the f-polynomial
    std::vector<std::uint64_t> more(a.facets().begin(), a.facets().end());
    more.push_back(derive_seed(seed, 9) & ((std::uint64_t{1} << n) - 1));
    const auto bigger = SimplicialComplex::from_facets(SimplicialComplex::numbered_vertices(n), more);
    CHECK(dominates(f, f_polynomial(bigger)).holds());
  }
}

TEST_CASE("joins") {
  const auto d = SimplicialComplex::from_facet_lists(V{"a", "b", "c"}, {{0, 1}, {2}});
  const auto e = SimplicialComplex::empty_face(V{"x"});
  CHECK(f_polynomial(join(d, e)) == f_polynomial(d));
  const auto p = SimplicialComplex::simplex(V{"p"});
  const auto q = SimplicialComplex::simplex(V{"q"});
  CHECK(f_polynomial(join(p, q)) == QPolynomial{1, 2, 1});
  CHECK_THROWS_AS(join(d, d), PreconditionError);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 1 + seed % 6, m = 1 + (seed / 6) % 6;
    const auto a = random_complex(n, 4, 4, derive_seed(seed, 0));
    const auto b = random_complex(m, 4, 4, derive_seed(seed, 1), n);
    CHECK(join_fpoly_identity(a, b));
    CHECK(f_direct(join(a, b)) == f_direct(a) * f_direct(b));
  }
}
