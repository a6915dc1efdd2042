#include "qfkg/complexes.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "qfkg/error.hpp"
#include "qfkg/ideal_lattice.hpp"
#include "qfkg/random.hpp"

namespace qfkg {

namespace {

std::vector<std::uint64_t> maximal_only(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  // A proper superset has strictly more bits, so sort by size descending.
  std::stable_sort(sets.begin(), sets.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) > std::popcount(b); });
  std::vector<std::uint64_t> kept;
  for (std::uint64_t s : sets) {
    bool covered = false;
    for (std::uint64_t k : kept) {
      if ((s & k) == s) {
        covered = true;
        break;
      }
    }
    if (!covered) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

void check_vertices(const std::vector<std::string>& v) {
  if (v.size() > SimplicialComplex::kMaxVertices) {
    throw SizeLimitError("complex has " + std::to_string(v.size()) + " vertices; at most " +
                         std::to_string(SimplicialComplex::kMaxVertices) + " are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& s : v) {
    if (!seen.insert(s).second) throw InputError("duplicate vertex label '" + s + "'");
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices, std::vector<std::uint64_t> facets) {
  check_vertices(vertices);
  const std::uint64_t all = vertices.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertices.size()) - 1;
  for (std::uint64_t f : facets) {
    if (f & ~all) throw InputError("facet uses a vertex outside the vertex set");
  }
  SimplicialComplex c;
  c.vertices_ = std::move(vertices);
  c.facets_ = maximal_only(std::move(facets));
  return c;
}

SimplicialComplex SimplicialComplex::from_facet_lists(std::vector<std::string> vertices,
                                                      const std::vector<std::vector<std::uint32_t>>& facets) {
  std::vector<std::uint64_t> masks;
  for (const auto& f : facets) {
    std::uint64_t m = 0;
    for (std::uint32_t v : f) {
      if (v >= vertices.size()) throw InputError("facet uses a vertex outside the vertex set");
      m |= std::uint64_t{1} << v;
    }
    masks.push_back(m);
  }
  return from_facets(std::move(vertices), std::move(masks));
}

SimplicialComplex SimplicialComplex::void_complex(std::vector<std::string> vertices) {
  return from_facets(std::move(vertices), {});
}

SimplicialComplex SimplicialComplex::empty_face(std::vector<std::string> vertices) {
  return from_facets(std::move(vertices), {0});
}

SimplicialComplex SimplicialComplex::simplex(std::vector<std::string> vertices) {
  const std::size_t n = vertices.size();
  check_vertices(vertices);
  return from_facets(std::move(vertices), {(std::uint64_t{1} << n) - 1});
}

std::vector<std::string> SimplicialComplex::numbered_vertices(std::size_t n, std::size_t first) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(std::to_string(first + i));
  return v;
}

bool SimplicialComplex::contains(std::uint64_t face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](std::uint64_t f) { return (face & f) == face; });
}

std::span<const std::uint64_t> SimplicialComplex::faces() const {
  std::call_once(cache_->once, [this] {
    std::vector<char> seen(std::size_t{1} << vertices_.size(), 0);
    for (std::uint64_t f : facets_) {
      for (std::uint64_t s = f;; s = (s - 1) & f) {
        seen[s] = 1;
        if (s == 0) break;
      }
    }
    for (std::uint64_t s = 0; s < seen.size(); ++s) {
      if (seen[s]) cache_->faces.push_back(s);
    }
  });
  return cache_->faces;
}

QPolynomial f_polynomial(const SimplicialComplex& c) {
  if (c.is_void()) throw PreconditionError("the void complex has no f-polynomial");
  std::vector<Rational> coeffs(c.num_vertices() + 1);
  for (std::uint64_t f : c.faces()) coeffs[std::popcount(f)] += 1;
  return QPolynomial(std::move(coeffs));
}

SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (!std::equal(a.vertices().begin(), a.vertices().end(), b.vertices().begin(), b.vertices().end())) {
    throw PreconditionError("intersection needs complexes on the same vertex list");
  }
  std::vector<std::uint64_t> meets;
  for (std::uint64_t f : a.facets()) {
    for (std::uint64_t g : b.facets()) meets.push_back(f & g);
  }
  return SimplicialComplex::from_facets({a.vertices().begin(), a.vertices().end()}, std::move(meets));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::set<std::string_view> va(a.vertices().begin(), a.vertices().end());
  for (const auto& v : b.vertices()) {
    if (va.count(v)) throw PreconditionError("join needs disjoint vertex sets; '" + v + "' is shared");
  }
  std::vector<std::string> vertices(a.vertices().begin(), a.vertices().end());
  vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
  if (vertices.size() > SimplicialComplex::kMaxVertices) {
    throw SizeLimitError("join would have " + std::to_string(vertices.size()) + " vertices");
  }
  std::vector<std::uint64_t> facets;
  const std::size_t shift = a.num_vertices();
  for (std::uint64_t f : a.facets()) {
    for (std::uint64_t g : b.facets()) facets.push_back(f | (g << shift));
  }
  return SimplicialComplex::from_facets(std::move(vertices), std::move(facets));
}

Thm3Report check_thm3(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) throw PreconditionError("theorem checks reject the void complex");
  const SimplicialComplex m = intersect(a, b);
  const std::size_t n = a.num_vertices();
  // Antichain ideals are all subsets; element x has mask x's ideal bits.
  const IdealLattice lat = IdealLattice::of_poset(Poset::antichain(n));
  std::vector<Rational> ia(lat.size()), ib(lat.size());
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    const std::uint64_t face = lat.mask(Elem{x})[0];
    ia[x] = a.contains(face) ? 1 : 0;
    ib[x] = b.contains(face) ? 1 : 0;
  }
  const WeightTable mu = WeightTable::uniform(lat.size());
  const FuncTable g(lat, std::move(ia), Direction::Decreasing);
  const FuncTable h(lat, std::move(ib), Direction::Decreasing);

  Thm3Report rep;
  rep.fkg = check_qfkg(lat, mu, g, h);
  rep.f_a = f_polynomial(a);
  rep.f_b = f_polynomial(b);
  rep.f_meet = f_polynomial(m);
  rep.fpoly_crosscheck = rep.fkg.e_g == rep.f_a && rep.fkg.e_h == rep.f_b && rep.fkg.e_gh == rep.f_meet &&
                         rep.fkg.e_one == QPolynomial::one_plus_q_pow(n);
  const Rational two_n = Rational(BigInt(1) << static_cast<mp_bitcnt_t>(n));
  rep.kleitman_holds = rep.f_a.evaluate(1) * rep.f_b.evaluate(1) <= two_n * rep.f_meet.evaluate(1);
  return rep;
}

bool join_fpoly_identity(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) throw PreconditionError("theorem checks reject the void complex");
  return f_polynomial(join(a, b)) == f_polynomial(a) * f_polynomial(b);
}

namespace {

SimplicialComplex primed_copy(const SimplicialComplex& c) {
  std::vector<std::string> v;
  for (const auto& s : c.vertices()) v.push_back(s + "'");
  return SimplicialComplex::from_facets(std::move(v), {c.facets().begin(), c.facets().end()});
}

}  // namespace

JoinFormReport check_thm3_join_form(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) throw PreconditionError("theorem checks reject the void complex");
  const SimplicialComplex full = SimplicialComplex::simplex({a.vertices().begin(), a.vertices().end()});
  JoinFormReport rep;
  rep.small = f_polynomial(join(a, primed_copy(b)));
  rep.big = f_polynomial(join(full, primed_copy(intersect(a, b))));
  rep.dominance = dominates(rep.small, rep.big);
  return rep;
}

SimplicialComplex random_complex(std::size_t n, std::size_t max_facets, std::size_t max_facet_size,
                                 std::uint64_t seed, std::size_t first_label) {
  Rng rng(seed);
  const std::size_t count = rng.below(max_facets + 1);
  std::vector<std::uint64_t> facets{0};
  for (std::size_t i = 0; i < count && n > 0; ++i) {
    const std::size_t size = rng.below(std::min(max_facet_size, n) + 1);
    std::uint64_t f = 0;
    while (static_cast<std::size_t>(std::popcount(f)) < size) f |= std::uint64_t{1} << rng.below(n);
    facets.push_back(f);
  }
  return SimplicialComplex::from_facets(SimplicialComplex::numbered_vertices(n, first_label), std::move(facets));
}

}  // namespace qfkg
