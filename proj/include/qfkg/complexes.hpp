#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "qfkg/fkg.hpp"
#include "qfkg/poly.hpp"

namespace qfkg {

/// Simplicial complex on a labeled vertex set, stored by its facets as
/// vertex bitmasks. The void complex (no faces at all) is representable;
/// every other complex contains the empty face. The full face set is built
/// on first use and shared between copies.
class SimplicialComplex {
 public:
  static constexpr std::size_t kMaxVertices = 24;

  SimplicialComplex() = default;

  /// Facets need not be maximal or distinct; they are reduced. An empty
  /// facet list gives the void complex. Throws InputError on out-of-range
  /// bits or too many vertices.
  static SimplicialComplex from_facets(std::vector<std::string> vertices, std::vector<std::uint64_t> facets);
  static SimplicialComplex from_facet_lists(std::vector<std::string> vertices,
                                            const std::vector<std::vector<std::uint32_t>>& facets);
  static SimplicialComplex void_complex(std::vector<std::string> vertices);
  /// {empty face}
  static SimplicialComplex empty_face(std::vector<std::string> vertices);
  /// 2^V
  static SimplicialComplex simplex(std::vector<std::string> vertices);
  /// Vertex labels "0", "1", ...
  static std::vector<std::string> numbered_vertices(std::size_t n, std::size_t first = 0);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::span<const std::string> vertices() const { return vertices_; }
  /// Maximal faces, increasing by mask value.
  std::span<const std::uint64_t> facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool contains(std::uint64_t face) const;
  /// Every face, increasing by mask value.
  std::span<const std::uint64_t> faces() const;

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.vertices_ == b.vertices_ && a.facets_ == b.facets_;
  }

 private:
  struct FaceCache {
    std::once_flag once;
    std::vector<std::uint64_t> faces;
  };

  std::vector<std::string> vertices_;
  std::vector<std::uint64_t> facets_;
  std::shared_ptr<FaceCache> cache_ = std::make_shared<FaceCache>();
};

/// Coefficient of q^i counts faces with i vertices. PreconditionError on the
/// void complex.
QPolynomial f_polynomial(const SimplicialComplex& c);

/// PreconditionError unless the vertex lists agree.
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);

/// Faces are unions of a face of a and a face of b. PreconditionError unless
/// the vertex labels are disjoint.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

struct Thm3Report {
  /// Comparison of f_a * f_b against (1+q)^|V| * f_{a^b}, via the Boolean
  /// lattice with indicator functions.
  FkgReport fkg;
  QPolynomial f_a, f_b, f_meet;
  /// e_poly of each indicator equals the directly counted f-polynomial.
  bool fpoly_crosscheck = true;
  /// The q = 1 specialization: f_a(1) f_b(1) <= 2^|V| f_{a^b}(1).
  bool kleitman_holds = true;
  bool holds() const { return fkg.holds() && fpoly_crosscheck && kleitman_holds; }
};

/// PreconditionError on mismatched vertex sets or a void complex.
Thm3Report check_thm3(const SimplicialComplex& a, const SimplicialComplex& b);

/// f(a * b) == f(a) f(b) with the join built explicitly. PreconditionError
/// unless the vertex sets are disjoint.
bool join_fpoly_identity(const SimplicialComplex& a, const SimplicialComplex& b);

struct JoinFormReport {
  /// f(a * b') and f(2^V * (a ^ b)'), b' a copy of b on fresh vertices.
  QPolynomial small, big;
  DominanceReport dominance;
  bool holds() const { return dominance.holds(); }
};

/// The join restatement of check_thm3 for complexes on a common vertex set.
JoinFormReport check_thm3_join_form(const SimplicialComplex& a, const SimplicialComplex& b);

/// Random complex on n vertices: up to max_facets random faces of size at
/// most max_facet_size, always containing the empty face.
SimplicialComplex random_complex(std::size_t n, std::size_t max_facets, std::size_t max_facet_size,
                                 std::uint64_t seed, std::size_t first_label = 0);

}  // namespace qfkg
