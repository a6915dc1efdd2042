#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qfkg/fkg.hpp"
#include "qfkg/lattice_concept.hpp"
#include "qfkg/poly.hpp"
#include "qfkg/rational.hpp"

namespace qfkg {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws InputError unless weakly decreasing
  /// and otherwise positive.
  explicit Partition(std::vector<std::uint32_t> parts);
  /// "3,1"; the empty partition is "", "0" or "()".
  static Partition parse(std::string_view text);

  std::span<const std::uint32_t> parts() const { return parts_; }
  std::size_t size() const { return size_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// Zero past the last part.
  std::uint32_t part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Partition conjugate() const;
  /// Hook length of cell (i, j), both 0-based.
  std::uint32_t hook(std::size_t i, std::size_t j) const;
  /// Row by row.
  std::vector<std::uint32_t> hook_lengths() const;
  /// sigma fits inside this diagram.
  bool contains(const Partition& sigma) const;
  /// Rows where a cell can be added (resp. removed), increasing.
  std::vector<std::size_t> addable_rows() const;
  std::vector<std::size_t> removable_rows() const;
  Partition with_cell(std::size_t row) const;
  Partition without_cell(std::size_t row) const;
  /// "3,1"; "()" for the empty partition.
  std::string to_string() const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<std::uint32_t> parts_;
  std::size_t size_ = 0;
};

Partition young_meet(const Partition& a, const Partition& b);
Partition young_join(const Partition& a, const Partition& b);

/// |lambda|! / product of hook lengths. InternalError if not exact.
BigInt f_lambda(const Partition& lambda);

inline constexpr std::size_t kSytBruteforceCap = 12;
/// Standard Young tableaux counted by filling cells one at a time.
/// SizeLimitError above `cap` cells.
BigInt count_syt_bruteforce(const Partition& lambda, std::size_t cap = kSytBruteforceCap);

/// Partitions of n, lexicographically decreasing ((n) first).
std::vector<Partition> partitions_of(std::size_t n);
/// Partitions with at most `rows` parts, each at most `cols`.
std::vector<Partition> partitions_in_box(std::size_t rows, std::size_t cols);

/// i(n) = i(n-1) + (n-1) i(n-2)
BigInt involution_count(std::size_t n);

/// Partitions inside a rows x cols box ordered by containment: the interval
/// [empty, cols^rows] of Young's lattice. Elements are ordered by (size,
/// parts).
class BoxLattice {
 public:
  static constexpr std::size_t kMaxSide = 15;

  /// PreconditionError if either side exceeds kMaxSide; SizeLimitError past
  /// `cap` elements.
  BoxLattice(std::size_t rows, std::size_t cols, std::size_t cap = std::size_t{1} << 20);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return elems_.size(); }
  std::size_t rank(Elem x) const { return elems_[x.id].size(); }
  std::size_t max_rank() const { return rows_ * cols_; }
  Elem bottom() const { return Elem{0}; }
  Elem top() const { return Elem{static_cast<std::uint32_t>(size() - 1)}; }
  Elem meet(Elem x, Elem y) const;
  Elem join(Elem x, Elem y) const;
  bool leq(Elem x, Elem y) const { return elems_[y.id].contains(elems_[x.id]); }
  std::span<const Elem> upper_covers(Elem x) const {
    return {up_.data() + up_off_[x.id], up_off_[x.id + 1] - up_off_[x.id]};
  }
  std::span<const Elem> lower_covers(Elem x) const {
    return {down_.data() + down_off_[x.id], down_off_[x.id + 1] - down_off_[x.id]};
  }

  const Partition& partition(Elem x) const { return elems_[x.id]; }
  bool fits(const Partition& p) const { return p.length() <= rows_ && p.part(0) <= cols_; }
  std::optional<Elem> index_of(const Partition& p) const;

 private:
  std::uint64_t key(const Partition& p) const;
  Elem lookup(const Partition& p) const;

  std::size_t rows_, cols_;
  std::vector<Partition> elems_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::size_t> up_off_, down_off_;
  std::vector<Elem> up_, down_;
  std::vector<std::uint32_t> meet_table_, join_table_;
};

static_assert(FiniteLattice<BoxLattice>);

/// The box lattice and the ideal lattice of the d x d grid poset agree as
/// graded posets under lambda -> cells {(i, j) : j < lambda_i}.
bool box_matches_grid_ideals(std::size_t d);

// ---------------------------------------------------------------------------
// Weight and function descriptors on Young's lattice

/// Closed vocabulary of functions Y -> Q.
///   constant c      "c" or "const:c"
///   |lambda|        "size"
///   a|lambda| + b   "affine:a,b"
///   lambda_1        "first"
///   parts           "parts"
///   theta^|lambda|  "theta:t"
///   f^e/(|lambda|!)^s  "fpow:e" or "fpow:e,s"
///   explicit table  (programmatic or JSON only)
class Descriptor {
 public:
  enum class Kind { Constant, Size, AffineSize, FirstPart, NumParts, ThetaPow, FPower, Table };

  static Descriptor constant(Rational c);
  static Descriptor size();
  static Descriptor affine_size(Rational a, Rational b);
  static Descriptor first_part();
  static Descriptor num_parts();
  static Descriptor theta_pow(Rational theta);
  static Descriptor f_power(long e, long s = 0);
  static Descriptor table(std::map<Partition, Rational> values);
  /// Throws InputError on unknown syntax.
  static Descriptor parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// Throws InputError for a partition missing from a table.
  Rational operator()(const Partition& lambda) const;
  std::string to_string() const;

 private:
  Kind kind_ = Kind::Constant;
  Rational a_ = 1, b_ = 0;
  long e_ = 0, s_ = 0;
  std::map<Partition, Rational> table_;
};

// ---------------------------------------------------------------------------
// Log-supermodularity of tableau weights (finite boxes)

struct Prop61Report {
  std::size_t elements = 0;
  LsmResult all_pairs;
  LsmResult distance_two;
  bool modes_agree() const { return all_pairs.holds == distance_two.holds; }
  bool holds() const { return all_pairs.holds && distance_two.holds; }
};

/// lambda -> f^t / (|lambda|!)^s on the d x d box, checked by all pairs and
/// by distance-two pairs. PreconditionError unless s <= t and d <= 8.
Prop61Report check_prop61(unsigned s, unsigned t, std::size_t d);

struct HookRatioReport {
  std::size_t pairs_checked = 0;
  std::size_t cells_checked = 0;
  bool holds = true;
  std::string first_failure;
};

/// For nu = lambda ^ sigma, lambda = nu + c', sigma = nu + c with distinct
/// addable cells c, c' and |lambda| <= max_size: the hooks of lambda and
/// sigma agree with those of lambda + c and sigma - c off the row and column
/// of c, differ by +1 / -1 on them, and the reduced products satisfy
/// prod h^l h^s >= prod (h^l + 1)(h^s - 1), cellwise and in total.
HookRatioReport hook_ratio_check(std::size_t max_size);

// ---------------------------------------------------------------------------
// Truncated tableau series

inline constexpr std::size_t kSeriesDegreeCap = 14;

struct TableauSeries {
  QSeries series{0};
  long s = 0, t = 0;
  std::string mu, k;
};

/// Coefficient of z^n: sum over lambda |- n of k mu f^t / (n!)^s. Exponents
/// may be any integers. SizeLimitError if D exceeds `cap`.
TableauSeries f_series(const Descriptor& mu, const Descriptor& k, long s, long t, std::size_t D,
                       std::size_t cap = kSeriesDegreeCap, std::size_t jobs = 1);

/// Monotonicity over the covers among partitions of size <= max_size.
Monotonicity young_monotonicity(const Descriptor& f, std::size_t max_size);

struct YoungLsmResult {
  bool holds = true;
  std::optional<std::pair<Partition, Partition>> witness;
  LsmMode mode_used = LsmMode::AllPairs;
  std::size_t pairs_checked = 0;
};

/// mu(x)mu(y) <= mu(x^y)mu(xvy) for pairs with |x v y| <= max_size:
/// distance-two pairs when mu is positive there, all pairs otherwise.
YoungLsmResult young_log_supermodular(const Descriptor& mu, std::size_t max_size);

struct SeriesFkgReport {
  Verdict verdict = Verdict::Holds;
  Orientation orientation = Orientation::Comonotone;
  std::size_t degree = 0;
  QSeries lhs{0}, rhs{0};
  QSeries f_one{0}, f_g{0}, f_h{0}, f_gh{0};
  std::vector<Deficit> violations;
  Monotonicity g_monotonicity = Monotonicity::Constant;
  Monotonicity h_monotonicity = Monotonicity::Constant;
  bool hypotheses_met = true;
  std::vector<std::string> unmet_hypotheses;
  bool holds() const { return verdict == Verdict::Holds; }
};

/// F(g)F(h) << F(1)F(gh) through degree D (reversed for countermonotone),
/// with hypotheses checked on partitions of size <= D. PreconditionError
/// unless s <= t.
SeriesFkgReport check_thm63(const Descriptor& mu, const Descriptor& g, const Descriptor& h, unsigned s, unsigned t,
                            std::size_t D, std::size_t jobs = 1);

/// theta^|lambda| f^2 / (|lambda|!)^2: the poissonized Plancherel weight
/// times e^theta. PreconditionError unless theta > 0.
Rational poissonized_plancherel(const Rational& theta, const Partition& lambda);

struct Cor64Report {
  /// check_thm63 with mu = theta^|lambda|, s = t = 2. Every series here is
  /// the true one times e^theta, a factor common to both sides.
  SeriesFkgReport series;
  Rational theta;
  /// Sums of the truncated lhs and rhs coefficients: the z = 1 values of the
  /// degree-D truncations, times e^(2 theta).
  Rational lhs_at_one, rhs_at_one;
  bool truncated_at_one_holds = true;
  bool holds() const { return series.holds() && truncated_at_one_holds; }
};

Cor64Report check_cor64(const Rational& theta, const Descriptor& g, const Descriptor& h, std::size_t D,
                        std::size_t jobs = 1);

struct Sample2Report {
  long s = 0, t = 0;
  Orientation orientation = Orientation::Comonotone;
  /// (sum f^(s+1) z^n/n!)(sum f^(t+1) z^n/n!) and
  /// exp(z + z^2/2) (sum f^(s+t+1) z^n/n!), through degree D.
  QSeries left{0}, right{0};
  std::vector<Deficit> violations;
  /// sum f z^n/n! equals the exp(z + z^2/2) truncation.
  bool exp_identity = true;
  /// The same comparison run through check_thm63 with g = f^s, h = f^t.
  SeriesFkgReport via_thm63;
  bool holds() const { return violations.empty() && exp_identity && via_thm63.holds(); }
};

/// PreconditionError if s t == 0.
Sample2Report check_sample2(long s, long t, std::size_t D, std::size_t jobs = 1);

}  // namespace qfkg
