#pragma once

// Weight and function tables on finite distributive lattices, the rank
// generating polynomials E(k; q), and the q-FKG verifiers.
//
// Everything here is generic over FiniteLattice so the same code runs on
// ideal lattices of posets and on partitions-in-a-box.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qfkg/error.hpp"
#include "qfkg/ideal_lattice.hpp"
#include "qfkg/lattice_concept.hpp"
#include "qfkg/poly.hpp"
#include "qfkg/random.hpp"
#include "qfkg/rational.hpp"

namespace qfkg {

enum class Monotonicity { Increasing, Decreasing, Neither, Constant };
enum class Direction { Increasing, Decreasing, Unknown };
enum class Orientation { Comonotone, Countermonotone };

const char* to_string(Monotonicity m);
const char* to_string(Direction d);
const char* to_string(Orientation o);

/// Nonnegative weights mu indexed by lattice element.
class WeightTable {
 public:
  WeightTable() = default;
  /// Throws InputError on a negative entry, or on an all-zero table unless
  /// allow_zero_total is set.
  explicit WeightTable(std::vector<Rational> values, bool allow_zero_total = false);
  static WeightTable uniform(std::size_t n) { return WeightTable(std::vector<Rational>(n, Rational(1))); }

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](Elem x) const { return values_[x.id]; }
  std::span<const Rational> values() const { return values_; }
  bool strictly_positive() const;
  WeightTable scaled(const Rational& c) const;

  friend WeightTable operator*(const WeightTable& a, const WeightTable& b);

 private:
  std::vector<Rational> values_;
};

/// Nonnegative function on lattice elements with an optional claimed
/// direction, verified on cover pairs at construction.
class FuncTable {
 public:
  FuncTable() = default;
  /// Throws InputError on negative entries.
  explicit FuncTable(std::vector<Rational> values);
  /// Also throws InputError if the claimed direction is contradicted by a
  /// cover pair.
  template <FiniteLattice L>
  FuncTable(const L& lat, std::vector<Rational> values, Direction claimed);

  static FuncTable constant(std::size_t n, const Rational& c) { return FuncTable(std::vector<Rational>(n, c)); }
  template <FiniteLattice L>
  static FuncTable rank(const L& lat);
  /// max_rank - rank
  template <FiniteLattice L>
  static FuncTable corank(const L& lat);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](Elem x) const { return values_[x.id]; }
  std::span<const Rational> values() const { return values_; }
  Direction claimed() const { return claimed_; }

  friend FuncTable operator*(const FuncTable& a, const FuncTable& b);

 private:
  std::vector<Rational> values_;
  Direction claimed_ = Direction::Unknown;
};

template <FiniteLattice L>
Monotonicity monotonicity(const L& lat, std::span<const Rational> f) {
  bool inc = true;
  bool dec = true;
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    for (Elem y : lat.upper_covers(Elem{x})) {
      const int c = cmp(f[x], f[y.id]);
      if (c > 0) inc = false;
      if (c < 0) dec = false;
    }
  }
  if (inc && dec) return Monotonicity::Constant;
  if (inc) return Monotonicity::Increasing;
  if (dec) return Monotonicity::Decreasing;
  return Monotonicity::Neither;
}

template <FiniteLattice L>
Monotonicity monotonicity(const L& lat, const FuncTable& f) {
  return monotonicity(lat, f.values());
}

template <FiniteLattice L>
FuncTable::FuncTable(const L& lat, std::vector<Rational> values, Direction claimed) : FuncTable(std::move(values)) {
  if (values_.size() != lat.size()) throw InputError("function table size does not match the lattice");
  claimed_ = claimed;
  if (claimed == Direction::Unknown) return;
  const Monotonicity m = monotonicity(lat, values_);
  const bool ok = m == Monotonicity::Constant ||
                  (claimed == Direction::Increasing && m == Monotonicity::Increasing) ||
                  (claimed == Direction::Decreasing && m == Monotonicity::Decreasing);
  if (!ok) throw InputError(std::string("function claimed ") + to_string(claimed) + " but is " + to_string(m));
}

template <FiniteLattice L>
FuncTable FuncTable::rank(const L& lat) {
  std::vector<Rational> v(lat.size());
  for (std::uint32_t x = 0; x < lat.size(); ++x) v[x] = static_cast<unsigned long>(lat.rank(Elem{x}));
  return FuncTable(lat, std::move(v), Direction::Increasing);
}

template <FiniteLattice L>
FuncTable FuncTable::corank(const L& lat) {
  std::vector<Rational> v(lat.size());
  for (std::uint32_t x = 0; x < lat.size(); ++x) v[x] = static_cast<unsigned long>(lat.max_rank() - lat.rank(Elem{x}));
  return FuncTable(lat, std::move(v), Direction::Decreasing);
}

// ---------------------------------------------------------------------------
// Log-supermodularity

enum class LsmMode {
  /// DistanceTwo when every weight is strictly positive, AllPairs otherwise.
  Auto,
  AllPairs,
  /// Only pairs of distinct upper covers of a common element; equivalent to
  /// AllPairs for strictly positive weights.
  DistanceTwo,
};

struct LsmResult {
  bool holds = true;
  /// First violating pair in scan order.
  std::optional<std::pair<Elem, Elem>> witness;
  LsmMode mode_used = LsmMode::AllPairs;
  std::size_t pairs_checked = 0;
};

namespace detail {

// Weights rescaled by the lcm of their denominators. Scaling by a positive
// constant preserves log-supermodularity, and integer products are cheap.
class ScaledWeights {
 public:
  explicit ScaledWeights(std::span<const Rational> mu) {
    BigInt l = 1;
    for (const auto& r : mu) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
    big_.reserve(mu.size());
    small_ = true;
    for (const auto& r : mu) {
      big_.push_back(r.get_num() * (l / r.get_den()));
      if (!big_.back().fits_ulong_p() || sgn(big_.back()) < 0) small_ = false;
    }
    if (small_) {
      for (const auto& b : big_) u64_.push_back(b.get_ui());
    }
  }
  // mu[a] * mu[b] <= mu[c] * mu[d]
  bool le(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
    if (small_) {
      using u128 = unsigned __int128;
      return static_cast<u128>(u64_[a]) * u64_[b] <= static_cast<u128>(u64_[c]) * u64_[d];
    }
    lhs_ = big_[a] * big_[b];
    rhs_ = big_[c] * big_[d];
    return lhs_ <= rhs_;
  }

 private:
  bool small_ = false;
  std::vector<BigInt> big_;
  std::vector<std::uint64_t> u64_;
  BigInt lhs_, rhs_;
};

}  // namespace detail

template <FiniteLattice L>
LsmResult is_log_supermodular(const L& lat, std::span<const Rational> mu, LsmMode mode = LsmMode::Auto) {
  if (mu.size() != lat.size()) throw InputError("weight table size does not match the lattice");
  if (mode == LsmMode::Auto) {
    const bool positive = std::all_of(mu.begin(), mu.end(), [](const Rational& r) { return sgn(r) > 0; });
    mode = positive ? LsmMode::DistanceTwo : LsmMode::AllPairs;
  }
  LsmResult res;
  res.mode_used = mode;
  detail::ScaledWeights w(mu);
  const auto n = static_cast<std::uint32_t>(lat.size());
  if (mode == LsmMode::AllPairs) {
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = x + 1; y < n; ++y) {
        const Elem m = lat.meet(Elem{x}, Elem{y});
        if (m.id == x || m.id == y) continue;  // comparable: equality
        ++res.pairs_checked;
        if (!w.le(x, y, m.id, lat.join(Elem{x}, Elem{y}).id)) {
          res.holds = false;
          res.witness = {Elem{x}, Elem{y}};
          return res;
        }
      }
    }
    return res;
  }
  for (std::uint32_t z = 0; z < n; ++z) {
    auto up = lat.upper_covers(Elem{z});
    for (std::size_t i = 0; i < up.size(); ++i) {
      for (std::size_t j = i + 1; j < up.size(); ++j) {
        Elem a = std::min(up[i], up[j]);
        Elem b = std::max(up[i], up[j]);
        ++res.pairs_checked;
        if (!w.le(a.id, b.id, z, lat.join(a, b).id)) {
          res.holds = false;
          res.witness = {a, b};
          return res;
        }
      }
    }
  }
  return res;
}

template <FiniteLattice L>
LsmResult is_log_supermodular(const L& lat, const WeightTable& mu, LsmMode mode = LsmMode::Auto) {
  return is_log_supermodular(lat, mu.values(), mode);
}

// ---------------------------------------------------------------------------
// E(k; q) = sum_x k(x) mu(x) q^rank(x)

template <FiniteLattice L>
QPolynomial e_poly(const L& lat, std::span<const Rational> mu, std::span<const Rational> k) {
  std::vector<Rational> c(lat.max_rank() + 1);
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    if (sgn(mu[x]) == 0 || sgn(k[x]) == 0) continue;
    c[lat.rank(Elem{x})] += k[x] * mu[x];
  }
  return QPolynomial(std::move(c));
}

template <FiniteLattice L>
QPolynomial e_poly(const L& lat, const WeightTable& mu, const FuncTable& k) {
  return e_poly(lat, mu.values(), k.values());
}

// ---------------------------------------------------------------------------
// q-FKG verification

struct PsiEntry {
  Elem u, v;
  Rational value;
};

struct PsiReport {
  /// psi(u, v) for every u <= v, ordered by (u, v).
  std::vector<PsiEntry> entries;
  /// aggregated[d] = sum of psi(u, v) over r(u) + r(v) = d.
  std::vector<Rational> aggregated;
  /// Phi(q) = E(1)E(gh) - E(g)E(h) computed by polynomial arithmetic.
  QPolynomial phi;
  bool identity_holds = true;
  std::vector<std::size_t> identity_mismatch_degrees;
  /// Every psi >= 0 (comonotone) or <= 0 (countermonotone).
  bool claim_holds = true;
  std::optional<PsiEntry> first_wrong_sign;
};

struct FkgReport {
  Verdict verdict = Verdict::Holds;
  Orientation orientation = Orientation::Comonotone;
  /// The checked statement is lhs << rhs. Comonotone: lhs = E(g)E(h),
  /// rhs = E(1)E(gh); countermonotone swaps them.
  QPolynomial lhs, rhs;
  QPolynomial e_one, e_g, e_h, e_gh;
  std::vector<Deficit> violations;
  Monotonicity g_monotonicity = Monotonicity::Constant;
  Monotonicity h_monotonicity = Monotonicity::Constant;
  bool hypotheses_met = true;
  std::vector<std::string> unmet_hypotheses;
  std::optional<PsiReport> psi;

  bool holds() const { return verdict == Verdict::Holds; }
};

Orientation orientation_of(Monotonicity g, Monotonicity h);

/// phi(x, y) = mu(x) mu(y) (g(x) - g(y)) (h(x) - h(y))
Rational phi(const WeightTable& mu, const FuncTable& g, const FuncTable& h, Elem x, Elem y);

namespace detail {

void check_sizes(std::size_t n, const WeightTable& mu, const FuncTable& g, const FuncTable& h);
FkgReport assemble_report(QPolynomial e_one, QPolynomial e_g, QPolynomial e_h, QPolynomial e_gh, Monotonicity gm,
                          Monotonicity hm, const LsmResult& lsm);

}  // namespace detail

/// Checks E(g)E(h) << E(1)E(gh) (reversed for countermonotone g, h).
/// Hypotheses are checked and reported but never suppress the check.
template <FiniteLattice L>
FkgReport check_qfkg(const L& lat, const WeightTable& mu, const FuncTable& g, const FuncTable& h) {
  detail::check_sizes(lat.size(), mu, g, h);
  const FuncTable one = FuncTable::constant(lat.size(), 1);
  const FuncTable gh = g * h;
  return detail::assemble_report(e_poly(lat, mu, one), e_poly(lat, mu, g), e_poly(lat, mu, h), e_poly(lat, mu, gh),
                                 monotonicity(lat, g), monotonicity(lat, h), is_log_supermodular(lat, mu));
}

/// psi(u, v) for every interval, accumulated from all unordered pairs by
/// (meet, join), plus the degree-wise comparison against Phi(q).
template <FiniteLattice L>
PsiReport psi_table(const L& lat, const WeightTable& mu, const FuncTable& g, const FuncTable& h,
                    Orientation orientation) {
  detail::check_sizes(lat.size(), mu, g, h);
  const auto n = static_cast<std::uint32_t>(lat.size());
  std::unordered_map<std::uint64_t, Rational> acc;
  auto key = [n](std::uint32_t u, std::uint32_t v) { return static_cast<std::uint64_t>(u) * n + v; };
  for (std::uint32_t u = 0; u < n; ++u) {
    acc.emplace(key(u, u), Rational(0));
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      const Elem u = lat.meet(Elem{x}, Elem{y});
      const Elem v = lat.join(Elem{x}, Elem{y});
      acc[key(u.id, v.id)] += phi(mu, g, h, Elem{x}, Elem{y});
    }
  }
  PsiReport rep;
  rep.entries.reserve(acc.size());
  for (auto& [k, val] : acc) {
    rep.entries.push_back({Elem{static_cast<std::uint32_t>(k / n)}, Elem{static_cast<std::uint32_t>(k % n)}, val});
  }
  std::sort(rep.entries.begin(), rep.entries.end(),
            [](const PsiEntry& a, const PsiEntry& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  rep.aggregated.assign(2 * lat.max_rank() + 1, Rational(0));
  const int want = orientation == Orientation::Comonotone ? 1 : -1;
  for (const auto& e : rep.entries) {
    rep.aggregated[lat.rank(e.u) + lat.rank(e.v)] += e.value;
    if (rep.claim_holds && sgn(e.value) * want < 0) {
      rep.claim_holds = false;
      rep.first_wrong_sign = e;
    }
  }
  const FuncTable one = FuncTable::constant(lat.size(), 1);
  rep.phi = e_poly(lat, mu, one) * e_poly(lat, mu, g * h) - e_poly(lat, mu, g) * e_poly(lat, mu, h);
  for (std::size_t d = 0; d < rep.aggregated.size(); ++d) {
    if (rep.aggregated[d] != rep.phi.coeff(d)) {
      rep.identity_holds = false;
      rep.identity_mismatch_degrees.push_back(d);
    }
  }
  if (static_cast<long>(rep.aggregated.size()) <= rep.phi.degree()) rep.identity_holds = false;
  return rep;
}

/// check_qfkg plus the full psi table, its sign claim and the aggregation
/// identity.
template <FiniteLattice L>
FkgReport check_psi_claim(const L& lat, const WeightTable& mu, const FuncTable& g, const FuncTable& h) {
  FkgReport rep = check_qfkg(lat, mu, g, h);
  rep.psi = psi_table(lat, mu, g, h, rep.orientation);
  return rep;
}

/// psi(u, v) over the relative complements of [u, v]; PreconditionError
/// unless u <= v.
Rational psi(const IdealLattice& lat, const WeightTable& mu, const FuncTable& g, const FuncTable& h, Elem u, Elem v);

// ---------------------------------------------------------------------------
// Maximal-chain weights

/// x -> m(x)^t / (r(x)!)^s. PreconditionError if s > t.
template <FiniteLattice L>
WeightTable fishburn_weight(const L& lat, unsigned s, unsigned t) {
  if (s > t) throw PreconditionError("fishburn weight needs 0 <= s <= t");
  const auto m = max_chain_counts(lat);
  std::vector<Rational> v(lat.size());
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), m[x].get_mpz_t(), t);
    const BigInt f = factorial_int(static_cast<unsigned>(lat.rank(Elem{x})));
    mpz_pow_ui(den.get_mpz_t(), f.get_mpz_t(), s);
    v[x] = Rational(num, den);
    v[x].canonicalize();
  }
  return WeightTable(std::move(v));
}

/// Floating-point variant for real exponents. Exploration only: never used
/// by a verifier.
template <FiniteLattice L>
std::vector<double> fishburn_weight_real(const L& lat, double s, double t);

/// Float log-supermodularity with relative tolerance; exploration only.
template <FiniteLattice L>
bool is_log_supermodular_real(const L& lat, std::span<const double> mu, double tol = 1e-9) {
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    for (std::uint32_t y = x + 1; y < lat.size(); ++y) {
      const double lhs = mu[x] * mu[y];
      const double rhs = mu[lat.meet(Elem{x}, Elem{y}).id] * mu[lat.join(Elem{x}, Elem{y}).id];
      if (lhs > rhs * (1 + tol) + tol) return false;
    }
  }
  return true;
}

template <FiniteLattice L>
std::vector<double> fishburn_weight_real(const L& lat, double s, double t) {
  const auto m = max_chain_counts(lat);
  std::vector<double> v(lat.size());
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    const double fact = std::tgamma(static_cast<double>(lat.rank(Elem{x})) + 1.0);
    v[x] = std::pow(m[x].get_d(), t) / std::pow(fact, s);
  }
  return v;
}

/// check_qfkg with effective weight mu * m^t / (r!)^s; the log-supermodularity
/// hypothesis is checked on mu itself.
template <FiniteLattice L>
FkgReport check_general_qfkg(const L& lat, const WeightTable& mu, unsigned s, unsigned t, const FuncTable& g,
                             const FuncTable& h) {
  const WeightTable eff = mu * fishburn_weight(lat, s, t);
  FkgReport rep = check_qfkg(lat, eff, g, h);
  const LsmResult base = is_log_supermodular(lat, mu);
  if (!base.holds) {
    rep.hypotheses_met = false;
    rep.unmet_hypotheses.push_back("base weight mu is not log-supermodular");
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Generators. Same seed, same table.

/// mu(x) = product of random positive rationals w_j over j in ideal(x).
WeightTable gen_logmodular_weight(const IdealLattice& lat, std::uint64_t seed);

inline constexpr std::size_t kRejectionWeightMaxSize = 32;

/// Random rationals drawn element by element in rank order; a draw is
/// rejected while it breaks mu(x)mu(y) <= mu(x^y)mu(xvy) against
/// already-drawn elements. SizeLimitError above 32 elements.
template <FiniteLattice L>
WeightTable gen_rejection_weight(const L& lat, std::uint64_t seed) {
  if (lat.size() > kRejectionWeightMaxSize) {
    throw SizeLimitError("rejection sampling of weights is limited to lattices with at most 32 elements");
  }
  Rng rng(seed);
  const auto n = static_cast<std::uint32_t>(lat.size());
  // For each z, the incomparable pairs with join z; their meets and the pair
  // itself precede z in index order.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> joins_to(n);
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = x + 1; y < n; ++y) {
      const Elem m = lat.meet(Elem{x}, Elem{y});
      if (m.id != x && m.id != y) joins_to[lat.join(Elem{x}, Elem{y}).id].emplace_back(x, y);
    }
  }
  std::vector<Rational> mu(n);
  for (std::uint32_t z = 0; z < n; ++z) {
    Rational lower = 0;
    for (auto [x, y] : joins_to[z]) {
      Rational need = mu[x] * mu[y] / mu[lat.meet(Elem{x}, Elem{y}).id];
      if (need > lower) lower = need;
    }
    bool placed = false;
    for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
      Rational candidate = rng.rational(1, 12, 4);
      if (candidate >= lower) {
        mu[z] = candidate;
        placed = true;
      }
    }
    if (!placed) mu[z] = lower * (1 + rng.rational(0, 4, 4));
  }
  return WeightTable(std::move(mu));
}

/// Cumulative maxima of random values along the index order (increasing) or
/// its reverse (decreasing). Direction::Unknown yields an unconstrained table.
template <FiniteLattice L>
FuncTable gen_monotone_func(const L& lat, std::uint64_t seed, Direction direction) {
  Rng rng(seed);
  const auto n = static_cast<std::uint32_t>(lat.size());
  std::vector<Rational> raw(n);
  for (auto& r : raw) r = rng.chance(1, 4) ? Rational(0) : rng.rational(0, 9, 3);
  if (direction == Direction::Unknown) return FuncTable(std::move(raw));
  std::vector<Rational> f(n);
  if (direction == Direction::Increasing) {
    for (std::uint32_t x = 0; x < n; ++x) {
      f[x] = raw[x];
      for (Elem y : lat.lower_covers(Elem{x})) {
        if (f[y.id] > f[x]) f[x] = f[y.id];
      }
    }
  } else {
    for (std::uint32_t x = n; x-- > 0;) {
      f[x] = raw[x];
      for (Elem y : lat.upper_covers(Elem{x})) {
        if (f[y.id] > f[x]) f[x] = f[y.id];
      }
    }
  }
  return FuncTable(lat, std::move(f), direction);
}

}  // namespace qfkg
