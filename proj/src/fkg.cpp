#include "qfkg/fkg.hpp"

namespace qfkg {

const char* to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::Increasing: return "increasing";
    case Monotonicity::Decreasing: return "decreasing";
    case Monotonicity::Neither: return "neither";
    case Monotonicity::Constant: return "constant";
  }
  return "?";
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::Increasing: return "increasing";
    case Direction::Decreasing: return "decreasing";
    case Direction::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(Orientation o) { return o == Orientation::Comonotone ? "comonotone" : "countermonotone"; }

WeightTable::WeightTable(std::vector<Rational> values, bool allow_zero_total) : values_(std::move(values)) {
  bool any = false;
  for (const auto& v : values_) {
    if (sgn(v) < 0) throw InputError("negative weight " + to_string(v));
    any = any || sgn(v) > 0;
  }
  if (!any && !allow_zero_total) throw InputError("weight table is identically zero");
}

bool WeightTable::strictly_positive() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& r) { return sgn(r) > 0; });
}

WeightTable WeightTable::scaled(const Rational& c) const {
  if (sgn(c) <= 0) throw PreconditionError("weights can only be scaled by a positive constant");
  std::vector<Rational> v(values_);
  for (auto& x : v) x *= c;
  return WeightTable(std::move(v));
}

WeightTable operator*(const WeightTable& a, const WeightTable& b) {
  if (a.size() != b.size()) throw PreconditionError("weight tables differ in size");
  std::vector<Rational> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] * b.values_[i];
  return WeightTable(std::move(v), true);
}

FuncTable::FuncTable(std::vector<Rational> values) : values_(std::move(values)) {
  for (const auto& v : values_) {
    if (sgn(v) < 0) throw InputError("negative function value " + to_string(v));
  }
}

FuncTable operator*(const FuncTable& a, const FuncTable& b) {
  if (a.size() != b.size()) throw PreconditionError("function tables differ in size");
  std::vector<Rational> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] * b.values_[i];
  return FuncTable(std::move(v));
}

Orientation orientation_of(Monotonicity g, Monotonicity h) {
  const bool counter = (g == Monotonicity::Increasing && h == Monotonicity::Decreasing) ||
                       (g == Monotonicity::Decreasing && h == Monotonicity::Increasing);
  return counter ? Orientation::Countermonotone : Orientation::Comonotone;
}

Rational phi(const WeightTable& mu, const FuncTable& g, const FuncTable& h, Elem x, Elem y) {
  return mu[x] * mu[y] * (g[x] - g[y]) * (h[x] - h[y]);
}

namespace detail {

void check_sizes(std::size_t n, const WeightTable& mu, const FuncTable& g, const FuncTable& h) {
  if (mu.size() != n || g.size() != n || h.size() != n) {
    throw InputError("weight/function tables must have one entry per lattice element (" + std::to_string(n) + ")");
  }
}

FkgReport assemble_report(QPolynomial e_one, QPolynomial e_g, QPolynomial e_h, QPolynomial e_gh, Monotonicity gm,
                          Monotonicity hm, const LsmResult& lsm) {
  FkgReport rep;
  rep.g_monotonicity = gm;
  rep.h_monotonicity = hm;
  rep.orientation = orientation_of(gm, hm);
  QPolynomial prod_gh = e_g * e_h;
  QPolynomial prod_one = e_one * e_gh;
  if (rep.orientation == Orientation::Comonotone) {
    rep.lhs = std::move(prod_gh);
    rep.rhs = std::move(prod_one);
  } else {
    rep.lhs = std::move(prod_one);
    rep.rhs = std::move(prod_gh);
  }
  rep.e_one = std::move(e_one);
  rep.e_g = std::move(e_g);
  rep.e_h = std::move(e_h);
  rep.e_gh = std::move(e_gh);
  DominanceReport dom = dominates(rep.lhs, rep.rhs);
  rep.verdict = dom.verdict;
  rep.violations = std::move(dom.violations);
  if (!lsm.holds) rep.unmet_hypotheses.push_back("weight mu is not log-supermodular");
  if (gm == Monotonicity::Neither) rep.unmet_hypotheses.push_back("g is not monotone");
  if (hm == Monotonicity::Neither) rep.unmet_hypotheses.push_back("h is not monotone");
  rep.hypotheses_met = rep.unmet_hypotheses.empty();
  return rep;
}

}  // namespace detail

Rational psi(const IdealLattice& lat, const WeightTable& mu, const FuncTable& g, const FuncTable& h, Elem u, Elem v) {
  detail::check_sizes(lat.size(), mu, g, h);
  Rational acc = 0;
  for (auto [x, y] : lat.relative_complements(u, v)) {
    if (x != y) acc += phi(mu, g, h, x, y);
  }
  return acc;
}

WeightTable gen_logmodular_weight(const IdealLattice& lat, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Rational> w(lat.base().size());
  for (auto& x : w) x = rng.rational(1, 9, 4);
  std::vector<Rational> mu(lat.size());
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    Rational p = 1;
    for (std::uint32_t j : lat.ideal(Elem{x})) p *= w[j];
    mu[x] = p;
  }
  return WeightTable(std::move(mu));
}

}  // namespace qfkg
