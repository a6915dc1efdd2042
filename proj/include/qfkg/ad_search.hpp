#pragma once

// Random search for counterexamples to the rank-graded four-function
// inequality
//   A(alpha) B(beta) << (A v B)(gamma) (A ^ B)(delta),
// where S(f) = sum over x in S of f(x) q^rank(x), for tables satisfying
// alpha(x) beta(y) <= gamma(x v y) delta(x ^ y) on all pairs.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qfkg/error.hpp"
#include "qfkg/lattice_concept.hpp"
#include "qfkg/poly.hpp"
#include "qfkg/random.hpp"
#include "qfkg/rational.hpp"

namespace qfkg {

enum class AdRepair {
  /// Draw alpha, beta, delta; set gamma to the least feasible value, then
  /// sometimes inflate it.
  Gamma,
  /// Draw alpha, beta, gamma; repair delta the same way.
  Delta,
  /// Draw all four and retry until the pair condition holds.
  Rejection,
};

inline const char* to_string(AdRepair r) {
  switch (r) {
    case AdRepair::Gamma: return "gamma";
    case AdRepair::Delta: return "delta";
    case AdRepair::Rejection: return "rejection";
  }
  return "?";
}

struct AdSamplerConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  AdRepair repair = AdRepair::Gamma;
  /// Rejection mode: draws per sample before SamplerExhausted.
  std::size_t max_attempts = 10000;
  /// Table values are a/b with a <= max_num, b <= max_den.
  unsigned max_num = 9;
  unsigned max_den = 4;
  /// Percent chance that a lattice element lands in A (resp. B).
  unsigned subset_percent = 50;
};

struct AdInstance {
  std::vector<Rational> alpha, beta, gamma, delta;
  std::vector<Elem> a, b, a_join_b, a_meet_b;
  QPolynomial lhs, rhs;
  std::vector<Deficit> violations;
  /// sample_four_function(lat, cfg, sample_seed) regenerates this instance.
  std::uint64_t sample_seed = 0;
  bool holds() const { return violations.empty(); }
};

struct AdSearchResult {
  std::size_t samples_run = 0;
  std::size_t rejected_draws = 0;
  std::optional<AdInstance> counterexample;
};

template <FiniteLattice L>
bool satisfies_four_function_condition(const L& lat, std::span<const Rational> alpha, std::span<const Rational> beta,
                                       std::span<const Rational> gamma, std::span<const Rational> delta) {
  const auto n = static_cast<std::uint32_t>(lat.size());
  for (std::uint32_t x = 0; x < n; ++x) {
    if (sgn(alpha[x]) == 0) continue;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (alpha[x] * beta[y] > gamma[lat.join(Elem{x}, Elem{y}).id] * delta[lat.meet(Elem{x}, Elem{y}).id]) {
        return false;
      }
    }
  }
  return true;
}

/// Builds A v B, A ^ B and both sides of the conjectured dominance.
template <FiniteLattice L>
AdInstance evaluate_four_function(const L& lat, std::vector<Rational> alpha, std::vector<Rational> beta,
                                  std::vector<Rational> gamma, std::vector<Rational> delta, std::vector<Elem> a,
                                  std::vector<Elem> b) {
  AdInstance inst;
  std::vector<char> in_join(lat.size(), 0), in_meet(lat.size(), 0);
  for (Elem x : a) {
    for (Elem y : b) {
      in_join[lat.join(x, y).id] = 1;
      in_meet[lat.meet(x, y).id] = 1;
    }
  }
  for (std::uint32_t z = 0; z < lat.size(); ++z) {
    if (in_join[z]) inst.a_join_b.push_back(Elem{z});
    if (in_meet[z]) inst.a_meet_b.push_back(Elem{z});
  }
  auto sum_over = [&lat](std::span<const Elem> s, std::span<const Rational> f) {
    QPolynomial p;
    for (Elem x : s) p.add_term(lat.rank(x), f[x.id]);
    return p;
  };
  inst.lhs = sum_over(a, alpha) * sum_over(b, beta);
  inst.rhs = sum_over(inst.a_join_b, gamma) * sum_over(inst.a_meet_b, delta);
  inst.violations = dominates(inst.lhs, inst.rhs).violations;
  inst.alpha = std::move(alpha);
  inst.beta = std::move(beta);
  inst.gamma = std::move(gamma);
  inst.delta = std::move(delta);
  inst.a = std::move(a);
  inst.b = std::move(b);
  return inst;
}

namespace detail {

inline Rational draw_value(Rng& rng, const AdSamplerConfig& cfg, bool allow_zero) {
  if (allow_zero && rng.chance(1, 5)) return Rational(0);
  return rng.rational(1, cfg.max_num, cfg.max_den);
}

inline std::vector<Rational> draw_table(Rng& rng, const AdSamplerConfig& cfg, std::size_t n, bool allow_zero) {
  std::vector<Rational> t(n);
  for (auto& v : t) v = draw_value(rng, cfg, allow_zero);
  return t;
}

inline std::vector<Elem> draw_subset(Rng& rng, const AdSamplerConfig& cfg, std::size_t n) {
  std::vector<Elem> s;
  if (rng.chance(1, 10)) {
    for (std::uint32_t x = 0; x < n; ++x) s.push_back(Elem{x});
    return s;
  }
  for (std::uint32_t x = 0; x < n; ++x) {
    if (rng.below(100) < cfg.subset_percent) s.push_back(Elem{x});
  }
  if (s.empty()) s.push_back(Elem{static_cast<std::uint32_t>(rng.below(n))});
  return s;
}

// Tight repair value, sometimes inflated by a random factor in [1, 2].
inline Rational loosen(Rng& rng, Rational tight) {
  if (rng.chance(1, 2)) return tight;
  return tight * (1 + rng.rational(0, 4, 4));
}

}  // namespace detail

/// One four-function instance drawn from `seed`. Throws SamplerExhausted in
/// rejection mode once max_attempts draws fail the pair condition.
template <FiniteLattice L>
AdInstance sample_four_function(const L& lat, const AdSamplerConfig& cfg, std::uint64_t seed,
                                std::size_t* rejected = nullptr) {
  const std::size_t n = lat.size();
  if (n == 0) throw PreconditionError("empty lattice");
  Rng rng(seed);
  std::vector<Rational> alpha, beta, gamma, delta;
  switch (cfg.repair) {
    case AdRepair::Gamma: {
      alpha = detail::draw_table(rng, cfg, n, true);
      beta = detail::draw_table(rng, cfg, n, true);
      delta = detail::draw_table(rng, cfg, n, false);
      gamma.assign(n, Rational(0));
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          Rational need = alpha[x] * beta[y] / delta[lat.meet(Elem{x}, Elem{y}).id];
          Rational& g = gamma[lat.join(Elem{x}, Elem{y}).id];
          if (need > g) g = need;
        }
      }
      for (auto& g : gamma) g = detail::loosen(rng, g);
      break;
    }
    case AdRepair::Delta: {
      alpha = detail::draw_table(rng, cfg, n, true);
      beta = detail::draw_table(rng, cfg, n, true);
      gamma = detail::draw_table(rng, cfg, n, false);
      delta.assign(n, Rational(0));
      for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) {
          Rational need = alpha[x] * beta[y] / gamma[lat.join(Elem{x}, Elem{y}).id];
          Rational& d = delta[lat.meet(Elem{x}, Elem{y}).id];
          if (need > d) d = need;
        }
      }
      for (auto& d : delta) d = detail::loosen(rng, d);
      break;
    }
    case AdRepair::Rejection: {
      std::size_t attempt = 0;
      for (;; ++attempt) {
        if (attempt == cfg.max_attempts) {
          throw SamplerExhausted("no table quadruple satisfied the pair condition in " +
                                 std::to_string(cfg.max_attempts) + " draws");
        }
        alpha = detail::draw_table(rng, cfg, n, true);
        beta = detail::draw_table(rng, cfg, n, true);
        gamma = detail::draw_table(rng, cfg, n, true);
        delta = detail::draw_table(rng, cfg, n, true);
        if (satisfies_four_function_condition(lat, alpha, beta, gamma, delta)) break;
      }
      if (rejected) *rejected += attempt;
      break;
    }
  }
  std::vector<Elem> a = detail::draw_subset(rng, cfg, n);
  std::vector<Elem> b = detail::draw_subset(rng, cfg, n);
  AdInstance inst = evaluate_four_function(lat, std::move(alpha), std::move(beta), std::move(gamma), std::move(delta),
                                           std::move(a), std::move(b));
  inst.sample_seed = seed;
  return inst;
}

/// Runs cfg.samples draws and stops at the first instance whose dominance
/// fails. Every drawn instance is checked against the pair condition first;
/// a sampler that breaks it is a bug.
template <FiniteLattice L>
AdSearchResult ad_q_search(const L& lat, const AdSamplerConfig& cfg) {
  AdSearchResult res;
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    AdInstance inst = sample_four_function(lat, cfg, derive_seed(cfg.seed, i), &res.rejected_draws);
    ++res.samples_run;
    if (!satisfies_four_function_condition(lat, inst.alpha, inst.beta, inst.gamma, inst.delta)) {
      throw InternalError("four-function sampler produced tables violating the pair condition");
    }
    if (!inst.holds()) {
      res.counterexample = std::move(inst);
      break;
    }
  }
  return res;
}

}  // namespace qfkg
