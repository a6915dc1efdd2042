// Acceptance suite: one PASS/FAIL line per criterion, exact arithmetic
// throughout. Exit status 0 only if every selected criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qfkg/cli.hpp"
#include "qfkg/complexes.hpp"
#include "qfkg/fkg.hpp"
#include "qfkg/grassmannian.hpp"
#include "qfkg/instances.hpp"
#include "qfkg/json_io.hpp"
#include "qfkg/parallel.hpp"
#include "qfkg/poset_catalog.hpp"
#include "qfkg/random.hpp"
#include "qfkg/young.hpp"

using namespace qfkg;

namespace {

struct Config {
  std::uint64_t seed = 1;
  std::size_t jobs = 1;
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// ---------------------------------------------------------------------------
// Oracles

using Parts = std::vector<std::uint32_t>;

void partitions_rec(std::uint32_t n, std::uint32_t max_part, Parts& cur, std::vector<Parts>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (std::uint32_t p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Parts> all_partitions(std::uint32_t n) {
  std::vector<Parts> out;
  Parts cur;
  partitions_rec(n, n, cur, out);
  return out;
}

// Standard tableaux by removing the cell holding the largest entry.
BigInt syt_by_corners(const Parts& lambda, std::map<Parts, BigInt>& memo) {
  if (lambda.empty()) return 1;
  if (auto it = memo.find(lambda); it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i + 1 < lambda.size() && lambda[i + 1] == lambda[i]) continue;
    Parts smaller = lambda;
    if (--smaller[i] == 0) smaller.pop_back();
    total += syt_by_corners(smaller, memo);
  }
  memo.emplace(lambda, total);
  return total;
}

// 1/2 sum over ordered pairs of mu_x mu_y (g_x - g_y)(h_x - h_y) q^(r_x + r_y)
std::vector<Rational> phi_by_pairs(const IdealLattice& lat, const WeightTable& mu, const FuncTable& g,
                                   const FuncTable& h) {
  std::vector<Rational> c(2 * lat.max_rank() + 1, Rational(0));
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    for (std::uint32_t y = 0; y < lat.size(); ++y) {
      const Elem a{x}, b{y};
      c[lat.rank(a) + lat.rank(b)] += mu[a] * mu[b] * (g[a] - g[b]) * (h[a] - h[b]);
    }
  }
  for (auto& v : c) v /= 2;
  return c;
}

QSeries exp_z_half_z2(std::size_t D) {
  QSeries e(D);
  if (D >= 1) e.coeff(1) = 1;
  if (D >= 2) e.coeff(2) = Rational(1, 2);
  return QSeries::exp(e);
}

// ---------------------------------------------------------------------------
// Criteria

Outcome qfkg_exhaustive(const Config& cfg) {
  const std::vector<Poset> posets = enumerate_posets(4, 1u << 20);
  struct Tally {
    std::size_t checks = 0, reversed = 0;
    std::string failure;
  };
  const auto tallies = parallel_map(posets.size(), cfg.jobs, [&](std::size_t pi) {
    Tally t;
    const IdealLattice lat = IdealLattice::of_poset(posets[pi]);
    const std::uint64_t base = derive_seed(cfg.seed, 1000 + pi);
    for (std::uint64_t w = 0; w < 40 && t.failure.empty(); ++w) {
      const WeightTable mu = w < 20 ? gen_logmodular_weight(lat, derive_seed(base, w))
                                    : gen_rejection_weight(lat, derive_seed(base, w));
      for (std::uint64_t j = 0; j < 20; ++j) {
        const std::uint64_t s = derive_seed(base, 100 + 20 * w + j);
        const FuncTable g = gen_monotone_func(lat, derive_seed(s, 0), Direction::Increasing);
        const FuncTable h = gen_monotone_func(lat, derive_seed(s, 1), j < 10 ? Direction::Increasing : Direction::Decreasing);
        const FkgReport r = check_qfkg(lat, mu, g, h);
        ++t.checks;
        if (r.orientation == Orientation::Countermonotone) ++t.reversed;
        if (!r.hypotheses_met || !r.holds()) {
          t.failure = "poset #" + std::to_string(pi) + " weight " + std::to_string(w) + " pair " + std::to_string(j);
          break;
        }
      }
    }
    return t;
  });
  std::size_t checks = 0, reversed = 0;
  for (const auto& t : tallies) {
    if (!t.failure.empty()) return fail(t.failure);
    checks += t.checks;
    reversed += t.reversed;
  }
  return {true, std::to_string(posets.size()) + " posets up to isomorphism, " + std::to_string(checks) + " checks (" +
                    std::to_string(reversed) + " reversed)"};
}

Outcome psi_claim(const Config& cfg) {
  std::size_t entries = 0, largest = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const RandomInstance in = random_instance(derive_seed(cfg.seed, 2000 + i), 6, 64);
    const FkgReport r = check_psi_claim(in.lattice, in.mu, in.g, in.h);
    const std::string at = "instance " + std::to_string(i);
    if (!r.hypotheses_met) return fail(at + ": generator broke the hypotheses");
    if (!r.psi->claim_holds) return fail(at + ": psi has the wrong sign");
    if (!r.psi->identity_holds) return fail(at + ": aggregation identity");
    const auto phi = phi_by_pairs(in.lattice, in.mu, in.g, in.h);
    if (r.psi->aggregated.size() != phi.size()) return fail(at + ": aggregated degree range");
    for (std::size_t d = 0; d < phi.size(); ++d) {
      if (r.psi->aggregated[d] != phi[d]) return fail(at + ": aggregate differs from the pair sum at degree " + std::to_string(d));
    }
    entries += r.psi->entries.size();
    largest = std::max(largest, in.lattice.size());
  }
  return {true, "100 instances, " + std::to_string(entries) + " psi values, largest lattice " + std::to_string(largest)};
}

Outcome fishburn_suite(const Config& cfg) {
  std::size_t largest = 0, checks = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const IdealLattice lat = random_lattice(derive_seed(cfg.seed, 3000 + i), 7, 128);
    largest = std::max(largest, lat.size());
    const std::string at = "lattice " + std::to_string(i);
    if (!is_log_supermodular(lat, fishburn_weight(lat, 1, 1)).holds) return fail(at + ": m/r! not log-supermodular");
    if (!is_log_supermodular(lat, fishburn_weight(lat, 1, 2)).holds) return fail(at + ": m^2/r! not log-supermodular");
    const WeightTable one = WeightTable::uniform(lat.size());
    for (auto [s, t] : {std::pair{0u, 1u}, {1u, 1u}, {1u, 2u}}) {
      for (int dir = 0; dir < 2; ++dir) {
        const std::uint64_t fs = derive_seed(derive_seed(cfg.seed, 3500 + i), 4 * s + 2 * t + dir);
        const FuncTable g = gen_monotone_func(lat, derive_seed(fs, 0), Direction::Increasing);
        const FuncTable h = gen_monotone_func(lat, derive_seed(fs, 1), dir ? Direction::Decreasing : Direction::Increasing);
        const FkgReport r = check_general_qfkg(lat, one, s, t, g, h);
        ++checks;
        if (!r.hypotheses_met || !r.holds()) {
          return fail(at + ": dominance with (s,t) = (" + std::to_string(s) + "," + std::to_string(t) + ")");
        }
      }
    }
  }
  return {true, "100 lattices (largest " + std::to_string(largest) + "), " + std::to_string(checks) + " dominance checks"};
}

Outcome hook_formula(const Config&) {
  std::map<Parts, BigInt> memo;
  std::size_t up_to_ten = 0, total = 0;
  for (std::uint32_t n = 0; n <= 15; ++n) {
    for (const Parts& p : all_partitions(n)) {
      const Partition lambda(p);
      const BigInt f = f_lambda(lambda);
      if (f != syt_by_corners(p, memo)) return fail("hook formula at " + lambda.to_string());
      if (n <= kSytBruteforceCap && f != count_syt_bruteforce(lambda)) {
        return fail("tableau filling count at " + lambda.to_string());
      }
      ++total;
      if (n <= 10) ++up_to_ten;
    }
  }
  // p(0) + ... + p(10) and p(0) + ... + p(15)
  if (up_to_ten != 139 || total != 684) return fail("partition enumeration count");
  const QSeries e = exp_z_half_z2(12);
  for (std::uint32_t n = 0; n <= 12; ++n) {
    BigInt sq = 0, sum = 0;
    for (const Parts& p : all_partitions(n)) {
      const BigInt f = f_lambda(Partition(p));
      sq += f * f;
      sum += f;
    }
    const BigInt fact = factorial_int(n);
    if (sq != fact) return fail("sum of squares at n = " + std::to_string(n));
    if (sum != involution_count(n)) return fail("sum of f differs from i(n) at n = " + std::to_string(n));
    if (Rational(involution_count(n)) != e.coeff(n) * Rational(fact)) {
      return fail("i(n) differs from the exp(z + z^2/2) expansion at n = " + std::to_string(n));
    }
  }
  return {true, "hook formula matches tableau counts on 139 partitions with |lambda| <= 10 and 684 with "
                "|lambda| <= 15; sums hold for n <= 12"};
}

Outcome series_identities(const Config&) {
  const std::size_t D = 12;
  const Descriptor one = Descriptor::constant(1);
  const QSeries geo = f_series(one, one, 1, 2, D).series;
  for (std::size_t n = 0; n <= D; ++n) {
    if (geo.coeff(n) != 1) return fail("(1,2) coefficient " + std::to_string(n) + " is " + to_string(geo.coeff(n)));
  }
  if (f_series(one, one, 1, 1, D).series != exp_z_half_z2(D)) return fail("(1,1) differs from exp(z + z^2/2)");
  const QSeries p = f_series(one, one, 1, 0, D).series;
  for (std::uint32_t n = 0; n <= D; ++n) {
    const Rational want = Rational(BigInt(static_cast<unsigned long>(all_partitions(n).size()))) / factorial_int(n);
    if (p.coeff(n) != want) return fail("(1,0) coefficient " + std::to_string(n));
  }
  return {true, "degree 12, three identities"};
}

Outcome young_series(const Config& cfg) {
  const std::size_t D = 8;
  const std::vector<std::pair<const char*, const char*>> pairs = {
      {"size", "first"},        {"size", "parts"},         {"first", "parts"},      {"first", "first"},
      {"size", "fpow:1"},       {"affine:2,1", "first"},   {"parts", "fpow:1"},     {"fpow:1", "fpow:2"},
      {"size", "affine:-1,8"},  {"first", "theta:1/2"},    {"parts", "affine:-1,8"}, {"fpow:1", "theta:1/2"},
      {"size", "fpow:-1"},      {"first", "fpow:-1,1"},
  };
  const std::vector<std::pair<unsigned, unsigned>> exps = {{0, 1}, {1, 1}, {1, 2}};
  const std::vector<const char*> weights = {"const:1", "theta:2"};
  std::size_t checks = 0, reversed = 0;
  for (const char* w : weights) {
    for (auto [gs, hs] : pairs) {
      for (auto [s, t] : exps) {
        const SeriesFkgReport r =
            check_thm63(Descriptor::parse(w), Descriptor::parse(gs), Descriptor::parse(hs), s, t, D, cfg.jobs);
        ++checks;
        if (r.orientation == Orientation::Countermonotone) ++reversed;
        const std::string at = std::string("mu=") + w + " g=" + gs + " h=" + hs + " (s,t)=(" + std::to_string(s) + "," +
                               std::to_string(t) + ")";
        if (!r.hypotheses_met) return fail(at + ": hypotheses unmet");
        if (!r.holds()) return fail(at + ": dominance fails");
      }
    }
  }
  if (reversed == 0) return fail("no countermonotone pair was exercised");
  std::size_t cor = 0;
  for (const char* theta : {"1/2", "1", "3"}) {
    for (auto [gs, hs] : std::vector<std::pair<const char*, const char*>>{
             {"size", "first"}, {"first", "parts"}, {"size", "theta:1/2"}}) {
      const Cor64Report r = check_cor64(parse_rational(theta), Descriptor::parse(gs), Descriptor::parse(hs), D, cfg.jobs);
      ++cor;
      if (!r.series.hypotheses_met || !r.holds()) {
        return fail(std::string("Plancherel weight theta=") + theta + " g=" + gs + " h=" + hs);
      }
    }
  }
  for (auto [s, t] : {std::pair{1L, 1L}, {2L, 1L}, {1L, -1L}}) {
    if (!check_sample2(s, t, D, cfg.jobs).holds()) {
      return fail("f-power series at (s,t)=(" + std::to_string(s) + "," + std::to_string(t) + ")");
    }
  }
  return {true, std::to_string(pairs.size()) + " g,h pairs, " + std::to_string(checks) + " series checks (" +
                    std::to_string(reversed) + " reversed), " + std::to_string(cor) + " Plancherel checks, 3 f-power checks"};
}

Outcome simplicial(const Config& cfg) {
  Rng rng(derive_seed(cfg.seed, 7000));
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng.below(10);
    const auto a = random_complex(n, 1 + rng.below(6), 1 + rng.below(n), derive_seed(cfg.seed, 7100 + 2 * i));
    const auto b = random_complex(n, 1 + rng.below(6), 1 + rng.below(n), derive_seed(cfg.seed, 7101 + 2 * i));
    const Thm3Report r = check_thm3(a, b);
    const std::string at = "pair " + std::to_string(i);
    if (!r.holds()) return fail(at + ": f-polynomial dominance");
    if (!r.kleitman_holds) return fail(at + ": Kleitman");
    const Rational lhs = f_polynomial(a).evaluate(1) * f_polynomial(b).evaluate(1);
    const Rational rhs = f_polynomial(intersect(a, b)).evaluate(1) * Rational(BigInt(1) << static_cast<unsigned>(n));
    if (lhs > rhs) return fail(at + ": face counts break Kleitman");
  }
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::size_t na = 1 + rng.below(10), nb = 1 + rng.below(10);
    const auto a = random_complex(na, 1 + rng.below(5), 1 + rng.below(na), derive_seed(cfg.seed, 7400 + 2 * i));
    const auto b = random_complex(nb, 1 + rng.below(5), 1 + rng.below(nb), derive_seed(cfg.seed, 7401 + 2 * i), na);
    if (!join_fpoly_identity(a, b)) return fail("join identity on pair " + std::to_string(i));
    if (f_polynomial(join(a, b)) != f_polynomial(a) * f_polynomial(b)) {
      return fail("join f-polynomial product on pair " + std::to_string(i));
    }
  }
  return {true, "100 pairs, 50 joins"};
}

Outcome schubert(const Config&) {
  std::size_t pairs = 0;
  for (auto [k, m, size] : {std::tuple{2u, 2u, 6u}, {2u, 3u, 10u}, {3u, 3u, 20u}}) {
    const BoxLattice box(k, m);
    const std::string at = std::to_string(k) + "x" + std::to_string(m);
    if (box.size() != size) return fail(at + " box has " + std::to_string(box.size()) + " elements");
    for (std::uint32_t u = 0; u < box.size(); ++u) {
      for (std::uint32_t v = 0; v < box.size(); ++v) {
        for (Grading gr : {Grading::Cohomological, Grading::Combinatorial}) {
          if (!check_thm41(box, box.partition(Elem{u}), box.partition(Elem{v}), gr).holds()) {
            return fail(at + ": " + box.partition(Elem{u}).to_string() + " with " + box.partition(Elem{v}).to_string());
          }
        }
        ++pairs;
      }
    }
    BigInt want;
    mpz_bin_uiui(want.get_mpz_t(), k + m, k);
    if (poincare_poly(box, box.partition(box.top())).evaluate(1) != Rational(want)) return fail(at + ": P(1)");
  }
  return {true, std::to_string(pairs) + " ordered pairs in two gradings"};
}

Outcome cross_module(const Config& cfg) {
  for (std::size_t d = 1; d <= 4; ++d) {
    if (!box_matches_grid_ideals(d)) return fail("box " + std::to_string(d) + " vs grid ideals");
  }
  std::size_t compared = 0;
  for (std::size_t d = 1; d <= 4; ++d) {
    const BoxLattice box(d, d);
    for (auto [s, t] : {std::pair{0u, 1u}, {1u, 1u}, {1u, 2u}, {2u, 2u}}) {
      const WeightTable mu = fishburn_weight(box, s, t);
      for (const char* kd : {"const:1", "first", "size"}) {
        const Descriptor desc = Descriptor::parse(kd);
        std::vector<Rational> k(box.size());
        for (std::uint32_t x = 0; x < box.size(); ++x) k[x] = desc(box.partition(Elem{x}));
        const QPolynomial e = e_poly(box, mu, FuncTable(std::move(k)));
        const QSeries f = f_series(Descriptor::constant(1), desc, s, t, d, kSeriesDegreeCap, cfg.jobs).series;
        for (std::size_t n = 0; n <= d; ++n) {
          if (e.coeff(n) != f.coeff(n)) {
            return fail("box " + std::to_string(d) + " k=" + kd + " degree " + std::to_string(n));
          }
          ++compared;
        }
      }
    }
  }
  return {true, "d <= 4 isomorphic, " + std::to_string(compared) + " coefficients compared"};
}

Outcome ad_smoke(const Config& cfg) {
  std::ostringstream out, err;
  const int code = run_cli({"ad-search", "--samples", "10000", "--max-lattice-size", "16", "--seed",
                            std::to_string(cfg.seed), "--jobs", std::to_string(cfg.jobs)},
                           out, err);
  if (code != kExitHolds && code != kExitFailed) return fail("ad-search exited " + std::to_string(code) + ": " + err.str());
  const Json j = parse_json(out.str(), "ad-search report");
  if (j.value("samples_run", std::size_t{0}) != 10000) return fail("ran " + j["samples_run"].dump() + " samples");
  const std::string lattices = j["lattices"].dump();
  if (code == kExitFailed) {
    std::cout << err.str() << out.str() << "\n";
    return {true, "COUNTEREXAMPLE FOUND over " + lattices + " lattices (instance printed above)"};
  }
  return {true, "10000 samples over " + lattices + " lattices, " + j["result"].get<std::string>()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app("Acceptance criteria for the qfkg library");
  Config cfg;
  std::set<int> only;
  app.add_option("--seed", cfg.seed, "Seed for every random draw")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  app.add_option("--only", only, "Run only these criteria (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<const char*, std::function<Outcome(const Config&)>>> criteria = {
      {"q-FKG exhaustive suite", qfkg_exhaustive},
      {"psi claim suite", psi_claim},
      {"maximal-chain weight suite", fishburn_suite},
      {"hook formula oracle", hook_formula},
      {"series identities", series_identities},
      {"Young lattice series suite", young_series},
      {"simplicial suite", simplicial},
      {"Schubert suite", schubert},
      {"cross-module consistency", cross_module},
      {"four-function search smoke test", ad_smoke},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && !only.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second(cfg);
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << ". " << criteria[i].first << ": " << o.detail << " ["
              << timing << "]" << std::endl;
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
