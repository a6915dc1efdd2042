#include "qfkg/selftest.hpp"

#include <functional>

#include "qfkg/complexes.hpp"
#include "qfkg/fkg.hpp"
#include "qfkg/grassmannian.hpp"
#include "qfkg/instances.hpp"
#include "qfkg/kernels.hpp"
#include "qfkg/parallel.hpp"
#include "qfkg/poset_catalog.hpp"
#include "qfkg/random.hpp"
#include "qfkg/young.hpp"

namespace qfkg {

namespace {

using Check = std::function<std::string(std::uint64_t)>;  // "" on success

std::string lattice_laws(std::uint64_t seed) {
  for (std::size_t i = 0; i < 20; ++i) {
    const IdealLattice lat = random_lattice(derive_seed(seed, i), 6, 64);
    const auto n = static_cast<std::uint32_t>(lat.size());
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        const Elem a{x}, b{y};
        if (lat.rank(a) + lat.rank(b) != lat.rank(lat.meet(a, b)) + lat.rank(lat.join(a, b))) return "modular law";
        for (std::uint32_t z = 0; z < n; z += 3) {
          const Elem c{z};
          if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))) return "distributivity";
        }
      }
    }
  }
  return "";
}

std::string kernels_agree(std::uint64_t seed) {
  using namespace kernels;
  if (!isa_supported(Isa::Avx2)) return "";
  Rng rng(seed);
  for (std::size_t words : {1u, 2u, 3u}) {
    const std::size_t count = 37;
    std::vector<std::uint64_t> soa(words * count), lo(words), hi(words);
    for (auto& w : soa) w = rng.next() & rng.next();
    for (std::size_t w = 0; w < words; ++w) {
      lo[w] = soa[w * count] & soa[w * count + 1];
      hi[w] = lo[w] | rng.next();
    }
    std::vector<std::uint8_t> f1(count), f2(count);
    table(Isa::Scalar).interval_flags(soa, count, words, lo, hi, f1);
    table(Isa::Avx2).interval_flags(soa, count, words, lo, hi, f2);
    if (f1 != f2) return "interval_flags";
    std::vector<std::uint32_t> p1(count), p2(count);
    table(Isa::Scalar).popcounts(soa, count, words, p1);
    table(Isa::Avx2).popcounts(soa, count, words, p2);
    if (p1 != p2) return "popcounts";
  }
  IdealLattice a = [] {
    force_isa(Isa::Scalar);
    IdealLattice l = IdealLattice::of_poset(Poset::grid(4, 5));
    reset_isa();
    return l;
  }();
  force_isa(Isa::Avx2);
  IdealLattice b = IdealLattice::of_poset(Poset::grid(4, 5));
  reset_isa();
  if (a.size() != b.size()) return "lattice size under forced ISA";
  for (std::uint32_t x = 0; x < a.size(); ++x) {
    if (a.ideal(Elem{x}) != b.ideal(Elem{x})) return "lattice order under forced ISA";
  }
  return "";
}

std::string poset_counts(std::uint64_t) {
  const std::size_t expect[] = {1, 1, 2, 5, 16, 63};
  std::size_t got[6] = {};
  for (const Poset& p : enumerate_posets(5, 1u << 20)) ++got[p.size()];
  for (std::size_t n = 0; n < 6; ++n) {
    if (got[n] != expect[n]) return "posets on " + std::to_string(n) + " elements";
  }
  return "";
}

std::string qfkg_random(std::uint64_t seed) {
  for (std::size_t i = 0; i < 30; ++i) {
    const RandomInstance inst = random_instance(derive_seed(seed, i), 5);
    const FkgReport r = check_qfkg(inst.lattice, inst.mu, inst.g, inst.h);
    if (!r.hypotheses_met) return "generator produced an invalid instance";
    if (!r.holds()) return "dominance failed on instance " + std::to_string(i);
  }
  return "";
}

std::string psi_random(std::uint64_t seed) {
  for (std::size_t i = 0; i < 10; ++i) {
    const RandomInstance inst = random_instance(derive_seed(seed, i), 5);
    const FkgReport r = check_psi_claim(inst.lattice, inst.mu, inst.g, inst.h);
    if (!r.psi->identity_holds) return "aggregation identity";
    if (!r.psi->claim_holds) return "psi sign";
  }
  return "";
}

std::string fishburn_random(std::uint64_t seed) {
  for (std::size_t i = 0; i < 10; ++i) {
    const IdealLattice lat = random_lattice(derive_seed(seed, i), 6, 64);
    if (!is_log_supermodular(lat, fishburn_weight(lat, 1, 1)).holds) return "m/r! not log-supermodular";
    if (!is_log_supermodular(lat, fishburn_weight(lat, 1, 2)).holds) return "m^2/r! not log-supermodular";
  }
  return "";
}

std::string hooks(std::uint64_t) {
  for (std::size_t n = 0; n <= 8; ++n) {
    BigInt sq = 0, sum = 0;
    for (const Partition& p : partitions_of(n)) {
      const BigInt f = f_lambda(p);
      if (f != count_syt_bruteforce(p)) return "hook formula at " + p.to_string();
      sq += f * f;
      sum += f;
    }
    if (sq != factorial_int(static_cast<unsigned>(n))) return "sum of squares";
    if (sum != involution_count(n)) return "involutions";
  }
  return "";
}

std::string series_identities(std::uint64_t) {
  const Descriptor one = Descriptor::constant(1);
  const QSeries s2 = f_series(one, one, 1, 2, 8).series;
  for (const auto& c : s2.coeffs()) {
    if (c != 1) return "1/(1-z)";
  }
  QSeries e(8);
  e.coeff(1) = 1;
  e.coeff(2) = Rational(1, 2);
  if (f_series(one, one, 1, 1, 8).series != QSeries::exp(e)) return "exp(z+z^2/2)";
  return "";
}

std::string young_checks(std::uint64_t) {
  if (!check_prop61(1, 2, 4).holds()) return "tableau weight log-supermodularity";
  if (!hook_ratio_check(6).holds) return "hook ratio";
  for (std::size_t d = 1; d <= 3; ++d) {
    if (!box_matches_grid_ideals(d)) return "box vs grid ideals";
  }
  if (!check_thm63(Descriptor::constant(1), Descriptor::size(), Descriptor::first_part(), 1, 2, 6).holds()) return "series FKG";
  return "";
}

std::string schubert(std::uint64_t) {
  const BoxLattice box(2, 3);
  for (std::uint32_t u = 0; u < box.size(); ++u) {
    for (std::uint32_t v = 0; v < box.size(); ++v) {
      if (!check_thm41(box, box.partition(Elem{u}), box.partition(Elem{v})).holds()) return "pair failed";
    }
  }
  return "";
}

std::string complexes(std::uint64_t seed) {
  for (std::size_t i = 0; i < 20; ++i) {
    const auto a = random_complex(6, 4, 4, derive_seed(seed, 2 * i));
    const auto b = random_complex(6, 4, 4, derive_seed(seed, 2 * i + 1));
    if (!check_thm3(a, b).holds()) return "f-vector dominance";
    if (!join_fpoly_identity(a, random_complex(4, 3, 3, derive_seed(seed, 100 + i), 6))) return "join identity";
  }
  return "";
}

}  // namespace

std::vector<SelftestResult> run_selftest(std::uint64_t seed, std::size_t jobs) {
  const std::vector<std::pair<const char*, Check>> checks = {
      {"lattice laws", lattice_laws},
      {"kernel equivalence", kernels_agree},
      {"poset catalog counts", poset_counts},
      {"q-FKG random instances", qfkg_random},
      {"psi claim and aggregation", psi_random},
      {"maximal-chain weights", fishburn_random},
      {"hook formula", hooks},
      {"series identities", series_identities},
      {"Young lattice checks", young_checks},
      {"Schubert 2x3 box", schubert},
      {"simplicial complexes", complexes},
  };
  return parallel_map(checks.size(), jobs, [&](std::size_t i) {
    SelftestResult r;
    r.name = checks[i].first;
    try {
      r.detail = checks[i].second(derive_seed(seed, i));
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    return r;
  });
}

}  // namespace qfkg
