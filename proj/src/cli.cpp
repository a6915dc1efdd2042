#include "qfkg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qfkg/ad_search.hpp"
#include "qfkg/complexes.hpp"
#include "qfkg/error.hpp"
#include "qfkg/fkg.hpp"
#include "qfkg/grassmannian.hpp"
#include "qfkg/instances.hpp"
#include "qfkg/json_io.hpp"
#include "qfkg/parallel.hpp"
#include "qfkg/poset_catalog.hpp"
#include "qfkg/random.hpp"
#include "qfkg/selftest.hpp"
#include "qfkg/young.hpp"

namespace qfkg {

namespace {

constexpr std::size_t kRandomLatticeCap = 64;
constexpr std::size_t kAdLatticeCap = 16;
constexpr std::size_t kAdCatalogLimit = 24;

struct Options {
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
  std::string format = "json";
  std::string out_path;
  std::optional<std::size_t> max_lattice, max_degree;

  std::string instance;
  std::size_t random = 0;
  std::size_t max_irreducibles = 6;
  std::optional<long> s, t, k;
  std::string u, v;

  // fishburn
  bool real = false;
  double real_s = 1, real_t = 1;

  // fvector
  std::string delta_path, gamma_path;
  std::size_t vertices = 6;

  // schubert
  std::size_t rows = 2, cols = 2;
  std::string grading = "cohomological";

  // series, plancherel, sample2
  std::size_t degree = 8;
  std::string mu = "1", fn = "1", g, h;
  std::string theta = "1";
  std::string lambda;

  // ad-search
  std::size_t samples = 10000;
  std::string repair = "gamma";
  std::size_t max_attempts = 10000;
};

std::size_t cap_from(std::optional<std::size_t> flag, const char* env, std::size_t fallback) {
  if (flag) return *flag;
  const char* text = std::getenv(env);
  if (!text || !*text) return fallback;
  std::size_t v = 0;
  const char* end = text + std::char_traits<char>::length(text);
  auto [p, ec] = std::from_chars(text, end, v);
  if (ec != std::errc() || p != end || v == 0) {
    throw InputError(std::string(env) + ": expected a positive integer, got '" + text + "'");
  }
  return v;
}

std::size_t lattice_cap(const Options& o, std::size_t fallback) {
  return cap_from(o.max_lattice, "QFKG_MAX_LATTICE", fallback);
}

std::size_t degree_cap(const Options& o) { return cap_from(o.max_degree, "QFKG_MAX_DEGREE", kSeriesDegreeCap); }

ElemNamer namer(const IdealLattice& lat) {
  return [&lat](Elem x) { return ideal_name(lat, x); };
}

Json header(const char* command, const Options& o) { return Json{{"command", command}, {"seed", o.seed}}; }

unsigned exponent(long v, const char* flag) {
  if (v < 0 || v > 64) throw InputError(std::string(flag) + " must be an integer in [0, 64] here");
  return static_cast<unsigned>(v);
}

void require_source(const Options& o, const char* what) {
  if (o.instance.empty() && o.random == 0) throw InputError(std::string("give --instance FILE or --random N ") + what);
}

Instance load_instance(const Options& o) {
  return instance_from_json(read_json_file(o.instance), lattice_cap(o, IdealLattice::kDefaultCap));
}

RandomInstance draw(const Options& o, std::size_t i) {
  return random_instance(derive_seed(o.seed, i), o.max_irreducibles, lattice_cap(o, kRandomLatticeCap));
}

Json summarize(const Options& o, Json rep, std::vector<std::pair<bool, Json>> rows) {
  Json list = Json::array();
  Json failed = Json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].first) failed.push_back(i);
    list.push_back(std::move(rows[i].second));
  }
  rep["instances"] = o.random;
  rep["failed"] = failed;
  rep["results"] = std::move(list);
  rep["holds"] = failed.empty();
  return rep;
}

// ---------------------------------------------------------------------------

Json cmd_qfkg(const Options& o) {
  Json rep = header("qfkg", o);
  require_source(o, "--max-irreducibles K");
  if (!o.instance.empty()) {
    const Instance in = load_instance(o);
    const FkgReport r = check_general_qfkg(in.lattice, in.mu, in.s, in.t, in.g, in.h);
    rep["instance"] = o.instance;
    rep["lattice_size"] = in.lattice.size();
    rep["s"] = in.s;
    rep["t"] = in.t;
    rep["report"] = fkg_report_to_json(r, namer(in.lattice));
    rep["holds"] = r.holds();
    return rep;
  }
  auto rows = parallel_map(o.random, o.jobs, [&](std::size_t i) {
    const RandomInstance inst = draw(o, i);
    const FkgReport r = check_qfkg(inst.lattice, inst.mu, inst.g, inst.h);
    Json row{{"index", i},
             {"lattice_size", inst.lattice.size()},
             {"weight", inst.weight_kind},
             {"orientation", to_string(r.orientation)},
             {"verdict", to_string(r.verdict)},
             {"hypotheses_met", r.hypotheses_met}};
    if (!r.holds()) {
      row["instance"] = instance_to_json(inst.lattice, inst.mu, inst.g, inst.h, 0, 0);
      row["report"] = fkg_report_to_json(r, namer(inst.lattice));
    }
    return std::pair(r.holds(), std::move(row));
  });
  return summarize(o, std::move(rep), std::move(rows));
}

Json cmd_psi(const Options& o) {
  Json rep = header("psi", o);
  require_source(o, "--max-irreducibles K");
  auto ok = [](const FkgReport& r) { return r.holds() && r.psi->identity_holds && r.psi->claim_holds; };
  if (!o.instance.empty()) {
    const Instance in = load_instance(o);
    const WeightTable mu = in.mu * fishburn_weight(in.lattice, in.s, in.t);
    const FkgReport r = check_psi_claim(in.lattice, mu, in.g, in.h);
    rep["instance"] = o.instance;
    rep["lattice_size"] = in.lattice.size();
    if (!o.u.empty() || !o.v.empty()) {
      const Elem u = ideal_from_name(in.lattice, o.u);
      const Elem v = ideal_from_name(in.lattice, o.v);
      rep["psi_uv"] = {{"u", o.u}, {"v", o.v}, {"value", to_string(psi(in.lattice, mu, in.g, in.h, u, v))}};
    }
    rep["report"] = fkg_report_to_json(r, namer(in.lattice));
    rep["holds"] = ok(r);
    return rep;
  }
  auto rows = parallel_map(o.random, o.jobs, [&](std::size_t i) {
    const RandomInstance inst = draw(o, i);
    const FkgReport r = check_psi_claim(inst.lattice, inst.mu, inst.g, inst.h);
    Json row{{"index", i},
             {"lattice_size", inst.lattice.size()},
             {"orientation", to_string(r.orientation)},
             {"psi_entries", r.psi->entries.size()},
             {"identity_holds", r.psi->identity_holds},
             {"claim_holds", r.psi->claim_holds},
             {"verdict", to_string(r.verdict)}};
    if (!ok(r)) {
      row["instance"] = instance_to_json(inst.lattice, inst.mu, inst.g, inst.h, 0, 0);
      row["report"] = fkg_report_to_json(r, namer(inst.lattice));
    }
    return std::pair(ok(r), std::move(row));
  });
  return summarize(o, std::move(rep), std::move(rows));
}

Json cmd_fishburn(const Options& o) {
  Json rep = header("fishburn", o);
  require_source(o, "--max-irreducibles K");
  if (o.real) {
    // Float exploration for real exponents; never part of a verdict.
    rep["exploration"] = true;
    rep["s"] = o.real_s;
    rep["t"] = o.real_t;
    auto lattice = [&](std::size_t i) {
      return o.instance.empty() ? draw(o, i).lattice : load_instance(o).lattice;
    };
    const std::size_t count = o.instance.empty() ? o.random : 1;
    auto rows = parallel_map(count, o.jobs, [&](std::size_t i) {
      const IdealLattice lat = lattice(i);
      const auto w = fishburn_weight_real(lat, o.real_s, o.real_t);
      return Json{{"index", i}, {"lattice_size", lat.size()}, {"log_supermodular_approx", is_log_supermodular_real(lat, std::span<const double>(w))}};
    });
    rep["results"] = rows;
    rep["holds"] = true;
    return rep;
  }
  const unsigned s = exponent(o.s.value_or(1), "--s");
  const unsigned t = exponent(o.t.value_or(1), "--t");
  rep["s"] = s;
  rep["t"] = t;
  auto run = [&](const IdealLattice& lat, const WeightTable& mu, const FuncTable& g, const FuncTable& h, Json row) {
    const bool lsm = is_log_supermodular(lat, fishburn_weight(lat, s, t)).holds;
    const FkgReport r = check_general_qfkg(lat, mu, s, t, g, h);
    row["lattice_size"] = lat.size();
    row["weight_log_supermodular"] = lsm;
    row["orientation"] = to_string(r.orientation);
    row["verdict"] = to_string(r.verdict);
    row["hypotheses_met"] = r.hypotheses_met;
    const bool good = lsm && r.holds();
    if (!good) row["report"] = fkg_report_to_json(r, namer(lat));
    return std::pair(good, std::move(row));
  };
  if (!o.instance.empty()) {
    const Instance in = load_instance(o);
    auto [good, row] = run(in.lattice, in.mu, in.g, in.h, Json{{"instance", o.instance}});
    rep["result"] = std::move(row);
    rep["holds"] = good;
    return rep;
  }
  auto rows = parallel_map(o.random, o.jobs, [&](std::size_t i) {
    const RandomInstance inst = draw(o, i);
    auto res = run(inst.lattice, inst.mu, inst.g, inst.h, Json{{"index", i}});
    if (!res.first) res.second["instance"] = instance_to_json(inst.lattice, inst.mu, inst.g, inst.h, s, t);
    return res;
  });
  return summarize(o, std::move(rep), std::move(rows));
}

Json thm3_json(const Thm3Report& r, const JoinFormReport& jf) {
  return Json{{"verdict", to_string(r.fkg.verdict)},
              {"f_delta", poly_to_json(r.f_a)},
              {"f_gamma", poly_to_json(r.f_b)},
              {"f_meet", poly_to_json(r.f_meet)},
              {"lhs", poly_to_json(r.fkg.lhs)},
              {"rhs", poly_to_json(r.fkg.rhs)},
              {"violations", deficits_to_json(r.fkg.violations)},
              {"fpoly_crosscheck", r.fpoly_crosscheck},
              {"kleitman_holds", r.kleitman_holds},
              {"join_form_holds", jf.holds()}};
}

Json cmd_fvector(const Options& o) {
  Json rep = header("fvector", o);
  if (!o.delta_path.empty() || !o.gamma_path.empty()) {
    if (o.delta_path.empty() || o.gamma_path.empty()) throw InputError("--delta and --gamma go together");
    const SimplicialComplex a = complex_from_json(read_json_file(o.delta_path));
    const SimplicialComplex b = complex_from_json(read_json_file(o.gamma_path));
    const Thm3Report r = check_thm3(a, b);
    const JoinFormReport jf = check_thm3_join_form(a, b);
    rep["result"] = thm3_json(r, jf);
    rep["holds"] = r.holds() && jf.holds();
    return rep;
  }
  if (o.random == 0) throw InputError("give --delta FILE --gamma FILE or --random N");
  if (o.vertices == 0 || o.vertices > 12) throw InputError("--vertices must be in [1, 12]");
  const std::size_t facet = std::min<std::size_t>(o.vertices, 5);
  auto rows = parallel_map(o.random, o.jobs, [&](std::size_t i) {
    const auto a = random_complex(o.vertices, 5, facet, derive_seed(o.seed, 2 * i));
    const auto b = random_complex(o.vertices, 5, facet, derive_seed(o.seed, 2 * i + 1));
    const Thm3Report r = check_thm3(a, b);
    const JoinFormReport jf = check_thm3_join_form(a, b);
    Json row = thm3_json(r, jf);
    row["index"] = i;
    const bool good = r.holds() && jf.holds();
    if (!good) {
      row["delta"] = complex_to_json(a);
      row["gamma"] = complex_to_json(b);
    }
    return std::pair(good, std::move(row));
  });
  return summarize(o, std::move(rep), std::move(rows));
}

Json cmd_schubert(const Options& o) {
  Json rep = header("schubert", o);
  Grading grading;
  if (o.grading == "cohomological") {
    grading = Grading::Cohomological;
  } else if (o.grading == "combinatorial") {
    grading = Grading::Combinatorial;
  } else {
    throw InputError("--grading must be cohomological or combinatorial");
  }
  const BoxLattice box(o.rows, o.cols, lattice_cap(o, IdealLattice::kDefaultCap));
  std::vector<Partition> us, vs;
  auto all = [&] {
    std::vector<Partition> p;
    for (std::uint32_t x = 0; x < box.size(); ++x) p.push_back(box.partition(Elem{x}));
    return p;
  };
  us = o.u.empty() ? all() : std::vector{Partition::parse(o.u)};
  vs = o.v.empty() ? all() : std::vector{Partition::parse(o.v)};
  rep["k"] = o.rows;
  rep["m"] = o.cols;
  rep["grading"] = o.grading;
  rep["box_size"] = box.size();
  const QPolynomial p_box = poincare_poly(box, box.partition(box.top()), grading);
  rep["p_box"] = poly_to_json(p_box);
  rep["p_box_at_one"] = to_string(p_box.evaluate(Rational(1)));
  auto rows = parallel_map(us.size() * vs.size(), o.jobs, [&](std::size_t i) {
    const Thm41Report r = check_thm41(box, us[i / vs.size()], vs[i % vs.size()], grading);
    Json row{{"u", r.u.to_string()},
             {"v", r.v.to_string()},
             {"u_meet_v", r.u_meet_v.to_string()},
             {"verdict", to_string(r.dominance.verdict)},
             {"sides_match", r.sides_match},
             {"p_u", poly_to_json(r.p_u)},
             {"p_v", poly_to_json(r.p_v)},
             {"p_meet", poly_to_json(r.p_meet)}};
    if (!r.holds()) row["violations"] = deficits_to_json(r.dominance.violations);
    return std::pair(r.holds(), std::move(row));
  });
  Json list = Json::array();
  std::size_t failed = 0;
  for (auto& [good, row] : rows) {
    failed += !good;
    list.push_back(std::move(row));
  }
  rep["pairs"] = rows.size();
  rep["failed_pairs"] = failed;
  rep["results"] = std::move(list);
  rep["holds"] = failed == 0;
  return rep;
}

void check_degree(const Options& o) {
  const std::size_t cap = degree_cap(o);
  if (o.degree > cap) {
    throw SizeLimitError("--degree " + std::to_string(o.degree) + " exceeds the cap " + std::to_string(cap) +
                         " (raise with --max-degree or QFKG_MAX_DEGREE)");
  }
}

Json cmd_series(const Options& o) {
  Json rep = header("series", o);
  check_degree(o);
  const long s = o.s.value_or(1);
  long t = o.t.value_or(1);
  if (o.k) {
    if (o.t && *o.t != *o.k) throw InputError("--k and --t name the same exponent and disagree");
    t = *o.k;
  }
  const Descriptor mu = Descriptor::parse(o.mu);
  rep["s"] = s;
  rep["t"] = t;
  rep["degree"] = o.degree;
  rep["mu"] = mu.to_string();
  if (!o.g.empty() || !o.h.empty()) {
    if (o.g.empty() || o.h.empty()) throw InputError("--g and --h go together");
    const SeriesFkgReport r = check_thm63(mu, Descriptor::parse(o.g), Descriptor::parse(o.h), exponent(s, "--s"),
                                          exponent(t, "--t"), o.degree, o.jobs);
    rep["g"] = o.g;
    rep["h"] = o.h;
    rep["report"] = series_report_to_json(r);
    rep["holds"] = r.holds();
    return rep;
  }
  const Descriptor k = Descriptor::parse(o.fn);
  const TableauSeries ser = f_series(mu, k, s, t, o.degree, degree_cap(o), o.jobs);
  rep["fn"] = k.to_string();
  rep["coefficients"] = series_to_json(ser.series);
  rep["holds"] = true;
  return rep;
}

Json cmd_plancherel(const Options& o) {
  Json rep = header("plancherel", o);
  const Rational theta = parse_rational(o.theta);
  rep["theta"] = to_string(theta);
  if (!o.lambda.empty()) {
    const Partition lam = Partition::parse(o.lambda);
    rep["lambda"] = lam.to_string();
    rep["weight_times_exp_theta"] = to_string(poissonized_plancherel(theta, lam));
    rep["holds"] = true;
    return rep;
  }
  check_degree(o);
  const std::string g = o.g.empty() ? "size" : o.g;
  const std::string h = o.h.empty() ? "first" : o.h;
  const Cor64Report r = check_cor64(theta, Descriptor::parse(g), Descriptor::parse(h), o.degree, o.jobs);
  rep["g"] = g;
  rep["h"] = h;
  rep["degree"] = o.degree;
  rep["report"] = series_report_to_json(r.series);
  rep["lhs_at_one"] = to_string(r.lhs_at_one);
  rep["rhs_at_one"] = to_string(r.rhs_at_one);
  rep["truncated_at_one_holds"] = r.truncated_at_one_holds;
  rep["holds"] = r.holds();
  return rep;
}

Json cmd_sample2(const Options& o) {
  Json rep = header("sample2", o);
  check_degree(o);
  const Sample2Report r = check_sample2(o.s.value_or(1), o.t.value_or(1), o.degree, o.jobs);
  rep["s"] = r.s;
  rep["t"] = r.t;
  rep["degree"] = o.degree;
  rep["orientation"] = to_string(r.orientation);
  rep["left"] = series_to_json(r.left);
  rep["right"] = series_to_json(r.right);
  rep["violations"] = deficits_to_json(r.violations);
  rep["exp_identity"] = r.exp_identity;
  rep["series_check"] = series_report_to_json(r.via_thm63);
  rep["holds"] = r.holds();
  return rep;
}

Json cmd_ad_search(const Options& o, std::ostream& err) {
  Json rep = header("ad-search", o);
  AdSamplerConfig cfg;
  if (o.repair == "gamma") {
    cfg.repair = AdRepair::Gamma;
  } else if (o.repair == "delta") {
    cfg.repair = AdRepair::Delta;
  } else if (o.repair == "rejection") {
    cfg.repair = AdRepair::Rejection;
  } else {
    throw InputError("--repair must be gamma, delta or rejection");
  }
  cfg.max_attempts = o.max_attempts;
  std::vector<IdealLattice> lattices;
  if (!o.instance.empty()) {
    const Json j = read_json_file(o.instance);
    lattices.push_back(IdealLattice::of_poset(poset_from_json(j.contains("poset") ? j["poset"] : j),
                                              lattice_cap(o, IdealLattice::kDefaultCap)));
  } else {
    const std::size_t cap = lattice_cap(o, kAdLatticeCap);
    if (cap > kAdCatalogLimit) {
      throw SizeLimitError("the lattice catalog stops at " + std::to_string(kAdCatalogLimit) + " elements");
    }
    for (Poset& p : enumerate_posets(std::min<std::size_t>(cap - 1, 31), cap)) {
      lattices.push_back(IdealLattice::of_poset(std::move(p)));
    }
  }
  const std::size_t n = lattices.size();
  auto results = parallel_map(n, o.jobs, [&](std::size_t i) {
    AdSamplerConfig c = cfg;
    c.samples = o.samples / n + (i < o.samples % n ? 1 : 0);
    c.seed = derive_seed(o.seed, i);
    return ad_q_search(lattices[i], c);
  });
  std::size_t run = 0, rejected = 0;
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < n; ++i) {
    run += results[i].samples_run;
    rejected += results[i].rejected_draws;
    if (!hit && results[i].counterexample) hit = i;
  }
  rep["repair"] = to_string(cfg.repair);
  rep["lattices"] = n;
  rep["samples_requested"] = o.samples;
  rep["samples_run"] = run;
  rep["rejected_draws"] = rejected;
  if (!hit) {
    rep["result"] = "no counterexample";
    rep["holds"] = true;
    return rep;
  }
  const IdealLattice& lat = lattices[*hit];
  rep["result"] = "counterexample";
  rep["counterexample"] = {{"lattice_index", *hit},
                           {"poset", poset_to_json(lat.base())},
                           {"instance", ad_instance_to_json(*results[*hit].counterexample, namer(lat))}};
  rep["holds"] = false;
  err << "*** COUNTEREXAMPLE FOUND: lattice " << *hit << " (" << lat.size() << " elements), sample seed "
      << results[*hit].counterexample->sample_seed << "; full instance in the report ***\n";
  return rep;
}

Json cmd_selftest(const Options& o) {
  Json rep = header("selftest", o);
  Json list = Json::array();
  bool all = true;
  for (const auto& r : run_selftest(o.seed, o.jobs)) {
    Json row{{"check", r.name}, {"passed", r.passed}};
    if (!r.passed) row["detail"] = r.detail;
    all = all && r.passed;
    list.push_back(std::move(row));
  }
  rep["checks"] = std::move(list);
  rep["holds"] = all;
  return rep;
}

// ---------------------------------------------------------------------------
// Human format

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.size() > 2 && s.compare(s.size() - 2, 2, "/1") == 0) s.resize(s.size() - 2);
    return s.empty() ? "\"\"" : s;
  }
  return j.dump();
}

void render(const Json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  auto inline_text = [](const Json& v) -> std::optional<std::string> {
    if (scalar(v)) return scalar_text(v);
    if (v.is_array() && std::all_of(v.begin(), v.end(), scalar)) {
      std::string s = "[";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
      return s + "]";
    }
    if (v.empty()) return v.is_object() ? "{}" : "[]";
    return std::nullopt;
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      const std::string k = key.empty() ? "\"\"" : key;
      if (auto s = inline_text(value)) {
        out += pad + k + ": " + *s + "\n";
      } else {
        out += pad + k + ":\n";
        render(value, indent + 2, out);
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (auto s = inline_text(j[i])) {
        out += pad + "- " + *s + "\n";
      } else {
        out += pad + "- [" + std::to_string(i) + "]\n";
        render(j[i], indent + 2, out);
      }
    }
  } else {
    out += pad + scalar_text(j) + "\n";
  }
}

}  // namespace

std::string render_human(const std::string& json_text) {
  std::string out;
  render(Json::parse(json_text), 0, out);
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact verification of q-analogue FKG inequalities on finite distributive lattices", "qfkg"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", o.seed, "Seed for every random draw")->capture_default_str();
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(std::size_t{1}, std::size_t{256}));
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "human"}));
  app.add_option("--out", o.out_path, "Write the report here instead of stdout");
  app.add_option("--max-lattice-size", o.max_lattice, "Lattice size cap (env QFKG_MAX_LATTICE)");
  app.add_option("--max-degree", o.max_degree, "Series degree cap (env QFKG_MAX_DEGREE)");

  auto source_opts = [&](CLI::App* sub) {
    auto* inst = sub->add_option("--instance", o.instance, "Instance JSON file");
    auto* rnd = sub->add_option("--random", o.random, "Number of random instances");
    inst->excludes(rnd);
    sub->add_option("--max-irreducibles", o.max_irreducibles, "Poset size bound for random instances")
        ->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  };

  auto* qfkg_cmd = app.add_subcommand("qfkg", "Check E(g)E(h) << E(1)E(gh) (or the reverse)");
  source_opts(qfkg_cmd);

  auto* psi_cmd = app.add_subcommand("psi", "Tabulate psi(u, v) and check its sign and aggregation");
  source_opts(psi_cmd);
  psi_cmd->add_option("--u", o.u, "Lower ideal (comma-joined labels) for a single psi value");
  psi_cmd->add_option("--v", o.v, "Upper ideal");

  auto* fish_cmd = app.add_subcommand("fishburn", "Maximal-chain weights m^t/(r!)^s");
  source_opts(fish_cmd);
  fish_cmd->add_option("--s", o.s, "Factorial exponent (default 1)");
  fish_cmd->add_option("--t", o.t, "Chain-count exponent (default 1)");
  fish_cmd->add_flag("--float", o.real, "Real exponents in floating point (exploration only)");
  fish_cmd->add_option("--real-s", o.real_s, "Real s for --float");
  fish_cmd->add_option("--real-t", o.real_t, "Real t for --float");

  auto* fv_cmd = app.add_subcommand("fvector", "f-polynomial inequality for two complexes");
  fv_cmd->add_option("--delta", o.delta_path, "First complex (JSON)");
  fv_cmd->add_option("--gamma", o.gamma_path, "Second complex (JSON)");
  fv_cmd->add_option("--random", o.random, "Number of random pairs");
  fv_cmd->add_option("--vertices", o.vertices, "Vertices in random complexes");

  auto* sch_cmd = app.add_subcommand("schubert", "Poincare polynomials of Grassmannian Schubert varieties");
  sch_cmd->add_option("--k", o.rows, "Rows of the box")->required();
  sch_cmd->add_option("--m", o.cols, "Columns of the box")->required();
  sch_cmd->add_option("--u", o.u, "Partition \"3,1\"; all box elements if omitted");
  sch_cmd->add_option("--v", o.v, "Partition; all box elements if omitted");
  sch_cmd->add_option("--grading", o.grading, "cohomological or combinatorial");

  auto* ser_cmd = app.add_subcommand("series", "Tableau series sum mu k f^t/(n!)^s z^n");
  ser_cmd->set_help_flag("--help", "Print this help message and exit");
  ser_cmd->add_option("--k", o.k, "Exponent of f (same as --t)");
  ser_cmd->add_option("--s", o.s, "Exponent of n! (default 1)");
  ser_cmd->add_option("--t", o.t, "Exponent of f (default 1)");
  ser_cmd->add_option("--degree", o.degree, "Truncation degree")->capture_default_str();
  ser_cmd->add_option("--mu", o.mu, "Weight descriptor")->capture_default_str();
  ser_cmd->add_option("--fn", o.fn, "Function descriptor summed against the weight")->capture_default_str();
  ser_cmd->add_option("--g", o.g, "With --h: check F(g)F(h) << F(1)F(gh)");
  ser_cmd->add_option("--h", o.h, "Second function descriptor");

  auto* pl_cmd = app.add_subcommand("plancherel", "Poissonized Plancherel correlation check");
  pl_cmd->set_help_flag("--help", "Print this help message and exit");
  pl_cmd->add_option("--theta", o.theta, "Positive rational")->capture_default_str();
  pl_cmd->add_option("--g", o.g, "Function descriptor (default size)");
  pl_cmd->add_option("--h", o.h, "Function descriptor (default first)");
  pl_cmd->add_option("--degree", o.degree, "Truncation degree")->capture_default_str();
  pl_cmd->add_option("--lambda", o.lambda, "Print the weight of one partition instead");

  auto* s2_cmd = app.add_subcommand("sample2", "Series inequality for g = f^s, h = f^t");
  s2_cmd->add_option("--s", o.s, "Nonzero integer (default 1)");
  s2_cmd->add_option("--t", o.t, "Nonzero integer (default 1)");
  s2_cmd->add_option("--degree", o.degree, "Truncation degree")->capture_default_str();

  auto* ad_cmd = app.add_subcommand("ad-search", "Search for four-function counterexamples");
  ad_cmd->add_option("--samples", o.samples, "Total samples across all lattices")->capture_default_str();
  ad_cmd->add_option("--repair", o.repair, "gamma, delta or rejection")->capture_default_str();
  ad_cmd->add_option("--max-attempts", o.max_attempts, "Rejection draws per sample")->capture_default_str();
  ad_cmd->add_option("--instance", o.instance, "Search one poset (JSON) instead of the catalog");

  auto* self_cmd = app.add_subcommand("selftest", "Run the invariant suite");

  std::vector<const char*> argv{"qfkg"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  Json rep;
  try {
    if (qfkg_cmd->parsed()) {
      rep = cmd_qfkg(o);
    } else if (psi_cmd->parsed()) {
      rep = cmd_psi(o);
    } else if (fish_cmd->parsed()) {
      rep = cmd_fishburn(o);
    } else if (fv_cmd->parsed()) {
      rep = cmd_fvector(o);
    } else if (sch_cmd->parsed()) {
      rep = cmd_schubert(o);
    } else if (ser_cmd->parsed()) {
      rep = cmd_series(o);
    } else if (pl_cmd->parsed()) {
      rep = cmd_plancherel(o);
    } else if (s2_cmd->parsed()) {
      rep = cmd_sample2(o);
    } else if (ad_cmd->parsed()) {
      rep = cmd_ad_search(o, err);
    } else if (self_cmd->parsed()) {
      rep = cmd_selftest(o);
    }
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SamplerExhausted& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitFailed;
  }

  const std::string text = rep.dump(2) + "\n";
  const std::string body = o.format == "human" ? render_human(text) : text;
  if (o.out_path.empty()) {
    out << body;
  } else {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f || !(f << body)) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitUsage;
    }
  }
  return rep.value("holds", false) ? kExitHolds : kExitFailed;
}

}  // namespace qfkg
