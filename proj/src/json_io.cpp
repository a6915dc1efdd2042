#include "qfkg/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qfkg/error.hpp"

namespace qfkg {

namespace {

[[noreturn]] void bad(std::string_view field, const std::string& what) {
  throw InputError(std::string(field) + ": " + what);
}

const Json& require(const Json& j, const char* key, std::string_view where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string label_text(const Json& j, std::string_view where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(where, "element names must be strings or integers");
}

}  // namespace

Json parse_json(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Poset poset_from_json(const Json& j) {
  const Json& elems = require(j, "elements", "poset");
  if (!elems.is_array()) bad("poset.elements", "expected an array");
  std::vector<std::string> labels;
  for (const auto& e : elems) labels.push_back(label_text(e, "poset.elements"));
  for (const auto& l : labels) {
    if (l.find(',') != std::string::npos) bad("poset.elements", "label '" + l + "' contains a comma");
  }
  std::vector<CoverPair> covers;
  if (j.contains("covers")) {
    const Json& cs = j["covers"];
    if (!cs.is_array()) bad("poset.covers", "expected an array of pairs");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      const std::string where = "poset.covers[" + std::to_string(k) + "]";
      if (!cs[k].is_array() || cs[k].size() != 2) bad(where, "expected a pair [a, b]");
      CoverPair pair;
      for (int side = 0; side < 2; ++side) {
        const std::string name = label_text(cs[k][side], where);
        auto it = std::find(labels.begin(), labels.end(), name);
        if (it == labels.end()) bad(where, "unknown element '" + name + "'");
        (side == 0 ? pair.first : pair.second) = static_cast<std::uint32_t>(it - labels.begin());
      }
      covers.push_back(pair);
    }
  }
  const std::size_t n = labels.size();
  try {
    return Poset::from_covers(n, std::move(covers), std::move(labels));
  } catch (const InputError& e) {
    bad("poset", e.what());
  }
}

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = Json::array();
  for (const auto& l : p.labels()) j["elements"].push_back(l);
  j["covers"] = Json::array();
  for (auto [a, b] : p.covers()) j["covers"].push_back({p.label(a), p.label(b)});
  return j;
}

std::string ideal_name(const IdealLattice& lat, Elem x) {
  std::string s;
  for (std::uint32_t e : lat.ideal(x)) {
    if (!s.empty()) s += ',';
    s += lat.base().label(e);
  }
  return s;
}

Elem ideal_from_name(const IdealLattice& lat, std::string_view name) {
  std::vector<std::uint32_t> elems;
  std::string_view rest = name;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view tok = rest.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    auto idx = lat.base().index_of(tok);
    if (!idx) throw InputError("unknown poset element '" + std::string(tok) + "' in key '" + std::string(name) + "'");
    elems.push_back(*idx);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  auto e = lat.find_ideal(elems);
  if (!e) throw InputError("'" + std::string(name) + "' is not an order ideal");
  return *e;
}

Json lattice_to_json(const IdealLattice& lat) {
  Json j;
  j["poset"] = poset_to_json(lat.base());
  j["elements"] = Json::array();
  j["ranks"] = Json::array();
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    Json ideal = Json::array();
    for (std::uint32_t e : lat.ideal(Elem{x})) ideal.push_back(lat.base().label(e));
    j["elements"].push_back(std::move(ideal));
    j["ranks"].push_back(lat.rank(Elem{x}));
  }
  j["covers"] = Json::array();
  for (auto [a, b] : lat.cover_pairs()) j["covers"].push_back({a.id, b.id});
  return j;
}

Json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  throw InputError("expected a rational as \"n/d\" or an integer");
}

Json poly_to_json(const QPolynomial& p) {
  Json j = Json::array();
  for (const auto& c : p.coeffs()) j.push_back(to_string(c));
  return j;
}

QPolynomial poly_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("polynomial must be an array of rationals");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return QPolynomial(std::move(c));
}

Json series_to_json(const QSeries& s) {
  Json j = Json::array();
  for (const auto& c : s.coeffs()) j.push_back(to_string(c));
  return j;
}

Json deficits_to_json(const std::vector<Deficit>& v) {
  Json j = Json::array();
  for (const auto& d : v) j.push_back({{"degree", d.degree}, {"deficit", to_string(d.deficit)}});
  return j;
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& vs = require(j, "vertices", "complex");
  if (!vs.is_array()) bad("complex.vertices", "expected an array");
  std::vector<std::string> vertices;
  for (const auto& v : vs) vertices.push_back(label_text(v, "complex.vertices"));
  const Json& fs = require(j, "facets", "complex");
  if (!fs.is_array()) bad("complex.facets", "expected an array of vertex lists");
  std::vector<std::vector<std::uint32_t>> facets;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    const std::string where = "complex.facets[" + std::to_string(k) + "]";
    if (!fs[k].is_array()) bad(where, "expected an array of vertices");
    std::vector<std::uint32_t> f;
    for (const auto& v : fs[k]) {
      const std::string name = label_text(v, where);
      auto it = std::find(vertices.begin(), vertices.end(), name);
      if (it == vertices.end()) bad(where, "unknown vertex '" + name + "'");
      f.push_back(static_cast<std::uint32_t>(it - vertices.begin()));
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facet_lists(std::move(vertices), facets);
}

Json complex_to_json(const SimplicialComplex& c) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : c.vertices()) j["vertices"].push_back(v);
  j["facets"] = Json::array();
  for (std::uint64_t f : c.facets()) {
    Json face = Json::array();
    for (std::size_t i = 0; i < c.num_vertices(); ++i) {
      if ((f >> i) & 1u) face.push_back(c.vertices()[i]);
    }
    j["facets"].push_back(std::move(face));
  }
  return j;
}

std::vector<Rational> table_from_json(const IdealLattice& lat, const Json& j, std::string_view field) {
  std::vector<Rational> v(lat.size());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "uniform") {
      std::fill(v.begin(), v.end(), Rational(1));
    } else if (s == "rank") {
      for (std::uint32_t x = 0; x < lat.size(); ++x) v[x] = static_cast<unsigned long>(lat.rank(Elem{x}));
    } else if (s == "corank") {
      for (std::uint32_t x = 0; x < lat.size(); ++x) v[x] = static_cast<unsigned long>(lat.max_rank() - lat.rank(Elem{x}));
    } else if (s.rfind("const:", 0) == 0) {
      try {
        std::fill(v.begin(), v.end(), parse_rational(std::string_view(s).substr(6)));
      } catch (const InputError& e) {
        bad(field, e.what());
      }
    } else {
      bad(field, "unknown table shorthand '" + s + "'");
    }
    return v;
  }
  if (!j.is_object()) bad(field, "expected an object keyed by ideals or a shorthand string");
  std::vector<char> seen(lat.size(), 0);
  for (const auto& [key, value] : j.items()) {
    try {
      const Elem x = ideal_from_name(lat, key);
      if (seen[x.id]) bad(field, "ideal '" + key + "' given twice");
      seen[x.id] = 1;
      v[x.id] = rational_from_json(value);
    } catch (const InputError& e) {
      bad(std::string(field) + "[\"" + key + "\"]", e.what());
    }
  }
  return v;
}

Json table_to_json(const IdealLattice& lat, std::span<const Rational> values) {
  Json j = Json::object();
  for (std::uint32_t x = 0; x < lat.size(); ++x) j[ideal_name(lat, Elem{x})] = to_string(values[x]);
  return j;
}

namespace {

unsigned exponent(const Json& j, const char* key) {
  if (!j.contains(key)) return 0;
  const Json& v = j[key];
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 64) {
    bad(key, "expected an integer in [0, 64]");
  }
  return static_cast<unsigned>(v.get<long long>());
}

}  // namespace

Instance instance_from_json(const Json& j, std::size_t max_lattice) {
  if (!j.is_object()) bad("instance", "expected an object");
  Poset p = poset_from_json(require(j, "poset", "instance"));
  IdealLattice lat = [&] {
    try {
      return IdealLattice::of_poset(std::move(p), max_lattice);
    } catch (const SizeLimitError& e) {
      bad("poset", e.what());
    }
  }();
  const Json uniform = "uniform";
  auto mu_v = table_from_json(lat, j.contains("mu") ? j["mu"] : uniform, "mu");
  auto g_v = table_from_json(lat, require(j, "g", "instance"), "g");
  auto h_v = table_from_json(lat, require(j, "h", "instance"), "h");
  const unsigned s = exponent(j, "s");
  const unsigned t = exponent(j, "t");
  auto wrap = [](const char* field, auto fn) {
    try {
      return fn();
    } catch (const InputError& e) {
      bad(field, e.what());
    }
  };
  WeightTable mu = wrap("mu", [&] { return WeightTable(std::move(mu_v)); });
  FuncTable g = wrap("g", [&] { return FuncTable(std::move(g_v)); });
  FuncTable h = wrap("h", [&] { return FuncTable(std::move(h_v)); });
  return Instance{std::move(lat), std::move(mu), std::move(g), std::move(h), s, t};
}

Json instance_to_json(const IdealLattice& lat, const WeightTable& mu, const FuncTable& g, const FuncTable& h,
                      unsigned s, unsigned t) {
  Json j;
  j["poset"] = poset_to_json(lat.base());
  j["mu"] = table_to_json(lat, mu.values());
  j["g"] = table_to_json(lat, g.values());
  j["h"] = table_to_json(lat, h.values());
  j["s"] = s;
  j["t"] = t;
  return j;
}

Json fkg_report_to_json(const FkgReport& r, const ElemNamer& name) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["orientation"] = to_string(r.orientation);
  j["hypotheses_met"] = r.hypotheses_met;
  j["unmet_hypotheses"] = r.unmet_hypotheses;
  j["g_monotonicity"] = to_string(r.g_monotonicity);
  j["h_monotonicity"] = to_string(r.h_monotonicity);
  j["lhs"] = poly_to_json(r.lhs);
  j["rhs"] = poly_to_json(r.rhs);
  j["violations"] = deficits_to_json(r.violations);
  j["e_one"] = poly_to_json(r.e_one);
  j["e_g"] = poly_to_json(r.e_g);
  j["e_h"] = poly_to_json(r.e_h);
  j["e_gh"] = poly_to_json(r.e_gh);
  if (r.psi) {
    const PsiReport& p = *r.psi;
    Json psi;
    psi["claim_holds"] = p.claim_holds;
    psi["identity_holds"] = p.identity_holds;
    psi["phi"] = poly_to_json(p.phi);
    Json agg = Json::array();
    for (const auto& a : p.aggregated) agg.push_back(to_string(a));
    psi["aggregated"] = std::move(agg);
    Json entries = Json::array();
    for (const auto& e : p.entries) {
      entries.push_back({{"u", name(e.u)}, {"v", name(e.v)}, {"value", to_string(e.value)}});
    }
    psi["entries"] = std::move(entries);
    j["psi"] = std::move(psi);
  }
  return j;
}

Json series_report_to_json(const SeriesFkgReport& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["orientation"] = to_string(r.orientation);
  j["truncation_degree"] = r.degree;
  j["hypotheses_met"] = r.hypotheses_met;
  j["unmet_hypotheses"] = r.unmet_hypotheses;
  j["g_monotonicity"] = to_string(r.g_monotonicity);
  j["h_monotonicity"] = to_string(r.h_monotonicity);
  j["lhs"] = series_to_json(r.lhs);
  j["rhs"] = series_to_json(r.rhs);
  j["violations"] = deficits_to_json(r.violations);
  return j;
}

Json ad_instance_to_json(const AdInstance& inst, const ElemNamer& name) {
  auto names = [&](const std::vector<Elem>& v) {
    Json a = Json::array();
    for (Elem x : v) a.push_back(name(x));
    return a;
  };
  auto table = [&](const std::vector<Rational>& t) {
    Json o = Json::object();
    for (std::uint32_t x = 0; x < t.size(); ++x) o[name(Elem{x})] = to_string(t[x]);
    return o;
  };
  Json j;
  j["sample_seed"] = inst.sample_seed;
  j["alpha"] = table(inst.alpha);
  j["beta"] = table(inst.beta);
  j["gamma"] = table(inst.gamma);
  j["delta"] = table(inst.delta);
  j["A"] = names(inst.a);
  j["B"] = names(inst.b);
  j["A_join_B"] = names(inst.a_join_b);
  j["A_meet_B"] = names(inst.a_meet_b);
  j["lhs"] = poly_to_json(inst.lhs);
  j["rhs"] = poly_to_json(inst.rhs);
  j["violations"] = deficits_to_json(inst.violations);
  return j;
}

}  // namespace qfkg
