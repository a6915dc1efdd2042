#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "qfkg/ad_search.hpp"
#include "qfkg/complexes.hpp"
#include "qfkg/fkg.hpp"
#include "qfkg/ideal_lattice.hpp"
#include "qfkg/poly.hpp"
#include "qfkg/poset.hpp"
#include "qfkg/young.hpp"

namespace qfkg {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become InputError with line and column.
Json parse_json(std::string_view text, std::string_view source = "input");
Json read_json_file(const std::string& path);

/// {"elements": [names], "covers": [[a, b], ...]}
Poset poset_from_json(const Json& j);
Json poset_to_json(const Poset& p);

/// Comma-joined labels of the ideal in poset order; "" for the bottom.
std::string ideal_name(const IdealLattice& lat, Elem x);
/// Inverse of ideal_name; labels may come in any order.
Elem ideal_from_name(const IdealLattice& lat, std::string_view name);

/// {"elements": [[labels]...], "covers": [[i, j]...], "ranks": [...]}
Json lattice_to_json(const IdealLattice& lat);

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);
/// Array of "n/d" strings, constant term first.
Json poly_to_json(const QPolynomial& p);
QPolynomial poly_from_json(const Json& j);
Json series_to_json(const QSeries& s);
Json deficits_to_json(const std::vector<Deficit>& v);

/// {"vertices": [...], "facets": [[...]...]}
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& c);

/// Table given as an object keyed by ideal_name (missing keys are 0), or one
/// of "uniform", "rank", "corank", "const:c".
std::vector<Rational> table_from_json(const IdealLattice& lat, const Json& j, std::string_view field);
Json table_to_json(const IdealLattice& lat, std::span<const Rational> values);

struct Instance {
  IdealLattice lattice;
  WeightTable mu;
  FuncTable g, h;
  unsigned s = 0, t = 0;
};

/// {"poset", "mu", "g", "h", "s", "t"}; mu defaults to "uniform", s and t
/// to 0. Throws InputError with the offending field.
Instance instance_from_json(const Json& j, std::size_t max_lattice = IdealLattice::kDefaultCap);
Json instance_to_json(const IdealLattice& lat, const WeightTable& mu, const FuncTable& g, const FuncTable& h,
                      unsigned s, unsigned t);

using ElemNamer = std::function<std::string(Elem)>;

Json fkg_report_to_json(const FkgReport& r, const ElemNamer& name);
Json series_report_to_json(const SeriesFkgReport& r);
Json ad_instance_to_json(const AdInstance& inst, const ElemNamer& name);

}  // namespace qfkg
