#include <doctest.h>

#include <algorithm>
#include <string>

#include "qfkg/error.hpp"
#include "qfkg/json_io.hpp"
#include "qfkg/random.hpp"

using namespace qfkg;

namespace {

std::string message_of(auto fn) {
  try {
    fn();
  } catch (const InputError& e) {
    return e.what();
  }
  return "<no InputError>";
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

const char* kVee = R"({
  "poset": {"elements": ["a", "b", "c"], "covers": [["a", "c"], ["b", "c"]]},
  "mu": {"": "1", "a": "2", "b": "3", "a,b": "6", "a,b,c": "12"},
  "g": "rank",
  "h": {"a": 1, "a,b": 1, "a,b,c": 2}
})";

}  // namespace

TEST_CASE("syntax errors carry line and column") {
  const std::string text = "{\n  \"a\": 1,\n  \"b\": ]\n}";
  const std::string msg = message_of([&] { parse_json(text, "demo.json"); });
  CHECK(contains(msg, "demo.json:3:8:"));
  CHECK(contains(msg, "syntax error"));

  CHECK(contains(message_of([] { parse_json("", "empty"); }), "empty:1:1:"));
  CHECK(contains(message_of([] { read_json_file("/nonexistent/qfkg.json"); }), "cannot open"));
}

TEST_CASE("poset roundtrip") {
  const Json j = parse_json(R"({"elements": ["x", "y", 7], "covers": [["x", "y"], ["y", 7]]})");
  const Poset p = poset_from_json(j);
  REQUIRE(p.size() == 3);
  CHECK(p.label(2) == "7");
  CHECK(p.less(0, 2));
  const Poset q = poset_from_json(poset_to_json(p));
  CHECK(poset_to_json(q) == poset_to_json(p));
  CHECK(q.less(0, 2));
  CHECK_FALSE(q.less(2, 0));
}

TEST_CASE("poset diagnostics name the field") {
  CHECK(contains(message_of([] { poset_from_json(parse_json(R"({"covers": []})")); }),
                 "poset: missing field \"elements\""));
  CHECK(contains(message_of([] { poset_from_json(parse_json(R"({"elements": ["a"], "covers": [["a", "z"]]})")); }),
                 "poset.covers[0]: unknown element 'z'"));
  CHECK(contains(message_of([] { poset_from_json(parse_json(R"({"elements": ["a", "b"], "covers": [["a"]]})")); }),
                 "poset.covers[0]: expected a pair"));
  CHECK(contains(message_of([] { poset_from_json(parse_json(R"({"elements": ["a,b"]})")); }), "contains a comma"));
  CHECK(contains(
      message_of([] {
        poset_from_json(parse_json(R"({"elements": ["a", "b"], "covers": [["a", "b"], ["b", "a"]]})"));
      }),
      "poset:"));
}

TEST_CASE("ideal names") {
  const Instance in = instance_from_json(parse_json(kVee));
  const IdealLattice& lat = in.lattice;
  REQUIRE(lat.size() == 5);
  for (std::uint32_t x = 0; x < lat.size(); ++x) CHECK(ideal_from_name(lat, ideal_name(lat, Elem{x})).id == x);
  CHECK(ideal_name(lat, lat.bottom()).empty());
  CHECK(ideal_from_name(lat, " b , a ") == ideal_from_name(lat, "a,b"));
  CHECK(contains(message_of([&] { ideal_from_name(lat, "c"); }), "not an order ideal"));
  CHECK(contains(message_of([&] { ideal_from_name(lat, "q"); }), "unknown poset element 'q'"));
}

TEST_CASE("instance parsing") {
  const Instance in = instance_from_json(parse_json(kVee));
  const IdealLattice& lat = in.lattice;
  CHECK(in.s == 0);
  CHECK(in.t == 0);
  CHECK(in.mu[ideal_from_name(lat, "a,b")] == Rational(6));
  CHECK(in.g[lat.top()] == Rational(3));
  CHECK(in.h[ideal_from_name(lat, "b")] == Rational(0));
  CHECK(in.h[lat.top()] == Rational(2));

  const Json back = instance_to_json(lat, in.mu, in.g, in.h, 1, 2);
  const Instance again = instance_from_json(back);
  CHECK(again.s == 1);
  CHECK(again.t == 2);
  CHECK(std::ranges::equal(again.mu.values(), in.mu.values()));
  CHECK(std::ranges::equal(again.g.values(), in.g.values()));
  CHECK(std::ranges::equal(again.h.values(), in.h.values()));
  CHECK(instance_to_json(again.lattice, again.mu, again.g, again.h, 1, 2) == back);
}

TEST_CASE("instance diagnostics") {
  auto with = [](const std::string& patch) {
    Json j = parse_json(kVee);
    j.merge_patch(parse_json(patch));
    return message_of([&] { instance_from_json(j); });
  };
  CHECK(contains(with(R"({"g": null})"), "instance: missing field \"g\""));
  CHECK(contains(with(R"({"mu": {"a": "-1"}})"), "mu:"));
  CHECK(contains(with(R"({"mu": {"c": 1}})"), "mu[\"c\"]"));
  CHECK(contains(with(R"({"h": "sideways"})"), "h: unknown table shorthand 'sideways'"));
  CHECK(contains(with(R"({"h": {"a": "x/y"}})"), "h[\"a\"]"));
  CHECK(contains(with(R"({"s": -1})"), "s: expected an integer"));
  CHECK(contains(with(R"({"t": "2"})"), "t: expected an integer"));
  CHECK(contains(with(R"({"g": 5})"), "g: expected an object"));
  CHECK(contains(with(R"({"mu": "const:0"})"), "mu:"));

  Json j = parse_json(kVee);
  CHECK_THROWS_AS(instance_from_json(j, 4), InputError);
  CHECK(contains(message_of([&] { instance_from_json(j, 4); }), "poset:"));
}

TEST_CASE("table shorthands") {
  const Instance in = instance_from_json(parse_json(kVee));
  const IdealLattice& lat = in.lattice;
  const auto corank = table_from_json(lat, "corank", "f");
  const auto c = table_from_json(lat, "const:3/6", "f");
  for (std::uint32_t x = 0; x < lat.size(); ++x) {
    CHECK(corank[x] == Rational(static_cast<long>(lat.max_rank() - lat.rank(Elem{x}))));
    CHECK(c[x] == Rational(1, 2));
  }
  CHECK(contains(message_of([&] { table_from_json(lat, "const:abc", "f"); }), "f:"));
  CHECK(contains(message_of([&] { table_from_json(lat, parse_json(R"({"a": 1, " a": 2})"), "f"); }), "given twice"));
  const auto rt = table_from_json(lat, table_to_json(lat, in.mu.values()), "mu");
  CHECK(std::ranges::equal(rt, in.mu.values()));
}

TEST_CASE("rationals and polynomials") {
  CHECK(rational_from_json(parse_json("\"-4/6\"")) == Rational(-2, 3));
  CHECK(rational_from_json(parse_json("12")) == Rational(12));
  CHECK_THROWS_AS(rational_from_json(parse_json("1.5")), InputError);
  CHECK_THROWS_AS(rational_from_json(parse_json("\"1/0\"")), InputError);
  CHECK(rational_to_json(Rational(-2, 3)) == "-2/3");

  const QPolynomial p{Rational(1), Rational(0), Rational(-3, 4)};
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_to_json(QPolynomial{}).empty());
  CHECK_THROWS_AS(poly_from_json(parse_json("{}")), InputError);
}

TEST_CASE("complex roundtrip and diagnostics") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    const SimplicialComplex c = random_complex(6, 5, 4, derive_seed(11, i));
    const SimplicialComplex d = complex_from_json(complex_to_json(c));
    CHECK(std::ranges::equal(d.facets(), c.facets()));
    CHECK(std::ranges::equal(d.vertices(), c.vertices()));
  }
  CHECK(contains(message_of([] { complex_from_json(parse_json(R"({"vertices": ["a"], "facets": [["b"]]})")); }),
                 "complex.facets[0]: unknown vertex 'b'"));
  CHECK(contains(message_of([] { complex_from_json(parse_json(R"({"vertices": ["a"]})")); }),
                 "complex: missing field \"facets\""));
}
