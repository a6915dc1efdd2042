#include <doctest.h>

#include "qfkg/error.hpp"
#include "qfkg/poly.hpp"
#include "qfkg/random.hpp"

using namespace qfkg;

namespace {

QPolynomial random_poly(Rng& rng) {
  std::vector<Rational> c(rng.below(6));
  for (auto& x : c) x = Rational(static_cast<long>(rng.between(-9, 9)), static_cast<unsigned long>(rng.between(1, 5)));
  return QPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const QPolynomial one_q{1, 1};
  CHECK(one_q * one_q == QPolynomial{1, 2, 1});
  CHECK((one_q * QPolynomial{}).is_zero());
  CHECK(QPolynomial::one_plus_q_pow(3) == QPolynomial{1, 3, 3, 1});
  CHECK(QPolynomial{0, 0, 0}.is_zero());
  CHECK(QPolynomial{1, 2, 0}.degree() == 1);
  CHECK(QPolynomial{1, 2, 3}.evaluate(2) == 17);
  CHECK(QPolynomial{1, 1}.regrade(2) == QPolynomial{1, 0, 1});
  CHECK(QPolynomial::monomial(2, 5) == QPolynomial{0, 0, 5});
}

TEST_CASE("ring axioms on random polynomials") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a + b) - b == a);
    CHECK(poly_mul(a, b) == a * b);
    CHECK(poly_add(a, b) == a + b);
  }
}

TEST_CASE("dominance") {
  CHECK(dominates(QPolynomial{1, 1}, QPolynomial{1, 2, 1}).holds());
  const auto r = dominates(QPolynomial{1, 2}, QPolynomial{1, 1});
  CHECK_FALSE(r.holds());
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].degree == 1);
  CHECK(r.violations[0].deficit == -1);
  CHECK(dominates(QPolynomial{1, 5, 2}, QPolynomial{1, 5, 2}).holds());
}

TEST_CASE("dominance is a partial order") {
  Rng rng(4);
  std::vector<QPolynomial> ps;
  for (int i = 0; i < 40; ++i) ps.push_back(random_poly(rng));
  for (const auto& a : ps) {
    CHECK(dominates(a, a).holds());
    for (const auto& b : ps) {
      if (dominates(a, b).holds() && dominates(b, a).holds()) CHECK(a == b);
      for (const auto& c : ps) {
        if (dominates(a, b).holds() && dominates(b, c).holds()) CHECK(dominates(a, c).holds());
      }
    }
  }
}

TEST_CASE("truncated series") {
  QSeries geo(10), one_minus(10);
  for (std::size_t d = 0; d <= 10; ++d) geo.coeff(d) = 1;
  one_minus.coeff(0) = 1;
  one_minus.coeff(1) = -1;
  QSeries one(10);
  one.coeff(0) = 1;
  CHECK(geo * one_minus == one);

  QSeries z(6);
  z.coeff(1) = 1;
  const QSeries ez = QSeries::exp(z);
  const QSeries e2z = ez * ez;
  Rational fact = 1;
  for (unsigned n = 0; n <= 6; ++n) {
    if (n) fact *= n;
    CHECK(e2z.coeff(n) == Rational(1 << n) / fact);
  }
  CHECK(series_dominates(ez, ez).holds());
  CHECK_THROWS_AS(geo * z, PreconditionError);
  CHECK(geo.sum() == 11);
}

TEST_CASE("series multiplication truncates polynomial multiplication") {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(rng), b = random_poly(rng);
    const std::size_t D = rng.below(8);
    const QSeries prod = series_mul(QSeries::from_poly(a, D), QSeries::from_poly(b, D));
    CHECK(prod == QSeries::from_poly(a * b, D));
  }
}

TEST_CASE("rationals") {
  CHECK(to_string(Rational(3, 6)) == "1/2");
  CHECK(to_string(Rational(4)) == "4/1");
  CHECK(parse_rational("-3/9") == Rational(-1, 3));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK(factorial(5) == 120);
  CHECK(qfkg::pow(Rational(2, 3), -2) == Rational(9, 4));
}
