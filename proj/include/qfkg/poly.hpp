#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "qfkg/rational.hpp"

namespace qfkg {

/// Dense polynomial in q with exact rational coefficients. Canonical form:
/// the highest stored coefficient is nonzero; zero is the empty list.
class QPolynomial {
 public:
  QPolynomial() = default;
  explicit QPolynomial(std::vector<Rational> coeffs);
  QPolynomial(std::initializer_list<Rational> coeffs);

  static QPolynomial monomial(std::size_t degree, Rational c = 1);
  /// (1 + q)^n
  static QPolynomial one_plus_q_pow(std::size_t n);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Zero beyond the stored range.
  Rational coeff(std::size_t d) const;
  std::span<const Rational> coeffs() const { return c_; }
  Rational evaluate(const Rational& q) const;
  /// p(q^k)
  QPolynomial regrade(std::size_t k) const;

  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const Rational& c);
  /// Adds c q^d in place.
  void add_term(std::size_t d, const Rational& c);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  friend QPolynomial operator*(QPolynomial a, const Rational& c) { return a *= c; }
  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

QPolynomial poly_add(const QPolynomial& a, const QPolynomial& b);
QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b);

/// Power series in z truncated at degree D: exactly D + 1 coefficients.
class QSeries {
 public:
  explicit QSeries(std::size_t trunc_degree);
  QSeries(std::size_t trunc_degree, std::vector<Rational> coeffs);
  static QSeries from_poly(const QPolynomial& p, std::size_t trunc_degree);
  /// exp(a) for a series with zero constant term.
  static QSeries exp(const QSeries& a);

  std::size_t trunc_degree() const { return c_.size() - 1; }
  const Rational& coeff(std::size_t d) const { return c_[d]; }
  Rational& coeff(std::size_t d) { return c_[d]; }
  std::span<const Rational> coeffs() const { return c_; }
  /// Sum of the stored coefficients: the truncation evaluated at z = 1.
  Rational sum() const;

  /// Throws PreconditionError on truncation-degree mismatch.
  QSeries& operator+=(const QSeries& o);
  QSeries& operator-=(const QSeries& o);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  std::vector<Rational> c_;
};

QSeries series_mul(const QSeries& a, const QSeries& b);

struct Deficit {
  std::size_t degree = 0;
  /// coeff(big) - coeff(small), negative.
  Rational deficit;
  friend bool operator==(const Deficit&, const Deficit&) = default;
};

enum class Verdict { Holds, Fails };

struct DominanceReport {
  Verdict verdict = Verdict::Holds;
  std::vector<Deficit> violations;
  bool holds() const { return verdict == Verdict::Holds; }
};

/// small << big: every coefficient of big - small is nonnegative.
DominanceReport dominates(const QPolynomial& small, const QPolynomial& big);
/// Coefficientwise through the common truncation degree; throws
/// PreconditionError on mismatch.
DominanceReport series_dominates(const QSeries& small, const QSeries& big);

const char* to_string(Verdict v);

}  // namespace qfkg
