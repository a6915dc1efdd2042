#include "qfkg/poly.hpp"

#include <algorithm>
#include <string>

#include "qfkg/error.hpp"

namespace qfkg {

QPolynomial::QPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& x : c_) x.canonicalize();
  trim();
}

QPolynomial::QPolynomial(std::initializer_list<Rational> coeffs) : QPolynomial(std::vector<Rational>(coeffs)) {}

void QPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPolynomial QPolynomial::monomial(std::size_t degree, Rational c) {
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(c);
  return QPolynomial(std::move(v));
}

QPolynomial QPolynomial::one_plus_q_pow(std::size_t n) {
  std::vector<Rational> v(n + 1);
  BigInt b = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    v[k] = b;
    b = b * static_cast<unsigned long>(n - k) / static_cast<unsigned long>(k + 1);
  }
  return QPolynomial(std::move(v));
}

Rational QPolynomial::coeff(std::size_t d) const { return d < c_.size() ? c_[d] : Rational(0); }

Rational QPolynomial::evaluate(const Rational& q) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

QPolynomial QPolynomial::regrade(std::size_t k) const {
  if (c_.empty()) return {};
  std::vector<Rational> v((c_.size() - 1) * k + 1);
  for (std::size_t d = 0; d < c_.size(); ++d) v[d * k] = c_[d];
  return QPolynomial(std::move(v));
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] += o.c_[d];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t d = 0; d < o.c_.size(); ++d) c_[d] -= o.c_[d];
  trim();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  trim();
  return *this;
}

void QPolynomial::add_term(std::size_t d, const Rational& c) {
  if (c == 0) return;
  if (d >= c_.size()) c_.resize(d + 1);
  c_[d] += c;
  trim();
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return QPolynomial(std::move(v));
}

QPolynomial poly_add(const QPolynomial& a, const QPolynomial& b) { return a + b; }
QPolynomial poly_mul(const QPolynomial& a, const QPolynomial& b) { return a * b; }

QSeries::QSeries(std::size_t trunc_degree) : c_(trunc_degree + 1) {}

QSeries::QSeries(std::size_t trunc_degree, std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  c_.resize(trunc_degree + 1);
  for (auto& x : c_) x.canonicalize();
}

QSeries QSeries::from_poly(const QPolynomial& p, std::size_t trunc_degree) {
  QSeries s(trunc_degree);
  for (std::size_t d = 0; d <= trunc_degree; ++d) s.c_[d] = p.coeff(d);
  return s;
}

QSeries QSeries::exp(const QSeries& a) {
  if (a.c_[0] != 0) throw PreconditionError("series exp needs a zero constant term");
  const std::size_t D = a.trunc_degree();
  QSeries e(D);
  e.c_[0] = 1;
  // n e_n = sum_k k a_k e_{n-k}
  for (std::size_t n = 1; n <= D; ++n) {
    Rational acc = 0;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<unsigned long>(k)) * a.c_[k] * e.c_[n - k];
    e.c_[n] = acc / static_cast<unsigned long>(n);
  }
  return e;
}

Rational QSeries::sum() const {
  Rational acc = 0;
  for (const auto& x : c_) acc += x;
  return acc;
}

namespace {
void require_same_trunc(std::size_t a, std::size_t b) {
  if (a != b) {
    throw PreconditionError("truncation degree mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}
}  // namespace

QSeries& QSeries::operator+=(const QSeries& o) {
  require_same_trunc(trunc_degree(), o.trunc_degree());
  for (std::size_t d = 0; d < c_.size(); ++d) c_[d] += o.c_[d];
  return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
  require_same_trunc(trunc_degree(), o.trunc_degree());
  for (std::size_t d = 0; d < c_.size(); ++d) c_[d] -= o.c_[d];
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  require_same_trunc(a.trunc_degree(), b.trunc_degree());
  const std::size_t D = a.trunc_degree();
  QSeries out(D);
  for (std::size_t i = 0; i <= D; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j <= D; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

QSeries series_mul(const QSeries& a, const QSeries& b) { return a * b; }

namespace {
DominanceReport dominance_from_diff(std::span<const Rational> diff) {
  DominanceReport r;
  for (std::size_t d = 0; d < diff.size(); ++d) {
    if (sgn(diff[d]) < 0) r.violations.push_back({d, diff[d]});
  }
  r.verdict = r.violations.empty() ? Verdict::Holds : Verdict::Fails;
  return r;
}
}  // namespace

DominanceReport dominates(const QPolynomial& small, const QPolynomial& big) {
  const QPolynomial diff = big - small;
  return dominance_from_diff(diff.coeffs());
}

DominanceReport series_dominates(const QSeries& small, const QSeries& big) {
  QSeries diff = big;
  diff -= small;
  return dominance_from_diff(diff.coeffs());
}

const char* to_string(Verdict v) { return v == Verdict::Holds ? "HOLDS" : "FAILS"; }

}  // namespace qfkg
