#include "qfkg/young.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

#include "qfkg/error.hpp"
#include "qfkg/ideal_lattice.hpp"
#include "qfkg/parallel.hpp"
#include "qfkg/poset.hpp"

namespace qfkg {

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw InputError("partition has a zero part before a positive one");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InputError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  if (text.empty() || text == "0") return Partition{};
  std::vector<std::uint32_t> parts;
  while (true) {
    auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
      throw InputError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
  std::vector<std::uint32_t> c(part(0), 0);
  for (std::uint32_t p : parts_) {
    for (std::uint32_t j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::move(c));
}

std::uint32_t Partition::hook(std::size_t i, std::size_t j) const {
  std::uint32_t leg = 0;
  for (std::size_t r = i + 1; r < parts_.size() && parts_[r] > j; ++r) ++leg;
  return static_cast<std::uint32_t>(parts_[i] - j - 1) + leg + 1;
}

std::vector<std::uint32_t> Partition::hook_lengths() const {
  const Partition c = conjugate();
  std::vector<std::uint32_t> h;
  h.reserve(size_);
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (std::size_t j = 0; j < parts_[i]; ++j) {
      h.push_back(static_cast<std::uint32_t>((parts_[i] - j) + (c.parts_[j] - i) - 1));
    }
  }
  return h;
}

bool Partition::contains(const Partition& sigma) const {
  if (sigma.length() > length()) return false;
  for (std::size_t i = 0; i < sigma.length(); ++i) {
    if (sigma.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::vector<std::size_t> Partition::addable_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i <= parts_.size(); ++i) {
    if (i == 0 || part(i - 1) > part(i)) rows.push_back(i);
  }
  return rows;
}

std::vector<std::size_t> Partition::removable_rows() const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (part(i) > part(i + 1)) rows.push_back(i);
  }
  return rows;
}

Partition Partition::with_cell(std::size_t row) const {
  std::vector<std::uint32_t> p(parts_);
  if (row > p.size() || (row > 0 && p[row - 1] == part(row))) throw PreconditionError("row is not addable");
  if (row == p.size()) p.push_back(0);
  ++p[row];
  return Partition(std::move(p));
}

Partition Partition::without_cell(std::size_t row) const {
  if (row >= parts_.size() || part(row) == part(row + 1)) throw PreconditionError("row is not removable");
  std::vector<std::uint32_t> p(parts_);
  --p[row];
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

Partition young_meet(const Partition& a, const Partition& b) {
  std::vector<std::uint32_t> p(std::min(a.length(), b.length()));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::min(a.part(i), b.part(i));
  return Partition(std::move(p));
}

Partition young_join(const Partition& a, const Partition& b) {
  std::vector<std::uint32_t> p(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::max(a.part(i), b.part(i));
  return Partition(std::move(p));
}

BigInt f_lambda(const Partition& lambda) {
  BigInt prod = 1;
  for (std::uint32_t h : lambda.hook_lengths()) prod *= h;
  const BigInt n = factorial_int(static_cast<unsigned>(lambda.size()));
  if (!mpz_divisible_p(n.get_mpz_t(), prod.get_mpz_t())) {
    throw InternalError("hook product does not divide |lambda|! for " + lambda.to_string());
  }
  return n / prod;
}

namespace {

// Places n, n-1, ..., 1 into removable corners, counting completed fillings.
void fill_down(std::vector<std::uint32_t>& rows, std::size_t remaining, BigInt& count) {
  if (remaining == 0) {
    ++count;
    return;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint32_t below = i + 1 < rows.size() ? rows[i + 1] : 0;
    if (rows[i] > below) {
      --rows[i];
      fill_down(rows, remaining - 1, count);
      ++rows[i];
    }
  }
}

void partitions_rec(std::size_t remaining, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (std::uint32_t p = std::min<std::size_t>(max_part, remaining); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

void box_rec(std::size_t row, std::size_t rows, std::uint32_t max_part, std::vector<std::uint32_t>& cur,
             std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (row == rows) return;
  for (std::uint32_t p = 1; p <= max_part; ++p) {
    cur.push_back(p);
    box_rec(row + 1, rows, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

BigInt count_syt_bruteforce(const Partition& lambda, std::size_t cap) {
  if (lambda.size() > cap) {
    throw SizeLimitError("brute-force tableau count is capped at " + std::to_string(cap) + " cells");
  }
  std::vector<std::uint32_t> rows(lambda.parts().begin(), lambda.parts().end());
  BigInt count = 0;
  fill_down(rows, lambda.size(), count);
  return count;
}

std::vector<Partition> partitions_of(std::size_t n) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> cur;
  partitions_rec(n, static_cast<std::uint32_t>(n), cur, out);
  return out;
}

std::vector<Partition> partitions_in_box(std::size_t rows, std::size_t cols) {
  std::vector<Partition> out;
  std::vector<std::uint32_t> cur;
  box_rec(0, rows, static_cast<std::uint32_t>(cols), cur, out);
  return out;
}

BigInt involution_count(std::size_t n) {
  BigInt prev = 1, cur = 1;  // i(0), i(1)
  if (n == 0) return prev;
  for (std::size_t k = 2; k <= n; ++k) {
    BigInt next = cur + BigInt(static_cast<unsigned long>(k - 1)) * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// ---------------------------------------------------------------------------
// BoxLattice

BoxLattice::BoxLattice(std::size_t rows, std::size_t cols, std::size_t cap) : rows_(rows), cols_(cols) {
  if (rows > kMaxSide || cols > kMaxSide) {
    throw PreconditionError("box sides are limited to " + std::to_string(kMaxSide));
  }
  BigInt count;
  mpz_bin_uiui(count.get_mpz_t(), rows + cols, rows);
  if (count > BigInt(static_cast<unsigned long>(cap))) {
    throw SizeLimitError("box lattice would have " + count.get_str() + " elements; cap is " + std::to_string(cap));
  }
  elems_ = partitions_in_box(rows, cols);
  std::sort(elems_.begin(), elems_.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  const auto n = static_cast<std::uint32_t>(elems_.size());
  index_.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) index_.emplace(key(elems_[i]), i);

  std::vector<std::vector<Elem>> down(n);
  up_off_.push_back(0);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<Elem> ups;
    for (std::size_t r : elems_[i].addable_rows()) {
      if (r >= rows_ || elems_[i].part(r) >= cols_) continue;
      const Elem u = lookup(elems_[i].with_cell(r));
      ups.push_back(u);
      down[u.id].push_back(Elem{i});
    }
    std::sort(ups.begin(), ups.end());
    up_.insert(up_.end(), ups.begin(), ups.end());
    up_off_.push_back(up_.size());
  }
  down_off_.push_back(0);
  for (auto& d : down) {
    std::sort(d.begin(), d.end());
    down_.insert(down_.end(), d.begin(), d.end());
    down_off_.push_back(down_.size());
  }
  if (n <= 1024) {
    meet_table_.resize(std::size_t{n} * n);
    join_table_.resize(std::size_t{n} * n);
    for (std::uint32_t x = 0; x < n; ++x) {
      for (std::uint32_t y = 0; y < n; ++y) {
        meet_table_[std::size_t{x} * n + y] = lookup(young_meet(elems_[x], elems_[y])).id;
        join_table_[std::size_t{x} * n + y] = lookup(young_join(elems_[x], elems_[y])).id;
      }
    }
  }
}

std::uint64_t BoxLattice::key(const Partition& p) const {
  std::uint64_t k = 0;
  for (std::size_t i = 0; i < p.length(); ++i) k |= std::uint64_t{p.part(i)} << (4 * i);
  return k;
}

Elem BoxLattice::lookup(const Partition& p) const {
  auto it = index_.find(key(p));
  if (it == index_.end()) throw InternalError("partition " + p.to_string() + " missing from box lattice");
  return Elem{it->second};
}

std::optional<Elem> BoxLattice::index_of(const Partition& p) const {
  if (!fits(p)) return std::nullopt;
  return lookup(p);
}

Elem BoxLattice::meet(Elem x, Elem y) const {
  if (!meet_table_.empty()) return Elem{meet_table_[std::size_t{x.id} * size() + y.id]};
  return lookup(young_meet(elems_[x.id], elems_[y.id]));
}

Elem BoxLattice::join(Elem x, Elem y) const {
  if (!join_table_.empty()) return Elem{join_table_[std::size_t{x.id} * size() + y.id]};
  return lookup(young_join(elems_[x.id], elems_[y.id]));
}

bool box_matches_grid_ideals(std::size_t d) {
  const BoxLattice box(d, d);
  const IdealLattice ideals = IdealLattice::of_poset(Poset::grid(d, d));
  if (box.size() != ideals.size()) return false;
  std::vector<Elem> image(box.size());
  std::vector<char> hit(ideals.size(), 0);
  for (std::uint32_t x = 0; x < box.size(); ++x) {
    std::vector<std::uint32_t> cells;
    const Partition& p = box.partition(Elem{x});
    for (std::size_t i = 0; i < p.length(); ++i) {
      for (std::size_t j = 0; j < p.part(i); ++j) cells.push_back(static_cast<std::uint32_t>(i * d + j));
    }
    std::sort(cells.begin(), cells.end());
    auto e = ideals.find_ideal(cells);
    if (!e || hit[e->id]) return false;
    hit[e->id] = 1;
    image[x] = *e;
    if (ideals.rank(*e) != box.rank(Elem{x})) return false;
  }
  for (std::uint32_t x = 0; x < box.size(); ++x) {
    std::vector<Elem> mapped;
    for (Elem u : box.upper_covers(Elem{x})) mapped.push_back(image[u.id]);
    std::sort(mapped.begin(), mapped.end());
    auto ups = ideals.upper_covers(image[x]);
    if (!std::equal(mapped.begin(), mapped.end(), ups.begin(), ups.end())) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Descriptors

Descriptor Descriptor::constant(Rational c) {
  Descriptor d;
  d.kind_ = Kind::Constant;
  d.a_ = std::move(c);
  return d;
}

Descriptor Descriptor::size() {
  Descriptor d;
  d.kind_ = Kind::Size;
  return d;
}

Descriptor Descriptor::affine_size(Rational a, Rational b) {
  Descriptor d;
  d.kind_ = Kind::AffineSize;
  d.a_ = std::move(a);
  d.b_ = std::move(b);
  return d;
}

Descriptor Descriptor::first_part() {
  Descriptor d;
  d.kind_ = Kind::FirstPart;
  return d;
}

Descriptor Descriptor::num_parts() {
  Descriptor d;
  d.kind_ = Kind::NumParts;
  return d;
}

Descriptor Descriptor::theta_pow(Rational theta) {
  Descriptor d;
  d.kind_ = Kind::ThetaPow;
  d.a_ = std::move(theta);
  return d;
}

Descriptor Descriptor::f_power(long e, long s) {
  Descriptor d;
  d.kind_ = Kind::FPower;
  d.e_ = e;
  d.s_ = s;
  return d;
}

Descriptor Descriptor::table(std::map<Partition, Rational> values) {
  Descriptor d;
  d.kind_ = Kind::Table;
  d.table_ = std::move(values);
  return d;
}

namespace {

long parse_long(std::string_view s) {
  long v = 0;
  const char* b = s.data();
  if (!s.empty() && s.front() == '+') ++b;
  auto [ptr, ec] = std::from_chars(b, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw InputError("malformed integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Descriptor Descriptor::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const auto comma = arg.find(',');
  if (colon == std::string_view::npos) {
    if (text == "size") return size();
    if (text == "first") return first_part();
    if (text == "parts") return num_parts();
    if (text == "uniform" || text == "one") return constant(1);
    if (text == "table") throw InputError("table descriptors come from instance files");
    try {
      return constant(parse_rational(text));
    } catch (const InputError&) {
      throw InputError("unknown descriptor '" + std::string(text) + "'");
    }
  }
  if (head == "const") return constant(parse_rational(arg));
  if (head == "theta") return theta_pow(parse_rational(arg));
  if (head == "affine") {
    if (comma == std::string_view::npos) throw InputError("affine descriptor needs 'affine:a,b'");
    return affine_size(parse_rational(arg.substr(0, comma)), parse_rational(arg.substr(comma + 1)));
  }
  if (head == "fpow") {
    if (comma == std::string_view::npos) return f_power(parse_long(arg));
    return f_power(parse_long(arg.substr(0, comma)), parse_long(arg.substr(comma + 1)));
  }
  throw InputError("unknown descriptor '" + std::string(text) + "'");
}

Rational Descriptor::operator()(const Partition& lambda) const {
  const auto n = static_cast<unsigned long>(lambda.size());
  switch (kind_) {
    case Kind::Constant: return a_;
    case Kind::Size: return Rational(n);
    case Kind::AffineSize: return a_ * n + b_;
    case Kind::FirstPart: return Rational(static_cast<unsigned long>(lambda.part(0)));
    case Kind::NumParts: return Rational(static_cast<unsigned long>(lambda.length()));
    case Kind::ThetaPow: return pow(a_, static_cast<long>(n));
    case Kind::FPower: return pow(Rational(f_lambda(lambda)), e_) / pow(factorial(static_cast<unsigned>(n)), s_);
    case Kind::Table: {
      auto it = table_.find(lambda);
      if (it == table_.end()) throw InputError("descriptor table has no entry for " + lambda.to_string());
      return it->second;
    }
  }
  return 0;
}

std::string Descriptor::to_string() const {
  switch (kind_) {
    case Kind::Constant: return "const:" + qfkg::to_string(a_);
    case Kind::Size: return "size";
    case Kind::AffineSize: return "affine:" + qfkg::to_string(a_) + "," + qfkg::to_string(b_);
    case Kind::FirstPart: return "first";
    case Kind::NumParts: return "parts";
    case Kind::ThetaPow: return "theta:" + qfkg::to_string(a_);
    case Kind::FPower: return "fpow:" + std::to_string(e_) + "," + std::to_string(s_);
    case Kind::Table: return "table[" + std::to_string(table_.size()) + "]";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Log-supermodularity of tableau weights

Prop61Report check_prop61(unsigned s, unsigned t, std::size_t d) {
  if (s > t) throw PreconditionError("tableau weight needs 0 <= s <= t");
  if (d > 8) throw PreconditionError("box side is limited to 8");
  const BoxLattice box(d, d);
  std::vector<Rational> mu(box.size());
  for (std::uint32_t x = 0; x < box.size(); ++x) {
    const Partition& p = box.partition(Elem{x});
    mu[x] = pow(Rational(f_lambda(p)), t) / pow(factorial(static_cast<unsigned>(p.size())), s);
  }
  Prop61Report rep;
  rep.elements = box.size();
  rep.all_pairs = is_log_supermodular(box, mu, LsmMode::AllPairs);
  rep.distance_two = is_log_supermodular(box, mu, LsmMode::DistanceTwo);
  return rep;
}

HookRatioReport hook_ratio_check(std::size_t max_size) {
  HookRatioReport rep;
  auto fail = [&rep](const std::string& what) {
    if (rep.holds) rep.first_failure = what;
    rep.holds = false;
  };
  for (std::size_t m = 0; m + 1 <= max_size; ++m) {
    for (const Partition& nu : partitions_of(m)) {
      const auto rows = nu.addable_rows();
      for (std::size_t rc : rows) {
        for (std::size_t rl : rows) {
          if (rc == rl) continue;
          const Partition sigma = nu.with_cell(rc);   // sigma \ lambda = {c}
          const Partition lambda = nu.with_cell(rl);  // lambda \ sigma = {c'}
          const Partition lambda_c = young_join(lambda, sigma);
          const std::size_t ci = rc;
          const std::size_t cj = nu.part(rc);
          ++rep.pairs_checked;
          const std::string tag = "lambda=" + lambda.to_string() + " sigma=" + sigma.to_string();
          BigInt lhs_z = 1, rhs_z = 1;
          // Cells of lambda (all of which lie in lambda + c).
          for (std::size_t i = 0; i < lambda.length(); ++i) {
            for (std::size_t j = 0; j < lambda.part(i); ++j) {
              const bool in_z = (i == ci && j < cj) || (j == cj && i < ci);
              const std::uint32_t h = lambda.hook(i, j);
              const std::uint32_t h_up = lambda_c.hook(i, j);
              if (in_z ? h_up != h + 1 : h_up != h) fail(tag + ": hook of lambda + c at a cell");
            }
          }
          // Cells of sigma - c = nu.
          for (std::size_t i = 0; i < nu.length(); ++i) {
            for (std::size_t j = 0; j < nu.part(i); ++j) {
              const bool in_z = (i == ci && j < cj) || (j == cj && i < ci);
              const std::uint32_t h = sigma.hook(i, j);
              const std::uint32_t h_down = nu.hook(i, j);
              if (in_z ? h_down + 1 != h : h_down != h) fail(tag + ": hook of sigma - c at a cell");
              if (!in_z) continue;
              ++rep.cells_checked;
              const std::uint32_t hl = lambda.hook(i, j);
              if (std::uint64_t{hl} * h < std::uint64_t{hl + 1} * (h - 1)) fail(tag + ": cellwise hook ratio");
              lhs_z *= BigInt(static_cast<unsigned long>(hl)) * h;
              rhs_z *= BigInt(static_cast<unsigned long>(hl + 1)) * (h - 1);
            }
          }
          if (lhs_z < rhs_z) fail(tag + ": reduced hook product");
          // The unreduced product inequality over all four shapes.
          BigInt l = 1, r = 1;
          for (std::uint32_t h : lambda.hook_lengths()) l *= h;
          for (std::uint32_t h : sigma.hook_lengths()) l *= h;
          for (std::uint32_t h : lambda_c.hook_lengths()) r *= h;
          for (std::uint32_t h : nu.hook_lengths()) r *= h;
          if (l < r) fail(tag + ": full hook product");
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Series

namespace {

using Weight = std::function<Rational(const Partition&)>;

QSeries tableau_series(const Weight& w, long s, long t, std::size_t D, std::size_t jobs) {
  auto coeffs = parallel_map(D + 1, jobs, [&](std::size_t n) -> Rational {
    Rational acc = 0;
    for (const Partition& p : partitions_of(n)) {
      const Rational wp = w(p);
      if (sgn(wp) == 0) continue;
      acc += wp * pow(Rational(f_lambda(p)), t);
    }
    return acc / pow(factorial(static_cast<unsigned>(n)), s);
  });
  return QSeries(D, std::move(coeffs));
}

void require_degree(std::size_t D, std::size_t cap) {
  if (D > cap) {
    throw SizeLimitError("series degree " + std::to_string(D) + " exceeds the cap " + std::to_string(cap));
  }
}

void require_nonnegative(const Descriptor& f, std::size_t D, const char* name) {
  for (std::size_t n = 0; n <= D; ++n) {
    for (const Partition& p : partitions_of(n)) {
      if (sgn(f(p)) < 0) {
        throw InputError(std::string(name) + " is negative at " + p.to_string() + " (" + f.to_string() + ")");
      }
    }
  }
}

}  // namespace

TableauSeries f_series(const Descriptor& mu, const Descriptor& k, long s, long t, std::size_t D, std::size_t cap,
                       std::size_t jobs) {
  require_degree(D, cap);
  TableauSeries out;
  out.s = s;
  out.t = t;
  out.mu = mu.to_string();
  out.k = k.to_string();
  out.series = tableau_series([&](const Partition& p) -> Rational { return k(p) * mu(p); }, s, t, D, jobs);
  return out;
}

Monotonicity young_monotonicity(const Descriptor& f, std::size_t max_size) {
  bool inc = true, dec = true;
  for (std::size_t n = 0; n < max_size; ++n) {
    for (const Partition& p : partitions_of(n)) {
      const Rational v = f(p);
      for (std::size_t r : p.addable_rows()) {
        const int c = cmp(v, f(p.with_cell(r)));
        if (c > 0) inc = false;
        if (c < 0) dec = false;
      }
    }
  }
  if (inc && dec) return Monotonicity::Constant;
  if (inc) return Monotonicity::Increasing;
  if (dec) return Monotonicity::Decreasing;
  return Monotonicity::Neither;
}

YoungLsmResult young_log_supermodular(const Descriptor& mu, std::size_t max_size) {
  std::vector<Partition> all;
  std::map<Partition, Rational> val;
  for (std::size_t n = 0; n <= max_size; ++n) {
    for (Partition& p : partitions_of(n)) {
      val.emplace(p, mu(p));
      all.push_back(std::move(p));
    }
  }
  const bool positive = std::all_of(val.begin(), val.end(), [](const auto& kv) { return sgn(kv.second) > 0; });
  YoungLsmResult res;
  res.mode_used = positive ? LsmMode::DistanceTwo : LsmMode::AllPairs;
  auto check = [&](const Partition& a, const Partition& b) {
    ++res.pairs_checked;
    if (val.at(a) * val.at(b) > val.at(young_meet(a, b)) * val.at(young_join(a, b))) {
      res.holds = false;
      res.witness = {a, b};
    }
    return res.holds;
  };
  if (positive) {
    for (const Partition& nu : all) {
      if (nu.size() + 2 > max_size) continue;
      const auto rows = nu.addable_rows();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = i + 1; j < rows.size(); ++j) {
          if (!check(nu.with_cell(rows[i]), nu.with_cell(rows[j]))) return res;
        }
      }
    }
    return res;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (young_join(all[i], all[j]).size() > max_size) continue;
      if (!check(all[i], all[j])) return res;
    }
  }
  return res;
}

SeriesFkgReport check_thm63(const Descriptor& mu, const Descriptor& g, const Descriptor& h, unsigned s, unsigned t,
                            std::size_t D, std::size_t jobs) {
  if (s > t) throw PreconditionError("tableau series needs 0 <= s <= t");
  require_degree(D, kSeriesDegreeCap);
  require_nonnegative(mu, D, "mu");
  require_nonnegative(g, D, "g");
  require_nonnegative(h, D, "h");
  SeriesFkgReport rep;
  rep.degree = D;
  rep.g_monotonicity = young_monotonicity(g, D);
  rep.h_monotonicity = young_monotonicity(h, D);
  rep.orientation = orientation_of(rep.g_monotonicity, rep.h_monotonicity);
  if (!young_log_supermodular(mu, D).holds) rep.unmet_hypotheses.push_back("weight mu is not log-supermodular");
  if (rep.g_monotonicity == Monotonicity::Neither) rep.unmet_hypotheses.push_back("g is not monotone");
  if (rep.h_monotonicity == Monotonicity::Neither) rep.unmet_hypotheses.push_back("h is not monotone");
  rep.hypotheses_met = rep.unmet_hypotheses.empty();

  const long ls = s, lt = t;
  rep.f_one = tableau_series([&](const Partition& p) { return mu(p); }, ls, lt, D, jobs);
  rep.f_g = tableau_series([&](const Partition& p) -> Rational { return g(p) * mu(p); }, ls, lt, D, jobs);
  rep.f_h = tableau_series([&](const Partition& p) -> Rational { return h(p) * mu(p); }, ls, lt, D, jobs);
  rep.f_gh = tableau_series([&](const Partition& p) -> Rational { return g(p) * h(p) * mu(p); }, ls, lt, D, jobs);
  QSeries prod_gh = rep.f_g * rep.f_h;
  QSeries prod_one = rep.f_one * rep.f_gh;
  if (rep.orientation == Orientation::Comonotone) {
    rep.lhs = std::move(prod_gh);
    rep.rhs = std::move(prod_one);
  } else {
    rep.lhs = std::move(prod_one);
    rep.rhs = std::move(prod_gh);
  }
  DominanceReport dom = series_dominates(rep.lhs, rep.rhs);
  rep.verdict = dom.verdict;
  rep.violations = std::move(dom.violations);
  return rep;
}

Rational poissonized_plancherel(const Rational& theta, const Partition& lambda) {
  if (sgn(theta) <= 0) throw PreconditionError("theta must be positive");
  const Rational f(f_lambda(lambda));
  const Rational nf = factorial(static_cast<unsigned>(lambda.size()));
  return pow(theta, static_cast<long>(lambda.size())) * f * f / (nf * nf);
}

Cor64Report check_cor64(const Rational& theta, const Descriptor& g, const Descriptor& h, std::size_t D,
                        std::size_t jobs) {
  if (sgn(theta) <= 0) throw PreconditionError("theta must be positive");
  Cor64Report rep;
  rep.theta = theta;
  rep.series = check_thm63(Descriptor::theta_pow(theta), g, h, 2, 2, D, jobs);
  rep.lhs_at_one = rep.series.lhs.sum();
  rep.rhs_at_one = rep.series.rhs.sum();
  rep.truncated_at_one_holds = rep.lhs_at_one <= rep.rhs_at_one;
  return rep;
}

Sample2Report check_sample2(long s, long t, std::size_t D, std::size_t jobs) {
  if (s == 0 || t == 0) throw PreconditionError("sample inequality needs s t != 0");
  require_degree(D, kSeriesDegreeCap);
  Sample2Report rep;
  rep.s = s;
  rep.t = t;
  rep.orientation = (s > 0) == (t > 0) ? Orientation::Comonotone : Orientation::Countermonotone;
  const Descriptor one = Descriptor::constant(1);
  auto power_series = [&](long k) { return f_series(one, one, 1, k, D, kSeriesDegreeCap, jobs).series; };
  QSeries e(D);
  if (D >= 1) e.coeff(1) = 1;
  if (D >= 2) e.coeff(2) = Rational(1, 2);
  const QSeries exp_series = QSeries::exp(e);
  rep.exp_identity = power_series(1) == exp_series;
  rep.left = power_series(s + 1) * power_series(t + 1);
  rep.right = exp_series * power_series(s + t + 1);
  rep.violations = rep.orientation == Orientation::Comonotone ? series_dominates(rep.left, rep.right).violations
                                                               : series_dominates(rep.right, rep.left).violations;
  rep.via_thm63 = check_thm63(one, Descriptor::f_power(s), Descriptor::f_power(t), 1, 1, D, jobs);
  return rep;
}

}  // namespace qfkg
