#include "qfkg/ideal_lattice.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "qfkg/error.hpp"
#include "qfkg/kernels.hpp"

namespace qfkg {

namespace {

constexpr std::uint32_t kEmpty = 0xffffffffu;
constexpr std::size_t kDenseTableLimit = 256;
constexpr std::size_t kMaxWords = (Poset::kMaxElements + 63) / 64;

using Buf = std::array<std::uint64_t, kMaxWords>;

std::uint64_t hash_words(const std::uint64_t* w, std::size_t n) {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t z = w[i] + h + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h = z ^ (z >> 31);
  }
  return h;
}

// Numeric comparison of equal-width bitmasks.
bool mask_less(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = words; w-- > 0;) {
    if (a[w] != b[w]) return a[w] < b[w];
  }
  return false;
}

// Growable set of equal-width masks with insertion-order ids.
class MaskSet {
 public:
  explicit MaskSet(std::size_t words) : words_(words), slots_(64, kEmpty) {}

  std::pair<std::uint32_t, bool> insert(const std::uint64_t* key) {
    if ((count() + 1) * 2 > slots_.size()) grow();
    std::size_t s = slot(key);
    if (slots_[s] != kEmpty) return {slots_[s], false};
    const auto id = static_cast<std::uint32_t>(count());
    keys_.insert(keys_.end(), key, key + words_);
    slots_[s] = id;
    return {id, true};
  }
  std::size_t count() const { return keys_.size() / words_; }
  const std::uint64_t* key(std::size_t i) const { return keys_.data() + i * words_; }

 private:
  std::size_t slot(const std::uint64_t* key) const {
    const std::size_t m = slots_.size() - 1;
    std::size_t s = hash_words(key, words_) & m;
    while (slots_[s] != kEmpty && !std::equal(key, key + words_, this->key(slots_[s]))) s = (s + 1) & m;
    return s;
  }
  void grow() {
    std::vector<std::uint32_t> old(slots_.size() * 2, kEmpty);
    old.swap(slots_);
    for (std::size_t i = 0; i < count(); ++i) slots_[slot(key(i))] = static_cast<std::uint32_t>(i);
  }

  std::size_t words_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint32_t> slots_;
};

}  // namespace

IdealLattice IdealLattice::of_poset(Poset base, std::size_t cap) {
  IdealLattice L;
  const std::size_t n = base.size();
  const std::size_t W = base.words();
  L.words_ = W;

  std::vector<std::uint64_t> down_soa(W * n);
  for (std::uint32_t j = 0; j < n; ++j) {
    auto d = base.strict_down(j);
    for (std::size_t w = 0; w < W; ++w) down_soa[w * n + j] = d[w];
  }
  const auto& kt = kernels::active();

  // Breadth-first by cardinality; each level is sorted numerically before the
  // next is generated, which yields the (cardinality, bitmask) order directly.
  std::vector<std::uint64_t> level(W, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // (global parent, global child)
  std::size_t level_start = 0;
  std::vector<std::uint64_t> addable(W);
  for (std::size_t card = 0;; ++card) {
    const std::size_t level_count = level.size() / W;
    L.masks_.insert(L.masks_.end(), level.begin(), level.end());
    if (L.masks_.size() / W > cap) {
      throw SizeLimitError("ideal lattice exceeds the cap of " + std::to_string(cap) + " elements");
    }
    if (card == n) break;

    MaskSet next(W);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> local_edges;  // (global parent, local child)
    Buf child{};
    for (std::size_t i = 0; i < level_count; ++i) {
      const std::uint64_t* I = &level[i * W];
      kt.addable(down_soa, n, W, {I, W}, addable);
      for (std::size_t w = 0; w < W; ++w) {
        std::uint64_t bits = addable[w];
        while (bits) {
          const int b = std::countr_zero(bits);
          bits &= bits - 1;
          std::copy(I, I + W, child.begin());
          child[w] |= std::uint64_t{1} << b;
          auto [id, inserted] = next.insert(child.data());
          (void)inserted;
          local_edges.emplace_back(static_cast<std::uint32_t>(level_start + i), id);
        }
      }
    }
    const std::size_t next_count = next.count();
    std::vector<std::uint32_t> order(next_count);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return mask_less(next.key(a), next.key(b), W); });
    std::vector<std::uint32_t> position(next_count);
    std::vector<std::uint64_t> sorted(next_count * W);
    for (std::size_t p = 0; p < next_count; ++p) {
      position[order[p]] = static_cast<std::uint32_t>(p);
      std::copy(next.key(order[p]), next.key(order[p]) + W, sorted.begin() + p * W);
    }
    const std::size_t next_start = level_start + level_count;
    for (auto [parent, local] : local_edges) {
      edges.emplace_back(parent, static_cast<std::uint32_t>(next_start + position[local]));
    }
    level.swap(sorted);
    level_start = next_start;
  }

  const std::size_t N = L.masks_.size() / W;
  L.masks_soa_.resize(N * W);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t w = 0; w < W; ++w) L.masks_soa_[w * N + i] = L.masks_[i * W + w];
  }
  L.rank_.resize(N);
  kt.popcounts(L.masks_soa_, N, W, L.rank_);

  std::size_t cap_slots = 16;
  while (cap_slots < 2 * N) cap_slots *= 2;
  L.slots_.assign(cap_slots, kEmpty);
  for (std::size_t i = 0; i < N; ++i) L.slots_[L.lookup_slot(&L.masks_[i * W])] = static_cast<std::uint32_t>(i);

  // Cover graph in CSR form; edges are grouped by parent already.
  std::sort(edges.begin(), edges.end());
  L.up_off_.assign(N + 1, 0);
  L.down_off_.assign(N + 1, 0);
  for (auto [p, c] : edges) {
    ++L.up_off_[p + 1];
    ++L.down_off_[c + 1];
  }
  std::partial_sum(L.up_off_.begin(), L.up_off_.end(), L.up_off_.begin());
  std::partial_sum(L.down_off_.begin(), L.down_off_.end(), L.down_off_.begin());
  L.up_.resize(edges.size());
  L.down_.resize(edges.size());
  std::vector<std::size_t> fill_up(L.up_off_.begin(), L.up_off_.end() - 1);
  std::vector<std::size_t> fill_down(L.down_off_.begin(), L.down_off_.end() - 1);
  for (auto [p, c] : edges) {
    L.up_[fill_up[p]++] = Elem{c};
    L.down_[fill_down[c]++] = Elem{p};
  }

  L.base_ = std::move(base);

  if (N <= kDenseTableLimit) {
    L.meet_table_.resize(N * N);
    L.join_table_.resize(N * N);
    Buf buf{};
    for (std::size_t x = 0; x < N; ++x) {
      for (std::size_t y = 0; y < N; ++y) {
        for (std::size_t w = 0; w < W; ++w) buf[w] = L.masks_[x * W + w] & L.masks_[y * W + w];
        L.meet_table_[x * N + y] = L.must_find(buf.data()).id;
        for (std::size_t w = 0; w < W; ++w) buf[w] = L.masks_[x * W + w] | L.masks_[y * W + w];
        L.join_table_[x * N + y] = L.must_find(buf.data()).id;
      }
    }
  }
  return L;
}

std::size_t IdealLattice::lookup_slot(const std::uint64_t* key) const {
  const std::size_t m = slots_.size() - 1;
  std::size_t s = hash_words(key, words_) & m;
  while (slots_[s] != kEmpty && !std::equal(key, key + words_, &masks_[slots_[s] * words_])) s = (s + 1) & m;
  return s;
}

std::optional<Elem> IdealLattice::find(std::span<const std::uint64_t> mask) const {
  if (mask.size() != words_) return std::nullopt;
  const std::uint32_t id = slots_[lookup_slot(mask.data())];
  if (id == kEmpty) return std::nullopt;
  return Elem{id};
}

Elem IdealLattice::must_find(const std::uint64_t* key) const {
  const std::uint32_t id = slots_[lookup_slot(key)];
  if (id == kEmpty) throw InternalError("ideal lattice is not closed under the requested operation");
  return Elem{id};
}

std::optional<Elem> IdealLattice::find_ideal(std::span<const std::uint32_t> poset_elems) const {
  Buf buf{};
  for (std::uint32_t e : poset_elems) {
    if (e >= base_.size()) return std::nullopt;
    buf[e / 64] |= std::uint64_t{1} << (e % 64);
  }
  return find({buf.data(), words_});
}

Elem IdealLattice::meet(Elem x, Elem y) const {
  if (!meet_table_.empty()) return Elem{meet_table_[x.id * size() + y.id]};
  if (words_ == 1) return must_find(Buf{masks_[x.id] & masks_[y.id]}.data());
  Buf buf{};
  for (std::size_t w = 0; w < words_; ++w) buf[w] = masks_[x.id * words_ + w] & masks_[y.id * words_ + w];
  return must_find(buf.data());
}

Elem IdealLattice::join(Elem x, Elem y) const {
  if (!join_table_.empty()) return Elem{join_table_[x.id * size() + y.id]};
  if (words_ == 1) return must_find(Buf{masks_[x.id] | masks_[y.id]}.data());
  Buf buf{};
  for (std::size_t w = 0; w < words_; ++w) buf[w] = masks_[x.id * words_ + w] | masks_[y.id * words_ + w];
  return must_find(buf.data());
}

bool IdealLattice::leq(Elem x, Elem y) const {
  for (std::size_t w = 0; w < words_; ++w) {
    if (masks_[x.id * words_ + w] & ~masks_[y.id * words_ + w]) return false;
  }
  return true;
}

bool IdealLattice::contains(Elem x, std::uint32_t e) const {
  return (masks_[x.id * words_ + e / 64] >> (e % 64)) & 1u;
}

std::vector<std::uint32_t> IdealLattice::ideal(Elem x) const {
  std::vector<std::uint32_t> out;
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = masks_[x.id * words_ + w];
    while (bits) {
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

BigInt IdealLattice::max_chain_count(Elem x) const {
  // DP restricted to [bottom, x].
  const auto elems = interval_elements(bottom(), x);
  std::vector<BigInt> m(size());
  std::vector<std::uint8_t> in(size(), 0);
  for (Elem e : elems) in[e.id] = 1;
  for (Elem e : elems) {
    if (e.id == 0) {
      m[0] = 1;
      continue;
    }
    BigInt acc = 0;
    for (Elem y : lower_covers(e)) {
      if (in[y.id]) acc += m[y.id];
    }
    m[e.id] = acc;
  }
  return m[x.id];
}

std::vector<Elem> IdealLattice::interval_elements(Elem u, Elem v) const {
  std::vector<std::uint8_t> flags(size());
  kernels::active().interval_flags(masks_soa_, size(), words_, mask(u), mask(v), flags);
  std::vector<Elem> out;
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (flags[i]) out.push_back(Elem{i});
  }
  return out;
}

IntervalLattice IdealLattice::interval(Elem u, Elem v) const {
  if (!leq(u, v)) throw PreconditionError("interval [u, v] requires u <= v");
  std::vector<std::uint32_t> diff;
  for (std::uint32_t e : ideal(v)) {
    if (!contains(u, e)) diff.push_back(e);
  }
  IntervalLattice out{of_poset(base_.induced(diff)), {}};
  out.embedding.reserve(out.lattice.size());
  Buf buf{};
  for (std::uint32_t i = 0; i < out.lattice.size(); ++i) {
    std::copy(masks_.begin() + u.id * words_, masks_.begin() + (u.id + 1) * words_, buf.begin());
    for (std::uint32_t k : out.lattice.ideal(Elem{i})) buf[diff[k] / 64] |= std::uint64_t{1} << (diff[k] % 64);
    out.embedding.push_back(must_find(buf.data()));
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> IdealLattice::relative_complements(Elem u, Elem v) const {
  if (!leq(u, v)) throw PreconditionError("relative complements require u <= v");
  std::vector<std::pair<Elem, Elem>> out;
  Buf buf{};
  for (Elem x : interval_elements(u, v)) {
    // In a distributive lattice the complement of x in [u, v] is unique and,
    // as an ideal, must equal u | (v \ x).
    for (std::size_t w = 0; w < words_; ++w) {
      buf[w] = masks_[u.id * words_ + w] | (masks_[v.id * words_ + w] & ~masks_[x.id * words_ + w]);
    }
    auto y = find({buf.data(), words_});
    if (y && x.id <= y->id) out.emplace_back(x, *y);
  }
  return out;
}

ComplementedSublattice IdealLattice::complemented_elements() const {
  ComplementedSublattice out;
  for (auto [x, y] : relative_complements(bottom(), top())) {
    out.elements.push_back(x);
    if (y != x) out.elements.push_back(y);
  }
  std::sort(out.elements.begin(), out.elements.end());

  const std::size_t count = out.elements.size();
  if (!std::has_single_bit(count)) throw InternalError("complemented elements do not have Boolean cardinality");
  out.boolean_rank = static_cast<std::size_t>(std::countr_zero(count));
  // A Boolean lattice of rank k has exactly k atoms.
  if (count <= 1024) {
    std::size_t atoms = 0;
    for (Elem e : out.elements) {
      if (e == bottom()) continue;
      bool atom = true;
      for (Elem f : out.elements) {
        if (f != e && f != bottom() && leq(f, e)) {
          atom = false;
          break;
        }
      }
      if (atom) ++atoms;
    }
    if (atoms != out.boolean_rank) throw InternalError("complemented elements are not a Boolean lattice");
  }

  auto member = [&](Elem e) { return std::binary_search(out.elements.begin(), out.elements.end(), e); };
  auto check_pair = [&](Elem a, Elem b) {
    if (!member(meet(a, b)) || !member(join(a, b))) {
      throw InternalError("complemented elements are not closed under meet/join");
    }
  };
  if (count <= 1024) {
    for (Elem a : out.elements) {
      for (Elem b : out.elements) check_pair(a, b);
    }
  } else {
    std::mt19937_64 rng(count);
    for (int i = 0; i < 10000; ++i) check_pair(out.elements[rng() % count], out.elements[rng() % count]);
  }
  return out;
}

std::vector<std::pair<Elem, Elem>> IdealLattice::cover_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (std::uint32_t x = 0; x < size(); ++x) {
    for (Elem y : upper_covers(Elem{x})) out.emplace_back(Elem{x}, y);
  }
  return out;
}

}  // namespace qfkg
