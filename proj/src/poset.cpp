#include "qfkg/poset.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "qfkg/error.hpp"

namespace qfkg {

namespace {

std::size_t words_for(std::size_t n) { return std::max<std::size_t>(1, (n + 63) / 64); }

bool test_bit(const std::uint64_t* w, std::size_t i) { return (w[i / 64] >> (i % 64)) & 1u; }
void set_bit(std::uint64_t* w, std::size_t i) { w[i / 64] |= std::uint64_t{1} << (i % 64); }

void check_size(std::size_t n) {
  if (n > Poset::kMaxElements) {
    throw SizeLimitError("poset has " + std::to_string(n) + " elements; at most " +
                         std::to_string(Poset::kMaxElements) + " are supported");
  }
}

std::vector<std::string> default_labels(std::size_t n, std::vector<std::string> labels) {
  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }
  if (labels.size() != n) throw InputError("label count does not match element count");
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InputError("duplicate element label '" + l + "'");
  }
  return labels;
}

}  // namespace

Poset Poset::from_closure(std::size_t n, std::vector<std::uint64_t> down, std::vector<std::string> labels) {
  Poset p;
  p.n_ = n;
  p.words_ = words_for(n);
  p.labels_ = default_labels(n, std::move(labels));
  p.down_ = std::move(down);
  p.up_.assign(n * p.words_, 0);
  const std::size_t W = p.words_;
  for (std::size_t b = 0; b < n; ++b) {
    if (test_bit(&p.down_[b * W], b)) throw InputError("cover relation contains a cycle through '" + p.labels_[b] + "'");
    for (std::size_t a = 0; a < n; ++a) {
      if (test_bit(&p.down_[b * W], a)) set_bit(&p.up_[a * W], b);
    }
  }
  std::vector<std::uint64_t> implied(W);
  for (std::uint32_t b = 0; b < n; ++b) {
    std::fill(implied.begin(), implied.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (!test_bit(&p.down_[b * W], c)) continue;
      for (std::size_t w = 0; w < W; ++w) implied[w] |= p.down_[c * W + w];
    }
    for (std::uint32_t a = 0; a < n; ++a) {
      if (test_bit(&p.down_[b * W], a) && !test_bit(implied.data(), a)) p.covers_.emplace_back(a, b);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  return p;
}

Poset Poset::from_covers(std::size_t n, std::vector<CoverPair> covers, std::vector<std::string> labels) {
  check_size(n);
  labels = default_labels(n, std::move(labels));
  for (auto [a, b] : covers) {
    if (a >= n || b >= n) throw InputError("cover pair references an element outside the poset");
    if (a == b) throw InputError("cover pair (" + labels[a] + ", " + labels[a] + ") is a self-loop");
  }
  std::sort(covers.begin(), covers.end());
  if (auto dup = std::adjacent_find(covers.begin(), covers.end()); dup != covers.end()) {
    throw InputError("duplicate cover pair (" + labels[dup->first] + ", " + labels[dup->second] + ")");
  }

  // Kahn's algorithm: closure in topological order, cycle detection.
  std::vector<std::vector<std::uint32_t>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : covers) {
    succ[a].push_back(b);
    ++indeg[b];
  }
  const std::size_t W = words_for(n);
  std::vector<std::uint64_t> down(n * W, 0);
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) queue.push_back(i);
  }
  std::size_t head = 0;
  while (head < queue.size()) {
    const std::uint32_t a = queue[head++];
    for (std::uint32_t b : succ[a]) {
      for (std::size_t w = 0; w < W; ++w) down[b * W + w] |= down[a * W + w];
      set_bit(&down[b * W], a);
      if (--indeg[b] == 0) queue.push_back(b);
    }
  }
  if (queue.size() != n) throw InputError("cover relation contains a cycle");

  Poset p = from_closure(n, std::move(down), std::move(labels));
  if (p.covers_ != covers) {
    for (auto c : covers) {
      if (!std::binary_search(p.covers_.begin(), p.covers_.end(), c)) {
        throw InputError("cover pair (" + p.labels_[c.first] + ", " + p.labels_[c.second] +
                         ") is implied by other covers");
      }
    }
  }
  return p;
}

Poset Poset::from_relations(std::size_t n, const std::vector<CoverPair>& less, std::vector<std::string> labels) {
  check_size(n);
  const std::size_t W = words_for(n);
  std::vector<std::uint64_t> down(n * W, 0);
  for (auto [a, b] : less) {
    if (a >= n || b >= n) throw InputError("relation references an element outside the poset");
    set_bit(&down[b * W], a);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (test_bit(&down[i * W], k)) {
        for (std::size_t w = 0; w < W; ++w) down[i * W + w] |= down[k * W + w];
      }
    }
  }
  return from_closure(n, std::move(down), std::move(labels));
}

Poset Poset::antichain(std::size_t n) { return from_covers(n, {}); }

Poset Poset::chain(std::size_t n) {
  std::vector<CoverPair> covers;
  for (std::uint32_t i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return from_covers(n, std::move(covers));
}

Poset Poset::grid(std::size_t rows, std::size_t cols) {
  std::vector<CoverPair> covers;
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < rows; ++i) {
    for (std::uint32_t j = 0; j < cols; ++j) {
      const auto here = static_cast<std::uint32_t>(i * cols + j);
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
      if (i + 1 < rows) covers.emplace_back(here, static_cast<std::uint32_t>(here + cols));
      if (j + 1 < cols) covers.emplace_back(here, here + 1);
    }
  }
  return from_covers(rows * cols, std::move(covers), std::move(labels));
}

std::optional<std::uint32_t> Poset::index_of(std::string_view label) const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

bool Poset::less(std::uint32_t a, std::uint32_t b) const { return test_bit(&down_[b * words_], a); }

Poset Poset::induced(std::span<const std::uint32_t> elems) const {
  std::vector<CoverPair> rel;
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < elems.size(); ++i) {
    labels.push_back(labels_[elems[i]]);
    for (std::uint32_t j = 0; j < elems.size(); ++j) {
      if (less(elems[i], elems[j])) rel.emplace_back(i, j);
    }
  }
  return from_relations(elems.size(), rel, std::move(labels));
}

}  // namespace qfkg
