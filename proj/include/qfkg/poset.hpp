#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qfkg {

using CoverPair = std::pair<std::uint32_t, std::uint32_t>;

/// Finite poset given by its cover relation. (a, b) in covers() means a is
/// covered by b. Construction validates that the covers are acyclic and
/// irredundant; strict up/down sets are precomputed as bitsets.
class Poset {
 public:
  static constexpr std::size_t kMaxElements = 512;

  Poset() = default;

  /// Throws InputError on out-of-range indices, cycles, duplicate or
  /// redundant covers, duplicate labels.
  static Poset from_covers(std::size_t n, std::vector<CoverPair> covers, std::vector<std::string> labels = {});
  /// Any generating set of strict relations a < b; the transitive reduction
  /// becomes the cover relation.
  static Poset from_relations(std::size_t n, const std::vector<CoverPair>& less, std::vector<std::string> labels = {});

  static Poset antichain(std::size_t n);
  static Poset chain(std::size_t n);
  /// rows x cols grid, element (i, j) at index i * cols + j, ordered
  /// componentwise. Its ideals are the partitions fitting in the box.
  static Poset grid(std::size_t rows, std::size_t cols);

  std::size_t size() const { return n_; }
  std::size_t words() const { return words_; }
  std::span<const CoverPair> covers() const { return covers_; }
  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::optional<std::uint32_t> index_of(std::string_view label) const;

  /// Strict order a < b.
  bool less(std::uint32_t a, std::uint32_t b) const;
  std::span<const std::uint64_t> strict_down(std::uint32_t a) const {
    return {down_.data() + a * words_, words_};
  }
  std::span<const std::uint64_t> strict_up(std::uint32_t a) const { return {up_.data() + a * words_, words_}; }

  /// Induced subposet on `elems` (listed in increasing index order); element
  /// k of the result is elems[k].
  Poset induced(std::span<const std::uint32_t> elems) const;

 private:
  static Poset from_closure(std::size_t n, std::vector<std::uint64_t> down, std::vector<std::string> labels);

  std::size_t n_ = 0;
  std::size_t words_ = 1;
  std::vector<CoverPair> covers_;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> down_;
  std::vector<std::uint64_t> up_;
};

}  // namespace qfkg
