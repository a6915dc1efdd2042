#include "qfkg/poset_catalog.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "qfkg/error.hpp"
#include "qfkg/random.hpp"

namespace qfkg {

namespace {

// Small posets as strict down-set masks; index order is a linear extension.
struct SmallPoset {
  std::vector<std::uint32_t> down;
};

SmallPoset to_small(const Poset& p) {
  if (p.size() > 32) throw PreconditionError("canonical forms are limited to posets with at most 32 elements");
  SmallPoset s;
  s.down.resize(p.size());
  for (std::uint32_t b = 0; b < p.size(); ++b) {
    for (std::uint32_t a = 0; a < p.size(); ++a) {
      if (p.less(a, b)) s.down[b] |= std::uint32_t{1} << a;
    }
  }
  return s;
}

// Colour refinement on (down-set colours, up-set colours) until stable,
// starting from height. Colours stay ordered by height, so sorting by colour
// gives a linear extension.
std::vector<std::uint32_t> refined_colours(const SmallPoset& p) {
  const std::size_t n = p.down.size();
  std::vector<std::uint32_t> colour(n, 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a = 0; a < n; ++a) {
        if (((p.down[b] >> a) & 1u) && colour[b] < colour[a] + 1) {
          colour[b] = colour[a] + 1;
          changed = true;
        }
      }
    }
  }
  std::vector<std::uint32_t> up(n, 0);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      if ((p.down[b] >> a) & 1u) up[a] |= std::uint32_t{1} << b;
    }
  }
  std::size_t classes = std::set<std::uint32_t>(colour.begin(), colour.end()).size();
  for (;;) {
    using Sig = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
    std::vector<Sig> sig(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> d, u;
      for (std::size_t j = 0; j < n; ++j) {
        if ((p.down[i] >> j) & 1u) d.push_back(colour[j]);
        if ((up[i] >> j) & 1u) u.push_back(colour[j]);
      }
      std::sort(d.begin(), d.end());
      std::sort(u.begin(), u.end());
      sig[i] = {colour[i], std::move(d), std::move(u)};
    }
    std::vector<Sig> sorted(sig);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      colour[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin());
    }
    if (sorted.size() == classes) break;
    classes = sorted.size();
  }
  return colour;
}

std::string matrix_key(const SmallPoset& p, const std::vector<std::uint32_t>& order) {
  const std::size_t n = order.size();
  std::vector<std::uint32_t> pos(n);
  for (std::size_t k = 0; k < n; ++k) pos[order[k]] = static_cast<std::uint32_t>(k);
  std::string key(n * n, '0');
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      if ((p.down[b] >> a) & 1u) key[pos[b] * n + pos[a]] = '1';
    }
  }
  return key;
}

// Lex-least key over orders that sort elements by colour, together with the
// minimising order.
std::pair<std::string, std::vector<std::uint32_t>> canonical(const SmallPoset& p) {
  const std::size_t n = p.down.size();
  const auto colour = refined_colours(p);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return colour[a] < colour[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && colour[order[j]] == colour[order[i]]) ++j;
    if (j - i > 1) blocks.emplace_back(i, j);
    i = j;
  }
  std::string best = matrix_key(p, order);
  std::vector<std::uint32_t> best_order = order;
  // Odometer over the permutations of every block.
  for (;;) {
    std::size_t k = 0;
    for (; k < blocks.size(); ++k) {
      auto [lo, hi] = blocks[k];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
    }
    if (k == blocks.size()) break;
    std::string key = matrix_key(p, order);
    if (key < best) {
      best = std::move(key);
      best_order = order;
    }
  }
  return {best, best_order};
}

Poset relabel(const SmallPoset& p, const std::vector<std::uint32_t>& order) {
  std::vector<std::uint32_t> pos(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<std::uint32_t>(k);
  std::vector<CoverPair> less;
  for (std::size_t b = 0; b < p.down.size(); ++b) {
    for (std::size_t a = 0; a < p.down.size(); ++a) {
      if ((p.down[b] >> a) & 1u) less.emplace_back(pos[a], pos[b]);
    }
  }
  return Poset::from_relations(order.size(), less);
}

// Number of ideals containing `base`, visiting elements in index order.
std::size_t count_ideals_above(const SmallPoset& p, std::size_t i, std::uint32_t chosen, std::uint32_t base) {
  if (i == p.down.size()) return 1;
  const std::uint32_t bit = std::uint32_t{1} << i;
  std::size_t total = 0;
  if (!(base & bit)) total += count_ideals_above(p, i + 1, chosen, base);
  if ((p.down[i] & chosen) == p.down[i]) total += count_ideals_above(p, i + 1, chosen | bit, base);
  return total;
}

void collect_ideals(const SmallPoset& p, std::size_t i, std::uint32_t chosen, std::vector<std::uint32_t>& out) {
  if (i == p.down.size()) {
    out.push_back(chosen);
    return;
  }
  collect_ideals(p, i + 1, chosen, out);
  if ((p.down[i] & chosen) == p.down[i]) collect_ideals(p, i + 1, chosen | (std::uint32_t{1} << i), out);
}

}  // namespace

std::string canonical_key(const Poset& p) {
  const SmallPoset s = to_small(p);
  return std::to_string(p.size()) + ":" + canonical(s).first;
}

std::vector<Poset> enumerate_posets(std::size_t max_elements, std::size_t max_ideals) {
  if (max_elements > 31) throw PreconditionError("poset enumeration is limited to 31 elements");
  struct Entry {
    SmallPoset poset;
    std::size_t ideals;
    std::string key;
  };
  std::vector<Entry> all;
  std::vector<Entry> level;
  if (max_ideals >= 1) level.push_back({SmallPoset{}, 1, "0:"});
  all = level;
  // Every poset arises from a smaller one by adding a maximal element whose
  // strict down-set is an ideal; adding elements only adds ideals.
  for (std::size_t n = 1; n <= max_elements && !level.empty(); ++n) {
    std::map<std::string, Entry> next;
    for (const Entry& e : level) {
      std::vector<std::uint32_t> ideals;
      collect_ideals(e.poset, 0, 0, ideals);
      for (std::uint32_t d : ideals) {
        const std::size_t count = e.ideals + count_ideals_above(e.poset, 0, 0, d);
        if (count > max_ideals) continue;
        SmallPoset grown = e.poset;
        grown.down.push_back(d);
        auto [key, order] = canonical(grown);
        key = std::to_string(n) + ":" + key;
        if (next.count(key)) continue;
        // Store in canonical labeling so later growth stays in index order.
        SmallPoset canon;
        canon.down.assign(n, 0);
        std::vector<std::uint32_t> pos(n);
        for (std::size_t k = 0; k < n; ++k) pos[order[k]] = static_cast<std::uint32_t>(k);
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t a = 0; a < n; ++a) {
            if ((grown.down[b] >> a) & 1u) canon.down[pos[b]] |= std::uint32_t{1} << pos[a];
          }
        }
        next.emplace(key, Entry{std::move(canon), count, key});
      }
    }
    level.clear();
    for (auto& [k, e] : next) level.push_back(std::move(e));
    all.insert(all.end(), level.begin(), level.end());
  }
  std::stable_sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) {
    return std::pair(a.ideals, a.poset.down.size()) < std::pair(b.ideals, b.poset.down.size());
  });
  std::vector<Poset> out;
  out.reserve(all.size());
  for (const Entry& e : all) {
    std::vector<std::uint32_t> id(e.poset.down.size());
    std::iota(id.begin(), id.end(), 0);
    out.push_back(relabel(e.poset, id));
  }
  return out;
}

Poset random_poset(std::size_t n, unsigned percent, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CoverPair> less;
  for (std::uint32_t j = 0; j < n; ++j) {
    for (std::uint32_t i = 0; i < j; ++i) {
      if (rng.below(100) < percent) less.emplace_back(i, j);
    }
  }
  return Poset::from_relations(n, less);
}

}  // namespace qfkg
