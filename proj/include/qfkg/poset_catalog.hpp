#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qfkg/poset.hpp"

namespace qfkg {

/// One poset per isomorphism class with at most max_elements elements and
/// at most max_ideals order ideals, the empty poset included. Ordered by
/// (ideal count, element count, canonical key). Each result is returned in
/// canonical labeling.
std::vector<Poset> enumerate_posets(std::size_t max_elements, std::size_t max_ideals);

/// Isomorphism-invariant key: the strict-order matrix under the lex-least
/// relabeling that respects refined element invariants. Posets up to 32
/// elements.
std::string canonical_key(const Poset& p);

/// Random poset on n elements: each pair i < j of indices is related with
/// probability percent/100, then closed transitively.
Poset random_poset(std::size_t n, unsigned percent, std::uint64_t seed);

}  // namespace qfkg
