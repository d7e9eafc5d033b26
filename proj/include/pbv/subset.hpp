#pragma once

#include <cstddef>
#include <vector>

namespace pbv {

/// Sorted 0-based index subset of {0..r-1}; keys the coefficient maps of
/// forms and multivectors.
using Subset = std::vector<unsigned>;

/// All k-subsets of {0..r-1} in lexicographic order.
std::vector<Subset> subsets_of(std::size_t r, std::size_t k);

/// Merge two sorted disjoint-or-not index lists as an exterior product:
/// returns the sign (+1/-1) and the merged sorted subset, or sign 0 when an
/// index repeats.
int merge_wedge(const Subset& a, const Subset& b, Subset& out);

/// Sign of the (k, m-k)-shuffle that places the chosen positions first.
/// `chosen` are the indices (sorted, 0-based) into a list of length m.
int shuffle_sign(const Subset& chosen);

} // namespace pbv
