#pragma once

#include <vector>

#include "starcut/graph.hpp"

namespace starcut {

/// Graphs with at most this many vertices are matched by exhaustive search.
inline constexpr int kExhaustiveMatchingLimit = 12;

/// Maximum-cardinality matching as (u, v) pairs with u < v, sorted.
/// Exhaustive search up to kExhaustiveMatchingLimit vertices, Edmonds'
/// blossom algorithm above.
std::vector<Edge> maximum_matching(const Graph& g);

/// Exhaustive branch-and-bound. Among maximum matchings, returns the first
/// one met when the lowest free vertex is matched to its lowest available
/// neighbor first.
std::vector<Edge> maximum_matching_exhaustive(const Graph& g);

/// Edmonds' augmenting-path algorithm with blossom contraction.
std::vector<Edge> maximum_matching_blossom(const Graph& g);

bool is_matching(const Graph& g, const std::vector<Edge>& matching);

}  // namespace starcut
