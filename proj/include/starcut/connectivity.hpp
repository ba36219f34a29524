#pragma once

#include <limits>
#include <vector>

#include "starcut/graph.hpp"

namespace starcut {

/// Distance / diameter value for vertex pairs with no connecting path.
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Union of N(s) over s in `s`. Throws InputError on an empty set.
VertexSet joint_neighborhood(const Graph& g, const VertexSet& s);

/// Shortest-path edge count, or kInfinity.
int distance(const Graph& g, Vertex u, Vertex v);

/// BFS distances from `source` (kInfinity for unreachable vertices).
std::vector<int> distances_from(const Graph& g, Vertex source);

/// Maximum pairwise distance; kInfinity when g is disconnected.
int diameter(const Graph& g);

/// Connected components ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

/// Components of g - removed, ordered by smallest member.
std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed);

bool is_connected(const Graph& g);

/// p(u, v): maximum number of internally disjoint u-v paths.
int local_connectivity(const Graph& g, Vertex u, Vertex v);

/// A maximum system of internally disjoint u-v paths. When u and v are
/// adjacent the single-edge path comes first.
std::vector<Path> internally_disjoint_paths(const Graph& g, Vertex u, Vertex v);

/// Minimum vertex set separating non-adjacent u and v.
VertexSet min_vertex_cut(const Graph& g, Vertex u, Vertex v);

/// kappa(G); n-1 for complete graphs.
int vertex_connectivity(const Graph& g);

/// A vertex cut of size kappa(G) for a connected non-complete graph.
VertexSet global_min_cut(const Graph& g);

}  // namespace starcut
