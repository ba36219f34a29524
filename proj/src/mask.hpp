#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "starcut/graph.hpp"

namespace starcut::detail {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
  }
  return adj;
}

inline Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (Vertex v : s) m |= bit(v);
  return m;
}

// True iff the vertices in `rest` induce a disconnected graph or exactly one
// vertex.
inline bool splits(const std::vector<Mask>& adj, Mask rest) {
  const int count = std::popcount(rest);
  if (count == 0) return false;
  if (count == 1) return true;
  Mask seen = rest & (~rest + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= rest & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen != rest;
}

}  // namespace starcut::detail
