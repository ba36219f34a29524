#pragma once

#include <string>
#include <vector>

#include "starcut/graph.hpp"

namespace starcut {

/// Isomorphism-invariant ordered partition of V(G) by color refinement,
/// starting from degrees. cells[i] lists its vertices in ascending order.
std::vector<std::vector<Vertex>> refined_cells(const Graph& g);

/// order[p] is the vertex placed at position p of the canonical form: the
/// ordering minimizing the upper-triangle adjacency bitstring (column by
/// column, as graph6 writes it) among orderings that respect refined_cells.
/// Worst case is exponential in the largest cell.
std::vector<Vertex> canonical_order(const Graph& g);

/// g relabeled by canonical_order; isomorphic graphs give equal results.
Graph canonical_form(const Graph& g);

std::string canonical_graph6(const Graph& g);

}  // namespace starcut
