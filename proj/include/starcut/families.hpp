#pragma once

#include <string_view>
#include <vector>

#include "starcut/graph.hpp"

namespace starcut {

Graph cycle_graph(int n);     // n >= 3
Graph path_graph(int n);      // n >= 1
Graph complete_graph(int n);  // n >= 1
Graph complete_bipartite_graph(int a, int b);

/// Two nonadjacent vertices a = 0, b = 1, each joined to every vertex of the
/// path 2 - 3 - 4. kappa = 3 while the star (3; 2, 4) alone disconnects it.
Graph b5_graph();

/// Names accepted by named_family.
const std::vector<std::string_view>& family_names();

/// cycle / path / complete take a vertex count, complete_bipartite takes
/// "a,b", B5 takes no parameter. Throws InputError on bad names or params.
Graph named_family(std::string_view name, std::string_view param);

}  // namespace starcut
