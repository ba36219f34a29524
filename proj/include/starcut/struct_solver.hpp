#pragma once

#include <optional>

#include "starcut/graph.hpp"
#include "starcut/star.hpp"

namespace starcut {

enum class StructStatus { Found, NoCutExists };

/// kappa(G; K_{1,m}) with a witness, or the certified absence of any
/// K_{1,m}-structure-cut.
struct StructResult {
  StructStatus status = StructStatus::NoCutExists;
  std::optional<int> value;
  std::optional<StarFamily> witness;

  bool found() const { return status == StructStatus::Found; }
};

/// Largest graph the bitmask solver accepts.
inline constexpr int kMaxSolverVertices = 64;

/// Exact structure connectivity by depth-first search over the canonical
/// star list, smallest family size first.
///
/// Sizes t run up to floor((n-1)/(m+1)). With `pure` off the search starts
/// at ceil(kappa(G)/(m+1)): every disconnecting family removes at least
/// kappa(G) vertices and a trivializing one removes n-1 >= kappa(G). The
/// witness at the minimum size is the lexicographically least sorted star
/// list.
///
/// Requires a connected graph with 3 <= n <= kMaxSolverVertices.
StructResult struct_connectivity_exact(const Graph& g, int arity = 2, bool pure = false);

/// Brute force restricted to one family size: the lexicographically least
/// structure-cut with exactly `size` stars, if any.
std::optional<StarFamily> find_structure_cut_of_size(const Graph& g, int arity, int size);

}  // namespace starcut
