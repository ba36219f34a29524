#include "starcut/struct_solver.hpp"

#include <string>

#include "mask.hpp"
#include "starcut/connectivity.hpp"
#include "starcut/errors.hpp"

namespace starcut {
namespace {

using detail::Mask;

class CutSearch {
 public:
  CutSearch(const Graph& g, int arity) : adj_(detail::adjacency_masks(g)), full_(detail::full_mask(g.n())) {
    stars_ = enumerate_stars(g, arity);
    for (const Star& s : stars_) masks_.push_back(detail::to_mask(s.vertices()));
  }

  // Lexicographically least index-increasing choice of `size` disjoint
  // stars whose removal splits the graph.
  bool find(int size, std::vector<int>& chosen) {
    chosen.clear();
    return dfs(0, size, 0, chosen);
  }

  const Star& star(int i) const { return stars_[i]; }

 private:
  bool dfs(std::size_t from, int remaining, Mask used, std::vector<int>& chosen) {
    if (remaining == 0) return detail::splits(adj_, full_ & ~used);
    for (std::size_t i = from; i + static_cast<std::size_t>(remaining) <= stars_.size(); ++i) {
      if (masks_[i] & used) continue;
      chosen.push_back(static_cast<int>(i));
      if (dfs(i + 1, remaining - 1, used | masks_[i], chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::vector<Mask> adj_;
  Mask full_;
  std::vector<Star> stars_;
  std::vector<Mask> masks_;
};

void check_solver_input(const Graph& g, int arity) {
  if (arity < 1) throw InputError("star arity must be at least 1");
  if (g.n() > kMaxSolverVertices) {
    throw InputError("exact solver supports at most " + std::to_string(kMaxSolverVertices) + " vertices");
  }
}

}  // namespace

std::optional<StarFamily> find_structure_cut_of_size(const Graph& g, int arity, int size) {
  check_solver_input(g, arity);
  if (size < 0) return std::nullopt;
  CutSearch search(g, arity);
  std::vector<int> chosen;
  if (!search.find(size, chosen)) return std::nullopt;
  StarFamily f(arity);
  for (int i : chosen) f.push_back(search.star(i));
  return f;
}

StructResult struct_connectivity_exact(const Graph& g, int arity, bool pure) {
  check_solver_input(g, arity);
  if (g.n() < 3) throw InputError("structure connectivity needs at least three vertices");
  if (!is_connected(g)) throw InputError("structure connectivity of a disconnected graph");

  const int max_size = (g.n() - 1) / (arity + 1);
  int start = 1;
  if (!pure) {
    const int kappa = vertex_connectivity(g);
    start = std::max(1, (kappa + arity) / (arity + 1));
  }

  CutSearch search(g, arity);
  std::vector<int> chosen;
  for (int t = start; t <= max_size; ++t) {
    if (search.find(t, chosen)) {
      StarFamily f(arity);
      for (int i : chosen) f.push_back(search.star(i));
      return StructResult{StructStatus::Found, t, std::move(f)};
    }
  }
  return StructResult{};
}

}  // namespace starcut
