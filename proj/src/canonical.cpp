#include "starcut/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "starcut/errors.hpp"
#include "starcut/graph_io.hpp"

namespace starcut {

std::vector<std::vector<Vertex>> refined_cells(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> around;
      for (Vertex u : g.neighbors(v)) around.push_back(color[u]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    int next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (Vertex v = 0; v < n; ++v) color[v] = rank[sig[v]];
    if (next == classes) break;
    classes = next;
  }
  std::vector<std::vector<Vertex>> cells(std::max(classes, 0));
  for (Vertex v = 0; v < n; ++v) cells[color[v]].push_back(v);
  return cells;
}

namespace {

class OrderSearch {
 public:
  explicit OrderSearch(const Graph& g) : g_(g), n_(g.n()) {
    if (n_ > 64) throw InputError("canonical form supports at most 64 vertices");
    cells_ = refined_cells(g);
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      for (std::size_t i = 0; i < cells_[c].size(); ++i) cell_at_.push_back(static_cast<int>(c));
    }
    used_.assign(n_, false);
  }

  std::vector<Vertex> run() {
    order_.clear();
    cols_.clear();
    dfs(true);
    return best_order_;
  }

 private:
  void dfs(bool tight) {
    const int p = static_cast<int>(order_.size());
    if (p == n_) {
      if (!have_best_ || !tight) {
        best_cols_ = cols_;
        best_order_ = order_;
        have_best_ = true;
        ++generation_;
      }
      return;
    }
    for (Vertex v : cells_[cell_at_[p]]) {
      if (used_[v]) continue;
      std::uint64_t col = 0;
      for (int i = 0; i < p; ++i) {
        if (g_.has_edge(order_[i], v)) col |= std::uint64_t{1} << (p - 1 - i);
      }
      bool child_tight = false;
      if (have_best_ && tight) {
        if (col > best_cols_[p]) continue;
        child_tight = col == best_cols_[p];
      }
      const long before = generation_;
      used_[v] = true;
      order_.push_back(v);
      cols_.push_back(col);
      dfs(have_best_ ? child_tight : true);
      cols_.pop_back();
      order_.pop_back();
      used_[v] = false;
      // A new best found below shares this node's prefix.
      if (generation_ != before) tight = true;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<Vertex>> cells_;
  std::vector<int> cell_at_;
  std::vector<bool> used_;
  std::vector<Vertex> order_;
  std::vector<std::uint64_t> cols_;
  std::vector<Vertex> best_order_;
  std::vector<std::uint64_t> best_cols_;
  bool have_best_ = false;
  long generation_ = 0;
};

}  // namespace

std::vector<Vertex> canonical_order(const Graph& g) {
  if (g.n() == 0) return {};
  return OrderSearch(g).run();
}

Graph canonical_form(const Graph& g) {
  const std::vector<Vertex> order = canonical_order(g);
  std::vector<Vertex> pos(g.n());
  for (int p = 0; p < g.n(); ++p) pos[order[p]] = p;
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(pos[e.first], pos[e.second]);
  return Graph(g.n(), edges);
}

std::string canonical_graph6(const Graph& g) { return to_graph6(canonical_form(g)); }

}  // namespace starcut
