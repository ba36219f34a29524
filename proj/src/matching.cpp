#include "starcut/matching.hpp"

#include <algorithm>
#include <deque>

#include "starcut/errors.hpp"

namespace starcut {
namespace {

std::vector<Edge> to_pairs(const std::vector<int>& mate) {
  std::vector<Edge> out;
  for (int v = 0; v < static_cast<int>(mate.size()); ++v) {
    if (mate[v] > v) out.emplace_back(v, mate[v]);
  }
  return out;
}

class Exhaustive {
 public:
  explicit Exhaustive(const Graph& g) : g_(g), mate_(static_cast<std::size_t>(g.n()), -1), done_(static_cast<std::size_t>(g.n()), false) {}

  std::vector<Edge> run() {
    search(0, 0, g_.n());
    return to_pairs(best_);
  }

 private:
  void search(Vertex from, int size, int undecided) {
    if (size + undecided / 2 <= best_size_) return;
    Vertex v = from;
    while (v < g_.n() && done_[v]) ++v;
    if (v == g_.n()) {
      best_size_ = size;
      best_ = mate_;
      return;
    }
    done_[v] = true;
    for (Vertex w : g_.neighbors(v)) {
      if (done_[w]) continue;
      done_[w] = true;
      mate_[v] = w;
      mate_[w] = v;
      search(v + 1, size + 1, undecided - 2);
      mate_[v] = mate_[w] = -1;
      done_[w] = false;
    }
    search(v + 1, size, undecided - 1);
    done_[v] = false;
  }

  const Graph& g_;
  std::vector<int> mate_;
  std::vector<bool> done_;
  std::vector<int> best_;
  int best_size_ = -1;
};

// Edmonds' algorithm in the classic BFS formulation: grow an alternating
// tree from each free root, contracting odd cycles through base pointers.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(g.n()),
        mate_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_)),
        base_(static_cast<std::size_t>(n_)),
        used_(static_cast<std::size_t>(n_)),
        in_blossom_(static_cast<std::size_t>(n_)) {}

  std::vector<Edge> run() {
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      Vertex v = find_path(root);
      while (v != -1) {
        Vertex pv = parent_[v];
        Vertex ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
      }
    }
    return to_pairs(mate_);
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          Vertex cur = lca(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::vector<int> mate_, parent_, base_;
  std::vector<bool> used_, in_blossom_;
};

}  // namespace

std::vector<Edge> maximum_matching_exhaustive(const Graph& g) { return Exhaustive(g).run(); }

std::vector<Edge> maximum_matching_blossom(const Graph& g) { return Blossom(g).run(); }

std::vector<Edge> maximum_matching(const Graph& g) {
  if (g.n() <= kExhaustiveMatchingLimit) return maximum_matching_exhaustive(g);
  return maximum_matching_blossom(g);
}

bool is_matching(const Graph& g, const std::vector<Edge>& matching) {
  std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
  for (auto [u, v] : matching) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.has_edge(u, v)) return false;
    if (used[u] || used[v]) return false;
    used[u] = used[v] = true;
  }
  return true;
}

}  // namespace starcut
