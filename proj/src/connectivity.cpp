#include "starcut/connectivity.hpp"

#include <algorithm>
#include <deque>

#include "starcut/errors.hpp"

namespace starcut {
namespace {

// Split-vertex network: vertex v becomes v_in = 2v and v_out = 2v + 1 joined
// by a unit arc; every graph edge becomes two uncuttable arcs out->in, so a
// minimum cut consists of vertex arcs only. Arcs into the source and out of
// the sink are omitted so decomposed paths stay simple.
class SplitNetwork {
 public:
  SplitNetwork(const Graph& g, Vertex s, Vertex t) : n_(g.n()), s_(s), t_(t) {
    arcs_.resize(2 * static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      if (v != s && v != t) add_arc(in(v), out(v), 1);
    }
    for (auto [a, b] : g.edges()) {
      if ((a == s && b == t) || (a == t && b == s)) continue;
      if (b != s && a != t) add_arc(out(a), in(b), n_ + 1);
      if (a != s && b != t) add_arc(out(b), in(a), n_ + 1);
    }
  }

  int max_flow() {
    const int source = out(s_);
    const int sink = in(t_);
    int flow = 0;
    while (true) {
      std::vector<int> prev_node(arcs_.size(), -1), prev_arc(arcs_.size(), -1);
      std::deque<int> queue{source};
      prev_node[source] = source;
      while (!queue.empty() && prev_node[sink] < 0) {
        int x = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < arcs_[x].size(); ++i) {
          const Arc& a = arcs_[x][i];
          if (a.cap > 0 && prev_node[a.to] < 0) {
            prev_node[a.to] = x;
            prev_arc[a.to] = static_cast<int>(i);
            queue.push_back(a.to);
          }
        }
      }
      if (prev_node[sink] < 0) break;
      for (int y = sink; y != source; y = prev_node[y]) {
        Arc& a = arcs_[prev_node[y]][prev_arc[y]];
        a.cap -= 1;
        arcs_[y][a.rev].cap += 1;
      }
      ++flow;
    }
    flow_ = flow;
    return flow;
  }

  // Vertices whose in-node is reachable in the residual graph but whose
  // out-node is not.
  VertexSet cut() const {
    std::vector<bool> seen(arcs_.size(), false);
    std::deque<int> queue{out(s_)};
    seen[out(s_)] = true;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (const Arc& a : arcs_[x]) {
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = true;
          queue.push_back(a.to);
        }
      }
    }
    VertexSet result;
    for (Vertex v = 0; v < n_; ++v) {
      if (v != s_ && v != t_ && seen[in(v)] && !seen[out(v)]) result.push_back(v);
    }
    return result;
  }

  std::vector<Path> paths() {
    std::vector<Path> result;
    for (int k = 0; k < flow_; ++k) {
      Path p{{s_}};
      int x = out(s_);
      while (true) {
        Arc* next = nullptr;
        for (Arc& a : arcs_[x]) {
          if (a.cap < a.original && a.to % 2 == 0) {
            next = &a;
            break;
          }
        }
        if (next == nullptr) throw InvariantViolation("flow decomposition lost a path");
        next->cap += 1;  // consume
        Vertex v = next->to / 2;
        p.vertices.push_back(v);
        if (v == t_) break;
        x = out(v);
      }
      result.push_back(std::move(p));
    }
    return result;
  }

 private:
  struct Arc {
    int to;
    int cap;
    int original;
    std::size_t rev;
  };

  static int in(Vertex v) { return 2 * v; }
  static int out(Vertex v) { return 2 * v + 1; }

  void add_arc(int a, int b, int cap) {
    arcs_[a].push_back(Arc{b, cap, cap, arcs_[b].size()});
    arcs_[b].push_back(Arc{a, 0, 0, arcs_[a].size() - 1});
  }

  int n_;
  Vertex s_, t_;
  int flow_ = 0;
  std::vector<std::vector<Arc>> arcs_;
};

void check_pair(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw InputError("local connectivity is undefined for u == v");
}

}  // namespace

VertexSet joint_neighborhood(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("joint neighborhood of an empty set");
  std::vector<Vertex> all;
  for (Vertex x : s) {
    auto nb = g.neighbors(x);
    all.insert(all.end(), nb.begin(), nb.end());
  }
  return make_vertex_set(std::move(all));
}

std::vector<int> distances_from(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<int> dist(static_cast<std::size_t>(g.n()), kInfinity);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kInfinity) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

int distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  return distances_from(g, u)[v];
}

int diameter(const Graph& g) {
  if (g.n() < 1) throw InputError("diameter of the empty graph");
  int best = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (int d : distances_from(g, u)) best = std::max(best, d);
  }
  return best;
}

std::vector<VertexSet> components_without(const Graph& g, const VertexSet& removed) {
  std::vector<bool> seen(static_cast<std::size_t>(g.n()), false);
  for (Vertex r : removed) {
    g.check_vertex(r);
    seen[r] = true;
  }
  std::vector<VertexSet> out;
  for (Vertex start = 0; start < g.n(); ++start) {
    if (seen[start]) continue;
    VertexSet comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex y : g.neighbors(comp[i])) {
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components_without(g, {}); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

int local_connectivity(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  SplitNetwork net(g, u, v);
  return net.max_flow() + (g.has_edge(u, v) ? 1 : 0);
}

std::vector<Path> internally_disjoint_paths(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  std::vector<Path> result;
  if (g.has_edge(u, v)) result.push_back(Path{{u, v}});
  SplitNetwork net(g, u, v);
  net.max_flow();
  for (Path& p : net.paths()) result.push_back(std::move(p));
  return result;
}

VertexSet min_vertex_cut(const Graph& g, Vertex u, Vertex v) {
  check_pair(g, u, v);
  if (g.has_edge(u, v)) throw InputError("no vertex cut separates adjacent vertices");
  SplitNetwork net(g, u, v);
  net.max_flow();
  return net.cut();
}

namespace {

// Lexicographically first non-adjacent pair attaining the minimum flow.
std::pair<int, Edge> min_flow_pair(const Graph& g) {
  int best = kInfinity;
  Edge arg{-1, -1};
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v)) continue;
      SplitNetwork net(g, u, v);
      int f = net.max_flow();
      if (f < best) {
        best = f;
        arg = {u, v};
        if (best == 0) return {best, arg};
      }
    }
  }
  return {best, arg};
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  if (g.n() < 2) throw InputError("vertex connectivity needs at least two vertices");
  if (g.is_complete()) return g.n() - 1;
  return min_flow_pair(g).first;
}

VertexSet global_min_cut(const Graph& g) {
  if (g.n() < 3) throw InputError("global minimum cut needs at least three vertices");
  if (g.is_complete()) throw InputError("no vertex cut exists in a complete graph");
  if (!is_connected(g)) throw InputError("global minimum cut of a disconnected graph");
  auto [value, pair] = min_flow_pair(g);
  (void)value;
  return min_vertex_cut(g, pair.first, pair.second);
}

}  // namespace starcut
