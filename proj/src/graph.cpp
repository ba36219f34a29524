#include "starcut/graph.hpp"

#include <algorithm>
#include <string>

#include "starcut/errors.hpp"

namespace starcut {

Graph::Graph(int n) {
  if (n < 0) throw InputError("vertex count must be nonnegative");
  adj_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  m_ = 0;
  for (auto& row : adj_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    m_ += static_cast<int>(row.size());
  }
  m_ /= 2;
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::check_vertex(Vertex u) const {
  if (u < 0 || u >= n()) {
    throw InputError("vertex " + std::to_string(u) + " out of range for n=" + std::to_string(n()));
  }
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return adj_[u];
}

int Graph::degree(Vertex u) const {
  check_vertex(u);
  return static_cast<int>(adj_[u].size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

bool Graph::is_complete() const {
  long long nn = n();
  return 2LL * m_ == nn * (nn - 1);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
  auto es = edges();
  Edge key{std::min(u, v), std::max(u, v)};
  std::erase(es, key);
  return Graph(n(), es);
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
  auto es = edges();
  es.emplace_back(u, v);
  return Graph(n(), es);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<int> index(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    g.check_vertex(keep[i]);
    index[keep[i]] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : g.neighbors(keep[i])) {
      if (index[w] > static_cast<int>(i)) es.emplace_back(static_cast<int>(i), index[w]);
    }
  }
  return Subgraph{Graph(static_cast<int>(keep.size()), es), keep};
}

VertexSet complement(const Graph& g, const VertexSet& removed) {
  VertexSet out;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!contains(removed, v)) out.push_back(v);
  }
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

VertexSet make_vertex_set(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace starcut
