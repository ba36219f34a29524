#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace starcut {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// A simple path given by its vertex sequence.
struct Path {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  bool operator==(const Path&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Neighbor lists are kept sorted so that every traversal is deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InputError on self-loops or out-of-range endpoints. Repeated
  /// edges are merged.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return m_; }

  std::span<const Vertex> neighbors(Vertex u) const;
  int degree(Vertex u) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool is_complete() const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Throws InputError when u is not a vertex of this graph.
  void check_vertex(Vertex u) const;

  Graph without_edge(Vertex u, Vertex v) const;
  Graph with_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

/// An induced subgraph together with the map back to parent ids.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Vertices of g not in `removed`.
VertexSet complement(const Graph& g, const VertexSet& removed);

/// Set helpers on sorted vectors.
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);
VertexSet make_vertex_set(std::vector<Vertex> v);

}  // namespace starcut
