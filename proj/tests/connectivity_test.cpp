#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "starcut/connectivity.hpp"
#include "starcut/errors.hpp"
#include "starcut/families.hpp"

using namespace starcut;

namespace {

// Paths must run u..v along edges and share no interior vertex.
void expect_disjoint_paths(const Graph& g, Vertex u, Vertex v, const std::vector<Path>& paths) {
  std::vector<int> used(g.n(), 0);
  for (const Path& p : paths) {
    ASSERT_GE(p.vertices.size(), 2u);
    EXPECT_EQ(p.front(), u);
    EXPECT_EQ(p.back(), v);
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) EXPECT_TRUE(g.has_edge(p.vertices[i], p.vertices[i + 1]));
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) ++used[p.vertices[i]];
  }
  for (int c : used) EXPECT_LE(c, 1);
}

bool separates(const Graph& g, const VertexSet& cut, Vertex u, Vertex v) {
  for (const VertexSet& comp : components_without(g, cut)) {
    if (contains(comp, u)) return !contains(comp, v);
  }
  return false;
}

Graph two_k4_sharing_vertex() {
  // Cut vertex 3.
  return Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}

}  // namespace

TEST(LocalConnectivity, SmallFamilies) {
  Graph c7 = cycle_graph(7);
  for (Vertex u = 0; u < 7; ++u) {
    for (Vertex v = u + 1; v < 7; ++v) EXPECT_EQ(local_connectivity(c7, u, v), 2);
  }
  EXPECT_EQ(local_connectivity(complete_graph(5), 1, 3), 4);
  EXPECT_EQ(local_connectivity(path_graph(4), 0, 3), 1);
  EXPECT_THROW(local_connectivity(c7, 2, 2), InputError);
}

TEST(LocalConnectivity, MatchesBruteForce) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(std::uniform_int_distribution<int>(3, 9)(rng), 0.45, rng);
    for (Vertex u = 0; u < g.n(); ++u) {
      for (Vertex v = u + 1; v < g.n(); ++v) {
        const int p = local_connectivity(g, u, v);
        ASSERT_EQ(p, oracle::local_connectivity(g, u, v));
        auto paths = internally_disjoint_paths(g, u, v);
        EXPECT_EQ(static_cast<int>(paths.size()), p);
        expect_disjoint_paths(g, u, v, paths);
        if (!g.has_edge(u, v)) {
          VertexSet cut = min_vertex_cut(g, u, v);
          EXPECT_EQ(static_cast<int>(cut.size()), p);
          EXPECT_TRUE(separates(g, cut, u, v));
        }
      }
    }
  }
}

TEST(DisjointPaths, CompleteGraphStartsWithTheEdge) {
  Graph k4 = complete_graph(4);
  auto paths = internally_disjoint_paths(k4, 0, 1);
  ASSERT_EQ(paths.size(), 3u);
  EXPECT_EQ(paths[0].vertices, (std::vector<Vertex>{0, 1}));
  expect_disjoint_paths(k4, 0, 1, paths);
}

TEST(DisjointPaths, CycleGivesBothArcs) {
  Graph c7 = cycle_graph(7);
  auto paths = internally_disjoint_paths(c7, 0, 3);
  ASSERT_EQ(paths.size(), 2u);
  expect_disjoint_paths(c7, 0, 3, paths);
  EXPECT_EQ(paths[0].length() + paths[1].length(), 7);
  auto p5 = internally_disjoint_paths(path_graph(5), 0, 4);
  ASSERT_EQ(p5.size(), 1u);
  EXPECT_EQ(p5[0].vertices, (std::vector<Vertex>{0, 1, 2, 3, 4}));
}

TEST(MinVertexCut, Examples) {
  VertexSet p5 = min_vertex_cut(path_graph(5), 0, 4);
  ASSERT_EQ(p5.size(), 1u);
  EXPECT_TRUE(p5[0] >= 1 && p5[0] <= 3);

  Graph c6 = cycle_graph(6);
  VertexSet c = min_vertex_cut(c6, 0, 3);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_TRUE(separates(c6, c, 0, 3));
  EXPECT_NE(c[0] < 3, c[1] < 3);  // one per arc

  Graph k23 = complete_bipartite_graph(2, 3);
  VertexSet k = min_vertex_cut(k23, 0, 1);
  EXPECT_EQ(k.size(), 3u);
  EXPECT_EQ(oracle::local_connectivity(k23, 0, 1), 3);
  VertexSet small = min_vertex_cut(k23, 2, 3);
  EXPECT_EQ(small, (VertexSet{0, 1}));
  EXPECT_THROW(min_vertex_cut(c6, 0, 1), InputError);
}

TEST(VertexConnectivity, Examples) {
  EXPECT_EQ(vertex_connectivity(complete_graph(5)), 4);
  for (int n = 4; n <= 12; ++n) EXPECT_EQ(vertex_connectivity(cycle_graph(n)), 2);
  Graph pet = oracle::petersen();
  EXPECT_EQ(oracle::kappa(pet), 3);
  EXPECT_EQ(vertex_connectivity(pet), 3);
  EXPECT_EQ(vertex_connectivity(b5_graph()), 3);
  EXPECT_EQ(vertex_connectivity(Graph(4, {{0, 1}})), 0);
  EXPECT_THROW(vertex_connectivity(Graph(1)), InputError);
}

TEST(VertexConnectivity, MatchesBruteForce) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(std::uniform_int_distribution<int>(2, 10)(rng), 0.5, rng);
    ASSERT_EQ(vertex_connectivity(g), oracle::kappa(g));
  }
}

TEST(GlobalMinCut, Examples) {
  Graph c7 = cycle_graph(7);
  VertexSet x = global_min_cut(c7);
  ASSERT_EQ(x.size(), 2u);
  EXPECT_FALSE(c7.has_edge(x[0], x[1]));
  EXPECT_GE(components_without(c7, x).size(), 2u);

  EXPECT_EQ(global_min_cut(two_k4_sharing_vertex()), (VertexSet{3}));
  EXPECT_EQ(global_min_cut(b5_graph()), (VertexSet{2, 3, 4}));

  EXPECT_THROW(global_min_cut(complete_graph(5)), InputError);
  EXPECT_THROW(global_min_cut(Graph(4, {{0, 1}, {2, 3}})), InputError);
}

TEST(GlobalMinCut, B5HasTwoMinimumCuts) {
  // {v1, v2, v3} is the cut separating a from b; {a, b, v2} separates v1
  // from v3 as well.
  Graph b5 = b5_graph();
  const auto a = oracle::matrix(b5);
  int three_cuts = 0;
  for (std::uint64_t s = 0; s < 32; ++s) {
    if (std::popcount(s) == 3 && oracle::component_count(a, s) >= 2) ++three_cuts;
  }
  EXPECT_EQ(oracle::kappa(b5), 3);
  EXPECT_EQ(three_cuts, 2);
}

TEST(GlobalMinCut, SizeIsKappaOnRandomGraphs) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = oracle::random_connected_graph(std::uniform_int_distribution<int>(3, 10)(rng), 0.5, rng);
    if (g.is_complete()) continue;
    VertexSet x = global_min_cut(g);
    EXPECT_EQ(static_cast<int>(x.size()), oracle::kappa(g));
    EXPECT_GE(components_without(g, x).size(), 2u);
  }
}
