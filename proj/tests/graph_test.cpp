#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "starcut/connectivity.hpp"
#include "starcut/errors.hpp"
#include "starcut/families.hpp"
#include "starcut/graph.hpp"
#include "starcut/graph_io.hpp"

using namespace starcut;

namespace {

VertexSet nbrs(const Graph& g, Vertex u) {
  auto s = g.neighbors(u);
  return VertexSet(s.begin(), s.end());
}

}  // namespace

TEST(Graph, NeighborsOfSmallFamilies) {
  EXPECT_EQ(nbrs(cycle_graph(5), 0), (VertexSet{1, 4}));
  EXPECT_EQ(nbrs(complete_graph(4), 2), (VertexSet{0, 1, 3}));
  EXPECT_EQ(nbrs(path_graph(4), 0), (VertexSet{1}));
}

TEST(Graph, RejectsBadEdgesAndMergesDuplicates) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(Graph(3, {{-1, 1}}), InputError);
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.m(), 1);
  EXPECT_THROW(g.neighbors(5), InputError);
}

TEST(Graph, EdgeEditing) {
  Graph c5 = cycle_graph(5);
  Graph p = c5.without_edge(0, 4);
  EXPECT_EQ(p, path_graph(5));
  EXPECT_EQ(p.with_edge(4, 0), c5);
  EXPECT_TRUE(complete_graph(4).is_complete());
  EXPECT_FALSE(c5.is_complete());
}

TEST(Graph, InducedSubgraphMapsBack) {
  Subgraph s = induced_subgraph(cycle_graph(6), {1, 2, 3, 5});
  EXPECT_EQ(s.graph.n(), 4);
  EXPECT_EQ(s.graph.m(), 2);
  EXPECT_EQ(s.to_parent, (std::vector<Vertex>{1, 2, 3, 5}));
}

TEST(Graph, JointNeighborhood) {
  EXPECT_EQ(joint_neighborhood(path_graph(6), {4, 5}), (VertexSet{3, 4, 5}));
  EXPECT_EQ(joint_neighborhood(complete_graph(4), {0, 1}), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(joint_neighborhood(cycle_graph(5), {2}), (VertexSet{1, 3}));
  EXPECT_THROW(joint_neighborhood(cycle_graph(5), {}), InputError);
}

TEST(Graph, DistancesAndDiameter) {
  EXPECT_EQ(distance(cycle_graph(6), 0, 3), 3);
  EXPECT_EQ(distance(cycle_graph(6), 2, 2), 0);
  Graph two(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  EXPECT_EQ(distance(two, 0, 4), kInfinity);
  EXPECT_EQ(diameter(two), kInfinity);
  EXPECT_EQ(diameter(cycle_graph(6)), 3);
  EXPECT_EQ(diameter(complete_graph(5)), 1);
  EXPECT_EQ(diameter(path_graph(5)), 4);
}

TEST(Graph, Components) {
  EXPECT_EQ(components(cycle_graph(5)).size(), 1u);
  Graph two(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  auto comps = components(two);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(comps[1], (VertexSet{3, 4}));
  EXPECT_EQ(components(Graph(3)).size(), 3u);
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(complete_graph(2)), "A_");
  EXPECT_EQ(to_graph6(cycle_graph(5)), "Dhc");
  EXPECT_EQ(to_graph6(Graph(0)), "?");
  EXPECT_EQ(from_graph6(">>graph6<<Dhc\n"), cycle_graph(5));
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(from_graph6(""), FormatError);
  EXPECT_THROW(from_graph6("Dh"), FormatError);     // too short
  EXPECT_THROW(from_graph6("Dhcc"), FormatError);   // too long
  EXPECT_THROW(from_graph6("A`"), FormatError);     // padding bit set
  EXPECT_THROW(from_graph6(":Fa@x^"), FormatError);  // sparse6
  EXPECT_THROW(from_graph6(">>sparse6<<:A"), FormatError);
  EXPECT_THROW(from_graph6("D\x7f"), FormatError);
}

TEST(Graph6, RoundTripRandomGraphs) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = std::uniform_int_distribution<int>(0, 70)(rng);
    Graph g = oracle::random_graph(n, 0.3, rng);
    EXPECT_EQ(from_graph6(to_graph6(g)), g) << "n=" << n;
  }
}

TEST(EdgeList, ParsesAndRoundTrips) {
  Graph g = parse_edge_list("# C4\n4 4\n0 1\n1 2\n\n2 3\n3 0\n");
  EXPECT_EQ(g, cycle_graph(4));
  EXPECT_EQ(parse_edge_list(to_edge_list(b5_graph())), b5_graph());
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_THROW(parse_edge_list(""), FormatError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), FormatError);
  EXPECT_THROW(parse_edge_list("3 1\n0 7\n"), FormatError);
  EXPECT_THROW(parse_edge_list("3 1\n0 x\n"), FormatError);
  EXPECT_THROW(parse_edge_list("3 1\n1 1\n"), InputError);
}

TEST(EdgeList, MissingFileIsAnIoError) { EXPECT_THROW(read_graph_file("/nonexistent/graph.el"), IoError); }
