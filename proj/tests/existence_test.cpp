#include <gtest/gtest.h>

#include "oracles.hpp"
#include "starcut/connectivity.hpp"
#include "starcut/corpus.hpp"
#include "starcut/errors.hpp"
#include "starcut/existence.hpp"
#include "starcut/families.hpp"

using namespace starcut;

namespace {

// Direct set computation of the disjointness condition.
bool condition_holds(const Graph& g, Vertex u, Vertex v, Vertex w) {
  VertexSet far = set_union(joint_neighborhood(g, {v, w}), {std::min(v, w), std::max(v, w)});
  return set_intersection(joint_neighborhood(g, {u}), far).empty();
}

}  // namespace

TEST(DiameterCut, Examples) {
  StarFamily p5 = diameter_cut(path_graph(5));
  ASSERT_EQ(p5.size(), 1u);
  EXPECT_EQ(p5[0].vertices(), (VertexSet{1, 2, 3}));
  EXPECT_TRUE(is_structure_cut(path_graph(5), p5));

  for (int n : {8, 9}) {
    StarFamily f = diameter_cut(cycle_graph(n));
    EXPECT_EQ(f.size(), 2u);
    EXPECT_TRUE(is_structure_cut(cycle_graph(n), f));
  }
  EXPECT_THROW(diameter_cut(cycle_graph(7)), PreconditionError);
}

TEST(DiameterCut, EveryLongGraphUpToEight) {
  for (int n = 5; n <= 8; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      if (diameter(g) < 4) continue;
      StarFamily f = diameter_cut(g);
      EXPECT_TRUE(is_structure_cut(g, f));
      EXPECT_LE(static_cast<int>(f.size()), vertex_connectivity(g));
    }
  }
}

TEST(GreedyMod1, Examples) {
  StarFamily p4 = greedy_cut_mod1(path_graph(4));
  EXPECT_EQ(p4, StarFamily(2, {Star::make(1, {0, 2})}));
  StarFamily k4 = greedy_cut_mod1(complete_graph(4));
  EXPECT_EQ(k4, StarFamily(2, {Star::make(0, {1, 2})}));
  StarFamily c7 = greedy_cut_mod1(cycle_graph(7));
  EXPECT_LE(c7.size(), 2u);
  EXPECT_TRUE(is_structure_cut(cycle_graph(7), c7));
  EXPECT_THROW(greedy_cut_mod1(cycle_graph(6)), PreconditionError);
}

TEST(ExistsMod2, Examples) {
  EXPECT_FALSE(exists_mod2(cycle_graph(5)));
  EXPECT_FALSE(exists_mod2(complete_graph(8)));
  EXPECT_TRUE(exists_mod2(cycle_graph(8)));
  EXPECT_TRUE(exists_mod2(b5_graph()));
  EXPECT_THROW(exists_mod2(cycle_graph(7)), PreconditionError);
}

TEST(Mod0Condition, PathOnSix) {
  Graph p6 = path_graph(6);
  auto t = mod0_condition(p6);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (Triple{0, 3, 4}));
  EXPECT_TRUE(condition_holds(p6, 0, 3, 4));
  EXPECT_TRUE(condition_holds(p6, 0, 4, 5));
  EXPECT_FALSE(condition_holds(p6, 0, 2, 3));
}

TEST(Mod0Condition, NoTripleInDenseGraphs) {
  EXPECT_FALSE(mod0_condition(complete_graph(6)));
  EXPECT_FALSE(mod0_condition(complete_bipartite_graph(3, 3)));
  Graph c6 = cycle_graph(6);
  EXPECT_FALSE(mod0_condition(c6));
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = 0; v < 6; ++v) {
      for (Vertex w = 0; w < 6; ++w) {
        if (u != v && v != w && u != w) EXPECT_FALSE(condition_holds(c6, u, v, w));
      }
    }
  }
}

TEST(Mod0Condition, LeastTripleMatchesDirectSearch) {
  for (const Graph& g : enumerate_connected(6)) {
    std::optional<Triple> want;
    for (Vertex u = 0; u < 6 && !want; ++u) {
      for (Vertex v = 0; v < 6 && !want; ++v) {
        for (Vertex w = v + 1; w < 6 && !want; ++w) {
          if (u != v && u != w && condition_holds(g, u, v, w)) want = Triple{u, v, w};
        }
      }
    }
    EXPECT_EQ(mod0_condition(g), want);
  }
}

TEST(DecideExistence, Examples) {
  Certificate c5 = decide_existence(cycle_graph(5));
  EXPECT_EQ(c5.verdict, Verdict::NotExists);
  EXPECT_EQ(c5.rule, Rule::Mod2Iff);
  EXPECT_FALSE(c5.witness);

  Certificate p6 = decide_existence(path_graph(6));
  EXPECT_EQ(p6.verdict, Verdict::Exists);
  EXPECT_EQ(p6.rule, Rule::DiameterRule);
  EXPECT_TRUE(is_structure_cut(path_graph(6), *p6.witness));

  Graph k33 = complete_bipartite_graph(3, 3);
  Certificate k = decide_existence(k33);
  EXPECT_EQ(k.rule, Rule::ExhaustiveSearch);
  EXPECT_EQ(k.verdict == Verdict::Exists, oracle::struct_kappa(k33, 2).has_value());

  EXPECT_EQ(decide_existence(cycle_graph(6)).verdict, Verdict::NotExists);
  EXPECT_EQ(decide_existence(complete_graph(7)).rule, Rule::Mod1Greedy);
  EXPECT_THROW(decide_existence(path_graph(3)), InputError);
}

TEST(DecideExistence, AgreesWithOracleUpToSeven) {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      Certificate c = decide_existence(g);
      const bool exists = oracle::struct_kappa(g, 2).has_value();
      ASSERT_EQ(c.verdict == Verdict::Exists, exists);
      if (exists) {
        ASSERT_TRUE(c.witness);
        EXPECT_TRUE(is_structure_cut(g, *c.witness));
      }
    }
  }
}
