#pragma once

#include <vector>

#include "starcut/graph.hpp"
#include "starcut/star.hpp"

namespace starcut {

/// The two groups of components of G - X.
struct Sides {
  VertexSet s1;
  VertexSet s2;
};

/// X split into X1 = V(F1) (stars inside G[X]), X2 = V(M) (a maximum
/// matching of G[X - X1]) and the stable remainder X3.
struct CutPartition {
  VertexSet cut;
  StarFamily f1{2};
  VertexSet x1;
  std::vector<Edge> matching;
  VertexSet x2;
  VertexSet x3;
};

/// Output of the singleton stage. F2 is returned as well because freeing a
/// merged star may re-anchor the third vertex of an F2 star.
struct SingletonCover {
  StarFamily f2{2};
  StarFamily f3{2};
};

/// Snapshots of the singleton pipeline plus replacement counts.
struct CoverTrace {
  StarFamily initial{2};          // u_i z_i v_i, one per X3 vertex
  StarFamily reduced{2};          // every vertex in at most two stars
  StarFamily pair_merged{2};      // after merging overlapping stars
  StarFamily neighbor_merged{2};  // after merging adjacent singletons
  StarFamily disentangled{2};     // singletons moved off F2
  int pair_swaps = 0;             // shared third vertices re-routed in F2
  int multiplicity_swaps = 0;
  int singleton_swaps = 0;
  int anchor_swaps = 0;           // F2 third vertices re-anchored
  int freeing_swaps = 0;          // singletons moved to free an anchor
};

struct CoverResult {
  VertexSet cut;
  Sides sides;
  CutPartition partition;
  StarFamily f2{2};
  StarFamily f3{2};
  StarFamily family{2};
  CoverTrace trace;
};

/// The component holding the smallest vertex id forms S1, the rest S2.
/// Throws InputError when G - X is connected.
Sides split_sides(const Graph& g, const VertexSet& cut);

CutPartition partition_cut(const Graph& g, const VertexSet& cut);

/// One star per matched pair x_i y_i, completed by a third vertex outside X
/// and pairwise distinct. A third vertex forced to be shared is resolved by
/// moving the other owner onto a fresh neighbor.
StarFamily cover_matched_pairs(const Graph& g, const CutPartition& part);

/// Vertex-disjoint covering of X3 avoiding X1, X2 and (the possibly
/// re-anchored) F2.
SingletonCover cover_singletons(const Graph& g, const CutPartition& part, const StarFamily& f2, const Sides& sides,
                                CoverTrace* trace = nullptr);

/// Runs the pipeline on a given minimum vertex cut.
CoverResult cover_cut(const Graph& g, const VertexSet& cut);

/// cover_cut(g, global_min_cut(g)).
CoverResult cover_min_cut_detailed(const Graph& g);

/// Vertex-disjoint K_{1,2}-covering of a minimum vertex cut X with at most
/// |X| stars.
StarFamily cover_min_cut(const Graph& g);

}  // namespace starcut
