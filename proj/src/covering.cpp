#include "starcut/covering.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "starcut/connectivity.hpp"
#include "starcut/errors.hpp"
#include "starcut/matching.hpp"

namespace starcut {
namespace {

VertexSet neighbor_set(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  return VertexSet(nb.begin(), nb.end());
}

// K_{1,2} on the path through the edge xy and the extra vertex w.
Star pair_star(const Graph& g, Vertex x, Vertex y, Vertex w) {
  if (g.has_edge(x, w)) return Star::make(x, {y, w});
  return Star::make(y, {x, w});
}

std::optional<Vertex> first_outside(const VertexSet& candidates, const VertexSet& blocked) {
  for (Vertex c : candidates) {
    if (!contains(blocked, c)) return c;
  }
  return std::nullopt;
}

void check_both_sides(const Graph& g, const VertexSet& vertices, const Sides& sides) {
  for (Vertex v : vertices) {
    const VertexSet nb = neighbor_set(g, v);
    if (set_intersection(nb, sides.s1).empty() || set_intersection(nb, sides.s2).empty()) {
      throw PreconditionError("cut vertex " + std::to_string(v) + " lacks a neighbor on both sides");
    }
  }
}

// One star of the X3 covering, with the X3 vertices it covers.
struct Piece {
  Star star;
  std::vector<Vertex> covered;
};

StarFamily as_family(const std::vector<Piece>& pieces) {
  StarFamily f(2);
  for (const Piece& p : pieces) f.push_back(p.star);
  return f;
}

VertexSet piece_vertices(const std::vector<Piece>& pieces) { return as_family(pieces).vertices(); }

void replace_leaf(Piece& p, Vertex old_leaf, Vertex new_leaf) {
  std::vector<Vertex> leaves = p.star.leaves;
  std::replace(leaves.begin(), leaves.end(), old_leaf, new_leaf);
  p.star = Star::make(p.star.center, std::move(leaves));
}

class SingletonPipeline {
 public:
  SingletonPipeline(const Graph& g, const CutPartition& part, const StarFamily& f2, const Sides& sides)
      : g_(g), part_(part), f2_(f2), sides_(sides), bound_(g.n() + 1) {}

  SingletonCover run(CoverTrace* trace) {
    CoverTrace local;
    CoverTrace& t = trace ? *trace : local;

    initial_cover();
    t.initial = as_family(pieces_);
    t.multiplicity_swaps = reduce_multiplicity();
    t.reduced = as_family(pieces_);
    merge_overlapping();
    t.pair_merged = as_family(pieces_);
    merge_adjacent_singletons();
    t.neighbor_merged = as_family(pieces_);
    t.singleton_swaps = move_singletons_off_f2();
    t.disentangled = as_family(pieces_);
    release_anchors(t);

    StarFamily f3 = as_family(pieces_);
    StarFamily all = part_.f1;
    all.append(f2_);
    all.append(f3);
    if (!all.is_vertex_disjoint()) throw InvariantViolation("singleton covering overlaps F1 or F2");
    for (Vertex z : part_.x3) {
      if (f3.multiplicity(z) != 1) throw InvariantViolation("X3 vertex " + std::to_string(z) + " not covered exactly once");
    }
    return SingletonCover{f2_, std::move(f3)};
  }

 private:
  std::vector<int> multiplicities() const {
    std::vector<int> count(static_cast<std::size_t>(g_.n()), 0);
    for (const Piece& p : pieces_) {
      for (Vertex v : p.star.vertices()) ++count[v];
    }
    return count;
  }

  VertexSet occupied() const { return set_union(set_union(part_.f1.vertices(), f2_.vertices()), piece_vertices(pieces_)); }

  // u_i z_i v_i with the lowest neighbors of z_i on each side.
  void initial_cover() {
    for (Vertex z : part_.x3) {
      const VertexSet nb = neighbor_set(g_, z);
      const VertexSet a = set_intersection(nb, sides_.s1);
      const VertexSet b = set_intersection(nb, sides_.s2);
      if (a.empty() || b.empty()) throw PreconditionError("X3 vertex " + std::to_string(z) + " lacks a neighbor on both sides");
      pieces_.push_back(Piece{Star::make(z, {a.front(), b.front()}), {z}});
    }
  }

  // While some vertex lies in three or more stars, move one of its stars to
  // a fresh neighbor of that star's center, or to a neighbor used once.
  int reduce_multiplicity() {
    const VertexSet blocked = set_union(part_.x1, f2_.vertices());
    int swaps = 0;
    for (int iter = 0;; ++iter) {
      if (iter > bound_) throw InvariantViolation("multiplicity reduction did not terminate");
      const std::vector<int> count = multiplicities();
      auto hot = std::find_if(count.begin(), count.end(), [](int c) { return c >= 3; });
      if (hot == count.end()) return swaps;
      const Vertex x = static_cast<Vertex>(hot - count.begin());

      bool moved = false;
      for (Piece& p : pieces_) {
        if (!p.star.contains(x)) continue;
        const Vertex z = p.star.center;
        std::optional<Vertex> fresh, reused;
        for (Vertex c : g_.neighbors(z)) {
          if (p.star.contains(c) || contains(blocked, c)) continue;
          if (count[c] == 0 && !fresh) fresh = c;
          if (count[c] == 1 && !reused) reused = c;
        }
        if (auto c = fresh ? fresh : reused) {
          replace_leaf(p, x, *c);
          moved = true;
          break;
        }
      }
      if (!moved) throw InvariantViolation("no replacement for vertex " + std::to_string(x) + " shared by three stars");
      ++swaps;
    }
  }

  void require_disjoint(const char* stage) const {
    if (!as_family(pieces_).is_vertex_disjoint()) throw InvariantViolation(std::string(stage) + " left overlapping stars");
  }

  // Replace matched pairs (i, j) of the overlap graph by z_i u z_j, i and j
  // ordered as in the piece list.
  template <typename Adjacent, typename Merge>
  void merge_by_matching(const std::vector<int>& ids, Adjacent adjacent, Merge merge) {
    std::vector<Edge> aux_edges;
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (adjacent(pieces_[ids[a]], pieces_[ids[b]])) aux_edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
      }
    }
    const Graph aux(static_cast<int>(ids.size()), aux_edges);
    std::vector<std::optional<Piece>> replacement(pieces_.size());
    std::vector<bool> drop(pieces_.size(), false);
    for (auto [a, b] : maximum_matching(aux)) {
      const int i = ids[a], j = ids[b];
      replacement[i] = merge(pieces_[i], pieces_[j]);
      drop[j] = true;
    }
    std::vector<Piece> next;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (drop[i]) continue;
      next.push_back(replacement[i] ? std::move(*replacement[i]) : std::move(pieces_[i]));
    }
    pieces_ = std::move(next);
  }

  void merge_overlapping() {
    std::vector<int> ids(pieces_.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<int>(i);
    merge_by_matching(
        ids,
        [](const Piece& a, const Piece& b) { return !set_intersection(a.star.vertices(), b.star.vertices()).empty(); },
        [](const Piece& a, const Piece& b) {
          const Vertex u = set_intersection(a.star.vertices(), b.star.vertices()).front();
          return Piece{Star::make(u, {a.covered[0], b.covered[0]}), make_vertex_set({a.covered[0], b.covered[0]})};
        });
    require_disjoint("overlap merge");
  }

  void merge_adjacent_singletons() {
    std::vector<int> ids;
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      if (pieces_[i].covered.size() == 1) ids.push_back(static_cast<int>(i));
    }
    auto link = [this](const Piece& a, const Piece& b) {
      return set_intersection(neighbor_set(g_, a.covered[0]), b.star.vertices());
    };
    merge_by_matching(
        ids, [&](const Piece& a, const Piece& b) { return !link(a, b).empty() || !link(b, a).empty(); },
        [&](const Piece& a, const Piece& b) {
          VertexSet via = link(a, b);
          if (via.empty()) via = link(b, a);
          return Piece{Star::make(via.front(), {a.covered[0], b.covered[0]}), make_vertex_set({a.covered[0], b.covered[0]})};
        });
    require_disjoint("neighbor merge");
  }

  // Singleton stars touching F2 trade that leaf for an unused neighbor of
  // their center.
  int move_singletons_off_f2() {
    int swaps = 0;
    for (int iter = 0;; ++iter) {
      if (iter > bound_) throw InvariantViolation("singleton disentangling did not terminate");
      const VertexSet f2v = f2_.vertices();
      Piece* bad = nullptr;
      Vertex leaf = -1;
      for (Piece& p : pieces_) {
        if (p.covered.size() != 1) continue;
        for (Vertex l : p.star.leaves) {
          if (contains(f2v, l)) {
            bad = &p;
            leaf = l;
            break;
          }
        }
        if (bad) break;
      }
      if (!bad) return swaps;
      auto fresh = first_outside(neighbor_set(g_, bad->star.center), occupied());
      if (!fresh) {
        throw InvariantViolation("no free neighbor to move singleton star of " + std::to_string(bad->star.center) + " off F2");
      }
      replace_leaf(*bad, leaf, *fresh);
      ++swaps;
    }
  }

  // A merged star whose center is the third vertex w of an F2 star w x y:
  // re-anchor that F2 star on a free neighbor of x or y, first freeing one
  // held by a singleton star if necessary.
  void release_anchors(CoverTrace& t) {
    for (int iter = 0;; ++iter) {
      if (iter > 2 * bound_) throw InvariantViolation("F2 re-anchoring did not terminate");
      const VertexSet f2v = f2_.vertices();
      auto merged = std::find_if(pieces_.begin(), pieces_.end(),
                                 [&](const Piece& p) { return p.covered.size() == 2 && contains(f2v, p.star.center); });
      if (merged == pieces_.end()) return;
      const Vertex w = merged->star.center;

      std::size_t owner = 0;
      while (!f2_[owner].contains(w)) ++owner;
      const Star& anchor = f2_[owner];
      VertexSet pair = set_difference(anchor.vertices(), {w});
      // The endpoint away from w first.
      std::vector<Vertex> ends = pair;
      if (anchor.center == ends[0]) std::swap(ends[0], ends[1]);

      std::optional<Star> rebuilt;
      const VertexSet taken = occupied();
      for (Vertex e : ends) {
        if (auto c = first_outside(neighbor_set(g_, e), taken)) {
          rebuilt = Star::make(e, {e == pair[0] ? pair[1] : pair[0], *c});
          break;
        }
      }
      if (!rebuilt) {
        for (Vertex e : ends) {
          const VertexSet ne = neighbor_set(g_, e);
          for (Piece& p : pieces_) {
            if (p.covered.size() != 1) continue;
            const VertexSet held = set_intersection(VertexSet(p.star.leaves), ne);
            if (held.empty()) continue;
            auto fresh = first_outside(neighbor_set(g_, p.star.center), taken);
            if (!fresh) continue;
            replace_leaf(p, held.front(), *fresh);
            ++t.freeing_swaps;
            rebuilt = Star::make(e, {e == pair[0] ? pair[1] : pair[0], held.front()});
            break;
          }
          if (rebuilt) break;
        }
      }
      if (!rebuilt) throw InvariantViolation("no free vertex to re-anchor the F2 star through " + std::to_string(w));

      std::vector<Star> stars = f2_.stars();
      stars[owner] = *rebuilt;
      f2_ = StarFamily(2, std::move(stars));
      ++t.anchor_swaps;
    }
  }

  const Graph& g_;
  const CutPartition& part_;
  StarFamily f2_;
  const Sides& sides_;
  const int bound_;
  std::vector<Piece> pieces_;
};

}  // namespace

Sides split_sides(const Graph& g, const VertexSet& cut) {
  auto comps = components_without(g, cut);
  if (comps.size() < 2) throw InputError("removing the given set leaves the graph connected");
  Sides s;
  s.s1 = comps[0];
  for (std::size_t i = 1; i < comps.size(); ++i) s.s2 = set_union(s.s2, comps[i]);
  return s;
}

CutPartition partition_cut(const Graph& g, const VertexSet& cut) {
  for (Vertex v : cut) g.check_vertex(v);
  CutPartition part;
  part.cut = cut;

  const Subgraph inside = induced_subgraph(g, cut);
  for (const Star& s : maximal_star_packing(inside.graph, {}, 2)) {
    part.f1.push_back(Star::make(inside.to_parent[s.center], {inside.to_parent[s.leaves[0]], inside.to_parent[s.leaves[1]]}));
  }
  part.f1.sort();
  part.x1 = part.f1.vertices();

  const Subgraph rest = induced_subgraph(g, set_difference(cut, part.x1));
  std::vector<Vertex> matched;
  for (auto [a, b] : maximum_matching(rest.graph)) {
    const Vertex x = rest.to_parent[a], y = rest.to_parent[b];
    part.matching.emplace_back(std::min(x, y), std::max(x, y));
    matched.push_back(x);
    matched.push_back(y);
  }
  std::sort(part.matching.begin(), part.matching.end());
  part.x2 = make_vertex_set(std::move(matched));
  part.x3 = set_difference(set_difference(cut, part.x1), part.x2);
  return part;
}

namespace {

StarFamily cover_pairs_impl(const Graph& g, const CutPartition& part, int* swaps) {
  const std::size_t t = part.matching.size();
  std::vector<Vertex> third(t, -1);
  auto candidates = [&](std::size_t i) {
    auto [x, y] = part.matching[i];
    return set_difference(set_union(neighbor_set(g, x), neighbor_set(g, y)), part.cut);
  };
  auto used = [&] {
    std::vector<Vertex> u;
    for (Vertex w : third) {
      if (w >= 0) u.push_back(w);
    }
    return make_vertex_set(std::move(u));
  };

  for (std::size_t i = 0; i < t; ++i) {
    const VertexSet cand = candidates(i);
    if (cand.empty()) throw PreconditionError("matched pair has no neighbor outside the cut");
    if (auto w = first_outside(cand, used())) {
      third[i] = *w;
      continue;
    }
    // Every candidate is taken: share cand.front() and move its owner.
    const Vertex w = cand.front();
    const std::size_t owner = static_cast<std::size_t>(std::find(third.begin(), third.end(), w) - third.begin());
    auto fresh = first_outside(candidates(owner), used());
    if (!fresh) throw InvariantViolation("no replacement third vertex for a shared matched-pair star");
    third[owner] = *fresh;
    third[i] = w;
    if (swaps) ++*swaps;
  }

  StarFamily f2(2);
  for (std::size_t i = 0; i < t; ++i) {
    f2.push_back(pair_star(g, part.matching[i].first, part.matching[i].second, third[i]));
  }
  if (!f2.is_vertex_disjoint()) throw InvariantViolation("matched-pair covering is not vertex-disjoint");
  return f2;
}

}  // namespace

StarFamily cover_matched_pairs(const Graph& g, const CutPartition& part) { return cover_pairs_impl(g, part, nullptr); }

SingletonCover cover_singletons(const Graph& g, const CutPartition& part, const StarFamily& f2, const Sides& sides,
                                CoverTrace* trace) {
  return SingletonPipeline(g, part, f2, sides).run(trace);
}

CoverResult cover_cut(const Graph& g, const VertexSet& cut) {
  CoverResult r;
  r.cut = cut;
  r.sides = split_sides(g, cut);
  try {
    check_both_sides(g, cut, r.sides);
  } catch (const PreconditionError& e) {
    throw InvariantViolation(std::string("not a minimal cut: ") + e.what());
  }

  if (cut.size() == 1) {
    const Vertex c = cut[0];
    const VertexSet nb = neighbor_set(g, c);
    r.family.push_back(Star::make(c, {set_intersection(nb, r.sides.s1).front(), set_intersection(nb, r.sides.s2).front()}));
    r.partition.cut = cut;
    r.partition.x3 = cut;
    r.f3 = r.family;
    return r;
  }

  r.partition = partition_cut(g, cut);
  r.f2 = cover_pairs_impl(g, r.partition, &r.trace.pair_swaps);
  SingletonCover singles = cover_singletons(g, r.partition, r.f2, r.sides, &r.trace);
  r.f2 = std::move(singles.f2);
  r.f3 = std::move(singles.f3);

  r.family = r.partition.f1;
  r.family.append(r.f2);
  r.family.append(r.f3);
  try {
    validate_family(g, r.family);
  } catch (const InputError& e) {
    throw InvariantViolation(std::string("covering is not a vertex-disjoint star family: ") + e.what());
  }
  if (!set_difference(cut, r.family.vertices()).empty()) throw InvariantViolation("covering misses a cut vertex");
  if (r.family.size() > cut.size()) throw InvariantViolation("covering uses more stars than cut vertices");
  return r;
}

CoverResult cover_min_cut_detailed(const Graph& g) {
  if (g.n() < 4) throw InputError("covering needs at least four vertices");
  if (!is_connected(g)) throw InputError("covering needs a connected graph");
  if (g.is_complete()) throw InputError("no vertex cut exists in a complete graph");
  return cover_cut(g, global_min_cut(g));
}

StarFamily cover_min_cut(const Graph& g) { return cover_min_cut_detailed(g).family; }

}  // namespace starcut
