#include "starcut/star.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "starcut/connectivity.hpp"
#include "starcut/errors.hpp"

namespace starcut {

Star Star::make(Vertex center, std::vector<Vertex> leaves) {
  std::sort(leaves.begin(), leaves.end());
  if (std::adjacent_find(leaves.begin(), leaves.end()) != leaves.end()) throw InputError("star has a repeated leaf");
  if (std::binary_search(leaves.begin(), leaves.end(), center)) throw InputError("star center is also a leaf");
  return Star{center, std::move(leaves)};
}

VertexSet Star::vertices() const {
  VertexSet out = leaves;
  out.insert(std::lower_bound(out.begin(), out.end(), center), center);
  return out;
}

bool Star::contains(Vertex v) const {
  return v == center || std::binary_search(leaves.begin(), leaves.end(), v);
}

bool is_valid_star(const Graph& g, const Star& s) {
  if (s.center < 0 || s.center >= g.n() || s.leaves.empty()) return false;
  if (!std::is_sorted(s.leaves.begin(), s.leaves.end())) return false;
  if (std::adjacent_find(s.leaves.begin(), s.leaves.end()) != s.leaves.end()) return false;
  for (Vertex l : s.leaves) {
    if (l < 0 || l >= g.n() || l == s.center || !g.has_edge(s.center, l)) return false;
  }
  return true;
}

StarFamily::StarFamily(int arity, std::vector<Star> stars) : arity_(arity), stars_(std::move(stars)) {
  for (const Star& s : stars_) {
    if (s.arity() != arity_) throw InputError("star arity does not match the family");
  }
}

void StarFamily::push_back(Star s) {
  if (s.arity() != arity_) throw InputError("star arity does not match the family");
  stars_.push_back(std::move(s));
}

void StarFamily::append(const StarFamily& other) {
  if (other.arity_ != arity_) throw InputError("star arity does not match the family");
  stars_.insert(stars_.end(), other.stars_.begin(), other.stars_.end());
}

void StarFamily::sort() { std::sort(stars_.begin(), stars_.end()); }

VertexSet StarFamily::vertices() const {
  std::vector<Vertex> all;
  for (const Star& s : stars_) {
    all.push_back(s.center);
    all.insert(all.end(), s.leaves.begin(), s.leaves.end());
  }
  return make_vertex_set(std::move(all));
}

int StarFamily::multiplicity(Vertex v) const {
  return static_cast<int>(std::count_if(stars_.begin(), stars_.end(), [v](const Star& s) { return s.contains(v); }));
}

bool StarFamily::is_vertex_disjoint() const {
  std::size_t total = 0;
  for (const Star& s : stars_) total += s.leaves.size() + 1;
  return vertices().size() == total;
}

void validate_family(const Graph& g, const StarFamily& f) {
  for (const Star& s : f) {
    if (s.arity() != f.arity()) throw InputError("star arity differs from family arity");
    if (!is_valid_star(g, s)) throw InputError("star centered at " + std::to_string(s.center) + " is not a subgraph");
  }
  if (!f.is_vertex_disjoint()) throw InputError("star family is not vertex-disjoint");
}

std::vector<Star> enumerate_stars(const Graph& g, int arity) {
  if (arity < 1) throw InputError("star arity must be at least 1");
  std::vector<Star> out;
  for (Vertex c = 0; c < g.n(); ++c) {
    auto nb = g.neighbors(c);
    const int d = static_cast<int>(nb.size());
    if (d < arity) continue;
    // Lexicographic m-combinations of the sorted neighbor list.
    std::vector<int> idx(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i) idx[i] = i;
    while (true) {
      Star s{c, {}};
      for (int i : idx) s.leaves.push_back(nb[i]);
      out.push_back(std::move(s));
      int i = arity - 1;
      while (i >= 0 && idx[i] == d - arity + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < arity; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

bool is_structure_cut(const Graph& g, const StarFamily& f) {
  validate_family(g, f);
  const VertexSet removed = f.vertices();
  const int rest = g.n() - static_cast<int>(removed.size());
  if (rest == 0) return false;
  if (rest == 1) return true;
  return components_without(g, removed).size() >= 2;
}

namespace {

// Branch-and-bound over the lowest undecided vertex: either it is the
// member of some star inside the free set, or it stays uncovered.
class ExactPacking {
 public:
  ExactPacking(const Graph& g, int arity) : arity_(arity) {
    for (const Star& s : enumerate_stars(g, arity)) {
      std::uint32_t mask = 0;
      for (Vertex v : s.vertices()) mask |= 1u << v;
      stars_.push_back({s, mask});
    }
    full_ = g.n() == 32 ? ~0u : ((1u << g.n()) - 1);
  }

  std::vector<Star> run() {
    search(full_);
    std::vector<Star> out;
    for (int i : best_) out.push_back(stars_[i].star);
    return out;
  }

 private:
  struct Entry {
    Star star;
    std::uint32_t mask;
  };

  void search(std::uint32_t free) {
    const int bound = static_cast<int>(chosen_.size()) + std::popcount(free) / (arity_ + 1);
    if (bound <= best_size_) return;
    if (free == 0) {
      best_size_ = static_cast<int>(chosen_.size());
      best_ = chosen_;
      return;
    }
    const std::uint32_t low = free & (~free + 1);
    for (int i = 0; i < static_cast<int>(stars_.size()); ++i) {
      const std::uint32_t m = stars_[i].mask;
      if ((m & low) && (m & free) == m) {
        chosen_.push_back(i);
        search(free & ~m);
        chosen_.pop_back();
      }
    }
    search(free & ~low);
  }

  int arity_;
  std::vector<Entry> stars_;
  std::uint32_t full_ = 0;
  std::vector<int> chosen_, best_;
  int best_size_ = -1;
};

}  // namespace

StarFamily maximal_star_packing(const Graph& g, const VertexSet& forbidden, int arity) {
  if (arity < 1) throw InputError("star arity must be at least 1");
  for (Vertex v : forbidden) g.check_vertex(v);
  const VertexSet free = complement(g, forbidden);
  StarFamily out(arity);

  if (static_cast<int>(free.size()) <= kExactPackingLimit) {
    Subgraph sub = induced_subgraph(g, free);
    for (const Star& s : ExactPacking(sub.graph, arity).run()) {
      std::vector<Vertex> leaves;
      for (Vertex l : s.leaves) leaves.push_back(sub.to_parent[l]);
      out.push_back(Star::make(sub.to_parent[s.center], std::move(leaves)));
    }
    out.sort();
    return out;
  }

  std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
  for (Vertex v : forbidden) used[v] = true;
  for (const Star& s : enumerate_stars(g, arity)) {
    VertexSet vs = s.vertices();
    if (std::none_of(vs.begin(), vs.end(), [&](Vertex v) { return used[v]; })) {
      for (Vertex v : vs) used[v] = true;
      out.push_back(s);
    }
  }
  return out;
}

}  // namespace starcut
