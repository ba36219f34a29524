#pragma once

#include <compare>
#include <vector>

#include "starcut/graph.hpp"

namespace starcut {

/// One copy of K_{1,m}: a center and m distinct leaves kept in ascending
/// order. Stars compare lexicographically by (center, leaves).
struct Star {
  Vertex center = -1;
  std::vector<Vertex> leaves;

  /// Sorts the leaves; throws InputError on repeated or central leaves.
  static Star make(Vertex center, std::vector<Vertex> leaves);

  int arity() const { return static_cast<int>(leaves.size()); }
  VertexSet vertices() const;
  bool contains(Vertex v) const;

  auto operator<=>(const Star&) const = default;
  bool operator==(const Star&) const = default;
};

/// True when every leaf is adjacent to the center in g.
bool is_valid_star(const Graph& g, const Star& s);

/// An ordered collection of stars of a common arity.
class StarFamily {
 public:
  explicit StarFamily(int arity = 2) : arity_(arity) {}
  StarFamily(int arity, std::vector<Star> stars);

  int arity() const { return arity_; }
  const std::vector<Star>& stars() const { return stars_; }
  std::size_t size() const { return stars_.size(); }
  bool empty() const { return stars_.empty(); }
  const Star& operator[](std::size_t i) const { return stars_[i]; }
  auto begin() const { return stars_.begin(); }
  auto end() const { return stars_.end(); }

  void push_back(Star s);
  void append(const StarFamily& other);
  void sort();

  /// V(F): union of the stars' vertex sets.
  VertexSet vertices() const;
  /// d_F(v): number of stars containing v.
  int multiplicity(Vertex v) const;
  bool is_vertex_disjoint() const;

  bool operator==(const StarFamily&) const = default;

 private:
  int arity_;
  std::vector<Star> stars_;
};

/// Throws InputError unless every star is valid in g, has the family's
/// arity, and the family is vertex-disjoint.
void validate_family(const Graph& g, const StarFamily& f);

/// All canonical stars of the given arity, sorted by (center, leaves).
std::vector<Star> enumerate_stars(const Graph& g, int arity);

/// True iff G - V(F) is disconnected or a single vertex. The empty remainder
/// does not count. Throws InputError for invalid or overlapping families.
bool is_structure_cut(const Graph& g, const StarFamily& f);

/// At or below this many available vertices the packing is maximum rather
/// than merely maximal.
inline constexpr int kExactPackingLimit = 12;

/// Vertex-disjoint star family avoiding `forbidden`, inclusion-maximal; of
/// maximum cardinality when at most kExactPackingLimit vertices are free.
StarFamily maximal_star_packing(const Graph& g, const VertexSet& forbidden, int arity);

}  // namespace starcut
