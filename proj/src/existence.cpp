#include "starcut/existence.hpp"

#include <algorithm>
#include <sstream>

#include "starcut/connectivity.hpp"
#include "starcut/errors.hpp"
#include "starcut/struct_solver.hpp"

namespace starcut {

std::string_view to_string(Verdict v) { return v == Verdict::Exists ? "Exists" : "NotExists"; }

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::DiameterRule: return "DiameterRule";
    case Rule::Mod1Greedy: return "Mod1Greedy";
    case Rule::Mod2Iff: return "Mod2Iff";
    case Rule::Mod0Condition: return "Mod0Condition";
    case Rule::ExhaustiveSearch: return "ExhaustiveSearch";
  }
  return "?";
}

namespace {

void require_connected(const Graph& g, int min_n) {
  if (g.n() < min_n) throw PreconditionError("graph needs at least " + std::to_string(min_n) + " vertices");
  if (!is_connected(g)) throw InputError("graph must be connected");
}

bool is_c5(const Graph& g) {
  if (g.n() != 5 || g.m() != 5 || !is_connected(g)) return false;
  for (Vertex v = 0; v < 5; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

}  // namespace

StarFamily diameter_cut(const Graph& g) {
  require_connected(g, 2);
  const int diam = diameter(g);
  if (diam < 4) throw PreconditionError("diameter_cut requires diameter >= 4 (got " + std::to_string(diam) + ")");

  Vertex u = -1, v = -1;
  for (Vertex a = 0; a < g.n() && u < 0; ++a) {
    auto dist = distances_from(g, a);
    for (Vertex b = a + 1; b < g.n(); ++b) {
      if (dist[b] == diam) {
        u = a;
        v = b;
        break;
      }
    }
  }

  const VertexSet cut = min_vertex_cut(g, u, v);
  const std::vector<Path> paths = internally_disjoint_paths(g, u, v);
  if (paths.size() != cut.size()) throw InvariantViolation("Menger equality failed in diameter_cut");

  StarFamily family(2);
  for (const Path& p : paths) {
    std::vector<Vertex> interior(p.vertices.begin() + 1, p.vertices.end() - 1);
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < interior.size(); ++i) {
      if (contains(cut, interior[i])) hits.push_back(i);
    }
    if (hits.size() != 1) throw InvariantViolation("path does not meet the separating set exactly once");
    if (interior.size() < 3) throw InvariantViolation("path interior shorter than a K_{1,2}");
    const std::size_t start = hits[0] >= 2 ? hits[0] - 2 : 0;
    family.push_back(Star::make(interior[start + 1], {interior[start], interior[start + 2]}));
  }
  family.sort();
  if (!is_structure_cut(g, family)) throw InvariantViolation("diameter_cut produced a non-cut");
  return family;
}

StarFamily greedy_cut_mod1(const Graph& g) {
  require_connected(g, 4);
  if (g.n() % 3 != 1) throw PreconditionError("greedy_cut_mod1 requires n = 1 (mod 3)");

  StarFamily family(2);
  std::vector<bool> removed(static_cast<std::size_t>(g.n()), false);
  VertexSet gone;
  while (true) {
    bool picked = false;
    for (Vertex c = 0; c < g.n() && !picked; ++c) {
      if (removed[c]) continue;
      std::vector<Vertex> live;
      for (Vertex w : g.neighbors(c)) {
        if (!removed[w]) live.push_back(w);
        if (live.size() == 2) break;
      }
      if (live.size() < 2) continue;
      Star s = Star::make(c, live);
      for (Vertex x : s.vertices()) removed[x] = true;
      family.push_back(std::move(s));
      picked = true;
    }
    if (!picked) throw InvariantViolation("connected remainder without a K_{1,2}");
    gone = family.vertices();
    const int rest = g.n() - static_cast<int>(gone.size());
    if (rest == 1 || (rest > 1 && components_without(g, gone).size() >= 2)) break;
    if (rest == 0) throw InvariantViolation("greedy removal exhausted the graph");
  }
  return family;
}

bool exists_mod2(const Graph& g) {
  require_connected(g, 5);
  if (g.n() % 3 != 2) throw PreconditionError("exists_mod2 requires n = 2 (mod 3)");
  return !is_c5(g) && !g.is_complete();
}

std::optional<Triple> mod0_condition(const Graph& g) {
  const int n = g.n();
  for (Vertex u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    auto clear_of_nu = [&](Vertex x) {
      if (std::binary_search(nu.begin(), nu.end(), x)) return false;
      for (Vertex y : g.neighbors(x)) {
        if (std::binary_search(nu.begin(), nu.end(), y)) return false;
      }
      return true;
    };
    for (Vertex v = 0; v < n; ++v) {
      if (v == u || !clear_of_nu(v)) continue;
      for (Vertex w = v + 1; w < n; ++w) {
        if (w == u || !clear_of_nu(w)) continue;
        return Triple{u, v, w};
      }
    }
  }
  return std::nullopt;
}

Certificate decide_existence(const Graph& g) {
  require_connected(g, 4);
  const int n = g.n();

  if (diameter(g) >= 4) {
    return Certificate{Verdict::Exists, diameter_cut(g), Rule::DiameterRule, "diameter >= 4"};
  }
  if (n % 3 == 1) {
    return Certificate{Verdict::Exists, greedy_cut_mod1(g), Rule::Mod1Greedy, "n = 1 (mod 3)"};
  }

  auto from_solver = [&](Rule rule, std::string detail) {
    StructResult r = struct_connectivity_exact(g);
    if (r.found()) return Certificate{Verdict::Exists, std::move(r.witness), rule, std::move(detail)};
    return Certificate{Verdict::NotExists, std::nullopt, Rule::ExhaustiveSearch,
                       detail + "; exhaustive search found no cut, contradicting " + std::string(to_string(rule))};
  };

  if (n % 3 == 2) {
    if (!exists_mod2(g)) {
      return Certificate{Verdict::NotExists, std::nullopt, Rule::Mod2Iff, g.is_complete() ? "complete graph" : "5-cycle"};
    }
    return from_solver(Rule::Mod2Iff, "n = 2 (mod 3), neither C5 nor complete");
  }

  if (auto t = mod0_condition(g)) {
    std::ostringstream d;
    d << "u=" << t->u << " v=" << t->v << " w=" << t->w;
    return from_solver(Rule::Mod0Condition, d.str());
  }

  StructResult r = struct_connectivity_exact(g);
  if (r.found()) return Certificate{Verdict::Exists, std::move(r.witness), Rule::ExhaustiveSearch, "exact solver"};
  return Certificate{Verdict::NotExists, std::nullopt, Rule::ExhaustiveSearch, "exact solver"};
}

}  // namespace starcut
