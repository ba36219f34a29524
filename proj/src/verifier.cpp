#include "starcut/verifier.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "starcut/connectivity.hpp"
#include "starcut/errors.hpp"
#include "starcut/existence.hpp"
#include "starcut/graph_io.hpp"
#include "starcut/struct_solver.hpp"

namespace starcut {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

bool VerificationRecord::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second.status == CheckStatus::Fail; });
}

const CheckSet& all_checks() {
  static const CheckSet set{
      std::string(checks::kBounds),          std::string(checks::kDiameterRule),   std::string(checks::kMod1Greedy),
      std::string(checks::kMod2Iff),         std::string(checks::kMod0Sufficiency), std::string(checks::kTripleDistance),
      std::string(checks::kExistenceOracle), std::string(checks::kSolverModes),    std::string(checks::kCovering),
      std::string(checks::kRefinement)};
  return set;
}

CheckSet parse_check_list(std::string_view list) {
  if (list.empty() || list == "all") return all_checks();
  CheckSet out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string name(list.substr(start, end - start));
    if (!name.empty()) {
      if (!all_checks().contains(name)) throw InputError("unknown check '" + name + "'");
      out.insert(name);
    }
    start = end + 1;
  }
  return out;
}

namespace {

using Visitor = std::function<bool(const std::string&, StarFamily)>;

StarFamily without_star(const StarFamily& f, std::size_t drop) {
  StarFamily out(f.arity());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i != drop) out.push_back(f[i]);
  }
  return out;
}

StarFamily replaced(const StarFamily& f, std::size_t drop, std::initializer_list<Star> add) {
  StarFamily out = without_star(f, drop);
  for (const Star& s : add) out.push_back(s);
  return out;
}

VertexSet neighbors_in(const Graph& g, Vertex v, const VertexSet& within) {
  auto nb = g.neighbors(v);
  return set_intersection(VertexSet(nb.begin(), nb.end()), within);
}

// Enumerates the rewrites in case order; stops as soon as `visit` says so.
void rewrites(const Graph& g, const StarFamily& f, const VertexSet& cut, const Sides& sides, const Visitor& visit) {
  const VertexSet h = complement(g, f.vertices());
  const bool near_is_s1 = !h.empty() && contains(sides.s1, h.front());
  const VertexSet& far = near_is_s1 ? sides.s2 : sides.s1;
  const VertexSet& near = near_is_s1 ? sides.s1 : sides.s2;

  struct Classified {
    std::size_t index;
    VertexSet in_cut, in_far, in_near;
  };
  std::vector<Classified> fa, fb, fc;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const VertexSet vs = f[i].vertices();
    Classified c{i, set_intersection(vs, cut), set_intersection(vs, far), set_intersection(vs, near)};
    if (c.in_cut.size() == 2 && c.in_far.size() == 1) fa.push_back(c);
    if (c.in_cut.size() == 1 && c.in_far.size() == 2) fb.push_back(c);
    if (c.in_cut.size() == 1 && c.in_far.size() == 1 && c.in_near.size() == 1) fc.push_back(c);
  }

  // Case 1: two cut vertices w1, w2 and one far vertex.
  if (!fa.empty() && h.size() >= 2) {
    const Subgraph hg = induced_subgraph(g, h);
    if (is_connected(hg.graph) && vertex_connectivity(hg.graph) <= 1) {
      for (const Star& s : enumerate_stars(hg.graph, 2)) {
        Star lifted = Star::make(hg.to_parent[s.center], {hg.to_parent[s.leaves[0]], hg.to_parent[s.leaves[1]]});
        StarFamily cand = f;
        cand.push_back(lifted);
        if (is_structure_cut(g, cand) && visit("case1:extend", cand)) return;
      }
    }
  }
  for (const Classified& c : fa) {
    const Vertex w1 = c.in_cut[0], w2 = c.in_cut[1], a = c.in_far[0];
    const VertexSet n1 = neighbors_in(g, w1, h), n2 = neighbors_in(g, w2, h);
    const VertexSet both = set_union(n1, n2);
    if (both.empty()) {
      if (visit("case1:drop", without_star(f, c.index))) return;
      continue;
    }
    if (g.has_edge(w1, w2)) {
      for (Vertex u : both) {
        Star s = g.has_edge(w1, u) ? Star::make(w1, {u, w2}) : Star::make(w2, {u, w1});
        if (visit("case1.1:reanchor", replaced(f, c.index, {s}))) return;
      }
      continue;
    }
    if (n2.empty()) {
      for (Vertex u : n1) {
        if (visit("case1.2:one-sided", replaced(f, c.index, {Star::make(w1, {u, a})}))) return;
      }
      continue;
    }
    if (n1.empty()) {
      for (Vertex u : n2) {
        if (visit("case1.2:one-sided", replaced(f, c.index, {Star::make(w2, {u, a})}))) return;
      }
      continue;
    }
    const VertexSet common = set_intersection(n1, n2);
    for (Vertex u : common) {
      if (visit("case1.2:common", replaced(f, c.index, {Star::make(u, {w1, w2})}))) return;
    }
    if (!common.empty()) continue;
    for (Vertex u1 : n1) {
      for (Vertex u2 : n2) {
        for (Vertex v1 : neighbors_in(g, u1, h)) {
          if (v1 == u2) continue;
          for (Vertex v2 : neighbors_in(g, u2, h)) {
            if (v2 == u1 || v2 == v1) continue;
            if (visit("case1.2:split", replaced(f, c.index, {Star::make(u1, {w1, v1}), Star::make(u2, {w2, v2})}))) return;
          }
        }
      }
    }
  }

  // Case 2: one cut vertex w and two far vertices.
  for (const Classified& c : fb) {
    const Vertex w = c.in_cut[0];
    const VertexSet nw = neighbors_in(g, w, h);
    if (nw.empty()) {
      if (visit("case2:drop", without_star(f, c.index))) return;
      continue;
    }
    for (Vertex keep : c.in_far) {
      if (!g.has_edge(w, keep)) continue;
      for (Vertex u : nw) {
        if (visit("case2:reanchor", replaced(f, c.index, {Star::make(w, {keep, u})}))) return;
      }
    }
  }

  // Case 3: cut vertex w, far vertex u, near vertex f.
  for (const Classified& c : fc) {
    const Vertex w = c.in_cut[0], x = c.in_near[0];
    const VertexSet nw = neighbors_in(g, w, h), nx = neighbors_in(g, x, h);
    if (nw.empty() && nx.empty()) {
      if (visit("case3:drop", without_star(f, c.index))) return;
      continue;
    }
    if (!g.has_edge(w, x)) continue;
    if (nw.empty()) {
      for (Vertex y : nx) {
        if (visit("case3:near-anchor", replaced(f, c.index, {Star::make(x, {w, y})}))) return;
      }
    } else {
      for (Vertex y : nw) {
        if (visit("case3:cut-anchor", replaced(f, c.index, {Star::make(w, {x, y})}))) return;
      }
    }
  }
}

bool acceptable(const Graph& g, const StarFamily& f, std::size_t limit) {
  if (f.size() > limit) return false;
  try {
    return is_structure_cut(g, f);
  } catch (const InputError&) {
    return false;
  }
}

}  // namespace

RefineResult refine_to_structure_cut(const Graph& g, const StarFamily& f, const VertexSet& cut, const Sides& sides) {
  try {
    validate_family(g, f);
  } catch (const InputError& e) {
    throw PreconditionError(std::string("refinement input: ") + e.what());
  }
  const std::size_t k = cut.size();
  if (f.size() > k) throw PreconditionError("refinement input has more stars than cut vertices");
  if (!set_difference(cut, f.vertices()).empty()) throw PreconditionError("refinement input does not cover the cut");

  if (is_structure_cut(g, f)) return RefineResult{f, false, 0, "unchanged"};

  StarFamily current = f;
  for (int round = 1; round <= g.n(); ++round) {
    std::optional<std::pair<std::string, StarFamily>> first;
    std::optional<RefineResult> done;
    rewrites(g, current, cut, sides, [&](const std::string& name, StarFamily cand) {
      if (acceptable(g, cand, k)) {
        done = RefineResult{std::move(cand), false, round, name};
        return true;
      }
      if (!first && cand.size() <= k) first.emplace(name, std::move(cand));
      return false;
    });
    if (done) return *done;
    if (!first) break;
    try {
      validate_family(g, first->second);
    } catch (const InputError&) {
      break;
    }
    current = std::move(first->second);
  }

  StructResult exact = struct_connectivity_exact(g);
  if (!exact.found()) throw PreconditionError("graph has no K_{1,2}-structure-cut");
  if (static_cast<std::size_t>(*exact.value) > k) {
    throw InvariantViolation("structure connectivity exceeds vertex connectivity");
  }
  return RefineResult{std::move(*exact.witness), true, g.n(), "exact-solver"};
}

namespace {

std::string describe(const Graph& g, const StarFamily& f) {
  std::ostringstream out;
  for (const Star& s : f) {
    out << s.center << ':';
    for (Vertex l : s.leaves) out << l << (l == s.leaves.back() ? "" : ",");
    out << ' ';
  }
  (void)g;
  return out.str();
}

CheckOutcome pass(std::string reason = {}) { return {CheckStatus::Pass, std::move(reason)}; }
CheckOutcome fail(std::string reason) { return {CheckStatus::Fail, std::move(reason)}; }
CheckOutcome skip(std::string reason) { return {CheckStatus::Skip, std::move(reason)}; }

bool validates(const Graph& g, const StarFamily& f) {
  try {
    return is_structure_cut(g, f);
  } catch (const InputError&) {
    return false;
  }
}

}  // namespace

VerificationRecord check_bounds(const Graph& g, const CheckSet& wanted) {
  VerificationRecord rec;
  rec.graph_id = to_graph6(g);
  rec.n = g.n();
  rec.m = g.m();

  auto want = [&](std::string_view name) { return wanted.contains(name); };
  auto set = [&](std::string_view name, CheckOutcome o) {
    if (want(name)) rec.checks[std::string(name)] = std::move(o);
  };
  // Runs a check body, turning escaped exceptions into failures.
  auto run = [&](std::string_view name, const std::function<CheckOutcome()>& body) {
    if (!want(name)) return;
    try {
      set(name, body());
    } catch (const std::exception& e) {
      set(name, fail(std::string("exception: ") + e.what()));
    }
  };

  if (g.n() < 4 || !is_connected(g)) {
    const std::string why = g.n() < 4 ? "n < 4" : "disconnected";
    for (const std::string& name : wanted) rec.checks[name] = skip(why);
    if (g.n() >= 2) rec.kappa = vertex_connectivity(g);
    return rec;
  }

  const int n = g.n();
  const int kappa = vertex_connectivity(g);
  rec.kappa = kappa;
  const StructResult exact = struct_connectivity_exact(g, 2, false);
  if (exact.found()) rec.struct_kappa = exact.value;

  run(checks::kBounds, [&] {
    if (!exact.found()) return skip("NoCutExists");
    const int s = *exact.value;
    std::string detail = "kappa=" + std::to_string(kappa) + " struct=" + std::to_string(s);
    return (3 * s >= kappa && s <= kappa) ? pass(detail) : fail(detail);
  });

  run(checks::kDiameterRule, [&] {
    const int diam = diameter(g);
    if (diam < 4) return skip("diameter < 4");
    StarFamily f = diameter_cut(g);
    return validates(g, f) ? pass() : fail("diameter cut does not validate: " + describe(g, f));
  });

  run(checks::kMod1Greedy, [&] {
    if (n % 3 != 1) return skip("n != 1 (mod 3)");
    StarFamily f = greedy_cut_mod1(g);
    if (!validates(g, f)) return fail("greedy family does not validate: " + describe(g, f));
    return exact.found() ? pass() : fail("exact solver found no cut");
  });

  run(checks::kMod2Iff, [&] {
    if (n % 3 != 2) return skip("n != 2 (mod 3)");
    const bool predicted = exists_mod2(g);
    if (predicted == exact.found()) return pass();
    return fail(predicted ? "predicted a cut, none exists" : "predicted no cut, one exists");
  });

  const std::optional<Triple> triple = n % 3 == 0 ? mod0_condition(g) : std::nullopt;
  run(checks::kMod0Sufficiency, [&] {
    if (n % 3 != 0) return skip("n != 0 (mod 3)");
    if (!triple) return skip("condition not satisfied");
    return exact.found() ? pass() : fail("condition holds but no cut exists");
  });

  run(checks::kTripleDistance, [&] {
    if (!triple) return skip(n % 3 != 0 ? "n != 0 (mod 3)" : "condition not satisfied");
    const auto dist = distances_from(g, triple->u);
    std::string detail = "u=" + std::to_string(triple->u) + " v=" + std::to_string(triple->v) + " w=" + std::to_string(triple->w);
    return (dist[triple->v] >= 3 && dist[triple->w] >= 3) ? pass(detail) : fail(detail);
  });

  run(checks::kExistenceOracle, [&] {
    Certificate cert = decide_existence(g);
    rec.certificate_rule = std::string(to_string(cert.rule));
    const bool exists = cert.verdict == Verdict::Exists;
    if (exists != exact.found()) return fail("certificate verdict disagrees with exact solver");
    if (exists && !(cert.witness && validates(g, *cert.witness))) return fail("certificate witness does not validate");
    return pass(rec.certificate_rule);
  });
  if (rec.certificate_rule.empty() && want(checks::kExistenceOracle) == false) {
    try {
      rec.certificate_rule = std::string(to_string(decide_existence(g).rule));
    } catch (const std::exception&) {
    }
  }

  run(checks::kSolverModes, [&] {
    const StructResult pure = struct_connectivity_exact(g, 2, true);
    if (pure.status != exact.status || pure.value != exact.value) return fail("pure and pruned solver disagree");
    if (pure.found() && !validates(g, *pure.witness)) return fail("pure witness does not validate");
    if (pure.found() && *pure.value > 1 && find_structure_cut_of_size(g, 2, *pure.value - 1)) {
      return fail("a smaller structure-cut exists");
    }
    return pass();
  });

  std::optional<CoverResult> cover;
  std::string cover_error;
  if (!g.is_complete() && (want(checks::kCovering) || want(checks::kRefinement))) {
    try {
      cover = cover_min_cut_detailed(g);
    } catch (const std::exception& e) {
      cover_error = e.what();
    }
  }

  run(checks::kCovering, [&] {
    if (g.is_complete()) return skip("complete graph has no vertex cut");
    if (!cover) return fail("covering failed: " + cover_error);
    const StarFamily& f = cover->family;
    if (!f.is_vertex_disjoint()) return fail("covering not vertex-disjoint");
    if (!set_difference(cover->cut, f.vertices()).empty()) return fail("covering misses a cut vertex");
    if (static_cast<int>(f.size()) > kappa) return fail("covering larger than kappa");
    return pass(std::to_string(f.size()) + " stars for |X|=" + std::to_string(cover->cut.size()));
  });

  run(checks::kRefinement, [&] {
    if (!exact.found()) return skip("NoCutExists");
    if (g.is_complete()) {
      // No separating cut to refine; the solver witness stands in.
      rec.refinement_fallback = true;
      return validates(g, *exact.witness) && *exact.value <= kappa ? pass("complete graph: exact-solver") : fail("exact witness invalid");
    }
    if (!cover) return fail("covering failed: " + cover_error);
    RefineResult r = refine_to_structure_cut(g, cover->family, cover->cut, cover->sides);
    rec.refinement_fallback = r.fallback;
    if (!validates(g, r.family)) return fail("refined family does not validate");
    if (static_cast<int>(r.family.size()) > kappa) return fail("refined family larger than kappa");
    return pass(r.applied);
  });

  return rec;
}

std::vector<VerificationRecord> find_ratio_witnesses(std::span<const VerificationRecord> records) {
  std::vector<VerificationRecord> out;
  for (const VerificationRecord& r : records) {
    if (r.struct_kappa && r.kappa && 3 * *r.struct_kappa == *r.kappa) out.push_back(r);
  }
  std::sort(out.begin(), out.end(), [](const VerificationRecord& a, const VerificationRecord& b) {
    return std::tie(a.n, a.graph_id) < std::tie(b.n, b.graph_id);
  });
  return out;
}

std::vector<VerificationRecord> find_ratio_witnesses(std::span<const Graph> corpus) {
  std::vector<VerificationRecord> records;
  const CheckSet only{std::string(checks::kBounds)};
  for (const Graph& g : corpus) records.push_back(check_bounds(g, only));
  return find_ratio_witnesses(std::span<const VerificationRecord>(records));
}

VerificationRecord check_open_problem(const Graph& g, int arity) {
  if (arity < 2) throw InputError("open-problem exploration needs arity >= 2");
  VerificationRecord rec;
  rec.graph_id = to_graph6(g);
  rec.n = g.n();
  rec.m = g.m();
  rec.arity = arity;
  const std::string name(checks::kOpenProblem);
  if (g.n() < 4 || !is_connected(g)) {
    rec.checks[name] = skip(g.n() < 4 ? "n < 4" : "disconnected");
    return rec;
  }
  const int kappa = vertex_connectivity(g);
  rec.kappa = kappa;
  const StructResult exact = struct_connectivity_exact(g, arity, false);
  if (!exact.found()) {
    rec.checks[name] = skip("NoCutExists");
    return rec;
  }
  const int s = *exact.value;
  rec.struct_kappa = s;
  const int divisor = arity == 2 ? 3 : arity;
  std::string detail = "kappa=" + std::to_string(kappa) + " struct=" + std::to_string(s) + " lower=kappa/" + std::to_string(divisor);
  rec.checks[name] = (divisor * s >= kappa && s <= kappa) ? pass(detail) : fail("COUNTEREXAMPLE " + detail);
  return rec;
}

}  // namespace starcut
