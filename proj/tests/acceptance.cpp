// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "starcut/canonical.hpp"
#include "starcut/connectivity.hpp"
#include "starcut/corpus.hpp"
#include "starcut/covering.hpp"
#include "starcut/errors.hpp"
#include "starcut/existence.hpp"
#include "starcut/families.hpp"
#include "starcut/graph_io.hpp"
#include "starcut/struct_solver.hpp"
#include "starcut/verifier.hpp"

using namespace starcut;
using Clock = std::chrono::steady_clock;

namespace {

// Wall-clock budgets in seconds.
constexpr double kBudgetMod2SmallN = 1.0;
constexpr double kBudgetMod2LargeN = 600.0;
constexpr double kBudgetMod1 = 30.0;
constexpr double kBudgetMod0 = 10.0;
constexpr double kBudgetCycles = 1.0;

constexpr int kMinN = 4;
constexpr int kMaxN = 8;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const std::vector<Graph>& corpus(int n) {
  static std::vector<std::vector<Graph>> cache(kMaxN + 1);
  if (cache[n].empty()) cache[n] = enumerate_connected(n);
  return cache[n];
}

bool validates(const Graph& g, const StarFamily& f) {
  try {
    return is_structure_cut(g, f);
  } catch (const InputError&) {
    return false;
  }
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail_with(const std::string& why) {
    if (pass) detail << why << "; ";
    pass = false;
  }
};

Outcome criterion1() {
  Outcome o;
  const std::set<std::string> expected[] = {{canonical_graph6(cycle_graph(5)), canonical_graph6(complete_graph(5))},
                                            {canonical_graph6(complete_graph(8))}};
  const int sizes[] = {5, 8};
  const double budgets[] = {kBudgetMod2SmallN, kBudgetMod2LargeN};
  for (int i = 0; i < 2; ++i) {
    const auto start = Clock::now();
    std::set<std::string> none;
    const auto& graphs = enumerate_connected(sizes[i]);
    for (const Graph& g : graphs) {
      if (!struct_connectivity_exact(g).found()) none.insert(to_graph6(g));
    }
    const double t = seconds_since(start);
    o.detail << "n=" << sizes[i] << ": " << graphs.size() << " graphs, " << none.size() << " without cut, " << t << "s; ";
    if (none != expected[i]) o.fail_with("unexpected NoCutExists set at n=" + std::to_string(sizes[i]));
    if (t > budgets[i]) o.fail_with("over time budget at n=" + std::to_string(sizes[i]));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto start = Clock::now();
  long graphs = 0;
  for (int n : {4, 7}) {
    for (const Graph& g : corpus(n)) {
      ++graphs;
      if (!struct_connectivity_exact(g).found()) o.fail_with("no cut for " + to_graph6(g));
      try {
        if (!validates(g, greedy_cut_mod1(g))) o.fail_with("greedy witness invalid for " + to_graph6(g));
      } catch (const std::exception& e) {
        o.fail_with("greedy threw for " + to_graph6(g) + ": " + e.what());
      }
    }
  }
  const double t = seconds_since(start);
  o.detail << graphs << " graphs, " << t << "s";
  if (t > kBudgetMod1) o.fail_with("over time budget");
  return o;
}

Outcome criterion3() {
  Outcome o;
  long long_graphs = 0;
  for (int n = kMinN; n <= kMaxN; ++n) {
    for (const Graph& g : corpus(n)) {
      if (diameter(g) < 4) continue;
      ++long_graphs;
      try {
        if (!validates(g, diameter_cut(g))) o.fail_with("diameter cut invalid for " + to_graph6(g));
      } catch (const std::exception& e) {
        o.fail_with("diameter_cut threw for " + to_graph6(g) + ": " + e.what());
      }
    }
  }
  const Graph c6 = cycle_graph(6);
  const bool c6_ok = diameter(c6) == 3 && !struct_connectivity_exact(c6).found();
  if (!c6_ok) o.fail_with("C6 check");
  o.detail << long_graphs << " graphs with diameter >= 4; C6 diameter 3 and no cut: " << (c6_ok ? "yes" : "no");
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto start = Clock::now();
  long triples = 0;
  std::string near_example;
  for (const Graph& g : corpus(6)) {
    const StructResult r = struct_connectivity_exact(g);
    if (auto t = mod0_condition(g)) {
      ++triples;
      if (!r.found()) o.fail_with("condition holds without a cut for " + to_graph6(g));
      if (distance(g, t->u, t->v) < 3 || distance(g, t->u, t->w) < 3) o.fail_with("distance property fails for " + to_graph6(g));
    }
    if (near_example.empty() && r.found() && diameter(g) <= 2) near_example = to_graph6(g);
  }
  const double t = seconds_since(start);
  if (near_example.empty()) o.fail_with("no diameter-2 graph with a structure-cut");
  o.detail << triples << " graphs satisfy the condition; diameter<=2 example with a cut: " << near_example << "; " << t << "s";
  if (t > kBudgetMod0) o.fail_with("over time budget");
  return o;
}

Outcome criterion5() {
  Outcome o;
  long checked = 0;
  for (int n = kMinN; n <= kMaxN; ++n) {
    for (const Graph& g : corpus(n)) {
      const StructResult r = struct_connectivity_exact(g);
      if (!r.found()) continue;
      ++checked;
      const int kappa = vertex_connectivity(g);
      if (3 * *r.value < kappa || *r.value > kappa) o.fail_with("bounds fail for " + to_graph6(g));
    }
  }
  o.detail << checked << " graphs with a structure-cut";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto start = Clock::now();
  for (int n = 7; n <= 12; ++n) {
    const Graph c = cycle_graph(n);
    const StructResult r = struct_connectivity_exact(c);
    if (!r.found() || *r.value != 2 || vertex_connectivity(c) != 2) o.fail_with("C" + std::to_string(n));
  }
  const double t = seconds_since(start);
  o.detail << "C7..C12 all equal 2, " << t << "s";
  if (t > kBudgetCycles) o.fail_with("over time budget");
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Graph b5 = b5_graph();
  const int kappa = vertex_connectivity(b5);
  const StructResult r = struct_connectivity_exact(b5);
  if (kappa != 3 || !r.found() || *r.value != 1 || 3 * *r.value != kappa) o.fail_with("B5 values");
  std::vector<Graph> small;
  for (int n = kMinN; n <= 6; ++n) small.insert(small.end(), corpus(n).begin(), corpus(n).end());
  const auto witnesses = find_ratio_witnesses(std::span<const Graph>(small));
  const std::string id = canonical_graph6(b5);
  bool found = false;
  for (const auto& w : witnesses) found = found || w.graph_id == id;
  if (!found) o.fail_with("B5 not among ratio witnesses");
  o.detail << "kappa=" << kappa << " struct=" << (r.value ? *r.value : -1) << "; " << witnesses.size()
           << " ratio witnesses for n<=6";
  return o;
}

Outcome criterion8() {
  Outcome o;
  long checked = 0, violations = 0;
  for (int n = kMinN; n <= kMaxN; ++n) {
    for (const Graph& g : corpus(n)) {
      if (g.is_complete()) continue;
      ++checked;
      try {
        const StarFamily f = cover_min_cut(g);
        const VertexSet x = global_min_cut(g);
        if (!f.is_vertex_disjoint() || !set_difference(x, f.vertices()).empty() ||
            static_cast<int>(f.size()) > vertex_connectivity(g)) {
          o.fail_with("covering postcondition fails for " + to_graph6(g));
        }
      } catch (const InvariantViolation& e) {
        ++violations;
        o.fail_with("invariant violation for " + to_graph6(g) + ": " + e.what());
      } catch (const std::exception& e) {
        o.fail_with("covering threw for " + to_graph6(g) + ": " + e.what());
      }
    }
  }
  o.detail << checked << " non-complete graphs, " << violations << " invariant violations";
  return o;
}

Outcome criterion9() {
  Outcome o;
  long checked = 0, fallbacks = 0;
  for (int n = kMinN; n <= kMaxN; ++n) {
    for (const Graph& g : corpus(n)) {
      const StructResult exact = struct_connectivity_exact(g);
      if (!exact.found()) continue;
      ++checked;
      const int kappa = vertex_connectivity(g);
      try {
        StarFamily f{2};
        if (g.is_complete()) {
          f = *exact.witness;
          ++fallbacks;
        } else {
          const CoverResult c = cover_min_cut_detailed(g);
          RefineResult r = refine_to_structure_cut(g, c.family, c.cut, c.sides);
          if (r.fallback) ++fallbacks;
          f = std::move(r.family);
        }
        if (!validates(g, f) || static_cast<int>(f.size()) > kappa) o.fail_with("refinement invalid for " + to_graph6(g));
      } catch (const std::exception& e) {
        o.fail_with("refinement threw for " + to_graph6(g) + ": " + e.what());
      }
    }
  }
  o.detail << checked << " graphs, " << fallbacks << " exact-solver fallbacks (rate "
           << (checked ? static_cast<double>(fallbacks) / static_cast<double>(checked) : 0.0) << ")";
  return o;
}

Outcome criterion10() {
  Outcome o;
  long decided = 0, compared = 0;
  for (int n = 3; n <= kMaxN; ++n) {
    for (const Graph& g : corpus(n)) {
      const StructResult pruned = struct_connectivity_exact(g, 2, false);
      const StructResult pure = struct_connectivity_exact(g, 2, true);
      ++compared;
      if (pruned.status != pure.status || pruned.value != pure.value) o.fail_with("solver modes disagree on " + to_graph6(g));
      if (n < kMinN) continue;
      ++decided;
      const Certificate c = decide_existence(g);
      if ((c.verdict == Verdict::Exists) != pruned.found()) o.fail_with("verdict disagrees on " + to_graph6(g));
      if (c.verdict == Verdict::Exists && !(c.witness && validates(g, *c.witness))) o.fail_with("bad witness on " + to_graph6(g));
    }
  }
  o.detail << decided << " certificates (n>=4), " << compared << " solver mode comparisons (n>=3)";
  return o;
}

Outcome criterion11() {
  Outcome o;
  const int expected[] = {1, 2, 6, 21, 112, 853, 11117};
  for (int n = 2; n <= kMaxN; ++n) {
    const int got = static_cast<int>(enumerate_connected(n).size());
    o.detail << got << (n < kMaxN ? "," : "");
    if (got != expected[n - 2]) o.fail_with("count mismatch at n=" + std::to_string(n));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"non-existence set for n = 2 (mod 3)", criterion1},
      {"universal existence for n = 1 (mod 3)", criterion2},
      {"diameter rule", criterion3},
      {"disjoint-neighborhood sufficiency and triple distances", criterion4},
      {"main bounds", criterion5},
      {"sharpness of the upper bound on cycles", criterion6},
      {"sharpness of the lower bound (B5)", criterion7},
      {"covering of a minimum cut", criterion8},
      {"refinement to a structure-cut", criterion9},
      {"oracle equivalence", criterion10},
      {"enumerator integrity", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail_with(std::string("uncaught exception: ") + e.what());
    }
    if (!o.pass) ++failed;
    std::printf("%s criterion %zu: %s -- %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
