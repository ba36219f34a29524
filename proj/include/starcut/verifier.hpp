#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "starcut/covering.hpp"
#include "starcut/graph.hpp"
#include "starcut/star.hpp"

namespace starcut {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus s);

struct CheckOutcome {
  CheckStatus status = CheckStatus::Skip;
  std::string reason;
};

/// Per-graph results. A violated bound is recorded as a failed check, never thrown.
struct VerificationRecord {
  std::string graph_id;  // graph6
  int n = 0;
  int m = 0;
  std::optional<int> kappa;
  std::optional<int> struct_kappa;
  int arity = 2;
  std::string certificate_rule;
  std::map<std::string, CheckOutcome> checks;
  bool refinement_fallback = false;

  bool any_failed() const;
};

using CheckSet = std::set<std::string, std::less<>>;

namespace checks {
inline constexpr std::string_view kBounds = "bounds";
inline constexpr std::string_view kDiameterRule = "diameter_rule";
inline constexpr std::string_view kMod1Greedy = "mod1_greedy";
inline constexpr std::string_view kMod2Iff = "mod2_iff";
inline constexpr std::string_view kMod0Sufficiency = "mod0_sufficiency";
inline constexpr std::string_view kTripleDistance = "triple_distance";
inline constexpr std::string_view kExistenceOracle = "existence_oracle";
inline constexpr std::string_view kSolverModes = "solver_modes";
inline constexpr std::string_view kCovering = "covering";
inline constexpr std::string_view kRefinement = "refinement";
inline constexpr std::string_view kOpenProblem = "open_problem_bounds";
}  // namespace checks

/// Every check run by check_bounds.
const CheckSet& all_checks();

/// Comma-separated names, or "all". Throws InputError on unknown names.
CheckSet parse_check_list(std::string_view list);

struct RefineResult {
  StarFamily family{2};
  bool fallback = false;
  int iterations = 0;
  std::string applied;  // which transformation produced the family
};

/// Turns a covering of a minimum cut X into a structure-cut of at most |X|
/// stars. Stars touching the side of G - X that does not contain
/// H = G - V(F) are classified (two cut vertices and one far vertex; one
/// cut vertex and two far vertices; one of each side plus a cut vertex)
/// and rewritten by dropping the star or re-anchoring it into H. Each round
/// tries every rewrite, returns the first valid one, otherwise applies the
/// first rewrite and retries; after n rounds the exact solver is used and
/// `fallback` is set.
///
/// Throws PreconditionError when F is not a covering of X with at most |X|
/// stars, or when G has no structure-cut at all.
RefineResult refine_to_structure_cut(const Graph& g, const StarFamily& f, const VertexSet& cut, const Sides& sides);

/// kappa, kappa(G; K_{1,2}) and every applicable existence / bound check.
/// Graphs that are disconnected or have fewer than 4 vertices get all
/// requested checks skipped.
VerificationRecord check_bounds(const Graph& g, const CheckSet& wanted = all_checks());

/// Records with 3 * struct_kappa == kappa, sorted by n then graph6.
std::vector<VerificationRecord> find_ratio_witnesses(std::span<const VerificationRecord> records);
std::vector<VerificationRecord> find_ratio_witnesses(std::span<const Graph> corpus);

/// Exploratory check of kappa/m <= kappa(G; K_{1,m}) <= kappa for arity
/// m >= 3. At m = 2 the proven kappa/3 lower bound is used instead, so the
/// result agrees with check_bounds. A failing "open_problem_bounds" check is
/// a counterexample.
VerificationRecord check_open_problem(const Graph& g, int arity);

}  // namespace starcut
