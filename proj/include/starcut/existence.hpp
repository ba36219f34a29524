#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "starcut/graph.hpp"
#include "starcut/star.hpp"

namespace starcut {

enum class Verdict { Exists, NotExists };

/// Which existence argument settled the question.
enum class Rule { DiameterRule, Mod1Greedy, Mod2Iff, Mod0Condition, ExhaustiveSearch };

std::string_view to_string(Verdict v);
std::string_view to_string(Rule r);

/// Existence decision for a K_{1,2}-structure-cut. An Exists verdict always
/// carries a validated witness.
struct Certificate {
  Verdict verdict = Verdict::NotExists;
  std::optional<StarFamily> witness;
  Rule rule = Rule::ExhaustiveSearch;
  std::string detail;
};

/// Ordered triple (u, v, w) with v < w; u is the distinguished vertex.
struct Triple {
  Vertex u, v, w;
  bool operator==(const Triple&) const = default;
};

/// Structure-cut of a connected graph with diameter >= 4: take a diametral
/// pair, a minimum separating set S and |S| internally disjoint paths; on
/// each path pick the first 3-vertex window of the interior that contains
/// the path's cut vertex.
StarFamily diameter_cut(const Graph& g);

/// For connected graphs with n = 1 (mod 3), n >= 4: repeatedly delete the
/// canonical star (lowest center, lowest leaves) of the remainder until it
/// is disconnected or a single vertex.
StarFamily greedy_cut_mod1(const Graph& g);

/// For connected graphs with n = 2 (mod 3), n >= 5: a structure-cut exists
/// iff g is neither C5 nor complete.
bool exists_mod2(const Graph& g);

/// Lexicographically least triple with N(u) disjoint from
/// N(v) u N(w) u {v, w}, or nullopt.
std::optional<Triple> mod0_condition(const Graph& g);

/// Dispatch: diameter rule, then n mod 3 cases, then exhaustive search.
/// Requires a connected graph with n >= 4.
Certificate decide_existence(const Graph& g);

}  // namespace starcut
