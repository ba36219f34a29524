#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "starcut/graph.hpp"
#include "starcut/verifier.hpp"

namespace starcut {

/// Largest n the built-in enumerator handles.
inline constexpr int kMaxEnumerationVertices = 8;

/// One representative per isomorphism class of connected graphs on n
/// vertices, in canonical form, sorted by graph6. Requires 2 <= n <= 8.
std::vector<Graph> enumerate_connected(int n);

struct CorpusFilter {
  bool connected_only = false;
  std::optional<int> n_mod3;
  std::optional<int> min_diameter;
  std::optional<int> max_diameter;

  bool accepts(const Graph& g) const;
};

struct CorpusSource {
  enum class Kind { BuiltinEnumeration, Graph6File, EdgeListFile, NamedFamily };

  Kind kind = Kind::BuiltinEnumeration;
  int n = 0;
  std::filesystem::path path;
  std::string family;
  std::string params;
  CorpusFilter filter;

  static CorpusSource enumeration(int n);
  static CorpusSource graph6_file(std::filesystem::path path);
  static CorpusSource edge_list_file(std::filesystem::path path);
  static CorpusSource named(std::string family, std::string params);
  /// Graph6 for ".g6", edge list otherwise.
  static CorpusSource file(std::filesystem::path path);
};

/// A graph, or the raw text and message of an input that failed to parse.
struct CorpusEntry {
  std::optional<Graph> graph;
  std::string raw;
  std::string error;
};

/// Resolves a source into entries, applying its filter to parsed graphs.
/// Throws InputError when the source itself cannot be read.
std::vector<CorpusEntry> load_corpus(const CorpusSource& source);

struct CheckTotals {
  long pass = 0;
  long fail = 0;
  long skip = 0;
};

struct RunSummary {
  long records = 0;           // records written in this run
  long resumed = 0;           // inputs already present in the sink
  long errors = 0;            // record-level error entries
  long failed_graphs = 0;
  long refinement_runs = 0;   // records whose refinement check ran
  long refinement_fallbacks = 0;
  std::map<std::string, CheckTotals> totals;

  double fallback_rate() const;
  /// 1 if any check failed, else 2 if any input was malformed, else 0.
  int exit_code() const;
};

struct RunOptions {
  CheckSet checks = all_checks();
  int jobs = 1;
  /// Append-only JSONL sink; graph ids already present are skipped.
  std::optional<std::filesystem::path> out;
  /// Runs check_open_problem with this arity instead of check_bounds.
  std::optional<int> explore_arity;
};

/// Verifies every entry of the source. Records go to options.out when set,
/// otherwise to `stream` (if non-null), one JSON object per line in input
/// order regardless of the worker count.
RunSummary run_verification(const CorpusSource& source, const RunOptions& options, std::ostream* stream = nullptr);

}  // namespace starcut
