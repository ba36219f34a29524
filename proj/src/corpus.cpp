#include "starcut/corpus.hpp"

#include <algorithm>
#include <condition_variable>
#include <fstream>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_set>

#include "starcut/canonical.hpp"
#include "starcut/connectivity.hpp"
#include "starcut/errors.hpp"
#include "starcut/families.hpp"
#include "starcut/graph_io.hpp"
#include "starcut/serialize.hpp"

namespace starcut {

namespace {

// Every connected graph on n vertices has a non-cut vertex, so it arises
// from a connected graph on n - 1 vertices plus one new vertex.
std::vector<Graph> extend_connected(const std::vector<Graph>& smaller, int n) {
  std::set<std::string> seen;
  const int k = n - 1;
  for (const Graph& base : smaller) {
    const std::vector<Edge> edges = base.edges();
    for (unsigned subset = 1; subset < (1u << k); ++subset) {
      std::vector<Edge> grown = edges;
      for (int v = 0; v < k; ++v) {
        if (subset >> v & 1u) grown.emplace_back(v, k);
      }
      seen.insert(canonical_graph6(Graph(n, grown)));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (const std::string& s : seen) out.push_back(from_graph6(s));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  if (n < 2 || n > kMaxEnumerationVertices) {
    throw InputError("built-in enumeration covers 2 <= n <= 8; supply a graph6 corpus for other sizes");
  }
  static std::mutex mu;
  static std::vector<std::vector<Graph>> cache{{}, {Graph(1)}};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= n) {
    const int next = static_cast<int>(cache.size());
    cache.push_back(extend_connected(cache.back(), next));
  }
  return cache[n];
}

bool CorpusFilter::accepts(const Graph& g) const {
  const bool connected = g.n() > 0 && is_connected(g);
  if (connected_only && !connected) return false;
  if (n_mod3 && g.n() % 3 != *n_mod3) return false;
  if (min_diameter || max_diameter) {
    if (!connected) return false;
    const int d = diameter(g);
    if (min_diameter && d < *min_diameter) return false;
    if (max_diameter && d > *max_diameter) return false;
  }
  return true;
}

CorpusSource CorpusSource::enumeration(int n) {
  CorpusSource s;
  s.kind = Kind::BuiltinEnumeration;
  s.n = n;
  return s;
}

CorpusSource CorpusSource::graph6_file(std::filesystem::path path) {
  CorpusSource s;
  s.kind = Kind::Graph6File;
  s.path = std::move(path);
  return s;
}

CorpusSource CorpusSource::edge_list_file(std::filesystem::path path) {
  CorpusSource s;
  s.kind = Kind::EdgeListFile;
  s.path = std::move(path);
  return s;
}

CorpusSource CorpusSource::named(std::string family, std::string params) {
  CorpusSource s;
  s.kind = Kind::NamedFamily;
  s.family = std::move(family);
  s.params = std::move(params);
  return s;
}

CorpusSource CorpusSource::file(std::filesystem::path path) {
  return path.extension() == ".g6" ? graph6_file(std::move(path)) : edge_list_file(std::move(path));
}

std::vector<CorpusEntry> load_corpus(const CorpusSource& source) {
  std::vector<CorpusEntry> entries;
  auto add = [&](Graph g) {
    if (source.filter.accepts(g)) entries.push_back(CorpusEntry{std::move(g), {}, {}});
  };
  switch (source.kind) {
    case CorpusSource::Kind::BuiltinEnumeration:
      for (Graph& g : enumerate_connected(source.n)) add(std::move(g));
      break;
    case CorpusSource::Kind::NamedFamily:
      add(named_family(source.family, source.params));
      break;
    case CorpusSource::Kind::EdgeListFile:
      add(read_graph_file(source.path));
      break;
    case CorpusSource::Kind::Graph6File: {
      std::ifstream in(source.path);
      if (!in) throw IoError("cannot read " + source.path.string());
      std::string line;
      while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
          add(from_graph6(line));
        } catch (const InputError& e) {
          entries.push_back(CorpusEntry{std::nullopt, line, e.what()});
        }
      }
      break;
    }
  }
  return entries;
}

double RunSummary::fallback_rate() const {
  return refinement_runs == 0 ? 0.0 : static_cast<double>(refinement_fallbacks) / static_cast<double>(refinement_runs);
}

int RunSummary::exit_code() const {
  if (failed_graphs > 0) return 1;
  if (errors > 0) return 2;
  return 0;
}

namespace {

std::unordered_set<std::string> existing_ids(const std::filesystem::path& path) {
  std::unordered_set<std::string> ids;
  std::ifstream in(path);
  if (!in) return ids;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    // A torn last line from an interrupted run is ignored and redone.
    Json j = Json::parse(line, nullptr, false);
    if (j.is_object() && j.contains("graph_id") && j["graph_id"].is_string()) ids.insert(j["graph_id"].get<std::string>());
  }
  return ids;
}

struct Outcome {
  std::optional<VerificationRecord> record;
  std::string line;
};

Outcome evaluate(const CorpusEntry& entry, const RunOptions& options) {
  if (!entry.graph) {
    return {std::nullopt, Json{{"graph_id", entry.raw}, {"error", entry.error}}.dump()};
  }
  try {
    VerificationRecord r = options.explore_arity ? check_open_problem(*entry.graph, *options.explore_arity)
                                                 : check_bounds(*entry.graph, options.checks);
    std::string line = Json(r).dump();
    return {std::move(r), std::move(line)};
  } catch (const std::exception& e) {
    return {std::nullopt, Json{{"graph_id", to_graph6(*entry.graph)}, {"error", e.what()}}.dump()};
  }
}

void fold(RunSummary& s, const Outcome& o) {
  ++s.records;
  if (!o.record) {
    ++s.errors;
    return;
  }
  const VerificationRecord& r = *o.record;
  if (r.any_failed()) ++s.failed_graphs;
  for (const auto& [name, outcome] : r.checks) {
    CheckTotals& t = s.totals[name];
    switch (outcome.status) {
      case CheckStatus::Pass: ++t.pass; break;
      case CheckStatus::Fail: ++t.fail; break;
      case CheckStatus::Skip: ++t.skip; break;
    }
  }
  auto it = r.checks.find(std::string(checks::kRefinement));
  if (it != r.checks.end() && it->second.status != CheckStatus::Skip) {
    ++s.refinement_runs;
    if (r.refinement_fallback) ++s.refinement_fallbacks;
  }
}

}  // namespace

RunSummary run_verification(const CorpusSource& source, const RunOptions& options, std::ostream* stream) {
  if (options.jobs < 1) throw InputError("jobs must be at least 1");
  const std::vector<CorpusEntry> entries = load_corpus(source);

  RunSummary summary;
  std::unordered_set<std::string> done;
  std::ofstream file;
  std::ostream* sink = stream;
  if (options.out) {
    done = existing_ids(*options.out);
    file.open(*options.out, std::ios::app);
    if (!file) throw IoError("cannot open " + options.out->string() + " for appending");
    sink = &file;
  }

  std::vector<const CorpusEntry*> work;
  for (const CorpusEntry& e : entries) {
    const std::string id = e.graph ? to_graph6(*e.graph) : e.raw;
    if (done.contains(id)) {
      ++summary.resumed;
      continue;
    }
    work.push_back(&e);
  }

  std::vector<std::optional<Outcome>> results(work.size());
  std::mutex mu;
  std::condition_variable ready;
  std::size_t next = 0;

  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard lock(mu);
        if (next >= work.size()) return;
        i = next++;
      }
      Outcome o = evaluate(*work[i], options);
      {
        std::lock_guard lock(mu);
        results[i] = std::move(o);
      }
      ready.notify_one();
    }
  };

  const int threads = std::min<int>(options.jobs, std::max<std::size_t>(work.size(), 1));
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

  // Single writer: flush records in input order as they complete.
  for (std::size_t i = 0; i < work.size(); ++i) {
    Outcome o;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return results[i].has_value(); });
      o = std::move(*results[i]);
      results[i].reset();
    }
    if (sink) *sink << o.line << '\n' << std::flush;
    fold(summary, o);
  }
  for (std::thread& t : pool) t.join();
  return summary;
}

}  // namespace starcut
