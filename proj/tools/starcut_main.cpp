// starcut: structure connectivity of graphs with respect to K_{1,m} stars.
//
// Every subcommand prints one JSON document on stdout (verify and explore
// print JSONL records followed by a summary line). Exit status: 0 success,
// 1 domain or check failure, 2 usage or I/O error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "starcut/connectivity.hpp"
#include "starcut/corpus.hpp"
#include "starcut/covering.hpp"
#include "starcut/errors.hpp"
#include "starcut/existence.hpp"
#include "starcut/families.hpp"
#include "starcut/graph_io.hpp"
#include "starcut/serialize.hpp"
#include "starcut/struct_solver.hpp"
#include "starcut/verifier.hpp"

namespace {

using namespace starcut;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphInput {
  std::string g6;
  std::string file;
  std::string family;
  std::string param;

  void attach(CLI::App* cmd) {
    cmd->add_option("--g6", g6, "graph6 string");
    cmd->add_option("--file", file, "graph file (.g6 or edge list)");
    cmd->add_option("--family", family, "named family: cycle, path, complete, complete_bipartite, B5");
    cmd->add_option("--param", param, "family parameter (vertex count, or a,b)");
  }

  Graph load() const {
    const int given = !g6.empty() + !file.empty() + !family.empty();
    if (given != 1) throw UsageError("exactly one of --g6, --file, --family is required");
    if (!param.empty() && family.empty()) throw UsageError("--param needs --family");
    if (!g6.empty()) return from_graph6(g6);
    if (!file.empty()) return read_graph_file(file);
    return named_family(family, param);
  }
};

struct CorpusInput {
  int n = 0;
  std::string input;
  int jobs = 1;
  std::string out;

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "built-in enumeration of connected graphs on n vertices (2..8)");
    cmd->add_option("--input", input, "graph6 file (one graph per line) or edge-list file");
    cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--out", out, "append JSONL records to this file and resume from it");
  }

  CorpusSource source() const {
    if ((n != 0) == !input.empty()) throw UsageError("exactly one of --n, --input is required");
    return n != 0 ? CorpusSource::enumeration(n) : CorpusSource::file(input);
  }

  RunOptions options() const {
    RunOptions o;
    o.jobs = jobs;
    if (!out.empty()) o.out = out;
    return o;
  }
};

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

int run_corpus(const CorpusSource& source, const RunOptions& options) {
  const RunSummary summary = run_verification(source, options, options.out ? nullptr : &std::cout);
  emit(Json{{"summary", summary}});
  return summary.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Structure connectivity of graphs with respect to K_{1,m} stars"};
  app.require_subcommand(1);

  GraphInput gin;
  CorpusInput cin_;

  auto* kappa = app.add_subcommand("kappa", "vertex connectivity");
  gin.attach(kappa);

  int arity = 2;
  bool pure = false;
  bool witness = false;
  auto* skappa = app.add_subcommand("skappa", "K_{1,m}-structure connectivity");
  gin.attach(skappa);
  skappa->add_option("--arity", arity, "star arity m")->check(CLI::Range(1, 63));
  skappa->add_flag("--pure", pure, "search from one star upward, no kappa pruning");
  skappa->add_flag("--witness", witness, "include a minimum structure-cut");

  auto* exists = app.add_subcommand("exists", "existence certificate for a K_{1,2}-structure-cut");
  gin.attach(exists);

  bool trace = false;
  auto* cover = app.add_subcommand("cover", "star covering of a minimum vertex cut");
  gin.attach(cover);
  cover->add_flag("--trace", trace, "include the partition and pipeline snapshots");

  auto* diam = app.add_subcommand("diam-cut", "structure-cut from a diametral pair (diameter >= 4)");
  gin.attach(diam);

  std::string check_list = "all";
  auto* verify = app.add_subcommand("verify", "run the bound and existence checks over a corpus");
  cin_.attach(verify);
  verify->add_option("--checks", check_list, "comma-separated check names or 'all'");

  int max_n = 6;
  std::string ratio_input;
  auto* ratio = app.add_subcommand("ratio", "graphs with 3 * kappa(G; K_{1,2}) == kappa(G)");
  ratio->add_option("--max-n", max_n, "enumerate connected graphs with 4..max-n vertices")->check(CLI::Range(4, 8));
  ratio->add_option("--input", ratio_input, "graph6 or edge-list file instead of the enumeration");

  int explore_arity = 3;
  auto* explore = app.add_subcommand("explore", "check kappa/m <= kappa(G; K_{1,m}) <= kappa over a corpus");
  cin_.attach(explore);
  explore->add_option("--arity", explore_arity, "star arity m")->required()->check(CLI::Range(2, 63));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*kappa) {
      const Graph g = gin.load();
      emit(Json{{"kappa", vertex_connectivity(g)}});
    } else if (*skappa) {
      const Graph g = gin.load();
      StructResult r = struct_connectivity_exact(g, arity, pure);
      if (!witness) r.witness.reset();
      Json j = r;
      j["arity"] = arity;
      emit(j);
    } else if (*exists) {
      emit(Json(decide_existence(gin.load())));
    } else if (*cover) {
      const Graph g = gin.load();
      if (trace) {
        emit(Json(cover_min_cut_detailed(g)));
      } else {
        emit(Json(cover_min_cut(g)));
      }
    } else if (*diam) {
      emit(Json(diameter_cut(gin.load())));
    } else if (*verify) {
      RunOptions options = cin_.options();
      try {
        options.checks = parse_check_list(check_list);
      } catch (const InputError& e) {
        throw UsageError(e.what());
      }
      return run_corpus(cin_.source(), options);
    } else if (*ratio) {
      std::vector<Graph> corpus;
      if (!ratio_input.empty()) {
        for (CorpusEntry& e : load_corpus(CorpusSource::file(ratio_input))) {
          if (e.graph) corpus.push_back(std::move(*e.graph));
        }
      } else {
        for (int n = 4; n <= max_n; ++n) {
          for (Graph& g : enumerate_connected(n)) corpus.push_back(std::move(g));
        }
      }
      emit(Json{{"witnesses", find_ratio_witnesses(std::span<const Graph>(corpus))}});
    } else if (*explore) {
      RunOptions options = cin_.options();
      options.explore_arity = explore_arity;
      return run_corpus(cin_.source(), options);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    emit(Json{{"error", e.what()}});
    return 1;
  } catch (const InvariantViolation& e) {
    emit(Json{{"error", e.what()}, {"invariant_violation", true}});
    return 1;
  }
  return 0;
}
