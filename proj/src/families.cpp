#include "starcut/families.hpp"

#include <charconv>
#include <string>

#include "starcut/connectivity.hpp"
#include "starcut/errors.hpp"
#include "starcut/struct_solver.hpp"

namespace starcut {

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

Graph path_graph(int n) {
  if (n < 1) throw InputError("path needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph complete_graph(int n) {
  if (n < 1) throw InputError("complete graph needs at least 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete bipartite parts must be nonempty");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return Graph(a + b, edges);
}

Graph b5_graph() {
  static const Graph g = [] {
    Graph b5(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}});
    const StructResult r = struct_connectivity_exact(b5);
    if (vertex_connectivity(b5) != 3 || !r.found() || *r.value != 1) {
      throw InvariantViolation("B5 no longer has kappa = 3 and one-star structure connectivity");
    }
    return b5;
  }();
  return g;
}

const std::vector<std::string_view>& family_names() {
  static const std::vector<std::string_view> names{"cycle", "path", "complete", "complete_bipartite", "B5"};
  return names;
}

namespace {

int parse_count(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("bad " + std::string(what) + " parameter '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Graph named_family(std::string_view name, std::string_view param) {
  if (name == "B5") {
    if (!param.empty()) throw InputError("B5 takes no parameter");
    return b5_graph();
  }
  if (name == "complete_bipartite") {
    const auto comma = param.find(',');
    if (comma == std::string_view::npos) throw InputError("complete_bipartite expects 'a,b'");
    return complete_bipartite_graph(parse_count(param.substr(0, comma), name), parse_count(param.substr(comma + 1), name));
  }
  if (name == "cycle") return cycle_graph(parse_count(param, name));
  if (name == "path") return path_graph(parse_count(param, name));
  if (name == "complete") return complete_graph(parse_count(param, name));
  throw InputError("unknown family '" + std::string(name) + "'");
}

}  // namespace starcut
