#include "starcut/graph_io.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <sstream>

#include "starcut/errors.hpp"

namespace starcut {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void append_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

int sextet(char c) {
  int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) throw FormatError(std::string("invalid graph6 character '") + c + "'");
  return v;
}

}  // namespace

std::string to_graph6(const Graph& g) {
  std::string out;
  append_size(out, g.n());
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < g.n(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
  } else if (line.starts_with(">>")) {
    throw FormatError("unsupported header (only >>graph6<< is accepted)");
  }
  if (line.empty()) throw FormatError("empty graph6 string");
  if (line.front() == ':' || line.front() == '&' || line.front() == ';') {
    throw FormatError("sparse6/digraph6 input is not graph6");
  }

  std::size_t pos = 0;
  long long n = 0;
  if (sextet(line[0]) < 63) {
    n = sextet(line[0]);
    pos = 1;
  } else if (line.size() >= 2 && sextet(line[1]) == 63) {
    if (line.size() < 8) throw FormatError("truncated graph6 size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(line[i]);
    pos = 8;
  } else {
    if (line.size() < 4) throw FormatError("truncated graph6 size field");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(line[i]);
    pos = 4;
  }
  if (n > 100000) throw FormatError("graph6 vertex count too large");

  const long long nbits = n * (n - 1) / 2;
  const long long nbytes = (nbits + 5) / 6;
  if (static_cast<long long>(line.size() - pos) != nbytes) throw FormatError("graph6 length does not match vertex count");

  std::vector<Edge> edges;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      int byte = sextet(line[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (nbits % 6 != 0) {
    int last = sextet(line.back());
    int pad = static_cast<int>(6 - nbits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw FormatError("nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw FormatError("edge list line " + std::to_string(lineno) + ": expected two integers");
    }
    if (!have_header) {
      if (a < 0 || b < 0) throw FormatError("edge list header must be nonnegative");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw FormatError("edge list line " + std::to_string(lineno) + ": vertex out of range");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw FormatError("edge list is missing the \"n m\" header");
  if (static_cast<long long>(edges.size()) != m) {
    throw FormatError("edge list declares " + std::to_string(m) + " edges but lists " + std::to_string(edges.size()));
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const InputError& e) {
    throw FormatError(e.what());
  }
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  if (path.extension() == ".g6") {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line != "\r") return from_graph6(line);
    }
    throw FormatError("no graph in " + path.string());
  }
  return parse_edge_list(in);
}

}  // namespace starcut
