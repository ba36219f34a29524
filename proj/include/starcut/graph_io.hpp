#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "starcut/graph.hpp"

namespace starcut {

/// Encodes g in graph6 (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and a trailing
/// newline are accepted; any other header, a length mismatch or nonzero
/// padding bits raise FormatError.
Graph from_graph6(std::string_view line);

/// Edge-list text: first non-comment line "n m", then m lines "u v".
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Reads a single graph from a file; ".g6" selects graph6 (first line),
/// anything else the edge-list format.
Graph read_graph_file(const std::filesystem::path& path);

}  // namespace starcut
