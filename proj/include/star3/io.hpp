#pragma once

#include <iosfwd>
#include <string>

#include "star3/graph.hpp"
#include "star3/three_graph.hpp"

namespace star3 {

class EdgeColoring;  // coloring.hpp

/// Text formats. Lines starting with '#' are comments and ignored by all
/// parsers; parsers are whitespace-tolerant, serializers are canonical
/// (single spaces, '\n' line ends, trailing newline).
///
/// ThreeGraph:  "n m" then m lines "u v w" with u<v<w, sorted colex.
/// Graph:       "n m" then m lines "u v" with u<v, sorted lexicographically.
/// EdgeColoring:"n t" then C(n,3) lines "u v w c" in colex triple order.

std::string serialize(const ThreeGraph& g, const std::string& comment = "");
std::string serialize(const Graph& g, const std::string& comment = "");
std::string serialize(const EdgeColoring& c);

ThreeGraph parse_three_graph(const std::string& text);
Graph parse_graph(const std::string& text);
EdgeColoring parse_coloring(const std::string& text);

/// Single-line graph form "n m u1 v1 u2 v2 ..." used inside report lines.
std::string serialize_graph_inline(const Graph& g);
Graph parse_graph_inline(const std::string& text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace star3
