#include "star3/io.hpp"

#include <fstream>
#include <sstream>

#include "star3/coloring.hpp"

namespace star3 {

namespace {

// Strips comments/blank lines and returns the remaining whitespace tokens.
std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) tokens.push_back(tok);
  }
  return tokens;
}

int to_int(const std::string& tok, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw parse_error("");
    return v;
  } catch (const std::exception&) {
    throw parse_error(std::string("expected integer for ") + what + ", got '" +
                      tok + "'");
  }
}

}  // namespace

std::string serialize(const ThreeGraph& g, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.n() << " " << g.m() << "\n";
  for (const Triple& t : g.edges())
    out << t[0] << " " << t[1] << " " << t[2] << "\n";
  return out.str();
}

std::string serialize(const Graph& g, const std::string& comment) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << g.n() << " " << g.m() << "\n";
  for (const Pair& e : g.edges()) out << e[0] << " " << e[1] << "\n";
  return out.str();
}

std::string serialize(const EdgeColoring& c) {
  std::ostringstream out;
  out << c.n() << " " << c.t() << "\n";
  for (uint32_t r = 0; r < c.triples(); ++r) {
    Triple t = triple_unrank(r, c.n());
    out << t[0] << " " << t[1] << " " << t[2] << " " << c.color_of_rank(r)
        << "\n";
  }
  return out.str();
}

ThreeGraph parse_three_graph(const std::string& text) {
  std::vector<std::string> tok = tokenize(text);
  if (tok.size() < 2) throw parse_error("3-graph: missing 'n m' header");
  int n = to_int(tok[0], "n");
  int m = to_int(tok[1], "m");
  if (m < 0 || tok.size() != 2 + 3 * static_cast<size_t>(m)) {
    throw parse_error("3-graph: token count does not match header");
  }
  std::vector<Triple> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = to_int(tok[2 + 3 * i], "u");
    int v = to_int(tok[3 + 3 * i], "v");
    int w = to_int(tok[4 + 3 * i], "w");
    if (!(u < v && v < w)) throw parse_error("3-graph: triple not ascending");
    edges.push_back({u, v, w});
  }
  try {
    ThreeGraph g(n, edges);
    if (g.m() != m) throw parse_error("3-graph: duplicate triples");
    return g;
  } catch (const invalid_parameter& e) {
    throw parse_error(std::string("3-graph: ") + e.what());
  }
}

Graph parse_graph(const std::string& text) {
  std::vector<std::string> tok = tokenize(text);
  if (tok.size() < 2) throw parse_error("graph: missing 'n m' header");
  int n = to_int(tok[0], "n");
  int m = to_int(tok[1], "m");
  if (m < 0 || tok.size() != 2 + 2 * static_cast<size_t>(m)) {
    throw parse_error("graph: token count does not match header");
  }
  std::vector<Pair> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = to_int(tok[2 + 2 * i], "u");
    int v = to_int(tok[3 + 2 * i], "v");
    if (u >= v) throw parse_error("graph: pair not ascending");
    edges.push_back({u, v});
  }
  try {
    Graph g(n, edges);
    if (g.m() != m) throw parse_error("graph: duplicate pairs");
    return g;
  } catch (const invalid_parameter& e) {
    throw parse_error(std::string("graph: ") + e.what());
  }
}

EdgeColoring parse_coloring(const std::string& text) {
  std::vector<std::string> tok = tokenize(text);
  if (tok.size() < 2) throw parse_error("coloring: missing 'n t' header");
  int n = to_int(tok[0], "n");
  int t = to_int(tok[1], "t");
  if (n < 3 || n > kMaxVertices) throw parse_error("coloring: bad n");
  size_t triples = static_cast<size_t>(binom(n, 3));
  if (tok.size() != 2 + 4 * triples) {
    throw parse_error("coloring: token count does not match C(n,3) lines");
  }
  std::vector<int> colors(triples);
  for (size_t r = 0; r < triples; ++r) {
    int u = to_int(tok[2 + 4 * r], "u");
    int v = to_int(tok[3 + 4 * r], "v");
    int w = to_int(tok[4 + 4 * r], "w");
    int c = to_int(tok[5 + 4 * r], "c");
    Triple expect = triple_unrank(static_cast<uint32_t>(r), n);
    if (Triple{u, v, w} != expect) {
      throw parse_error("coloring: line " + std::to_string(r) +
                        " is not the expected colex triple");
    }
    colors[r] = c;
  }
  try {
    return EdgeColoring(n, t, std::move(colors));
  } catch (const invalid_parameter& e) {
    throw parse_error(std::string("coloring: ") + e.what());
  }
}

std::string serialize_graph_inline(const Graph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.m();
  for (const Pair& e : g.edges()) out << " " << e[0] << " " << e[1];
  return out.str();
}

Graph parse_graph_inline(const std::string& text) {
  std::vector<std::string> tok = tokenize(text);
  if (tok.size() < 2) throw parse_error("inline graph: missing 'n m'");
  int n = to_int(tok[0], "n");
  int m = to_int(tok[1], "m");
  if (m < 0 || tok.size() != 2 + 2 * static_cast<size_t>(m)) {
    throw parse_error("inline graph: token count mismatch");
  }
  std::vector<Pair> edges;
  for (int i = 0; i < m; ++i) {
    edges.push_back({to_int(tok[2 + 2 * i], "u"), to_int(tok[3 + 2 * i], "v")});
  }
  return Graph(n, edges);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write file: " + path);
  out << content;
  if (!out.good()) throw error("write failed: " + path);
}

}  // namespace star3
