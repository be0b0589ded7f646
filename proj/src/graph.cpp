#include "star3/graph.hpp"

#include <algorithm>
#include <bit>

namespace star3 {

Graph::Graph() = default;

Graph::Graph(int n, std::span<const Pair> edges, std::vector<int> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw invalid_parameter("Graph: n < 0");
  if (n > kMaxVertices) throw size_limit("Graph: n > 64");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw invalid_parameter("Graph: label map size != n");
  }
  adj_.assign(n_, 0);
  edges_.reserve(edges.size());
  for (const Pair& e : edges) {
    int u = std::min(e[0], e[1]), v = std::max(e[0], e[1]);
    if (u < 0 || v >= n_) throw invalid_parameter("Graph: edge out of range");
    if (u == v) throw invalid_parameter("Graph: loop edge");
    if (adj_[u] >> v & 1) continue;  // set semantics
    adj_[u] |= uint64_t(1) << v;
    adj_[v] |= uint64_t(1) << u;
    edges_.push_back({u, v});
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph::Graph(int n, std::initializer_list<Pair> edges)
    : Graph(n, std::span<const Pair>(edges.begin(), edges.size())) {}

Graph Graph::complete(int n) {
  std::vector<Pair> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) edges.push_back({u, v});
  return Graph(n, edges);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw invalid_parameter("Graph: vertex out of range");
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  return u != v && (adj_[u] >> v & 1);
}

uint64_t Graph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

int Graph::degree(int v) const {
  check_vertex(v);
  return std::popcount(adj_[v]);
}

int Graph::label_of(int v) const {
  check_vertex(v);
  return labels_.empty() ? v : labels_[v];
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = std::popcount(adj_[v]);
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d = degrees();
  std::sort(d.rbegin(), d.rend());
  return d;
}

std::vector<int> Graph::support() const {
  std::vector<int> s;
  for (int v = 0; v < n_; ++v)
    if (adj_[v] != 0) s.push_back(v);
  return s;
}

Graph Graph::remove_edge(int u, int v) const {
  if (!has_edge(u, v)) throw invalid_parameter("remove_edge: not an edge");
  std::vector<Pair> rest;
  rest.reserve(edges_.size() - 1);
  Pair gone{std::min(u, v), std::max(u, v)};
  for (const Pair& e : edges_)
    if (e != gone) rest.push_back(e);
  return Graph(n_, rest, labels_);
}

}  // namespace star3
