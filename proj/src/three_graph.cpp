#include "star3/three_graph.hpp"

#include <algorithm>

namespace star3 {

ThreeGraph::ThreeGraph() = default;

ThreeGraph::ThreeGraph(int n, std::span<const Triple> edges,
                       std::vector<int> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw invalid_parameter("ThreeGraph: n < 0");
  if (n > kMaxVertices) throw size_limit("ThreeGraph: n > 64");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw invalid_parameter("ThreeGraph: label map size != n");
  }
  present_.assign(static_cast<size_t>(binom(n_, 3)), 0);
  degree_.assign(n_, 0);
  pair_freq_.assign(static_cast<size_t>(binom(n_, 2)), 0);
  edges_.reserve(edges.size());
  for (Triple t : edges) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2]) {
      throw invalid_parameter("ThreeGraph: repeated vertex in triple");
    }
    if (t[0] < 0 || t[2] >= n_) {
      throw invalid_parameter("ThreeGraph: triple out of range");
    }
    uint32_t r = triple_rank(t);
    if (present_[r]) continue;  // set semantics
    present_[r] = 1;
    edges_.push_back(t);
    for (int i = 0; i < 3; ++i) degree_[t[i]]++;
    pair_freq_[pair_rank(t[0], t[1])]++;
    pair_freq_[pair_rank(t[0], t[2])]++;
    pair_freq_[pair_rank(t[1], t[2])]++;
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const Triple& a, const Triple& b) {
              return triple_rank(a) < triple_rank(b);
            });
}

ThreeGraph::ThreeGraph(int n, std::initializer_list<Triple> edges)
    : ThreeGraph(n, std::span<const Triple>(edges.begin(), edges.size())) {}

ThreeGraph ThreeGraph::complete(int n) {
  if (n < 3) throw invalid_parameter("complete_three_graph: n < 3");
  if (n > kMaxVertices) throw size_limit("complete_three_graph: n > 64");
  std::vector<Triple> edges;
  edges.reserve(static_cast<size_t>(binom(n, 3)));
  for (uint32_t r = 0; r < binom(n, 3); ++r) edges.push_back(triple_unrank(r, n));
  return ThreeGraph(n, edges);
}

void ThreeGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw invalid_parameter("ThreeGraph: vertex out of range");
}

bool ThreeGraph::has_edge(int u, int v, int w) const {
  Triple t = make_triple(u, v, w);
  check_vertex(t[0]);
  check_vertex(t[2]);
  return present_[triple_rank(t)] != 0;
}

bool ThreeGraph::has_edge(const Triple& t) const {
  return has_edge(t[0], t[1], t[2]);
}

bool ThreeGraph::has_edge_rank(uint32_t rank) const {
  if (rank >= present_.size())
    throw invalid_parameter("ThreeGraph: rank out of range");
  return present_[rank] != 0;
}

int ThreeGraph::degree(int v) const {
  check_vertex(v);
  return degree_[v];
}

int ThreeGraph::pair_frequency(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw invalid_parameter("pair_frequency: u == v");
  return pair_freq_[pair_rank(std::min(u, v), std::max(u, v))];
}

Graph ThreeGraph::link(int v) const {
  check_vertex(v);
  // Local id of parent vertex a (a != v): a if a < v else a-1.
  auto local = [v](int a) { return a < v ? a : a - 1; };
  std::vector<Pair> pairs;
  pairs.reserve(degree_[v]);
  for (const Triple& t : edges_) {
    if (t[0] != v && t[1] != v && t[2] != v) continue;
    int a, b;
    if (t[0] == v) {
      a = t[1]; b = t[2];
    } else if (t[1] == v) {
      a = t[0]; b = t[2];
    } else {
      a = t[0]; b = t[1];
    }
    pairs.push_back({local(a), local(b)});
  }
  std::vector<int> labels(n_ - 1);
  for (int a = 0; a < n_; ++a)
    if (a != v) labels[local(a)] = labels_.empty() ? a : labels_[a];
  return Graph(n_ - 1, pairs, std::move(labels));
}

int ThreeGraph::label_of(int v) const {
  check_vertex(v);
  return labels_.empty() ? v : labels_[v];
}

ThreeGraph ThreeGraph::induced(std::span<const int> x) const {
  std::vector<int> keep(x.begin(), x.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep) check_vertex(v);
  std::vector<int> local(n_, -1);
  for (size_t i = 0; i < keep.size(); ++i) local[keep[i]] = static_cast<int>(i);
  std::vector<Triple> sub;
  for (const Triple& t : edges_) {
    if (local[t[0]] >= 0 && local[t[1]] >= 0 && local[t[2]] >= 0) {
      sub.push_back({local[t[0]], local[t[1]], local[t[2]]});
    }
  }
  std::vector<int> labels(keep.size());
  for (size_t i = 0; i < keep.size(); ++i)
    labels[i] = labels_.empty() ? keep[i] : labels_[keep[i]];
  return ThreeGraph(static_cast<int>(keep.size()), sub, std::move(labels));
}

ThreeGraph ThreeGraph::remove_vertices(std::span<const int> x) const {
  std::vector<uint8_t> gone(n_, 0);
  for (int v : x) {
    check_vertex(v);
    gone[v] = 1;
  }
  std::vector<int> keep;
  for (int v = 0; v < n_; ++v)
    if (!gone[v]) keep.push_back(v);
  return induced(keep);
}

ThreeGraph ThreeGraph::remove_edges(std::span<const Triple> y) const {
  std::vector<uint8_t> drop(present_.size(), 0);
  for (Triple t : y) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2] || t[0] < 0 || t[2] >= n_ ||
        !present_[triple_rank(t)]) {
      throw invalid_parameter("remove_edges: Y is not a subset of the edges");
    }
    drop[triple_rank(t)] = 1;
  }
  std::vector<Triple> rest;
  rest.reserve(edges_.size());
  for (const Triple& t : edges_)
    if (!drop[triple_rank(t)]) rest.push_back(t);
  return ThreeGraph(n_, rest, labels_);
}

}  // namespace star3
