#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "star3/basics.hpp"

namespace star3 {

/// Simple undirected 2-graph on vertices 0..n-1, at most kMaxVertices.
///
/// Values are immutable after construction. Edges are stored sorted
/// lexicographically and mirrored into per-vertex neighbor bitmasks so that
/// membership tests and neighborhood scans are O(1) / O(n/64).
///
/// A Graph produced by restriction of a larger object (e.g. a link of a
/// 3-graph) carries a label map: labels()[i] is the vertex id the local
/// vertex i had in the parent object. An empty label map means identity.
class Graph {
 public:
  Graph();  // empty graph on 0 vertices
  Graph(int n, std::span<const Pair> edges, std::vector<int> labels = {});
  Graph(int n, std::initializer_list<Pair> edges);

  /// Complete graph K_n.
  static Graph complete(int n);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }
  bool has_edge(int u, int v) const;
  /// Neighbor set of v as a bitmask.
  uint64_t neighbors(int v) const;
  int degree(int v) const;
  const std::vector<Pair>& edges() const { return edges_; }
  /// Adjacency rows (index = vertex, bit = neighbor).
  const std::vector<uint64_t>& adjacency() const { return adj_; }
  /// Label map back to the parent object; empty means identity.
  const std::vector<int>& labels() const { return labels_; }
  int label_of(int v) const;

  /// Degree of every vertex, in vertex order.
  std::vector<int> degrees() const;
  /// Degree multiset sorted descending.
  std::vector<int> degree_sequence() const;

  /// Vertices with degree >= 1, ascending.
  std::vector<int> support() const;

  /// Graph with the same vertex set minus edge {u,v} (must exist).
  Graph remove_edge(int u, int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Pair> edges_;     // sorted lex
  std::vector<uint64_t> adj_;   // n_ rows
  std::vector<int> labels_;     // empty = identity
};

}  // namespace star3
