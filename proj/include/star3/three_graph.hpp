#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "star3/basics.hpp"
#include "star3/graph.hpp"

namespace star3 {

/// 3-uniform hypergraph on vertices 0..n-1, at most kMaxVertices.
///
/// Values are immutable after construction. Edge triples are normalized
/// (sorted ascending), deduplicated, stored in colex order, and mirrored
/// into a presence bitmap over colex ranks for O(1) membership. Vertex
/// degrees and pair frequencies z(u,v) = #{edges containing both u and v}
/// are precomputed at construction.
class ThreeGraph {
 public:
  ThreeGraph();  // empty graph on 0 vertices
  ThreeGraph(int n, std::span<const Triple> edges, std::vector<int> labels = {});
  ThreeGraph(int n, std::initializer_list<Triple> edges);

  /// Complete 3-graph K_n^(3); n >= 3 required.
  static ThreeGraph complete(int n);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  bool has_edge(int u, int v, int w) const;
  bool has_edge(const Triple& t) const;
  bool has_edge_rank(uint32_t rank) const;

  /// Edges in colex order.
  const std::vector<Triple>& edges() const { return edges_; }

  /// Number of edges containing v.
  int degree(int v) const;

  /// Pair frequency z(u,v): number of edges containing both u and v.
  int pair_frequency(int u, int v) const;

  /// Link N(v): the 2-graph on the other n-1 vertices whose edges are the
  /// pairs {a,b} with {v,a,b} an edge. Local vertex i of the result maps to
  /// parent vertex labels()[i] (v is skipped, order preserved).
  Graph link(int v) const;

  /// Label map back to the parent object; empty means identity.
  const std::vector<int>& labels() const { return labels_; }
  int label_of(int v) const;

  /// Induced subgraph on X (sorted, deduplicated internally); vertices are
  /// relabeled densely, with the label map recording original ids.
  ThreeGraph induced(std::span<const int> x) const;

  /// Removes the vertices in X (and all edges meeting them), relabeling the
  /// remaining vertices densely with a label map.
  ThreeGraph remove_vertices(std::span<const int> x) const;

  /// Removes the edge set Y, which must be a subset of the edges.
  /// The vertex set is unchanged.
  ThreeGraph remove_edges(std::span<const Triple> y) const;

  bool operator==(const ThreeGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Triple> edges_;      // colex order
  std::vector<uint8_t> present_;   // size C(n,3), indexed by colex rank
  std::vector<int> degree_;        // size n
  std::vector<int> pair_freq_;     // size C(n,2), indexed by colex pair rank
  std::vector<int> labels_;        // empty = identity
};

}  // namespace star3
