#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "star3/graph.hpp"

namespace star3 {

/// Maximum matching result. `pairs` lists the matched edges sorted
/// lexicographically. `certificate`, when present, is a Tutte set S with
/// odd_components(G - S) > |S| proving no perfect matching exists; it is
/// populated by tutte_witness(), not by max_matching() (computing it takes
/// an exhaustive subset scan).
struct MatchingResult {
  int size = 0;
  std::vector<Pair> pairs;
  std::optional<std::vector<int>> certificate;
};

/// Exact maximum matching (Edmonds blossom over bitmask adjacency).
MatchingResult max_matching(const Graph& g);

/// Matching number nu(G).
int matching_number(const Graph& g);

bool has_perfect_matching(const Graph& g);

/// Number of odd-order connected components of G - removed (mask of vertices
/// to delete). Isolated vertices count.
int odd_components(const Graph& g, uint64_t removed_mask);

/// If G has a perfect matching, returns nullopt. Otherwise returns a set S
/// with odd_components(G - S) > |S| (exists by Tutte's theorem), found by
/// exhaustive subset scan in increasing size; requires n <= 16, else throws
/// size_limit when a scan would be needed.
std::optional<std::vector<int>> tutte_witness(const Graph& g);

/// True iff n is odd and G - v has a perfect matching for every vertex v
/// (checked by n matching computations).
bool is_factor_critical(const Graph& g);

/// Hamiltonian cycle as a vertex sequence of length n (closing edge back to
/// the first vertex exists), or nullopt. Backtracking search; n >= 3
/// required, practical up to n ~ 20.
std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g);

/// Erdos-Gallai test: is the degree multiset realizable by a simple graph?
bool is_graphical(std::vector<int> seq);

/// Enumerates every labeled simple graph whose degree multiset equals the
/// multiset of `seq`, each exactly once, in a fixed deterministic order.
/// The callback returns false to stop early. Throws invalid_parameter if the
/// sequence is not graphical, size_limit if sum(seq) > 40.
void for_each_graph_with_degree_sequence(
    std::vector<int> seq, const std::function<bool(const Graph&)>& cb);

/// Draws `count` graphs with the given degree multiset via randomized
/// double-edge switching from a Havel-Hakimi realization. Deterministic for
/// a fixed seed. Throws invalid_parameter if not graphical.
std::vector<Graph> sample_graphs_with_degree_sequence(std::vector<int> seq,
                                                      int count,
                                                      uint64_t seed);

/// One counterexample found by an audit: a generated graph plus the edge
/// whose removal left a non-factor-critical graph (degree-critical audit) or
/// an unused default edge (hamiltonicity audit).
struct AuditViolation {
  uint64_t index = 0;  // position in generation order
  Graph graph;
  std::optional<Pair> edge;
};

struct AuditReport {
  uint64_t checked = 0;
  std::vector<AuditViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Audits the edge-deleted factor-criticality property: for every generated
/// graph G of odd order q <= 2k-1 whose degree multiset is all (k-1) except
/// at most one (k-2), and every edge f, G - f must be factor-critical.
/// Exhaustive mode enumerates every labeled graph per graphical sequence;
/// sample mode draws `sample_count` per sequence with the given seed
/// (sub-seeded per sequence, documented scheme: seed xor sequence index).
/// k >= 5 required.
AuditReport audit_degree_critical(int k, bool exhaustive, int sample_count,
                                  uint64_t seed);

/// Audits Hamiltonicity over every labeled graph with the given degree
/// multiset (exhaustive; same budget rules as the enumerator).
AuditReport audit_hamiltonicity(std::vector<int> seq);

namespace detail {
/// Blossom kernel over raw adjacency rows. `active` masks usable vertices;
/// `mate` (size >= n, -1 = unmatched) may carry a partial matching to extend
/// and receives the final matching. Returns the matching size.
int max_matching_masks(const uint64_t* adj, int n, uint64_t active,
                       int8_t* mate);
}  // namespace detail

}  // namespace star3
