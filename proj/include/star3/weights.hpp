#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "star3/three_graph.hpp"

namespace star3 {

/// Frequency classes of vertex pairs at level k:
///   A: z >= 2k-1,  B: k <= z <= 2k-2,  C: z <= k-1.
enum class PairClass : uint8_t { kA = 0, kB = 1, kC = 2 };

char to_char(PairClass c);

/// Classes of all C(n,2) pairs (indexed by colex pair rank), k >= 2.
struct PairClassTable {
  int n = 0;
  int k = 0;
  std::vector<PairClass> cls;  // size C(n,2)

  PairClass at(int u, int v) const;
  /// Counts of {A,B,C} among the pairs {v,u}, u != v.
  std::array<int, 3> histogram_at_vertex(int v) const;
};

PairClassTable classify_pairs(const ThreeGraph& f, int k);

/// Weights of one edge T, as exact sixths (0, 2, 3 or 6 = 0, 1/3, 1/2, 1).
/// Entry i is the weight of the pair opposite T[i] (that is, T minus T[i]),
/// so vertex weights sum entry i into W_{T[i]}. Rules, with the pairs of T
/// sorted by descending frequency z (p1 highest):
///   all three in A+B, or all three in B+C  ->  (1/3, 1/3, 1/3)
///   p1 in A, p3 in C, p2 in A+B            ->  (1/2 to p1, 1/2 to p2, 0)
///   p1 in A, p2 and p3 in C                ->  (1 to p1, 0, 0)
/// Ties in z never change the result (weights depend only on classes, and
/// equal z means equal class).
std::array<int64_t, 3> triple_weights_sixths(const ThreeGraph& f,
                                             const PairClassTable& classes,
                                             const Triple& t);

/// Vertex weights W_v = sum over edges T containing v of the weight of the
/// pair T - v. Exact sixths. total_sixths == 6 * m(F) always.
struct WeightTable {
  int k = 0;
  std::vector<int64_t> w_sixths;  // size n
  int64_t total_sixths = 0;
};

WeightTable vertex_weights(const ThreeGraph& f, int k);

enum class WitnessKind : uint8_t {
  kNone = 0,
  kTwoDisjointKk,         // link = two disjoint K_k, all link edges class A
  kCliquePlusCritical,    // link = K_{k-1} + factor-critical C of order k+1,
                          // degrees in C all k-1 except one k-2
  kConditionsABC,         // the three-part structural description below
};

const char* to_string(WitnessKind k);

/// Structural witness for a vertex whose weight exceeds the slack threshold.
/// For kConditionsABC: S is the removed set (|S| <= (k-2)/2), f0 the
/// factor-critical component of link - S (order 2k-1-2|S| >= k+1, degrees
/// all k-1 except one k-2), and star_centers the centers of the <= |S|
/// edge-disjoint stars (max degree k-1) that partition the edges of
/// link - V(f0); additionally every link edge is class A and every pair
/// {v, u} is class C. For the other kinds, the component vertex lists are in
/// `f0` / `component_b`.
struct StructureWitness {
  WitnessKind kind = WitnessKind::kNone;
  std::vector<int> s;
  std::vector<int> f0;
  std::vector<int> component_b;
  std::vector<int> star_centers;
};

/// Per-vertex audit row.
struct VertexAudit {
  int v = -1;
  int64_t w_sixths = 0;
  int64_t hard_bound_sixths = 0;    // 6 k(k-1), all k
  int64_t even_bound_sixths = 0;    // 6 k(k-3/2) = 6k^2-9k, even k only (else 0)
  int64_t slack_threshold_sixths = 0;  // bound minus slack (2/3 odd, 1/2 even)
  bool above_slack = false;
  bool hard_bound_ok = true;
  bool even_bound_ok = true;  // true when k odd
  StructureWitness witness;
  std::array<int, 3> class_histogram{0, 0, 0};  // classes of pairs {v,.}
};

struct WeightAuditReport {
  int k = 0;
  std::vector<VertexAudit> per_vertex;
  bool all_hard_bounds_hold = true;
  bool all_even_bounds_hold = true;   // vacuously true for odd k
  bool all_witnesses_found = true;    // every above-slack vertex got a witness
  bool ok() const { return all_hard_bounds_hold && all_witnesses_found; }
};

/// Audits the weight bounds on a k-star-free graph (precondition_error when
/// F has a k-star):
///   W_v <= k(k-1) for all k (hard bound), and for the vertices within 2/3
///   of it, the link must be two disjoint K_k with all edges class A;
///   for even k additionally W_v <= k(k-3/2) is recorded, and vertices
///   within 1/2 of that bound must match one of the two even structural
///   descriptions. Exceeding the even bound while respecting the hard bound
///   is reported (all_even_bounds_hold = false), not an error.
WeightAuditReport audit_weight_lemma(const ThreeGraph& f, int k);

}  // namespace star3
