#pragma once

#include <cstdint>

#include "star3/graph.hpp"
#include "star3/three_graph.hpp"

namespace star3 {

/// Closed-form value of the star Turan number f(n,k) = max edges of a
/// k-star-free 3-graph, together with its validity threshold: the closed
/// form is proven for n > threshold_n (for k = 2 it holds for every
/// n >= 3).
struct FormulaResult {
  int64_t value = 0;
  int64_t threshold_n = 0;
  bool in_regime = false;  // n > threshold_n
};

/// f(n,k); k >= 2, n >= 3 required.
///   k = 2:        n, n-1, n-2, n-2 for n = 0,1,2,3 (mod 4)
///   k odd  >= 3:  (n-2k)k(k-1) + 2 C(k,3),      proven for n > k(k-1)(5k+2)/2
///   k even >= 4:  nk(2k-3)/2 - (2k^3-9k+6)/2,   proven for n > 2k^3-9k+7
FormulaResult f_formula(int n, int k);

/// Extremal k-star-free 3-graph for odd k >= 3, n >= 2k: two disjoint
/// k-sets S = {0..k-1}, R = {k..2k-1}; edges are the triples with >= 2
/// vertices in S and none in R, plus the mirror image. Edge count equals
/// f_formula(n,k).value (self-checked).
ThreeGraph construct_odd(int n, int k);

/// Base graph of the even construction, for even k >= 4: vertices
/// x_1..x_{k-1} (ids 0..k-2), y_1..y_{k-1} (ids k-1..2k-3), z (id 2k-2);
/// edges all (x_i,y_j) except (x_i,y_i) with 2i > k, plus (x_i,z) and
/// (y_i,z) with 2i > k. Every degree is k-1 except deg(z) = k-2.
Graph even_base_graph(int k);

/// Extremal k-star-free 3-graph for even k >= 4, n >= 2k-1: triples meeting
/// V(base) in exactly one base edge, triples inside V(base) spanning >= 2
/// base edges, plus the k/2 completion triples {z, x_1, y_j} (1 <= j <= k/2).
/// Edge count is self-checked against f_formula(n,k).value
/// (consistency_error on mismatch).
ThreeGraph construct_even(int n, int k);

/// Dispatches on parity of k (k >= 3; n >= 2k for odd k, n >= 2k-1 for even).
ThreeGraph construct_star_free(int n, int k);

/// Returns true when (n,k) is accepted by construct_star_free.
bool construction_defined(int n, int k);

}  // namespace star3
