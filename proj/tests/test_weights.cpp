#include "doctest.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "star3/basics.hpp"
#include "star3/constructions.hpp"
#include "star3/star_search.hpp"
#include "star3/three_graph.hpp"
#include "star3/weights.hpp"

using namespace star3;

namespace {

// Independent restatement of the edge-weight rule: classes recomputed
// straight from pair frequencies, same ordering contract (frequency
// descending, colex rank ascending on ties).
std::array<int64_t, 3> oracle_weights(const ThreeGraph& f, int k,
                                      const Triple& t) {
  struct E {
    int slot;
    int z;
    uint32_t rank;
  };
  std::array<E, 3> e;
  for (int i = 0; i < 3; ++i) {
    int a = t[(i + 1) % 3];
    int b = t[(i + 2) % 3];
    if (a > b) std::swap(a, b);
    e[static_cast<size_t>(i)] = {i, f.pair_frequency(a, b),
                                 static_cast<uint32_t>(pair_rank(a, b))};
  }
  std::sort(e.begin(), e.end(), [](const E& x, const E& y) {
    if (x.z != y.z) return x.z > y.z;
    return x.rank < y.rank;
  });
  auto cls = [k](int z) { return z >= 2 * k - 1 ? 0 : (z >= k ? 1 : 2); };
  const int top = cls(e[0].z);
  const int mid = cls(e[1].z);
  const int low = cls(e[2].z);
  std::array<int64_t, 3> by_order{};
  if (top != 0 || low != 2) {
    by_order = {2, 2, 2};
  } else if (mid != 2) {
    by_order = {3, 3, 0};
  } else {
    by_order = {6, 0, 0};
  }
  std::array<int64_t, 3> out{};
  for (int i = 0; i < 3; ++i) out[e[static_cast<size_t>(i)].slot] = by_order[static_cast<size_t>(i)];
  return out;
}

ThreeGraph random_three_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Triple> edges;
  for (int w = 2; w < n; ++w)
    for (int v = 1; v < w; ++v)
      for (int u = 0; u < v; ++u)
        if (coin(rng)) edges.push_back(make_triple(u, v, w));
  return ThreeGraph(n, edges);
}

ThreeGraph complete_three_graph(int n) {
  std::vector<Triple> edges;
  for (int id = 0; id < binom(n, 3); ++id) edges.push_back(triple_unrank(id, n));
  return ThreeGraph(n, edges);
}

}  // namespace

TEST_CASE("pair classification applies the frequency thresholds") {
  // z(0,1) = 5 via five triples through the pair; all other pairs stay thin.
  ThreeGraph f(7, {make_triple(0, 1, 2), make_triple(0, 1, 3),
                   make_triple(0, 1, 4), make_triple(0, 1, 5),
                   make_triple(0, 1, 6)});
  PairClassTable t3 = classify_pairs(f, 3);
  CHECK(t3.at(0, 1) == PairClass::kA);  // 5 >= 2k-1
  CHECK(t3.at(1, 0) == PairClass::kA);  // symmetric accessor
  CHECK(t3.at(0, 2) == PairClass::kC);  // z = 1
  CHECK(t3.at(2, 3) == PairClass::kC);  // z = 0
  PairClassTable t5 = classify_pairs(f, 5);
  CHECK(t5.at(0, 1) == PairClass::kB);  // 5 <= z <= 8 at k = 5
  PairClassTable t6 = classify_pairs(f, 6);
  CHECK(t6.at(0, 1) == PairClass::kC);  // z < 6

  std::array<int, 3> h = t3.histogram_at_vertex(0);
  CHECK(h[0] == 1);  // {0,1}
  CHECK(h[1] == 0);
  CHECK(h[2] == 5);  // {0,2}..{0,6}
  CHECK(h[0] + h[1] + h[2] == f.n() - 1);

  CHECK(to_char(PairClass::kA) == 'A');
  CHECK(to_char(PairClass::kB) == 'B');
  CHECK(to_char(PairClass::kC) == 'C');
  CHECK_THROWS_AS(classify_pairs(f, 1), invalid_parameter);
}

TEST_CASE("each weight rule branch fires on a crafted instance") {
  const int k = 3;

  // One dominant pair, two thin ones: whole unit to the dominant pair, which
  // sits opposite vertex 2 in the probed edge.
  ThreeGraph heavy(7, {make_triple(0, 1, 2), make_triple(0, 1, 3),
                       make_triple(0, 1, 4), make_triple(0, 1, 5),
                       make_triple(0, 1, 6)});
  auto w = triple_weights_sixths(heavy, classify_pairs(heavy, k),
                                 make_triple(0, 1, 2));
  CHECK(w == std::array<int64_t, 3>{0, 0, 6});

  // Dominant pair {0,1}, middling pair {0,2}, thin pair {1,2}: halves to the
  // top two (opposite vertices 2 and 1), nothing to the thin one.
  ThreeGraph mixed(7, {make_triple(0, 1, 2), make_triple(0, 1, 3),
                       make_triple(0, 1, 4), make_triple(0, 1, 5),
                       make_triple(0, 1, 6), make_triple(0, 2, 3),
                       make_triple(0, 2, 4)});
  w = triple_weights_sixths(mixed, classify_pairs(mixed, k),
                            make_triple(0, 1, 2));
  CHECK(w == std::array<int64_t, 3>{0, 3, 3});

  // Everything dense: thirds.
  ThreeGraph dense = complete_three_graph(7);
  w = triple_weights_sixths(dense, classify_pairs(dense, k),
                            make_triple(0, 1, 2));
  CHECK(w == std::array<int64_t, 3>{2, 2, 2});

  // Everything thin: also thirds.
  ThreeGraph thin(3, {make_triple(0, 1, 2)});
  w = triple_weights_sixths(thin, classify_pairs(thin, k),
                            make_triple(0, 1, 2));
  CHECK(w == std::array<int64_t, 3>{2, 2, 2});

  // Probing a non-edge is a usage error.
  CHECK_THROWS_AS(triple_weights_sixths(heavy, classify_pairs(heavy, k),
                                        make_triple(2, 3, 4)),
                  invalid_parameter);
}

TEST_CASE("edge weights match the independent restatement on random graphs") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);  // 5..9
    ThreeGraph f = random_three_graph(n, 0.15 + 0.2 * (trial % 4), rng);
    for (int k : {2, 3, 4, 5}) {
      PairClassTable classes = classify_pairs(f, k);
      for (const Triple& t : f.edges()) {
        auto got = triple_weights_sixths(f, classes, t);
        auto want = oracle_weights(f, k, t);
        REQUIRE(got == want);
        REQUIRE(got[0] + got[1] + got[2] == 6);  // one unit per edge
      }
    }
  }
}

TEST_CASE("vertex weights accumulate edge weights and sum to six per edge") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 6);  // 5..10
    ThreeGraph f = random_three_graph(n, 0.3, rng);
    for (int k : {3, 4}) {
      WeightTable table = vertex_weights(f, k);
      REQUIRE(static_cast<int>(table.w_sixths.size()) == n);
      REQUIRE(table.total_sixths == 6 * static_cast<int64_t>(f.m()));

      PairClassTable classes = classify_pairs(f, k);
      std::vector<int64_t> manual(static_cast<size_t>(n), 0);
      for (const Triple& t : f.edges()) {
        auto w = triple_weights_sixths(f, classes, t);
        for (int i = 0; i < 3; ++i) manual[static_cast<size_t>(t[i])] += w[i];
      }
      int64_t total = 0;
      for (int v = 0; v < n; ++v) {
        REQUIRE(table.w_sixths[static_cast<size_t>(v)] == manual[static_cast<size_t>(v)]);
        REQUIRE(table.w_sixths[static_cast<size_t>(v)] >= 0);
        total += table.w_sixths[static_cast<size_t>(v)];
      }
      REQUIRE(total == table.total_sixths);
    }
  }
}

TEST_CASE("weight bounds hold with structure witnesses on the odd builder") {
  const int k = 3;
  const ThreeGraph g = construct_odd(20, k);
  WeightAuditReport rep = audit_weight_lemma(g, k);
  CHECK(rep.ok());
  CHECK(rep.all_hard_bounds_hold);
  CHECK(rep.all_witnesses_found);
  CHECK(rep.all_even_bounds_hold);  // vacuous for odd k
  REQUIRE(static_cast<int>(rep.per_vertex.size()) == 20);

  int saturated = 0;
  for (const VertexAudit& row : rep.per_vertex) {
    CHECK(row.hard_bound_sixths == 6 * k * (k - 1));
    CHECK(row.even_bound_sixths == 0);
    CHECK(row.even_bound_ok);
    CHECK(row.w_sixths <= row.hard_bound_sixths);
    CHECK(row.slack_threshold_sixths == 6 * k * (k - 1) - 4);  // two thirds
    const int histogram_total =
        row.class_histogram[0] + row.class_histogram[1] + row.class_histogram[2];
    CHECK(histogram_total == 19);
    if (row.above_slack) {
      ++saturated;
      REQUIRE(row.witness.kind == WitnessKind::kTwoDisjointKk);
      REQUIRE(static_cast<int>(row.witness.f0.size()) == k);
      REQUIRE(static_cast<int>(row.witness.component_b.size()) == k);
      uint64_t seen = 0;
      for (int x : row.witness.f0) seen |= 1ULL << x;
      for (int x : row.witness.component_b) seen |= 1ULL << x;
      CHECK(std::popcount(seen) == 2 * k);      // disjoint k-sets
      CHECK((seen >> row.v & 1) == 0);          // not through the vertex itself
    }
  }
  // The vertices away from the two special k-sets meet the bound exactly.
  CHECK(saturated >= 14);
}

TEST_CASE("weight bounds hold with structure witnesses on the even builder") {
  const int k = 4;
  const ThreeGraph g = construct_even(20, k);
  WeightAuditReport rep = audit_weight_lemma(g, k);
  CHECK(rep.ok());
  CHECK(rep.all_even_bounds_hold);
  REQUIRE(static_cast<int>(rep.per_vertex.size()) == 20);

  int structured = 0;
  for (const VertexAudit& row : rep.per_vertex) {
    CHECK(row.hard_bound_sixths == 6 * k * (k - 1));            // 72
    CHECK(row.even_bound_sixths == 6 * k * k - 9 * k);          // 60
    CHECK(row.slack_threshold_sixths == row.even_bound_sixths - 3);  // half
    CHECK(row.w_sixths <= row.even_bound_sixths);
    if (row.above_slack) {
      ++structured;
      REQUIRE(row.witness.kind != WitnessKind::kNone);
      if (row.witness.kind == WitnessKind::kConditionsABC) {
        const int s = static_cast<int>(row.witness.s.size());
        CHECK(2 * s <= k - 2);
        CHECK(static_cast<int>(row.witness.f0.size()) == 2 * k - 1 - 2 * s);
        CHECK(static_cast<int>(row.witness.star_centers.size()) <= s);
      }
    }
  }
  // Vertices outside the base span hit the even bound exactly.
  CHECK(structured >= 13);
}

TEST_CASE("weight audits are rejected when a k-star is present") {
  ThreeGraph dense = complete_three_graph(7);
  REQUIRE_FALSE(is_star_free(dense, 3));
  CHECK_THROWS_AS(audit_weight_lemma(dense, 3), precondition_error);
}

TEST_CASE("weight audits run clean across a random star-free corpus") {
  for (int k : {3, 4, 5}) {
    for (uint64_t seed = 1; seed <= 12; ++seed) {
      const int n = 8 + static_cast<int>(seed % 3);  // 8..10
      ThreeGraph g = random_star_free(n, k, seed, 0.6);
      WeightAuditReport rep = audit_weight_lemma(g, k);
      CHECK(rep.all_hard_bounds_hold);
      CHECK(rep.all_witnesses_found);
      WeightTable table = vertex_weights(g, k);
      for (int v = 0; v < n; ++v) {
        REQUIRE(rep.per_vertex[static_cast<size_t>(v)].w_sixths ==
                table.w_sixths[static_cast<size_t>(v)]);
      }
    }
  }
}
