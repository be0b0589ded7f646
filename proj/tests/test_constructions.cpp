#include "doctest.h"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "star3/constructions.hpp"
#include "star3/star_search.hpp"

using namespace star3;

namespace {

// Independent restatement of the closed forms, frozen here so a library-side
// edit cannot silently drift.
int64_t expected_value(int64_t n, int64_t k) {
  if (k == 2) {
    switch (n % 4) {
      case 0: return n;
      case 1: return n - 1;
      default: return n - 2;
    }
  }
  if (k % 2 == 1) return (n - 2 * k) * k * (k - 1) + k * (k - 1) * (k - 2) / 3;
  return n * k * (2 * k - 3) / 2 - (2 * k * k * k - 9 * k + 6) / 2;
}

}  // namespace

TEST_CASE("closed-form edge-count values match frozen reference numbers") {
  // Small pair-degree cases (k = 2), n = 4..12.
  const int64_t small[] = {4, 4, 4, 5, 8, 8, 8, 9, 12};
  for (int n = 4; n <= 12; ++n) {
    CHECK(f_formula(n, 2).value == small[n - 4]);
  }
  CHECK(f_formula(3, 2).value == 1);

  // Frozen spot values for larger star bounds.
  CHECK(f_formula(20, 3).value == 86);
  CHECK(f_formula(20, 4).value == 151);
  CHECK(f_formula(25, 5).value == 320);
  CHECK(f_formula(30, 6).value == 618);
  CHECK(f_formula(31, 7).value == 784);

  // Dense sweep against the independent restatement above.
  for (int k = 2; k <= 9; ++k) {
    for (int n = std::max(3, 2 * k - 1); n <= 3 * k + 20; ++n) {
      CHECK(f_formula(n, k).value == expected_value(n, k));
    }
  }

  // Values use 64-bit arithmetic well past the vertex cap of the builders.
  CHECK(f_formula(1000000, 5).value == (1000000 - 10) * 20 + 20);
}

TEST_CASE("formula validity thresholds and regime flags are consistent") {
  CHECK(f_formula(51, 3).threshold_n == 51);
  CHECK_FALSE(f_formula(51, 3).in_regime);
  CHECK(f_formula(52, 3).in_regime);

  CHECK(f_formula(99, 4).threshold_n == 99);  // 2k^3 - 9k + 7
  CHECK_FALSE(f_formula(99, 4).in_regime);
  CHECK(f_formula(100, 4).in_regime);

  CHECK(f_formula(5, 5).threshold_n == 5 * 4 * 27 / 2);  // k(k-1)(5k+2)/2

  // k = 2 holds for every n >= 3.
  for (int n = 3; n <= 10; ++n) CHECK(f_formula(n, 2).in_regime);

  CHECK_THROWS_AS(f_formula(2, 2), invalid_parameter);
  CHECK_THROWS_AS(f_formula(10, 1), invalid_parameter);
}

TEST_CASE("the base graph of the even builder has the documented shape") {
  for (int k : {4, 6, 8}) {
    const Graph base = even_base_graph(k);
    CHECK(base.n() == 2 * k - 1);
    CHECK(base.m() == k * (2 * k - 3) / 2);
    std::vector<int> degrees = base.degree_sequence();  // descending
    REQUIRE(static_cast<int>(degrees.size()) == 2 * k - 1);
    for (int i = 0; i + 1 < static_cast<int>(degrees.size()); ++i) {
      CHECK(degrees[i] == k - 1);
    }
    CHECK(degrees.back() == k - 2);
    // No x-x, y-y edges: the graph restricted to either side is empty.
    for (int i = 0; i < k - 1; ++i)
      for (int j = i + 1; j < k - 1; ++j) {
        CHECK_FALSE(base.has_edge(i, j));                  // x side
        CHECK_FALSE(base.has_edge(k - 1 + i, k - 1 + j));  // y side
      }
  }
  CHECK_THROWS_AS(even_base_graph(3), invalid_parameter);
  CHECK_THROWS_AS(even_base_graph(5), invalid_parameter);
  CHECK_THROWS_AS(even_base_graph(2), invalid_parameter);
}

TEST_CASE("builders hit the closed-form edge count exactly") {
  CHECK(construct_odd(20, 3).m() == 86);
  CHECK(construct_even(20, 4).m() == 151);
  CHECK(construct_odd(25, 5).m() == 320);
  CHECK(construct_even(30, 6).m() == 618);
  CHECK(construct_odd(31, 7).m() == 784);
  // Corner case n = 2k: only the two disjoint k-sets remain.
  CHECK(construct_odd(6, 3).m() == 2);
  // Corner case n = 2k-1 for even k: everything lives inside the base span.
  CHECK(construct_even(7, 4).m() == f_formula(7, 4).value);

  for (int k = 3; k <= 8; ++k) {
    const int min_n = (k % 2 == 1) ? 2 * k : 2 * k - 1;
    for (int n : {min_n, min_n + 1, 2 * k + 3, 3 * k}) {
      if (n < min_n) continue;
      const ThreeGraph g = construct_star_free(n, k);
      CHECK(g.n() == n);
      CHECK(g.m() == f_formula(n, k).value);
    }
  }
}

TEST_CASE("builders produce graphs with no k-star and a full (k-1)-star somewhere") {
  struct Case {
    int n, k;
  };
  for (const Case c : {Case{6, 3}, Case{8, 3}, Case{20, 3}, Case{7, 4},
                       Case{9, 4}, Case{20, 4}, Case{10, 5}, Case{12, 5},
                       Case{13, 6}, Case{14, 7}, Case{16, 8}}) {
    const ThreeGraph g = construct_star_free(c.n, c.k);
    CHECK(is_star_free(g, c.k));
    CHECK(find_k_star(g, c.k) == std::nullopt);
    int best = 0;
    for (int v = 0; v < g.n(); ++v) best = std::max(best, max_star(g, v));
    CHECK(best <= c.k - 1);
  }

  // Once past the degenerate minimum order, the builders saturate the bound:
  // some vertex carries a full (k-1)-star.
  for (const Case c : {Case{20, 3}, Case{20, 4}, Case{25, 5}, Case{30, 6},
                       Case{31, 7}, Case{8, 3}, Case{9, 4}}) {
    const ThreeGraph g = construct_star_free(c.n, c.k);
    auto w = find_k_star(g, c.k - 1);
    REQUIRE(w.has_value());
    CHECK(verify_star_witness(g, *w, c.k - 1));
    CHECK_FALSE(verify_star_witness(g, *w, c.k));  // ray count must match k
  }
}

TEST_CASE("builders reject out-of-domain parameters") {
  CHECK_THROWS_AS(construct_odd(7, 4), invalid_parameter);   // even k
  CHECK_THROWS_AS(construct_odd(5, 3), invalid_parameter);   // n < 2k
  CHECK_THROWS_AS(construct_even(6, 4), invalid_parameter);  // n < 2k-1
  CHECK_THROWS_AS(construct_even(9, 5), invalid_parameter);  // odd k
  CHECK_THROWS_AS(construct_star_free(10, 2), invalid_parameter);
  CHECK_THROWS_AS(construct_odd(65, 3), size_limit);

  CHECK(construction_defined(6, 3));
  CHECK_FALSE(construction_defined(5, 3));
  CHECK(construction_defined(7, 4));
  CHECK_FALSE(construction_defined(6, 4));
  CHECK_FALSE(construction_defined(10, 2));
  CHECK_FALSE(construction_defined(65, 3));
}
