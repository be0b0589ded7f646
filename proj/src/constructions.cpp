#include "star3/constructions.hpp"

#include <string>
#include <vector>

#include "star3/errors.hpp"

namespace star3 {

FormulaResult f_formula(int n, int k) {
  if (k < 2) throw invalid_parameter("f_formula: k >= 2 required");
  if (n < 3) throw invalid_parameter("f_formula: n >= 3 required");
  FormulaResult r;
  const int64_t nn = n;
  const int64_t kk = k;
  if (k == 2) {
    switch (n % 4) {
      case 0: r.value = nn; break;
      case 1: r.value = nn - 1; break;
      default: r.value = nn - 2; break;
    }
    r.threshold_n = 2;  // valid for every n >= 3
  } else if (k % 2 == 1) {
    r.value = (nn - 2 * kk) * kk * (kk - 1) + 2 * binom(kk, 3);
    r.threshold_n = kk * (kk - 1) * (5 * kk + 2) / 2;
  } else {
    r.value = (nn * kk * (2 * kk - 3) - (2 * kk * kk * kk - 9 * kk + 6)) / 2;
    r.threshold_n = 2 * kk * kk * kk - 9 * kk + 7;
  }
  r.in_regime = nn > r.threshold_n;
  return r;
}

ThreeGraph construct_odd(int n, int k) {
  if (k < 3 || k % 2 == 0) {
    throw invalid_parameter("construct_odd: odd k >= 3 required");
  }
  if (n < 2 * k) throw invalid_parameter("construct_odd: n >= 2k required");
  // S = {0..k-1}, R = {k..2k-1}; a triple is an edge when it has >= 2
  // vertices in one of the two sets and none in the other.
  std::vector<Triple> edges;
  for (int w = 2; w < n; ++w) {
    for (int v = 1; v < w; ++v) {
      for (int u = 0; u < v; ++u) {
        int in_s = (u < k) + (v < k) + (w < k);
        int in_r = (u >= k && u < 2 * k) + (v >= k && v < 2 * k) +
                   (w >= k && w < 2 * k);
        if ((in_s >= 2 && in_r == 0) || (in_r >= 2 && in_s == 0)) {
          edges.push_back({u, v, w});
        }
      }
    }
  }
  ThreeGraph g(n, edges);
  int64_t expect = f_formula(n, k).value;
  if (g.m() != expect) {
    throw consistency_error("construct_odd(" + std::to_string(n) + "," +
                            std::to_string(k) + "): built " +
                            std::to_string(g.m()) + " edges, formula says " +
                            std::to_string(expect));
  }
  return g;
}

Graph even_base_graph(int k) {
  if (k < 4 || k % 2 == 1) {
    throw invalid_parameter("even_base_graph: even k >= 4 required");
  }
  // ids: x_i -> i-1, y_i -> (k-1)+(i-1) for i = 1..k-1, z -> 2k-2.
  const int z = 2 * k - 2;
  auto x = [k](int i) { return i - 1; };
  auto y = [k](int i) { return (k - 1) + (i - 1); };
  std::vector<Pair> edges;
  for (int i = 1; i <= k - 1; ++i) {
    for (int j = 1; j <= k - 1; ++j) {
      if (i == j && 2 * i > k) continue;
      edges.push_back(make_pair_sorted(x(i), y(j)));
    }
  }
  for (int i = 1; i <= k - 1; ++i) {
    if (2 * i > k) {
      edges.push_back(make_pair_sorted(x(i), z));
      edges.push_back(make_pair_sorted(y(i), z));
    }
  }
  return Graph(2 * k - 1, edges);
}

ThreeGraph construct_even(int n, int k) {
  if (k < 4 || k % 2 == 1) {
    throw invalid_parameter("construct_even: even k >= 4 required");
  }
  if (n < 2 * k - 1) {
    throw invalid_parameter("construct_even: n >= 2k-1 required");
  }
  const Graph base = even_base_graph(k);
  const int b = base.n();  // 2k-1, occupying ids 0..2k-2
  std::vector<Triple> edges;
  for (int w = 2; w < n; ++w) {
    for (int v = 1; v < w; ++v) {
      for (int u = 0; u < v; ++u) {
        int inside = (u < b) + (v < b) + (w < b);
        if (inside == 2) {
          // u < v < w and the two inside vertices are u, v.
          if (base.has_edge(u, v)) edges.push_back({u, v, w});
        } else if (inside == 3) {
          int span = base.has_edge(u, v) + base.has_edge(u, w) +
                     base.has_edge(v, w);
          if (span >= 2) edges.push_back({u, v, w});
        }
      }
    }
  }
  // Completion triples {z, x_1, y_j} for 1 <= j <= k/2. Each spans exactly
  // one base edge (x_1,y_j), so none coincides with the triples above.
  const int z = 2 * k - 2;
  const int x1 = 0;
  for (int j = 1; j <= k / 2; ++j) {
    int yj = (k - 1) + (j - 1);
    edges.push_back(make_triple(z, x1, yj));
  }
  ThreeGraph g(n, edges);
  int64_t expect = f_formula(n, k).value;
  if (g.m() != expect) {
    throw consistency_error("construct_even(" + std::to_string(n) + "," +
                            std::to_string(k) + "): built " +
                            std::to_string(g.m()) + " edges, formula says " +
                            std::to_string(expect));
  }
  return g;
}

ThreeGraph construct_star_free(int n, int k) {
  if (k < 3) {
    throw invalid_parameter("construct_star_free: k >= 3 required");
  }
  return k % 2 == 1 ? construct_odd(n, k) : construct_even(n, k);
}

bool construction_defined(int n, int k) {
  if (n < 3 || n > kMaxVertices || k < 3) return false;
  return k % 2 == 1 ? n >= 2 * k : n >= 2 * k - 1;
}

}  // namespace star3
