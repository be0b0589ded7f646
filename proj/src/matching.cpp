#include "star3/matching.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <random>

#include "star3/errors.hpp"

namespace star3 {

namespace {

uint64_t full_mask(int n) {
  return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

}  // namespace

namespace detail {

// Blossom-contracting augmenting search (Edmonds). Alternating trees are
// grown from each exposed vertex; odd cycles are contracted by rebasing
// vertices onto the cycle's base, so augmenting paths through blossoms are
// recovered by the parent links laid down in mark_path.
int max_matching_masks(const uint64_t* adj, int n, uint64_t active,
                       int8_t* mate) {
  std::array<int8_t, kMaxVertices> par{};
  std::array<int8_t, kMaxVertices> base{};
  std::array<uint8_t, kMaxVertices> used{};
  std::array<uint8_t, kMaxVertices> in_blossom{};
  std::array<int8_t, kMaxVertices> queue{};

  auto lowest_common_base = [&](int a, int b) {
    std::array<uint8_t, kMaxVertices> seen{};
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (mate[a] < 0) break;
      a = par[mate[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = par[mate[b]];
    }
  };

  auto mark_path = [&](int v, int stop, int child) {
    while (base[v] != stop) {
      in_blossom[base[v]] = 1;
      in_blossom[base[mate[v]]] = 1;
      par[v] = static_cast<int8_t>(child);
      child = mate[v];
      v = par[mate[v]];
    }
  };

  auto find_path = [&](int root) {
    for (int i = 0; i < n; ++i) {
      used[i] = 0;
      par[i] = -1;
      base[i] = static_cast<int8_t>(i);
    }
    used[root] = 1;
    int head = 0;
    int tail = 0;
    queue[tail++] = static_cast<int8_t>(root);
    while (head < tail) {
      int v = queue[head++];
      uint64_t nb = adj[v] & active;
      while (nb != 0) {
        int to = std::countr_zero(nb);
        nb &= nb - 1;
        if (base[v] == base[to] || mate[v] == to) continue;
        if (to == root || (mate[to] >= 0 && par[mate[to]] >= 0)) {
          // Odd cycle: contract the blossom onto its base.
          int cur = lowest_common_base(v, to);
          for (int i = 0; i < n; ++i) in_blossom[i] = 0;
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (((active >> i) & 1) != 0 && in_blossom[base[i]]) {
              base[i] = static_cast<int8_t>(cur);
              if (!used[i]) {
                used[i] = 1;
                queue[tail++] = static_cast<int8_t>(i);
              }
            }
          }
        } else if (par[to] < 0) {
          par[to] = static_cast<int8_t>(v);
          if (mate[to] < 0) {
            // Exposed vertex reached: flip matched/unmatched along the path.
            int u = to;
            while (u >= 0) {
              int pv = par[u];
              int ppv = mate[pv];
              mate[u] = static_cast<int8_t>(pv);
              mate[pv] = static_cast<int8_t>(u);
              u = ppv;
            }
            return true;
          }
          used[mate[to]] = 1;
          queue[tail++] = mate[to];
        }
      }
    }
    return false;
  };

  // Greedy seeding: cheap, and it removes most augmenting phases.
  for (uint64_t vm = active; vm != 0; vm &= vm - 1) {
    int v = std::countr_zero(vm);
    if (mate[v] >= 0) continue;
    uint64_t cand = adj[v] & active;
    while (cand != 0) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (mate[w] < 0) {
        mate[v] = static_cast<int8_t>(w);
        mate[w] = static_cast<int8_t>(v);
        break;
      }
    }
  }
  for (uint64_t vm = active; vm != 0; vm &= vm - 1) {
    int v = std::countr_zero(vm);
    if (mate[v] < 0) find_path(v);
  }
  int matched = 0;
  for (uint64_t vm = active; vm != 0; vm &= vm - 1) {
    int v = std::countr_zero(vm);
    if (mate[v] > v) ++matched;
  }
  return matched;
}

}  // namespace detail

namespace {

// Factor-criticality on raw adjacency rows: n odd and every single-vertex
// deletion leaves a perfectly matchable graph.
bool factor_critical_masks(const uint64_t* adj, int n) {
  if (n % 2 == 0) return false;
  uint64_t all = full_mask(n);
  std::array<int8_t, kMaxVertices> mate{};
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < n; ++i) mate[i] = -1;
    uint64_t active = all & ~(1ULL << v);
    if (detail::max_matching_masks(adj, n, active, mate.data()) != (n - 1) / 2)
      return false;
  }
  return true;
}

}  // namespace

MatchingResult max_matching(const Graph& g) {
  MatchingResult result;
  int n = g.n();
  if (n == 0) return result;
  std::array<int8_t, kMaxVertices> mate{};
  for (int i = 0; i < n; ++i) mate[i] = -1;
  result.size = detail::max_matching_masks(g.adjacency().data(), n,
                                           full_mask(n), mate.data());
  for (int v = 0; v < n; ++v) {
    if (mate[v] > v) result.pairs.push_back({v, mate[v]});
  }
  return result;
}

int matching_number(const Graph& g) { return max_matching(g).size; }

bool has_perfect_matching(const Graph& g) {
  return g.n() % 2 == 0 && matching_number(g) == g.n() / 2;
}

int odd_components(const Graph& g, uint64_t removed_mask) {
  int n = g.n();
  uint64_t remaining = full_mask(n) & ~removed_mask;
  const std::vector<uint64_t>& adj = g.adjacency();
  int odd = 0;
  while (remaining != 0) {
    uint64_t comp = 0;
    uint64_t frontier = remaining & (~remaining + 1);  // lowest live vertex
    while (frontier != 0) {
      comp |= frontier;
      uint64_t next = 0;
      for (uint64_t fm = frontier; fm != 0; fm &= fm - 1) {
        next |= adj[std::countr_zero(fm)];
      }
      frontier = next & remaining & ~comp;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    remaining &= ~comp;
  }
  return odd;
}

std::optional<std::vector<int>> tutte_witness(const Graph& g) {
  if (has_perfect_matching(g)) return std::nullopt;
  int n = g.n();
  if (n > 16) {
    throw size_limit("tutte_witness: exhaustive subset scan requires n <= 16");
  }
  // Smallest witness first; within a size, numerically smallest mask first.
  for (int s = 0; s <= n; ++s) {
    if (s == 0) {
      if (odd_components(g, 0) > 0) return std::vector<int>{};
      continue;
    }
    uint64_t mask = (1ULL << s) - 1;
    while (mask < (1ULL << n)) {
      if (odd_components(g, mask) > s) {
        std::vector<int> witness;
        for (uint64_t m = mask; m != 0; m &= m - 1) {
          witness.push_back(std::countr_zero(m));
        }
        return witness;
      }
      uint64_t c = mask & (~mask + 1);
      uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;  // next mask with s bits (Gosper)
    }
  }
  throw consistency_error(
      "tutte_witness: no witness for a graph without a perfect matching");
}

bool is_factor_critical(const Graph& g) {
  return factor_critical_masks(g.adjacency().data(), g.n());
}

std::optional<std::vector<int>> hamiltonian_cycle(const Graph& g) {
  int n = g.n();
  if (n < 3) throw invalid_parameter("hamiltonian_cycle: n >= 3 required");
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return std::nullopt;
  }
  const std::vector<uint64_t>& adj = g.adjacency();
  std::vector<int> path;
  path.reserve(n);
  path.push_back(0);
  uint64_t visited = 1;
  auto extend = [&](auto&& self, int v) -> bool {
    if (static_cast<int>(path.size()) == n) return (adj[v] & 1ULL) != 0;
    for (uint64_t cand = adj[v] & ~visited; cand != 0; cand &= cand - 1) {
      int w = std::countr_zero(cand);
      visited |= 1ULL << w;
      path.push_back(w);
      if (self(self, w)) return true;
      path.pop_back();
      visited &= ~(1ULL << w);
    }
    return false;
  };
  if (extend(extend, 0)) return path;
  return std::nullopt;
}

bool is_graphical(std::vector<int> seq) {
  int n = static_cast<int>(seq.size());
  long long sum = 0;
  for (int d : seq) {
    if (d < 0 || d > n - 1) return false;
    sum += d;
  }
  if (sum % 2 != 0) return false;
  std::sort(seq.begin(), seq.end(), std::greater<>());
  long long prefix = 0;
  for (int p = 1; p <= n; ++p) {
    prefix += seq[p - 1];
    long long rhs = static_cast<long long>(p) * (p - 1);
    for (int i = p; i < n; ++i) rhs += std::min(seq[i], p);
    if (prefix > rhs) return false;
  }
  return true;
}

namespace {

// Enumerates every labeled graph whose vertex v has degree exactly d[v], by
// committing the neighbor set of each vertex among higher-indexed vertices
// in ascending order, with an Erdos-Gallai realizability cut on the residual
// degrees at each vertex boundary.
class PositionalEnumerator {
 public:
  PositionalEnumerator(const std::vector<int>& d,
                       const std::function<bool(const Graph&)>& cb)
      : n_(static_cast<int>(d.size())), r_(d), cb_(cb) {}

  // Returns false if the callback requested a stop.
  bool run() {
    vertex(0);
    return !stopped_;
  }

 private:
  void vertex(int v) {
    if (stopped_) return;
    if (v == n_) {
      Graph g(n_, edges_);
      if (!cb_(g)) stopped_ = true;
      return;
    }
    if (!suffix_realizable(v)) return;
    int need = r_[v];
    r_[v] = 0;
    choose(v, v + 1, need);
    r_[v] = need;
  }

  void choose(int v, int next, int need) {
    if (stopped_) return;
    if (need == 0) {
      vertex(v + 1);
      return;
    }
    for (int w = next; w <= n_ - need; ++w) {
      if (r_[w] <= 0) continue;
      --r_[w];
      edges_.push_back({v, w});
      choose(v, w + 1, need - 1);
      edges_.pop_back();
      ++r_[w];
      if (stopped_) return;
    }
  }

  bool suffix_realizable(int v) {
    buf_.assign(r_.begin() + v, r_.end());
    std::sort(buf_.begin(), buf_.end(), std::greater<>());
    int m = static_cast<int>(buf_.size());
    long long prefix = 0;
    for (int p = 1; p <= m; ++p) {
      if (buf_[p - 1] > m - 1) return false;
      prefix += buf_[p - 1];
      long long rhs = static_cast<long long>(p) * (p - 1);
      for (int i = p; i < m; ++i) rhs += std::min(buf_[i], p);
      if (prefix > rhs) return false;
    }
    return true;
  }

  int n_;
  std::vector<int> r_;  // residual degrees
  std::vector<Pair> edges_;
  std::vector<int> buf_;
  const std::function<bool(const Graph&)>& cb_;
  bool stopped_ = false;
};

}  // namespace

void for_each_graph_with_degree_sequence(
    std::vector<int> seq, const std::function<bool(const Graph&)>& cb) {
  if (!is_graphical(seq)) {
    throw invalid_parameter(
        "for_each_graph_with_degree_sequence: sequence is not graphical");
  }
  long long sum = std::accumulate(seq.begin(), seq.end(), 0LL);
  if (sum > 40) {
    throw size_limit(
        "for_each_graph_with_degree_sequence: degree sum > 40; use sampling");
  }
  // Degree-multiset semantics: every distinct positional assignment of the
  // multiset, each enumerated independently. A labeled graph has exactly one
  // positional degree vector, so the union is disjoint.
  std::sort(seq.begin(), seq.end());
  do {
    PositionalEnumerator e(seq, cb);
    if (!e.run()) return;
  } while (std::next_permutation(seq.begin(), seq.end()));
}

std::vector<Graph> sample_graphs_with_degree_sequence(std::vector<int> seq,
                                                      int count,
                                                      uint64_t seed) {
  if (!is_graphical(seq)) {
    throw invalid_parameter(
        "sample_graphs_with_degree_sequence: sequence is not graphical");
  }
  if (count < 0) {
    throw invalid_parameter("sample_graphs_with_degree_sequence: count < 0");
  }
  int n = static_cast<int>(seq.size());

  // Havel-Hakimi realization: repeatedly satisfy the vertex of largest
  // residual degree from the next-largest ones.
  std::vector<Pair> edges;
  std::vector<uint64_t> adj(std::max(n, 1), 0);
  {
    std::vector<int> residual = seq;
    std::vector<int> order(n);
    for (;;) {
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return residual[a] > residual[b];
      });
      int v = order.empty() ? -1 : order[0];
      if (v < 0 || residual[v] == 0) break;
      int need = residual[v];
      residual[v] = 0;
      for (int i = 1; i <= need; ++i) {
        if (i >= n || residual[order[i]] <= 0) {
          throw consistency_error(
              "sample_graphs_with_degree_sequence: realization failed on a "
              "graphical sequence");
        }
        int w = order[i];
        --residual[w];
        edges.push_back(make_pair_sorted(v, w));
        adj[v] |= 1ULL << w;
        adj[w] |= 1ULL << v;
      }
    }
  }

  std::mt19937_64 rng(seed);
  int m = static_cast<int>(edges.size());
  std::vector<Graph> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    if (m >= 2) {
      // Fixed number of double-edge-switch attempts between samples keeps
      // the walk deterministic for a given seed.
      int attempts = 20 * m;
      std::uniform_int_distribution<int> pick(0, m - 1);
      std::uniform_int_distribution<int> coin(0, 1);
      for (int t = 0; t < attempts; ++t) {
        int i = pick(rng);
        int j = pick(rng);
        int flip = coin(rng);
        if (i == j) continue;
        int a = edges[i][0], b = edges[i][1];
        int c = edges[j][0], d = edges[j][1];
        if (flip == 1) std::swap(c, d);
        // Replace {a,b},{c,d} by {a,c},{b,d} when that stays simple.
        if (a == c || a == d || b == c || b == d) continue;
        if ((adj[a] >> c) & 1ULL) continue;
        if ((adj[b] >> d) & 1ULL) continue;
        adj[a] &= ~(1ULL << b);
        adj[b] &= ~(1ULL << a);
        adj[c] &= ~(1ULL << d);
        adj[d] &= ~(1ULL << c);
        adj[a] |= 1ULL << c;
        adj[c] |= 1ULL << a;
        adj[b] |= 1ULL << d;
        adj[d] |= 1ULL << b;
        edges[i] = make_pair_sorted(a, c);
        edges[j] = make_pair_sorted(b, d);
      }
    }
    out.emplace_back(n, edges);
  }
  return out;
}

AuditReport audit_degree_critical(int k, bool exhaustive, int sample_count,
                                  uint64_t seed) {
  if (k < 5) throw invalid_parameter("audit_degree_critical: k >= 5 required");
  if (!exhaustive && sample_count <= 0) {
    throw invalid_parameter("audit_degree_critical: sample_count must be > 0");
  }
  AuditReport report;
  uint64_t gen_index = 0;
  uint64_t seq_index = 0;  // sub-seed scheme: per-sequence seed = seed ^ index
  for (int q = 1; q <= 2 * k - 1; q += 2) {
    for (int variant = 0; variant < 2; ++variant) {
      std::vector<int> seq(q, k - 1);
      if (variant == 1) seq.back() = k - 2;
      if (!is_graphical(seq)) continue;

      auto check = [&](const Graph& g) {
        const std::vector<uint64_t>& adj = g.adjacency();
        std::array<uint64_t, kMaxVertices> rows{};
        for (const Pair& f : g.edges()) {
          for (int i = 0; i < q; ++i) rows[i] = adj[i];
          rows[f[0]] &= ~(1ULL << f[1]);
          rows[f[1]] &= ~(1ULL << f[0]);
          if (!factor_critical_masks(rows.data(), q)) {
            report.violations.push_back({gen_index, g, f});
          }
        }
        ++report.checked;
        ++gen_index;
        return true;
      };

      if (exhaustive) {
        for_each_graph_with_degree_sequence(seq, check);
      } else {
        for (const Graph& g :
             sample_graphs_with_degree_sequence(seq, sample_count,
                                                seed ^ seq_index)) {
          check(g);
        }
      }
      ++seq_index;
    }
  }
  return report;
}

AuditReport audit_hamiltonicity(std::vector<int> seq) {
  AuditReport report;
  uint64_t gen_index = 0;
  for_each_graph_with_degree_sequence(
      std::move(seq), [&](const Graph& g) {
        if (!hamiltonian_cycle(g).has_value()) {
          report.violations.push_back({gen_index, g, std::nullopt});
        }
        ++report.checked;
        ++gen_index;
        return true;
      });
  return report;
}

}  // namespace star3
