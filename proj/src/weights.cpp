#include "star3/weights.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>

#include "star3/errors.hpp"
#include "star3/matching.hpp"
#include "star3/star_search.hpp"

namespace star3 {

char to_char(PairClass c) {
  switch (c) {
    case PairClass::kA: return 'A';
    case PairClass::kB: return 'B';
    case PairClass::kC: return 'C';
  }
  return '?';
}

PairClass PairClassTable::at(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
    throw invalid_parameter("PairClassTable::at: bad pair");
  }
  if (u > v) std::swap(u, v);
  return cls[pair_rank(u, v)];
}

std::array<int, 3> PairClassTable::histogram_at_vertex(int v) const {
  std::array<int, 3> h{0, 0, 0};
  for (int u = 0; u < n; ++u) {
    if (u == v) continue;
    ++h[static_cast<int>(at(u, v))];
  }
  return h;
}

PairClassTable classify_pairs(const ThreeGraph& f, int k) {
  if (k < 2) throw invalid_parameter("classify_pairs: k >= 2 required");
  PairClassTable table;
  table.n = f.n();
  table.k = k;
  table.cls.resize(static_cast<size_t>(binom(f.n(), 2)));
  for (int v = 1; v < f.n(); ++v) {
    for (int u = 0; u < v; ++u) {
      int z = f.pair_frequency(u, v);
      PairClass c = z >= 2 * k - 1 ? PairClass::kA
                    : z >= k       ? PairClass::kB
                                   : PairClass::kC;
      table.cls[pair_rank(u, v)] = c;
    }
  }
  return table;
}

std::array<int64_t, 3> triple_weights_sixths(const ThreeGraph& f,
                                             const PairClassTable& classes,
                                             const Triple& t) {
  if (!f.has_edge(t)) {
    throw invalid_parameter("triple_weights_sixths: T is not an edge");
  }
  // Pair opposite t[i], its frequency, its class, and the slot i.
  struct Entry {
    int slot;
    int z;
    uint32_t rank;
    PairClass cls;
  };
  std::array<Entry, 3> e;
  for (int i = 0; i < 3; ++i) {
    int a = t[(i + 1) % 3];
    int b = t[(i + 2) % 3];
    if (a > b) std::swap(a, b);
    e[i] = {i, f.pair_frequency(a, b), pair_rank(a, b), classes.at(a, b)};
  }
  // z descending; ties by pair colex rank (classes agree on ties, so the
  // tie-break cannot change the weights).
  std::sort(e.begin(), e.end(), [](const Entry& x, const Entry& y) {
    if (x.z != y.z) return x.z > y.z;
    return x.rank < y.rank;
  });
  bool has_a = false, has_c = false;
  for (const Entry& x : e) {
    has_a = has_a || x.cls == PairClass::kA;
    has_c = has_c || x.cls == PairClass::kC;
  }
  std::array<int64_t, 3> by_order{};
  if (!has_a || !has_c) {
    by_order = {2, 2, 2};  // all in A+B or all in B+C: thirds
  } else if (e[1].cls != PairClass::kC) {
    by_order = {3, 3, 0};  // p1 in A, p2 in A+B, p3 in C: halves
  } else {
    by_order = {6, 0, 0};  // p1 in A, p2 and p3 in C: all to p1
  }
  std::array<int64_t, 3> out{};
  for (int i = 0; i < 3; ++i) out[e[i].slot] = by_order[i];
  return out;
}

WeightTable vertex_weights(const ThreeGraph& f, int k) {
  PairClassTable classes = classify_pairs(f, k);
  WeightTable table;
  table.k = k;
  table.w_sixths.assign(f.n(), 0);
  for (const Triple& t : f.edges()) {
    std::array<int64_t, 3> w = triple_weights_sixths(f, classes, t);
    for (int i = 0; i < 3; ++i) table.w_sixths[t[i]] += w[i];
    table.total_sixths += w[0] + w[1] + w[2];
  }
  return table;
}

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::kNone: return "none";
    case WitnessKind::kTwoDisjointKk: return "two-disjoint-Kk";
    case WitnessKind::kCliquePlusCritical: return "clique-plus-critical";
    case WitnessKind::kConditionsABC: return "conditions-abc";
  }
  return "unknown";
}

namespace {

// Induced subgraph on the masked vertices; labels compose so they keep
// pointing at the outermost parent ids.
Graph induced_subgraph(const Graph& g, uint64_t keep) {
  std::vector<int> verts;
  for (uint64_t m = keep; m != 0; m &= m - 1) {
    verts.push_back(std::countr_zero(m));
  }
  std::vector<int> local(g.n(), -1);
  std::vector<int> labels(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    local[verts[i]] = static_cast<int>(i);
    labels[i] = g.label_of(verts[i]);
  }
  std::vector<Pair> edges;
  for (const Pair& e : g.edges()) {
    if (local[e[0]] >= 0 && local[e[1]] >= 0) {
      edges.push_back({local[e[0]], local[e[1]]});
    }
  }
  return Graph(static_cast<int>(verts.size()), edges, std::move(labels));
}

// Connected components of the given vertex mask, each as an ascending list
// of local ids; components ordered by smallest vertex.
std::vector<std::vector<int>> components_in(const Graph& g, uint64_t mask) {
  std::vector<std::vector<int>> comps;
  uint64_t remaining = mask;
  while (remaining != 0) {
    uint64_t comp = 0;
    uint64_t frontier = remaining & (~remaining + 1);
    while (frontier != 0) {
      comp |= frontier;
      uint64_t next = 0;
      for (uint64_t fm = frontier; fm != 0; fm &= fm - 1) {
        next |= g.neighbors(std::countr_zero(fm));
      }
      frontier = next & remaining & ~comp;
    }
    std::vector<int> vs;
    for (uint64_t m = comp; m != 0; m &= m - 1) {
      vs.push_back(std::countr_zero(m));
    }
    comps.push_back(std::move(vs));
    remaining &= ~comp;
  }
  return comps;
}

bool is_complete_on(const Graph& g, const std::vector<int>& verts) {
  for (size_t i = 0; i < verts.size(); ++i) {
    for (size_t j = i + 1; j < verts.size(); ++j) {
      if (!g.has_edge(verts[i], verts[j])) return false;
    }
  }
  return true;
}

std::vector<int> to_parent_ids(const Graph& g, const std::vector<int>& local) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(g.label_of(v));
  return out;
}

bool all_link_edges_class(const Graph& link, const PairClassTable& classes,
                          PairClass want) {
  for (const Pair& e : link.edges()) {
    if (classes.at(link.label_of(e[0]), link.label_of(e[1])) != want) {
      return false;
    }
  }
  return true;
}

uint64_t support_mask(const Graph& g) {
  uint64_t m = 0;
  for (int v : g.support()) m |= 1ULL << v;
  return m;
}

// Degree multiset check: all k-1 except exactly one k-2.
bool near_regular_sequence(const Graph& g, int k) {
  std::vector<int> seq = g.degree_sequence();
  if (seq.empty()) return false;
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i] != k - 1) return false;
  }
  return seq.back() == k - 2;
}

std::optional<StructureWitness> detect_two_disjoint_kk(
    const Graph& link, const PairClassTable& classes, int k) {
  if (!all_link_edges_class(link, classes, PairClass::kA)) return std::nullopt;
  std::vector<std::vector<int>> comps = components_in(link, support_mask(link));
  if (comps.size() != 2) return std::nullopt;
  for (const std::vector<int>& c : comps) {
    if (static_cast<int>(c.size()) != k || !is_complete_on(link, c)) {
      return std::nullopt;
    }
  }
  StructureWitness w;
  w.kind = WitnessKind::kTwoDisjointKk;
  w.f0 = to_parent_ids(link, comps[0]);
  w.component_b = to_parent_ids(link, comps[1]);
  return w;
}

std::optional<StructureWitness> detect_clique_plus_critical(const Graph& link,
                                                            int k) {
  std::vector<std::vector<int>> comps = components_in(link, support_mask(link));
  if (comps.size() != 2) return std::nullopt;
  for (int clique_idx = 0; clique_idx < 2; ++clique_idx) {
    const std::vector<int>& clique = comps[clique_idx];
    const std::vector<int>& other = comps[1 - clique_idx];
    if (static_cast<int>(clique.size()) != k - 1) continue;
    if (static_cast<int>(other.size()) != k + 1) continue;
    if (!is_complete_on(link, clique)) continue;
    uint64_t m = 0;
    for (int v : other) m |= 1ULL << v;
    Graph c = induced_subgraph(link, m);
    if (!near_regular_sequence(c, k)) continue;
    if (!is_factor_critical(c)) continue;
    StructureWitness w;
    w.kind = WitnessKind::kCliquePlusCritical;
    w.f0 = to_parent_ids(link, clique);
    w.component_b = to_parent_ids(link, other);
    return w;
  }
  return std::nullopt;
}

// Edge-disjoint partition of `edges` into stars rooted at `centers`, each
// star carrying at most k-1 edges. Every edge must be assigned to a center
// it contains.
bool assignable_to_stars(const std::vector<Pair>& edges,
                         const std::vector<int>& centers, int k,
                         std::vector<int>& load, size_t idx) {
  if (idx == edges.size()) return true;
  const Pair& e = edges[idx];
  for (size_t c = 0; c < centers.size(); ++c) {
    if (centers[c] != e[0] && centers[c] != e[1]) continue;
    if (load[c] >= k - 1) continue;
    ++load[c];
    if (assignable_to_stars(edges, centers, k, load, idx + 1)) return true;
    --load[c];
  }
  return false;
}

// Combinations of `pool` of size `want`, lexicographic; calls fn(combo) and
// stops when it returns true. Returns whether fn succeeded.
bool for_each_combination(const std::vector<int>& pool, int want,
                          const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> combo;
  auto rec = [&](auto&& self, size_t next) -> bool {
    if (static_cast<int>(combo.size()) == want) return fn(combo);
    if (pool.size() - next < want - combo.size()) return false;
    for (size_t i = next; i < pool.size(); ++i) {
      combo.push_back(pool[i]);
      if (self(self, i + 1)) return true;
      combo.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

std::optional<StructureWitness> detect_conditions_abc(
    const Graph& link, const PairClassTable& classes, int v_parent, int k) {
  // (c) both class conditions, and the stated maximum degree.
  if (!all_link_edges_class(link, classes, PairClass::kA)) return std::nullopt;
  std::vector<int> support = link.support();
  for (int u : support) {
    if (classes.at(v_parent, link.label_of(u)) != PairClass::kC) {
      return std::nullopt;
    }
    if (link.degree(u) > k - 1) return std::nullopt;
  }

  StructureWitness found;
  auto try_s = [&](const std::vector<int>& s) -> bool {
    uint64_t s_mask = 0;
    for (int v : s) s_mask |= 1ULL << v;
    int expect_f0 = 2 * k - 1 - 2 * static_cast<int>(s.size());
    if (expect_f0 < k + 1) return false;
    // (a): support - S must be isolated vertices plus one component F0.
    uint64_t rest = support_mask(link) & ~s_mask;
    // Components computed in the link minus S: mask out S from adjacency by
    // flood-filling within `rest` only.
    std::vector<std::vector<int>> comps;
    {
      uint64_t remaining = rest;
      while (remaining != 0) {
        uint64_t comp = 0;
        uint64_t frontier = remaining & (~remaining + 1);
        while (frontier != 0) {
          comp |= frontier;
          uint64_t next = 0;
          for (uint64_t fm = frontier; fm != 0; fm &= fm - 1) {
            next |= link.neighbors(std::countr_zero(fm));
          }
          frontier = next & remaining & ~comp;  // rest excludes S already
        }
        std::vector<int> vs;
        for (uint64_t m = comp; m != 0; m &= m - 1) {
          vs.push_back(std::countr_zero(m));
        }
        comps.push_back(std::move(vs));
        remaining &= ~comp;
      }
    }
    const std::vector<int>* f0 = nullptr;
    for (const std::vector<int>& c : comps) {
      if (c.size() == 1) continue;  // isolated within link - S
      if (f0 != nullptr) return false;
      f0 = &c;
    }
    if (f0 == nullptr || static_cast<int>(f0->size()) != expect_f0) {
      return false;
    }
    uint64_t f0_mask = 0;
    for (int v : *f0) f0_mask |= 1ULL << v;
    Graph f0_graph = induced_subgraph(link, f0_mask);
    if (!near_regular_sequence(f0_graph, k)) return false;
    if (!is_factor_critical(f0_graph)) return false;
    // (b): edges avoiding V(F0) split into at most |S| stars of <= k-1
    // edges each (padding with empty stars reaches exactly |S|).
    std::vector<Pair> residual;
    for (const Pair& e : link.edges()) {
      if (((f0_mask >> e[0]) & 1) == 0 && ((f0_mask >> e[1]) & 1) == 0) {
        residual.push_back(e);
      }
    }
    std::vector<int> centers_found;
    if (!residual.empty()) {
      std::vector<int> pool;
      uint64_t pool_mask = 0;
      for (const Pair& e : residual) {
        pool_mask |= 1ULL << e[0];
        pool_mask |= 1ULL << e[1];
      }
      for (uint64_t m = pool_mask; m != 0; m &= m - 1) {
        pool.push_back(std::countr_zero(m));
      }
      bool ok = false;
      for (int want = 1; want <= static_cast<int>(s.size()) && !ok; ++want) {
        ok = for_each_combination(
            pool, want, [&](const std::vector<int>& centers) {
              std::vector<int> load(centers.size(), 0);
              if (assignable_to_stars(residual, centers, k, load, 0)) {
                centers_found = centers;
                return true;
              }
              return false;
            });
      }
      if (!ok) return false;
    }
    found.kind = WitnessKind::kConditionsABC;
    found.s = to_parent_ids(link, s);
    found.f0 = to_parent_ids(link, *f0);
    found.star_centers = to_parent_ids(link, centers_found);
    return true;
  };

  int max_s = (k - 2) / 2;
  for (int size = 0; size <= max_s; ++size) {
    if (for_each_combination(support, size, try_s)) return found;
  }
  return std::nullopt;
}

}  // namespace

WeightAuditReport audit_weight_lemma(const ThreeGraph& f, int k) {
  if (!is_star_free(f, k)) {
    throw precondition_error(
        "audit_weight_lemma: the graph contains a k-star; the bound's "
        "hypothesis fails");
  }
  PairClassTable classes = classify_pairs(f, k);
  WeightTable weights = vertex_weights(f, k);
  WeightAuditReport report;
  report.k = k;
  const bool even = k % 2 == 0;
  const int64_t hard = 6LL * k * (k - 1);
  const int64_t even_bound = even ? 6LL * k * k - 9LL * k : 0;
  const int64_t slack_threshold = even ? even_bound - 3 : hard - 4;
  for (int v = 0; v < f.n(); ++v) {
    VertexAudit row;
    row.v = v;
    row.w_sixths = weights.w_sixths[v];
    row.hard_bound_sixths = hard;
    row.even_bound_sixths = even_bound;
    row.slack_threshold_sixths = slack_threshold;
    row.hard_bound_ok = row.w_sixths <= hard;
    row.even_bound_ok = !even || row.w_sixths <= even_bound;
    row.above_slack = row.w_sixths > slack_threshold;
    row.class_histogram = classes.histogram_at_vertex(v);
    if (row.above_slack) {
      Graph link = f.link(v);
      std::optional<StructureWitness> w =
          detect_two_disjoint_kk(link, classes, k);
      if (!w.has_value() && even) w = detect_clique_plus_critical(link, k);
      if (!w.has_value() && even) {
        w = detect_conditions_abc(link, classes, v, k);
      }
      if (w.has_value()) {
        row.witness = *w;
      } else {
        report.all_witnesses_found = false;
      }
    }
    report.all_hard_bounds_hold &= row.hard_bound_ok;
    report.all_even_bounds_hold &= row.even_bound_ok;
    report.per_vertex.push_back(std::move(row));
  }
  return report;
}

}  // namespace star3
