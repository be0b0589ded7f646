#include "star3/ar_search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "star3/basics.hpp"
#include "star3/constructions.hpp"
#include "star3/errors.hpp"

namespace star3 {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Number of j-edge matchings in the complete 2-graph K_m, saturated at
/// kMatchingCountCap to keep the arithmetic overflow-free.
constexpr uint64_t kMatchingCountCap = 1'000'000'000'000ULL;

uint64_t matching_count_saturated(int m, int j) {
  if (j < 0) return 0;
  std::vector<std::vector<uint64_t>> table(
      static_cast<size_t>(m + 1),
      std::vector<uint64_t>(static_cast<size_t>(j + 1), 0));
  for (int i = 0; i <= m; ++i) table[static_cast<size_t>(i)][0] = 1;
  for (int i = 2; i <= m; ++i) {
    for (int q = 1; q <= j; ++q) {
      uint64_t total = table[static_cast<size_t>(i - 1)][static_cast<size_t>(q)];
      const uint64_t with_i =
          table[static_cast<size_t>(i - 2)][static_cast<size_t>(q - 1)];
      if (with_i > 0 &&
          static_cast<uint64_t>(i - 1) > kMatchingCountCap / with_i) {
        total = kMatchingCountCap;
      } else {
        total += static_cast<uint64_t>(i - 1) * with_i;
      }
      table[static_cast<size_t>(i)][static_cast<size_t>(q)] =
          std::min(total, kMatchingCountCap);
    }
  }
  return table[static_cast<size_t>(m)][static_cast<size_t>(j)];
}

void enumerate_ray_sets(int n, int core, int s, uint32_t min_pair_rank,
                        uint64_t used, std::vector<Pair>& chosen,
                        StarCopyIndex& idx) {
  if (static_cast<int>(chosen.size()) == s) {
    const size_t copy_index = static_cast<size_t>(idx.copy_count);
    std::vector<uint32_t> ranks;
    ranks.reserve(static_cast<size_t>(s));
    for (const Pair& p : chosen) {
      ranks.push_back(triple_rank(make_triple(core, p[0], p[1])));
    }
    std::sort(ranks.begin(), ranks.end());
    for (uint32_t r : ranks) {
      idx.copy_triples.push_back(r);
      idx.copies_of_triple[r].push_back(static_cast<int32_t>(copy_index));
    }
    ++idx.copy_count;
    return;
  }
  const int missing = s - static_cast<int>(chosen.size());
  const uint64_t vertex_mask = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
  if (n - std::popcount(used & vertex_mask) < 2 * missing) return;
  const auto total_pairs = static_cast<uint32_t>(binom(n, 2));
  for (uint32_t r = min_pair_rank; r < total_pairs; ++r) {
    const Pair p = pair_unrank(r, n);
    if (((used >> p[0]) | (used >> p[1])) & 1ULL) continue;
    chosen.push_back(p);
    enumerate_ray_sets(n, core, s, r + 1,
                       used | (1ULL << p[0]) | (1ULL << p[1]), chosen, idx);
    chosen.pop_back();
  }
}

}  // namespace

StarCopyIndex enumerate_star_copies(int n, int s) {
  if (n < 3) throw invalid_parameter("enumerate_star_copies: n < 3");
  if (n > kMaxVertices) throw size_limit("enumerate_star_copies: n > 64");
  if (s < 2) throw invalid_parameter("enumerate_star_copies: s < 2");
  StarCopyIndex idx;
  idx.n = n;
  idx.s = s;
  idx.copies_of_triple.assign(static_cast<size_t>(binom(n, 3)), {});
  if (n < 2 * s + 1) return idx;
  const uint64_t expected =
      static_cast<uint64_t>(n) * matching_count_saturated(n - 1, s);
  if (expected > 20'000'000ULL) {
    throw size_limit("enumerate_star_copies: " + std::to_string(expected) +
                     " copies exceed the in-memory index limit");
  }
  idx.copy_triples.reserve(static_cast<size_t>(expected) *
                           static_cast<size_t>(s));
  std::vector<Pair> chosen;
  for (int core = 0; core < n; ++core) {
    enumerate_ray_sets(n, core, s, 0, 1ULL << core, chosen, idx);
  }
  if (idx.copy_count != expected) {
    throw consistency_error(
        "enumerate_star_copies: copy count disagrees with the matching-count "
        "recurrence");
  }
  return idx;
}

namespace {

/// Branch-and-bound state shared by all workers of one color search.
struct ColorSearchShared {
  const StarCopyIndex* idx = nullptr;
  int total = 0;  // number of triples
  int s = 0;
  bool symmetry = true;
  Clock::time_point start;
  double budget_seconds = 0.0;
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_hit{false};
  std::atomic<int> best{0};
  std::mutex record_mutex;
  std::vector<int> best_raw;  // color per rank; ids may have gaps
  bool improved = false;
  std::atomic<uint64_t> nodes{0};
};

/// Per-worker mutable search state.
struct ColorSearchState {
  std::vector<int> color;          // 1 entry per rank, -1 = uncolored
  std::vector<uint8_t> colored;    // per copy: triples colored so far
  std::vector<uint8_t> satisfied;  // per copy: two triples share a color
  std::vector<int32_t> trail;      // copies whose satisfied flag was set
  std::vector<int> color_count;    // occurrences per color id
  int distinct = 0;
  int max_used = -1;
  uint64_t local_nodes = 0;

  explicit ColorSearchState(const ColorSearchShared& sh)
      : color(static_cast<size_t>(sh.total), -1),
        colored(static_cast<size_t>(sh.idx->copy_count), 0),
        satisfied(static_cast<size_t>(sh.idx->copy_count), 0),
        color_count(static_cast<size_t>(sh.total), 0) {}
};

/// True when `rank` may take color `c` without completing an all-distinct
/// copy. Only copies that become fully colored by this assignment matter.
bool color_feasible(const ColorSearchShared& sh, const ColorSearchState& st,
                    int rank, int c) {
  for (int32_t j : sh.idx->copies_of_triple[static_cast<size_t>(rank)]) {
    const auto cj = static_cast<size_t>(j);
    if (st.satisfied[cj]) continue;
    if (static_cast<int>(st.colored[cj]) + 1 < sh.s) continue;
    bool shares = false;
    for (uint32_t q : sh.idx->copy(cj)) {
      if (static_cast<int>(q) != rank && st.color[q] == c) {
        shares = true;
        break;
      }
    }
    if (!shares) return false;
  }
  return true;
}

/// Applies `rank := c`; returns the trail size before the assignment so the
/// caller can undo. Precondition: color_feasible passed.
size_t commit_color(const ColorSearchShared& sh, ColorSearchState& st,
                    int rank, int c) {
  const size_t trail_mark = st.trail.size();
  st.color[static_cast<size_t>(rank)] = c;
  if (st.color_count[static_cast<size_t>(c)]++ == 0) ++st.distinct;
  st.max_used = std::max(st.max_used, c);
  for (int32_t j : sh.idx->copies_of_triple[static_cast<size_t>(rank)]) {
    const auto cj = static_cast<size_t>(j);
    ++st.colored[cj];
    if (st.satisfied[cj]) continue;
    for (uint32_t q : sh.idx->copy(cj)) {
      if (static_cast<int>(q) != rank && st.color[q] == c) {
        st.satisfied[cj] = 1;
        st.trail.push_back(j);
        break;
      }
    }
  }
  return trail_mark;
}

void undo_color(const ColorSearchShared& sh, ColorSearchState& st, int rank,
                int c, size_t trail_mark, int prev_max_used) {
  while (st.trail.size() > trail_mark) {
    st.satisfied[static_cast<size_t>(st.trail.back())] = 0;
    st.trail.pop_back();
  }
  for (int32_t j : sh.idx->copies_of_triple[static_cast<size_t>(rank)]) {
    --st.colored[static_cast<size_t>(j)];
  }
  if (--st.color_count[static_cast<size_t>(c)] == 0) --st.distinct;
  st.max_used = prev_max_used;
  st.color[static_cast<size_t>(rank)] = -1;
}

void record_leaf(ColorSearchShared& sh, const ColorSearchState& st) {
  if (st.distinct <= sh.best.load(std::memory_order_relaxed)) return;
  std::lock_guard<std::mutex> lock(sh.record_mutex);
  if (st.distinct <= sh.best.load(std::memory_order_relaxed)) return;
  sh.best.store(st.distinct, std::memory_order_relaxed);
  sh.best_raw = st.color;
  sh.improved = true;
}

void color_dfs(ColorSearchShared& sh, ColorSearchState& st, int rank) {
  if (sh.stop.load(std::memory_order_relaxed)) return;
  ++st.local_nodes;
  if ((st.local_nodes & 8191ULL) == 0 &&
      seconds_since(sh.start) > sh.budget_seconds) {
    sh.budget_hit.store(true, std::memory_order_relaxed);
    sh.stop.store(true, std::memory_order_relaxed);
    return;
  }
  if (rank == sh.total) {
    record_leaf(sh, st);
    return;
  }
  // Even giving every remaining triple a fresh color cannot beat the
  // incumbent.
  if (st.distinct + (sh.total - rank) <=
      sh.best.load(std::memory_order_relaxed)) {
    return;
  }
  const int max_color =
      sh.symmetry ? std::min(st.max_used + 1, sh.total - 1)
                  : std::min(rank, sh.total - 1);
  for (int c = 0; c <= max_color; ++c) {
    if (!color_feasible(sh, st, rank, c)) continue;
    const int prev_max_used = st.max_used;
    const size_t mark = commit_color(sh, st, rank, c);
    color_dfs(sh, st, rank + 1);
    undo_color(sh, st, rank, c, mark, prev_max_used);
    if (sh.stop.load(std::memory_order_relaxed)) return;
  }
}

void gen_color_tasks(ColorSearchShared& sh, ColorSearchState& st, int rank,
                     int depth, std::vector<std::vector<int>>& tasks) {
  if (rank == depth) {
    tasks.emplace_back(st.color.begin(), st.color.begin() + depth);
    return;
  }
  ++st.local_nodes;
  if (st.distinct + (sh.total - rank) <=
      sh.best.load(std::memory_order_relaxed)) {
    return;
  }
  const int max_color =
      sh.symmetry ? std::min(st.max_used + 1, sh.total - 1)
                  : std::min(rank, sh.total - 1);
  for (int c = 0; c <= max_color; ++c) {
    if (!color_feasible(sh, st, rank, c)) continue;
    const int prev_max_used = st.max_used;
    const size_t mark = commit_color(sh, st, rank, c);
    gen_color_tasks(sh, st, rank + 1, depth, tasks);
    undo_color(sh, st, rank, c, mark, prev_max_used);
  }
}

/// Renumbers color ids by first occurrence so they form 0..distinct-1.
std::vector<int> compress_color_ids(const std::vector<int>& raw) {
  std::vector<int> remap(raw.size(), -1);
  std::vector<int> out(raw.size(), -1);
  int next = 0;
  for (size_t i = 0; i < raw.size(); ++i) {
    const auto c = static_cast<size_t>(raw[i]);
    if (remap[c] < 0) remap[c] = next++;
    out[i] = remap[c];
  }
  return out;
}

EdgeColoring seed_coloring(int n, int s, const ArLimits& limits) {
  if (s == 2) return EdgeColoring::monochromatic(n);
  if (s == 3) {
    SearchLimits turan_limits;
    turan_limits.budget_seconds = limits.budget_seconds;
    // One thread keeps the seed witness (not just its size) reproducible,
    // so downstream searches explore the same tree for every thread count.
    turan_limits.threads = 1;
    const TuranOutcome base = exact_f(n, 2, turan_limits);
    if (base.witness.m() == 0) return EdgeColoring::monochromatic(n);
    return rainbow_plus_one(base.witness);
  }
  if (construction_defined(n, s - 1)) return lower_bound_coloring(n, s - 1);
  return EdgeColoring::monochromatic(n);
}

}  // namespace

ColorSearchOutcome max_colors_no_rainbow(int n, int s,
                                         const ArLimits& limits) {
  if (n < 3) throw invalid_parameter("max_colors_no_rainbow: n < 3");
  if (n > kMaxVertices) throw size_limit("max_colors_no_rainbow: n > 64");
  if (s < 2) throw invalid_parameter("max_colors_no_rainbow: s < 2");
  if (limits.threads < 1) {
    throw invalid_parameter("max_colors_no_rainbow: threads < 1");
  }
  const auto start = Clock::now();
  if (n < 2 * s + 1) {
    // No s-star fits in n vertices, so even the all-distinct coloring works.
    return ColorSearchOutcome{static_cast<int>(binom(n, 3)),
                              SearchStatus::kTrivialAllRainbow,
                              EdgeColoring::fully_rainbow(n), 0,
                              seconds_since(start)};
  }
  if (limits.enforce_caps) {
    const bool within = (s == 2 && n <= 7) || (s >= 3 && n <= 6) ||
                        (s == 3 && n == 7 && limits.long_run);
    if (!within) {
      throw size_limit(
          "max_colors_no_rainbow: instance beyond the default caps (n <= 7 "
          "for s = 2, n <= 6 for s >= 3, n = 7 for s = 3 with long_run); "
          "pass enforce_caps = false to override");
    }
  }

  const StarCopyIndex idx = enumerate_star_copies(n, s);
  ColorSearchShared sh;
  sh.idx = &idx;
  sh.total = static_cast<int>(binom(n, 3));
  sh.s = s;
  sh.symmetry = limits.symmetry;
  sh.start = start;
  sh.budget_seconds = limits.budget_seconds;

  EdgeColoring seed = seed_coloring(n, s, limits);
  if (find_rainbow_star(seed, s).has_value()) {
    throw consistency_error(
        "max_colors_no_rainbow: seed coloring contains a rainbow star");
  }
  sh.best.store(seed.t(), std::memory_order_relaxed);
  sh.best_raw = seed.colors();

  if (seconds_since(start) <= sh.budget_seconds) {
    if (limits.threads == 1 || sh.total < 12) {
      ColorSearchState st(sh);
      color_dfs(sh, st, 0);
      sh.nodes.fetch_add(st.local_nodes, std::memory_order_relaxed);
    } else {
      const int depth = 6;
      std::vector<std::vector<int>> tasks;
      {
        ColorSearchState st(sh);
        gen_color_tasks(sh, st, 0, depth, tasks);
        sh.nodes.fetch_add(st.local_nodes, std::memory_order_relaxed);
      }
      std::atomic<size_t> next{0};
      std::atomic<bool> replay_failed{false};
      auto worker = [&]() {
        ColorSearchState st(sh);
        while (true) {
          if (sh.stop.load(std::memory_order_relaxed)) break;
          if (seconds_since(sh.start) > sh.budget_seconds) {
            sh.budget_hit.store(true, std::memory_order_relaxed);
            sh.stop.store(true, std::memory_order_relaxed);
            break;
          }
          const size_t task = next.fetch_add(1, std::memory_order_relaxed);
          if (task >= tasks.size()) break;
          bool pruned = false;
          std::vector<std::pair<size_t, int>> undo_stack;
          for (int r = 0; r < depth; ++r) {
            if (st.distinct + (sh.total - r) <=
                sh.best.load(std::memory_order_relaxed)) {
              pruned = true;  // incumbent improved past this prefix
              break;
            }
            const int c = tasks[task][static_cast<size_t>(r)];
            if (!color_feasible(sh, st, r, c)) {
              replay_failed.store(true, std::memory_order_relaxed);
              pruned = true;
              break;
            }
            undo_stack.emplace_back(commit_color(sh, st, r, c),
                                    st.max_used);
          }
          if (!pruned) color_dfs(sh, st, depth);
          for (int r = static_cast<int>(undo_stack.size()) - 1; r >= 0; --r) {
            const int c = tasks[task][static_cast<size_t>(r)];
            undo_color(sh, st, r, c, undo_stack[static_cast<size_t>(r)].first,
                       undo_stack[static_cast<size_t>(r)].second);
          }
        }
        sh.nodes.fetch_add(st.local_nodes, std::memory_order_relaxed);
      };
      std::vector<std::thread> pool;
      pool.reserve(static_cast<size_t>(limits.threads));
      for (int i = 0; i < limits.threads; ++i) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
      if (replay_failed.load()) {
        throw consistency_error(
            "max_colors_no_rainbow: task replay hit an infeasible prefix");
      }
    }
  } else {
    sh.budget_hit.store(true, std::memory_order_relaxed);
  }

  const int value = sh.best.load(std::memory_order_relaxed);
  const SearchStatus status = sh.budget_hit.load()
                                  ? SearchStatus::kLowerBoundOnly
                                  : SearchStatus::kProven;
  EdgeColoring witness =
      sh.improved
          ? EdgeColoring(n, value, compress_color_ids(sh.best_raw))
          : std::move(seed);
  return ColorSearchOutcome{value, status, std::move(witness),
                            sh.nodes.load(), seconds_since(start)};
}

ArReference ar_reference(int n, int s) {
  if (n < 3) throw invalid_parameter("ar_reference: n < 3");
  if (s < 2) throw invalid_parameter("ar_reference: s < 2");
  ArReference ref;
  if (s == 2) {
    if (n >= 5) {
      ref.value = 2;
      ref.in_regime = true;
      ref.note = "s=2";
    } else {
      ref.note = "below-threshold";
    }
    return ref;
  }
  if (s == 3) {
    if (n >= 20) {
      const int64_t base = f_formula(n, 2).value;
      ref.value = base + ((n % 4 <= 1) ? 2 : 3);
      ref.in_regime = true;
      ref.note = "s=3 n>=20";
    } else {
      ref.note = "below-threshold";
    }
    return ref;
  }
  const int64_t k = s - 1;
  // Regime: n > (5/2)k^3 + (15/2)k^2 + 26k - 3, kept in integers.
  if (2 * static_cast<int64_t>(n) > 5 * k * k * k + 15 * k * k + 52 * k - 6) {
    const FormulaResult f = f_formula(n, static_cast<int>(k));
    if (!f.in_regime) {
      throw consistency_error(
          "ar_reference: star-count formula unexpectedly out of regime");
    }
    ref.value = f.value + 2;
    ref.in_regime = true;
    ref.note = "s>=4 threshold";
  } else {
    ref.note = "below-threshold";
  }
  return ref;
}

ArOutcome ar_exact(int n, int s, const ArLimits& limits) {
  ColorSearchOutcome search = max_colors_no_rainbow(n, s, limits);
  const int64_t ar_value = static_cast<int64_t>(search.value) + 1;
  ArReference reference = ar_reference(n, s);
  const bool matches = search.status == SearchStatus::kProven &&
                       reference.in_regime && reference.value.has_value() &&
                       *reference.value == ar_value;
  return ArOutcome{std::move(search), ar_value, std::move(reference), matches};
}

}  // namespace star3
