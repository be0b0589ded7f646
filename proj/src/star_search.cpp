#include "star3/star_search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <mutex>
#include <random>
#include <thread>

#include "star3/constructions.hpp"
#include "star3/errors.hpp"
#include "star3/matching.hpp"

namespace star3 {

namespace {

uint64_t full_mask(int n) {
  return n >= 64 ? ~0ULL : ((1ULL << n) - 1);
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

}  // namespace

int max_star(const ThreeGraph& f, int v) {
  return matching_number(f.link(v));
}

bool is_star_free(const ThreeGraph& f, int k) {
  if (k < 1) throw invalid_parameter("is_star_free: k >= 1 required");
  for (int v = 0; v < f.n(); ++v) {
    if (max_star(f, v) >= k) return false;
  }
  return true;
}

std::optional<StarWitness> find_k_star(const ThreeGraph& f, int k) {
  if (k < 1) throw invalid_parameter("find_k_star: k >= 1 required");
  for (int v = 0; v < f.n(); ++v) {
    Graph link = f.link(v);
    MatchingResult mm = max_matching(link);
    if (mm.size < k) continue;
    StarWitness w;
    w.core = v;
    for (const Pair& p : mm.pairs) {
      w.rays.push_back(make_triple(v, link.label_of(p[0]), link.label_of(p[1])));
    }
    std::sort(w.rays.begin(), w.rays.end(), [](const Triple& a, const Triple& b) {
      return triple_rank(a[0], a[1], a[2]) < triple_rank(b[0], b[1], b[2]);
    });
    w.rays.resize(k);
    return w;
  }
  return std::nullopt;
}

bool verify_star_witness(const ThreeGraph& f, const StarWitness& w, int k) {
  if (static_cast<int>(w.rays.size()) != k) return false;
  if (w.core < 0 || w.core >= f.n()) return false;
  for (const Triple& t : w.rays) {
    if (!f.has_edge(t)) return false;
    if (t[0] != w.core && t[1] != w.core && t[2] != w.core) return false;
  }
  for (size_t i = 0; i < w.rays.size(); ++i) {
    for (size_t j = i + 1; j < w.rays.size(); ++j) {
      int shared = 0;
      for (int a : w.rays[i]) {
        for (int b : w.rays[j]) {
          if (a == b) ++shared;
        }
      }
      if (shared != 1) return false;  // exactly the core
    }
  }
  return true;
}

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::kProven: return "proven";
    case SearchStatus::kLowerBoundOnly: return "lower-bound";
    case SearchStatus::kTrivialAllRainbow: return "trivial-all-rainbow";
  }
  return "unknown";
}

namespace {

// Branch-and-bound for f(n,k): decide each triple in colex order
// (include-first), keep every per-vertex link matching number below k, prune
// with the trivial bound current + remaining, and share a monotone incumbent
// across worker threads. The optimal value is thread-count invariant; the
// reported witness is the first optimum in branch order when single-threaded.
class TuranSearch {
 public:
  TuranSearch(int n, int k, const SearchLimits& limits)
      : n_(n), k_(k), total_(static_cast<int>(binom(n, 3))), limits_(limits) {
    triples_.reserve(total_);
    for (int r = 0; r < total_; ++r) {
      triples_.push_back(triple_unrank(static_cast<uint32_t>(r), n));
    }
    best_.store(0);
    if (construction_defined(n, k)) {
      ThreeGraph seed = construct_star_free(n, k);
      if (is_star_free(seed, k)) {  // defensive; construction is star-free
        best_.store(seed.m());
        best_edges_ = seed.edges();
      }
    }
  }

  TuranOutcome run() {
    start_ = std::chrono::steady_clock::now();
    if (limits_.threads <= 1) {
      State s(n_);
      dfs(s, 0);
      nodes_ += s.local_nodes;
    } else {
      run_parallel();
    }
    TuranOutcome out;
    out.value = best_.load();
    out.status = budget_hit_.load() ? SearchStatus::kLowerBoundOnly
                                    : SearchStatus::kProven;
    out.witness = ThreeGraph(n_, best_edges_);
    out.nodes = nodes_.load();
    out.seconds = elapsed_seconds(start_);
    return out;
  }

 private:
  struct State {
    explicit State(int n)
        : link(n, std::vector<uint64_t>(n, 0)), nu(n, 0) {}
    std::vector<std::vector<uint64_t>> link;  // link[v][u] = mask of w
    std::vector<int> nu;                      // cached matching numbers
    std::vector<Triple> chosen;
    uint64_t local_nodes = 0;
  };

  void set_bits(State& s, const Triple& t, bool on) {
    const int a = t[0], b = t[1], c = t[2];
    if (on) {
      s.link[a][b] |= 1ULL << c;
      s.link[a][c] |= 1ULL << b;
      s.link[b][a] |= 1ULL << c;
      s.link[b][c] |= 1ULL << a;
      s.link[c][a] |= 1ULL << b;
      s.link[c][b] |= 1ULL << a;
    } else {
      s.link[a][b] &= ~(1ULL << c);
      s.link[a][c] &= ~(1ULL << b);
      s.link[b][a] &= ~(1ULL << c);
      s.link[b][c] &= ~(1ULL << a);
      s.link[c][a] &= ~(1ULL << b);
      s.link[c][b] &= ~(1ULL << a);
    }
  }

  int link_nu(State& s, int v) {
    std::array<int8_t, kMaxVertices> mate;
    for (int i = 0; i < n_; ++i) mate[i] = -1;
    uint64_t active = full_mask(n_) & ~(1ULL << v);
    return detail::max_matching_masks(s.link[v].data(), n_, active,
                                      mate.data());
  }

  bool try_add(State& s, const Triple& t, std::array<int, 3>& saved) {
    set_bits(s, t, true);
    std::array<int, 3> fresh;
    for (int i = 0; i < 3; ++i) {
      fresh[i] = link_nu(s, t[i]);
      if (fresh[i] >= k_) {
        set_bits(s, t, false);
        return false;
      }
    }
    for (int i = 0; i < 3; ++i) {
      saved[i] = s.nu[t[i]];
      s.nu[t[i]] = fresh[i];
    }
    s.chosen.push_back(t);
    return true;
  }

  void undo_add(State& s, const Triple& t, const std::array<int, 3>& saved) {
    s.chosen.pop_back();
    set_bits(s, t, false);
    for (int i = 0; i < 3; ++i) s.nu[t[i]] = saved[i];
  }

  void check_budget(State& s) {
    if (++s.local_nodes % 8192 != 0) return;
    if (elapsed_seconds(start_) > limits_.budget_seconds) {
      budget_hit_.store(true);
      stop_.store(true);
    }
  }

  void record(State& s) {
    std::lock_guard<std::mutex> guard(best_mutex_);
    if (static_cast<int>(s.chosen.size()) > best_.load()) {
      best_.store(static_cast<int>(s.chosen.size()));
      best_edges_ = s.chosen;
    }
  }

  void dfs(State& s, int r) {
    if (stop_.load(std::memory_order_relaxed)) return;
    check_budget(s);
    int count = static_cast<int>(s.chosen.size());
    if (count + (total_ - r) <= best_.load(std::memory_order_relaxed)) return;
    if (r == total_) {
      record(s);
      return;
    }
    std::array<int, 3> saved;
    if (try_add(s, triples_[r], saved)) {
      dfs(s, r + 1);
      undo_add(s, triples_[r], saved);
    }
    if (stop_.load(std::memory_order_relaxed)) return;
    dfs(s, r + 1);
  }

  // Parallel mode: enumerate decision prefixes to a fixed depth, then let
  // workers finish the subtrees against the shared incumbent.
  void gen_tasks(State& s, int r, int depth, std::vector<uint8_t>& prefix,
                 std::vector<std::vector<uint8_t>>& tasks) {
    if (stop_.load(std::memory_order_relaxed)) return;
    if (static_cast<int>(s.chosen.size()) + (total_ - r) <=
        best_.load(std::memory_order_relaxed)) {
      return;
    }
    if (r == depth) {
      tasks.push_back(prefix);
      return;
    }
    std::array<int, 3> saved;
    if (try_add(s, triples_[r], saved)) {
      prefix.push_back(1);
      gen_tasks(s, r + 1, depth, prefix, tasks);
      prefix.pop_back();
      undo_add(s, triples_[r], saved);
    }
    prefix.push_back(0);
    gen_tasks(s, r + 1, depth, prefix, tasks);
    prefix.pop_back();
  }

  void run_parallel() {
    int depth = std::min(total_, 12);
    std::vector<std::vector<uint8_t>> tasks;
    {
      State s(n_);
      std::vector<uint8_t> prefix;
      gen_tasks(s, 0, depth, prefix, tasks);
      nodes_ += s.local_nodes;
    }
    std::atomic<size_t> next{0};
    std::atomic<bool> replay_failed{false};
    auto worker = [&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= tasks.size() || stop_.load()) break;
        State s(n_);
        bool valid = true;
        for (int r = 0; r < depth && valid; ++r) {
          if (!tasks[i][r]) continue;
          std::array<int, 3> saved;
          if (!try_add(s, triples_[r], saved)) valid = false;
        }
        if (valid) {
          dfs(s, depth);
        } else {
          replay_failed.store(true);  // a feasible prefix must replay cleanly
        }
        nodes_ += s.local_nodes;
      }
    };
    std::vector<std::thread> pool;
    int nt = std::max(1, limits_.threads);
    pool.reserve(nt);
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
    if (replay_failed.load()) {
      throw consistency_error("exact_f: task prefix replay failed");
    }
  }

  int n_;
  int k_;
  int total_;
  SearchLimits limits_;
  std::vector<Triple> triples_;
  std::chrono::steady_clock::time_point start_;
  std::atomic<bool> stop_{false};
  std::atomic<bool> budget_hit_{false};
  std::atomic<uint64_t> nodes_{0};
  std::atomic<int> best_{0};
  std::mutex best_mutex_;
  std::vector<Triple> best_edges_;
};

}  // namespace

TuranOutcome exact_f(int n, int k, const SearchLimits& limits) {
  if (n < 3) throw invalid_parameter("exact_f: n >= 3 required");
  if (k < 2) throw invalid_parameter("exact_f: k >= 2 required");
  if (limits.enforce_caps) {
    if ((k == 2 && n > 7) || (k >= 3 && n > 8)) {
      throw size_limit(
          "exact_f: instance beyond the default caps (n <= 7 for k = 2, "
          "n <= 8 for k >= 3); pass enforce_caps = false to override");
    }
  }
  TuranSearch search(n, k, limits);
  return search.run();
}

ThreeGraph random_star_free(int n, int k, uint64_t seed, double p) {
  if (n < 3) throw invalid_parameter("random_star_free: n >= 3 required");
  if (k < 1) throw invalid_parameter("random_star_free: k >= 1 required");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw invalid_parameter("random_star_free: p must lie in [0,1]");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(p);
  std::vector<Triple> edges;
  int total = static_cast<int>(binom(n, 3));
  for (int r = 0; r < total; ++r) {
    if (keep(rng)) edges.push_back(triple_unrank(static_cast<uint32_t>(r), n));
  }
  ThreeGraph g(n, edges);
  for (;;) {
    std::optional<StarWitness> w = find_k_star(g, k);
    if (!w.has_value()) return g;
    const std::vector<Triple> doomed{w->rays.front()};
    g = g.remove_edges(doomed);
  }
}

}  // namespace star3
