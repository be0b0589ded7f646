#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "star3/three_graph.hpp"

namespace star3 {

/// A k-star witness: `rays` are edges of the graph that pairwise intersect
/// exactly in `core`.
struct StarWitness {
  int core = -1;
  std::vector<Triple> rays;
};

/// Size of the largest star centered at v, i.e. the matching number of the
/// link of v.
int max_star(const ThreeGraph& f, int v);

/// True iff no vertex carries a k-star (max_star(v) <= k-1 for all v).
bool is_star_free(const ThreeGraph& f, int k);

/// First (smallest core, then colex-least ray set from one maximum link
/// matching) k-star, or nullopt if the graph is k-star-free.
std::optional<StarWitness> find_k_star(const ThreeGraph& f, int k);

/// Re-validates a witness against the graph: k rays, all edges, pairwise
/// intersections exactly {core}.
bool verify_star_witness(const ThreeGraph& f, const StarWitness& w, int k);

enum class SearchStatus {
  kProven,          // search space exhausted; value is exact
  kLowerBoundOnly,  // budget exhausted; value is the best witness found
  kTrivialAllRainbow,  // (color search only) n < 2s+1: no copies exist
};

const char* to_string(SearchStatus s);

struct SearchLimits {
  double budget_seconds = 600.0;
  int threads = 1;
  /// When true (default), exact_f refuses n beyond the documented caps
  /// (n <= 7 for k = 2, n <= 8 for k >= 3) with a size_limit error.
  bool enforce_caps = true;
};

/// Outcome of the exact Turan search.
struct TuranOutcome {
  int value = 0;
  SearchStatus status = SearchStatus::kProven;
  ThreeGraph witness;
  uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Exact f(n,k) by branch-and-bound over triples in colex order
/// (include-first), maintaining per-vertex link matchings incrementally and
/// pruning with bound = current + remaining. The incumbent is seeded from
/// construct_star_free(n,k) when defined. Deterministic single-threaded;
/// multi-threaded runs split the tree at a fixed depth and always agree on
/// the value. k >= 2, n >= 3 required.
TuranOutcome exact_f(int n, int k, const SearchLimits& limits = {});

/// Random k-star-free instance: each triple kept with probability `p`
/// (Bernoulli, mt19937_64 with the given seed), then greedy deletion of the
/// first ray of the first remaining k-star until star-free. Deterministic
/// per seed.
ThreeGraph random_star_free(int n, int k, uint64_t seed, double p = 0.5);

}  // namespace star3
