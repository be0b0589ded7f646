#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "star3/star_search.hpp"
#include "star3/three_graph.hpp"

namespace star3 {

/// Surjective edge coloring of the complete 3-graph K_n^(3) with colors
/// 0..t-1. The color array is indexed by colex triple rank. Surjectivity
/// (every color used at least once) is validated on every construction and
/// on parse; violations are a hard error (invalid_parameter / parse_error).
class EdgeColoring {
 public:
  EdgeColoring(int n, int t, std::vector<int> colors);

  static EdgeColoring monochromatic(int n);
  static EdgeColoring fully_rainbow(int n);

  int n() const { return n_; }
  int t() const { return t_; }
  uint32_t triples() const { return static_cast<uint32_t>(colors_.size()); }
  int color_of_rank(uint32_t rank) const;
  int color_of(int u, int v, int w) const;
  int color_of(const Triple& t) const;
  const std::vector<int>& colors() const { return colors_; }

  bool operator==(const EdgeColoring& o) const {
    return n_ == o.n_ && t_ == o.t_ && colors_ == o.colors_;
  }

 private:
  int n_ = 0;
  int t_ = 1;
  std::vector<int> colors_;
};

/// Distinct colors on the triples containing all of U (|U| = 1 or 2),
/// sorted ascending.
std::vector<int> colors_through(const EdgeColoring& c, std::span<const int> u);

/// z_c(U) = number of distinct colors on triples containing U.
int color_frequency(const EdgeColoring& c, std::span<const int> u);
int color_frequency(const EdgeColoring& c, int u, int v);

/// All pairs {u,v} with z_c <= 3k, in colex pair order. k >= 2.
std::vector<Pair> good_pairs(const EdgeColoring& c, int k);

struct GoodPairReport {
  int k = 0;
  std::vector<Pair> pairs;   // pairwise vertex-disjoint, colex-greedy
  std::vector<int> colors;   // union of colors on triples meeting any pair
  int q() const { return static_cast<int>(colors.size()); }
};

/// Greedy (colex order) selection of `count` pairwise vertex-disjoint good
/// pairs. Returns nullopt when fewer exist along the greedy order (a
/// failure, not an error).
std::optional<GoodPairReport> disjoint_good_pairs(const EdgeColoring& c,
                                                  int k, int count);

/// Exact search for a rainbow s-star: s triples through a common core,
/// pairwise sharing exactly the core, with pairwise distinct colors.
/// Scans cores ascending and ray pairs in ascending colex rank, returning
/// the first witness in that order, or nullopt after exhausting all cores.
/// Requires n >= 2s+1 (invalid_parameter otherwise).
std::optional<StarWitness> find_rainbow_star(const EdgeColoring& c, int s);

/// Rainbow-plus-one coloring over a base graph: base edges get distinct
/// colors 0..m-1 in colex order, every other triple gets color m. The base
/// must be a proper nonempty subgraph of K_n^(3).
EdgeColoring rainbow_plus_one(const ThreeGraph& base);

/// The standard lower-bound coloring: rainbow_plus_one of the extremal
/// k-star-free construction; t = f_formula(n,k).value + 1 colors. k >= 3 and
/// (n,k) accepted by construct_star_free required.
EdgeColoring lower_bound_coloring(int n, int k);

/// One representative triple (the colex-least) per color not in `excluded`;
/// result is a ThreeGraph with exactly t - |excluded distinct valid| edges.
ThreeGraph rainbow_representative_subgraph(const EdgeColoring& c,
                                           std::span<const int> excluded);

}  // namespace star3
