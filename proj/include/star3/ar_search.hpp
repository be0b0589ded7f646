#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "star3/coloring.hpp"
#include "star3/star_search.hpp"

namespace star3 {

/// All copies of the s-star in K_n^(3): a copy is a core vertex plus s
/// pairwise disjoint pairs of other vertices. copy_count = n * M(n-1, s)
/// where M(m,s) counts s-edge matchings of K_m. Copies are stored as s
/// triple ranks (stride s, colex-sorted within a copy), enumerated cores
/// ascending then ray sets in ascending colex sequence.
struct StarCopyIndex {
  int n = 0;
  int s = 0;
  uint64_t copy_count = 0;
  std::vector<uint32_t> copy_triples;                // stride s
  std::vector<std::vector<int32_t>> copies_of_triple;  // size C(n,3)

  std::span<const uint32_t> copy(size_t i) const {
    return {copy_triples.data() + i * s, static_cast<size_t>(s)};
  }
};

/// n >= 3, s >= 2 required. Empty index when n < 2s+1 (no copies fit).
StarCopyIndex enumerate_star_copies(int n, int s);

struct ArLimits {
  double budget_seconds = 600.0;
  int threads = 1;
  /// Canonical-partition symmetry pruning: when true (default), color ids
  /// form a restricted-growth string (each new color gets the next id), so
  /// every color partition is explored exactly once. When false, a triple
  /// at position i may take any color id <= i (each partition is explored
  /// many times); both modes provably return the same value.
  bool symmetry = true;
  /// Instance caps: s=2 allows n <= 7, s>=3 allows n <= 6 plus (7,3) when
  /// long_run is set. Beyond that, size_limit.
  bool long_run = false;
  bool enforce_caps = true;
};

struct ColorSearchOutcome {
  int value = 0;  // max number of colors with no rainbow s-star found/proven
  SearchStatus status = SearchStatus::kProven;
  EdgeColoring witness;
  uint64_t nodes = 0;
  double seconds = 0.0;
};

/// Maximum t such that some surjective t-coloring of K_n^(3) has no rainbow
/// s-star. Branch-and-bound over triples in colex order assigning color ids;
/// prunes when colors + remaining <= incumbent and on completed all-distinct
/// copies. Incumbent seeded from the standard lower-bound coloring (s >= 4),
/// from a rainbow-plus-one coloring over the exact_f(n,2) witness (s = 3),
/// or monochromatic (s = 2). When n < 2s+1 the fully rainbow coloring is
/// returned with status kTrivialAllRainbow.
ColorSearchOutcome max_colors_no_rainbow(int n, int s,
                                         const ArLimits& limits = {});

/// Reference value of the anti-Ramsey number from the published closed
/// forms, when (n,s) lies in a proven regime.
struct ArReference {
  std::optional<int64_t> value;  // nullopt when no closed form applies
  bool in_regime = false;
  std::string note;  // "s=2", "s=3 n>=20", "s>=4 threshold", "below-threshold"
};

ArReference ar_reference(int n, int s);

struct ArOutcome {
  ColorSearchOutcome search;
  int64_t ar_value = 0;  // search.value + 1; exact when proven, else a lower bound
  ArReference reference;
  bool matches_reference = false;  // meaningful only when proven and in regime
};

/// ar(n, s-star) = max_colors_no_rainbow(n,s) + 1: with that many colors a
/// rainbow s-star is unavoidable, with one fewer it is not.
ArOutcome ar_exact(int n, int s, const ArLimits& limits = {});

}  // namespace star3
