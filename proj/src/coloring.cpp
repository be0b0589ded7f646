#include "star3/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "star3/basics.hpp"
#include "star3/constructions.hpp"
#include "star3/errors.hpp"

namespace star3 {

EdgeColoring::EdgeColoring(int n, int t, std::vector<int> colors)
    : n_(n), t_(t), colors_(std::move(colors)) {
  if (n_ < 3) throw invalid_parameter("EdgeColoring: n < 3");
  if (n_ > kMaxVertices) throw size_limit("EdgeColoring: n > 64");
  if (t_ < 1) throw invalid_parameter("EdgeColoring: t < 1");
  const uint64_t want = binom(n_, 3);
  if (colors_.size() != want) {
    throw invalid_parameter("EdgeColoring: expected " + std::to_string(want) +
                            " colors, got " + std::to_string(colors_.size()));
  }
  std::vector<char> seen(static_cast<size_t>(t_), 0);
  for (int c : colors_) {
    if (c < 0 || c >= t_) {
      throw invalid_parameter("EdgeColoring: color id " + std::to_string(c) +
                              " outside [0, " + std::to_string(t_) + ")");
    }
    seen[static_cast<size_t>(c)] = 1;
  }
  for (int c = 0; c < t_; ++c) {
    if (!seen[static_cast<size_t>(c)]) {
      throw invalid_parameter("EdgeColoring: color " + std::to_string(c) +
                              " is unused (coloring must be surjective)");
    }
  }
}

EdgeColoring EdgeColoring::monochromatic(int n) {
  if (n < 3) throw invalid_parameter("EdgeColoring::monochromatic: n < 3");
  return EdgeColoring(n, 1,
                      std::vector<int>(static_cast<size_t>(binom(n, 3)), 0));
}

EdgeColoring EdgeColoring::fully_rainbow(int n) {
  if (n < 3) throw invalid_parameter("EdgeColoring::fully_rainbow: n < 3");
  const auto total = static_cast<size_t>(binom(n, 3));
  std::vector<int> colors(total);
  std::iota(colors.begin(), colors.end(), 0);
  return EdgeColoring(n, static_cast<int>(total), std::move(colors));
}

int EdgeColoring::color_of_rank(uint32_t rank) const {
  if (rank >= colors_.size()) {
    throw invalid_parameter("EdgeColoring: triple rank out of range");
  }
  return colors_[rank];
}

int EdgeColoring::color_of(int u, int v, int w) const {
  for (int x : {u, v, w}) {
    if (x < 0 || x >= n_) {
      throw invalid_parameter("EdgeColoring: vertex out of range");
    }
  }
  return color_of_rank(triple_rank(make_triple(u, v, w)));
}

int EdgeColoring::color_of(const Triple& t) const {
  return color_of(t[0], t[1], t[2]);
}

std::vector<int> colors_through(const EdgeColoring& c, std::span<const int> u) {
  const int n = c.n();
  for (int x : u) {
    if (x < 0 || x >= n) {
      throw invalid_parameter("colors_through: vertex out of range");
    }
  }
  std::vector<int> out;
  if (u.size() == 2) {
    if (u[0] == u[1]) {
      throw invalid_parameter("colors_through: repeated vertex in pair");
    }
    for (int w = 0; w < n; ++w) {
      if (w == u[0] || w == u[1]) continue;
      out.push_back(c.color_of(u[0], u[1], w));
    }
  } else if (u.size() == 1) {
    for (int v = 0; v < n; ++v) {
      if (v == u[0]) continue;
      for (int w = v + 1; w < n; ++w) {
        if (w == u[0]) continue;
        out.push_back(c.color_of(u[0], v, w));
      }
    }
  } else {
    throw invalid_parameter("colors_through: |U| must be 1 or 2");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int color_frequency(const EdgeColoring& c, std::span<const int> u) {
  return static_cast<int>(colors_through(c, u).size());
}

int color_frequency(const EdgeColoring& c, int u, int v) {
  const int pair[2] = {u, v};
  return color_frequency(c, std::span<const int>(pair, 2));
}

std::vector<Pair> good_pairs(const EdgeColoring& c, int k) {
  if (k < 2) throw invalid_parameter("good_pairs: k < 2");
  std::vector<Pair> out;
  for (int v = 1; v < c.n(); ++v) {
    for (int u = 0; u < v; ++u) {
      if (color_frequency(c, u, v) <= 3 * k) out.push_back(Pair{u, v});
    }
  }
  return out;
}

std::optional<GoodPairReport> disjoint_good_pairs(const EdgeColoring& c,
                                                  int k, int count) {
  if (count < 1) throw invalid_parameter("disjoint_good_pairs: count < 1");
  GoodPairReport report;
  report.k = k;
  uint64_t used = 0;
  for (const Pair& p : good_pairs(c, k)) {
    if ((used >> p[0]) & 1ULL) continue;
    if ((used >> p[1]) & 1ULL) continue;
    used |= (1ULL << p[0]) | (1ULL << p[1]);
    report.pairs.push_back(p);
    if (static_cast<int>(report.pairs.size()) == count) break;
  }
  if (static_cast<int>(report.pairs.size()) < count) return std::nullopt;
  std::vector<int> colors;
  for (const Pair& p : report.pairs) {
    auto through = colors_through(c, std::span<const int>(p.data(), 2));
    colors.insert(colors.end(), through.begin(), through.end());
  }
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
  report.colors = std::move(colors);
  return report;
}

namespace {

/// Depth-first extension of a partial rainbow star at a fixed core: `rays`
/// holds the chosen ray pairs, `used_vertices` their vertices plus the core,
/// `used_color` the ray colors taken so far. Pairs are tried in ascending
/// colex rank starting from `min_rank` so the first completed witness is the
/// colex-least one at this core.
bool extend_rainbow_star(const EdgeColoring& c, int core, int s,
                         uint32_t min_rank, uint64_t used_vertices,
                         std::vector<uint8_t>& used_color,
                         std::vector<Pair>& rays) {
  if (static_cast<int>(rays.size()) == s) return true;
  const int n = c.n();
  const int missing = s - static_cast<int>(rays.size());
  const int free_vertices =
      n - std::popcount(used_vertices & ((n == 64) ? ~0ULL
                                                   : ((1ULL << n) - 1)));
  if (free_vertices < 2 * missing) return false;
  const auto total_pairs = static_cast<uint32_t>(binom(n, 2));
  for (uint32_t r = min_rank; r < total_pairs; ++r) {
    const Pair p = pair_unrank(r, n);
    if (p[0] == core || p[1] == core) continue;
    if (((used_vertices >> p[0]) | (used_vertices >> p[1])) & 1ULL) continue;
    const int color = c.color_of(core, p[0], p[1]);
    if (used_color[static_cast<size_t>(color)]) continue;
    used_color[static_cast<size_t>(color)] = 1;
    rays.push_back(p);
    const uint64_t next_used =
        used_vertices | (1ULL << p[0]) | (1ULL << p[1]);
    if (extend_rainbow_star(c, core, s, r + 1, next_used, used_color, rays)) {
      return true;
    }
    rays.pop_back();
    used_color[static_cast<size_t>(color)] = 0;
  }
  return false;
}

}  // namespace

std::optional<StarWitness> find_rainbow_star(const EdgeColoring& c, int s) {
  if (s < 1) throw invalid_parameter("find_rainbow_star: s < 1");
  if (c.n() < 2 * s + 1) {
    throw invalid_parameter("find_rainbow_star: need n >= 2s+1");
  }
  for (int core = 0; core < c.n(); ++core) {
    std::vector<uint8_t> used_color(static_cast<size_t>(c.t()), 0);
    std::vector<Pair> rays;
    rays.reserve(static_cast<size_t>(s));
    if (extend_rainbow_star(c, core, s, 0, 1ULL << core, used_color, rays)) {
      StarWitness w;
      w.core = core;
      for (const Pair& p : rays) {
        w.rays.push_back(make_triple(core, p[0], p[1]));
      }
      std::sort(w.rays.begin(), w.rays.end(),
                [](const Triple& a, const Triple& b) {
                  return triple_rank(a) < triple_rank(b);
                });
      return w;
    }
  }
  return std::nullopt;
}

EdgeColoring rainbow_plus_one(const ThreeGraph& base) {
  const int n = base.n();
  const uint64_t total = binom(n, 3);
  const auto m = static_cast<uint64_t>(base.m());
  if (m == 0) {
    throw invalid_parameter("rainbow_plus_one: base graph has no edges");
  }
  if (m >= total) {
    throw invalid_parameter(
        "rainbow_plus_one: base graph must be a proper subgraph");
  }
  std::vector<int> colors(static_cast<size_t>(total),
                          static_cast<int>(m));
  int next = 0;
  for (const Triple& e : base.edges()) {
    colors[triple_rank(e)] = next++;
  }
  return EdgeColoring(n, static_cast<int>(m) + 1, std::move(colors));
}

EdgeColoring lower_bound_coloring(int n, int k) {
  if (k < 3) throw invalid_parameter("lower_bound_coloring: k < 3");
  if (!construction_defined(n, k)) {
    throw invalid_parameter(
        "lower_bound_coloring: no extremal construction for these n, k");
  }
  return rainbow_plus_one(construct_star_free(n, k));
}

ThreeGraph rainbow_representative_subgraph(const EdgeColoring& c,
                                           std::span<const int> excluded) {
  std::vector<char> skip(static_cast<size_t>(c.t()), 0);
  for (int x : excluded) {
    if (x < 0 || x >= c.t()) continue;  // ignore ids outside the palette
    skip[static_cast<size_t>(x)] = 1;
  }
  std::vector<char> taken(static_cast<size_t>(c.t()), 0);
  std::vector<Triple> edges;
  for (uint32_t r = 0; r < c.triples(); ++r) {
    const int color = c.color_of_rank(r);
    if (skip[static_cast<size_t>(color)]) continue;
    if (taken[static_cast<size_t>(color)]) continue;
    taken[static_cast<size_t>(color)] = 1;
    edges.push_back(triple_unrank(r, c.n()));
  }
  return ThreeGraph(c.n(), edges);
}

}  // namespace star3
