#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "star3/errors.hpp"

namespace star3 {

/// A 3-uniform edge, always kept sorted ascending.
using Triple = std::array<int, 3>;
/// A 2-uniform edge, always kept sorted ascending.
using Pair = std::array<int, 2>;

/// Largest vertex count supported by the bitmask-based kernels.
inline constexpr int kMaxVertices = 64;

/// Exact binomial coefficient; returns 0 for k < 0 or k > n.
/// Callers in this library stay far below the int64 overflow range.
int64_t binom(int64_t n, int64_t k);

/// Colex rank of the sorted triple u < v < w:
///   rank = C(w,3) + C(v,2) + C(u,1).
/// Colex order enumerates (0,1,2), (0,1,3), (0,2,3), (1,2,3), (0,1,4), ...
uint32_t triple_rank(int u, int v, int w);
uint32_t triple_rank(const Triple& t);

/// Inverse of triple_rank. `n` bounds the universe: id must be < C(n,3).
Triple triple_unrank(uint32_t id, int n);

/// Colex rank of the sorted pair u < v: rank = C(v,2) + u.
/// Colex order enumerates (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
uint32_t pair_rank(int u, int v);
uint32_t pair_rank(const Pair& p);

/// Inverse of pair_rank. id must be < C(n,2).
Pair pair_unrank(uint32_t id, int n);

/// Returns {u,v,w} sorted ascending; throws invalid_parameter on repeats.
Triple make_triple(int u, int v, int w);

/// Returns {u,v} sorted ascending; throws invalid_parameter if u == v.
Pair make_pair_sorted(int u, int v);

/// Formats an exact rational given in sixths: "7/2", "6", "1/3", "0".
std::string format_sixths(int64_t sixths);

}  // namespace star3
