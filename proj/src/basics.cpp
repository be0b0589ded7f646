#include "star3/basics.hpp"

#include <algorithm>

namespace star3 {

int64_t binom(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  int64_t r = 1;
  for (int64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;  // exact: r*(n-k+i) is divisible by i here
  }
  return r;
}

uint32_t triple_rank(int u, int v, int w) {
  if (!(0 <= u && u < v && v < w)) {
    throw invalid_parameter("triple_rank: need 0 <= u < v < w");
  }
  return static_cast<uint32_t>(binom(w, 3) + binom(v, 2) + u);
}

uint32_t triple_rank(const Triple& t) { return triple_rank(t[0], t[1], t[2]); }

Triple triple_unrank(uint32_t id, int n) {
  if (n < 3 || id >= binom(n, 3)) {
    throw invalid_parameter("triple_unrank: id out of range for n");
  }
  int64_t r = id;
  int w = 2;
  while (binom(w + 1, 3) <= r) ++w;
  r -= binom(w, 3);
  int v = 1;
  while (binom(v + 1, 2) <= r) ++v;
  r -= binom(v, 2);
  return Triple{static_cast<int>(r), v, w};
}

uint32_t pair_rank(int u, int v) {
  if (!(0 <= u && u < v)) throw invalid_parameter("pair_rank: need 0 <= u < v");
  return static_cast<uint32_t>(binom(v, 2) + u);
}

uint32_t pair_rank(const Pair& p) { return pair_rank(p[0], p[1]); }

Pair pair_unrank(uint32_t id, int n) {
  if (n < 2 || id >= binom(n, 2)) {
    throw invalid_parameter("pair_unrank: id out of range for n");
  }
  int64_t r = id;
  int v = 1;
  while (binom(v + 1, 2) <= r) ++v;
  r -= binom(v, 2);
  return Pair{static_cast<int>(r), v};
}

Triple make_triple(int u, int v, int w) {
  Triple t{u, v, w};
  std::sort(t.begin(), t.end());
  if (t[0] == t[1] || t[1] == t[2]) {
    throw invalid_parameter("make_triple: repeated vertex");
  }
  return t;
}

Pair make_pair_sorted(int u, int v) {
  if (u == v) throw invalid_parameter("make_pair_sorted: repeated vertex");
  return u < v ? Pair{u, v} : Pair{v, u};
}

std::string format_sixths(int64_t sixths) {
  int64_t num = sixths, den = 6;
  int64_t g = std::__gcd(num < 0 ? -num : num, den);
  if (g == 0) return "0";
  num /= g;
  den /= g;
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

}  // namespace star3
