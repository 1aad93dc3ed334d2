#pragma once

#include <bit>
#include <cstdint>

namespace zpcheck {

using Mask = std::uint64_t;

// Vertex sets are stored as bitmasks internally; bit (i-1) stands for vertex i.
inline constexpr int kMaxVertices = 62;

constexpr Mask vertex_bit(int i) { return Mask{1} << (i - 1); }
constexpr Mask full_mask(int n) { return n == 0 ? 0 : (~Mask{0} >> (64 - n)); }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Calls fn(mask) for every k-subset of {1..n} in increasing numeric mask order
// (Gosper's hack). Stops early when fn returns false.
template <typename Fn>
bool for_each_subset_of_size(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  if (k == 0) return fn(Mask{0});
  Mask s = full_mask(k);
  const Mask limit = Mask{1} << n;
  while (s < limit) {
    if (!fn(s)) return false;
    const Mask c = s & (~s + 1);
    const Mask r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return true;
}

}  // namespace zpcheck
