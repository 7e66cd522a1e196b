#pragma once
#include <bit>
#include <cstdint>
#include <vector>

namespace seqtop {

using Mask = std::uint32_t;

inline constexpr int kMaxGround = 24;

constexpr Mask bit(int i) { return Mask{1} << i; }
constexpr bool has(Mask m, int i) { return (m >> i) & 1u; }
constexpr bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
constexpr int card(Mask m) { return std::popcount(m); }

inline std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int i = std::countr_zero(m);
    out.push_back(i);
    m &= m - 1;
  }
  return out;
}

// Calls f(s) for every submask s of m, including 0 and m itself.
template <class F>
void for_each_submask(Mask m, F&& f) {
  Mask s = m;
  while (true) {
    f(s);
    if (s == 0) break;
    s = (s - 1) & m;
  }
}

}  // namespace seqtop
