#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace mtp {

/// A subset of a finite carrier of at most 64 points, one bit per point.
using Mask = std::uint64_t;

inline constexpr Mask bit(int i) { return Mask{1} << i; }

inline constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

inline constexpr bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

inline constexpr int popcount(Mask a) { return std::popcount(a); }

inline constexpr bool is_singleton(Mask a) { return a != 0 && (a & (a - 1)) == 0; }

inline int lowest(Mask a) { return std::countr_zero(a); }

/// Indices of the set bits of `a`, ascending.
inline std::vector<int> members(Mask a) {
  std::vector<int> out;
  while (a) {
    out.push_back(std::countr_zero(a));
    a &= a - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& idx) {
  Mask m = 0;
  for (int i : idx) m |= bit(i);
  return m;
}

/// "{0,2}" style rendering used in witnesses and reports.
inline std::string show(Mask a) {
  std::string s = "{";
  bool first = true;
  for (int i : members(a)) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace mtp
