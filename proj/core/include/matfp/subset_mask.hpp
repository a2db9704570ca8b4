#ifndef MATFP_SUBSET_MASK_HPP
#define MATFP_SUBSET_MASK_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace matfp {

// A subset of a ground set {0,...,n-1} with n <= 16, stored as a bitmask.
// Element i corresponds to bit i.  Plain functions over std::uint32_t keep
// subset arithmetic branch-free and cheap in the hot enumeration loops.
using SubsetMask = std::uint32_t;

constexpr int kMaxGround = 16;

constexpr SubsetMask full_mask(int n) {
  return (n == 0) ? 0u : ((1u << n) - 1u);
}

constexpr bool contains(SubsetMask a, int e) { return (a >> e) & 1u; }

constexpr bool subset_of(SubsetMask a, SubsetMask b) { return (a & ~b) == 0; }

constexpr bool comparable(SubsetMask a, SubsetMask b) {
  return subset_of(a, b) || subset_of(b, a);
}

inline int popcount(SubsetMask a) { return std::popcount(a); }

// Position of the lowest set bit; undefined for 0.
inline int lowest_element(SubsetMask a) { return std::countr_zero(a); }

inline std::vector<int> elements_of(SubsetMask a) {
  std::vector<int> out;
  while (a) {
    int e = std::countr_zero(a);
    out.push_back(e);
    a &= a - 1;
  }
  return out;
}

inline SubsetMask mask_of(const std::vector<int>& elems) {
  SubsetMask m = 0;
  for (int e : elems) m |= 1u << e;
  return m;
}

// Next k-subset in ascending numeric (revlex) order; Gosper's hack.
// Returns 0 when the input was the last k-subset below the given limit.
inline SubsetMask next_k_subset(SubsetMask v, SubsetMask limit) {
  if (v == 0) return 0;
  SubsetMask c = v & (0u - v);
  SubsetMask r = v + c;
  SubsetMask next = (((r ^ v) >> 2) / c) | r;
  return next > limit ? 0 : next;
}

// Renders "0,2,3" in ascending element order, or "-" for the empty set.
inline std::string render_set(SubsetMask a) {
  if (a == 0) return "-";
  std::string s;
  for (int e : elements_of(a)) {
    if (!s.empty()) s += ',';
    s += std::to_string(e);
  }
  return s;
}

}  // namespace matfp

#endif  // MATFP_SUBSET_MASK_HPP
