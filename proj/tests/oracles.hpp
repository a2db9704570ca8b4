// Slow reference implementations, straight from the definitions.  Every one
// of these works from the basis list alone so they cannot share bugs with the
// incremental algorithms in the library.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "matfp/matroid.hpp"
#include "matfp/subset_mask.hpp"

namespace matfp::oracle {

// rank as the largest intersection with a basis
inline int rank(const Matroid& m, SubsetMask a) {
  int best = 0;
  for (SubsetMask b : m.bases()) best = std::max(best, popcount(b & a));
  return best;
}

// closure as the set of elements not raising the rank
inline SubsetMask closure(const Matroid& m, SubsetMask a) {
  const int r = rank(m, a);
  SubsetMask out = a;
  for (int e = 0; e < m.size(); ++e)
    if (rank(m, a | (1u << e)) == r) out |= 1u << e;
  return out;
}

// circuits as the dependent sets whose single-element deletions are all
// independent
inline std::vector<SubsetMask> circuits(const Matroid& m) {
  std::vector<SubsetMask> out;
  for (SubsetMask x = 1; x <= m.ground(); ++x) {
    if (rank(m, x) == popcount(x)) continue;
    bool minimal = true;
    for (SubsetMask rest = x; rest;) {
      const SubsetMask e = rest & (0u - rest);
      rest ^= e;
      if (rank(m, x ^ e) != popcount(x) - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

// cyclic flats as the flats whose restriction has no isthmus
inline std::vector<SubsetMask> cyclic_flats(const Matroid& m) {
  std::vector<SubsetMask> out;
  for (SubsetMask x = 0;; ++x) {
    if (closure(m, x) == x) {
      bool cyclic = true;
      for (SubsetMask rest = x; rest && cyclic;) {
        const SubsetMask e = rest & (0u - rest);
        rest ^= e;
        if (rank(m, x ^ e) < rank(m, x)) cyclic = false;
      }
      if (cyclic) out.push_back(x);
    }
    if (x == m.ground()) break;
  }
  return out;
}

// rank axioms, checked over every pair of subsets
inline bool satisfies_rank_axioms(const Matroid& m) {
  const SubsetMask g = m.ground();
  for (SubsetMask a = 0;; ++a) {
    const int ra = rank(m, a);
    if (ra < 0 || ra > popcount(a)) return false;
    for (SubsetMask b = 0;; ++b) {
      const int rb = rank(m, b);
      if (subset_of(a, b) && ra > rb) return false;
      if (rank(m, a | b) + rank(m, a & b) > ra + rb) return false;
      if (b == g) break;
    }
    if (a == g) break;
  }
  return true;
}

// isomorphism by trying all permutations of the ground set
inline bool isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size())
    return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<SubsetMask> target = b.bases();
  std::sort(target.begin(), target.end());
  do {
    std::vector<SubsetMask> mapped;
    for (SubsetMask basis : a.bases()) {
      SubsetMask img = 0;
      for (int e = 0; e < a.size(); ++e)
        if (basis & (1u << e)) img |= 1u << perm[e];
      mapped.push_back(img);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace matfp::oracle
