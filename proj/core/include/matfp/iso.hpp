#ifndef MATFP_ISO_HPP
#define MATFP_ISO_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "matfp/matroid.hpp"

namespace matfp {

// Canonical label of an isomorphism class: ground size, rank, and the revlex
// basis indicator string of the canonical relabeling.  Ordered by (n, r,
// string), which keeps catalogs deterministic.
struct IsoKey {
  int n = 0;
  int r = 0;
  std::string canon;

  friend auto operator<=>(const IsoKey&, const IsoKey&) = default;

  std::string str() const {
    return std::to_string(n) + ":" + std::to_string(r) + ":" + canon;
  }
  static IsoKey parse(const std::string& s);
};

// Per-element relabeling invariants: loop/isthmus flags, number of bases
// through the element, and the sorted multiset of sizes of circuits through
// it.
struct ElementProfile {
  bool loop = false;
  bool isthmus = false;
  int bases_through = 0;
  std::vector<int> circuit_sizes;

  friend auto operator<=>(const ElementProfile&,
                          const ElementProfile&) = default;
};

std::vector<ElementProfile> invariant_profile(const Matroid& m);

struct CanonicalResult {
  Matroid matroid;
  std::vector<std::uint8_t> perm;  // perm[original element] = new label
};

// Relabeling of m whose revlex basis string is lexicographically minimal
// over all n! permutations.  Exact branch-and-bound: positions are assigned
// low to high, and a branch is cut as soon as its determined string prefix
// exceeds the incumbent.  Element profiles only order the search.
CanonicalResult canonical_form(const Matroid& m);

IsoKey iso_key(const Matroid& m);

bool are_isomorphic(const Matroid& a, const Matroid& b);

// Canonical representative encoded by a key.  The unchecked variant skips
// basis-axiom validation and is for keys produced by iso_key.
Matroid matroid_from_key(const IsoKey& k);
Matroid matroid_from_key_unchecked(const IsoKey& k);

}  // namespace matfp

#endif  // MATFP_ISO_HPP
