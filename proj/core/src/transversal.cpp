#include "matfp/transversal.hpp"

#include <algorithm>

namespace matfp {

namespace {

// Kuhn's augmenting paths: matches elements of `a` into the sets.  Returns
// the maximum matching size.
int max_matching(SubsetMask a, const std::vector<SubsetMask>& sets) {
  const int k = static_cast<int>(sets.size());
  std::vector<int> owner(k, -1);  // set index -> matched element
  int matched = 0;
  std::vector<char> visited(k);
  auto augment = [&](auto&& self, int elem) -> bool {
    for (int i = 0; i < k; ++i) {
      if (visited[i] || !contains(sets[i], elem)) continue;
      visited[i] = 1;
      if (owner[i] < 0 || self(self, owner[i])) {
        owner[i] = elem;
        return true;
      }
    }
    return false;
  };
  SubsetMask rest = a;
  while (rest) {
    int e = lowest_element(rest);
    rest &= rest - 1;
    std::fill(visited.begin(), visited.end(), 0);
    if (augment(augment, e)) ++matched;
  }
  return matched;
}

}  // namespace

Matroid transversal_from_presentation(const TransversalPresentation& pres) {
  if (pres.n < 0 || pres.n > kMaxGround)
    throw Error(Errc::GroundSetOverflow, "ground set size outside [0,16]");
  for (SubsetMask s : pres.sets)
    if (!subset_of(s, full_mask(pres.n)))
      throw Error(Errc::BadArgument,
                  "presentation set {" + render_set(s) +
                      "} not within ground set");
  const SubsetMask g = full_mask(pres.n);
  const int rank = max_matching(g, pres.sets);
  std::vector<SubsetMask> bases;
  if (rank == 0) {
    bases.push_back(0);
  } else {
    SubsetMask a = full_mask(rank);
    while (a) {
      if (max_matching(a, pres.sets) == rank) bases.push_back(a);
      a = next_k_subset(a, g);
    }
  }
  return Matroid::from_bases_unchecked(pres.n, rank, std::move(bases));
}

TransversalPresentation fp_presentation(const TransversalPresentation& pm,
                                        const TransversalPresentation& pn) {
  if (pm.n + pn.n > kMaxGround)
    throw Error(Errc::GroundSetOverflow, "free product exceeds 16 elements");
  std::vector<SubsetMask> msets;
  for (SubsetMask s : pm.sets)
    if (s != 0) msets.push_back(s);
  const int rank = max_matching(full_mask(pm.n), msets);
  if (static_cast<int>(msets.size()) != rank)
    throw Error(Errc::PresentationRankMismatch,
                "presentation of the left factor has " +
                    std::to_string(msets.size()) +
                    " nonempty sets, expected rank " + std::to_string(rank));

  TransversalPresentation out;
  out.n = pm.n + pn.n;
  const SubsetMask t = full_mask(pn.n) << pm.n;
  for (SubsetMask s : msets) out.sets.push_back(s | t);
  for (SubsetMask s : pn.sets) out.sets.push_back(s << pm.n);
  return out;
}

}  // namespace matfp
