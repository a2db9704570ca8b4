#ifndef MATFP_TRANSVERSAL_HPP
#define MATFP_TRANSVERSAL_HPP

#include <vector>

#include "matfp/matroid.hpp"

namespace matfp {

// A transversal presentation: ground set {0..n-1} and a list of subsets
// A_1..A_k.  A set is independent iff it is a partial transversal (has a
// system of distinct representatives into the A_i).
struct TransversalPresentation {
  int n = 0;
  std::vector<SubsetMask> sets;
};

// Builds the transversal matroid via augmenting-path matchings over all
// subsets.
Matroid transversal_from_presentation(const TransversalPresentation& pres);

// Presentation of the free product of two transversal matroids: with M
// presented by exactly rank(M) nonempty sets A_1..A_r (after dropping empty
// sets; Error(PresentationRankMismatch) otherwise) and N presented by
// B_1..B_k, the product is presented by {A_i + T} for all i followed by the
// shifted B_j.
TransversalPresentation fp_presentation(const TransversalPresentation& pm,
                                        const TransversalPresentation& pn);

}  // namespace matfp

#endif  // MATFP_TRANSVERSAL_HPP
