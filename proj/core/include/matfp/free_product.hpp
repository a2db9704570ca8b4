#ifndef MATFP_FREE_PRODUCT_HPP
#define MATFP_FREE_PRODUCT_HPP

#include <vector>

#include "matfp/matroid.hpp"

namespace matfp {

// The free product M box N lives on {0..n_M-1} (the M part, "S") followed by
// {n_M..n_M+n_N-1} (the N part, "T").  A subset A of the product splits as
// A_S = A & full_mask(n_M) and A_T = A >> n_M.
//
// A is independent iff A_S is independent in M and
//   rank_lack_M(A_S) >= nullity_N(A_T).
bool fp_is_independent(const Matroid& m, const Matroid& n, SubsetMask a);

// Constructs the free product by filtering subsets of the combined ground
// set with the independence predicate.  Throws Error(GroundSetOverflow) when
// n_M + n_N > 16.
Matroid free_product(const Matroid& m, const Matroid& n);

// Independent code paths for the cryptomorphic descriptions of M box N.
// All five construct the same matroid; the cryptomorphism test suite holds
// them against each other.
enum class FpConstruction { Indep, Bases, Rank, Closure, Circuits };
Matroid free_product_via(FpConstruction c, const Matroid& m, const Matroid& n);

// Direct basis characterization: A_S independent in M, A_T spanning in N,
// and rank_lack_M(A_S) == nullity_N(A_T).
std::vector<SubsetMask> fp_bases(const Matroid& m, const Matroid& n);

// rank(A) = rank_M(A_S) + rank_N(A_T) + min{rank_lack_M(A_S), nullity_N(A_T)}
int fp_rank(const Matroid& m, const Matroid& n, SubsetMask a);
// nullity(A) = nullity_M(A_S) + nullity_N(A_T) - min{rank_lack, nullity}
int fp_nullity(const Matroid& m, const Matroid& n, SubsetMask a);

// closure(A) = cl_M(A_S) | A_T  when rank_lack_M(A_S) > nullity_N(A_T),
//            = S | cl_N(A_T)    otherwise.
SubsetMask fp_closure(const Matroid& m, const Matroid& n, SubsetMask a);
bool fp_is_flat(const Matroid& m, const Matroid& n, SubsetMask a);

// Circuits of M, together with the sets C with C_S independent in M, N|C_T
// isthmusless, and rank_lack_M(C_S) + 1 == nullity_N(C_T).
std::vector<SubsetMask> fp_circuits(const Matroid& m, const Matroid& n);

// Cyclic flats: those of M other than S, S itself when M is isthmusless and
// N loopless, and S + B for each nonempty cyclic flat B of N.
std::vector<SubsetMask> fp_cyclic_flats(const Matroid& m, const Matroid& n);

// Left fold of the binary product; the empty product is the empty matroid.
Matroid multi_free_product(const std::vector<Matroid>& ms);

// Iterated independence: A is independent in M_1 box ... box M_k iff for
// every j: sum_{i<j} rank_lack_i(A_i) >= sum_{i<=j} nullity_i(A_i).
bool multi_indep(const std::vector<Matroid>& ms, SubsetMask a);

// Truncation T(M): independents of M of size at most max{0, rank - 1}.
Matroid truncation(const Matroid& m);
// Higgs lift L(M): independents are the sets of nullity at most 1.
Matroid higgs_lift(const Matroid& m);
Matroid truncation_k(const Matroid& m, int i);
Matroid higgs_lift_k(const Matroid& m, int i);

// Minor of a free product via the structure theorem:
//   (M box N)(U,V) = (T^j M)(U_S,V_S) box (L^i N)(U_T,V_T),
// with j = nullity_N(U_T) and i = rank_lack_M(V_S).  Computes both sides and
// throws TheoremViolation with a serialized witness if they differ (which
// must never happen); returns the minor.
Matroid minor_of_fp(const Matroid& m, const Matroid& n, SubsetMask u,
                    SubsetMask v);

// T^i(M box N) == T^j M box T^(i-j) N with j = max{i - rank(N), 0}.
bool fp_truncation_identity(const Matroid& m, const Matroid& n, int i);
// L^i(M box N) == L^(i-k) M box L^k N with k = max{i - nullity(M), 0}.
bool fp_lift_identity(const Matroid& m, const Matroid& n, int i);

}  // namespace matfp

#endif  // MATFP_FREE_PRODUCT_HPP
