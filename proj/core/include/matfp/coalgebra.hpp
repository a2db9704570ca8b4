#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matfp/catalog.hpp"
#include "matfp/formal_sum.hpp"
#include "matfp/iso.hpp"
#include "matfp/matroid.hpp"
#include "matfp/rational.hpp"

namespace matfp {

using KeyPair = std::pair<IsoKey, IsoKey>;

inline std::string render_key(const IsoKey& key) { return key.str(); }
inline std::string render_key(const KeyPair& pair) {
  return pair.first.str() + "(x)" + pair.second.str();
}

template <typename Key>
std::string render_sum(const FormalSum<Key>& sum) {
  return sum.render([](const Key& k) { return render_key(k); });
}

// Restriction-contraction coproduct, collected by isomorphism type:
// delta(M) = sum over A of M|A (x) M/A.
FormalSum<KeyPair> coproduct(const Matroid& m);

// Number of subsets A of the ground set of l with l|A = m and l/A = n,
// up to isomorphism.
long long section_coefficient(const Matroid& l, const Matroid& m,
                              const Matroid& n);

// Number of chains 0 = A_0 <= ... <= A_k = ground(l) whose consecutive
// minors l(A_{i-1}, A_i) realize the given parts in order.
long long multisection(const Matroid& l, const std::vector<Matroid>& parts);

// m <= n in the weak order: some bijection onto ground(m) never raises the
// rank of a subset of ground(n).
bool weak_leq(const Matroid& m, const Matroid& n);

// One bigraded component of the minor coalgebra, with the change of basis
// between isomorphism classes and products of irreducibles.
struct WeakOrderComponent {
  int rank = 0;
  int nullity = 0;
  std::vector<IsoKey> keys;  // a linear extension of the weak order
  std::vector<std::vector<Rational>> c;      // c[i][j] = c(keys[i], keys[j])
  std::vector<std::vector<Rational>> c_inv;  // incidence-algebra inverse
};

WeakOrderComponent weak_order_component(const Catalog& cat, int rank,
                                        int nullity);

// q_M = sum over N >= M of c^{-1}(M, N) N; primitive when M is irreducible.
FormalSum<IsoKey> q_primitive(const Catalog& cat, const Matroid& m);

// tau(M (x) N) = L^rank(M) N (x) T^nullity(N) M.
KeyPair twist(const KeyPair& pair);

// (M (x) N) [] (P (x) Q) = (M [] L^rank(N) P) (x) (T^nullity(P) N [] Q).
KeyPair twisted_product(const KeyPair& a, const KeyPair& b);

// delta(M [] N) = delta(M) [] delta(N) under the twisted product; throws
// TheoremViolation with both sides rendered on failure.
void bialgebra_check(const Matroid& m, const Matroid& n);

// A nonzero section coefficient forces M (+) N <= L <= M [] N in the weak
// order; throws TheoremViolation on failure.
void initial_bounds_check(const Matroid& l, const Matroid& m,
                          const Matroid& n);

}  // namespace matfp
