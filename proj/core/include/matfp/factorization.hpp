#ifndef MATFP_FACTORIZATION_HPP
#define MATFP_FACTORIZATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "matfp/matroid.hpp"

namespace matfp {

// A family of subsets of {0..n-1}, sorted ascending by mask.
struct SetFamily {
  int n = 0;
  std::vector<SubsetMask> members;

  bool contains(SubsetMask a) const;
};

// A chain 0 = chain[0] < chain[1] < ... < chain.back() = full ground set,
// strictly nested.  The empty matroid has the one-entry chain {0}.
using Flag = std::vector<SubsetMask>;

// A is a free separator iff it is comparable by inclusion to every cyclic
// flat; equivalently M = M|A box M/A.
bool is_free_separator(const Matroid& m, SubsetMask a);
SetFamily free_separators(const Matroid& m);

// The complete sublattice of 2^S generated by the cyclic flats (closure of
// cyclic flats + {0, S} under pairwise union and intersection).
SetFamily d_lattice(const Matroid& m);

// Members comparable to every member of the family; always a chain when the
// family is closed under union and intersection.
Flag pinchpoints(const SetFamily& f);

// Pinchpoints of d_lattice(m): the canonical chain of free separators whose
// steps are the primary factors.
Flag primary_flag(const Matroid& m);

enum class FactorizationFlavor { Primary, Irreducible, Custom };

struct Factorization {
  Flag chain;                    // in original labels
  std::vector<Matroid> factors;  // minors along consecutive chain steps
  FactorizationFlavor flavor = FactorizationFlavor::Custom;
  // Position j of the stacked product corresponds to original element
  // element_order[j] (chain blocks in order, ascending inside each block).
  std::vector<std::uint8_t> element_order;

  // multi_free_product(factors) relabeled back along element_order; equals
  // the source matroid bit-exactly.
  Matroid reconstruct() const;
};

// Factorization along an explicit chain of free separators.  Throws
// Error(NotAFreeSeparator) naming the offending entry, Error(BadArgument)
// if the chain is not strictly nested from 0 to S.
Factorization chain_factorization(
    const Matroid& m, const Flag& chain,
    FactorizationFlavor flavor = FactorizationFlavor::Custom);

// Factorization along the primary flag; factors are irreducible or uniform.
// Throws Error(EmptyMatroid) on the empty matroid.
Factorization primary_factorization(const Matroid& m);

// Complete factorization into irreducibles: refines each uniform primary
// factor U_{r,m} into r free points then m-r loops along the
// order-preserving maximal chain.  The empty matroid yields zero factors
// with flavor Custom.
Factorization factor_irreducible(const Matroid& m);

// A nonempty matroid is irreducible iff it has no nontrivial free separator.
// Computed from free_separators and cross-checked against the pinchpoint
// criterion (uniform matroids: irreducible iff n == 1); throws
// Error(EmptyMatroid) on the empty matroid.
bool is_irreducible(const Matroid& m);

// One MATROID block per factor preceded by a CHAIN= line with the separator
// chain masks in hex.
std::string render_factorization(const Factorization& f);

}  // namespace matfp

#endif  // MATFP_FACTORIZATION_HPP
