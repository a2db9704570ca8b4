#ifndef MATFP_EXTENSION_HPP
#define MATFP_EXTENSION_HPP

#include <vector>

#include "matfp/matroid.hpp"

namespace matfp {

// A modular cut: an up-closed family of flats closed under intersections of
// modular pairs (rho F + rho G == rho(F join G) + rho(F meet G)).  Modular
// cuts classify the single-element extensions of a matroid; the empty cut
// adds an isthmus, the full cut a loop.
struct ModularCut {
  std::vector<SubsetMask> flats;  // sorted ascending
};

// All modular cuts, sorted lexicographically by member list.  Generated by
// closing seed families under up-closure and modular-pair meets.
std::vector<ModularCut> modular_cuts(const Matroid& m);

// Smallest modular cut containing the given flats; throws
// Error(InvalidCut) if a generator is not a flat.
ModularCut modular_cut_generated_by(const Matroid& m,
                                    const std::vector<SubsetMask>& gens);

// Single-element extension by a modular cut: the new element n is
// independent over A iff A is independent and cl(A) lies outside the cut.
// Validates the cut; throws Error(InvalidCut).
Matroid extend_by_cut(const Matroid& m, const ModularCut& cut);

// Same construction without cut validation, for cuts coming straight out of
// modular_cuts.
Matroid extend_by_cut_unchecked(const Matroid& m, const ModularCut& cut);

}  // namespace matfp

#endif  // MATFP_EXTENSION_HPP
