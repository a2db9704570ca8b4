// Named matroids shared across the test files.
#pragma once

#include "matfp/matroid.hpp"

namespace matfp::fixtures {

inline Matroid E() { return Matroid(); }                  // empty matroid
inline Matroid I() { return Matroid::free_matroid(1); }   // single point
inline Matroid Z() { return Matroid::zero(1); }           // single loop

// Two double points: circuits {0,1} and {2,3}.
inline Matroid D() {
  return Matroid::from_bases(4, 2, {0b0101, 0b0110, 0b1001, 0b1010});
}

// A double point {0,1} and two free points: every pair but {0,1} is a basis.
inline Matroid P() {
  return Matroid::from_bases(4, 2, {0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
}

}  // namespace matfp::fixtures
