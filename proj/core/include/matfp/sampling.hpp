#pragma once

#include <random>
#include <vector>

#include "matfp/extension.hpp"
#include "matfp/matroid.hpp"

namespace matfp {

// mt19937_64 has a fully specified sequence, so seeded sweeps reproduce
// exactly; raw modulo draws keep them independent of distribution internals.
using Rng = std::mt19937_64;

inline SubsetMask random_subset(Rng& rng, SubsetMask ground) {
  return SubsetMask(rng()) & ground;
}

// Grows a matroid one random single-element extension at a time.  Each step
// extends by the modular cut generated by a few random closures, which
// reaches loops, isthmuses, and every principal cut.
inline Matroid random_matroid(Rng& rng, int n) {
  Matroid m;
  for (int e = 0; e < n; ++e) {
    std::vector<SubsetMask> gens;
    const std::size_t picks = rng() % 4;
    for (std::size_t i = 0; i < picks; ++i)
      gens.push_back(m.closure(random_subset(rng, m.ground())));
    m = extend_by_cut_unchecked(m, modular_cut_generated_by(m, gens));
  }
  return m;
}

}  // namespace matfp
