#include "matfp/extension.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

namespace matfp {

namespace {

// Fixed-width bitset over flat indices; at most 2^16 flats in principle but
// modular-cut generation is only run on small ground sets, so the word
// vector stays tiny.
using Bits = std::vector<std::uint64_t>;

struct FlatLattice {
  std::vector<SubsetMask> flats;        // ascending by mask
  std::vector<int> index_of;            // mask -> flat index or -1
  std::vector<Bits> up;                 // up[i]: supersets of flat i
  std::vector<Bits> modpair;            // modpair[i]: modular partners of i
  std::vector<std::vector<int>> meet;   // meet[i][j]: index of intersection
  int count = 0;
  int words = 0;

  explicit FlatLattice(const Matroid& m) {
    const SubsetMask g = m.ground();
    index_of.assign(std::size_t{1} << m.size(), -1);
    for (SubsetMask a = 0;; ++a) {
      if (m.is_flat(a)) {
        index_of[a] = count++;
        flats.push_back(a);
      }
      if (a == g) break;
    }
    words = (count + 63) / 64;
    up.assign(count, Bits(words, 0));
    modpair.assign(count, Bits(words, 0));
    meet.assign(count, std::vector<int>(count, 0));
    for (int i = 0; i < count; ++i) {
      for (int j = 0; j < count; ++j) {
        if (subset_of(flats[i], flats[j])) up[i][j >> 6] |= 1ull << (j & 63);
        meet[i][j] = index_of[flats[i] & flats[j]];
      }
    }
    for (int i = 0; i < count; ++i) {
      const int ri = m.rank_of(flats[i]);
      for (int j = i + 1; j < count; ++j) {
        const int join = m.rank_of(m.closure(flats[i] | flats[j]));
        const int lo = m.rank_of(flats[i] & flats[j]);
        if (ri + m.rank_of(flats[j]) == join + lo) {
          modpair[i][j >> 6] |= 1ull << (j & 63);
          modpair[j][i >> 6] |= 1ull << (i & 63);
        }
      }
    }
  }

  static bool test(const Bits& b, int i) {
    return (b[i >> 6] >> (i & 63)) & 1;
  }
  static void set(Bits& b, int i) { b[i >> 6] |= 1ull << (i & 63); }

  // Smallest modular cut containing the given family.
  Bits close(Bits cut) const {
    // A single pass suffices for up-closure since up[] is transitive.
    Bits grown(words, 0);
    for (int i = 0; i < count; ++i)
      if (test(cut, i))
        for (int w = 0; w < words; ++w) grown[w] |= up[i][w];
    cut = std::move(grown);
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < count; ++i) {
        if (!test(cut, i)) continue;
        for (int w = 0; w < words; ++w) {
          std::uint64_t both = modpair[i][w] & cut[w];
          while (both) {
            const int j = (w << 6) + std::countr_zero(both);
            both &= both - 1;
            const int k = meet[i][j];
            if (!test(cut, k)) {
              set(cut, k);
              for (int ww = 0; ww < words; ++ww) cut[ww] |= up[k][ww];
              changed = true;
            }
          }
        }
      }
    }
    return cut;
  }
};

}  // namespace

std::vector<ModularCut> modular_cuts(const Matroid& m) {
  const FlatLattice lat(m);
  std::set<Bits> seen;
  std::vector<Bits> queue;
  const Bits empty(lat.words ? lat.words : 1, 0);
  seen.insert(empty);
  queue.push_back(empty);
  while (!queue.empty()) {
    Bits cur = queue.back();
    queue.pop_back();
    for (int f = 0; f < lat.count; ++f) {
      if (FlatLattice::test(cur, f)) continue;
      Bits next = cur;
      FlatLattice::set(next, f);
      next = lat.close(std::move(next));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<ModularCut> out;
  out.reserve(seen.size());
  for (const Bits& b : seen) {
    ModularCut cut;
    for (int i = 0; i < lat.count; ++i)
      if (FlatLattice::test(b, i)) cut.flats.push_back(lat.flats[i]);
    out.push_back(std::move(cut));
  }
  std::sort(out.begin(), out.end(),
            [](const ModularCut& a, const ModularCut& b) {
              return a.flats < b.flats;
            });
  return out;
}

ModularCut modular_cut_generated_by(const Matroid& m,
                                    const std::vector<SubsetMask>& gens) {
  const FlatLattice lat(m);
  Bits seed(lat.words ? lat.words : 1, 0);
  for (SubsetMask g : gens) {
    if (g >= lat.index_of.size() || lat.index_of[g] < 0)
      throw Error(Errc::InvalidCut,
                  "{" + render_set(g) + "} is not a flat");
    FlatLattice::set(seed, lat.index_of[g]);
  }
  seed = lat.close(std::move(seed));
  ModularCut cut;
  for (int i = 0; i < lat.count; ++i)
    if (FlatLattice::test(seed, i)) cut.flats.push_back(lat.flats[i]);
  return cut;
}

Matroid extend_by_cut_unchecked(const Matroid& m, const ModularCut& cut) {
  if (m.size() + 1 > kMaxGround)
    throw Error(Errc::GroundSetOverflow, "extension exceeds 16 elements");
  auto in_cut = [&](SubsetMask f) {
    return std::binary_search(cut.flats.begin(), cut.flats.end(), f);
  };
  const int e = m.size();
  const SubsetMask ebit = 1u << e;
  std::vector<SubsetMask> bases;
  if (cut.flats.empty()) {  // new isthmus
    for (SubsetMask b : m.bases()) bases.push_back(b | ebit);
    return Matroid::from_bases_unchecked(e + 1, m.rank() + 1,
                                         std::move(bases));
  }
  bases = m.bases();
  const int r = m.rank();
  if (r >= 1) {
    if (r == 1) {
      if (!in_cut(m.closure(0))) bases.push_back(ebit);
    } else {
      SubsetMask a = full_mask(r - 1);
      const SubsetMask g = m.ground();
      while (a) {
        if (m.is_independent(a) && !in_cut(m.closure(a)))
          bases.push_back(a | ebit);
        a = next_k_subset(a, g);
      }
    }
  }
  return Matroid::from_bases_unchecked(e + 1, r, std::move(bases));
}

Matroid extend_by_cut(const Matroid& m, const ModularCut& cut) {
  if (m.size() + 1 > kMaxGround)
    throw Error(Errc::GroundSetOverflow, "extension exceeds 16 elements");
  // Validate: members are flats, sorted, up-closed, modular-pair closed.
  for (std::size_t i = 0; i < cut.flats.size(); ++i) {
    if (i > 0 && cut.flats[i - 1] >= cut.flats[i])
      throw Error(Errc::InvalidCut, "cut members must be sorted and unique");
    if (!m.is_flat(cut.flats[i]))
      throw Error(Errc::InvalidCut,
                  "{" + render_set(cut.flats[i]) + "} is not a flat");
  }
  auto in_cut = [&](SubsetMask f) {
    return std::binary_search(cut.flats.begin(), cut.flats.end(), f);
  };
  for (SubsetMask f : cut.flats) {
    const SubsetMask g = m.ground();
    for (SubsetMask a = f;; ++a) {
      if (subset_of(f, a) && m.is_flat(a) && !in_cut(a))
        throw Error(Errc::InvalidCut, "cut not up-closed at {" +
                                          render_set(a) + "}");
      if (a == g) break;
    }
  }
  for (SubsetMask f : cut.flats) {
    for (SubsetMask h : cut.flats) {
      const int join = m.rank_of(m.closure(f | h));
      if (m.rank_of(f) + m.rank_of(h) == join + m.rank_of(f & h) &&
          !in_cut(f & h))
        throw Error(Errc::InvalidCut,
                    "cut misses the meet of a modular pair: {" +
                        render_set(f) + "}, {" + render_set(h) + "}");
    }
  }
  return extend_by_cut_unchecked(m, cut);
}

}  // namespace matfp
