#include "matfp/free_product.hpp"

#include <algorithm>
#include <string>

#include "matfp/matroid_io.hpp"

namespace matfp {

namespace {

void check_combined(const Matroid& m, const Matroid& n) {
  if (m.size() + n.size() > kMaxGround)
    throw Error(Errc::GroundSetOverflow, "free product exceeds 16 elements");
}

struct Split {
  SubsetMask s, t;
};

inline Split split(const Matroid& m, SubsetMask a) {
  return {a & full_mask(m.size()), a >> m.size()};
}

}  // namespace

bool fp_is_independent(const Matroid& m, const Matroid& n, SubsetMask a) {
  auto [as, at] = split(m, a);
  if (!m.is_independent(as)) return false;
  int lack = m.rank() - popcount(as);
  int nul = popcount(at) - n.rank_of(at);
  return lack >= nul;
}

Matroid free_product(const Matroid& m, const Matroid& n) {
  check_combined(m, n);
  const int total = m.size() + n.size();
  const int rho = m.rank() + n.rank();
  std::vector<SubsetMask> bases;
  const SubsetMask g = full_mask(total);
  // every basis has size rho, so walk rho-subsets only
  if (rho == 0) {
    bases.push_back(0);
  } else {
    for (SubsetMask a = full_mask(rho); a; a = next_k_subset(a, g))
      if (fp_is_independent(m, n, a)) bases.push_back(a);
  }
  return Matroid::from_bases_unchecked(total, rho, std::move(bases));
}

std::vector<SubsetMask> fp_bases(const Matroid& m, const Matroid& n) {
  check_combined(m, n);
  std::vector<SubsetMask> out;
  const SubsetMask g = full_mask(m.size() + n.size());
  for (SubsetMask a = 0;; ++a) {
    auto [as, at] = split(m, a);
    if (m.is_independent(as) && n.rank_of(at) == n.rank() &&
        m.rank() - popcount(as) == popcount(at) - n.rank())
      out.push_back(a);
    if (a == g) break;
  }
  return out;
}

int fp_rank(const Matroid& m, const Matroid& n, SubsetMask a) {
  auto [as, at] = split(m, a);
  const int rs = m.rank_of(as);
  const int rt = n.rank_of(at);
  const int lack = m.rank() - rs;
  const int nul = popcount(at) - rt;
  return rs + rt + std::min(lack, nul);
}

int fp_nullity(const Matroid& m, const Matroid& n, SubsetMask a) {
  auto [as, at] = split(m, a);
  const int ns = popcount(as) - m.rank_of(as);
  const int nt = popcount(at) - n.rank_of(at);
  const int lack = m.rank() - m.rank_of(as);
  return ns + nt - std::min(lack, nt);
}

SubsetMask fp_closure(const Matroid& m, const Matroid& n, SubsetMask a) {
  auto [as, at] = split(m, a);
  const int lack = m.rank() - m.rank_of(as);
  const int nul = popcount(at) - n.rank_of(at);
  if (lack > nul) return m.closure(as) | (at << m.size());
  return full_mask(m.size()) | (n.closure(at) << m.size());
}

bool fp_is_flat(const Matroid& m, const Matroid& n, SubsetMask a) {
  auto [as, at] = split(m, a);
  const int lack = m.rank() - m.rank_of(as);
  const int nul = popcount(at) - n.rank_of(at);
  if (lack > nul) return m.is_flat(as);
  return as == full_mask(m.size()) && n.is_flat(at);
}

std::vector<SubsetMask> fp_circuits(const Matroid& m, const Matroid& n) {
  check_combined(m, n);
  std::vector<SubsetMask> out = circuits(m);
  const SubsetMask g = full_mask(m.size() + n.size());
  for (SubsetMask a = 0;; ++a) {
    auto [as, at] = split(m, a);
    if (at != 0 && m.is_independent(as) &&
        m.rank() - popcount(as) + 1 == popcount(at) - n.rank_of(at)) {
      bool isthmusless = true;
      const int rt = n.rank_of(at);
      SubsetMask rest = at;
      while (rest) {
        SubsetMask low = rest & (0u - rest);
        rest ^= low;
        if (n.rank_of(at ^ low) != rt) {
          isthmusless = false;
          break;
        }
      }
      if (isthmusless) out.push_back(a);
    }
    if (a == g) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubsetMask> fp_cyclic_flats(const Matroid& m, const Matroid& n) {
  check_combined(m, n);
  const SubsetMask s = full_mask(m.size());
  std::vector<SubsetMask> out;
  for (SubsetMask z : cyclic_flats(m))
    if (z != s) out.push_back(z);
  if (isthmuses(m) == 0 && loops(n) == 0) out.push_back(s);
  for (SubsetMask b : cyclic_flats(n))
    if (b != 0) out.push_back(s | (b << m.size()));
  std::sort(out.begin(), out.end());
  return out;
}

Matroid free_product_via(FpConstruction c, const Matroid& m,
                         const Matroid& n) {
  check_combined(m, n);
  const int total = m.size() + n.size();
  const SubsetMask g = full_mask(total);
  switch (c) {
    case FpConstruction::Indep: {
      // Maximal sets satisfying the independence predicate, with no prior
      // knowledge of the product rank.
      int best = -1;
      std::vector<SubsetMask> bases;
      for (SubsetMask a = 0;; ++a) {
        if (fp_is_independent(m, n, a)) {
          int sz = popcount(a);
          if (sz > best) {
            best = sz;
            bases.clear();
          }
          if (sz == best) bases.push_back(a);
        }
        if (a == g) break;
      }
      return Matroid::from_bases_unchecked(total, best, std::move(bases));
    }
    case FpConstruction::Bases: {
      std::vector<SubsetMask> bases = fp_bases(m, n);
      return Matroid::from_bases_unchecked(total, m.rank() + n.rank(),
                                           std::move(bases));
    }
    case FpConstruction::Rank: {
      const int rho = fp_rank(m, n, g);
      std::vector<SubsetMask> bases;
      for (SubsetMask a = 0;; ++a) {
        if (popcount(a) == rho && fp_rank(m, n, a) == rho) bases.push_back(a);
        if (a == g) break;
      }
      return Matroid::from_bases_unchecked(total, rho, std::move(bases));
    }
    case FpConstruction::Closure: {
      // A independent iff no x in A lies in the closure of A - x.
      auto indep = [&](SubsetMask a) {
        SubsetMask rest = a;
        while (rest) {
          SubsetMask low = rest & (0u - rest);
          rest ^= low;
          if (fp_closure(m, n, a ^ low) & low) return false;
        }
        return true;
      };
      int best = -1;
      std::vector<SubsetMask> bases;
      for (SubsetMask a = 0;; ++a) {
        if (indep(a)) {
          int sz = popcount(a);
          if (sz > best) {
            best = sz;
            bases.clear();
          }
          if (sz == best) bases.push_back(a);
        }
        if (a == g) break;
      }
      return Matroid::from_bases_unchecked(total, best, std::move(bases));
    }
    case FpConstruction::Circuits: {
      const std::vector<SubsetMask> circ = fp_circuits(m, n);
      auto indep = [&](SubsetMask a) {
        for (SubsetMask c : circ)
          if (subset_of(c, a)) return false;
        return true;
      };
      int best = -1;
      std::vector<SubsetMask> bases;
      for (SubsetMask a = 0;; ++a) {
        if (indep(a)) {
          int sz = popcount(a);
          if (sz > best) {
            best = sz;
            bases.clear();
          }
          if (sz == best) bases.push_back(a);
        }
        if (a == g) break;
      }
      return Matroid::from_bases_unchecked(total, best, std::move(bases));
    }
  }
  throw Error(Errc::BadArgument, "unknown construction");
}

Matroid multi_free_product(const std::vector<Matroid>& ms) {
  Matroid acc;  // empty matroid is the unit
  for (const Matroid& m : ms) acc = free_product(acc, m);
  return acc;
}

bool multi_indep(const std::vector<Matroid>& ms, SubsetMask a) {
  int lack_sum = 0;
  int null_sum = 0;
  int shift = 0;
  for (const Matroid& m : ms) {
    const SubsetMask ai = (a >> shift) & full_mask(m.size());
    const int rk = m.rank_of(ai);
    null_sum += popcount(ai) - rk;
    if (lack_sum < null_sum) return false;
    lack_sum += m.rank() - rk;
    shift += m.size();
  }
  return true;
}

Matroid truncation(const Matroid& m) {
  if (m.rank() == 0) return m;
  const int r = m.rank() - 1;
  std::vector<SubsetMask> bases;
  if (r == 0) {
    bases.push_back(0);
  } else {
    SubsetMask a = full_mask(r);
    const SubsetMask g = m.ground();
    while (a) {
      if (m.is_independent(a)) bases.push_back(a);
      a = next_k_subset(a, g);
    }
  }
  return Matroid::from_bases_unchecked(m.size(), r, std::move(bases));
}

Matroid higgs_lift(const Matroid& m) {
  const int r = std::min(m.size(), m.rank() + 1);
  if (r == m.rank()) return m;
  std::vector<SubsetMask> bases;
  if (r == 0) {
    bases.push_back(0);
  } else {
    SubsetMask a = full_mask(r);
    const SubsetMask g = m.ground();
    while (a) {
      if (popcount(a) - m.rank_of(a) <= 1) bases.push_back(a);
      a = next_k_subset(a, g);
    }
  }
  return Matroid::from_bases_unchecked(m.size(), r, std::move(bases));
}

Matroid truncation_k(const Matroid& m, int i) {
  if (i < 0) throw Error(Errc::BadArgument, "negative truncation power");
  Matroid out = m;
  for (int j = 0; j < i; ++j) out = truncation(out);
  return out;
}

Matroid higgs_lift_k(const Matroid& m, int i) {
  if (i < 0) throw Error(Errc::BadArgument, "negative lift power");
  Matroid out = m;
  for (int j = 0; j < i; ++j) out = higgs_lift(out);
  return out;
}

Matroid minor_of_fp(const Matroid& m, const Matroid& n, SubsetMask u,
                    SubsetMask v) {
  check_combined(m, n);
  const Matroid product = free_product(m, n);
  const Matroid direct = minor(product, u, v);

  auto [us, ut] = split(m, u);
  auto [vs, vt] = split(m, v);
  const int j = popcount(ut) - n.rank_of(ut);   // nullity_N(U_T)
  const int i = m.rank() - m.rank_of(vs);       // rank_lack_M(V_S)
  const Matroid left = minor(truncation_k(m, j), us, vs);
  const Matroid right = minor(higgs_lift_k(n, i), ut, vt);
  const Matroid structured = free_product(left, right);

  if (!(structured == direct)) {
    std::string witness = "minor theorem failed for U={" + render_set(u) +
                          "} V={" + render_set(v) + "}\nM:\n" +
                          render_matroid_full(m) + "N:\n" +
                          render_matroid_full(n) + "direct:\n" +
                          render_matroid_full(direct) + "structured:\n" +
                          render_matroid_full(structured);
    throw TheoremViolation(witness);
  }
  return direct;
}

bool fp_truncation_identity(const Matroid& m, const Matroid& n, int i) {
  const int j = std::max(i - n.rank(), 0);
  return truncation_k(free_product(m, n), i) ==
         free_product(truncation_k(m, j), truncation_k(n, i - j));
}

bool fp_lift_identity(const Matroid& m, const Matroid& n, int i) {
  const int k = std::max(i - (m.size() - m.rank()), 0);
  return higgs_lift_k(free_product(m, n), i) ==
         free_product(higgs_lift_k(m, i - k), higgs_lift_k(n, k));
}

}  // namespace matfp
