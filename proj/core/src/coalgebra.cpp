#include "matfp/coalgebra.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include "matfp/errors.hpp"
#include "matfp/free_product.hpp"
#include "matfp/matroid_io.hpp"

namespace matfp {

FormalSum<KeyPair> coproduct(const Matroid& m) {
  FormalSum<KeyPair> sum;
  const SubsetMask g = m.ground();
  for (SubsetMask a = 0;; ++a) {
    sum.add({iso_key(restrict_to(m, a)), iso_key(contract(m, a))}, 1);
    if (a == g) break;
  }
  return sum;
}

long long section_coefficient(const Matroid& l, const Matroid& m,
                              const Matroid& n) {
  if (m.size() + n.size() != l.size()) return 0;
  if (m.rank() + n.rank() != l.rank()) return 0;
  const IsoKey km = iso_key(m), kn = iso_key(n);
  long long total = 0;
  auto consider = [&](SubsetMask a) {
    if (l.rank_of(a) != m.rank()) return;
    Matroid restr = restrict_to(l, a);
    if (restr.bases().size() != m.bases().size() || iso_key(restr) != km)
      return;
    Matroid con = contract(l, a);
    if (con.bases().size() != n.bases().size() || iso_key(con) != kn) return;
    ++total;
  };
  if (m.size() == 0) {
    consider(0);
  } else {
    const SubsetMask g = l.ground();
    for (SubsetMask a = full_mask(m.size()); a; a = next_k_subset(a, g))
      consider(a);
  }
  return total;
}

namespace {

// Depth-first count of flags, memoized on the isomorphism type of the
// yet-unconsumed contraction.
struct FlagScan {
  const std::vector<Matroid>& parts;
  std::vector<IsoKey> part_keys;
  std::map<std::pair<IsoKey, std::size_t>, long long> memo;

  explicit FlagScan(const std::vector<Matroid>& p) : parts(p) {
    part_keys.reserve(parts.size());
    for (const Matroid& part : parts) part_keys.push_back(iso_key(part));
  }

  long long count(const Matroid& cur, std::size_t i) {
    if (i == parts.size()) return cur.size() == 0 ? 1 : 0;
    const Matroid& part = parts[i];
    if (part.size() > cur.size()) return 0;
    if (part.size() == 0) return count(cur, i + 1);
    const auto mk = std::make_pair(iso_key(cur), i);
    if (auto it = memo.find(mk); it != memo.end()) return it->second;
    long long total = 0;
    const SubsetMask g = cur.ground();
    for (SubsetMask a = full_mask(part.size()); a; a = next_k_subset(a, g)) {
      if (cur.rank_of(a) != part.rank()) continue;
      Matroid restr = restrict_to(cur, a);
      if (restr.bases().size() != part.bases().size() ||
          iso_key(restr) != part_keys[i])
        continue;
      total += count(contract(cur, a), i + 1);
    }
    memo.emplace(mk, total);
    return total;
  }
};

}  // namespace

long long multisection(const Matroid& l, const std::vector<Matroid>& parts) {
  int size_total = 0, rank_total = 0;
  for (const Matroid& part : parts) {
    size_total += part.size();
    rank_total += part.rank();
  }
  if (size_total != l.size() || rank_total != l.rank()) return 0;
  FlagScan scan(parts);
  return scan.count(l, 0);
}

bool weak_leq(const Matroid& m, const Matroid& n) {
  if (m.size() != n.size())
    throw Error(Errc::SizeMismatch,
                "the weak order compares matroids of equal size");
  const int sz = m.size();
  if (m.rank() > n.rank()) return false;
  // A weak map image of an independent set is independent, so m cannot have
  // more independent sets of any size than n does.
  std::vector<int> im(sz + 1, 0), in(sz + 1, 0);
  const SubsetMask g = full_mask(sz);
  for (SubsetMask a = 0;; ++a) {
    const int p = popcount(a);
    if (m.rank_of(a) == p) ++im[p];
    if (n.rank_of(a) == p) ++in[p];
    if (a == g) break;
  }
  for (int k = 0; k <= sz; ++k)
    if (im[k] > in[k]) return false;
  // A bijection works iff every circuit of n lands on a dependent set of m;
  // assign images element by element and test each circuit as soon as it is
  // fully assigned.
  std::vector<std::vector<SubsetMask>> by_last(sz);
  for (SubsetMask c : circuits(n))
    by_last[31 - std::countl_zero(std::uint32_t(c))].push_back(c);
  std::vector<int> img(sz, -1);
  SubsetMask used = 0;
  std::function<bool(int)> dfs = [&](int j) -> bool {
    if (j == sz) return true;
    for (int v = 0; v < sz; ++v) {
      const SubsetMask vbit = SubsetMask{1} << v;
      if (used & vbit) continue;
      img[j] = v;
      used |= vbit;
      bool ok = true;
      for (SubsetMask c : by_last[j]) {
        SubsetMask image = 0;
        for (SubsetMask x = c; x; x &= x - 1)
          image |= SubsetMask{1} << img[std::countr_zero(x)];
        if (m.rank_of(image) == popcount(c)) {
          ok = false;
          break;
        }
      }
      if (ok && dfs(j + 1)) return true;
      used &= ~vbit;
    }
    return false;
  };
  return dfs(0);
}

WeakOrderComponent weak_order_component(const Catalog& cat, int rank,
                                        int nullity) {
  const int n = rank + nullity;
  if (rank < 0 || nullity < 0 || n > cat.max_n)
    throw Error(Errc::IncompleteCatalog,
                "component (" + std::to_string(rank) + "," +
                    std::to_string(nullity) + ") needs a catalog of depth " +
                    std::to_string(n));
  WeakOrderComponent comp;
  comp.rank = rank;
  comp.nullity = nullity;
  std::vector<const CatalogEntry*> ents;
  for (const auto& [key, entry] : cat.entries)
    if (key.n == n && key.r == rank) ents.push_back(&entry);
  const std::size_t cnt = ents.size();
  std::vector<std::vector<bool>> below(cnt, std::vector<bool>(cnt, false));
  for (std::size_t i = 0; i < cnt; ++i)
    for (std::size_t j = 0; j < cnt; ++j)
      if (i != j) below[i][j] = weak_leq(ents[i]->matroid, ents[j]->matroid);
  // Stable topological order: repeatedly take the first class all of whose
  // strict predecessors are placed.
  std::vector<std::size_t> order;
  std::vector<bool> placed(cnt, false);
  while (order.size() < cnt) {
    std::size_t pick = cnt;
    for (std::size_t j = 0; j < cnt && pick == cnt; ++j) {
      if (placed[j]) continue;
      bool ready = true;
      for (std::size_t i = 0; i < cnt && ready; ++i)
        if (i != j && below[i][j] && !placed[i]) ready = false;
      if (ready) pick = j;
    }
    if (pick == cnt)
      throw TheoremViolation("weak order contains a cycle in component (" +
                             std::to_string(rank) + "," +
                             std::to_string(nullity) + ")");
    placed[pick] = true;
    order.push_back(pick);
  }
  comp.keys.reserve(cnt);
  std::vector<const CatalogEntry*> sorted;
  for (std::size_t pos : order) {
    sorted.push_back(ents[pos]);
    comp.keys.push_back(iso_key(ents[pos]->matroid));
  }
  std::vector<std::vector<Matroid>> factors(cnt);
  for (std::size_t j = 0; j < cnt; ++j)
    for (const IsoKey& fk : sorted[j]->factor_keys)
      factors[j].push_back(matroid_from_key(fk));
  comp.c.assign(cnt, std::vector<Rational>(cnt, 0));
  comp.c_inv.assign(cnt, std::vector<Rational>(cnt, 0));
  for (std::size_t i = 0; i < cnt; ++i) {
    for (std::size_t j = 0; j < cnt; ++j) {
      const long long value = multisection(sorted[i]->matroid, factors[j]);
      if (value != 0 && i > j)
        throw TheoremViolation("nonzero section coefficient below the "
                               "diagonal: c(" +
                               comp.keys[i].str() + ", " + comp.keys[j].str() +
                               ") = " + std::to_string(value));
      comp.c[i][j] = value;
    }
    if (comp.c[i][i] == 0)
      throw TheoremViolation("c(M, M) vanished for " + comp.keys[i].str());
  }
  for (std::size_t i = 0; i < cnt; ++i) {
    comp.c_inv[i][i] = Rational(1) / comp.c[i][i];
    for (std::size_t j = i + 1; j < cnt; ++j) {
      Rational acc = 0;
      for (std::size_t p = i; p < j; ++p)
        acc += comp.c_inv[i][p] * comp.c[p][j];
      comp.c_inv[i][j] = -acc / comp.c[j][j];
    }
  }
  return comp;
}

FormalSum<IsoKey> q_primitive(const Catalog& cat, const Matroid& m) {
  const IsoKey key = iso_key(m);
  cat.at(key);
  WeakOrderComponent comp =
      weak_order_component(cat, m.rank(), m.nullity());
  std::size_t idx = comp.keys.size();
  for (std::size_t i = 0; i < comp.keys.size(); ++i)
    if (comp.keys[i] == key) idx = i;
  if (idx == comp.keys.size())
    throw Error(Errc::IncompleteCatalog, "class " + key.str() +
                                             " missing from its component");
  FormalSum<IsoKey> q;
  for (std::size_t j = 0; j < comp.keys.size(); ++j)
    q.add(comp.keys[j], comp.c_inv[idx][j]);
  return q;
}

KeyPair twist(const KeyPair& pair) {
  const Matroid a = matroid_from_key_unchecked(pair.first);
  const Matroid b = matroid_from_key_unchecked(pair.second);
  return {iso_key(higgs_lift_k(b, a.rank())),
          iso_key(truncation_k(a, b.nullity()))};
}

KeyPair twisted_product(const KeyPair& a, const KeyPair& b) {
  const Matroid m = matroid_from_key_unchecked(a.first);
  const Matroid n = matroid_from_key_unchecked(a.second);
  const Matroid p = matroid_from_key_unchecked(b.first);
  const Matroid q = matroid_from_key_unchecked(b.second);
  return {iso_key(free_product(m, higgs_lift_k(p, n.rank()))),
          iso_key(free_product(truncation_k(n, p.nullity()), q))};
}

void bialgebra_check(const Matroid& m, const Matroid& n) {
  const FormalSum<KeyPair> lhs = coproduct(free_product(m, n));
  const FormalSum<KeyPair> dm = coproduct(m);
  const FormalSum<KeyPair> dn = coproduct(n);
  FormalSum<KeyPair> rhs;
  std::map<std::pair<KeyPair, KeyPair>, KeyPair> memo;
  for (const auto& [tm, cm] : dm.terms()) {
    for (const auto& [tn, cn] : dn.terms()) {
      const auto mk = std::make_pair(tm, tn);
      auto it = memo.find(mk);
      if (it == memo.end())
        it = memo.emplace(mk, twisted_product(tm, tn)).first;
      rhs.add(it->second, cm * cn);
    }
  }
  if (!(lhs == rhs))
    throw TheoremViolation(
        "coproduct is not multiplicative:\nM:\n" + render_matroid_full(m) +
        "N:\n" + render_matroid_full(n) + "delta(M[]N) = " + render_sum(lhs) +
        "\ndelta(M)[]delta(N) = " + render_sum(rhs));
}

void initial_bounds_check(const Matroid& l, const Matroid& m,
                          const Matroid& n) {
  if (section_coefficient(l, m, n) == 0) return;
  if (!weak_leq(direct_sum(m, n), l) || !weak_leq(l, free_product(m, n)))
    throw TheoremViolation(
        "section coefficient bounds fail:\nL:\n" + render_matroid_full(l) +
        "M:\n" + render_matroid_full(m) + "N:\n" + render_matroid_full(n));
}

}  // namespace matfp
