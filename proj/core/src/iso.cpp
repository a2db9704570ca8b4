#include "matfp/iso.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "matfp/matroid_io.hpp"

namespace matfp {

IsoKey IsoKey::parse(const std::string& s) {
  std::size_t p1 = s.find(':');
  std::size_t p2 = (p1 == std::string::npos) ? p1 : s.find(':', p1 + 1);
  if (p2 == std::string::npos)
    throw Error(Errc::ParseError, "iso key must be n:r:<indicator>");
  IsoKey k;
  try {
    k.n = std::stoi(s.substr(0, p1));
    k.r = std::stoi(s.substr(p1 + 1, p2 - p1 - 1));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad integers in iso key '" + s + "'");
  }
  k.canon = s.substr(p2 + 1);
  return k;
}

std::vector<ElementProfile> invariant_profile(const Matroid& m) {
  std::vector<ElementProfile> prof(m.size());
  const SubsetMask lp = loops(m);
  const SubsetMask is = isthmuses(m);
  for (int e = 0; e < m.size(); ++e) {
    prof[e].loop = contains(lp, e);
    prof[e].isthmus = contains(is, e);
  }
  for (SubsetMask b : m.bases()) {
    SubsetMask rest = b;
    while (rest) {
      int e = lowest_element(rest);
      rest &= rest - 1;
      ++prof[e].bases_through;
    }
  }
  for (SubsetMask c : circuits(m)) {
    const int sz = popcount(c);
    SubsetMask rest = c;
    while (rest) {
      int e = lowest_element(rest);
      rest &= rest - 1;
      prof[e].circuit_sizes.push_back(sz);
    }
  }
  for (auto& p : prof)
    std::sort(p.circuit_sizes.begin(), p.circuit_sizes.end());
  return prof;
}

namespace {

struct CanonSearch {
  const Matroid& m;
  int n, r;
  std::vector<std::uint64_t> basis_bits;  // indicator over all 2^n masks
  std::vector<int> order;                 // element try-order heuristic
  std::vector<std::size_t> offset;        // offset[d] = C(d, r) string prefix
  std::string best;
  std::vector<std::uint8_t> best_pos;  // position -> original element
  std::string buf;
  std::vector<std::uint8_t> pos;
  std::vector<SubsetMask> orig_bit;  // orig_bit[position] = 1 << element
  SubsetMask used = 0;

  explicit CanonSearch(const Matroid& mm) : m(mm), n(mm.size()), r(mm.rank()) {
    basis_bits.assign(((std::size_t{1} << n) + 63) / 64, 0);
    for (SubsetMask b : m.bases()) basis_bits[b >> 6] |= 1ull << (b & 63);
    offset.assign(n + 1, 0);
    for (int d = 0; d <= n; ++d) {
      std::uint64_t c = 1;
      for (int i = 0; i < r; ++i)
        c = (i < d) ? c * (d - i) / (i + 1) : 0;
      offset[d] = (r == 0) ? 1 : c;
    }
    auto prof = invariant_profile(m);
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return prof[a] < prof[b];
    });
    best = revlex_basis_string(m);
    best_pos.resize(n);
    std::iota(best_pos.begin(), best_pos.end(), 0);
    buf.assign(best.size(), '0');
    pos.resize(n);
    orig_bit.resize(n);
  }

  bool is_basis_mask(SubsetMask a) const {
    return (basis_bits[a >> 6] >> (a & 63)) & 1;
  }

  // Writes the string block determined by assigning position d (subsets of
  // positions {0..d} that contain d), comparing against the incumbent.
  // Returns -1 to prune (block exceeds the incumbent), 0 on a tie, 1 when
  // strictly ahead.  On 1 the block is still written out in full so the
  // caller can rebase the incumbent.
  int write_block(int d) {
    if (r == 0 || d + 1 < r) return 0;
    std::size_t off = offset[d];
    int result = 0;
    auto emit = [&](SubsetMask orig) {
      char c = is_basis_mask(orig) ? '1' : '0';
      buf[off] = c;
      if (result == 0 && c != best[off]) result = (c < best[off]) ? 1 : -1;
      ++off;
    };
    if (r == 1) {
      emit(orig_bit[d]);
      return result;
    }
    // (r-1)-subsets Q of positions {0..d-1} in ascending mask order.
    SubsetMask q = full_mask(r - 1);
    const SubsetMask limit = full_mask(d);
    while (q) {
      if (result < 0) return -1;
      SubsetMask orig = orig_bit[d];
      SubsetMask rest = q;
      while (rest) {
        int p = lowest_element(rest);
        rest &= rest - 1;
        orig |= orig_bit[p];
      }
      emit(orig);
      q = next_k_subset(q, limit);
    }
    return result;
  }

  // Fills positions d..n-1 with the unused elements in heuristic order and
  // takes the resulting full string as the new incumbent.  Called when the
  // current prefix strictly beats the incumbent, so that every comparison in
  // the search stays relative to an achieved string.
  void rebase(int d) {
    const SubsetMask saved = used;
    for (int dd = d; dd < n; ++dd) {
      for (int e : order) {
        if (contains(used, e)) continue;
        pos[dd] = static_cast<std::uint8_t>(e);
        orig_bit[dd] = 1u << e;
        used |= 1u << e;
        break;
      }
      write_block_plain(dd);
    }
    best = buf;
    for (int j = 0; j < n; ++j) best_pos[j] = pos[j];
    used = saved;
  }

  void write_block_plain(int d) {
    if (r == 0 || d + 1 < r) return;
    std::size_t off = offset[d];
    if (r == 1) {
      buf[off] = is_basis_mask(orig_bit[d]) ? '1' : '0';
      return;
    }
    SubsetMask q = full_mask(r - 1);
    const SubsetMask limit = full_mask(d);
    while (q) {
      SubsetMask orig = orig_bit[d];
      SubsetMask rest = q;
      while (rest) {
        int p = lowest_element(rest);
        rest &= rest - 1;
        orig |= orig_bit[p];
      }
      buf[off++] = is_basis_mask(orig) ? '1' : '0';
      q = next_k_subset(q, limit);
    }
  }

  // Invariant on entry: buf[0..offset[d]) equals best[0..offset[d]).
  void dfs(int d) {
    if (d == n) return;  // ties with the incumbent carry no information
    for (int e : order) {
      if (contains(used, e)) continue;
      pos[d] = static_cast<std::uint8_t>(e);
      orig_bit[d] = 1u << e;
      int cmp = write_block(d);
      if (cmp < 0) continue;
      used |= 1u << e;
      if (cmp > 0) rebase(d + 1);
      dfs(d + 1);
      used &= ~(1u << e);
    }
  }
};

}  // namespace

CanonicalResult canonical_form(const Matroid& m) {
  const int n = m.size();
  std::vector<std::uint8_t> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  // Every relabeling of a uniform matroid is the same matroid.
  if (m.is_uniform()) return {m, std::move(identity)};

  CanonSearch search(m);
  search.dfs(0);

  std::vector<std::uint8_t> perm(n);
  for (int j = 0; j < n; ++j) perm[search.best_pos[j]] = j;
  Matroid canon = relabel(m, perm);
  assert(revlex_basis_string(canon) == search.best);
  return {std::move(canon), std::move(perm)};
}

IsoKey iso_key(const Matroid& m) {
  return {m.size(), m.rank(), revlex_basis_string(canonical_form(m).matroid)};
}

bool are_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size())
    return false;
  auto pa = invariant_profile(a);
  auto pb = invariant_profile(b);
  std::sort(pa.begin(), pa.end());
  std::sort(pb.begin(), pb.end());
  if (pa != pb) return false;
  return iso_key(a) == iso_key(b);
}

Matroid matroid_from_key(const IsoKey& k) {
  return matroid_from_revlex(k.n, k.r, k.canon);
}

Matroid matroid_from_key_unchecked(const IsoKey& k) {
  std::vector<SubsetMask> bases;
  std::size_t i = 0;
  if (k.r == 0) {
    if (!k.canon.empty() && k.canon[0] == '1') bases.push_back(0);
  } else {
    SubsetMask a = full_mask(k.r);
    const SubsetMask limit = full_mask(k.n);
    while (a && i < k.canon.size()) {
      if (k.canon[i++] == '1') bases.push_back(a);
      a = next_k_subset(a, limit);
    }
  }
  return Matroid::from_bases_unchecked(k.n, k.r, std::move(bases));
}

}  // namespace matfp
