#include "matfp/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace matfp {

namespace {

// Binomial coefficients fit easily in 32 bits for n <= 16.
bool basis_member(const std::vector<SubsetMask>& sorted, SubsetMask b) {
  return std::binary_search(sorted.begin(), sorted.end(), b);
}

// Basis exchange: for all B1, B2 and x in B1\B2 there is y in B2\B1 with
// B1 - x + y a basis.  Returns a witness description on failure.
bool check_exchange(const std::vector<SubsetMask>& bases, std::string* why) {
  for (SubsetMask b1 : bases) {
    for (SubsetMask b2 : bases) {
      SubsetMask out = b1 & ~b2;
      while (out) {
        int x = lowest_element(out);
        out &= out - 1;
        SubsetMask stem = b1 & ~(1u << x);
        SubsetMask in = b2 & ~b1;
        bool ok = false;
        SubsetMask cand = in;
        while (cand) {
          int y = lowest_element(cand);
          cand &= cand - 1;
          if (basis_member(bases, stem | (1u << y))) {
            ok = true;
            break;
          }
        }
        if (!ok) {
          *why = "no exchange for x=" + std::to_string(x) + " in B1={" +
                 render_set(b1) + "} against B2={" + render_set(b2) + "}";
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

Matroid::Matroid() : Matroid(0, 0, {0u}) {}

Matroid::Matroid(int n, int r, std::vector<SubsetMask> bases)
    : n_(n), r_(r), bases_(std::move(bases)),
      cache_(std::make_shared<Cache>()) {}

Matroid Matroid::from_bases_unchecked(int n, int r,
                                      std::vector<SubsetMask> bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
#ifndef NDEBUG
  assert(!bases.empty());
  for (SubsetMask b : bases)
    assert(subset_of(b, full_mask(n)) && popcount(b) == r);
  std::string why;
  assert(check_exchange(bases, &why));
#endif
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::from_bases(int n, int r, std::vector<SubsetMask> bases) {
  if (n < 0 || n > kMaxGround)
    throw Error(Errc::GroundSetOverflow,
                "ground set size " + std::to_string(n) + " outside [0,16]");
  if (r < 0 || r > n)
    throw Error(Errc::RankOutOfRange,
                "rank " + std::to_string(r) + " outside [0," +
                    std::to_string(n) + "]");
  if (bases.empty())
    throw Error(Errc::EmptyBasisList, "a matroid has at least one basis");
  for (SubsetMask b : bases) {
    if (!subset_of(b, full_mask(n)))
      throw Error(Errc::BadArgument,
                  "basis {" + render_set(b) + "} not within ground set");
    if (popcount(b) != r)
      throw Error(Errc::NotEquicardinal,
                  "basis {" + render_set(b) + "} has size " +
                      std::to_string(popcount(b)) + ", expected " +
                      std::to_string(r));
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  std::string why;
  if (!check_exchange(bases, &why)) throw Error(Errc::ExchangeFails, why);
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::uniform(int r, int n) {
  if (n < 0 || n > kMaxGround)
    throw Error(Errc::GroundSetOverflow,
                "ground set size " + std::to_string(n) + " outside [0,16]");
  if (r < 0 || r > n)
    throw Error(Errc::RankOutOfRange, "uniform rank outside [0,n]");
  std::vector<SubsetMask> bases;
  if (r == 0) {
    bases.push_back(0);
  } else {
    SubsetMask b = full_mask(r);
    SubsetMask limit = full_mask(n);
    while (b) {
      bases.push_back(b);
      b = next_k_subset(b, limit);
    }
  }
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::free_matroid(int n) { return uniform(n, n); }

Matroid Matroid::zero(int n) { return uniform(0, n); }

void Matroid::check_ground(SubsetMask a) const {
  if (!subset_of(a, ground()))
    throw Error(Errc::BadArgument,
                "subset {" + render_set(a) + "} not within ground set of size " +
                    std::to_string(n_));
}

const std::vector<std::uint8_t>& Matroid::rank_table() const {
  std::call_once(cache_->once, [this] {
    const std::size_t sz = std::size_t{1} << n_;
    // indep[A] = 1 iff A is contained in some basis (superset-OR transform).
    std::vector<std::uint8_t> indep(sz, 0);
    for (SubsetMask b : bases_) indep[b] = 1;
    for (int e = 0; e < n_; ++e) {
      const SubsetMask bit = 1u << e;
      for (SubsetMask a = 0; a < sz; ++a)
        if (!(a & bit)) indep[a] |= indep[a | bit];
    }
    std::vector<std::uint8_t> rk(sz, 0);
    for (SubsetMask a = 1; a < sz; ++a) {
      if (indep[a]) {
        rk[a] = static_cast<std::uint8_t>(popcount(a));
      } else {
        std::uint8_t best = 0;
        SubsetMask rest = a;
        while (rest) {
          SubsetMask low = rest & (0u - rest);
          best = std::max(best, rk[a ^ low]);
          rest ^= low;
        }
        rk[a] = best;
      }
    }
    cache_->rank = std::move(rk);
  });
  return cache_->rank;
}

int Matroid::rank_of(SubsetMask a) const {
  check_ground(a);
  return rank_table()[a];
}

RankStats Matroid::stats(SubsetMask a) const {
  int rho = rank_of(a);
  return {rho, popcount(a) - rho, r_ - rho};
}

bool Matroid::is_independent(SubsetMask a) const {
  return rank_of(a) == popcount(a);
}

bool Matroid::is_basis(SubsetMask a) const {
  return popcount(a) == r_ && basis_member(bases_, a);
}

SubsetMask Matroid::closure(SubsetMask a) const {
  const auto& rk = rank_table();
  check_ground(a);
  SubsetMask cl = a;
  int rho = rk[a];
  SubsetMask rest = ground() & ~a;
  while (rest) {
    SubsetMask low = rest & (0u - rest);
    if (rk[a | low] == rho) cl |= low;
    rest ^= low;
  }
  return cl;
}

bool Matroid::is_flat(SubsetMask a) const { return closure(a) == a; }

bool Matroid::is_uniform() const {
  // U_{r,n}: every r-subset is a basis.
  std::uint64_t expect = 1;
  for (int i = 0; i < r_; ++i) expect = expect * (n_ - i) / (i + 1);
  return bases_.size() == expect;
}

std::vector<SubsetMask> circuits(const Matroid& m) {
  // Minimal dependent sets: dependent with every one-element deletion
  // independent.  Scan in mask order; results are sorted by mask.
  std::vector<SubsetMask> out;
  const SubsetMask end = full_mask(m.size());
  for (SubsetMask a = 1; a <= end && end != 0; ++a) {
    if (m.is_independent(a)) continue;
    bool minimal = true;
    SubsetMask rest = a;
    while (rest) {
      SubsetMask low = rest & (0u - rest);
      rest ^= low;
      if (!m.is_independent(a ^ low)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(a);
  }
  return out;
}

SubsetMask loops(const Matroid& m) {
  // Loops are exactly the closure of the empty set.
  return m.closure(0);
}

SubsetMask isthmuses(const Matroid& m) {
  SubsetMask out = 0;
  for (int e = 0; e < m.size(); ++e) {
    SubsetMask rest = m.ground() & ~(1u << e);
    if (m.rank_of(rest) == m.rank() - 1) out |= 1u << e;
  }
  return out;
}

std::vector<SubsetMask> cyclic_flats(const Matroid& m) {
  // Flats whose restriction is isthmusless, equivalently flats that are
  // unions of circuits.
  std::vector<SubsetMask> out;
  const SubsetMask end = full_mask(m.size());
  for (SubsetMask a = 0;; ++a) {
    if (m.is_flat(a)) {
      bool cyclic = true;
      int rho = m.rank_of(a);
      SubsetMask rest = a;
      while (rest) {
        SubsetMask low = rest & (0u - rest);
        rest ^= low;
        if (m.rank_of(a ^ low) != rho) {  // low is an isthmus of M|A
          cyclic = false;
          break;
        }
      }
      if (cyclic) out.push_back(a);
    }
    if (a == end) break;
  }
  return out;
}

Matroid dual(const Matroid& m) {
  std::vector<SubsetMask> cobases;
  cobases.reserve(m.bases().size());
  const SubsetMask g = m.ground();
  for (SubsetMask b : m.bases()) cobases.push_back(g & ~b);
  return Matroid::from_bases_unchecked(m.size(), m.size() - m.rank(),
                                       std::move(cobases));
}

MinorResult minor_with_map(const Matroid& m, SubsetMask a, SubsetMask b) {
  if (!subset_of(a, b))
    throw Error(Errc::NotNested, "contract set {" + render_set(a) +
                                     "} not contained in {" + render_set(b) +
                                     "}");
  if (!subset_of(b, m.ground()))
    throw Error(Errc::BadArgument,
                "minor sets not within ground set");
  const SubsetMask keep = b & ~a;
  std::vector<int> elems = elements_of(keep);
  const int k = static_cast<int>(elems.size());
  const int base_rank = m.rank_of(a);
  const int r = m.rank_of(b) - base_rank;

  // Compress a subset of `keep` to new labels 0..k-1 in element order.
  std::vector<int> newpos(m.size(), -1);
  for (int i = 0; i < k; ++i) newpos[elems[i]] = i;

  std::vector<SubsetMask> bases;
  SubsetMask x = keep;
  for (;;) {
    if (popcount(x) == r && m.rank_of(x | a) - base_rank == r) {
      SubsetMask compressed = 0;
      SubsetMask rest = x;
      while (rest) {
        int e = lowest_element(rest);
        rest &= rest - 1;
        compressed |= 1u << newpos[e];
      }
      bases.push_back(compressed);
    }
    if (x == 0) break;
    x = (x - 1) & keep;
  }
  return {Matroid::from_bases_unchecked(k, r, std::move(bases)),
          std::move(elems)};
}

Matroid minor(const Matroid& m, SubsetMask a, SubsetMask b) {
  return minor_with_map(m, a, b).matroid;
}

Matroid restrict_to(const Matroid& m, SubsetMask a) { return minor(m, 0, a); }

Matroid contract(const Matroid& m, SubsetMask a) {
  return minor(m, a, m.ground());
}

Matroid direct_sum(const Matroid& m, const Matroid& n) {
  if (m.size() + n.size() > kMaxGround)
    throw Error(Errc::GroundSetOverflow,
                "direct sum exceeds 16 elements");
  std::vector<SubsetMask> bases;
  bases.reserve(m.bases().size() * n.bases().size());
  for (SubsetMask bn : n.bases())
    for (SubsetMask bm : m.bases()) bases.push_back(bm | (bn << m.size()));
  return Matroid::from_bases_unchecked(m.size() + n.size(),
                                       m.rank() + n.rank(), std::move(bases));
}

bool is_connected(const Matroid& m) {
  if (m.size() == 0)
    throw Error(Errc::EmptyMatroid, "connectivity undefined for the empty matroid");
  if (m.size() == 1) return true;
  // Union elements that share a circuit; connected iff one block covers S.
  std::vector<int> parent(m.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (SubsetMask c : circuits(m)) {
    int first = -1;
    SubsetMask rest = c;
    while (rest) {
      int e = lowest_element(rest);
      rest &= rest - 1;
      if (first < 0)
        first = e;
      else
        parent[find(e)] = find(first);
    }
  }
  int root = find(0);
  for (int e = 1; e < m.size(); ++e)
    if (find(e) != root) return false;
  return true;
}

Matroid relabel(const Matroid& m, const std::vector<std::uint8_t>& perm) {
  if (static_cast<int>(perm.size()) != m.size())
    throw Error(Errc::SizeMismatch, "permutation size mismatch");
  std::vector<SubsetMask> bases;
  bases.reserve(m.bases().size());
  for (SubsetMask b : m.bases()) {
    SubsetMask nb = 0;
    SubsetMask rest = b;
    while (rest) {
      int e = lowest_element(rest);
      rest &= rest - 1;
      nb |= 1u << perm[e];
    }
    bases.push_back(nb);
  }
  return Matroid::from_bases_unchecked(m.size(), m.rank(), std::move(bases));
}

}  // namespace matfp
