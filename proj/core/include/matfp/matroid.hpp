#ifndef MATFP_MATROID_HPP
#define MATFP_MATROID_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

#include "matfp/errors.hpp"
#include "matfp/subset_mask.hpp"

namespace matfp {

struct RankStats {
  int rank;       // rho(A)
  int nullity;    // |A| - rho(A)
  int rank_lack;  // rho(M) - rho(A)
};

// A matroid on ground set {0,...,n-1}, n <= 16, represented by its sorted
// list of bases (each an equicardinal SubsetMask).  Value type: copies share
// the lazily built rank table, which is filled at most once under a
// std::once_flag, so concurrent readers are safe.
class Matroid {
 public:
  // The empty matroid: n = 0, rank 0, single empty basis.
  Matroid();

  // Validates: 0 <= r <= n <= 16, basis list nonempty, members equicardinal
  // subsets of the ground set, and the basis exchange axiom.  Throws Error
  // with code EmptyBasisList / NotEquicardinal / ExchangeFails /
  // RankOutOfRange / GroundSetOverflow / BadArgument.
  static Matroid from_bases(int n, int r, std::vector<SubsetMask> bases);

  // Trusted constructor for internally computed basis systems.  Skips the
  // exchange check (validated in debug builds only); bases are sorted and
  // deduplicated here.
  static Matroid from_bases_unchecked(int n, int r,
                                      std::vector<SubsetMask> bases);

  static Matroid uniform(int r, int n);  // U_{r,n}
  static Matroid free_matroid(int n);    // U_{n,n}; free_matroid(1) is I
  static Matroid zero(int n);            // U_{0,n}; zero(1) is Z

  int size() const { return n_; }
  int rank() const { return r_; }
  int nullity() const { return n_ - r_; }
  SubsetMask ground() const { return full_mask(n_); }
  const std::vector<SubsetMask>& bases() const { return bases_; }

  int rank_of(SubsetMask a) const;
  RankStats stats(SubsetMask a) const;
  bool is_independent(SubsetMask a) const;
  bool is_basis(SubsetMask a) const;
  SubsetMask closure(SubsetMask a) const;
  bool is_flat(SubsetMask a) const;
  bool is_uniform() const;

  // Bit-exact equality of labeled matroids.
  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && r_ == o.r_ && bases_ == o.bases_;
  }

 private:
  Matroid(int n, int r, std::vector<SubsetMask> bases);
  void check_ground(SubsetMask a) const;
  const std::vector<std::uint8_t>& rank_table() const;

  int n_;
  int r_;
  std::vector<SubsetMask> bases_;  // sorted ascending, no duplicates

  struct Cache {
    std::once_flag once;
    std::vector<std::uint8_t> rank;
  };
  std::shared_ptr<Cache> cache_;
};

inline RankStats rank_stats(const Matroid& m, SubsetMask a) {
  return m.stats(a);
}

std::vector<SubsetMask> circuits(const Matroid& m);
std::vector<SubsetMask> cyclic_flats(const Matroid& m);
SubsetMask loops(const Matroid& m);
SubsetMask isthmuses(const Matroid& m);

Matroid dual(const Matroid& m);

// Minor M(A,B) = (M|B)/A for nested A <= B, on ground set B\A relabeled to
// {0,...,|B\A|-1} preserving element order.  Throws Error(NotNested) if A is
// not a subset of B.
Matroid minor(const Matroid& m, SubsetMask a, SubsetMask b);

struct MinorResult {
  Matroid matroid;
  std::vector<int> elements;  // new index -> original element
};
MinorResult minor_with_map(const Matroid& m, SubsetMask a, SubsetMask b);

Matroid restrict_to(const Matroid& m, SubsetMask a);  // M|A = M(0, A)
Matroid contract(const Matroid& m, SubsetMask a);     // M/A = M(A, S)

// M on {0..n_M-1} plus N shifted to {n_M,...,n_M+n_N-1}.
Matroid direct_sum(const Matroid& m, const Matroid& n);

// Connectivity via transitive closure of circuit overlap.  Single-element
// matroids are connected by convention; throws Error(EmptyMatroid) on the
// empty matroid.
bool is_connected(const Matroid& m);

// Relabels along perm (perm[old] = new); perm must be a permutation of
// {0..n-1}.
Matroid relabel(const Matroid& m, const std::vector<std::uint8_t>& perm);

}  // namespace matfp

#endif  // MATFP_MATROID_HPP
