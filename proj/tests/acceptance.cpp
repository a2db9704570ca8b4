// Acceptance gate: one line per criterion, nonzero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "matfp/catalog.hpp"
#include "matfp/coalgebra.hpp"
#include "matfp/errors.hpp"
#include "matfp/factorization.hpp"
#include "matfp/free_product.hpp"
#include "matfp/iso.hpp"
#include "matfp/matroid.hpp"
#include "matfp/sampling.hpp"

using namespace matfp;

namespace {

int failures = 0;
std::chrono::steady_clock::time_point t0;

void start() { t0 = std::chrono::steady_clock::now(); }

void report(int idx, const std::string& what, bool ok,
            const std::string& detail = "") {
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("%s criterion-%d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", idx,
              what.c_str(), secs, detail.empty() ? "" : " ",
              detail.c_str());
  if (!ok) ++failures;
}

// expected counts, table 1
const std::vector<long long> kMatroids = {1, 2, 4, 8, 17, 38, 98, 306, 1724};
const std::vector<long long> kIrreducibles = {0, 2, 0, 0, 1, 2, 14, 66, 891};

// expected counts by (rank, nullity), table 2; row r lists k = 0..8-r
const std::vector<std::vector<long long>> kMatroidGrid = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1},
    {1, 2, 3, 4, 5, 6, 7, 8},
    {1, 3, 7, 13, 23, 37, 58},
    {1, 4, 13, 38, 108, 325},
    {1, 5, 23, 108, 940},
    {1, 6, 37, 325},
    {1, 7, 58},
    {1, 8},
    {1}};
const std::vector<std::vector<long long>> kIrreducibleGrid = {
    {0, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 1, 3, 3, 6},
    {0, 0, 1, 8, 30, 125},
    {0, 0, 3, 30, 629},
    {0, 0, 3, 125},
    {0, 0, 6},
    {0, 0},
    {0}};

std::vector<Matroid> reps_up_to(const Catalog& cat, int max_n) {
  std::vector<Matroid> reps;
  for (const auto& [key, entry] : cat.entries)
    if (key.n <= max_n) reps.push_back(entry.matroid);
  return reps;
}

std::vector<std::uint8_t> dual_swap_perm(int s, int t) {
  std::vector<std::uint8_t> perm(s + t);
  for (int e = 0; e < s; ++e) perm[e] = std::uint8_t(e + t);
  for (int e = 0; e < t; ++e) perm[s + e] = std::uint8_t(e);
  return perm;
}

std::vector<SubsetMask> maximal_chain(const SetFamily& fam, bool prefer_low) {
  std::vector<SubsetMask> chain{0};
  const SubsetMask top = fam.members.empty() ? 0 : fam.members.back();
  while (chain.back() != top) {
    SubsetMask best = 0;
    int best_size = -1;
    for (SubsetMask x : fam.members) {
      if (!subset_of(chain.back(), x) || x == chain.back()) continue;
      const int size = popcount(x);
      if (best_size < 0 || size < best_size ||
          (size == best_size && (prefer_low ? x < best : x > best))) {
        best = x;
        best_size = size;
      }
    }
    chain.push_back(best);
  }
  return chain;
}

std::vector<IsoKey> chain_keys(const Matroid& m, const Flag& chain) {
  Factorization f = chain_factorization(m, chain);
  std::vector<IsoKey> keys;
  for (const Matroid& factor : f.factors) keys.push_back(iso_key(factor));
  std::sort(keys.begin(), keys.end());
  return keys;
}

void criterion_counts(const Catalog& cat8, double secs7) {
  start();
  const CountTables t = count_tables(cat8);
  const bool ok = t.matroids == kMatroids && t.irreducibles == kIrreducibles;
  char note[96];
  std::snprintf(note, sizeof note,
                "[n<=7 catalog built in %.1fs; n=8 level m=%lld i=%lld]", secs7,
                t.matroids[8], t.irreducibles[8]);
  report(1, "matroid and irreducible counts by size, n <= 8", ok, note);
}

void criterion_grids(const Catalog& cat8) {
  start();
  const CountTables t = count_tables(cat8);
  // compare cell by cell over r + k <= 8; the stored grids are square
  bool ok = t.m_grid.size() >= 9 && t.i_grid.size() >= 9;
  for (int r = 0; ok && r <= 8; ++r)
    for (int k = 0; ok && r + k <= 8; ++k) {
      ok = ok && t.m_grid[r][k] == kMatroidGrid[r][k];
      ok = ok && t.i_grid[r][k] == kIrreducibleGrid[r][k];
      ok = ok && t.m_grid[r][k] == t.m_grid[k][r];
      ok = ok && t.i_grid[r][k] == t.i_grid[k][r];
    }
  report(2, "rank/nullity count grids, r + k <= 8, with transpose symmetry",
         ok);
}

void criterion_gf(const Catalog& cat8) {
  start();
  bool ok = true;
  std::string detail;
  try {
    verify_gf(count_tables(cat8));
  } catch (const TheoremViolation& tv) {
    ok = false;
    detail = tv.what();
  }
  report(3, "generating function identity M(t) = 1/(1 - I(t)), n <= 8", ok,
         detail);
}

void criterion_component(const Catalog& cat8) {
  start();
  bool ok = true;
  std::string detail;
  try {
    const Matroid dpts = matroid_from_key(IsoKey::parse("4:2:011110"));
    const Matroid mixed = matroid_from_key(IsoKey::parse("4:2:011111"));
    const Matroid u24 = Matroid::uniform(2, 4);
    const WeakOrderComponent comp = weak_order_component(cat8, 2, 2);
    const auto pos = [&](const Matroid& m) {
      return std::size_t(std::find(comp.keys.begin(), comp.keys.end(),
                                   iso_key(m)) -
                         comp.keys.begin());
    };
    const std::size_t a = pos(dpts), b = pos(mixed), c = pos(u24);
    ok = comp.keys.size() == 7 && a < 7 && b < 7 && c < 7;
    const Rational cexp[3][3] = {{1, 8, 16}, {0, 4, 20}, {0, 0, 24}};
    const Rational iexp[3][3] = {{1, -2, 1},
                                 {0, Rational(1, 4), Rational(-5, 24)},
                                 {0, 0, Rational(1, 24)}};
    const std::size_t idx[3] = {a, b, c};
    for (int i = 0; ok && i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        ok = ok && comp.c[idx[i]][idx[j]] == cexp[i][j];
        ok = ok && comp.c_inv[idx[i]][idx[j]] == iexp[i][j];
      }
    const FormalSum<IsoKey> q = q_primitive(cat8, dpts);
    ok = ok && q.size() == 3 && q.coefficient(iso_key(dpts)) == 1 &&
         q.coefficient(iso_key(mixed)) == -2 &&
         q.coefficient(iso_key(u24)) == 1;
    ok = ok && weak_leq(dpts, mixed) && weak_leq(mixed, u24);
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  report(4, "(2,2) component: c-matrix, inverse, Q over the top filter", ok,
         detail);
}

void criterion_cryptomorphisms(const Catalog& cat8) {
  start();
  long long checked = 0, bad = 0;
  const auto check_pair = [&](const Matroid& m, const Matroid& n) {
    const Matroid l = free_product(m, n);
    for (FpConstruction c :
         {FpConstruction::Indep, FpConstruction::Bases, FpConstruction::Rank,
          FpConstruction::Closure, FpConstruction::Circuits})
      if (!(free_product_via(c, m, n) == l)) ++bad;
    auto formula = fp_cyclic_flats(m, n);
    if (cyclic_flats(l) != formula) ++bad;
    ++checked;
  };
  const std::vector<Matroid> reps = reps_up_to(cat8, 8);
  for (const Matroid& m : reps)
    for (const Matroid& n : reps) {
      if (m.size() + n.size() > 8) continue;
      check_pair(m, n);
    }
  Rng rng(2024);
  for (int s = 0; s < 1000; ++s) {
    const int total = 9 + int(rng() % 2);
    const int a = 1 + int(rng() % (total - 1));
    const Matroid m = random_matroid(rng, a);
    const Matroid n = random_matroid(rng, total - a);
    check_pair(m, n);
  }
  char note[64];
  std::snprintf(note, sizeof note, "[%lld pairs]", checked);
  report(5, "five cryptomorphic constructions and the cyclic flat formula",
         bad == 0, note);
}

void criterion_structure(const Catalog& cat8) {
  start();
  long long bad_dual = 0, bad_trunc = 0, bad_lift = 0, bad_assoc = 0,
            bad_minor = 0;
  const std::vector<Matroid> reps = reps_up_to(cat8, 7);
  for (const Matroid& m : reps)
    for (const Matroid& n : reps) {
      const Matroid l = free_product(m, n);
      const Matroid rhs = free_product(dual(n), dual(m));
      if (!(relabel(dual(l), dual_swap_perm(m.size(), n.size())) == rhs))
        ++bad_dual;
      for (int i = 1; i <= 4; ++i) {
        const int j = std::max(i - n.rank(), 0);
        if (!(truncation_k(l, i) ==
              free_product(truncation_k(m, j), truncation_k(n, i - j))))
          ++bad_trunc;
        const int k = std::max(i - m.nullity(), 0);
        if (!(higgs_lift_k(l, i) ==
              free_product(higgs_lift_k(m, i - k), higgs_lift_k(n, k))))
          ++bad_lift;
      }
    }
  for (const Matroid& a : reps)
    for (const Matroid& b : reps) {
      if (a.size() + b.size() > 8) continue;
      const Matroid ab = free_product(a, b);
      for (const Matroid& c : reps) {
        if (a.size() + b.size() + c.size() > 8) continue;
        if (!(free_product(ab, c) == free_product(a, free_product(b, c))))
          ++bad_assoc;
      }
    }
  Rng rng(77);
  for (int s = 0; s < 10000; ++s) {
    const Matroid m = random_matroid(rng, 1 + int(rng() % 4));
    const Matroid n = random_matroid(rng, 1 + int(rng() % 4));
    const SubsetMask g = full_mask(m.size() + n.size());
    const SubsetMask v = random_subset(rng, g);
    const SubsetMask u = random_subset(rng, v);
    try {
      minor_of_fp(m, n, u, v);
    } catch (const TheoremViolation&) {
      ++bad_minor;
    }
  }
  char note[160];
  std::snprintf(note, sizeof note,
                "[dual %lld, trunc %lld, lift %lld, assoc %lld, minor %lld "
                "failures over %zu^2 pairs]",
                bad_dual, bad_trunc, bad_lift, bad_assoc, bad_minor,
                reps.size());
  report(6, "duality, associativity, minors, truncation/lift identities",
         bad_dual + bad_trunc + bad_lift + bad_assoc + bad_minor == 0, note);
}

void criterion_factorization(const Catalog& cat8) {
  start();
  long long bad = 0;
  const std::vector<Matroid> reps = reps_up_to(cat8, 7);
  for (const Matroid& m : reps) {
    const Factorization f = factor_irreducible(m);
    if (!(f.reconstruct() == m)) ++bad;
    if (m.size() == 0) continue;
    for (const Matroid& factor : f.factors)
      if (!is_irreducible(factor)) ++bad;
    const SetFamily fam = free_separators(m);
    if (chain_keys(m, maximal_chain(fam, true)) !=
        chain_keys(m, maximal_chain(fam, false)))
      ++bad;
    if (is_irreducible(m) != is_irreducible(dual(m))) ++bad;
  }
  std::map<std::pair<std::pair<int, int>, IsoKey>, std::pair<IsoKey, IsoKey>>
      seen;
  long long pairs = 0;
  for (const Matroid& m : reps)
    for (const Matroid& n : reps) {
      if (m.size() + n.size() > 7) continue;
      ++pairs;
      const auto sig = std::make_pair(std::make_pair(m.size(), n.size()),
                                      iso_key(free_product(m, n)));
      const auto parts = std::make_pair(iso_key(m), iso_key(n));
      auto [it, fresh] = seen.emplace(sig, parts);
      if (!fresh && it->second != parts) ++bad;
    }
  char note[96];
  std::snprintf(note, sizeof note, "[%zu matroids, %lld cancellation pairs]",
                reps.size(), pairs);
  report(7, "unique factorization, chain invariance, duality, cancellation",
         bad == 0, note);
}

void criterion_example(const Catalog&) {
  start();
  const Matroid m = Matroid::uniform(2, 3);
  const Matroid n = Matroid::from_bases(4, 2, {0b0101, 0b0110, 0b1001, 0b1010});

  std::vector<SubsetMask> small_cases;
  for (SubsetMask at : {0b0111u, 0b1011u, 0b1101u, 0b1110u})
    small_cases.push_back(at << 1);
  for (SubsetMask x : {1u << 1, 1u << 2})
    for (SubsetMask y : {1u << 3, 1u << 4}) small_cases.push_back(1u | x | y);
  std::sort(small_cases.begin(), small_cases.end());
  const bool small_ok = free_product(Matroid::free_matroid(1), n).bases() ==
                        small_cases;

  std::vector<SubsetMask> big_cases;
  big_cases.push_back(0b1111u << 3);
  for (SubsetMask a : {0b001u, 0b010u, 0b100u})
    for (SubsetMask b : {0b0111u, 0b1011u, 0b1101u, 0b1110u})
      big_cases.push_back(a | (b << 3));
  for (SubsetMask a : {0b011u, 0b101u, 0b110u})
    for (SubsetMask b : {0b0101u, 0b0110u, 0b1001u, 0b1010u})
      big_cases.push_back(a | (b << 3));
  std::sort(big_cases.begin(), big_cases.end());
  const bool big_ok = free_product(m, n).bases() == big_cases;

  char note[64];
  std::snprintf(note, sizeof note, "[%zu and %zu bases]", small_cases.size(),
                big_cases.size());
  report(8, "worked example: exact basis lists of I[]N and M[]N",
         small_ok && big_ok, note);
}

void criterion_bialgebra(const Catalog& cat8) {
  start();
  long long bad = 0, checked = 0;
  const std::vector<Matroid> reps = reps_up_to(cat8, 4);
  const auto run = [&](const Matroid& m, const Matroid& n) {
    try {
      bialgebra_check(m, n);
    } catch (const TheoremViolation&) {
      ++bad;
    }
    ++checked;
  };
  for (const Matroid& m : reps)
    for (const Matroid& n : reps) run(m, n);
  Rng rng(11);
  for (int s = 0; s < 100; ++s) {
    const int total = 2 + int(rng() % 9);
    const int a = 1 + int(rng() % (total - 1));
    const Matroid m = random_matroid(rng, a);
    const Matroid n = random_matroid(rng, total - a);
    run(m, n);
  }
  char note[64];
  std::snprintf(note, sizeof note, "[%lld pairs]", checked);
  report(9, "coproduct is an algebra map for the twisted product", bad == 0,
         note);
}

void criterion_oracle(const Catalog& cat8) {
  start();
  const Catalog brute = brute_force_enumerate(6);
  std::set<IsoKey> fast_keys, brute_keys;
  for (const auto& [key, entry] : cat8.entries)
    if (key.n <= 6) fast_keys.insert(key);
  for (const auto& [key, entry] : brute.entries) brute_keys.insert(key);
  const bool ok = fast_keys == brute_keys;
  char note[64];
  std::snprintf(note, sizeof note, "[%zu classes each]", fast_keys.size());
  report(10, "brute force enumeration equals the extension pipeline, n <= 6",
         ok, note);
}

}  // namespace

int main() {
  start();
  const auto t7a = std::chrono::steady_clock::now();
  enumerate_up_to(7);
  const double secs7 =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t7a)
          .count();
  const Catalog cat8 = enumerate_up_to(8);

  criterion_counts(cat8, secs7);
  criterion_grids(cat8);
  criterion_gf(cat8);
  criterion_component(cat8);
  criterion_cryptomorphisms(cat8);
  criterion_structure(cat8);
  criterion_factorization(cat8);
  criterion_example(cat8);
  criterion_bialgebra(cat8);
  criterion_oracle(cat8);

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
