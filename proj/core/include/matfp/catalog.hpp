#pragma once

#include <map>
#include <string>
#include <vector>

#include "matfp/iso.hpp"
#include "matfp/matroid.hpp"

namespace matfp {

struct CatalogEntry {
  Matroid matroid;  // canonical representative
  bool irreducible = false;
  std::vector<IsoKey> factor_keys;  // irreducible factorization, left to right
};

struct Catalog {
  int max_n = 0;
  std::map<IsoKey, CatalogEntry> entries;

  bool contains(const IsoKey& key) const;
  const CatalogEntry& at(const IsoKey& key) const;
};

// Every isomorphism class with at most n_max elements, grown level by level:
// each class on n elements is a single-element extension of one on n - 1, so
// extending every class by every modular cut and deduplicating by canonical
// form is exhaustive.
Catalog enumerate_up_to(int n_max);

// Independent oracle: scan every equicardinal set family for the basis
// exchange property.  Only feasible for tiny ground sets (n_max <= 6).
Catalog brute_force_enumerate(int n_max);

struct CountTables {
  int max_n = 0;
  std::vector<long long> matroids;             // by ground set size
  std::vector<long long> irreducibles;         // by ground set size
  std::vector<std::vector<long long>> m_grid;  // [rank][nullity]
  std::vector<std::vector<long long>> i_grid;  // [rank][nullity]
};

CountTables count_tables(const Catalog& cat);

// Unique factorization at the level of counting series: M(t) = 1/(1 - I(t)),
// and the same identity for the bivariate rank/nullity refinement.  Throws
// TheoremViolation naming the first failing coefficient.
void verify_gf(const CountTables& tables);

std::string render_catalog(const Catalog& cat);
Catalog parse_catalog(const std::string& text);

}  // namespace matfp
