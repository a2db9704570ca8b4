#include "matfp/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <utility>

#include "matfp/errors.hpp"
#include "matfp/extension.hpp"
#include "matfp/factorization.hpp"
#include "matfp/matroid_io.hpp"

namespace matfp {

bool Catalog::contains(const IsoKey& key) const {
  return entries.find(key) != entries.end();
}

const CatalogEntry& Catalog::at(const IsoKey& key) const {
  auto it = entries.find(key);
  if (it == entries.end())
    throw Error(Errc::IncompleteCatalog,
                "no class " + key.str() + " in a catalog with max_n=" +
                    std::to_string(max_n));
  return it->second;
}

namespace {

IsoKey key_of_canonical(const Matroid& canon) {
  return IsoKey{canon.size(), canon.rank(), revlex_basis_string(canon)};
}

// Fill the irreducibility flag and factor key list of every entry.  The
// empty matroid is the empty product, so it is not irreducible and has no
// factors.
void annotate(Catalog& cat) {
  for (auto& [key, entry] : cat.entries) {
    if (entry.matroid.size() == 0) continue;
    entry.irreducible = is_irreducible(entry.matroid);
    Factorization f = factor_irreducible(entry.matroid);
    entry.factor_keys.clear();
    entry.factor_keys.reserve(f.factors.size());
    for (const Matroid& piece : f.factors)
      entry.factor_keys.push_back(iso_key(piece));
  }
}

void insert_class(Catalog& cat, const Matroid& labeled,
                  std::vector<Matroid>* fresh_reps) {
  Matroid canon = canonical_form(labeled).matroid;
  IsoKey key = key_of_canonical(canon);
  auto [it, fresh] = cat.entries.emplace(key, CatalogEntry{canon, false, {}});
  (void)it;
  if (fresh && fresh_reps) fresh_reps->push_back(canon);
}

}  // namespace

Catalog enumerate_up_to(int n_max) {
  if (n_max < 0 || n_max > kMaxGround)
    throw Error(Errc::BadArgument, "catalog depth must lie in 0.." +
                                       std::to_string(kMaxGround));
  Catalog cat;
  cat.max_n = n_max;
  cat.entries.emplace(key_of_canonical(Matroid()),
                      CatalogEntry{Matroid(), false, {}});
  std::vector<Matroid> level{Matroid()};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Matroid> next;
    for (const Matroid& parent : level) {
      for (const ModularCut& cut : modular_cuts(parent))
        insert_class(cat, extend_by_cut_unchecked(parent, cut), &next);
    }
    level = std::move(next);
  }
  annotate(cat);
  return cat;
}

namespace {

// Basis exchange over a family given as a bitmask into `subs`.
bool exchange_ok(std::uint32_t fam, const std::vector<SubsetMask>& subs,
                 const std::vector<int>& index_of) {
  std::vector<SubsetMask> mem;
  for (std::uint32_t x = fam; x; x &= x - 1)
    mem.push_back(subs[std::countr_zero(x)]);
  for (SubsetMask b1 : mem) {
    for (SubsetMask b2 : mem) {
      if (b1 == b2) continue;
      for (SubsetMask xs = b1 & ~b2; xs; xs &= xs - 1) {
        const SubsetMask without = b1 ^ (xs & -xs);
        bool found = false;
        for (SubsetMask ys = b2 & ~b1; ys && !found; ys &= ys - 1)
          found = (fam >> index_of[without | (ys & -ys)]) & 1;
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace

Catalog brute_force_enumerate(int n_max) {
  if (n_max < 0 || n_max > 6)
    throw Error(Errc::SizeTooLarge, "exhaustive family scan is limited to 6");
  Catalog cat;
  cat.max_n = n_max;
  cat.entries.emplace(key_of_canonical(Matroid()),
                      CatalogEntry{Matroid(), false, {}});
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 0; r <= n; ++r) {
      std::vector<SubsetMask> subs;
      const SubsetMask g = full_mask(n);
      for (SubsetMask a = full_mask(r); a || r == 0;) {
        subs.push_back(a);
        if (r == 0) break;
        a = next_k_subset(a, g);
        if (!a) break;
      }
      std::vector<int> index_of(std::size_t{1} << n, -1);
      for (std::size_t i = 0; i < subs.size(); ++i) index_of[subs[i]] = int(i);
      const std::uint64_t families = std::uint64_t{1} << subs.size();
      for (std::uint64_t fam = 1; fam < families; ++fam) {
        if (!exchange_ok(std::uint32_t(fam), subs, index_of)) continue;
        std::vector<SubsetMask> bases;
        for (std::uint32_t x = std::uint32_t(fam); x; x &= x - 1)
          bases.push_back(subs[std::countr_zero(x)]);
        insert_class(cat,
                     Matroid::from_bases_unchecked(n, r, std::move(bases)),
                     nullptr);
      }
    }
  }
  annotate(cat);
  return cat;
}

CountTables count_tables(const Catalog& cat) {
  CountTables t;
  t.max_n = cat.max_n;
  t.matroids.assign(cat.max_n + 1, 0);
  t.irreducibles.assign(cat.max_n + 1, 0);
  t.m_grid.assign(cat.max_n + 1, std::vector<long long>(cat.max_n + 1, 0));
  t.i_grid.assign(cat.max_n + 1, std::vector<long long>(cat.max_n + 1, 0));
  for (const auto& [key, entry] : cat.entries) {
    const int r = key.r, k = key.n - key.r;
    ++t.matroids[key.n];
    ++t.m_grid[r][k];
    if (entry.irreducible) {
      ++t.irreducibles[key.n];
      ++t.i_grid[r][k];
    }
  }
  return t;
}

void verify_gf(const CountTables& t) {
  if (t.matroids.empty() || t.matroids[0] != 1 || t.irreducibles[0] != 0)
    throw TheoremViolation("counting series lacks the empty matroid");
  for (int n = 1; n <= t.max_n; ++n) {
    long long sum = 0;
    for (int s = 1; s <= n; ++s) sum += t.irreducibles[s] * t.matroids[n - s];
    if (sum != t.matroids[n])
      throw TheoremViolation(
          "M(t) != 1/(1 - I(t)) at t^" + std::to_string(n) + ": expected " +
          std::to_string(t.matroids[n]) + ", got " + std::to_string(sum));
  }
  for (int r = 0; r <= t.max_n; ++r) {
    for (int k = 0; r + k <= t.max_n; ++k) {
      if (r == 0 && k == 0) continue;
      long long sum = 0;
      for (int a = 0; a <= r; ++a)
        for (int b = 0; b <= k; ++b) sum += t.i_grid[a][b] * t.m_grid[r - a][k - b];
      if (sum != t.m_grid[r][k])
        throw TheoremViolation("bivariate series identity fails at x^" +
                               std::to_string(r) + " y^" + std::to_string(k) +
                               ": expected " + std::to_string(t.m_grid[r][k]) +
                               ", got " + std::to_string(sum));
    }
  }
}

std::string render_catalog(const Catalog& cat) {
  std::ostringstream out;
  out << "MATFP-CATALOG v1 nmax=" << cat.max_n << "\n";
  for (const auto& [key, entry] : cat.entries) {
    out << key.str() << " irr=" << (entry.irreducible ? 1 : 0) << " factors=";
    if (entry.factor_keys.empty()) {
      out << "-";
    } else {
      for (std::size_t i = 0; i < entry.factor_keys.size(); ++i) {
        if (i) out << ",";
        out << entry.factor_keys[i].str();
      }
    }
    out << "\n";
  }
  return out.str();
}

Catalog parse_catalog(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line.rfind("MATFP-CATALOG v1 nmax=", 0) != 0)
    throw Error(Errc::ParseError, "missing MATFP-CATALOG v1 header");
  Catalog cat;
  try {
    cat.max_n = std::stoi(line.substr(22));
  } catch (const std::exception&) {
    throw Error(Errc::ParseError, "bad nmax in catalog header");
  }
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string keytext, irrtext, factortext;
    fields >> keytext >> irrtext >> factortext;
    if (keytext.empty() || irrtext.rfind("irr=", 0) != 0 ||
        factortext.rfind("factors=", 0) != 0)
      throw Error(Errc::ParseError,
                  "bad catalog line " + std::to_string(lineno));
    CatalogEntry entry;
    IsoKey key = IsoKey::parse(keytext);
    entry.matroid = matroid_from_key(key);
    entry.irreducible = irrtext == "irr=1";
    if (!entry.irreducible && irrtext != "irr=0")
      throw Error(Errc::ParseError,
                  "bad irr flag on line " + std::to_string(lineno));
    std::string list = factortext.substr(8);
    if (list != "-") {
      std::size_t start = 0;
      while (start <= list.size()) {
        std::size_t comma = list.find(',', start);
        std::string one = list.substr(
            start, comma == std::string::npos ? std::string::npos
                                              : comma - start);
        entry.factor_keys.push_back(IsoKey::parse(one));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    if (!cat.entries.emplace(key, std::move(entry)).second)
      throw Error(Errc::ParseError,
                  "duplicate class on line " + std::to_string(lineno));
  }
  return cat;
}

}  // namespace matfp
