#include "matfp/factorization.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "matfp/free_product.hpp"
#include "matfp/matroid_io.hpp"

namespace matfp {

bool SetFamily::contains(SubsetMask a) const {
  return std::binary_search(members.begin(), members.end(), a);
}

bool is_free_separator(const Matroid& m, SubsetMask a) {
  if (!subset_of(a, m.ground()))
    throw Error(Errc::BadArgument, "subset not within ground set");
  for (SubsetMask z : cyclic_flats(m))
    if (!comparable(a, z)) return false;
  return true;
}

SetFamily free_separators(const Matroid& m) {
  const std::vector<SubsetMask> cf = cyclic_flats(m);
  SetFamily out;
  out.n = m.size();
  const SubsetMask g = m.ground();
  for (SubsetMask a = 0;; ++a) {
    bool ok = true;
    for (SubsetMask z : cf) {
      if (!comparable(a, z)) {
        ok = false;
        break;
      }
    }
    if (ok) out.members.push_back(a);
    if (a == g) break;
  }
  return out;
}

SetFamily d_lattice(const Matroid& m) {
  std::set<SubsetMask> members;
  members.insert(0);
  members.insert(m.ground());
  for (SubsetMask z : cyclic_flats(m)) members.insert(z);
  // Close under pairwise union and intersection until stable.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<SubsetMask> cur(members.begin(), members.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        grew |= members.insert(cur[i] | cur[j]).second;
        grew |= members.insert(cur[i] & cur[j]).second;
      }
    }
  }
  SetFamily out;
  out.n = m.size();
  out.members.assign(members.begin(), members.end());
  return out;
}

Flag pinchpoints(const SetFamily& f) {
  Flag out;
  for (SubsetMask a : f.members) {
    bool ok = true;
    for (SubsetMask b : f.members) {
      if (!comparable(a, b)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  // Nested sets have ascending masks, so the sorted members form the chain.
  return out;
}

Flag primary_flag(const Matroid& m) { return pinchpoints(d_lattice(m)); }

Matroid Factorization::reconstruct() const {
  return relabel(multi_free_product(factors), element_order);
}

Factorization chain_factorization(const Matroid& m, const Flag& chain,
                                  FactorizationFlavor flavor) {
  if (chain.empty() || chain.front() != 0 || chain.back() != m.ground())
    throw Error(Errc::BadArgument, "chain must run from the empty set to S");
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    if (!subset_of(chain[i], chain[i + 1]) || chain[i] == chain[i + 1])
      throw Error(Errc::BadArgument, "chain entries must be strictly nested");
  for (SubsetMask a : chain)
    if (!is_free_separator(m, a))
      throw Error(Errc::NotAFreeSeparator,
                  "{" + render_set(a) + "} is not a free separator");

  Factorization out;
  out.chain = chain;
  out.flavor = flavor;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    out.factors.push_back(minor(m, chain[i], chain[i + 1]));
    for (int e : elements_of(chain[i + 1] & ~chain[i]))
      out.element_order.push_back(static_cast<std::uint8_t>(e));
  }
  return out;
}

Factorization primary_factorization(const Matroid& m) {
  if (m.size() == 0)
    throw Error(Errc::EmptyMatroid, "the empty matroid has no primary flag");
  return chain_factorization(m, primary_flag(m), FactorizationFlavor::Primary);
}

Factorization factor_irreducible(const Matroid& m) {
  if (m.size() == 0) {
    Factorization out;
    out.chain = {0};
    out.flavor = FactorizationFlavor::Custom;
    return out;
  }
  const Flag flag = primary_flag(m);
  Flag refined;
  refined.push_back(0);
  for (std::size_t i = 0; i + 1 < flag.size(); ++i) {
    const Matroid factor = minor(m, flag[i], flag[i + 1]);
    if (factor.is_uniform() && factor.size() > 1) {
      SubsetMask cur = flag[i];
      for (int e : elements_of(flag[i + 1] & ~flag[i])) {
        cur |= 1u << e;
        refined.push_back(cur);
      }
    } else {
      refined.push_back(flag[i + 1]);
    }
  }
  return chain_factorization(m, refined, FactorizationFlavor::Irreducible);
}

bool is_irreducible(const Matroid& m) {
  if (m.size() == 0)
    throw Error(Errc::EmptyMatroid,
                "the empty matroid is not irreducible by convention");
  const bool by_separators = free_separators(m).members.size() == 2;
  bool by_pinchpoints;
  if (m.is_uniform()) {
    by_pinchpoints = m.size() == 1;
  } else {
    by_pinchpoints = primary_flag(m).size() == 2;
  }
  if (by_separators != by_pinchpoints)
    throw TheoremViolation(
        "irreducibility criteria disagree on\n" + render_matroid_full(m));
  return by_separators;
}

std::string render_factorization(const Factorization& f) {
  std::string out = "CHAIN=";
  char buf[16];
  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    if (i) out += ';';
    std::snprintf(buf, sizeof buf, "0x%x", f.chain[i]);
    out += buf;
  }
  out += '\n';
  for (const Matroid& factor : f.factors) out += render_matroid_full(factor);
  return out;
}

}  // namespace matfp
