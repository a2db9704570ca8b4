#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "matfp/catalog.hpp"
#include "matfp/coalgebra.hpp"
#include "matfp/errors.hpp"
#include "matfp/extension.hpp"
#include "matfp/factorization.hpp"
#include "matfp/free_product.hpp"
#include "matfp/iso.hpp"
#include "matfp/matroid.hpp"
#include "matfp/matroid_io.hpp"
#include "matfp/sampling.hpp"

namespace {

using namespace matfp;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(Errc::BadArgument, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Matroid load_matroid(const std::string& path) {
  return parse_matroid(slurp(path));
}

std::string render(const Matroid& m, const std::string& format) {
  return render_matroid(
      m, format == "compact" ? TextFormat::Compact : TextFormat::Full);
}

void print_factorization(const Factorization& f, const std::string& format) {
  std::string chain = "CHAIN=";
  char hex[16];
  for (std::size_t i = 0; i < f.chain.size(); ++i) {
    std::snprintf(hex, sizeof hex, "0x%x", unsigned(f.chain[i]));
    if (i) chain += ";";
    chain += hex;
  }
  std::cout << chain << "\n";
  for (const Matroid& factor : f.factors) std::cout << render(factor, format);
}

void print_tables(const CountTables& t) {
  std::ostringstream m_line, i_line;
  for (int n = 0; n <= t.max_n; ++n) {
    m_line << (n ? " " : "") << t.matroids[n];
    i_line << (n ? " " : "") << t.irreducibles[n];
  }
  std::cout << "m: " << m_line.str() << "\n";
  std::cout << "i: " << i_line.str() << "\n";
  std::cout << "m[r][k]:\n";
  for (int r = 0; r <= t.max_n; ++r) {
    std::cout << " ";
    for (int k = 0; r + k <= t.max_n; ++k) std::cout << " " << t.m_grid[r][k];
    std::cout << "\n";
  }
  std::cout << "i[r][k]:\n";
  for (int r = 0; r <= t.max_n; ++r) {
    std::cout << " ";
    for (int k = 0; r + k <= t.max_n; ++k) std::cout << " " << t.i_grid[r][k];
    std::cout << "\n";
  }
}

// ---- verify sweeps ----------------------------------------------------

struct Sweep {
  long long samples = 0;
  int seed = 0;
  bool failed = false;

  void report(const std::string& name, const std::string& witness) {
    if (witness.empty()) {
      std::cout << "PASS " << name << " (" << samples << " samples)\n";
      return;
    }
    failed = true;
    const std::string path = "counterexample-" + name + ".txt";
    std::ofstream out(path, std::ios::binary);
    out << witness;
    std::cout << "FAIL " << name << ": counterexample written to " << path
              << "\n";
  }
};

std::string pair_witness(const Matroid& m, const Matroid& n,
                         const std::string& detail) {
  return "M:\n" + render_matroid_full(m) + "N:\n" + render_matroid_full(n) +
         detail + "\n";
}

void verify_crypto(Sweep& sweep) {
  Rng rng(sweep.seed);
  std::string bad_construct, bad_pointwise, bad_cf;
  for (long long s = 0; s < sweep.samples; ++s) {
    const int a = 1 + int(rng() % 5), b = 1 + int(rng() % 5);
    const Matroid m = random_matroid(rng, a), n = random_matroid(rng, b);
    const Matroid l = free_product(m, n);
    if (bad_construct.empty()) {
      for (FpConstruction c :
           {FpConstruction::Indep, FpConstruction::Bases, FpConstruction::Rank,
            FpConstruction::Closure, FpConstruction::Circuits}) {
        if (free_product_via(c, m, n) == l) continue;
        bad_construct = pair_witness(m, n, "construction #" +
                                               std::to_string(int(c)) +
                                               " disagrees");
        break;
      }
    }
    if (bad_pointwise.empty()) {
      const SubsetMask g = l.ground();
      for (SubsetMask x = 0;; ++x) {
        if (l.rank_of(x) != fp_rank(m, n, x) ||
            l.closure(x) != fp_closure(m, n, x) ||
            l.is_flat(x) != fp_is_flat(m, n, x) ||
            l.is_independent(x) != fp_is_independent(m, n, x)) {
          bad_pointwise =
              pair_witness(m, n, "pointwise data differs at {" +
                                     render_set(x) + "}");
          break;
        }
        if (x == g) break;
      }
    }
    if (bad_cf.empty()) {
      auto direct = cyclic_flats(l);
      auto formula = fp_cyclic_flats(m, n);
      std::sort(formula.begin(), formula.end());
      if (direct != formula) bad_cf = pair_witness(m, n, "cyclic flats differ");
    }
  }
  sweep.report("fp-constructions-agree", bad_construct);
  sweep.report("fp-rank-closure-pointwise", bad_pointwise);
  sweep.report("fp-cyclic-flats", bad_cf);

  Rng rng3(sweep.seed + 1);
  std::string bad_multi;
  for (long long s = 0; s < sweep.samples && bad_multi.empty(); ++s) {
    std::vector<Matroid> parts;
    for (int i = 0; i < 3; ++i)
      parts.push_back(random_matroid(rng3, 1 + int(rng3() % 3)));
    const Matroid l = multi_free_product(parts);
    const SubsetMask g = l.ground();
    for (SubsetMask x = 0;; ++x) {
      if (l.is_independent(x) != multi_indep(parts, x)) {
        bad_multi = "iterated independence differs at {" + render_set(x) +
                    "}\n" + render_matroid_full(l);
        break;
      }
      if (x == g) break;
    }
  }
  sweep.report("multi-factor-independence", bad_multi);
}

// Greedy maximal chain through the free separators, preferring small or
// large masks; two different chains must factor M into the same multiset.
std::vector<SubsetMask> maximal_chain(const SetFamily& fam, bool prefer_low) {
  std::vector<SubsetMask> chain{0};
  const SubsetMask top = fam.members.empty() ? 0 : fam.members.back();
  while (chain.back() != top) {
    SubsetMask best = 0;
    int best_size = -1;
    for (SubsetMask x : fam.members) {
      if (!subset_of(chain.back(), x) || x == chain.back()) continue;
      const int size = popcount(x);
      // smallest strict superset; ties by mask order per flavor
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

std::vector<IsoKey> sorted_factor_keys(const Matroid& m,
                                       const std::vector<SubsetMask>& chain) {
  Factorization f = chain_factorization(m, chain);
  std::vector<IsoKey> keys;
  for (const Matroid& factor : f.factors) keys.push_back(iso_key(factor));
  std::sort(keys.begin(), keys.end());
  return keys;
}

void verify_factorization(Sweep& sweep) {
  Rng rng(sweep.seed);
  std::string bad_rebuild, bad_chains, bad_dual;
  for (long long s = 0; s < sweep.samples; ++s) {
    const Matroid m = random_matroid(rng, 1 + int(rng() % 8));
    if (bad_rebuild.empty()) {
      Factorization f = factor_irreducible(m);
      if (!(f.reconstruct() == m) ||
          is_irreducible(m) != (f.factors.size() == 1))
        bad_rebuild = "irreducible factorization does not rebuild:\n" +
                      render_matroid_full(m);
    }
    if (bad_chains.empty()) {
      const SetFamily fam = free_separators(m);
      if (sorted_factor_keys(m, maximal_chain(fam, true)) !=
          sorted_factor_keys(m, maximal_chain(fam, false)))
        bad_chains = "two maximal chains give different factor multisets:\n" +
                     render_matroid_full(m);
    }
    if (bad_dual.empty() && is_irreducible(m) != is_irreducible(dual(m)))
      bad_dual = "irreducibility not self-dual:\n" + render_matroid_full(m);
  }
  sweep.report("factor-reconstructs", bad_rebuild);
  sweep.report("factor-chain-invariant", bad_chains);
  sweep.report("irreducible-dual", bad_dual);

  Rng rng2(sweep.seed + 1);
  std::string bad_cancel;
  std::map<std::pair<std::pair<int, int>, IsoKey>, std::pair<IsoKey, IsoKey>>
      seen;
  for (long long s = 0; s < sweep.samples && bad_cancel.empty(); ++s) {
    const int a = 1 + int(rng2() % 4), b = 1 + int(rng2() % 4);
    const Matroid m = random_matroid(rng2, a), n = random_matroid(rng2, b);
    const auto sig = std::make_pair(std::make_pair(a, b),
                                    iso_key(free_product(m, n)));
    const auto parts = std::make_pair(iso_key(m), iso_key(n));
    auto [it, fresh] = seen.emplace(sig, parts);
    if (!fresh && it->second != parts)
      bad_cancel = pair_witness(m, n, "cancellation fails: same product as " +
                                          it->second.first.str() + ", " +
                                          it->second.second.str());
  }
  sweep.report("cancellation", bad_cancel);
}

void verify_coalgebra(Sweep& sweep) {
  Rng rng(sweep.seed);
  std::string bad_bounds, bad_section;
  for (long long s = 0; s < sweep.samples; ++s) {
    const Matroid l = random_matroid(rng, 2 + int(rng() % 7));
    const SubsetMask a = random_subset(rng, l.ground());
    const Matroid m = restrict_to(l, a), n = contract(l, a);
    if (bad_bounds.empty()) {
      try {
        initial_bounds_check(l, m, n);
      } catch (const TheoremViolation& tv) {
        bad_bounds = tv.what();
      }
    }
    if (bad_section.empty() &&
        section_coefficient(l, m, n) != multisection(l, {m, n}))
      bad_section = pair_witness(m, n, "section != 2-part multisection for\n" +
                                           render_matroid_full(l));
  }
  sweep.report("initial-bounds", bad_bounds);
  sweep.report("section-vs-multisection", bad_section);

  Rng rng2(sweep.seed + 1);
  std::string bad_bialg;
  for (long long s = 0; s < sweep.samples && bad_bialg.empty(); ++s) {
    const Matroid m = random_matroid(rng2, 1 + int(rng2() % 4));
    const Matroid n = random_matroid(rng2, 1 + int(rng2() % 4));
    try {
      bialgebra_check(m, n);
    } catch (const TheoremViolation& tv) {
      bad_bialg = tv.what();
    }
  }
  sweep.report("bialgebra-compatibility", bad_bialg);
}

Catalog load_or_build_catalog(const std::string& path, int max_n) {
  if (path.empty()) return enumerate_up_to(max_n);
  Catalog cat = parse_catalog(slurp(path));
  if (cat.max_n < max_n)
    throw Error(Errc::IncompleteCatalog,
                path + " only reaches n=" + std::to_string(cat.max_n));
  if (cat.max_n > max_n) {
    for (auto it = cat.entries.begin(); it != cat.entries.end();)
      it = it->first.n > max_n ? cat.entries.erase(it) : std::next(it);
    cat.max_n = max_n;
  }
  return cat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free products of matroids: construction, factorization, "
               "enumeration, and the minor coalgebra"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "full";
  app.add_option("--format", format, "matroid serialization")
      ->check(CLI::IsMember({"compact", "full"}))
      ->capture_default_str();

  std::string in_a, in_b, in_c;
  std::string restrict_text = "", contract_text = "-";
  auto* freeprod = app.add_subcommand("freeprod", "free product of two matroids");
  freeprod->add_option("left", in_a)->required();
  freeprod->add_option("right", in_b)->required();

  auto* dualcmd = app.add_subcommand("dual", "dual matroid");
  dualcmd->add_option("input", in_a)->required();

  auto* minorcmd = app.add_subcommand("minor", "restriction and contraction");
  minorcmd->add_option("input", in_a)->required();
  minorcmd->add_option("--restrict", restrict_text,
                       "set to restrict to (default: whole ground set)");
  minorcmd->add_option("--contract", contract_text, "set to contract");

  bool primary = false, irred = false;
  auto* factorcmd = app.add_subcommand("factor", "factor into free products");
  factorcmd->add_option("input", in_a)->required();
  factorcmd->add_flag("--primary", primary, "stop at the primary flag");
  factorcmd->add_flag("--irreducible", irred, "full irreducible factorization");

  auto* irrcmd = app.add_subcommand("irreducible", "test irreducibility");
  irrcmd->add_option("input", in_a)->required();

  int max_n = 6;
  std::string out_path, catalog_path;
  auto* enumcmd =
      app.add_subcommand("enumerate", "isomorphism classes by ground set size");
  enumcmd->add_option("--max-n", max_n)->required()->check(CLI::Range(0, 16));
  enumcmd->add_option("--out", out_path, "write the catalog to this file");

  auto* tablescmd = app.add_subcommand("tables", "count tables by size and by rank/nullity");
  tablescmd->add_option("--max-n", max_n)->required()->check(CLI::Range(0, 16));
  tablescmd->add_option("--catalog", catalog_path, "reuse a saved catalog");

  std::string suite;
  long long samples = 200;
  int seed = 1;
  auto* verifycmd = app.add_subcommand("verify", "randomized property sweeps");
  verifycmd->add_option("--suite", suite)
      ->required()
      ->check(CLI::IsMember({"crypto", "factorization", "coalgebra"}));
  verifycmd->add_option("--samples", samples)->check(CLI::PositiveNumber);
  verifycmd->add_option("--seed", seed);

  std::string op;
  auto* coalgcmd = app.add_subcommand("coalg", "minor coalgebra queries");
  coalgcmd->add_option("--op", op)
      ->required()
      ->check(CLI::IsMember({"coproduct", "section", "q"}));
  coalgcmd->add_option("first", in_a);
  coalgcmd->add_option("second", in_b);
  coalgcmd->add_option("third", in_c);

  try {
    app.parse(argc, argv);

    if (*freeprod) {
      std::cout << render(free_product(load_matroid(in_a), load_matroid(in_b)),
                          format);
    } else if (*dualcmd) {
      std::cout << render(dual(load_matroid(in_a)), format);
    } else if (*minorcmd) {
      const Matroid m = load_matroid(in_a);
      const SubsetMask b =
          restrict_text.empty() ? m.ground() : parse_set(restrict_text);
      const SubsetMask a = parse_set(contract_text);
      std::cout << render(minor(m, a, b), format);
    } else if (*factorcmd) {
      if (primary && irred)
        throw Error(Errc::BadArgument, "--primary and --irreducible conflict");
      const Matroid m = load_matroid(in_a);
      if (m.size() > 0 && is_irreducible(m)) std::cout << "IRREDUCIBLE\n";
      print_factorization(
          primary ? primary_factorization(m) : factor_irreducible(m), format);
    } else if (*irrcmd) {
      std::cout << (is_irreducible(load_matroid(in_a)) ? "IRREDUCIBLE\n"
                                                       : "REDUCIBLE\n");
    } else if (*enumcmd) {
      const Catalog cat = enumerate_up_to(max_n);
      const CountTables t = count_tables(cat);
      std::ostringstream m_line, i_line;
      for (int n = 0; n <= max_n; ++n) {
        m_line << (n ? " " : "") << t.matroids[n];
        i_line << (n ? " " : "") << t.irreducibles[n];
      }
      std::cout << "m: " << m_line.str() << "\n";
      std::cout << "i: " << i_line.str() << "\n";
      if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
          throw Error(Errc::BadArgument, "cannot write " + out_path);
        out << render_catalog(cat);
        std::cout << "catalog: " << out_path << " (" << cat.entries.size()
                  << " classes)\n";
      }
    } else if (*tablescmd) {
      const Catalog cat = load_or_build_catalog(catalog_path, max_n);
      const CountTables t = count_tables(cat);
      print_tables(t);
      verify_gf(t);
      std::cout << "gf-identity: ok\n";
    } else if (*verifycmd) {
      Sweep sweep;
      sweep.samples = samples;
      sweep.seed = seed;
      if (suite == "crypto")
        verify_crypto(sweep);
      else if (suite == "factorization")
        verify_factorization(sweep);
      else
        verify_coalgebra(sweep);
      if (sweep.failed) return 3;
    } else if (*coalgcmd) {
      if (op == "coproduct") {
        if (in_a.empty())
          throw Error(Errc::BadArgument, "coproduct needs a matroid file");
        std::cout << render_sum(coproduct(load_matroid(in_a))) << "\n";
      } else if (op == "section") {
        if (in_a.empty() || in_b.empty() || in_c.empty())
          throw Error(Errc::BadArgument, "section needs three matroid files");
        std::cout << section_coefficient(load_matroid(in_a),
                                         load_matroid(in_b),
                                         load_matroid(in_c))
                  << "\n";
      } else {
        if (in_a.empty())
          throw Error(Errc::BadArgument, "q needs a matroid file");
        const Matroid m = load_matroid(in_a);
        const Catalog cat = enumerate_up_to(m.size());
        std::cout << render_sum(q_primitive(cat, m)) << "\n";
      }
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const TheoremViolation& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 0;
}
