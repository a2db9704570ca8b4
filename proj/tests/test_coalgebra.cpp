#include <doctest.h>

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "matfp/catalog.hpp"
#include "matfp/coalgebra.hpp"
#include "matfp/free_product.hpp"
#include "matfp/iso.hpp"
#include "matfp/sampling.hpp"

using namespace matfp;
using namespace matfp::fixtures;

namespace {

Rational coeff(const FormalSum<KeyPair>& sum, const Matroid& a,
               const Matroid& b) {
  return sum.coefficient({iso_key(a), iso_key(b)});
}

}  // namespace

TEST_CASE("coproduct of small matroids") {
  const FormalSum<KeyPair> du12 = coproduct(Matroid::uniform(1, 2));
  CHECK(du12.size() == 3);
  CHECK(coeff(du12, E(), Matroid::uniform(1, 2)) == 1);
  CHECK(coeff(du12, I(), Z()) == 2);
  CHECK(coeff(du12, Matroid::uniform(1, 2), E()) == 1);

  const FormalSum<KeyPair> du22 = coproduct(Matroid::free_matroid(2));
  CHECK(du22.size() == 3);
  CHECK(coeff(du22, E(), Matroid::free_matroid(2)) == 1);
  CHECK(coeff(du22, I(), I()) == 2);
  CHECK(coeff(du22, Matroid::free_matroid(2), E()) == 1);

  // coefficients across any coproduct add up to 2^n
  Rational total = 0;
  const FormalSum<KeyPair> dp4 = coproduct(P());
  for (const auto& [key, c] : dp4.terms()) total += c;
  CHECK(total == 16);

  CHECK(render_sum(coproduct(Z())) == "1*0:0:1(x)1:0:1 + 1*1:0:1(x)0:0:1");
}

TEST_CASE("section coefficients") {
  CHECK(section_coefficient(Matroid::uniform(2, 4), Matroid::free_matroid(2),
                            Matroid::zero(2)) == 6);
  CHECK(section_coefficient(P(), Matroid::uniform(1, 2),
                            Matroid::uniform(1, 2)) == 1);
  CHECK(section_coefficient(D(), Matroid::uniform(1, 2),
                            Matroid::uniform(1, 2)) == 2);
  CHECK(section_coefficient(Matroid::uniform(2, 4), Matroid::uniform(1, 2),
                            Matroid::uniform(1, 2)) == 0);
  CHECK(section_coefficient(D(), I(), Z()) == 0);     // sizes cannot match
  CHECK(section_coefficient(D(), Matroid::free_matroid(2),
                            Matroid::free_matroid(2)) == 0);  // ranks cannot
  CHECK(section_coefficient(D(), E(), D()) == 1);
  CHECK(section_coefficient(D(), D(), E()) == 1);

  // the coproduct collects exactly the section coefficients
  const FormalSum<KeyPair> dp = coproduct(P());
  for (const auto& [pair, c] : dp.terms()) {
    const Matroid m = matroid_from_key(pair.first);
    const Matroid n = matroid_from_key(pair.second);
    CHECK(Rational(section_coefficient(P(), m, n)) == c);
  }
}

TEST_CASE("multisections") {
  CHECK(multisection(D(), {I(), Z(), I(), Z()}) == 8);
  CHECK(multisection(D(), {D()}) == 1);
  CHECK(multisection(E(), {}) == 1);
  CHECK(multisection(D(), {}) == 0);
  CHECK(multisection(Matroid::uniform(2, 4), {I(), I(), Z(), Z()}) == 24);
  CHECK(multisection(P(), {I(), Z(), I(), Z()}) == 4);
  CHECK(multisection(P(), {I(), I(), Z(), Z()}) == 20);
  CHECK(multisection(D(), {I(), I(), Z(), Z()}) == 16);

  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const Matroid l = random_matroid(rng, 2 + int(rng() % 5));
    const SubsetMask a = random_subset(rng, l.ground());
    const Matroid m = restrict_to(l, a), n = contract(l, a);
    CHECK(multisection(l, {m, n}) == section_coefficient(l, m, n));
  }
}

TEST_CASE("weak order") {
  CHECK(weak_leq(D(), P()));
  CHECK(weak_leq(P(), Matroid::uniform(2, 4)));
  CHECK(weak_leq(D(), Matroid::uniform(2, 4)));
  CHECK_FALSE(weak_leq(Matroid::uniform(2, 4), P()));
  CHECK_FALSE(weak_leq(P(), D()));
  CHECK(weak_leq(D(), D()));
  CHECK(weak_leq(Matroid::zero(3), Matroid::uniform(1, 3)));
  CHECK_FALSE(weak_leq(Matroid::uniform(1, 3), Matroid::zero(3)));
  CHECK_THROWS_AS(weak_leq(D(), I()), Error);

  // the direct sum sits below the free product
  for (const Matroid& m : {D(), Matroid::uniform(1, 2), I()})
    for (const Matroid& n : {P(), Matroid::uniform(2, 3), Z()}) {
      CHECK(weak_leq(direct_sum(m, n), free_product(m, n)));
      CHECK(weak_leq(free_product(m, n), free_product(m, n)));
    }
}

TEST_CASE("the (2,2) component") {
  const Catalog cat = enumerate_up_to(4);
  const WeakOrderComponent comp = weak_order_component(cat, 2, 2);
  REQUIRE(comp.keys.size() == 7);

  const std::size_t id = std::find(comp.keys.begin(), comp.keys.end(),
                                   iso_key(D())) - comp.keys.begin();
  const std::size_t ip = std::find(comp.keys.begin(), comp.keys.end(),
                                   iso_key(P())) - comp.keys.begin();
  const std::size_t iu = std::find(comp.keys.begin(), comp.keys.end(),
                                   iso_key(Matroid::uniform(2, 4))) -
                         comp.keys.begin();
  REQUIRE(id < 7);
  REQUIRE(ip < 7);
  REQUIRE(iu < 7);
  CHECK(id < ip);
  CHECK(ip < iu);
  CHECK(iu == 6);  // the uniform matroid tops the component

  CHECK(comp.c[id][id] == 1);
  CHECK(comp.c[id][ip] == 8);
  CHECK(comp.c[id][iu] == 16);
  CHECK(comp.c[ip][ip] == 4);
  CHECK(comp.c[ip][iu] == 20);
  CHECK(comp.c[iu][iu] == 24);
  CHECK(comp.c[ip][id] == 0);
  CHECK(comp.c[iu][id] == 0);
  CHECK(comp.c[iu][ip] == 0);

  CHECK(comp.c_inv[id][id] == 1);
  CHECK(comp.c_inv[id][ip] == -2);
  CHECK(comp.c_inv[id][iu] == 1);
  CHECK(comp.c_inv[ip][ip] == Rational(1, 4));
  CHECK(comp.c_inv[ip][iu] == Rational(-5, 24));
  CHECK(comp.c_inv[iu][iu] == Rational(1, 24));

  // c * c_inv is the identity
  const std::size_t k = comp.keys.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational dot = 0;
      for (std::size_t p = 0; p < k; ++p) dot += comp.c[i][p] * comp.c_inv[p][j];
      CHECK(dot == (i == j ? 1 : 0));
    }

  // triangularity reflects the weak order
  for (std::size_t i = 0; i < k; ++i) {
    CHECK(comp.c[i][i] > 0);
    for (std::size_t j = 0; j < i; ++j) CHECK(comp.c[i][j] == 0);
  }
}

TEST_CASE("primitives") {
  const Catalog cat = enumerate_up_to(4);

  FormalSum<IsoKey> qd = q_primitive(cat, D());
  CHECK(qd.size() == 3);
  CHECK(qd.coefficient(iso_key(D())) == 1);
  CHECK(qd.coefficient(iso_key(P())) == -2);
  CHECK(qd.coefficient(iso_key(Matroid::uniform(2, 4))) == 1);
  CHECK(render_sum(qd) == "1*4:2:011110 + -2*4:2:011111 + 1*4:2:111111");

  FormalSum<IsoKey> qi = q_primitive(cat, I());
  CHECK(qi.size() == 1);
  CHECK(qi.coefficient(iso_key(I())) == 1);
  FormalSum<IsoKey> qz = q_primitive(cat, Z());
  CHECK(qz.size() == 1);
  CHECK(qz.coefficient(iso_key(Z())) == 1);

  CHECK_THROWS_AS(q_primitive(enumerate_up_to(2), D()), Error);
  CHECK_THROWS_AS(weak_order_component(enumerate_up_to(2), 2, 2), Error);
}

TEST_CASE("the twist and the twisted product") {
  const IsoKey u12 = iso_key(Matroid::uniform(1, 2));
  const KeyPair t1 = twist({u12, u12});
  CHECK(t1.first == iso_key(Matroid::free_matroid(2)));
  CHECK(t1.second == iso_key(Matroid::zero(2)));
  const KeyPair t2 = twist({iso_key(I()), iso_key(Z())});
  CHECK(t2.first == iso_key(I()));
  CHECK(t2.second == iso_key(Z()));
  // double twist in bidegree (1,1)
  CHECK(twist(twist({u12, u12})) ==
        KeyPair{iso_key(Matroid::free_matroid(2)), iso_key(Matroid::zero(2))});

  const KeyPair prod =
      twisted_product({iso_key(I()), iso_key(I())}, {iso_key(Z()), iso_key(Z())});
  CHECK(prod.first == iso_key(Matroid::free_matroid(2)));
  CHECK(prod.second == iso_key(Matroid::zero(2)));
  // one cross term of delta(I) [] delta(Z) restoring delta(U12)'s middle term
  const KeyPair cross =
      twisted_product({iso_key(E()), iso_key(I())}, {iso_key(Z()), iso_key(E())});
  CHECK(cross.first == iso_key(I()));
  CHECK(cross.second == iso_key(Z()));
}

TEST_CASE("bialgebra compatibility") {
  CHECK_NOTHROW(bialgebra_check(I(), I()));
  CHECK_NOTHROW(bialgebra_check(Matroid::uniform(1, 2), Matroid::uniform(2, 3)));
  CHECK_NOTHROW(bialgebra_check(D(), Matroid::uniform(1, 2)));
  CHECK_NOTHROW(bialgebra_check(E(), D()));
  CHECK_NOTHROW(bialgebra_check(P(), Z()));
}

TEST_CASE("initial bounds on sections") {
  CHECK_NOTHROW(initial_bounds_check(P(), Matroid::uniform(1, 2),
                                     Matroid::uniform(1, 2)));
  CHECK_NOTHROW(initial_bounds_check(D(), D(), E()));
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Matroid l = random_matroid(rng, 2 + int(rng() % 5));
    const SubsetMask a = random_subset(rng, l.ground());
    CHECK_NOTHROW(initial_bounds_check(l, restrict_to(l, a), contract(l, a)));
  }
}
