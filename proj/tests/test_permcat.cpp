#include <algorithm>
#include <chrono>

#include "doctest.h"
#include "oracles.hpp"
#include "mc/permcat.hpp"

using namespace mc;
using namespace mc::testing;

namespace {

std::vector<PermCatPtr> corpus() {
  return {discrete_perm("dZ/2", cyclic(2)), discrete_perm("dZ/3", cyclic(3)),
          indiscrete_perm("E(Sigma_2)", cyclic(2)), signed_z2(),
          discrete_perm("point", cyclic(1))};
}

}  // namespace

TEST_CASE("permutative corpus validates") {
  for (auto const& c : corpus()) {
    CAPTURE(c->name);
    CHECK(validate_permcat(*c).ok());
  }
  auto [s3, z6] = maclane_pair();
  CHECK(validate_permcat(*s3).ok());
  CHECK(validate_permcat(*z6).ok());
}

TEST_CASE("fault injection in the symmetry") {
  // replace gamma(1,1) in signed Z/2 by the identity of 0 ... still
  // inverse; use E(Sigma_2) with a non-invertible choice instead
  PermCat c = *signed_z2();
  // gamma(1,0) must be the identity; make it the sign
  c.gamma[1][0] = c.arrow("s_1");
  c.finish();
  auto rep = validate_permcat(c);
  REQUIRE_FALSE(rep.ok());
  bool sym = false;
  for (auto const& v : rep.violations) {
    sym = sym || v.law.rfind("symmetry", 0) == 0;
  }
  CHECK(sym);
}

TEST_CASE("json roundtrip") {
  for (auto const& c : corpus()) {
    auto back = permcat_from_json(permcat_to_json(*c));
    CHECK(permcat_to_json(*back) == permcat_to_json(*c));
    CHECK(validate_permcat(*back).ok());
  }
  CHECK_THROWS_AS(permcat_from_json("{\"objects\": 3}"), Error);
}

TEST_CASE("underlying multicategory") {
  auto z2 = discrete_perm("dZ/2", cyclic(2));
  Multicat u = underlying(z2);
  CHECK(u.hom(Profile{{1, 1}, 0}).size() == 1);
  CHECK(u.hom(Profile{{1, 1}, 1}).empty());
  CHECK(u.hom(Profile{{}, 0}).size() == 1);
  auto sz = signed_z2();
  Multicat us = underlying(sz);
  CHECK(us.hom(Profile{{}, 0}).size() == 2);
  CHECK(us.hom(Profile{{0, 1}, 1}).size() == 2);

  auto t0 = std::chrono::steady_clock::now();
  for (auto const& c : corpus()) {
    CAPTURE(c->name);
    CHECK(check_operad_axioms(underlying(c), Budget{4, 4}, Exec::parallel,
                              true)
              .ok());
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                              - t0)
                    .count();
  MESSAGE("U axioms at (4,4): " << secs << " s");
}

TEST_CASE("lax* maps against based multifunctors") {
  auto cs = corpus();
  for (auto const& c : cs) {
    for (auto const& d : cs) {
      CAPTURE(c->name);
      CAPTURE(d->name);
      auto lax = enumerate_laxstar(c, d);
      CHECK(lax.size() == brute_laxstar_count(c, d));
      auto mf = enumerate_based_multifunctors(underlying_based(c),
                                              underlying_based(d));
      CHECK(lax.size() == mf.size());
      for (auto const& f : lax) {
        auto g = laxstar_to_multifunctor(f);
        CHECK(std::find(mf.begin(), mf.end(), g) != mf.end());
        CHECK(multifunctor_to_laxstar(g, c, d) == f);
        for (auto const& phi : g.frag->mors) {
          CHECK(g(phi) == uf_direct(f, phi));
        }
      }
      for (auto const& g : mf) {
        auto f = multifunctor_to_laxstar(g, c, d);
        CHECK(validate_laxstar(f).ok());
        CHECK(laxstar_to_multifunctor(f) == g);
      }
    }
  }
  auto id = identity_laxstar(signed_z2());
  CHECK(validate_laxstar(id).ok());
  auto g = laxstar_to_multifunctor(id);
  CHECK(g == identity_multifunctor(g.frag));
}

TEST_CASE("MacLane pair") {
  auto [s3, z6] = maclane_pair();
  CHECK(element_orders(object_monoid(*s3))
        == std::vector<int>{1, 2, 2, 2, 3, 3});
  CHECK(element_orders(object_monoid(*z6))
        == std::vector<int>{1, 2, 3, 3, 6, 6});
  CHECK_FALSE(monoids_isomorphic(object_monoid(*s3), object_monoid(*z6)));
  Multicat a = underlying(s3);
  Multicat b = underlying(z6);
  CHECK(a.labels() == b.labels());
  for (std::size_t k = 0; k <= 4; ++k) {
    for (auto const& src : all_sources(6, k)) {
      for (ObjId t = 0; t < 6; ++t) {
        CHECK(a.hom(Profile{src, t}).size() == 1);
        CHECK(b.hom(Profile{src, t}).size() == 1);
      }
    }
  }
}

TEST_CASE("P_k objects") {
  auto z2 = discrete_perm("dZ/2", cyclic(2));
  // Z/2 as a ring
  auto mult = discrete_bilinear(z2, {{0, 0}, {0, 1}});
  CHECK(validate_pk(mult).ok());
  // addition is not bilinear: f(1,1)+f(1,1) = 0 but f(1,0) must be 0 anyway
  auto add = discrete_bilinear(z2, {{0, 1}, {1, 0}});
  CHECK_FALSE(validate_pk(add).ok());

  auto e2 = indiscrete_perm("E(Sigma_2)", cyclic(2));
  auto m2 = indiscrete_bilinear(e2, e2, e2, {{0, 0}, {0, 1}});
  CHECK(validate_pk(m2).ok());

  // identity and unit laws of composition
  auto id = as_pk(identity_laxstar(z2));
  CHECK(validate_pk(id).ok());
  CHECK(compose_pk(id, {mult}) == mult);
  CHECK(compose_pk(mult, {id, id}) == mult);

  // a 3-linear map from two products, and the action law
  auto tri = compose_pk(mult, {mult, id});
  CHECK(validate_pk(tri).ok());
  auto tri2 = compose_pk(mult, {id, mult});
  CHECK(tri == tri2);
  auto e3 = compose_pk(m2, {m2, as_pk(identity_laxstar(e2))});
  CHECK(validate_pk(e3).ok());
  for (auto const& s : Perm::all(3)) {
    for (auto const& t : Perm::all(3)) {
      CHECK(sigma_star(sigma_star(e3, t), s) == sigma_star(e3, t * s));
    }
    CHECK(validate_pk(sigma_star(e3, s)).ok());
  }
  // delta of a composite at each slot is the displayed composite
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        for (int x = 0; x < 2; ++x) {
          CHECK(tri.d(0, {a, b, c}, x)
                == z2->ident[(((a + x) % 2) * b) * c]);
        }
      }
    }
  }
  CHECK_THROWS_AS(compose_pk(mult, {id}), ProfileError);
}

TEST_CASE("interchange for all index limits up to 3") {
  auto e2 = indiscrete_perm("E(Sigma_2)", cyclic(2));
  auto z2 = discrete_perm("dZ/2", cyclic(2));
  std::vector<PkObject> maps{discrete_bilinear(z2, {{0, 0}, {0, 1}}),
                             indiscrete_bilinear(e2, e2, e2, {{0, 0}, {0, 1}})};
  auto [s3, z6] = maclane_pair();
  maps.push_back(indiscrete_bilinear(z6, z6, z6, [] {
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a) {
      for (int b = 0; b < 6; ++b) {
        t[a][b] = a * b % 6;
      }
    }
    return t;
  }()));
  for (auto const& f : maps) {
    REQUIRE(validate_pk(f).ok());
    std::size_t const n0 = f.src[0]->size();
    std::size_t const n1 = f.src[1]->size();
    for (std::size_t m = 0; m <= 3; ++m) {
      for (std::size_t n = 0; n <= 3; ++n) {
        for (auto const& as : all_sources(n0, m)) {
          for (auto const& bs : all_sources(n1, n)) {
            CHECK(interchange_holds(f, as, bs));
          }
        }
      }
    }
  }
}
