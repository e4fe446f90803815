#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "mc/gstar.hpp"

using namespace mc;
using namespace mc::testing;

namespace {

GObj g(std::vector<int> d) {
  return GObj::of(std::move(d));
}

}  // namespace

TEST_CASE("index objects") {
  CHECK(odot(g({2}), g({1, 1})) == g({2, 1, 1}));
  CHECK(odot(GObj::base(), g({2})).is_base());
  CHECK(odot(GObj(), g({2})) == g({2}));
  CHECK(g({2, 0}).is_base());
  CHECK(parse_gobj("2,1") == g({2, 1}));
  CHECK(parse_gobj("(2,1)") == g({2, 1}));
  CHECK(parse_gobj("()") == GObj());
  CHECK(parse_gobj("*").is_base());
  CHECK_THROWS_AS(parse_gobj("2,x"), Error);
  CHECK(gobjs_upto(2).size() == 5);  // *, (), (1), (1,1), (2)
}

TEST_CASE("index hom sets: examples") {
  CHECK(enumerate_g_homset(g({1}), g({1})).size() == 2);
  CHECK(enumerate_g_homset(GObj(), g({1})).size() == 2);
  CHECK(enumerate_g_homset(g({2, 1}), GObj::base()).size() == 1);
  CHECK(enumerate_g_homset(GObj::base(), g({2})).size() == 1);
}

TEST_CASE("index hom sets match the cardinality formula and brute force") {
  auto objs = gobjs_upto(3);
  for (auto const& m : objs) {
    for (auto const& n : objs) {
      CAPTURE(m.str());
      CAPTURE(n.str());
      auto h = enumerate_g_homset(m, n);
      auto b = brute_homset(m, n);
      CHECK(std::set<GMor>(h.begin(), h.end()) == b);
      CHECK(h.size() == b.size());
      CHECK(g_hom_cardinality(m, n) == h.size());
    }
  }
}

TEST_CASE("index composition: units, insertions, collapse") {
  auto objs = gobjs_upto(3);
  for (auto const& m : objs) {
    for (auto const& n : objs) {
      for (auto const& f : enumerate_g_homset(m, n)) {
        CHECK(compose_g(identity_gmor(n), f) == f);
        CHECK(compose_g(f, identity_gmor(m)) == f);
      }
    }
  }
  // () -> (1) -> (1,1)
  GMor a = stabilization(GObj());
  GMor b = stabilization(g({1}));
  GMor c = compose_g(b, a);
  CHECK(c == make_gmor(GObj(), g({1, 1}), {},
                       {FMap::identity(1), FMap::identity(1)}));
  // the second map kills the image of the first
  GMor f = make_gmor(g({1}), g({2}), {0}, {FMap{1, 2, {1}}});
  GMor k = make_gmor(g({2}), g({1}), {0}, {FMap{2, 1, {0, 1}}});
  CHECK_FALSE(f.null);
  CHECK_FALSE(k.null);
  CHECK(compose_g(k, f).null);
}

TEST_CASE("index composition is associative") {
  auto objs = gobjs_upto(2);
  std::size_t triples = 0;
  for (auto const& a : objs) {
    for (auto const& b : objs) {
      auto ab = enumerate_g_homset(a, b);
      for (auto const& c : objs) {
        auto bc = enumerate_g_homset(b, c);
        for (auto const& d : objs) {
          auto cd = enumerate_g_homset(c, d);
          for (auto const& f : ab) {
            for (auto const& x : bc) {
              GMor xf = compose_g(x, f);
              for (auto const& y : cd) {
                CHECK(compose_g(y, xf) == compose_g(compose_g(y, x), f));
                ++triples;
              }
            }
          }
        }
      }
    }
  }
  CHECK(triples > 1000);
}

TEST_CASE("concatenation is a permutative structure") {
  auto rep = validate_gstar(3);
  for (auto const& v : rep.violations) {
    MESSAGE(v.law << ": " << v.detail);
  }
  CHECK(rep.ok());
  CHECK(rep.instances > 0);
}

TEST_CASE("generator factorization") {
  // an F-morphism alone
  GMor a = make_gmor(g({2}), g({1}), {0}, {FMap{2, 1, {1, 1}}});
  CHECK(factor_generators(a) == std::vector<GMor>{a});
  // a permutation alone
  GMor s = permutation_g(g({2, 1}), {1, 0});
  CHECK(factor_generators(s) == std::vector<GMor>{s});
  // (2) -> (2,1) hitting slot 1 with the identity
  GMor e = make_gmor(g({2}), g({2, 1}), {0},
                     {FMap::identity(2), FMap::identity(1)});
  auto fe = factor_generators(e);
  REQUIRE(fe.size() == 2);
  CHECK(is_stabilization(fe[0]));
  CHECK(fe[1] == identity_gmor(g({2, 1})));
  CHECK_THROWS_AS(factor_generators(null_gmor(g({1}), g({1}))), Error);

  // every non-null morphism over small objects
  std::size_t n = 0;
  std::size_t expected = 0;
  for (auto const& m : gobjs_upto(4)) {
    for (auto const& t : gobjs_upto(4)) {
      expected += g_hom_cardinality(m, t) - 1;
      for (auto const& f : enumerate_g_homset(m, t)) {
        if (f.null) {
          continue;
        }
        auto parts = factor_generators(f);
        GMor c = identity_gmor(f.src);
        for (auto const& p : parts) {
          CHECK((is_stabilization(p) || is_permutation(p) || is_fmap(p)));
          c = compose_g(p, c);
        }
        CHECK(c == f);
        ++n;
      }
    }
  }
  CHECK(n == expected);
  CHECK(n > 5000);
}

TEST_CASE("index morphism json round trip") {
  for (auto const& f : enumerate_g_homset(g({2}), g({1, 2}))) {
    CHECK(gmor_from_json(gmor_to_json(f)) == f);
  }
  CHECK_THROWS_AS(
      gmor_from_json(R"j({"src":"(1)","tgt":"(1)","q":[2],"alpha":[[1]]})j"),
      Error);
}
