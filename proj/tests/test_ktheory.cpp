#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "mc/ktheory.hpp"

using namespace mc;
using namespace mc::testing;

namespace {

GObj g(std::vector<int> d) {
  return GObj::of(std::move(d));
}

PermCatPtr dz2() {
  return discrete_perm("dZ/2", cyclic(2));
}

PermCatPtr es2() {
  return indiscrete_perm("E(Sigma_2)", cyclic(2));
}

}  // namespace

TEST_CASE("systems of discrete Z/2") {
  auto c = dz2();
  CHECK(enumerate_jc(c, g({1})).objects.size() == 2);
  CHECK(enumerate_jc(c, g({2})).objects.size() == 4);
  for (auto const& shape : {g({1}), g({2}), g({3}), g({1, 1}), g({2, 1}),
                            g({2, 2}), GObj()}) {
    CAPTURE(shape.str());
    JC const j = enumerate_jc(c, shape);
    CHECK(j.objects.size() == discrete_count(2, shape));
    // discrete: only identities
    CHECK(j.arrows.size() == j.objects.size());
  }
  JC const base = enumerate_jc(c, GObj::base());
  CHECK(base.objects.size() == 1);
  CHECK(base.arrows.size() == 1);
}

TEST_CASE("enumeration agrees with filtering every assignment") {
  for (auto const& c : {dz2(), es2(), signed_z2()}) {
    for (auto const& shape : {g({1}), g({2}), g({1, 1})}) {
      CAPTURE(c->name);
      CAPTURE(shape.str());
      CHECK(enumerate_jc(c, shape).objects.size() == brute_jc_count(*c, shape));
    }
  }
}

TEST_CASE("enumerated systems and morphisms are valid") {
  for (auto const& c : {dz2(), es2(), signed_z2()}) {
    for (auto const& shape : {g({1}), g({2}), g({1, 1}), g({2, 1})}) {
      CAPTURE(c->name);
      CAPTURE(shape.str());
      JC const j = enumerate_jc(c, shape);
      CHECK(enumerate_jc(c, shape, Exec::serial).objects == j.objects);
      for (auto const& s : j.objects) {
        CHECK_FALSE(system_violation(*c, s).has_value());
      }
      for (auto const& a : j.arrows) {
        CHECK_FALSE(
            mor_violation(*c, j.objects[a.src], j.objects[a.tgt], a.mor)
                .has_value());
      }
      for (std::size_t o = 0; o < j.objects.size(); ++o) {
        CHECK(j.arrows[j.ident[o]].src == static_cast<int>(o));
        CHECK(compose_arrows(*c, j, j.ident[o], j.ident[o]) == j.ident[o]);
      }
    }
  }
  // E(Sigma_2): indiscrete, so every pair of systems is joined by exactly
  // one morphism
  JC const j = enumerate_jc(es2(), g({2}));
  CHECK(j.arrows.size() == j.objects.size() * j.objects.size());
}

TEST_CASE("validator rejects broken systems") {
  auto c = dz2();
  JC const j = enumerate_jc(c, g({2}));
  EStar const es(g({2}));
  System s = j.objects.back();
  int const top = es.code({3});
  s.values[top] ^= 1;
  CHECK(system_violation(*c, s).has_value());
  s = j.objects.back();
  s.values[0] = 1;
  CHECK(system_violation(*c, s).has_value());
  auto e = es2();
  JC const je = enumerate_jc(e, g({2}));
  s = je.objects.front();
  int const k = es.entry(top, 0, 1);
  s.rho[k] = e->arrows.size() - 1 == static_cast<std::size_t>(s.rho[k])
                 ? 0
                 : static_cast<int>(e->arrows.size()) - 1;
  CHECK(system_violation(*e, s).has_value());
}

TEST_CASE("systems in the underlying multicategory") {
  BasedMulticat const u = underlying_based(dz2());
  CHECK(jhat(u, g({2})).objects.size() == 4);
  for (auto const& c : {dz2(), es2()}) {
    BasedMulticat const m = underlying_based(c);
    for (auto const& shape :
         {GObj(), g({1}), g({2}), g({1, 1}), g({2, 1})}) {
      CAPTURE(c->name);
      CAPTURE(shape.str());
      JHat const h = jhat(m, shape);
      for (auto const& s : h.objects) {
        CHECK_FALSE(msystem_violation(m, s).has_value());
      }
      auto oracle = oracle_systems(m, shape);
      auto mine = h.objects;
      std::sort(mine.begin(), mine.end());
      CHECK(mine == oracle);
      auto rep = check_evaluator(m, h);
      for (auto const& f : rep.failures) {
        MESSAGE(f);
      }
      CHECK(rep.ok());
    }
  }
}

TEST_CASE("evaluation splits in both orders") {
  auto c = es2();
  BasedMulticat const m = underlying_based(c);
  JHat const h = jhat(m, g({3}));
  for (auto const& s : h.objects) {
    for (auto const& parts : std::vector<std::vector<Subset>>{
             {1, 2, 4}, {4, 1, 2}, {2, 0, 5}, {7}}) {
      Subset all = 0;
      for (Subset t : parts) {
        all |= t;
      }
      CHECK(evaluate(m, s, static_cast<int>(all), 0, parts, true) ==
            evaluate(m, s, static_cast<int>(all), 0, parts, false));
    }
  }
  CHECK_THROWS_AS(evaluate(m, h.objects[0], 7, 0, {1, 3, 4}), Error);
}

TEST_CASE("translation is an isomorphism and commutes with the action") {
  for (auto const& c : {dz2(), es2()}) {
    for (auto const& shape : {g({1}), g({2}), g({1, 1})}) {
      CAPTURE(c->name);
      CAPTURE(shape.str());
      auto rep = extn_roundtrip(c, shape, 3);
      for (auto const& f : rep.failures) {
        MESSAGE(f);
      }
      CHECK(rep.ok());
      CHECK(rep.generators > 0);
      CHECK(rep.composites >= rep.morphisms);
    }
  }
}

TEST_CASE("reindexing") {
  GObj const a = g({2});
  CHECK(jc_reindex(identity_gmor(a)) == identity_reindex(a));
  Reindex const e = jc_reindex(stabilization(a));
  Reindex const d = drop_last(a);
  CHECK(normalize_jc(compose(d, e)) == normalize_jc(identity_reindex(a)));
  // degenerate target tuples read the zero object
  GMor const kill = make_gmor(a, g({2}), {0}, {FMap{2, 2, {1, 0}}});
  Reindex const r = normalize_jc(jc_reindex(kill));
  EStar const es(g({2}));
  for (int c = 0; c < es.codes(); ++c) {
    if (es.degenerate(c)) {
      CHECK(r.value[c] == -1);
    }
  }
  // {2} has empty preimage
  CHECK(r.value[es.code({2})] == -1);
  CHECK(r.value[es.code({1})] == es.code({1}));
  CHECK(jc_reindex(null_gmor(a, a)).value ==
        std::vector<int>(es.codes(), -1));
  // the action of a transposition on (1,1) swaps the slots
  auto c = es2();
  JC const j = enumerate_jc(c, g({1, 1}));
  GMor const t = permutation_g(g({1, 1}), {1, 0});
  for (auto const& x : j.objects) {
    System const y = apply(*c, jc_reindex(t), x);
    CHECK_FALSE(system_violation(*c, y).has_value());
    CHECK(apply(*c, jc_reindex(t), y) == x);
  }
}

TEST_CASE("the action is functorial") {
  auto c = dz2();
  auto e = es2();
  JC const jc = enumerate_jc(c, g({1}));
  JC const je = enumerate_jc(e, g({1, 1}));
  auto rep = check_jc_functoriality(3, {{c, &jc}, {e, &je}});
  for (auto const& f : rep.failures) {
    MESSAGE(f);
  }
  CHECK(rep.ok());
  CHECK(rep.pairs > 1000);
  CHECK(rep.permutation_pairs > 0);
  CHECK(rep.stabilizations > 0);
  CHECK(rep.transports > 0);
}

TEST_CASE("pairing along a bilinear map") {
  auto c = dz2();
  PkObject const mult = discrete_bilinear(c, {{0, 0}, {0, 1}});
  for (auto const& [sx, sy] :
       std::vector<std::pair<GObj, GObj>>{{g({1}), g({1})},
                                          {g({2}), g({1})},
                                          {GObj(), g({2})},
                                          {g({1}), GObj()}}) {
    JC const jx = enumerate_jc(c, sx);
    JC const jy = enumerate_jc(c, sy);
    std::set<System> seen;
    for (auto const& x : jx.objects) {
      for (auto const& y : jy.objects) {
        System const p = pair_systems(mult, x, y);
        CHECK(p.shape == odot(sx, sy));
        CHECK_FALSE(system_violation(*c, p).has_value());
        seen.insert(p);
      }
    }
    CHECK(!seen.empty());
  }
  // a zero system pairs to zero
  JC const j1 = enumerate_jc(c, g({1}));
  System zero;
  for (auto const& x : j1.objects) {
    if (x.values[1] == 0) {
      zero = x;
    }
  }
  for (auto const& y : j1.objects) {
    System const p = pair_systems(mult, zero, y);
    for (int v : p.values) {
      CHECK(v == c->zero);
    }
  }
  System bad = j1.objects[0];
  bad.values[0] = 1;
  CHECK_THROWS_AS(pair_systems(mult, bad, j1.objects[0]), Error);
  PkObject const e2 =
      indiscrete_bilinear(c, c, es2(), {{0, 0}, {0, 1}});
  JC const j2 = enumerate_jc(c, g({2}));
  for (auto const& x : j2.objects) {
    for (auto const& y : j1.objects) {
      CHECK_FALSE(system_violation(*es2(), pair_systems(e2, x, y)));
    }
  }
}

TEST_CASE("system json and dot") {
  auto c = es2();
  for (auto const& shape : {GObj::base(), GObj(), g({2}), g({2, 1})}) {
    JC const j = enumerate_jc(c, shape);
    for (auto const& s : j.objects) {
      CHECK(system_from_json(*c, system_to_json(*c, s)) == s);
    }
  }
  CHECK_THROWS_AS(system_from_json(*c, "{"), Error);
  CHECK_THROWS_AS(
      system_from_json(*c, R"j({"schemaVersion":1,"shape":[1],
        "values":{"{9}":"0"},"rhos":{}})j"),
      Error);
  JC const j = enumerate_jc(c, g({1}));
  std::string const dot = jc_to_dot(*c, j);
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("->") != std::string::npos);
}
