#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "mc/axioms.hpp"
#include "mc/based.hpp"
#include "mc/homtensor.hpp"
#include "mc/permcat.hpp"
#include "support.hpp"

using namespace mc;
using namespace mc::testing;

TEST_CASE("reverse priority") {
  // two blocks of three become three blocks of two
  auto p = reverse_priority(2, 3);
  CHECK(p.images() == std::vector<int>{0, 2, 4, 1, 3, 5});
  CHECK(reverse_priority(3, 2) == p.inverse());
  CHECK(reverse_priority(1, 4).is_identity());
  CHECK(reverse_priority(0, 3).size() == 0);
}

TEST_CASE("Hom(*, E) has one object with singleton endomorphism sets") {
  Multicat h = hom_multicat(terminal(), make_E().carrier);
  REQUIRE(h.size() == 1);
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK(h.hom(Profile{std::vector<ObjId>(k, 0), 0}).size() == 1);
  }
}

TEST_CASE("Hom(E, E): no 1-morphism from the identity to the collapse") {
  Multicat E = make_E().carrier;
  Multicat h = hom_multicat(E, E);
  auto const& objs = hom_objects(h);
  REQUIRE(objs.size() == 2);
  ObjId id = -1;
  ObjId zero = -1;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    (objs[i].obj[1] == 1 ? id : zero) = static_cast<ObjId>(i);
  }
  CHECK(h.hom(Profile{{id}, zero}).empty());
  CHECK(h.hom(Profile{{zero}, id}).empty());
  CHECK(h.hom(Profile{{id}, id}) == std::vector<Mor>{h.ident(id)});
  CHECK(check_operad_axioms(h, Budget{3, 3}).ok());
}

TEST_CASE("Hom into a non-thin target passes the axioms") {
  Multicat E = make_E().carrier;
  Multicat h = hom_multicat(E, underlying(signed_z2()), {Budget{2, 2}});
  CHECK(h.size() > 1);
  CHECK(check_operad_axioms(h, Budget{2, 2}).ok());
}

TEST_CASE("bilinear maps into thin targets match brute force") {
  std::vector<Multicat> corpus{terminal(), make_E().carrier,
                               discrete({"x", "y"}), make_unit_u().carrier};
  for (auto const& m : corpus) {
    for (auto const& n : corpus) {
      for (auto const& p : corpus) {
        CAPTURE(m.name());
        CAPTURE(n.name());
        CAPTURE(p.name());
        auto got = enumerate_bilinear(m, n, p);
        CHECK(got.size() == brute_thin_bilinear(m, n, p, 3));
      }
    }
  }
  CHECK(enumerate_bilinear(terminal(), terminal(), terminal()).size() == 1);
}

TEST_CASE("bilinear maps restrict to functors on 1-morphisms") {
  Multicat E = make_E().carrier;
  Multicat U = underlying(signed_z2());
  auto maps = enumerate_bilinear(E, E, U, {Budget{2, 2}});
  REQUIRE_FALSE(maps.empty());
  auto ones = morphisms_upto(E, 1);
  for (auto const& f : maps) {
    for (auto const& phi : ones) {
      if (phi.arity() != 1) {
        continue;
      }
      for (auto const& psi : ones) {
        if (psi.arity() != 1) {
          continue;
        }
        // (phi, psi) = (phi, b') o (a, psi) = (a', psi) o (phi, b)
        ObjId a = phi.profile.source[0];
        ObjId b = psi.profile.source[0];
        Mor x = f.left[psi.target()](phi);
        Mor y = f.right[a](psi);
        Mor z = f.right[phi.target()](psi);
        Mor w = f.left[b](phi);
        CHECK(U.gamma(x, std::span<const Mor>(&y, 1))
              == U.gamma(z, std::span<const Mor>(&w, 1)));
      }
    }
  }
}

TEST_CASE("bilinearity failures are detected") {
  // Over signed Z/2, swapping one slice for a twisted one breaks the square
  // while each slice stays a multifunctor.
  Multicat E = make_E().carrier;
  Multicat U = underlying(signed_z2());
  auto lm = enumerate_multifunctors(E, U, {Budget{2, 2}});
  auto good = enumerate_bilinear(E, E, U, {Budget{2, 2}});
  std::size_t candidates = 0;
  for (auto const& l0 : lm) {
    for (auto const& l1 : lm) {
      for (auto const& r0 : lm) {
        for (auto const& r1 : lm) {
          BilinMap f;
          try {
            f = make_bilinear({l0, l1}, {r0, r1});
          } catch (Error const&) {
            continue;
          }
          ++candidates;
          bool const listed =
              std::find(good.begin(), good.end(), f) != good.end();
          CHECK(listed == !bilinear_violation(f, U).has_value());
        }
      }
    }
  }
  CHECK(candidates > good.size());
}

TEST_CASE("k-natural transformations from generators") {
  Multicat E = make_E().carrier;
  auto fs = enumerate_multifunctors(E, E);
  auto const& id = fs[0].obj[1] == 1 ? fs[0] : fs[1];
  auto r = knat_from_generators(E, {id}, id, {E.ident(0), E.ident(1)});
  REQUIRE(r.knat);
  CHECK(r.failure.empty());

  // a broken component is caught at a generator
  Multicat U = underlying(signed_z2());
  auto maps = enumerate_multifunctors(E, U, {Budget{3, 3}});
  for (auto const& f : maps) {
    if (f.obj[1] == f.obj[0]) {
      continue;
    }
    // s at the unit object does not commute with (0,1) -> 1
    Mor s0 = Mor{Profile{{f.obj[0]}, f.obj[0]}, "s_" + U.label(f.obj[0])};
    auto bad = knat_from_generators(U, {f}, f, {s0, U.ident(f.obj[1])});
    CHECK_FALSE(bad.generators_ok);
    CHECK(bad.failure.rfind("generator", 0) == 0);
  }
}

TEST_CASE("currying bijections on small triples") {
  Multicat E = make_E().carrier;
  std::vector<Multicat> corpus{terminal(), E, discrete({"x", "y"})};
  for (auto const& m : corpus) {
    for (auto const& n : {E}) {
      for (auto const& p : {E}) {
        CAPTURE(m.name());
        auto rep = check_currying(m, n, p, {Budget{3, 3}}, 2);
        for (auto const& f : rep.failures) {
          MESSAGE(f);
        }
        CHECK(rep.ok());
        CHECK(rep.hom_mn == rep.bilin);
        CHECK(rep.hom_nm == rep.bilin);
        CHECK(rep.bilin == brute_thin_bilinear(m, n, p, 3));
      }
    }
  }
}

TEST_CASE("naturality on generators extends to the whole fragment") {
  std::mt19937 rng(7);
  std::vector<Multicat> targets{underlying(signed_z2()),
                                underlying(indiscrete_perm("E(Z/2)",
                                                           cyclic(2)))};
  std::size_t trials = 0;
  std::size_t nontrivial = 0;
  std::size_t attempts = 0;
  while (trials < 20 && attempts < 2000) {
    ++attempts;
    std::uniform_int_distribution<int> size(1, 3);
    auto pm = testing::random_partial_monoid(rng, size(rng));
    Multicat src = testing::partial_monoid_multicat(pm, "pm");
    REQUIRE(check_operad_axioms(src).ok());
    Multicat const& tgt = targets[attempts % targets.size()];
    auto maps = enumerate_multifunctors(src, tgt, {Budget{3, 3}});
    auto s = sample_generator_natural(maps, tgt, rng);
    if (!s) {
      continue;
    }
    ++trials;
    auto r = knat_from_generators(tgt, s->fs, s->g, s->comp);
    CHECK(r.generators_ok);
    CHECK(r.knat.has_value());
    CHECK(r.failure.empty());
    nontrivial += s->g.frag->mors.size() > s->g.frag->gens.size() + src.size();
  }
  CHECK(trials == 20);
  CHECK(nontrivial > 0);
}
