// One line per acceptance criterion: id, PASS or FAIL, wall time, detail.
// Exit status 1 when any criterion fails or runs over its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "mc/axioms.hpp"
#include "mc/based.hpp"
#include "mc/freecons.hpp"
#include "mc/gstar.hpp"
#include "mc/homtensor.hpp"
#include "mc/ktheory.hpp"
#include "mc/permcat.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mc;
using namespace mc::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string first;
  std::ostringstream detail;

  void fail(std::string const& what) {
    if (ok) {
      first = what;
    }
    ok = false;
  }
  void expect(bool cond, std::string const& what) {
    if (!cond) {
      fail(what);
    }
  }
};

PermCatPtr dz2() {
  return discrete_perm("dZ/2", cyclic(2));
}
PermCatPtr dz3() {
  return discrete_perm("dZ/3", cyclic(3));
}
PermCatPtr es2() {
  return indiscrete_perm("E(Sigma_2)", cyclic(2));
}

PermCatPtr free_fragment() {
  auto c = FreePerm(discrete({}), 4).as_permcat("F(0)|4");
  if (!c) {
    throw Error("the free fragment over the empty multicategory is not closed");
  }
  return *c;
}

std::vector<PermCatPtr> perm_corpus() {
  return {dz2(), dz3(), es2(), signed_z2(), free_fragment()};
}

void c1(Outcome& out) {
  std::vector<Multicat> ms{make_E().carrier, terminal()};
  for (std::size_t m = 0; m <= 3; ++m) {
    ms.push_back(E_power(m).carrier);
  }
  std::vector<std::vector<std::string>> labels{{"x"}, {"x", "y"},
                                               {"x", "y", "z"}};
  for (auto const& l : labels) {
    ms.push_back(discrete(l));
    ms.push_back(indiscrete(l));
  }
  ms.push_back(product(make_E().carrier, discrete({"x", "y"})));
  ms.push_back(product(indiscrete({"x", "y"}), make_E().carrier));
  ms.push_back(coproduct(make_E().carrier, indiscrete({"x", "y"})));
  ms.push_back(coproduct(discrete({"x"}), terminal()));
  std::size_t u = 0;
  for (auto const& c : perm_corpus()) {
    ms.push_back(underlying(c));
    ++u;
  }
  std::size_t instances = 0;
  for (auto const& m : ms) {
    auto rep = check_operad_axioms(m, Budget{4, 4});
    instances += rep.instances;
    out.expect(rep.ok(), m.name());
  }
  out.detail << ms.size() << " multicategories (" << u
             << " underlying), " << instances << " instances";
}

void c2(Outcome& out) {
  auto cs = perm_corpus();
  std::size_t pairs = 0;
  std::size_t maps = 0;
  for (auto const& c : cs) {
    for (auto const& d : cs) {
      std::string const who = c->name + " -> " + d->name;
      auto lax = enumerate_laxstar(c, d);
      auto mf = enumerate_based_multifunctors(underlying_based(c),
                                              underlying_based(d));
      out.expect(lax.size() == mf.size(), "counts differ for " + who);
      out.expect(lax.size() == brute_laxstar_count(c, d),
                 "brute count differs for " + who);
      for (auto const& f : lax) {
        auto g = laxstar_to_multifunctor(f);
        out.expect(std::find(mf.begin(), mf.end(), g) != mf.end(),
                   "image missing for " + who);
        out.expect(multifunctor_to_laxstar(g, c, d) == f,
                   "round trip fails for " + who);
      }
      for (auto const& g : mf) {
        out.expect(laxstar_to_multifunctor(multifunctor_to_laxstar(g, c, d)) ==
                       g,
                   "reverse round trip fails for " + who);
      }
      ++pairs;
      maps += lax.size();
    }
  }
  out.detail << pairs << " ordered pairs, " << maps << " maps";
}

void c3(Outcome& out) {
  auto [s3, z6] = maclane_pair();
  out.expect(validate_permcat(*s3).ok() && validate_permcat(*z6).ok(),
             "not permutative");
  out.expect(element_orders(object_monoid(*s3)) ==
                 std::vector<int>{1, 2, 2, 2, 3, 3},
             "orders of the first");
  out.expect(element_orders(object_monoid(*z6)) ==
                 std::vector<int>{1, 2, 3, 3, 6, 6},
             "orders of the second");
  out.expect(!monoids_isomorphic(object_monoid(*s3), object_monoid(*z6)),
             "object monoids isomorphic");
  Multicat a = underlying(s3);
  Multicat b = underlying(z6);
  out.expect(a.labels() == b.labels(), "object sets differ");
  std::size_t profiles = 0;
  for (std::size_t k = 0; k <= 4; ++k) {
    for (auto const& src : all_sources(6, k)) {
      for (ObjId t = 0; t < 6; ++t) {
        ++profiles;
        out.expect(a.hom(Profile{src, t}).size() == 1 &&
                       b.hom(Profile{src, t}).size() == 1,
                   "hom set not a singleton");
      }
    }
  }
  out.detail << profiles << " profiles, every hom set a singleton";
}

void c4(Outcome& out) {
  std::vector<Multicat> corpus{terminal(), make_E().carrier,
                               discrete({"x", "y"})};
  std::size_t triples = 0;
  std::size_t bilin = 0;
  for (auto const& m : corpus) {
    for (auto const& n : corpus) {
      for (auto const& p : corpus) {
        std::string const who = m.name() + "," + n.name() + ";" + p.name();
        auto rep = check_currying(m, n, p, {Budget{3, 3}}, 2);
        out.expect(rep.ok(), who + (rep.ok() ? "" : ": " + rep.failures[0]));
        out.expect(rep.hom_mn == rep.bilin && rep.hom_nm == rep.bilin,
                   "sizes differ at " + who);
        out.expect(rep.bilin == brute_thin_bilinear(m, n, p, 3),
                   "brute count differs at " + who);
        ++triples;
        bilin += rep.bilin;
      }
    }
  }
  out.detail << triples << " triples, " << bilin << " bilinear maps";
}

void c5(Outcome& out) {
  std::mt19937 rng(20261017);
  std::vector<Multicat> targets{
      underlying(signed_z2()),
      underlying(indiscrete_perm("E(Z/2)", cyclic(2)))};
  std::size_t trials = 0;
  std::size_t attempts = 0;
  std::size_t nontrivial = 0;
  while (trials < 200 && attempts < 20000) {
    ++attempts;
    std::uniform_int_distribution<int> size(1, 3);
    auto pm = random_partial_monoid(rng, size(rng));
    Multicat src = partial_monoid_multicat(pm, "pm");
    Multicat const& tgt = targets[attempts % targets.size()];
    auto maps = enumerate_multifunctors(src, tgt, {Budget{4, 4}});
    auto s = sample_generator_natural(maps, tgt, rng);
    if (!s) {
      continue;
    }
    ++trials;
    auto r = knat_from_generators(tgt, s->fs, s->g, s->comp);
    out.expect(r.generators_ok && r.knat.has_value() && r.failure.empty(),
               "trial " + std::to_string(trials) + ": " + r.failure);
    nontrivial += s->g.frag->mors.size() > s->g.frag->gens.size() + src.size();
  }
  out.expect(trials == 200, "only " + std::to_string(trials) + " trials");
  out.detail << trials << " trials (" << nontrivial
             << " with composite morphisms), 0 counterexamples expected";
}

void c6(Outcome& out) {
  std::vector<BasedMulticat> corpus{make_E()};
  for (auto const& c : {dz2(), dz3(), es2(), signed_z2(),
                        maclane_pair().second}) {
    corpus.push_back(underlying_based(c));
  }
  std::size_t maps = 0;
  std::size_t balanced = 0;
  for (auto const& m : corpus) {
    auto bal = check_balanced(m);
    out.expect(bal.ok(), bal.ok() ? "" : bal.failures[0]);
    balanced += bal.instances;
    auto rep = smash_EE(m);
    out.expect(rep.ok(), rep.ok() ? "" : rep.failures[0]);
    out.expect(rep.factors.size() == rep.maps, "missing factors");
    maps += rep.maps;
  }
  for (std::size_t m = 0; m <= 3; ++m) {
    auto rep = check_e_module(m);
    out.expect(rep.ok(), rep.ok() ? "" : rep.failures[0]);
  }
  for (std::size_t m = 1; m <= 2; ++m) {
    for (std::size_t n = 1; n <= 2; ++n) {
      out.expect(absorption_agrees(m, n), "absorption");
    }
  }
  out.detail << corpus.size() << " targets, " << maps
             << " bilinear maps factored, " << balanced
             << " balanced instances, module slices m<=3";
}

void c7(Outcome& out) {
  std::vector<Multicat> targets{terminal(), make_E().carrier,
                                discrete({"x", "y"}), indiscrete({"x", "y"}),
                                underlying(signed_z2())};
  std::vector<MGraph> graphs{
      MGraph{{"a", "b"}, {}}, MGraph{{"a"}, {{"g", {0, 0}, 0}}},
      MGraph{{"a", "b"}, {{"g", {0, 1}, 0}, {"h", {1, 1}, 1}}},
      MGraph{{"a", "b"}, {{"u", {0}, 1}, {"z", {}, 0}, {"m", {1, 0}, 0}}}};
  std::size_t total = 0;
  for (auto const& g : graphs) {
    for (auto const& n : targets) {
      auto rep = adjunction_check_free(g, n, {Budget{3, 3}}, 3);
      out.expect(rep.ok(), n.name());
      out.expect(rep.graph_maps == brute_graph_maps(g, n),
                 "brute count differs for " + n.name());
      total += rep.graph_maps;
    }
  }
  FreePerm f(terminal(), 4);
  for (std::size_t a = 0; a <= 4; ++a) {
    for (std::size_t b = 0; b <= 4; ++b) {
      int u = f.word(std::vector<ObjId>(a, 0));
      int v = f.word(std::vector<ObjId>(b, 0));
      out.expect(f.hom(u, v).size() == ipower(b, static_cast<int>(a)),
                 "F(*) hom((" + std::to_string(a) + "),(" +
                     std::to_string(b) + "))");
    }
  }
  out.detail << graphs.size() * targets.size() << " graph/target pairs, "
             << total << " adjunct pairs; F(*) hom sizes b^a for a,b<=4";
}

void c8(Outcome& out) {
  auto rep = check_g_associativity(4);
  out.expect(rep.ok(), rep.ok() ? "" : rep.failures[0]);
  std::size_t homs = 0;
  auto objs = gobjs_upto(4);
  for (auto const& m : objs) {
    for (auto const& n : objs) {
      auto h = enumerate_g_homset(m, n);
      auto b = brute_homset(m, n);
      out.expect(h.size() == g_hom_cardinality(m, n) && h.size() == b.size() &&
                     std::set<GMor>(h.begin(), h.end()) == b,
                 "hom set " + m.str() + " -> " + n.str());
      ++homs;
    }
  }
  auto perm = validate_gstar(3);
  out.expect(perm.ok(), "concatenation is not permutative");
  out.detail << rep.triples << " triples, " << homs << " hom sets, "
             << perm.instances << " permutative instances at total 3";
}

void c9(Outcome& out) {
  auto z = dz2();
  out.expect(enumerate_jc(z, GObj::of({1})).objects.size() == 2 &&
                 brute_jc_count(*z, GObj::of({1})) == 2,
             "count at (1)");
  out.expect(enumerate_jc(z, GObj::of({2})).objects.size() == 4 &&
                 brute_jc_count(*z, GObj::of({2})) == 4,
             "count at (2)");
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::size_t transports = 0;
  for (auto const& c : {z, es2()}) {
    for (auto const& shape : {GObj::of({1}), GObj::of({2}), GObj::of({1, 1}),
                              GObj::of({2, 1})}) {
      auto rep = extn_roundtrip(c, shape, 4);
      out.expect(rep.ok(), c->name + " " + shape.str() +
                               (rep.ok() ? "" : ": " + rep.failures[0]));
      objects += rep.objects;
      morphisms += rep.morphisms;
      transports += rep.transports;
    }
  }
  out.detail << objects << " systems, " << morphisms << " morphisms, "
             << transports << " generator transports";
}

void c10(Outcome& out) {
  std::vector<JC> js;
  std::vector<PermCatPtr> cs;
  for (auto const& c : {dz2(), es2(), signed_z2()}) {
    for (auto const& shape : {GObj::of({1}), GObj::of({2}), GObj::of({1, 1})}) {
      js.push_back(enumerate_jc(c, shape));
      cs.push_back(c);
    }
  }
  std::vector<std::pair<PermCatPtr, JC const*>> cats;
  for (std::size_t i = 0; i < js.size(); ++i) {
    cats.emplace_back(cs[i], &js[i]);
  }
  auto rep = check_jc_functoriality(4, cats);
  out.expect(rep.ok(), rep.ok() ? "" : rep.failures[0]);
  out.expect(rep.permutation_pairs > 0 && rep.stabilizations > 0,
             "no permutation pairs or stabilizations");
  out.detail << rep.pairs << " composable pairs (" << rep.permutation_pairs
             << " of permutations), " << rep.stabilizations
             << " stabilizations, " << rep.transports << " transports";
}

}  // namespace

int main() {
  struct Criterion {
    char const* id;
    double limit;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> const all{
      {"C1", 10, c1},  {"C2", 60, c2}, {"C3", 5, c3},    {"C4", 120, c4},
      {"C5", 60, c5},  {"C6", 30, c6}, {"C7", 60, c7},   {"C8", 60, c8},
      {"C9", 300, c9}, {"C10", 120, c10}};
  int failed = 0;
  for (auto const& c : all) {
    Outcome out;
    auto const t0 = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (std::exception const& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double const secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (secs > c.limit) {
      out.fail("over the time limit");
    }
    failed += !out.ok;
    std::string detail = out.detail.str();
    if (!out.ok) {
      detail += " | first failure: " + out.first;
    }
    std::printf("%-4s %s %7.2fs (limit %gs) %s\n", c.id,
                out.ok ? "PASS" : "FAIL", secs, c.limit, detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
