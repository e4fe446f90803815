// mc: command-line front end.  Exit 0 when every requested check passes,
// 1 when a check fails, 2 on bad input.

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mc/axioms.hpp"
#include "mc/based.hpp"
#include "mc/freecons.hpp"
#include "mc/gstar.hpp"
#include "mc/homtensor.hpp"
#include "mc/ktheory.hpp"
#include "mc/permcat.hpp"

using namespace mc;
using Json = nlohmann::ordered_json;

namespace {

struct InputError : Error {
  using Error::Error;
};

struct Out {
  Json j;
  std::ostringstream text;
  bool ok = true;

  void check(bool cond, std::string const& what) {
    if (!cond) {
      ok = false;
      j["failures"].push_back(what);
      text << "FAIL " << what << "\n";
    }
  }
};

std::string slurp(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read " + path);
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> split(std::string const& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::size_t parse_count(std::string const& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (std::exception const&) {
    pos = 0;
  }
  if (pos != s.size() || s.empty()) {
    throw InputError("not a count: " + s);
  }
  return v;
}

PermCatPtr load_perm(std::string const& s) {
  if (s == "dZ2") {
    return discrete_perm("dZ/2", cyclic(2));
  }
  if (s == "dZ3") {
    return discrete_perm("dZ/3", cyclic(3));
  }
  if (s == "ESigma2") {
    return indiscrete_perm("E(Sigma_2)", cyclic(2));
  }
  if (s == "ESigma3") {
    return maclane_pair().first;
  }
  if (s == "EZ6") {
    return maclane_pair().second;
  }
  if (s == "signedZ2") {
    return signed_z2();
  }
  if (s == "point") {
    return discrete_perm("point", cyclic(1));
  }
  return permcat_from_json(slurp(s));
}

Multicat load_multicat(std::string const& s) {
  if (s == "*" || s == "terminal") {
    return terminal();
  }
  if (s == "E") {
    return make_E().carrier;
  }
  if (s.rfind("E^", 0) == 0) {
    return E_power(parse_count(s.substr(2))).carrier;
  }
  if (s.rfind("discrete:", 0) == 0) {
    return discrete(split(s.substr(9), ','));
  }
  if (s.rfind("indiscrete:", 0) == 0) {
    return indiscrete(split(s.substr(11), ','));
  }
  if (s.rfind("U:", 0) == 0) {
    return underlying(load_perm(s.substr(2)));
  }
  throw InputError("unknown multicategory: " + s);
}

BasedMulticat load_based(std::string const& s) {
  if (s == "*" || s == "terminal") {
    return based_terminal();
  }
  if (s == "E") {
    return make_E();
  }
  if (s.rfind("E^", 0) == 0) {
    return E_power(parse_count(s.substr(2)));
  }
  if (s.rfind("U:", 0) == 0) {
    return underlying_based(load_perm(s.substr(2)));
  }
  throw InputError("unknown based multicategory: " + s);
}

GObj load_shape(std::string const& s) {
  try {
    return parse_gobj(s);
  } catch (Error const& e) {
    throw InputError(e.what());
  }
}

void report_axioms(Out& out, AxiomReport const& rep, std::string const& what) {
  out.j[what] = {{"ok", rep.ok()},
                 {"instances", rep.instances},
                 {"truncated", rep.truncated}};
  out.text << what << ": " << rep.instances << " instances, "
           << rep.violations.size() << " violations\n";
  for (auto const& v : rep.violations) {
    out.check(false, what + ": " + v.law + ": " + v.detail);
  }
}

// commands

void cmd_check_axioms(Out& out, std::string const& name, std::size_t arity,
                      std::size_t slot, bool full) {
  Multicat m = load_multicat(name);
  out.j["multicategory"] = m.name();
  out.j["budget"] = {arity, slot};
  report_axioms(out, check_operad_axioms(m, Budget{arity, slot},
                                         Exec::parallel, full),
                "axioms");
}

void cmd_free(Out& out, std::string const& graph, std::string const& target,
              std::string const& perm, std::size_t length, std::size_t height,
              std::size_t arity) {
  if (graph.empty() == perm.empty()) {
    throw InputError("free needs exactly one of --graph and --perm");
  }
  if (!graph.empty()) {
    if (target.empty()) {
      throw InputError("free --graph needs --target");
    }
    MGraph g = mgraph_from_json(slurp(graph));
    Multicat n = load_multicat(target);
    auto rep = adjunction_check_free(g, n, {Budget{arity, arity}}, height);
    out.j["graphMaps"] = rep.graph_maps;
    out.j["multifunctors"] = rep.multifunctors;
    out.j["roundTrips"] = rep.roundtrips;
    out.text << "graph maps " << rep.graph_maps << ", multifunctors "
             << rep.multifunctors << ", round trips " << rep.roundtrips
             << "\n";
    for (auto const& f : rep.failures) {
      out.check(false, f);
    }
    out.check(rep.ok(), "adjunction counts differ");
    return;
  }
  FreePerm f(load_multicat(perm), length);
  out.j["words"] = f.words().size();
  out.text << "words " << f.words().size() << "\n";
  report_axioms(out, validate_free_perm(f), "permutative");
}

void cmd_hom(Out& out, std::string const& a, std::string const& b,
             std::size_t arity, std::size_t check_arity) {
  Multicat m = load_multicat(a);
  Multicat n = load_multicat(b);
  Multicat h = hom_multicat(m, n, {Budget{arity, arity}});
  out.j["objects"] = h.size();
  out.text << "Hom(" << m.name() << ", " << n.name() << "): " << h.size()
           << " objects\n";
  if (check_arity >= 2) {
    report_axioms(out,
                  check_operad_axioms(h, Budget{check_arity, check_arity}),
                  "axioms");
  }
}

void cmd_bilin(Out& out, std::string const& a, std::string const& b,
               std::string const& c, std::size_t arity, bool curry) {
  Multicat m = load_multicat(a);
  Multicat n = load_multicat(b);
  Multicat p = load_multicat(c);
  auto maps = enumerate_bilinear(m, n, p, {Budget{arity, arity}});
  out.j["bilinear"] = maps.size();
  out.text << "Bilin(" << m.name() << ", " << n.name() << "; " << p.name()
           << "): " << maps.size() << " maps\n";
  if (curry) {
    auto rep = check_currying(m, n, p, {Budget{arity, arity}}, 2);
    out.j["currying"] = {{"ok", rep.ok()},
                         {"homMN", rep.hom_mn},
                         {"homNM", rep.hom_nm},
                         {"morphisms", rep.morphisms}};
    out.text << "Hom(M, Hom(N, P)) " << rep.hom_mn << ", Hom(N, Hom(M, P)) "
             << rep.hom_nm << ", morphisms checked " << rep.morphisms << "\n";
    for (auto const& f : rep.failures) {
      out.check(false, f);
    }
  }
}

void cmd_natural(Out& out, std::string const& a, std::string const& b,
                 std::size_t trials, std::uint64_t seed, std::size_t arity) {
  Multicat m = load_multicat(a);
  Multicat n = load_multicat(b);
  std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
  auto maps = enumerate_multifunctors(m, n, {Budget{arity, arity}});
  std::size_t done = 0;
  std::size_t attempts = 0;
  while (done < trials && attempts < 100 * trials + 100) {
    ++attempts;
    auto s = sample_generator_natural(maps, n, rng);
    if (!s) {
      continue;
    }
    ++done;
    auto r = knat_from_generators(n, s->fs, s->g, s->comp);
    out.check(r.generators_ok && r.knat.has_value(),
              "trial " + std::to_string(done) + ": " + r.failure);
  }
  out.j["multifunctors"] = maps.size();
  out.j["trials"] = done;
  out.text << done << " generator-natural samples over " << maps.size()
           << " multifunctors\n";
  out.check(done == trials, "could not sample enough families");
}

void cmd_perm_validate(Out& out, std::string const& name) {
  auto c = load_perm(name);
  out.j["category"] = c->name;
  out.j["objects"] = c->size();
  out.j["arrows"] = c->arrows.size();
  out.text << c->name << ": " << c->size() << " objects, " << c->arrows.size()
           << " arrows\n";
  report_axioms(out, validate_permcat(*c), "permutative");
}

void cmd_perm_u(Out& out, std::string const& name, std::size_t arity) {
  auto c = load_perm(name);
  out.j["category"] = c->name;
  report_axioms(out,
                check_operad_axioms(underlying(c), Budget{arity, arity},
                                    Exec::parallel, true),
                "axioms");
}

void cmd_maclane(Out& out, bool compare) {
  auto [s3, z6] = maclane_pair();
  auto o1 = element_orders(object_monoid(*s3));
  auto o2 = element_orders(object_monoid(*z6));
  out.j["orders"] = {{s3->name, o1}, {z6->name, o2}};
  auto show = [](std::vector<int> const& v) {
    std::string s;
    for (int x : v) {
      s += (s.empty() ? "" : ",") + std::to_string(x);
    }
    return s;
  };
  out.text << s3->name << " element orders {" << show(o1) << "}\n"
           << z6->name << " element orders {" << show(o2) << "}\n";
  if (!compare) {
    return;
  }
  Multicat a = underlying(s3);
  Multicat b = underlying(z6);
  bool iso = a.labels() == b.labels();
  for (std::size_t k = 0; iso && k <= 4; ++k) {
    for (auto const& src : all_sources(a.size(), k)) {
      for (ObjId t = 0; t < static_cast<ObjId>(a.size()); ++t) {
        iso = iso && a.hom(Profile{src, t}).size() == 1 &&
              b.hom(Profile{src, t}).size() == 1;
      }
    }
  }
  bool const strict =
      monoids_isomorphic(object_monoid(*s3), object_monoid(*z6));
  out.j["basedIsomorphic"] = iso;
  out.j["strictIsomorphic"] = strict;
  out.check(iso, "underlying based multicategories differ");
  out.check(!strict, "object monoids are isomorphic");
  if (iso && !strict) {
    out.text << "based multicategories isomorphic; strict structures "
                "non-isomorphic\n";
  }
}

void cmd_estar(Out& out, std::string const& shape_s, std::size_t arity) {
  GObj const shape = load_shape(shape_s);
  out.j["shape"] = shape.str();
  if (shape.is_base()) {
    out.j["objects"] = Json::array();
    out.text << "E*" << shape.str() << " is the basepoint\n";
    return;
  }
  EStar const es(shape);
  Json objs = Json::array();
  for (int c : es.objects()) {
    objs.push_back(es.label(c));
    out.text << es.label(c) << "\n";
  }
  auto mors = slot_morphisms(es, arity);
  out.j["objects"] = objs;
  out.j["slotMorphisms"] = mors.size();
  out.text << es.objects().size() << " objects, " << mors.size()
           << " slot morphisms of arity at most " << arity << "\n";
}

void cmd_e_axioms(Out& out, std::string const& target, std::size_t max_m) {
  BasedMulticat m = load_based(target);
  auto bal = check_balanced(m);
  auto fac = smash_EE(m);
  out.j["bilinear"] = fac.maps;
  out.j["balancedInstances"] = bal.instances;
  out.text << fac.maps << " based bilinear maps (E, E) -> "
           << m.carrier.name() << ", " << bal.instances
           << " balanced instances\n";
  for (auto const& f : bal.failures) {
    out.check(false, f);
  }
  for (auto const& f : fac.failures) {
    out.check(false, f);
  }
  for (std::size_t k = 0; k <= max_m; ++k) {
    auto rep = check_e_module(k);
    out.text << "E^" << k << ": " << rep.objects << " objects, "
             << rep.morphisms << " morphisms in the unit slice\n";
    for (auto const& f : rep.failures) {
      out.check(false, "E^" + std::to_string(k) + ": " + f);
    }
  }
}

void cmd_gstar_hom(Out& out, std::string const& a, std::string const& b) {
  GObj const m = load_shape(a);
  GObj const n = load_shape(b);
  auto h = enumerate_g_homset(m, n);
  Json list = Json::array();
  for (auto const& g : h) {
    list.push_back(Json::parse(gmor_to_json(g)));
    out.text << g.str() << "\n";
  }
  std::size_t const formula = g_hom_cardinality(m, n);
  out.j["morphisms"] = list;
  out.j["count"] = h.size();
  out.j["formula"] = formula;
  out.text << h.size() << " morphisms " << m.str() << " -> " << n.str()
           << " (formula " << formula << ")\n";
  out.check(h.size() == formula, "count differs from the formula");
}

void cmd_gstar_check(Out& out, int total) {
  auto rep = check_g_associativity(total);
  out.j["triples"] = rep.triples;
  out.text << rep.triples << " composable triples\n";
  for (auto const& f : rep.failures) {
    out.check(false, f);
  }
  report_axioms(out, validate_gstar(std::min(total, 3)), "permutative");
}

struct JcArgs {
  std::string cat;
  std::string shape;
};

void cmd_jc_enumerate(Out& out, JcArgs const& a, std::string const& exp) {
  auto c = load_perm(a.cat);
  GObj const shape = load_shape(a.shape);
  JC const j = enumerate_jc(c, shape);
  if (exp == "dot") {
    out.text.str("");
    out.text << jc_to_dot(*c, j);
    out.j["dot"] = jc_to_dot(*c, j);
  }
  Json systems = Json::array();
  for (auto const& s : j.objects) {
    systems.push_back(Json::parse(system_to_json(*c, s)));
    if (exp != "dot") {
      out.text << system_label(*c, s) << "\n";
    }
    if (auto v = system_violation(*c, s)) {
      out.check(false, *v);
    }
  }
  for (auto const& ar : j.arrows) {
    if (auto v = mor_violation(*c, j.objects[ar.src], j.objects[ar.tgt],
                               ar.mor)) {
      out.check(false, *v);
    }
  }
  out.j["category"] = c->name;
  out.j["shape"] = shape.str();
  out.j["objects"] = j.objects.size();
  out.j["morphisms"] = j.arrows.size();
  out.j["systems"] = systems;
  if (exp != "dot") {
    out.text << j.objects.size() << " systems, " << j.arrows.size()
             << " morphisms\n";
  }
}

void cmd_jc_roundtrip(Out& out, JcArgs const& a, int max_total) {
  auto c = load_perm(a.cat);
  GObj const shape = load_shape(a.shape);
  auto rep = extn_roundtrip(c, shape, max_total);
  out.j["category"] = c->name;
  out.j["shape"] = shape.str();
  out.j["objects"] = rep.objects;
  out.j["morphisms"] = rep.morphisms;
  out.j["generators"] = rep.generators;
  out.j["transports"] = rep.transports;
  out.text << "bijection size " << rep.objects << " on objects, "
           << rep.morphisms << " on morphisms; " << rep.generators
           << " generators, " << rep.transports << " transports\n";
  for (auto const& f : rep.failures) {
    out.check(false, f);
  }
}

void cmd_jc_action(Out& out, JcArgs const& a, std::string const& gmor,
                   int upto) {
  auto c = load_perm(a.cat);
  if (upto > 0) {
    GObj const shape = load_shape(a.shape);
    JC const j = enumerate_jc(c, shape);
    auto rep = check_jc_functoriality(upto, {{c, &j}});
    out.j["pairs"] = rep.pairs;
    out.j["permutationPairs"] = rep.permutation_pairs;
    out.j["transports"] = rep.transports;
    out.text << rep.pairs << " composable pairs, " << rep.permutation_pairs
             << " of permutations, " << rep.transports << " transports\n";
    for (auto const& f : rep.failures) {
      out.check(false, f);
    }
    return;
  }
  if (gmor.empty()) {
    throw InputError("jc action needs --gmor or --functoriality");
  }
  GMor g;
  try {
    g = gmor_from_json(gmor.front() == '{' ? gmor : slurp(gmor));
  } catch (InputError const&) {
    throw;
  } catch (Error const& e) {
    throw InputError(e.what());
  }
  JC const j = enumerate_jc(c, g.src);
  Reindex const r = jc_reindex(g);
  Json list = Json::array();
  for (auto const& x : j.objects) {
    System const y = apply(*c, r, x);
    out.text << system_label(*c, x) << " |-> " << system_label(*c, y) << "\n";
    list.push_back({{"from", Json::parse(system_to_json(*c, x))},
                    {"to", Json::parse(system_to_json(*c, y))}});
    if (auto v = system_violation(*c, y)) {
      out.check(false, *v);
    }
  }
  out.j["morphism"] = g.str();
  out.j["action"] = list;
}

void cmd_jc_pair(Out& out, std::string const& cat, std::string const& times,
                 std::string const& sx, std::string const& sy) {
  auto c = load_perm(cat);
  std::vector<std::vector<int>> table;
  try {
    table = Json::parse(times).get<std::vector<std::vector<int>>>();
  } catch (Json::exception const& e) {
    throw InputError(std::string("--times: ") + e.what());
  }
  PkObject f;
  try {
    f = discrete_bilinear(c, table);
  } catch (Error const& e) {
    throw InputError(e.what());
  }
  if (auto rep = validate_pk(f); !rep.ok()) {
    throw InputError("--times is not a bilinear map: " +
                     rep.violations.front().law);
  }
  JC const jx = enumerate_jc(c, load_shape(sx));
  JC const jy = enumerate_jc(c, load_shape(sy));
  std::size_t n = 0;
  Json list = Json::array();
  for (auto const& x : jx.objects) {
    for (auto const& y : jy.objects) {
      System const p = pair_systems(f, x, y);
      ++n;
      out.text << system_label(*c, x) << " . " << system_label(*c, y)
               << " = " << system_label(*c, p) << "\n";
      list.push_back(Json::parse(system_to_json(*c, p)));
      if (auto v = system_violation(*c, p)) {
        out.check(false, *v);
      }
    }
  }
  out.j["pairs"] = n;
  out.j["systems"] = list;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mc: multicategories, permutative categories and systems"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::uint64_t seed = 1;
  app.add_flag("--json", json, "machine-readable report");
  app.add_option("--seed", seed, "seed for randomized runs");

  std::string a;
  std::string b;
  std::string c;
  std::size_t arity = 4;
  std::size_t slot = 4;
  bool full = false;
  auto* axioms = app.add_subcommand("check-axioms", "operad axioms");
  axioms->add_option("multicat", a, "E, E^m, *, discrete:x,y, "
                                    "indiscrete:x,y or U:<category>")
      ->required();
  axioms->add_option("--arity", arity)->check(CLI::Range(2, 8));
  axioms->add_option("--slot", slot)->check(CLI::Range(1, 8));
  axioms->add_flag("--full", full, "check every law, even when thin");

  std::string graph;
  std::string target;
  std::string perm;
  std::size_t length = 3;
  std::size_t height = 3;
  std::size_t small = 3;
  auto* free = app.add_subcommand("free", "free constructions");
  free->add_option("--graph", graph, "multigraph json");
  free->add_option("--target", target);
  free->add_option("--perm", perm, "base multicategory of F");
  free->add_option("--length", length)->check(CLI::Range(1, 5));
  free->add_option("--height", height)->check(CLI::Range(1, 4));
  free->add_option("--arity", small)->check(CLI::Range(2, 4));

  std::size_t check_arity = 0;
  auto* hom = app.add_subcommand("hom", "Hom(M, N)");
  hom->add_option("M", a)->required();
  hom->add_option("N", b)->required();
  hom->add_option("--arity", small)->check(CLI::Range(2, 4));
  hom->add_option("--check", check_arity, "axiom budget, 0 to skip")
      ->check(CLI::Range(0, 3));

  bool curry = false;
  auto* bilin = app.add_subcommand("bilin", "Bilin(M, N; P)");
  bilin->add_option("M", a)->required();
  bilin->add_option("N", b)->required();
  bilin->add_option("P", c)->required();
  bilin->add_option("--arity", small)->check(CLI::Range(2, 4));
  bilin->add_flag("--curry", curry, "check both currying bijections");

  std::size_t trials = 20;
  auto* natural =
      app.add_subcommand("natural", "naturality from generators, sampled");
  natural->add_option("M", a)->required();
  natural->add_option("N", b)->required();
  natural->add_option("--trials", trials)->check(CLI::Range(1, 100000));
  natural->add_option("--arity", small)->check(CLI::Range(2, 4));

  auto* permc = app.add_subcommand("perm", "permutative categories");
  permc->require_subcommand(1);
  auto* pv = permc->add_subcommand("validate", "permutative laws");
  pv->add_option("category", a)->required();
  auto* pu = permc->add_subcommand("u", "axioms of the underlying U C");
  pu->add_option("category", a)->required();
  pu->add_option("--arity", arity)->check(CLI::Range(2, 6));
  bool compare = false;
  auto* pm = permc->add_subcommand("maclane", "E(Sigma_3) against E(Z/6)");
  pm->add_flag("--compare", compare);

  auto* estar = app.add_subcommand("estar", "the presented object E*<shape>");
  estar->add_option("shape", a)->required();
  estar->add_option("--arity", small)->check(CLI::Range(1, 4));

  std::size_t max_m = 3;
  auto* eax = app.add_subcommand("e-axioms", "bilinear maps out of (E, E)");
  eax->add_option("target", a)->required();
  eax->add_option("--module-max", max_m)->check(CLI::Range(0, 3));

  auto* gstar = app.add_subcommand("gstar", "the index category");
  gstar->require_subcommand(1);
  auto* gh = gstar->add_subcommand("hom", "list a hom set");
  gh->add_option("src", a)->required();
  gh->add_option("tgt", b)->required();
  int total = 3;
  auto* gc = gstar->add_subcommand("check", "associativity and concatenation");
  gc->add_option("--total", total)->check(CLI::Range(0, 4));

  JcArgs ja;
  std::string exp;
  int max_total = 4;
  std::string gmor;
  int upto = 0;
  std::string times;
  auto* jc = app.add_subcommand("jc", "systems");
  jc->require_subcommand(1);
  auto* je = jc->add_subcommand("enumerate", "all systems over a shape");
  je->add_option("--cat", ja.cat)->required();
  je->add_option("--shape", ja.shape)->required();
  je->add_option("--export", exp)->check(CLI::IsMember({"dot"}));
  auto* jr = jc->add_subcommand("roundtrip", "against systems in U C");
  jr->add_option("--cat", ja.cat)->required();
  jr->add_option("--shape", ja.shape)->required();
  jr->add_option("--max-total", max_total)->check(CLI::Range(1, 4));
  auto* jac = jc->add_subcommand("action", "reindexing along a morphism");
  jac->add_option("--cat", ja.cat)->required();
  jac->add_option("--gmor", gmor, "morphism json or file");
  jac->add_option("--shape", ja.shape, "shape for --functoriality");
  jac->add_option("--functoriality", upto, "check composites up to total")
      ->check(CLI::Range(1, 4));
  std::string sx;
  std::string sy;
  auto* jp = jc->add_subcommand("pair", "pairing along a product table");
  jp->add_option("--cat", ja.cat)->required();
  jp->add_option("--times", times, "json table, e.g. [[0,0],[0,1]]")
      ->required();
  jp->add_option("--shape-x", sx)->required();
  jp->add_option("--shape-y", sy)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (char const* t = std::getenv("MC_THREADS")) {
    try {
      std::size_t const n = parse_count(t);
      if (n == 0) {
        throw InputError("MC_THREADS must be positive");
      }
      omp_set_num_threads(static_cast<int>(n));
    } catch (Error const& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  }

  Out out;
  std::string command;
  try {
    if (axioms->parsed()) {
      command = "check-axioms";
      cmd_check_axioms(out, a, arity, slot, full);
    } else if (free->parsed()) {
      command = "free";
      cmd_free(out, graph, target, perm, length, height, small);
    } else if (hom->parsed()) {
      command = "hom";
      cmd_hom(out, a, b, small, check_arity);
    } else if (bilin->parsed()) {
      command = "bilin";
      cmd_bilin(out, a, b, c, small, curry);
    } else if (natural->parsed()) {
      command = "natural";
      cmd_natural(out, a, b, trials, seed, small);
    } else if (pv->parsed()) {
      command = "perm validate";
      cmd_perm_validate(out, a);
    } else if (pu->parsed()) {
      command = "perm u";
      cmd_perm_u(out, a, arity);
    } else if (pm->parsed()) {
      command = "perm maclane";
      cmd_maclane(out, compare);
    } else if (estar->parsed()) {
      command = "estar";
      cmd_estar(out, a, small);
    } else if (eax->parsed()) {
      command = "e-axioms";
      cmd_e_axioms(out, a, max_m);
    } else if (gh->parsed()) {
      command = "gstar hom";
      cmd_gstar_hom(out, a, b);
    } else if (gc->parsed()) {
      command = "gstar check";
      cmd_gstar_check(out, total);
    } else if (je->parsed()) {
      command = "jc enumerate";
      cmd_jc_enumerate(out, ja, exp);
    } else if (jr->parsed()) {
      command = "jc roundtrip";
      cmd_jc_roundtrip(out, ja, max_total);
    } else if (jac->parsed()) {
      command = "jc action";
      cmd_jc_action(out, ja, gmor, upto);
    } else if (jp->parsed()) {
      command = "jc pair";
      cmd_jc_pair(out, ja.cat, times, sx, sy);
    }
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (BudgetError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (Error const& e) {
    // malformed definitions surface as Error from the loaders
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (json) {
    Json doc;
    doc["schemaVersion"] = 1;
    doc["command"] = command;
    doc["seed"] = seed;
    doc["ok"] = out.ok;
    for (auto it = out.j.begin(); it != out.j.end(); ++it) {
      doc[it.key()] = it.value();
    }
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << out.text.str();
    if (command != "jc enumerate" || exp != "dot") {
      std::cout << (out.ok ? "ok" : "FAILED") << "\n";
    }
  }
  return out.ok ? 0 : 1;
}
