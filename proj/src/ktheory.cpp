#include "mc/ktheory.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mc/homtensor.hpp"

namespace mc {

namespace {

struct JCPolicy {
  using R = int;
  PermCat const& c;

  int zero() const {
    return c.zero;
  }
  int nobj() const {
    return static_cast<int>(c.size());
  }
  R zero_rho() const {
    return c.ident[c.zero];
  }
  R zero_mor() const {
    return c.ident[c.zero];
  }
  R ident(int x) const {
    return c.ident[x];
  }
  std::vector<R> rho_cands(int xt, int xu, int xs) const {
    return c.hom(c.oplus_obj[xt][xu], xs);
  }
  std::vector<R> unit_cands(int xs) const {
    return {c.ident[xs]};
  }
  bool has_profile(R r, int xt, int xu, int xs) const {
    return r >= 0 && r < static_cast<int>(c.arrows.size()) &&
           c.arrows[r].src == c.oplus_obj[xt][xu] && c.arrows[r].tgt == xs;
  }
  bool unit_ok(R r, int xs) const {
    return r == c.ident[xs];
  }
  R swap(R r, int xt, int xu) const {
    return c.comp(r, c.gamma[xu][xt]);
  }
  bool assoc(R ol, R il, R orr, R ir, int xt, int /*xu*/, int xv) const {
    return c.comp(ol, c.oplus_mor[il][c.ident[xv]]) ==
           c.comp(orr, c.oplus_mor[c.ident[xt]][ir]);
  }
  bool interchange(R a, R b, R cc, R d, R e, R f, int xtv, int xuv, int xtw,
                   int xuw) const {
    int const l = c.comp(a, c.oplus_mor[b][cc]);
    int const mid =
        c.sum_arrows({c.ident[xtv], c.gamma[xuv][xtw], c.ident[xuw]});
    int const r = c.comp(d, c.comp(c.oplus_mor[e][f], mid));
    return l == r;
  }
  std::vector<R> mor_cands(int x, int y) const {
    return c.hom(x, y);
  }
  bool mor_profile(R f, int x, int y) const {
    return f >= 0 && f < static_cast<int>(c.arrows.size()) &&
           c.arrows[f].src == x && c.arrows[f].tgt == y;
  }
  bool natural(R fs, R rx, R ft, R fu, R ry) const {
    return c.comp(fs, rx) == c.comp(ry, c.oplus_mor[ft][fu]);
  }
  R compose(R g, R f) const {
    return c.comp(g, f);
  }
  std::string show(R r) const {
    return c.arrows.at(r).name;
  }
};

struct JHatPolicy {
  using R = Mor;
  BasedMulticat const& m;

  int zero() const {
    return m.base;
  }
  int nobj() const {
    return static_cast<int>(m.carrier.size());
  }
  R zero_rho() const {
    return m.base_mor(2);
  }
  R zero_mor() const {
    return m.base_mor(1);
  }
  R ident(int x) const {
    return m.carrier.ident(x);
  }
  Mor gamma(Mor const& f, std::vector<Mor> const& gs) const {
    return m.carrier.gamma(f, gs);
  }
  std::vector<R> rho_cands(int xt, int xu, int xs) const {
    return m.carrier.hom(Profile{{xt, xu}, xs});
  }
  std::vector<R> unit_cands(int xs) const {
    std::vector<R> out;
    for (auto const& r : rho_cands(m.base, xs, xs)) {
      if (unit_ok(r, xs)) {
        out.push_back(r);
      }
    }
    return out;
  }
  bool has_profile(R const& r, int xt, int xu, int xs) const {
    return r.profile == Profile{{xt, xu}, xs} && m.carrier.contains(r);
  }
  bool unit_ok(R const& r, int xs) const {
    return gamma(r, {m.base_mor(0), ident(xs)}) == ident(xs);
  }
  R swap(R const& r, int, int) const {
    return m.carrier.act(r, Perm({1, 0}));
  }
  bool assoc(R const& ol, R const& il, R const& orr, R const& ir, int xt,
             int /*xu*/, int xv) const {
    return gamma(ol, {il, ident(xv)}) == gamma(orr, {ident(xt), ir});
  }
  bool interchange(R const& a, R const& b, R const& cc, R const& d,
                   R const& e, R const& f, int, int, int, int) const {
    return gamma(a, {b, cc}) ==
           m.carrier.act(gamma(d, {e, f}), Perm({0, 2, 1, 3}));
  }
  std::vector<R> mor_cands(int x, int y) const {
    return m.carrier.hom(Profile{{x}, y});
  }
  bool mor_profile(R const& f, int x, int y) const {
    return f.profile == Profile{{x}, y} && m.carrier.contains(f);
  }
  bool natural(R const& fs, R const& rx, R const& ft, R const& fu,
               R const& ry) const {
    return gamma(fs, {rx}) == gamma(ry, {ft, fu});
  }
  R compose(R const& g, R const& f) const {
    return gamma(g, {f});
  }
  std::string show(R const& r) const {
    return format_mor(m.carrier, r);
  }
};

template <typename Fn>
void run(Exec exec, long count, Fn&& fn) {
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      fn(i);
    }
  } else {
    for (long i = 0; i < count; ++i) {
      fn(i);
    }
  }
}

// Submasks of s in increasing order.
std::vector<Subset> submasks(Subset s) {
  std::vector<Subset> out;
  Subset t = 0;
  while (true) {
    out.push_back(t);
    if (t == s) {
      break;
    }
    t = (t - s) & s;
  }
  return out;
}

Subset lowest(Subset s) {
  return s & (~s + 1);
}

template <class P>
struct Checks {
  P const& p;
  EStar const& es;
  BasicSystem<typename P::R> const& s;

  int x(int code) const {
    return s.values[code];
  }
  typename P::R const& r(int code, int i, Subset t) const {
    return s.rho[es.entry(code, i, t)];
  }
  bool assoc(int code, int i, Subset t, Subset u, Subset v) const {
    return p.assoc(r(code, i, t | u), r(es.with(code, i, t | u), i, t),
                   r(code, i, t), r(es.with(code, i, u | v), i, u),
                   x(es.with(code, i, t)), x(es.with(code, i, u)),
                   x(es.with(code, i, v)));
  }
  bool interchange(int code, int i, int j, Subset t, Subset u, Subset v,
                   Subset w) const {
    int const ct = es.with(code, i, t);
    int const cu = es.with(code, i, u);
    return p.interchange(r(code, j, v), r(es.with(code, j, v), i, t),
                         r(es.with(code, j, w), i, t), r(code, i, t),
                         r(ct, j, v), r(cu, j, v), x(es.with(ct, j, v)),
                         x(es.with(cu, j, v)), x(es.with(ct, j, w)),
                         x(es.with(cu, j, w)));
  }
};

template <class P>
std::optional<std::string> violation(P const& p,
                                     BasicSystem<typename P::R> const& s) {
  if (s.shape.is_base()) {
    if (!s.values.empty() || !s.rho.empty()) {
      return std::string("system over the basepoint carries data");
    }
    return std::nullopt;
  }
  EStar const es(s.shape);
  if (static_cast<int>(s.values.size()) != es.codes() ||
      static_cast<int>(s.rho.size()) != es.entries()) {
    return std::string("system has the wrong size");
  }
  for (int c = 0; c < es.codes(); ++c) {
    if (s.values[c] < 0 || s.values[c] >= p.nobj()) {
      return "value at " + es.label(c) + " out of range";
    }
    if (es.degenerate(c) && s.values[c] != p.zero()) {
      return "(1) fails at " + es.label(c);
    }
  }
  Checks<P> const ck{p, es, s};
  auto where = [&](int c, int i, Subset t) {
    return es.label(c) + " slot " + std::to_string(i + 1) + " part " +
           subset_label(t);
  };
  for (int e = 0; e < es.entries(); ++e) {
    auto const& en = es.entry_at(e);
    Subset const u = es.part(en.code, en.slot) & ~en.part;
    if (es.degenerate(en.code)) {
      if (!(s.rho[e] == p.zero_rho())) {
        return "(2) fails at degenerate " + where(en.code, en.slot, en.part);
      }
      continue;
    }
    int const xt = ck.x(es.with(en.code, en.slot, en.part));
    int const xu = ck.x(es.with(en.code, en.slot, u));
    int const xs = ck.x(en.code);
    if (!p.has_profile(s.rho[e], xt, xu, xs)) {
      return "rho at " + where(en.code, en.slot, en.part) +
             " has the wrong profile";
    }
    if (en.part == 0) {
      if (!p.unit_ok(s.rho[e], xs)) {
        return "(2) fails at " + where(en.code, en.slot, en.part);
      }
      if (!(s.rho[e] == ck.r(en.code, 0, 0))) {
        return "unit morphisms differ across slots at " + es.label(en.code);
      }
    }
  }
  for (int e = 0; e < es.entries(); ++e) {
    auto const& en = es.entry_at(e);
    if (es.degenerate(en.code)) {
      continue;
    }
    Subset const u = es.part(en.code, en.slot) & ~en.part;
    int const xt = ck.x(es.with(en.code, en.slot, en.part));
    int const xu = ck.x(es.with(en.code, en.slot, u));
    if (!(ck.r(en.code, en.slot, u) == p.swap(s.rho[e], xt, xu))) {
      return "(3) fails at " + where(en.code, en.slot, en.part);
    }
  }
  for (int c : es.objects()) {
    for (int i = 0; i < es.slots(); ++i) {
      Subset const si = es.part(c, i);
      for (Subset t : submasks(si)) {
        for (Subset u : submasks(si & ~t)) {
          Subset const v = si & ~t & ~u;
          if (!ck.assoc(c, i, t, u, v)) {
            return "(4) fails at " + es.label(c) + " slot " +
                   std::to_string(i + 1) + " parts " + subset_label(t) + "," +
                   subset_label(u) + "," + subset_label(v);
          }
        }
      }
      for (int j = 0; j < es.slots(); ++j) {
        if (j == i) {
          continue;
        }
        Subset const sj = es.part(c, j);
        for (Subset t : submasks(si)) {
          for (Subset v : submasks(sj)) {
            if (!ck.interchange(c, i, j, t, si & ~t, v, sj & ~v)) {
              return "(5) fails at " + es.label(c) + " slots " +
                     std::to_string(i + 1) + "," + std::to_string(j + 1) +
                     " parts " + subset_label(t) + "," + subset_label(v);
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

template <class P>
std::optional<std::string> mor_violation_impl(
    P const& p, BasicSystem<typename P::R> const& x,
    BasicSystem<typename P::R> const& y,
    BasicSystemMor<typename P::R> const& f) {
  if (x.shape != y.shape) {
    return std::string("systems over different shapes");
  }
  if (x.shape.is_base()) {
    return f.comp.empty() ? std::nullopt
                          : std::optional<std::string>("data over *");
  }
  EStar const es(x.shape);
  if (static_cast<int>(f.comp.size()) != es.codes()) {
    return std::string("morphism has the wrong size");
  }
  for (int c = 0; c < es.codes(); ++c) {
    if (es.degenerate(c)) {
      if (!(f.comp[c] == p.zero_mor())) {
        return "component at degenerate " + es.label(c) + " is not zero";
      }
    } else if (!p.mor_profile(f.comp[c], x.values[c], y.values[c])) {
      return "component at " + es.label(c) + " has the wrong ends";
    }
  }
  for (int e = 0; e < es.entries(); ++e) {
    auto const& en = es.entry_at(e);
    if (es.degenerate(en.code)) {
      continue;
    }
    Subset const u = es.part(en.code, en.slot) & ~en.part;
    if (!p.natural(f.comp[en.code], x.rho[e],
                   f.comp[es.with(en.code, en.slot, en.part)],
                   f.comp[es.with(en.code, en.slot, u)], y.rho[e])) {
      return "not natural at " + es.label(en.code) + " slot " +
             std::to_string(en.slot + 1) + " part " + subset_label(en.part);
    }
  }
  return std::nullopt;
}

// Instances of (4) and (5) at one code with the choice after which all of
// their entries are fixed.
struct Instance {
  int ready = 0;
  bool assoc = true;
  int i = 0;
  int j = 0;
  Subset a = 0;
  Subset b = 0;
  Subset c = 0;
  Subset d = 0;
};

struct Choice {
  int slot = 0;
  Subset part = 0;  // 0 for the unit choice
};

struct CodePlan {
  int code = 0;
  std::vector<Choice> choices;
  std::vector<std::vector<Instance>> at;  // instances completed by choice k
};

int choice_of(EStar const& es, CodePlan const& plan, int code, int i,
              Subset t) {
  if (code != plan.code) {
    return -1;
  }
  Subset const si = es.part(code, i);
  Subset key = 0;
  if (t != 0 && t != si) {
    key = (t & lowest(si)) ? t : si & ~t;
  }
  for (std::size_t k = 0; k < plan.choices.size(); ++k) {
    if (plan.choices[k].slot == i && plan.choices[k].part == key) {
      return static_cast<int>(k);
    }
  }
  throw Error("system plan: missing choice");
}

CodePlan make_plan(EStar const& es, int code) {
  CodePlan plan;
  plan.code = code;
  for (int i = 0; i < es.slots(); ++i) {
    plan.choices.push_back({i, 0});
  }
  for (int i = 0; i < es.slots(); ++i) {
    Subset const si = es.part(code, i);
    for (Subset t : submasks(si)) {
      if (t != 0 && t != si && (t & lowest(si))) {
        plan.choices.push_back({i, t});
      }
    }
  }
  plan.at.resize(plan.choices.size());
  auto ready = [&](std::initializer_list<std::array<int, 3>> entries) {
    int r = -1;
    for (auto const& [c, i, t] : entries) {
      r = std::max(r, choice_of(es, plan, c, i, static_cast<Subset>(t)));
    }
    return r;
  };
  for (int i = 0; i < es.slots(); ++i) {
    Subset const si = es.part(code, i);
    for (Subset t : submasks(si)) {
      for (Subset u : submasks(si & ~t)) {
        Subset const v = si & ~t & ~u;
        int const tu = es.with(code, i, t | u);
        int const uv = es.with(code, i, u | v);
        int const r = ready({{code, i, static_cast<int>(t | u)},
                             {tu, i, static_cast<int>(t)},
                             {code, i, static_cast<int>(t)},
                             {uv, i, static_cast<int>(u)}});
        plan.at[r].push_back({r, true, i, 0, t, u, v, 0});
      }
    }
    for (int j = 0; j < es.slots(); ++j) {
      if (j == i) {
        continue;
      }
      Subset const sj = es.part(code, j);
      for (Subset t : submasks(si)) {
        for (Subset v : submasks(sj)) {
          Subset const u = si & ~t;
          Subset const w = sj & ~v;
          int const ct = es.with(code, i, t);
          int const cu = es.with(code, i, u);
          int const r = ready({{code, j, static_cast<int>(v)},
                               {es.with(code, j, v), i, static_cast<int>(t)},
                               {es.with(code, j, w), i, static_cast<int>(t)},
                               {code, i, static_cast<int>(t)},
                               {ct, j, static_cast<int>(v)},
                               {cu, j, static_cast<int>(v)}});
          plan.at[r].push_back({r, false, i, j, t, u, v, w});
        }
      }
    }
  }
  return plan;
}

template <class P>
struct SystemSearch {
  using R = typename P::R;
  P const& p;
  EStar const& es;
  std::vector<CodePlan> const& plans;
  BasicSystem<R> sys;
  std::vector<BasicSystem<R>> out;

  bool holds(CodePlan const& plan, int k) const {
    Checks<P> const ck{p, es, sys};
    for (auto const& in : plan.at[k]) {
      bool const ok = in.assoc
                          ? ck.assoc(plan.code, in.i, in.a, in.b, in.c)
                          : ck.interchange(plan.code, in.i, in.j, in.a, in.b,
                                           in.c, in.d);
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  void code_step(std::size_t n) {
    if (n == plans.size()) {
      out.push_back(sys);
      return;
    }
    for (int v = 0; v < p.nobj(); ++v) {
      value_step(n, v);
    }
  }

  void value_step(std::size_t n, int v) {
    sys.values[plans[n].code] = v;
    choice_step(n, 0);
  }

  void choice_step(std::size_t n, std::size_t k) {
    CodePlan const& plan = plans[n];
    if (k == plan.choices.size()) {
      code_step(n + 1);
      return;
    }
    int const code = plan.code;
    Choice const& ch = plan.choices[k];
    Subset const si = es.part(code, ch.slot);
    Subset const u = si & ~ch.part;
    int const xt = sys.values[es.with(code, ch.slot, ch.part)];
    int const xu = sys.values[es.with(code, ch.slot, u)];
    int const xs = sys.values[code];
    std::vector<R> cands;
    if (ch.part == 0) {
      cands = p.unit_cands(xs);
      if (ch.slot > 0) {
        R const& first = sys.rho[es.entry(code, 0, 0)];
        bool const ok =
            std::find(cands.begin(), cands.end(), first) != cands.end();
        cands.clear();
        if (ok) {
          cands.push_back(first);
        }
      }
    } else {
      cands = p.rho_cands(xt, xu, xs);
    }
    int const e = es.entry(code, ch.slot, ch.part);
    int const e2 = es.entry(code, ch.slot, u);
    for (R const& r : cands) {
      sys.rho[e] = r;
      sys.rho[e2] = p.swap(r, xt, xu);
      if (holds(plan, static_cast<int>(k))) {
        choice_step(n, k + 1);
      }
    }
  }
};

template <class P>
std::vector<BasicSystem<typename P::R>> enumerate_systems(P const& p,
                                                          GObj const& shape,
                                                          Exec exec) {
  using R = typename P::R;
  if (shape.is_base()) {
    return {BasicSystem<R>{shape, {}, {}}};
  }
  EStar const es(shape);
  std::vector<CodePlan> plans;
  for (int c : es.objects()) {
    plans.push_back(make_plan(es, c));
  }
  BasicSystem<R> init{shape, std::vector<int>(es.codes(), p.zero()),
                      std::vector<R>(es.entries(), p.zero_rho())};
  // split on the value of the first code
  std::vector<std::vector<BasicSystem<R>>> parts(p.nobj());
  run(exec, p.nobj(), [&](long v) {
    SystemSearch<P> s{p, es, plans, init, {}};
    s.value_step(0, static_cast<int>(v));
    parts[v] = std::move(s.out);
  });
  std::vector<BasicSystem<R>> out;
  for (auto& v : parts) {
    for (auto& s : v) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

template <class P>
void morphisms_between(P const& p, EStar const& es,
                       BasicSystem<typename P::R> const& x,
                       BasicSystem<typename P::R> const& y,
                       std::vector<BasicSystemMor<typename P::R>>& out) {
  using R = typename P::R;
  auto const& order = es.objects();
  std::vector<R> comp(es.codes(), p.zero_mor());
  std::function<void(std::size_t)> step = [&](std::size_t n) {
    if (n == order.size()) {
      out.push_back({comp});
      return;
    }
    int const c = order[n];
    for (R const& f : p.mor_cands(x.values[c], y.values[c])) {
      comp[c] = f;
      bool ok = true;
      for (int i = 0; ok && i < es.slots(); ++i) {
        Subset const si = es.part(c, i);
        for (Subset t : submasks(si)) {
          int const e = es.entry(c, i, t);
          if (!p.natural(f, x.rho[e], comp[es.with(c, i, t)],
                         comp[es.with(c, i, si & ~t)], y.rho[e])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        step(n + 1);
      }
    }
  };
  step(0);
}

template <class P>
SystemCat<typename P::R> system_category(P const& p, GObj const& shape,
                                         Exec exec) {
  using R = typename P::R;
  SystemCat<R> cat;
  cat.shape = shape;
  cat.objects = enumerate_systems(p, shape, exec);
  long const n = static_cast<long>(cat.objects.size());
  std::vector<std::vector<typename SystemCat<R>::Arrow>> rows(n);
  if (shape.is_base()) {
    rows[0].push_back({0, 0, {}});
  } else {
    EStar const es(shape);
    run(exec, n, [&](long a) {
      for (long b = 0; b < n; ++b) {
        std::vector<BasicSystemMor<R>> ms;
        morphisms_between(p, es, cat.objects[a], cat.objects[b], ms);
        for (auto& m : ms) {
          rows[a].push_back(
              {static_cast<int>(a), static_cast<int>(b), std::move(m)});
        }
      }
    });
  }
  for (auto& r : rows) {
    for (auto& a : r) {
      cat.arrows.push_back(std::move(a));
    }
  }
  cat.index();
  // identities
  for (int o = 0; o < static_cast<int>(cat.objects.size()); ++o) {
    BasicSystemMor<R> id;
    if (!shape.is_base()) {
      EStar const es(shape);
      for (int c = 0; c < es.codes(); ++c) {
        id.comp.push_back(es.degenerate(c) ? p.zero_mor()
                                           : p.ident(cat.objects[o].values[c]));
      }
    }
    int const a = cat.find_arrow(o, o, id);
    if (a < 0) {
      throw Error("system category: missing identity");
    }
    cat.ident.push_back(a);
  }
  return cat;
}

template <class P>
int compose_impl(P const& p, SystemCat<typename P::R> const& j, int g, int f) {
  auto const& ag = j.arrows.at(g);
  auto const& af = j.arrows.at(f);
  if (af.tgt != ag.src) {
    return -1;
  }
  BasicSystemMor<typename P::R> h;
  for (std::size_t c = 0; c < af.mor.comp.size(); ++c) {
    h.comp.push_back(p.compose(ag.mor.comp[c], af.mor.comp[c]));
  }
  return j.find_arrow(af.src, ag.tgt, h);
}

}  // namespace

template <class R>
int SystemCat<R>::find_object(BasicSystem<R> const& s) const {
  auto it = obj_index_.find(s);
  return it == obj_index_.end() ? -1 : it->second;
}

template <class R>
int SystemCat<R>::find_arrow(int src, int tgt,
                             BasicSystemMor<R> const& f) const {
  auto it = arr_index_.find({src, tgt, f.comp});
  return it == arr_index_.end() ? -1 : it->second;
}

template <class R>
void SystemCat<R>::index() {
  obj_index_.clear();
  arr_index_.clear();
  for (std::size_t o = 0; o < objects.size(); ++o) {
    obj_index_.emplace(objects[o], static_cast<int>(o));
  }
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    arr_index_.emplace(
        std::make_tuple(arrows[a].src, arrows[a].tgt, arrows[a].mor.comp),
        static_cast<int>(a));
  }
}

template struct SystemCat<int>;
template struct SystemCat<Mor>;

int compose_arrows(PermCat const& c, JC const& j, int g, int f) {
  return compose_impl(JCPolicy{c}, j, g, f);
}

int compose_arrows(BasedMulticat const& m, JHat const& j, int g, int f) {
  return compose_impl(JHatPolicy{m}, j, g, f);
}

std::optional<std::string> system_violation(PermCat const& c,
                                            System const& s) {
  return violation(JCPolicy{c}, s);
}

std::optional<std::string> msystem_violation(BasedMulticat const& m,
                                             MSystem const& s) {
  return violation(JHatPolicy{m}, s);
}

std::optional<std::string> mor_violation(PermCat const& c, System const& x,
                                         System const& y,
                                         SystemMor const& f) {
  return mor_violation_impl(JCPolicy{c}, x, y, f);
}

std::optional<std::string> mmor_violation(BasedMulticat const& m,
                                          MSystem const& x, MSystem const& y,
                                          MSystemMor const& f) {
  return mor_violation_impl(JHatPolicy{m}, x, y, f);
}

JC enumerate_jc(PermCatPtr const& c, GObj const& shape, Exec exec) {
  return system_category(JCPolicy{*c}, shape, exec);
}

JHat jhat(BasedMulticat const& m, GObj const& shape, Exec exec) {
  return system_category(JHatPolicy{m}, shape, exec);
}

// reindexing

namespace {

Reindex zero_reindex(GObj const& src, GObj const& tgt) {
  EStar const t(tgt);
  return {src, tgt, std::vector<int>(t.codes(), -1),
          std::vector<int>(t.entries(), -1)};
}

// src and tgt have the same layout, () against (1) included.
Reindex same_layout(GObj const& src, GObj const& tgt) {
  EStar const t(tgt);
  Reindex r{src, tgt, {}, {}};
  for (int c = 0; c < t.codes(); ++c) {
    r.value.push_back(c);
  }
  for (int e = 0; e < t.entries(); ++e) {
    r.rho.push_back(e);
  }
  return r;
}

}  // namespace

Reindex identity_reindex(GObj const& shape) {
  return same_layout(shape, shape);
}

Reindex jc_generator_reindex(GMor const& g) {
  if (g.null || g.src.is_base() || g.tgt.is_base()) {
    return zero_reindex(g.src, g.tgt);
  }
  EStar const src(g.src);
  EStar const tgt(g.tgt);
  std::size_t const k = g.src.length();
  Reindex r{g.src, g.tgt, {}, {}};
  if (is_stabilization(g)) {
    if (k == 0) {
      return same_layout(g.src, g.tgt);
    }
    for (int c = 0; c < tgt.codes(); ++c) {
      auto t = tgt.tuple(c);
      Subset const last = t.back();
      t.pop_back();
      r.value.push_back(last ? src.code(t) : -1);
    }
    for (int e = 0; e < tgt.entries(); ++e) {
      auto const& en = tgt.entry_at(e);
      auto t = tgt.tuple(en.code);
      Subset const last = t.back();
      t.pop_back();
      if (!last) {
        r.rho.push_back(-1);
        continue;
      }
      int const sc = src.code(t);
      if (en.slot < static_cast<int>(k)) {
        r.rho.push_back(src.entry(sc, en.slot, en.part));
      } else {
        r.rho.push_back(src.entry(sc, 0, en.part ? src.part(sc, 0) : 0));
      }
    }
    return r;
  }
  if (k == 0) {
    return same_layout(g.src, g.tgt);
  }
  bool const perm = is_permutation(g);
  if (!perm && !is_fmap(g)) {
    throw Error("not a generator: " + g.str());
  }
  std::vector<int> qinv(k);
  for (std::size_t i = 0; i < k; ++i) {
    qinv[g.q[i]] = static_cast<int>(i);
  }
  auto pull = [&](int c) {
    std::vector<Subset> t;
    for (std::size_t i = 0; i < k; ++i) {
      t.push_back(perm ? tgt.part(c, g.q[i])
                       : g.alpha[i].preimage(tgt.part(c, static_cast<int>(i))));
    }
    return src.code(t);
  };
  for (int c = 0; c < tgt.codes(); ++c) {
    r.value.push_back(pull(c));
  }
  for (int e = 0; e < tgt.entries(); ++e) {
    auto const& en = tgt.entry_at(e);
    int const sc = pull(en.code);
    if (perm) {
      r.rho.push_back(src.entry(sc, qinv[en.slot], en.part));
    } else {
      r.rho.push_back(
          src.entry(sc, en.slot, g.alpha[en.slot].preimage(en.part)));
    }
  }
  return r;
}

Reindex jc_reindex(GMor const& g) {
  if (g.null || g.src.is_base() || g.tgt.is_base()) {
    return zero_reindex(g.src, g.tgt);
  }
  Reindex r = identity_reindex(g.src);
  for (auto const& p : factor_generators(g)) {
    r = compose(jc_generator_reindex(p), r);
  }
  return r;
}

Reindex estar_reindex(GMor const& g) {
  if (g.null || g.src.is_base() || g.tgt.is_base()) {
    return zero_reindex(g.src, g.tgt);
  }
  EStarMap const map(g);
  EStar const& tes = map.src();
  EStar const& ses = map.tgt();
  Reindex r{g.src, g.tgt, {}, {}};
  for (int c = 0; c < tes.codes(); ++c) {
    r.value.push_back(map.object(c));
  }
  for (int e = 0; e < tes.entries(); ++e) {
    auto const& en = tes.entry_at(e);
    Subset const rest = tes.part(en.code, en.slot) & ~en.part;
    SlotMor const f = map(SlotMor{en.code, en.slot, {en.part, rest}});
    if (f.code < 0) {
      r.rho.push_back(-1);
    } else if (f.slot < 0) {
      r.rho.push_back(
          ses.entry(f.code, 0, f.parts[0] ? ses.part(f.code, 0) : 0));
    } else {
      r.rho.push_back(ses.entry(f.code, f.slot, f.parts[0]));
    }
  }
  return r;
}

Reindex drop_last(GObj const& shape) {
  GObj const big = odot(shape, GObj::of({1}));
  if (shape.is_base()) {
    return zero_reindex(big, shape);
  }
  if (shape.length() == 0) {
    return same_layout(big, shape);
  }
  EStar const src(big);
  EStar const tgt(shape);
  Reindex r{big, shape, {}, {}};
  auto push = [&](int c) {
    auto t = tgt.tuple(c);
    t.push_back(1);
    return src.code(t);
  };
  for (int c = 0; c < tgt.codes(); ++c) {
    r.value.push_back(push(c));
  }
  for (int e = 0; e < tgt.entries(); ++e) {
    auto const& en = tgt.entry_at(e);
    r.rho.push_back(src.entry(push(en.code), en.slot, en.part));
  }
  return r;
}

Reindex compose(Reindex const& r2, Reindex const& r1) {
  if (r2.src != r1.tgt) {
    throw Error("reindex composition: shapes do not match");
  }
  Reindex r{r1.src, r2.tgt, {}, {}};
  for (int v : r2.value) {
    r.value.push_back(v < 0 ? -1 : r1.value[v]);
  }
  for (int x : r2.rho) {
    if (x == -1) {
      r.rho.push_back(-1);
    } else if (x <= -2) {
      int const v = r1.value[-(x + 2)];
      r.rho.push_back(v < 0 ? -1 : -(2 + v));
    } else {
      r.rho.push_back(r1.rho[x]);
    }
  }
  return r;
}

Reindex normalize_jc(Reindex const& r) {
  if (r.src.is_base()) {
    return zero_reindex(r.src, r.tgt);
  }
  EStar const es(r.src);
  Reindex n{r.src, r.tgt, {}, {}};
  for (int v : r.value) {
    n.value.push_back(v < 0 || es.degenerate(v) ? -1 : v);
  }
  for (int x : r.rho) {
    if (x < 0) {
      n.rho.push_back(x);
      continue;
    }
    auto const& en = es.entry_at(x);
    if (es.degenerate(en.code)) {
      n.rho.push_back(-1);
    } else if (en.part == 0 || en.part == es.part(en.code, en.slot)) {
      n.rho.push_back(-(2 + en.code));
    } else {
      n.rho.push_back(x);
    }
  }
  return n;
}

namespace {

template <class P>
BasicSystem<typename P::R> apply_impl(P const& p, Reindex const& r,
                                      BasicSystem<typename P::R> const& s) {
  if (r.src != s.shape) {
    throw Error("reindex applied to a system over " + s.shape.str());
  }
  BasicSystem<typename P::R> out{r.tgt, {}, {}};
  for (int v : r.value) {
    out.values.push_back(v < 0 ? p.zero() : s.values[v]);
  }
  for (int x : r.rho) {
    if (x == -1) {
      out.rho.push_back(p.zero_rho());
    } else if (x <= -2) {
      out.rho.push_back(p.ident(s.values[-(x + 2)]));
    } else {
      out.rho.push_back(s.rho[x]);
    }
  }
  return out;
}

template <class P>
BasicSystemMor<typename P::R> apply_mor_impl(
    P const& p, Reindex const& r, BasicSystemMor<typename P::R> const& f) {
  BasicSystemMor<typename P::R> out;
  for (int v : r.value) {
    out.comp.push_back(v < 0 ? p.zero_mor() : f.comp.at(v));
  }
  return out;
}

}  // namespace

System apply(PermCat const& c, Reindex const& r, System const& s) {
  return apply_impl(JCPolicy{c}, r, s);
}

SystemMor apply_mor(PermCat const& c, Reindex const& r, SystemMor const& f) {
  return apply_mor_impl(JCPolicy{c}, r, f);
}

MSystem apply(BasedMulticat const& m, Reindex const& r, MSystem const& s) {
  for (int x : r.rho) {
    if (x <= -2) {
      throw Error("normalized reindex applied to a multicategory system");
    }
  }
  return apply_impl(JHatPolicy{m}, r, s);
}

MSystemMor apply_mor(BasedMulticat const& m, Reindex const& r,
                     MSystemMor const& f) {
  return apply_mor_impl(JHatPolicy{m}, r, f);
}

// translation

MSystem to_msystem(PermCat const& c, System const& s) {
  MSystem out{s.shape, s.values, {}};
  if (s.shape.is_base()) {
    return out;
  }
  EStar const es(s.shape);
  for (int e = 0; e < es.entries(); ++e) {
    auto const& en = es.entry_at(e);
    Subset const u = es.part(en.code, en.slot) & ~en.part;
    Profile const p{{s.values[es.with(en.code, en.slot, en.part)],
                     s.values[es.with(en.code, en.slot, u)]},
                    s.values[en.code]};
    out.rho.push_back(Mor{p, c.arrows.at(s.rho[e]).name});
  }
  return out;
}

System from_msystem(PermCat const& c, MSystem const& s) {
  System out{s.shape, s.values, {}};
  for (auto const& r : s.rho) {
    out.rho.push_back(c.arrow(r.tag));
  }
  return out;
}

MSystemMor to_msystem_mor(PermCat const& c, System const& x, System const& y,
                          SystemMor const& f) {
  MSystemMor out;
  for (std::size_t k = 0; k < f.comp.size(); ++k) {
    out.comp.push_back(Mor{Profile{{x.values[k]}, y.values[k]},
                           c.arrows.at(f.comp[k]).name});
  }
  return out;
}

SystemMor from_msystem_mor(PermCat const& c, MSystemMor const& f) {
  SystemMor out;
  for (auto const& m : f.comp) {
    out.comp.push_back(c.arrow(m.tag));
  }
  return out;
}

// evaluation

Mor evaluate(BasedMulticat const& m, MSystem const& s, int code, int slot,
             std::vector<Subset> const& parts, bool last_first) {
  EStar const es(s.shape);
  std::size_t const n = parts.size();
  if (es.degenerate(code)) {
    return m.base_mor(n);
  }
  Subset const si = es.part(code, slot);
  Subset all = 0;
  for (Subset t : parts) {
    if (t & all) {
      throw Error("evaluate: parts overlap");
    }
    all |= t;
  }
  if (all != si) {
    throw Error("evaluate: parts do not cover the slot");
  }
  if (n == 1) {
    return m.carrier.ident(s.values[code]);
  }
  if (last_first) {
    Subset const tn = parts.back();
    Subset const rest = si & ~tn;
    std::vector<Subset> const head(parts.begin(), parts.end() - 1);
    Mor const inner =
        evaluate(m, s, es.with(code, slot, rest), slot, head, true);
    std::vector<Mor> const ins{
        inner, m.carrier.ident(s.values[es.with(code, slot, tn)])};
    return m.carrier.gamma(s.rho[es.entry(code, slot, rest)], ins);
  }
  Subset const t1 = parts.front();
  Subset const rest = si & ~t1;
  std::vector<Subset> const tail(parts.begin() + 1, parts.end());
  Mor const inner = evaluate(m, s, es.with(code, slot, rest), slot, tail, false);
  std::vector<Mor> const ins{m.carrier.ident(s.values[es.with(code, slot, t1)]),
                             inner};
  return m.carrier.gamma(s.rho[es.entry(code, slot, t1)], ins);
}

namespace {

// The slice of a system along one slot with the other slot (if any) fixed
// at `other`, as generator images on a fragment of E^d.
std::optional<Multifunctor> slice(BasedMulticat const& m, EStar const& es,
                                  MSystem const& s,
                                  std::shared_ptr<const Fragment> const& frag,
                                  int slot, Subset other) {
  auto code = [&](Subset a) {
    if (es.slots() == 1) {
      return static_cast<int>(a);
    }
    return slot == 0 ? es.code({a, other}) : es.code({other, a});
  };
  std::vector<ObjId> obj;
  for (ObjId a = 0; a < static_cast<ObjId>(frag->m.size()); ++a) {
    obj.push_back(s.values[code(static_cast<Subset>(a))]);
  }
  std::vector<Mor> gens;
  for (int g : frag->gens) {
    Mor const& f = frag->mors[g];
    if (f.arity() == 0) {
      gens.push_back(m.base_mor(0));
    } else if (f.arity() == 2) {
      auto const t = static_cast<Subset>(f.profile.source[0]);
      int const c = code(static_cast<Subset>(f.target()));
      gens.push_back(es.degenerate(c) ? m.base_mor(2)
                                      : s.rho[es.entry(c, slot, t)]);
    } else {
      throw Error("unexpected generator of E^m");
    }
  }
  return extend(frag, m.carrier, obj, gens);
}

}  // namespace

EvalReport check_evaluator(BasedMulticat const& m, JHat const& j, Budget b) {
  EvalReport rep;
  if (j.shape.is_base()) {
    rep.systems = j.objects.size();
    return rep;
  }
  EStar const es(j.shape);
  if (es.slots() > 2) {
    throw Error("evaluator check needs at most two slots");
  }
  std::vector<BasedMulticat> powers;
  std::vector<std::shared_ptr<const Fragment>> frags;
  for (int d : es.dims()) {
    powers.push_back(E_power(d));
    frags.push_back(make_fragment(powers.back().carrier, b));
  }
  for (std::size_t n = 0; n < j.objects.size(); ++n) {
    MSystem const& s = j.objects[n];
    ++rep.systems;
    std::string const who = "system " + std::to_string(n);
    // slices[slot][other]
    std::vector<std::vector<Multifunctor>> slices(es.slots());
    for (int slot = 0; slot < es.slots(); ++slot) {
      int const other = es.slots() == 1 ? 0 : 1 - slot;
      Subset const range = es.slots() == 1 ? 1 : (1U << es.dims()[other]);
      for (Subset o = 0; o < range; ++o) {
        if (es.slots() == 2 && o == 0) {
          slices[slot].push_back(constant_base(frags[slot], m));
          continue;
        }
        auto f = slice(m, es, s, frags[slot], slot, o);
        if (!f) {
          rep.failures.push_back(who + ": slice is not a multifunctor");
          break;
        }
        slices[slot].push_back(*f);
        for (std::size_t k = 0; k < frags[slot]->mors.size(); ++k) {
          Mor const& phi = frags[slot]->mors[k];
          std::vector<Subset> parts(phi.profile.source.begin(),
                                    phi.profile.source.end());
          auto const tgt = static_cast<Subset>(phi.target());
          int const c = es.slots() == 1 ? static_cast<int>(tgt)
                        : slot == 0     ? es.code({tgt, o})
                                        : es.code({o, tgt});
          Mor const want = (*f->images)[k];
          ++rep.morphisms;
          if (evaluate(m, s, c, slot, parts, true) != want ||
              evaluate(m, s, c, slot, parts, false) != want) {
            rep.failures.push_back(who + ": evaluator differs on " +
                                   format_mor(powers[slot].carrier, phi));
          }
        }
      }
    }
    if (es.slots() == 2 && rep.failures.empty()) {
      BilinMap const f = make_bilinear(slices[0], slices[1]);
      if (auto v = bilinear_violation(f, m.carrier)) {
        rep.failures.push_back(who + ": " + *v);
      }
      if (!is_based_bilinear(f, powers[0], powers[1], m)) {
        rep.failures.push_back(who + ": slices are not based");
      }
    }
  }
  return rep;
}

std::vector<MSystem> oracle_systems(BasedMulticat const& m, GObj const& shape,
                                    EnumOptions opt) {
  if (shape.is_base()) {
    return {MSystem{shape, {}, {}}};
  }
  EStar const es(shape);
  auto binary = [](Subset t, Subset s) {
    return Mor{Profile{{static_cast<ObjId>(t), static_cast<ObjId>(s & ~t)},
                       static_cast<ObjId>(s)},
               "*"};
  };
  std::vector<MSystem> out;
  if (es.slots() == 1) {
    BasedMulticat const e = E_power(es.dims()[0]);
    for (auto const& f : enumerate_based_multifunctors(e, m, opt)) {
      MSystem s{shape, {}, {}};
      for (int c = 0; c < es.codes(); ++c) {
        s.values.push_back(f(c));
      }
      for (int k = 0; k < es.entries(); ++k) {
        auto const& en = es.entry_at(k);
        s.rho.push_back(es.degenerate(en.code)
                            ? m.base_mor(2)
                            : f(binary(en.part, static_cast<Subset>(en.code))));
      }
      out.push_back(std::move(s));
    }
  } else if (es.slots() == 2) {
    BasedMulticat const e1 = E_power(es.dims()[0]);
    BasedMulticat const e2 = E_power(es.dims()[1]);
    for (auto const& f : enumerate_based_bilinear(e1, e2, m, opt)) {
      MSystem s{shape, {}, {}};
      for (int c = 0; c < es.codes(); ++c) {
        s.values.push_back(f(es.part(c, 0), es.part(c, 1)));
      }
      for (int k = 0; k < es.entries(); ++k) {
        auto const& en = es.entry_at(k);
        Subset const a = es.part(en.code, 0);
        Subset const b = es.part(en.code, 1);
        if (es.degenerate(en.code)) {
          s.rho.push_back(m.base_mor(2));
        } else if (en.slot == 0) {
          s.rho.push_back(f.left[b](binary(en.part, a)));
        } else {
          s.rho.push_back(f.right[a](binary(en.part, b)));
        }
      }
      out.push_back(std::move(s));
    }
  } else {
    throw Error("oracle systems need at most two slots");
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExtnReport extn_roundtrip(PermCatPtr const& c, GObj const& shape,
                          int max_total) {
  ExtnReport rep;
  JC const j = enumerate_jc(c, shape);
  BasedMulticat const u = underlying_based(c);
  JHat const h = jhat(u, shape);
  rep.objects = j.objects.size();
  rep.morphisms = j.arrows.size();
  if (h.objects.size() != j.objects.size()) {
    rep.failures.push_back("object counts differ: " +
                           std::to_string(j.objects.size()) + " against " +
                           std::to_string(h.objects.size()));
  }
  if (h.arrows.size() != j.arrows.size()) {
    rep.failures.push_back("morphism counts differ: " +
                           std::to_string(j.arrows.size()) + " against " +
                           std::to_string(h.arrows.size()));
  }
  std::vector<int> omap;
  for (auto const& x : j.objects) {
    MSystem const mx = to_msystem(*c, x);
    omap.push_back(h.find_object(mx));
    if (omap.back() < 0) {
      rep.failures.push_back("system " + system_label(*c, x) +
                             " has no counterpart");
    } else if (from_msystem(*c, mx) != x) {
      rep.failures.push_back("object round trip fails");
    }
  }
  if (std::set<int>(omap.begin(), omap.end()).size() != omap.size()) {
    rep.failures.push_back("object translation is not injective");
  }
  if (!rep.ok()) {
    return rep;
  }
  std::vector<int> amap;
  for (auto const& a : j.arrows) {
    MSystemMor const mf =
        to_msystem_mor(*c, j.objects[a.src], j.objects[a.tgt], a.mor);
    amap.push_back(h.find_arrow(omap[a.src], omap[a.tgt], mf));
    if (amap.back() < 0) {
      rep.failures.push_back("a morphism has no counterpart");
      return rep;
    }
    if (from_msystem_mor(*c, mf) != a.mor) {
      rep.failures.push_back("morphism round trip fails");
    }
  }
  if (std::set<int>(amap.begin(), amap.end()).size() != amap.size()) {
    rep.failures.push_back("morphism translation is not injective");
  }
  for (int o = 0; o < static_cast<int>(j.objects.size()); ++o) {
    if (amap[j.ident[o]] != h.ident[omap[o]]) {
      rep.failures.push_back("identities not preserved");
    }
  }
  // composition, bucketed by source
  std::vector<std::vector<int>> out_of(j.objects.size());
  for (int a = 0; a < static_cast<int>(j.arrows.size()); ++a) {
    out_of[j.arrows[a].src].push_back(a);
  }
  for (int f = 0; f < static_cast<int>(j.arrows.size()); ++f) {
    for (int g : out_of[j.arrows[f].tgt]) {
      ++rep.composites;
      int const gf = compose_arrows(*c, j, g, f);
      if (gf < 0 || amap[gf] != compose_arrows(u, h, amap[g], amap[f])) {
        rep.failures.push_back("composition not preserved");
      }
    }
  }
  // naturality along generators
  if (shape.is_base()) {
    return rep;
  }
  for (auto const& t : gobjs_upto(max_total)) {
    for (auto const& g : enumerate_g_homset(shape, t)) {
      if (g.null ||
          !(is_stabilization(g) || is_permutation(g) || is_fmap(g))) {
        continue;
      }
      ++rep.generators;
      Reindex const rj = jc_reindex(g);
      Reindex const re = estar_reindex(g);
      for (auto const& x : j.objects) {
        ++rep.transports;
        System const y = apply(*c, rj, x);
        if (auto v = system_violation(*c, y)) {
          rep.failures.push_back("action of " + g.str() +
                                 " gives an invalid system: " + *v);
          continue;
        }
        MSystem const my = apply(u, re, to_msystem(*c, x));
        if (to_msystem(*c, y) != my) {
          rep.failures.push_back("actions differ along " + g.str() + " at " +
                                 system_label(*c, x));
        }
        if (auto v = msystem_violation(u, my)) {
          rep.failures.push_back("precomposition along " + g.str() +
                                 " gives an invalid system: " + *v);
        }
      }
      for (auto const& a : j.arrows) {
        System const& x = j.objects[a.src];
        System const& y = j.objects[a.tgt];
        SystemMor const f = apply_mor(*c, rj, a.mor);
        System const x2 = apply(*c, rj, x);
        System const y2 = apply(*c, rj, y);
        if (auto v = mor_violation(*c, x2, y2, f)) {
          rep.failures.push_back("action of " + g.str() +
                                 " gives an invalid morphism: " + *v);
        }
        if (to_msystem_mor(*c, x2, y2, f) !=
            apply_mor(u, re, to_msystem_mor(*c, x, y, a.mor))) {
          rep.failures.push_back("morphism actions differ along " + g.str());
        }
      }
    }
  }
  return rep;
}

FunctorialityReport check_jc_functoriality(
    int max_total, std::vector<std::pair<PermCatPtr, JC const*>> const& cats) {
  FunctorialityReport rep;
  auto objs = gobjs_upto(max_total);
  std::size_t const n = objs.size();
  using Grid = std::vector<std::vector<std::vector<GMor>>>;
  Grid homs(n, std::vector<std::vector<GMor>>(n));
  std::vector<std::vector<std::map<GMor, int>>> index(
      n, std::vector<std::map<GMor, int>>(n));
  std::vector<std::vector<std::vector<Reindex>>> re(
      n, std::vector<std::vector<Reindex>>(n));
  std::vector<std::vector<std::vector<Reindex>>> ren(
      n, std::vector<std::vector<Reindex>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      homs[a][b] = enumerate_g_homset(objs[a], objs[b]);
      for (std::size_t i = 0; i < homs[a][b].size(); ++i) {
        GMor const& g = homs[a][b][i];
        index[a][b].emplace(g, static_cast<int>(i));
        re[a][b].push_back(jc_reindex(g));
        ren[a][b].push_back(normalize_jc(re[a][b].back()));
      }
    }
  }
  auto composite = [&](std::size_t a, std::size_t c, GMor const& g2,
                       GMor const& g1) {
    auto it = index[a][c].find(compose_g(g2, g1));
    if (it == index[a][c].end()) {
      throw Error("functoriality: composite outside its hom set");
    }
    return it->second;
  };
  std::vector<FunctorialityReport> part(n);
  run(Exec::parallel, static_cast<long>(n), [&](long a) {
    auto& r = part[a];
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 0; i < homs[a][b].size(); ++i) {
          GMor const& g1 = homs[a][b][i];
          for (std::size_t k = 0; k < homs[b][c].size(); ++k) {
            GMor const& g2 = homs[b][c][k];
            ++r.pairs;
            r.permutation_pairs += is_permutation(g1) && is_permutation(g2) &&
                                   !g1.null && !g2.null;
            Reindex const& lhs = ren[a][c][composite(a, c, g2, g1)];
            if (lhs != normalize_jc(compose(re[b][c][k], re[a][b][i])) &&
                r.failures.size() < 20) {
              r.failures.push_back("composite of " + g1.str() + " and " +
                                   g2.str() + " acts differently");
            }
          }
        }
      }
    }
  });
  for (auto& r : part) {
    rep.pairs += r.pairs;
    rep.permutation_pairs += r.permutation_pairs;
    for (auto& f : r.failures) {
      rep.failures.push_back(std::move(f));
    }
  }
  for (auto const& a : objs) {
    if (a.is_base() || a.total() + 1 > max_total) {
      continue;
    }
    GObj const big = odot(a, GObj::of({1}));
    ++rep.stabilizations;
    Reindex const e = jc_reindex(stabilization(a));
    Reindex const d = drop_last(a);
    if (normalize_jc(compose(d, e)) != normalize_jc(identity_reindex(a))) {
      rep.failures.push_back("dropping the added slot is not a left inverse at " +
                             a.str());
    }
    if (normalize_jc(compose(e, d)) != normalize_jc(identity_reindex(big))) {
      rep.failures.push_back(
          "dropping the added slot is not a right inverse at " + a.str());
    }
  }
  // concrete transport on the given categories
  for (auto const& [c, j] : cats) {
    std::size_t const a = std::find(objs.begin(), objs.end(), j->shape) -
                          objs.begin();
    if (a == n) {
      continue;
    }
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < homs[a][b].size(); ++i) {
        Reindex const& r1 = re[a][b][i];
        std::vector<System> ys;
        for (auto const& x : j->objects) {
          ys.push_back(apply(*c, r1, x));
          ++rep.transports;
          if (auto v = system_violation(*c, ys.back())) {
            rep.failures.push_back("action of " + homs[a][b][i].str() +
                                   " gives an invalid system: " + *v);
          }
        }
        if (!rep.ok()) {
          return rep;
        }
        for (std::size_t cc = 0; cc < n; ++cc) {
          for (std::size_t k = 0; k < homs[b][cc].size(); ++k) {
            Reindex const& r21 =
                re[a][cc][composite(a, cc, homs[b][cc][k], homs[a][b][i])];
            for (std::size_t o = 0; o < ys.size(); ++o) {
              ++rep.transports;
              if (apply(*c, r21, j->objects[o]) !=
                  apply(*c, re[b][cc][k], ys[o])) {
                rep.failures.push_back("transport along " +
                                       homs[a][b][i].str() + " then " +
                                       homs[b][cc][k].str() +
                                       " does not compose");
              }
            }
          }
        }
        for (auto const& ar : j->arrows) {
          ++rep.transports;
          if (auto v = mor_violation(*c, ys[ar.src], ys[ar.tgt],
                                     apply_mor(*c, r1, ar.mor))) {
            rep.failures.push_back("action of " + homs[a][b][i].str() +
                                   " gives an invalid morphism: " + *v);
          }
        }
      }
    }
  }
  return rep;
}

// pairing

System pair_systems(PkObject const& f, System const& x, System const& y) {
  if (f.arity() != 2) {
    throw Error("pairing needs a 2-linear map");
  }
  PermCat const& cc = *f.src[0];
  PermCat const& dd = *f.src[1];
  PermCat const& ee = *f.tgt;
  if (auto v = system_violation(cc, x)) {
    throw Error("first system is invalid: " + *v);
  }
  if (auto v = system_violation(dd, y)) {
    throw Error("second system is invalid: " + *v);
  }
  GObj const shape = odot(x.shape, y.shape);
  if (shape.is_base()) {
    return System{shape, {}, {}};
  }
  EStar const ex(x.shape);
  EStar const ey(y.shape);
  EStar const es(shape);
  int const ml = static_cast<int>(x.shape.length());
  int const nl = static_cast<int>(y.shape.length());
  auto split = [&](int code) {
    if (shape.length() == 0) {
      return std::pair<int, int>{1, 1};
    }
    auto t = es.tuple(code);
    std::vector<Subset> a(t.begin(), t.begin() + ml);
    std::vector<Subset> b(t.begin() + ml, t.end());
    return std::pair<int, int>{ml == 0 ? 1 : ex.code(a),
                               nl == 0 ? 1 : ey.code(b)};
  };
  System r{shape, {}, {}};
  for (int c = 0; c < es.codes(); ++c) {
    auto [xc, yc] = split(c);
    r.values.push_back(es.degenerate(c)
                           ? ee.zero
                           : f.at({x.values[xc], y.values[yc]}));
  }
  for (int e = 0; e < es.entries(); ++e) {
    auto const& en = es.entry_at(e);
    Subset const u = es.part(en.code, en.slot) & ~en.part;
    if (es.degenerate(en.code)) {
      r.rho.push_back(ee.ident[ee.zero]);
      continue;
    }
    if (en.part == 0 || u == 0) {
      r.rho.push_back(ee.ident[r.values[en.code]]);
      continue;
    }
    auto [xc, yc] = split(en.code);
    auto [xa, ya] = split(es.with(en.code, en.slot, en.part));
    auto [xb, yb] = split(es.with(en.code, en.slot, u));
    if (en.slot < ml) {
      int const rc = x.rho[ex.entry(xc, en.slot, en.part)];
      int const yv = y.values[yc];
      r.rho.push_back(ee.comp(f.on({rc, dd.ident[yv]}),
                              f.d(0, {x.values[xa], yv}, x.values[xb])));
    } else {
      int const rd = y.rho[ey.entry(yc, en.slot - ml, en.part)];
      int const xv = x.values[xc];
      r.rho.push_back(ee.comp(f.on({cc.ident[xv], rd}),
                              f.d(1, {xv, y.values[ya]}, y.values[yb])));
    }
  }
  return r;
}

// serialization

namespace {

using nlohmann::json;

std::string entry_key(EStar const& es, int e) {
  auto const& en = es.entry_at(e);
  return es.label(en.code) + ";" + std::to_string(en.slot + 1) + ";" +
         subset_label(en.part);
}

bool stored(EStar const& es, int e) {
  auto const& en = es.entry_at(e);
  Subset const si = es.part(en.code, en.slot);
  return !es.degenerate(en.code) && en.part != 0 && en.part != si;
}

}  // namespace

std::string system_to_json(PermCat const& c, System const& s) {
  json j;
  j["schemaVersion"] = 1;
  j["shape"] = s.shape.is_base() ? json("*") : json(s.shape.dims());
  j["values"] = json::object();
  j["rhos"] = json::object();
  if (!s.shape.is_base()) {
    EStar const es(s.shape);
    for (int code : es.objects()) {
      j["values"][es.label(code)] = c.objects.at(s.values[code]);
    }
    for (int e = 0; e < es.entries(); ++e) {
      if (stored(es, e)) {
        j["rhos"][entry_key(es, e)] = c.arrows.at(s.rho[e]).name;
      }
    }
  }
  return j.dump(2);
}

System system_from_json(PermCat const& c, std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const& e) {
    throw Error(std::string("system json: ") + e.what());
  }
  try {
    GObj shape;
    if (j.at("shape").is_string()) {
      shape = parse_gobj(j.at("shape").get<std::string>());
    } else {
      shape = GObj::of(j.at("shape").get<std::vector<int>>());
    }
    System s{shape, {}, {}};
    if (shape.is_base()) {
      return s;
    }
    EStar const es(shape);
    std::map<std::string, int> codes;
    for (int code : es.objects()) {
      codes[es.label(code)] = code;
    }
    std::map<std::string, int> keys;
    for (int e = 0; e < es.entries(); ++e) {
      if (stored(es, e)) {
        keys[entry_key(es, e)] = e;
      }
    }
    s.values.assign(es.codes(), c.zero);
    auto const& vals = j.at("values");
    for (auto it = vals.begin(); it != vals.end(); ++it) {
      auto k = codes.find(it.key());
      if (k == codes.end()) {
        throw Error("system json: unknown tuple " + it.key());
      }
      s.values[k->second] = c.obj(it.value().get<std::string>());
    }
    if (vals.size() != codes.size()) {
      throw Error("system json: every nonbasepoint tuple needs a value");
    }
    s.rho.assign(es.entries(), -1);
    for (int e = 0; e < es.entries(); ++e) {
      auto const& en = es.entry_at(e);
      if (es.degenerate(en.code)) {
        s.rho[e] = c.ident[c.zero];
      } else if (!stored(es, e)) {
        s.rho[e] = c.ident[s.values[en.code]];
      }
    }
    auto const& rhos = j.at("rhos");
    for (auto it = rhos.begin(); it != rhos.end(); ++it) {
      auto k = keys.find(it.key());
      if (k == keys.end()) {
        throw Error("system json: unknown rho key " + it.key());
      }
      s.rho[k->second] = c.arrow(it.value().get<std::string>());
    }
    if (std::count(s.rho.begin(), s.rho.end(), -1) > 0) {
      throw Error("system json: missing rho entries");
    }
    return s;
  } catch (json::exception const& e) {
    throw Error(std::string("system json: ") + e.what());
  }
}

std::string system_label(PermCat const& c, System const& s) {
  if (s.shape.is_base()) {
    return "0";
  }
  EStar const es(s.shape);
  std::string out = "{";
  bool first = true;
  for (int code : es.objects()) {
    if (!first) {
      out += ' ';
    }
    first = false;
    out += es.label(code) + "=" + c.objects.at(s.values[code]);
  }
  return out + "}";
}

std::string jc_to_dot(PermCat const& c, JC const& j) {
  std::ostringstream os;
  os << "digraph jc {\n";
  for (std::size_t o = 0; o < j.objects.size(); ++o) {
    os << "  n" << o << " [label=\"" << system_label(c, j.objects[o])
       << "\"];\n";
  }
  for (std::size_t a = 0; a < j.arrows.size(); ++a) {
    auto const& ar = j.arrows[a];
    if (j.ident[ar.src] == static_cast<int>(a)) {
      continue;
    }
    os << "  n" << ar.src << " -> n" << ar.tgt << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mc
