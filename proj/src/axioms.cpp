#include "mc/axioms.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>

namespace mc {

std::vector<Mor> morphisms_upto(Multicat const& m, std::size_t k) {
  std::vector<Mor> out;
  for (std::size_t a = 0; a <= k; ++a) {
    for (auto const& src : all_sources(m.size(), a)) {
      for (ObjId b = 0; b < static_cast<ObjId>(m.size()); ++b) {
        for (auto& f : m.hom(Profile{src, b})) {
          out.push_back(std::move(f));
        }
      }
    }
  }
  return out;
}

namespace {

// Lexicographic rank of a permutation, matching the order of Perm::all.
std::size_t rank(Perm const& s) {
  std::size_t r = 0;
  std::size_t const n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) {
      smaller += s[j] < s[i];
    }
    r = r * (n - i) + smaller;
  }
  return r;
}

std::string list(Multicat const& m, std::span<const Mor> fs) {
  std::string s = "[";
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) {
      s += "; ";
    }
    s += format_mor(m, fs[i]);
  }
  return s + "]";
}

struct Local {
  std::vector<Violation> v;
  std::size_t instances = 0;
  std::size_t cap = 0;
  void add(std::string law, std::string detail) {
    if (v.size() < cap) {
      v.push_back({std::move(law), std::move(detail)});
    }
  }
};

template <typename F>
void guarded(Local& out, std::string const& law, F&& fn) {
  try {
    fn();
  } catch (std::exception const& e) {
    out.add(law, std::string("evaluation failed: ") + e.what());
  }
}

// The budget fragment with every composite and action among its members
// evaluated once.  Ids below `members` are morphisms of the fragment; larger
// ids are evaluation results outside their hom sets.
struct Compiled {
  Multicat const& m;
  Budget budget;
  std::vector<Mor> mors;
  std::size_t members = 0;
  std::map<Mor, int> ids;
  std::vector<std::vector<int>> by_target;  // arity <= slot
  std::vector<char> is_ident;
  std::vector<std::vector<int>> act;        // [f][rank]
  // Composites as a trie: the node of (f; g_1..g_j) holds one entry per
  // member with target source_{j+1}, at index pos[g].  Entries are child
  // nodes, or results at the last level; -1 if not evaluated.
  std::vector<int> pos;
  std::vector<int> root;
  std::vector<int> trie;

  int intern(Mor const& r) {
    auto [it, fresh] = ids.emplace(r, static_cast<int>(mors.size()));
    if (fresh) {
      mors.push_back(r);
    }
    return it->second;
  }

  int node(ObjId t) {
    int const at = static_cast<int>(trie.size());
    trie.resize(trie.size() + std::max<std::size_t>(by_target[t].size(), 1),
                -1);
    return at;
  }

  void insert(int f, std::vector<int> const& g, int r) {
    auto const& src = mors[f].profile.source;
    if (g.empty()) {
      root[f] = r;
      return;
    }
    if (root[f] < 0) {
      root[f] = node(src[0]);
    }
    int at = root[f];
    for (std::size_t j = 0; j + 1 < g.size(); ++j) {
      int& e = trie[at + pos[g[j]]];
      if (e < 0) {
        int const fresh = node(src[j + 1]);
        trie[at + pos[g[j]]] = fresh;
      }
      at = trie[at + pos[g[j]]];
    }
    trie[at + pos[g.back()]] = r;
  }

  bool listed(int x) const {
    return x >= 0 && static_cast<std::size_t>(x) < members && pos[x] >= 0;
  }

  // Entry of node `at` for the member x, or -1.
  int step(int at, int x) const {
    return at < 0 || !listed(x) ? -1 : trie[at + pos[x]];
  }

  int lookup(int f, std::span<const int> g) const {
    if (f < 0 || static_cast<std::size_t>(f) >= members) {
      return -1;
    }
    int at = root[f];
    for (int x : g) {
      at = step(at, x);
    }
    return at;
  }

  // Calls fn on each tuple with the given targets, each of arity <= slot,
  // with total arity <= room.  by_target is sorted by arity.
  template <typename Fn>
  void tuples(std::vector<ObjId> const& targets, std::size_t room,
              std::vector<int>& cur, Fn&& fn) const {
    if (cur.size() == targets.size()) {
      fn(cur);
      return;
    }
    for (int g : by_target[targets[cur.size()]]) {
      std::size_t const k = mors[g].arity();
      if (k > room) {
        break;
      }
      cur.push_back(g);
      tuples(targets, room - k, cur, fn);
      cur.pop_back();
    }
  }
};

// Values met while checking laws: ids of the compiled table, or negative
// ids for results seen only by this work item.
struct Eval {
  Compiled const& c;
  std::vector<Mor> extra;
  static constexpr int slow_marker = std::numeric_limits<int>::min();

  Mor const& mor(int v) const {
    return v >= 0 ? c.mors[v] : extra[-1 - v];
  }
  int intern(Mor const& r) {
    auto it = c.ids.find(r);
    if (it != c.ids.end()) {
      return it->second;
    }
    for (std::size_t i = 0; i < extra.size(); ++i) {
      if (extra[i] == r) {
        return -1 - static_cast<int>(i);
      }
    }
    extra.push_back(r);
    return -static_cast<int>(extra.size());
  }
  int gamma(int f, std::span<const int> g) {
    if (int const r = c.lookup(f, g); r >= 0) {
      return r;
    }
    return slow(f, g);
  }
  int slow(int f, std::span<const int> g) {
    std::vector<Mor> in;
    for (int x : g) {
      in.push_back(mor(x));
    }
    return intern(c.m.gamma(mor(f), in));
  }
  int act(int f, Perm const& s) {
    if (f >= 0 && static_cast<std::size_t>(f) < c.act.size()
        && !c.act[f].empty()) {
      return c.act[f][rank(s)];
    }
    return intern(c.m.act(mor(f), s));
  }
};

bool hom_thin(Compiled const& c) {
  for (std::size_t i = 1; i < c.members; ++i) {
    if (c.mors[i].profile == c.mors[i - 1].profile) {
      return false;
    }
  }
  return true;
}

bool is_id(Compiled const& c, int x) {
  return x >= 0 && static_cast<std::size_t>(x) < c.members && c.is_ident[x];
}

// gamma(gamma(f; g); h) = gamma(f; gamma(g_1; h_1..), ...) for every h.
// Instances with an identity outer map, or with only identities in one
// layer of inner maps, follow from the unit laws and are skipped.
void associativity(Compiled const& c, Eval& ev, int f,
                   std::vector<int> const& g, int r,
                   std::vector<std::size_t> const& k, Local& out) {
  std::size_t const n = g.size();
  auto const& targets = c.mors[r].profile.source;
  std::size_t const total = targets.size();
  std::vector<int> h(total);
  std::vector<int> mids(n);
  std::vector<std::size_t> seg(total);  // inner map owning each slot
  std::vector<std::size_t> first(n + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    first[j + 1] = first[j] + k[j];
    for (std::size_t t = first[j]; t < first[j + 1]; ++t) {
      seg[t] = j;
    }
  }
  auto finish = [&](int lhs) {
    ++out.instances;
    for (std::size_t j = 0; j < n; ++j) {
      if (k[j] == 0) {
        mids[j] = ev.gamma(g[j], {});
      }
    }
    int const rhs = ev.gamma(f, std::span<const int>(mids.data(), n));
    if (lhs == ev.slow_marker) {
      lhs = ev.gamma(r, h);
    }
    if (lhs != rhs) {
      auto show = [&](std::vector<int> const& xs) {
        std::vector<Mor> v;
        for (int x : xs) {
          v.push_back(ev.mor(x));
        }
        return list(c.m, v);
      };
      out.add("associativity", format_mor(c.m, c.mors[f]) + " " + show(g)
                                   + " " + show(h) + ": "
                                   + format_mor(c.m, ev.mor(lhs)) + " vs "
                                   + format_mor(c.m, ev.mor(rhs)));
    }
  };
  // at_r, at_g: trie nodes reached so far for r and for the current g_j
  auto rec = [&](auto&& self, std::size_t t, std::size_t room, int at_r,
                 int at_g, bool all_id) -> void {
    if (t == total) {
      if (!all_id) {
        finish(at_r >= 0 ? at_r : ev.slow_marker);
      }
      return;
    }
    std::size_t const j = seg[t];
    if (t == first[j]) {
      at_g = c.root[g[j]];
    }
    for (int x : c.by_target[targets[t]]) {
      std::size_t const kx = c.mors[x].arity();
      if (kx > room) {
        break;
      }
      h[t] = x;
      int const next_g = c.step(at_g, x);
      if (t + 1 == first[j + 1]) {
        mids[j] = next_g >= 0 ? next_g
                              : ev.gamma(g[j], std::span<const int>(
                                                   h.data() + first[j], k[j]));
      }
      self(self, t + 1, room - kx, c.step(at_r, x), next_g,
           all_id && c.is_ident[x]);
    }
  };
  if (total == 0) {
    return;  // only the empty h, which the unit laws cover
  }
  rec(rec, 0, c.budget.arity, c.root[r], -1, true);
}

void check_laws(Compiled const& c, int f, Local& out) {
  Multicat const& m = c.m;
  Eval ev{c, {}};
  Mor const& fm = c.mors[f];
  std::size_t const n = fm.arity();
  auto const perms = Perm::all(n);
  guarded(out, "action", [&] {
    for (auto const& s : perms) {
      int const r = ev.act(f, s);
      for (auto const& t : perms) {
        ++out.instances;
        if (ev.act(r, t) != ev.act(f, s * t)) {
          out.add("action", "act(act(f," + s.str() + ")," + t.str()
                                + ") != act(f,st) for " + format_mor(m, fm));
        }
      }
    }
  });
  std::vector<int> cur;
  c.tuples(fm.profile.source, c.budget.arity, cur,
           [&](std::vector<int> const& g) {
             guarded(out, "composition", [&] {
               int const r = ev.gamma(f, g);
               std::vector<std::size_t> k(n);
               for (std::size_t j = 0; j < n; ++j) {
                 k[j] = c.mors[g[j]].arity();
               }
               auto show = [&](std::vector<int> const& xs) {
                 std::vector<Mor> v;
                 for (int x : xs) {
                   v.push_back(ev.mor(x));
                 }
                 return list(m, v);
               };
               // permutation of the outer inputs
               for (auto const& s : perms) {
                 if (s.is_identity()) {
                   continue;
                 }
                 ++out.instances;
                 std::vector<int> gs(n);
                 std::vector<std::size_t> sizes(n);
                 for (std::size_t t = 0; t < n; ++t) {
                   gs[t] = g[s[t]];
                   sizes[t] = k[s[t]];
                 }
                 int const lhs = ev.gamma(ev.act(f, s), gs);
                 int const rhs = ev.act(r, Perm::block(s, sizes));
                 if (lhs != rhs) {
                   out.add("outer equivariance",
                           format_mor(m, fm) + " " + s.str() + " " + show(g)
                               + ": " + format_mor(m, ev.mor(lhs)) + " vs "
                               + format_mor(m, ev.mor(rhs)));
                 }
               }
               // permutations of the inner inputs
               std::vector<std::vector<Perm>> choices;
               for (std::size_t j = 0; j < n; ++j) {
                 choices.push_back(Perm::all(k[j]));
               }
               std::vector<std::size_t> pick(n, 0);
               while (true) {
                 std::vector<Perm> taus;
                 bool trivial = true;
                 for (std::size_t j = 0; j < n; ++j) {
                   taus.push_back(choices[j][pick[j]]);
                   trivial = trivial && taus.back().is_identity();
                 }
                 if (!trivial) {
                   ++out.instances;
                   std::vector<int> gs;
                   for (std::size_t j = 0; j < n; ++j) {
                     gs.push_back(ev.act(g[j], taus[j]));
                   }
                   int const lhs = ev.gamma(f, gs);
                   int const rhs = ev.act(r, Perm::sum(taus));
                   if (lhs != rhs) {
                     out.add("inner equivariance",
                             format_mor(m, fm) + " " + show(g) + ": "
                                 + format_mor(m, ev.mor(lhs)) + " vs "
                                 + format_mor(m, ev.mor(rhs)));
                   }
                 }
                 std::size_t j = n;
                 while (j > 0 && ++pick[j - 1] == choices[j - 1].size()) {
                   pick[j - 1] = 0;
                   --j;
                 }
                 if (j == 0) {
                   break;
                 }
               }
               // associativity
               if (r < 0 || static_cast<std::size_t>(r) >= c.members) {
                 return;
               }
               if (is_id(c, f)
                   || std::all_of(g.begin(), g.end(),
                                  [&](int x) { return is_id(c, x); })) {
                 return;
               }
               associativity(c, ev, f, g, r, k, out);
             });
           });
}

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

}  // namespace

AxiomReport check_operad_axioms(Multicat const& m, Budget budget, Exec exec,
                                bool full, std::size_t max_violations) {
  if (budget.arity < 2 || budget.slot < 1) {
    throw Error("axiom budget must allow arity at least 2");
  }
  AxiomReport report;
  auto push = [&](Violation v) {
    if (report.violations.size() < max_violations) {
      report.violations.push_back(std::move(v));
    } else {
      report.truncated = true;
    }
  };
  Compiled c{m, budget, {}, 0, {}, {}, {}, {}, {}, {}, {}};
  try {
    c.mors = morphisms_upto(m, budget.arity);
  } catch (std::exception const& e) {
    push({"hom", e.what()});
    return report;
  }
  c.members = c.mors.size();
  for (std::size_t i = 0; i < c.members; ++i) {
    c.ids.emplace(c.mors[i], static_cast<int>(i));
  }
  c.is_ident.assign(c.members, 0);
  for (ObjId a = 0; a < static_cast<ObjId>(m.size()); ++a) {
    auto it = c.ids.find(m.ident(a));
    if (it != c.ids.end()) {
      c.is_ident[it->second] = 1;
    }
  }
  c.by_target.resize(m.size());
  c.pos.assign(c.members, -1);
  for (std::size_t i = 0; i < c.members; ++i) {
    if (c.mors[i].arity() <= budget.slot) {
      c.by_target[c.mors[i].target()].push_back(static_cast<int>(i));
    }
  }
  for (auto& list : c.by_target) {
    std::stable_sort(list.begin(), list.end(), [&](int x, int y) {
      return c.mors[x].arity() < c.mors[y].arity();
    });
    for (std::size_t p = 0; p < list.size(); ++p) {
      c.pos[list[p]] = static_cast<int>(p);
    }
  }
  c.root.assign(c.members, -1);
  for (ObjId a = 0; a < static_cast<ObjId>(m.size()); ++a) {
    if (!c.ids.count(m.ident(a))) {
      push({"identity", "ident(" + m.label(a) + ") is not in its hom set"});
    }
  }

  // Evaluate every action and every composite once; closure and unit laws
  // are checked here.
  struct Item {
    std::vector<Mor> act;
    std::vector<std::pair<std::vector<int>, Mor>> gamma;
    Local local;
  };
  std::size_t const members = c.members;
  std::vector<Item> items(members);
  auto member = [&](Local& out, auto const& what, Mor const& r) {
    if (r.arity() <= budget.arity && !c.ids.count(r)) {
      out.add("closure", what() + " gives " + format_mor(m, r)
                             + ", which is not in its hom set");
    }
  };
  run(exec, static_cast<long>(members), [&](long i) {
    Item& it = items[i];
    it.local.cap = max_violations;
    Mor const& f = c.mors[i];
    guarded(it.local, "unit", [&] {
      ++it.local.instances;
      if (m.gamma(m.ident(f.target()), std::span<const Mor>(&f, 1)) != f) {
        it.local.add("left unit", format_mor(m, f));
      }
      std::vector<Mor> ids;
      for (ObjId a : f.profile.source) {
        ids.push_back(m.ident(a));
      }
      if (m.gamma(f, ids) != f) {
        it.local.add("right unit", format_mor(m, f));
      }
    });
    guarded(it.local, "action", [&] {
      for (auto const& s : Perm::all(f.arity())) {
        ++it.local.instances;
        Mor r = m.act(f, s);
        member(it.local,
               [&] { return "act(" + format_mor(m, f) + ", " + s.str() + ")"; },
               r);
        if (s.is_identity() && r != f) {
          it.local.add("action",
                       "identity permutation moves " + format_mor(m, f));
        }
        it.act.push_back(std::move(r));
      }
    });
    std::vector<int> cur;
    c.tuples(f.profile.source, budget.arity, cur,
             [&](std::vector<int> const& g) {
               guarded(it.local, "composition", [&] {
                 ++it.local.instances;
                 std::vector<Mor> in;
                 for (int x : g) {
                   in.push_back(c.mors[x]);
                 }
                 Mor r = m.gamma(f, in);
                 member(it.local,
                        [&] {
                          return "gamma(" + format_mor(m, f) + "; " +
                                 list(m, in) + ")";
                        },
                        r);
                 it.gamma.emplace_back(g, std::move(r));
               });
             });
  });
  c.act.resize(members);
  for (std::size_t i = 0; i < members; ++i) {
    for (auto const& r : items[i].act) {
      c.act[i].push_back(c.intern(r));
    }
    if (c.act[i].size() != Perm::all(c.mors[i].arity()).size()) {
      c.act[i].clear();
    }
    for (auto const& [g, r] : items[i].gamma) {
      c.insert(static_cast<int>(i), g, c.intern(r));
    }
  }
  std::vector<Local> locals(members);
  if (full || !(m.kind() == Kind::thin || hom_thin(c))) {
    run(exec, static_cast<long>(members), [&](long i) {
      locals[i].cap = max_violations;
      check_laws(c, static_cast<int>(i), locals[i]);
    });
  }
  for (std::size_t i = 0; i < members; ++i) {
    for (Local* l : {&items[i].local, &locals[i]}) {
      report.instances += l->instances;
      for (auto& v : l->v) {
        push(std::move(v));
      }
    }
  }
  return report;
}

}  // namespace mc
