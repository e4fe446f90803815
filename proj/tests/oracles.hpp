#pragma once

// Independent brute-force counts shared by the unit tests and the
// acceptance run.

#include <functional>
#include <set>
#include <vector>

#include "mc/axioms.hpp"
#include "mc/freecons.hpp"
#include "mc/gstar.hpp"
#include "mc/ktheory.hpp"
#include "mc/permcat.hpp"

namespace mc::testing {

// Every assignment of objects, arrows and lambdas that type-checks, kept
// when the validator accepts it.  No pruning.
inline std::size_t brute_laxstar_count(PermCatPtr const& c, PermCatPtr const& d) {
  std::size_t count = 0;
  std::size_t const n = c->size();
  std::vector<int> obj(n, 0);
  std::function<void(std::size_t)> objs = [&](std::size_t a) {
    if (a == n) {
      LaxStarMap f{c, d, obj, std::vector<int>(c->arrows.size()),
                   std::vector<std::vector<int>>(n, std::vector<int>(n))};
      std::function<void(std::size_t)> mors = [&](std::size_t u) {
        if (u == c->arrows.size()) {
          std::function<void(std::size_t)> lams = [&](std::size_t p) {
            if (p == n * n) {
              count += validate_laxstar(f).ok();
              return;
            }
            std::size_t const a1 = p / n;
            std::size_t const b1 = p % n;
            for (int l : d->hom(d->oplus_obj[obj[a1]][obj[b1]],
                                obj[c->oplus_obj[a1][b1]])) {
              f.lambda[a1][b1] = l;
              lams(p + 1);
            }
          };
          lams(0);
          return;
        }
        auto const& ar = c->arrows[u];
        for (int v : d->hom(obj[ar.src], obj[ar.tgt])) {
          f.mor[u] = v;
          mors(u + 1);
        }
      };
      mors(0);
      return;
    }
    for (int x = 0; x < static_cast<int>(d->size()); ++x) {
      obj[a] = x;
      objs(a + 1);
    }
  };
  objs(0);
  return count;
}

inline Profile mapped(Profile const& p, std::function<ObjId(ObjId)> const& f) {
  Profile q;
  for (ObjId a : p.source) {
    q.source.push_back(f(a));
  }
  q.target = f(p.target);
  return q;
}

// Into a thin target a bilinear map is an object map on pairs under which
// every morphism of either variable, with the other variable fixed, lands
// on a nonempty hom set; the squares compare elements of one hom set.
inline std::size_t brute_thin_bilinear(Multicat const& m, Multicat const& n,
                                Multicat const& p, std::size_t k) {
  auto mm = morphisms_upto(m, k);
  auto nm = morphisms_upto(n, k);
  std::size_t const nn = n.size();
  std::size_t count = 0;
  for (auto const& obj : all_sources(p.size(), m.size() * nn)) {
    bool ok = true;
    for (ObjId b = 0; ok && b < static_cast<ObjId>(nn); ++b) {
      for (auto const& phi : mm) {
        auto q = mapped(phi.profile, [&](ObjId a) { return obj[a * nn + b]; });
        if (p.hom(q).empty()) {
          ok = false;
          break;
        }
      }
    }
    for (ObjId a = 0; ok && a < static_cast<ObjId>(m.size()); ++a) {
      for (auto const& psi : nm) {
        auto q = mapped(psi.profile, [&](ObjId b) { return obj[a * nn + b]; });
        if (p.hom(q).empty()) {
          ok = false;
          break;
        }
      }
    }
    count += ok;
  }
  return count;
}

// Graph maps counted directly: object functions times the product of the
// target hom set sizes.
inline std::size_t brute_graph_maps(MGraph const& g, Multicat const& n) {
  std::size_t total = 0;
  for (auto const& obj : all_sources(n.size(), g.objects.size())) {
    std::size_t c = 1;
    for (auto const& a : g.arrows) {
      Profile p{{}, obj[a.target]};
      for (ObjId x : a.source) {
        p.source.push_back(obj[x]);
      }
      c *= n.hom(p).size();
    }
    total += c;
  }
  return total;
}

// All functions {0..k-1} -> {0..n-1}.
inline std::vector<std::vector<int>> functions(int k, int n) {
  std::vector<std::vector<int>> out;
  if (n == 0 && k > 0) {
    return out;
  }
  std::vector<int> f(k, 0);
  while (true) {
    out.push_back(f);
    int t = k;
    while (t > 0 && ++f[t - 1] == n) {
      f[--t] = 0;
    }
    if (t == 0) {
      break;
    }
  }
  return out;
}

// Every normalized morphism reached from raw data, zero maps included.
inline std::set<GMor> brute_homset(GObj const& m, GObj const& n) {
  std::set<GMor> out{null_gmor(m, n)};
  if (m.is_base() || n.is_base()) {
    return out;
  }
  int const r = static_cast<int>(m.length());
  int const s = static_cast<int>(n.length());
  for (auto const& q : functions(r, s)) {
    if (std::set<int>(q.begin(), q.end()).size() != q.size()) {
      continue;
    }
    std::vector<std::vector<FMap>> choices;
    for (int j = 0; j < s; ++j) {
      int d = 1;
      for (int i = 0; i < r; ++i) {
        if (q[i] == j) {
          d = m.dims()[i];
        }
      }
      std::vector<FMap> c;
      for (auto const& img : functions(d, n.dims()[j] + 1)) {
        c.push_back(FMap{d, n.dims()[j], img});
      }
      choices.push_back(c);
    }
    std::vector<std::size_t> idx(s, 0);
    while (true) {
      std::vector<FMap> alpha;
      for (int j = 0; j < s; ++j) {
        alpha.push_back(choices[j][idx[j]]);
      }
      out.insert(make_gmor(m, n, q, alpha));
      int j = s;
      while (j > 0 && ++idx[j - 1] == choices[j - 1].size()) {
        idx[--j] = 0;
      }
      if (j == 0) {
        break;
      }
    }
  }
  return out;
}

inline std::size_t ipower(std::size_t b, int e) {
  std::size_t r = 1;
  while (e-- > 0) {
    r *= b;
  }
  return r;
}

// A discrete system is multiadditive on objects, so it is fixed by its
// values on tuples of singletons.
inline std::size_t discrete_count(std::size_t n, GObj const& shape) {
  int p = 1;
  for (int d : shape.dims()) {
    p *= d;
  }
  return ipower(n, p);
}

// Every assignment of values and arrows, filtered by the validator.
inline std::size_t brute_jc_count(PermCat const& c, GObj const& shape) {
  EStar const es(shape);
  auto const& objs = es.objects();
  System s{shape, std::vector<int>(es.codes(), c.zero),
           std::vector<int>(es.entries(), c.ident[c.zero])};
  std::vector<int> free;
  for (int e = 0; e < es.entries(); ++e) {
    if (!es.degenerate(es.entry_at(e).code)) {
      free.push_back(e);
    }
  }
  std::size_t n = 0;
  std::vector<int> v(objs.size(), 0);
  int const no = static_cast<int>(c.size());
  int const na = static_cast<int>(c.arrows.size());
  while (true) {
    for (std::size_t k = 0; k < objs.size(); ++k) {
      s.values[objs[k]] = v[k];
    }
    std::vector<int> a(free.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < free.size(); ++k) {
        s.rho[free[k]] = a[k];
      }
      n += !system_violation(c, s).has_value();
      std::size_t k = free.size();
      while (k > 0 && ++a[k - 1] == na) {
        a[--k] = 0;
      }
      if (k == 0) {
        break;
      }
    }
    std::size_t k = objs.size();
    while (k > 0 && ++v[k - 1] == no) {
      v[--k] = 0;
    }
    if (k == 0) {
      break;
    }
  }
  return n;
}

}  // namespace mc::testing
