#include "mc/homtensor.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>

#include "mc/axioms.hpp"

namespace mc {

Perm reverse_priority(std::size_t outer, std::size_t inner) {
  std::vector<int> img(outer * inner);
  for (std::size_t i = 0; i < outer; ++i) {
    for (std::size_t j = 0; j < inner; ++j) {
      img[i * inner + j] = static_cast<int>(j * outer + i);
    }
  }
  return Perm(std::move(img));
}

Multifunctor compose_multifunctors(Multifunctor const& h,
                                   Multifunctor const& f,
                                   Multicat const& target) {
  std::vector<ObjId> obj;
  for (ObjId a : f.obj) {
    obj.push_back(h(a));
  }
  std::vector<Mor> gens;
  for (auto const& g : f.gens) {
    gens.push_back(h(g));
  }
  auto r = extend(f.frag, target, obj, gens);
  if (!r) {
    throw Error("composite of multifunctors is not a multifunctor");
  }
  return *r;
}

std::optional<std::string> knat_square(
    Multicat const& n, std::vector<Multifunctor> const& fs,
    Multifunctor const& g, std::function<Mor(ObjId)> const& comp,
    Mor const& phi) {
  auto const& src = phi.profile.source;
  std::vector<Mor> xs;
  for (ObjId a : src) {
    xs.push_back(comp(a));
  }
  Mor const top = n.gamma(g(phi), xs);
  std::vector<Mor> fphi;
  for (auto const& f : fs) {
    fphi.push_back(f(phi));
  }
  Mor const bottom =
      n.act(n.gamma(comp(phi.target()), fphi),
            reverse_priority(src.size(), fs.size()));
  if (top == bottom) {
    return std::nullopt;
  }
  return "square at " + format_mor(g.frag->m, phi) + ": " + format_mor(n, top)
         + " vs " + format_mor(n, bottom);
}

namespace {

bool is_identity_mor(Multicat const& m, Mor const& f) {
  return f.arity() == 1 && f == m.ident(f.target());
}

std::optional<std::string> knat_on(Multicat const& n,
                                   std::vector<Multifunctor> const& fs,
                                   Multifunctor const& g,
                                   std::function<Mor(ObjId)> const& comp,
                                   std::vector<int> const& which) {
  Fragment const& fr = *g.frag;
  for (int i : which) {
    Mor const& phi = fr.mors[i];
    if (is_identity_mor(fr.m, phi)) {
      continue;
    }
    if (auto v = knat_square(n, fs, g, comp, phi)) {
      return v;
    }
  }
  return std::nullopt;
}

std::vector<int> all_indices(Fragment const& fr) {
  std::vector<int> v(fr.mors.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = static_cast<int>(i);
  }
  return v;
}

}  // namespace

KNatCheck knat_from_generators(Multicat const& n,
                               std::vector<Multifunctor> const& fs,
                               Multifunctor const& g, std::vector<Mor> comp) {
  KNatCheck out;
  auto c = [&](ObjId a) { return comp.at(a); };
  if (auto v = knat_on(n, fs, g, c, g.frag->gens)) {
    out.failure = "generator " + *v;
    return out;
  }
  out.generators_ok = true;
  if (auto v = knat_on(n, fs, g, c, all_indices(*g.frag))) {
    out.failure = *v;
    return out;
  }
  out.knat = KNat{fs, g, std::move(comp)};
  return out;
}

namespace {

class PointwiseImpl : public MulticatImpl {
 public:
  explicit PointwiseImpl(PointwiseSpec s)
      : MulticatImpl(s.name, s.labels, Kind::derived), spec_(std::move(s)) {
    points_ = spec_.values.empty() ? 0 : spec_.values[0].size();
  }

  Profile at(Profile const& p, std::size_t q) const {
    Profile r;
    for (ObjId a : p.source) {
      r.source.push_back(spec_.values.at(a).at(q));
    }
    r.target = spec_.values.at(p.target).at(q);
    return r;
  }

  std::vector<Mor> split(Mor const& f) const {
    auto tags = split_tag(f.tag);
    if (tags.size() != points_) {
      throw Error("pointwise morphism with wrong number of components");
    }
    std::vector<Mor> out;
    for (std::size_t q = 0; q < points_; ++q) {
      out.push_back(Mor{at(f.profile, q), tags[q]});
    }
    return out;
  }

  static Mor join(Profile p, std::vector<Mor> const& comps) {
    std::vector<std::string> tags;
    for (auto const& c : comps) {
      tags.push_back(c.tag);
    }
    return Mor{std::move(p), join_tag(tags)};
  }

  std::vector<Mor> hom(Profile const& p) const override {
    {
      std::lock_guard lock(mu_);
      auto it = cache_.find(p);
      if (it != cache_.end()) {
        return it->second;
      }
    }
    std::vector<std::vector<Mor>> lists;
    bool empty = false;
    for (std::size_t q = 0; q < points_ && !empty; ++q) {
      lists.push_back(spec_.target.hom(at(p, q)));
      empty = lists.back().empty();
    }
    std::vector<Mor> out;
    if (!empty) {
      std::vector<std::size_t> pick(points_, 0);
      std::vector<Mor> comps(points_);
      while (true) {
        for (std::size_t q = 0; q < points_; ++q) {
          comps[q] = lists[q][pick[q]];
        }
        if (!spec_.natural(p.source, p.target, comps)) {
          out.push_back(join(p, comps));
        }
        std::size_t q = points_;
        while (q > 0 && ++pick[q - 1] == lists[q - 1].size()) {
          pick[q - 1] = 0;
          --q;
        }
        if (q == 0) {
          break;
        }
      }
    }
    std::lock_guard lock(mu_);
    cache_.emplace(p, out);
    return out;
  }

  Mor ident(ObjId a) const override {
    std::vector<Mor> comps;
    for (std::size_t q = 0; q < points_; ++q) {
      comps.push_back(spec_.target.ident(spec_.values.at(a).at(q)));
    }
    return join(Profile{{a}, a}, comps);
  }

  Mor gamma(Mor const& outer, std::span<const Mor> inners) const override {
    Profile p = composite_profile(outer, inners);
    auto o = split(outer);
    std::vector<std::vector<Mor>> in;
    for (auto const& g : inners) {
      in.push_back(split(g));
    }
    std::vector<Mor> comps;
    std::vector<Mor> args(inners.size());
    for (std::size_t q = 0; q < points_; ++q) {
      for (std::size_t j = 0; j < inners.size(); ++j) {
        args[j] = in[j][q];
      }
      comps.push_back(spec_.target.gamma(o[q], args));
    }
    return join(std::move(p), comps);
  }

  Mor act(Mor const& f, Perm const& sigma) const override {
    Profile p{permute_source(f.profile.source, sigma), f.target()};
    std::vector<Mor> comps;
    for (auto const& c : split(f)) {
      comps.push_back(spec_.target.act(c, sigma));
    }
    return join(std::move(p), comps);
  }

  PointwiseSpec spec_;
  std::size_t points_ = 0;

 private:
  mutable std::mutex mu_;
  mutable std::map<Profile, std::vector<Mor>> cache_;
};

class HomImpl final : public PointwiseImpl {
 public:
  HomImpl(PointwiseSpec s, std::vector<Multifunctor> objs)
      : PointwiseImpl(std::move(s)), objects(std::move(objs)) {}
  std::vector<Multifunctor> objects;
};

class BilinImpl final : public PointwiseImpl {
 public:
  BilinImpl(PointwiseSpec s, std::vector<BilinMap> objs)
      : PointwiseImpl(std::move(s)), objects(std::move(objs)) {}
  std::vector<BilinMap> objects;
};

PointwiseImpl const& as_pointwise(Multicat const& pw) {
  auto const* p = dynamic_cast<PointwiseImpl const*>(pw.impl().get());
  if (!p) {
    throw Error(pw.name() + " is not a pointwise multicategory");
  }
  return *p;
}

}  // namespace

Multicat pointwise(PointwiseSpec spec) {
  return Multicat(std::make_shared<PointwiseImpl>(std::move(spec)));
}

std::vector<Mor> components(Multicat const& pw, Mor const& f) {
  return as_pointwise(pw).split(f);
}

Mor from_components(Multicat const& pw, Profile p,
                    std::vector<Mor> const& comps) {
  auto const& impl = as_pointwise(pw);
  for (std::size_t q = 0; q < comps.size(); ++q) {
    if (comps[q].profile != impl.at(p, q)) {
      throw ProfileError("component " + std::to_string(q)
                         + " has the wrong profile");
    }
  }
  return PointwiseImpl::join(std::move(p), comps);
}

Multicat hom_multicat(Multicat const& m, Multicat const& n, EnumOptions opt) {
  auto objs = enumerate_multifunctors(m, n, opt);
  auto frag = objs.empty() ? make_fragment(m, opt.budget) : objs.front().frag;
  PointwiseSpec spec;
  spec.name = "Hom(" + m.name() + "," + n.name() + ")";
  spec.target = n;
  for (auto const& f : objs) {
    spec.labels.push_back(f.label(n));
    spec.values.push_back(f.obj);
  }
  auto shared = std::make_shared<std::vector<Multifunctor>>(objs);
  spec.natural = [n, shared, frag](std::vector<ObjId> const& src, ObjId tgt,
                                   std::vector<Mor> const& comps)
      -> std::optional<std::string> {
    std::vector<Multifunctor> fs;
    for (ObjId s : src) {
      fs.push_back((*shared)[s]);
    }
    auto c = [&](ObjId a) { return comps[a]; };
    return knat_on(n, fs, (*shared)[tgt], c, all_indices(*frag));
  };
  return Multicat(std::make_shared<HomImpl>(std::move(spec), std::move(objs)));
}

std::vector<Multifunctor> const& hom_objects(Multicat const& h) {
  auto const* p = dynamic_cast<HomImpl const*>(h.impl().get());
  if (!p) {
    throw Error(h.name() + " is not a Hom multicategory");
  }
  return p->objects;
}

BilinMap make_bilinear(std::vector<Multifunctor> left,
                       std::vector<Multifunctor> right) {
  BilinMap f;
  f.nn = left.size();
  f.obj.resize(right.size() * left.size());
  for (std::size_t a = 0; a < right.size(); ++a) {
    for (std::size_t b = 0; b < left.size(); ++b) {
      if (left[b].obj.at(a) != right[a].obj.at(b)) {
        throw Error("bilinear slices disagree on objects");
      }
      f.obj[a * f.nn + b] = left[b].obj[a];
    }
  }
  f.left = std::move(left);
  f.right = std::move(right);
  return f;
}

std::optional<std::string> bilinear_violation(BilinMap const& f,
                                              Multicat const& p) {
  if (f.left.empty() || f.right.empty()) {
    return std::nullopt;
  }
  Fragment const& fm = *f.left.front().frag;
  Fragment const& fn = *f.right.front().frag;
  for (auto const& phi : fm.mors) {
    if (is_identity_mor(fm.m, phi)) {
      continue;
    }
    for (auto const& psi : fn.mors) {
      if (is_identity_mor(fn.m, psi)) {
        continue;
      }
      std::vector<Mor> xs;
      for (ObjId b : psi.profile.source) {
        xs.push_back(f.left[b](phi));
      }
      Mor const top = p.gamma(f.right[phi.target()](psi), xs);
      std::vector<Mor> ys;
      for (ObjId a : phi.profile.source) {
        ys.push_back(f.right[a](psi));
      }
      Mor const bottom =
          p.act(p.gamma(f.left[psi.target()](phi), ys),
                reverse_priority(psi.arity(), phi.arity()));
      if (top != bottom) {
        return "bilinearity at " + format_mor(fm.m, phi) + ", "
               + format_mor(fn.m, psi) + ": " + format_mor(p, top) + " vs "
               + format_mor(p, bottom);
      }
    }
  }
  return std::nullopt;
}

namespace {

// Every choice of a left slice per object of N and a matching right slice
// per object of M that passes the bilinearity squares.
std::vector<BilinMap> search_bilinear(
    std::vector<std::vector<Multifunctor>> const& lc,
    std::vector<std::vector<Multifunctor>> const& rc, Multicat const& p,
    Exec exec) {
  std::size_t total = 1;
  for (auto const& c : lc) {
    total *= c.size();
  }
  std::vector<std::map<std::vector<ObjId>, std::vector<std::size_t>>> rindex(
      rc.size());
  for (std::size_t a = 0; a < rc.size(); ++a) {
    for (std::size_t i = 0; i < rc[a].size(); ++i) {
      rindex[a][rc[a][i].obj].push_back(i);
    }
  }
  std::vector<std::vector<BilinMap>> found(total);
  std::vector<std::exception_ptr> err(total);
  auto work = [&](std::size_t idx) {
    std::vector<Multifunctor> left;
    std::size_t r = idx;
    std::vector<std::size_t> pick(lc.size());
    for (std::size_t b = lc.size(); b-- > 0;) {
      pick[b] = r % lc[b].size();
      r /= lc[b].size();
    }
    for (std::size_t b = 0; b < lc.size(); ++b) {
      left.push_back(lc[b][pick[b]]);
    }
    std::vector<std::vector<std::size_t> const*> opts;
    for (std::size_t a = 0; a < rc.size(); ++a) {
      std::vector<ObjId> col;
      for (auto const& l : left) {
        col.push_back(l.obj[a]);
      }
      auto it = rindex[a].find(col);
      if (it == rindex[a].end()) {
        return;
      }
      opts.push_back(&it->second);
    }
    std::vector<std::size_t> rp(rc.size(), 0);
    while (true) {
      std::vector<Multifunctor> right;
      for (std::size_t a = 0; a < rc.size(); ++a) {
        right.push_back(rc[a][(*opts[a])[rp[a]]]);
      }
      BilinMap f = make_bilinear(left, std::move(right));
      if (!bilinear_violation(f, p)) {
        found[idx].push_back(std::move(f));
      }
      std::size_t a = rc.size();
      while (a > 0 && ++rp[a - 1] == opts[a - 1]->size()) {
        rp[a - 1] = 0;
        --a;
      }
      if (a == 0) {
        break;
      }
    }
  };
  auto guarded = [&](std::size_t i) {
    try {
      work(i);
    } catch (...) {
      err[i] = std::current_exception();
    }
  };
  long const t = static_cast<long>(total);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < t; ++i) {
      guarded(static_cast<std::size_t>(i));
    }
  } else {
    for (long i = 0; i < t; ++i) {
      guarded(static_cast<std::size_t>(i));
    }
  }
  for (auto const& e : err) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  std::vector<BilinMap> out;
  for (auto& v : found) {
    for (auto& f : v) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

}  // namespace

std::vector<BilinMap> enumerate_bilinear(Multicat const& m, Multicat const& n,
                                         Multicat const& p, EnumOptions opt) {
  auto lm = enumerate_multifunctors(m, p, opt);
  auto rn = enumerate_multifunctors(n, p, opt);
  std::vector<std::vector<Multifunctor>> lc(n.size(), lm);
  std::vector<std::vector<Multifunctor>> rc(m.size(), rn);
  return search_bilinear(lc, rc, p, opt.exec);
}

bool is_based_bilinear(BilinMap const& f, BasedMulticat const& m,
                       BasedMulticat const& n, BasedMulticat const& p) {
  auto all_base = [&](Multifunctor const& g) {
    for (ObjId x : g.obj) {
      if (x != p.base) {
        return false;
      }
    }
    for (auto const& y : *g.images) {
      if (!p.from_base(y)) {
        return false;
      }
    }
    return true;
  };
  for (std::size_t b = 0; b < f.left.size(); ++b) {
    if (static_cast<ObjId>(b) == n.base ? !all_base(f.left[b])
                                        : !is_based(f.left[b], m, p)) {
      return false;
    }
  }
  for (std::size_t a = 0; a < f.right.size(); ++a) {
    if (static_cast<ObjId>(a) == m.base ? !all_base(f.right[a])
                                        : !is_based(f.right[a], n, p)) {
      return false;
    }
  }
  return true;
}

std::vector<BilinMap> enumerate_based_bilinear(BasedMulticat const& m,
                                               BasedMulticat const& n,
                                               BasedMulticat const& p,
                                               EnumOptions opt) {
  auto lm = enumerate_based_multifunctors(m, p, opt);
  auto rn = enumerate_based_multifunctors(n, p, opt);
  std::vector<std::vector<Multifunctor>> lc(n.carrier.size(), lm);
  std::vector<std::vector<Multifunctor>> rc(m.carrier.size(), rn);
  lc.at(n.base) = {constant_base(make_fragment(m.carrier, opt.budget), p)};
  rc.at(m.base) = {constant_base(make_fragment(n.carrier, opt.budget), p)};
  auto all = search_bilinear(lc, rc, p.carrier, opt.exec);
  std::vector<BilinMap> out;
  for (auto& f : all) {
    if (is_based_bilinear(f, m, n, p)) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

BilinMap compose_bilinear(Multifunctor const& h, BilinMap const& f,
                          Multicat const& target) {
  std::vector<Multifunctor> left;
  std::vector<Multifunctor> right;
  for (auto const& l : f.left) {
    left.push_back(compose_multifunctors(h, l, target));
  }
  for (auto const& r : f.right) {
    right.push_back(compose_multifunctors(h, r, target));
  }
  return make_bilinear(std::move(left), std::move(right));
}

Multicat bilin_multicat(Multicat const& m, Multicat const& n,
                        Multicat const& p, EnumOptions opt) {
  auto objs = enumerate_bilinear(m, n, p, opt);
  auto fm = make_fragment(m, opt.budget);
  auto fn = make_fragment(n, opt.budget);
  std::size_t const nn = n.size();
  std::size_t const na = m.size();
  PointwiseSpec spec;
  spec.name = "Bilin(" + m.name() + "," + n.name() + ";" + p.name() + ")";
  spec.target = p;
  for (auto const& f : objs) {
    std::string s = "[";
    for (std::size_t b = 0; b < nn; ++b) {
      s += f.left[b].label(p);
    }
    spec.labels.push_back(s + "]");
    spec.values.push_back(f.obj);
  }
  auto shared = std::make_shared<std::vector<BilinMap>>(objs);
  spec.natural = [p, shared, fm, fn, nn, na](std::vector<ObjId> const& src,
                                             ObjId tgt,
                                             std::vector<Mor> const& comps)
      -> std::optional<std::string> {
    auto const& all = *shared;
    for (std::size_t b = 0; b < nn; ++b) {
      std::vector<Multifunctor> fs;
      for (ObjId s : src) {
        fs.push_back(all[s].left[b]);
      }
      auto c = [&](ObjId a) { return comps[a * nn + b]; };
      if (auto v = knat_on(p, fs, all[tgt].left[b], c, all_indices(*fm))) {
        return v;
      }
    }
    for (std::size_t a = 0; a < na; ++a) {
      std::vector<Multifunctor> fs;
      for (ObjId s : src) {
        fs.push_back(all[s].right[a]);
      }
      auto c = [&](ObjId b) { return comps[a * nn + b]; };
      if (auto v = knat_on(p, fs, all[tgt].right[a], c, all_indices(*fn))) {
        return v;
      }
    }
    return std::nullopt;
  };
  return Multicat(
      std::make_shared<BilinImpl>(std::move(spec), std::move(objs)));
}

std::vector<BilinMap> const& bilin_objects(Multicat const& b) {
  auto const* p = dynamic_cast<BilinImpl const*>(b.impl().get());
  if (!p) {
    throw Error(b.name() + " is not a Bilin multicategory");
  }
  return p->objects;
}

namespace {

// One side of the currying isomorphism.  Hom(X, Hom(Y, P)) with X the first
// variable when `first` is set, the second otherwise.
struct Side {
  bool first;
  Multicat inner;  // Hom(Y, P)
  Multicat outer;  // Hom(X, Hom(Y, P))
  std::vector<int> to_bilin;
};

}  // namespace

CurryReport check_currying(Multicat const& m, Multicat const& n,
                           Multicat const& p, EnumOptions opt,
                           std::size_t max_k) {
  CurryReport rep;
  auto fail = [&](std::string s) {
    if (rep.failures.size() < 50) {
      rep.failures.push_back(std::move(s));
    }
  };
  Multicat const bc = bilin_multicat(m, n, p, opt);
  auto const& bobj = bilin_objects(bc);
  rep.bilin = bobj.size();
  std::size_t const nn = n.size();
  std::size_t const na = m.size();

  Side sides[2] = {{true, hom_multicat(n, p, opt), {}, {}},
                   {false, hom_multicat(m, p, opt), {}, {}}};
  sides[0].outer = hom_multicat(m, sides[0].inner, opt);
  sides[1].outer = hom_multicat(n, sides[1].inner, opt);

  // The component of a morphism of the outer Hom at the pair (a, b).
  auto flatten = [&](Side const& s, Mor const& xi) {
    std::vector<Mor> flat(na * nn);
    auto outer = components(s.outer, xi);
    for (std::size_t x = 0; x < outer.size(); ++x) {
      auto inner = components(s.inner, outer[x]);
      for (std::size_t y = 0; y < inner.size(); ++y) {
        std::size_t const a = s.first ? x : y;
        std::size_t const b = s.first ? y : x;
        flat[a * nn + b] = inner[y];
      }
    }
    return flat;
  };

  // The bilinear map of a multifunctor X -> Hom(Y, P).
  auto curry = [&](Side const& s, Multifunctor const& big) -> BilinMap {
    auto const& slices = hom_objects(s.inner);
    std::size_t const nx = s.first ? na : nn;
    std::size_t const ny = s.first ? nn : na;
    std::vector<Multifunctor> fixed;  // f(x, -) for each x
    for (std::size_t x = 0; x < nx; ++x) {
      fixed.push_back(slices.at(big.obj[x]));
    }
    std::vector<Multifunctor> other;  // f(-, y) on the fragment of X
    for (std::size_t y = 0; y < ny; ++y) {
      std::vector<ObjId> obj;
      for (std::size_t x = 0; x < nx; ++x) {
        obj.push_back(fixed[x].obj[y]);
      }
      std::vector<Mor> gens;
      for (auto const& g : big.gens) {
        gens.push_back(components(s.inner, g).at(y));
      }
      auto e = extend(big.frag, p, obj, gens);
      if (!e) {
        throw Error("a curried slice is not a multifunctor");
      }
      other.push_back(std::move(*e));
    }
    return s.first ? make_bilinear(std::move(other), std::move(fixed))
                   : make_bilinear(std::move(fixed), std::move(other));
  };

  // objects
  for (auto& s : sides) {
    auto const& objs = hom_objects(s.outer);
    (s.first ? rep.hom_mn : rep.hom_nm) = objs.size();
    std::vector<int> hit(bobj.size(), 0);
    for (auto const& big : objs) {
      BilinMap f = curry(s, big);
      auto it = std::find(bobj.begin(), bobj.end(), f);
      if (it == bobj.end()) {
        fail("a curried multifunctor is not an enumerated bilinear map");
        s.to_bilin.push_back(-1);
        continue;
      }
      int const k = static_cast<int>(it - bobj.begin());
      ++hit[k];
      s.to_bilin.push_back(k);
    }
    for (std::size_t k = 0; k < hit.size(); ++k) {
      if (hit[k] != 1) {
        fail("bilinear map " + bc.label(static_cast<ObjId>(k)) + " is hit "
             + std::to_string(hit[k]) + " times");
      }
    }
  }
  if (!rep.ok()) {
    return rep;
  }

  // k-morphisms
  for (auto& s : sides) {
    std::vector<ObjId> back(bobj.size());
    for (std::size_t i = 0; i < s.to_bilin.size(); ++i) {
      back[s.to_bilin[i]] = static_cast<ObjId>(i);
    }
    auto translate = [&](Mor const& xi) {
      Profile q;
      for (ObjId x : xi.profile.source) {
        q.source.push_back(s.to_bilin[x]);
      }
      q.target = s.to_bilin[xi.target()];
      return from_components(bc, std::move(q), flatten(s, xi));
    };
    for (std::size_t k = 0; k <= max_k; ++k) {
      for (auto const& src : all_sources(bobj.size(), k)) {
        for (ObjId t = 0; t < static_cast<ObjId>(bobj.size()); ++t) {
          ++rep.profiles;
          Profile pb{src, t};
          Profile ph;
          for (ObjId x : src) {
            ph.source.push_back(back[x]);
          }
          ph.target = back[t];
          std::vector<Mor> lhs;
          for (auto const& xi : s.outer.hom(ph)) {
            lhs.push_back(translate(xi));
          }
          auto rhs = bc.hom(pb);
          rep.morphisms += rhs.size();
          std::sort(lhs.begin(), lhs.end());
          std::sort(rhs.begin(), rhs.end());
          if (lhs != rhs) {
            fail("hom sets differ at " + format_profile(bc, pb));
          }
        }
      }
    }
    // composition and actions
    auto mors = morphisms_upto(s.outer, max_k);
    std::vector<std::vector<int>> by_target(s.outer.size());
    for (std::size_t i = 0; i < mors.size(); ++i) {
      by_target[mors[i].target()].push_back(static_cast<int>(i));
      for (auto const& sg : Perm::all(mors[i].arity())) {
        ++rep.composites;
        if (translate(s.outer.act(mors[i], sg))
            != bc.act(translate(mors[i]), sg)) {
          fail("action not preserved at " + format_mor(s.outer, mors[i]));
        }
      }
    }
    for (auto const& eta : mors) {
      std::vector<int> cur;
      std::function<void(std::size_t)> rec = [&](std::size_t room) {
        if (cur.size() == eta.arity()) {
          std::vector<Mor> in;
          std::vector<Mor> tin;
          for (int x : cur) {
            in.push_back(mors[x]);
            tin.push_back(translate(mors[x]));
          }
          ++rep.composites;
          if (translate(s.outer.gamma(eta, in))
              != bc.gamma(translate(eta), tin)) {
            fail("composition not preserved at " + format_mor(s.outer, eta));
          }
          return;
        }
        for (int x : by_target[eta.profile.source[cur.size()]]) {
          if (mors[x].arity() > room) {
            continue;
          }
          cur.push_back(x);
          rec(room - mors[x].arity());
          cur.pop_back();
        }
      };
      rec(max_k);
    }
  }

  // naturality in P
  for (auto const& h : enumerate_multifunctors(p, p, opt)) {
    for (auto& s : sides) {
      auto const& slices = hom_objects(s.inner);
      auto const& objs = hom_objects(s.outer);
      for (std::size_t i = 0; i < objs.size(); ++i) {
        Multifunctor const& big = objs[i];
        ++rep.naturality;
        std::vector<ObjId> obj;
        bool found = true;
        for (ObjId x : big.obj) {
          auto moved = compose_multifunctors(h, slices[x], p);
          auto it = std::find(slices.begin(), slices.end(), moved);
          if (it == slices.end()) {
            found = false;
            break;
          }
          obj.push_back(static_cast<ObjId>(it - slices.begin()));
        }
        if (!found) {
          fail("postcomposition leaves the enumerated multifunctors");
          continue;
        }
        std::vector<Mor> gens;
        for (std::size_t gi = 0; gi < big.gens.size(); ++gi) {
          std::vector<Mor> comps;
          for (auto const& c : components(s.inner, big.gens[gi])) {
            comps.push_back(h(c));
          }
          Profile const& src = big.frag->mors[big.frag->gens[gi]].profile;
          Profile q;
          for (ObjId x : src.source) {
            q.source.push_back(obj[x]);
          }
          q.target = obj[src.target];
          gens.push_back(from_components(s.inner, std::move(q), comps));
        }
        auto moved = extend(big.frag, s.inner, obj, gens);
        if (!moved) {
          fail("postcomposition is not a multifunctor");
          continue;
        }
        if (curry(s, *moved) != compose_bilinear(h, bobj[s.to_bilin[i]], p)) {
          fail("currying is not natural in the target");
        }
      }
    }
  }
  return rep;
}

std::optional<NatSample> sample_generator_natural(
    std::vector<Multifunctor> const& maps, Multicat const& target,
    std::mt19937& rng) {
  if (maps.empty()) {
    return std::nullopt;
  }
  std::uniform_int_distribution<std::size_t> which(0, maps.size() - 1);
  std::uniform_int_distribution<std::size_t> arity(0, 2);
  NatSample s;
  std::size_t const k = arity(rng);
  for (std::size_t i = 0; i < k; ++i) {
    s.fs.push_back(maps[which(rng)]);
  }
  s.g = maps[which(rng)];
  Multicat const& src = s.g.frag->m;
  std::vector<std::vector<Mor>> lists;
  for (ObjId a = 0; a < static_cast<ObjId>(src.size()); ++a) {
    Profile p;
    for (auto const& f : s.fs) {
      p.source.push_back(f(a));
    }
    p.target = s.g(a);
    lists.push_back(target.hom(p));
    if (lists.back().empty()) {
      return std::nullopt;
    }
  }
  std::vector<std::vector<Mor>> good;
  std::vector<std::size_t> pick(lists.size(), 0);
  while (true) {
    std::vector<Mor> comp;
    for (std::size_t a = 0; a < lists.size(); ++a) {
      comp.push_back(lists[a][pick[a]]);
    }
    bool ok = true;
    for (int gi : s.g.frag->gens) {
      auto c = [&](ObjId a) { return comp[a]; };
      if (knat_square(target, s.fs, s.g, c, s.g.frag->mors[gi])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      good.push_back(std::move(comp));
    }
    std::size_t a = lists.size();
    while (a > 0 && ++pick[a - 1] == lists[a - 1].size()) {
      pick[a - 1] = 0;
      --a;
    }
    if (a == 0) {
      break;
    }
  }
  if (good.empty()) {
    return std::nullopt;
  }
  std::uniform_int_distribution<std::size_t> g(0, good.size() - 1);
  s.comp = good[g(rng)];
  return s;
}


}  // namespace mc
