#include "mc/based.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace mc {

std::string subset_label(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (s >> i & 1U) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

namespace {

std::function<Mor(std::size_t)> thin_base(ObjId b) {
  return [b](std::size_t k) {
    return Mor{Profile{std::vector<ObjId>(k, b), b}, "*"};
  };
}

}  // namespace

BasedMulticat based_terminal() {
  return {terminal(), 0, thin_base(0)};
}

BasedMulticat make_unit_u() {
  auto pred = [](Profile const& p) {
    if (p.target == 0) {
      for (ObjId a : p.source) {
        if (a != 0) {
          return false;
        }
      }
      return true;
    }
    return p.arity() == 1 && p.source[0] == 1;
  };
  std::vector<Profile> gens{Profile{{}, 0}, Profile{{0, 0}, 0}};
  return {thin("u", {"0", "1"}, pred, gens), 0, thin_base(0)};
}

BasedMulticat make_E() {
  auto pred = [](Profile const& p) {
    int sum = 0;
    for (ObjId a : p.source) {
      sum += a;
    }
    return sum == p.target;
  };
  std::vector<Profile> gens{Profile{{}, 0}, Profile{{0, 0}, 0},
                            Profile{{0, 1}, 1}};
  return {thin("E", {"0", "1"}, pred, gens), 0, thin_base(0)};
}

BasedMulticat E_power(std::size_t m) {
  if (m > 8) {
    throw Error("E_power: m too large");
  }
  Subset const n = Subset{1} << m;
  std::vector<std::string> labels;
  for (Subset s = 0; s < n; ++s) {
    labels.push_back(subset_label(s));
  }
  auto pred = [](Profile const& p) {
    Subset acc = 0;
    for (ObjId a : p.source) {
      if (acc & static_cast<Subset>(a)) {
        return false;
      }
      acc |= static_cast<Subset>(a);
    }
    return acc == static_cast<Subset>(p.target);
  };
  std::vector<Profile> gens{Profile{{}, 0}};
  for (Subset t = 0; t < n; ++t) {
    for (Subset u = 0; u < n; ++u) {
      if ((t & u) == 0) {
        gens.push_back(Profile{{static_cast<ObjId>(t), static_cast<ObjId>(u)},
                               static_cast<ObjId>(t | u)});
      }
    }
  }
  return {thin("E^" + std::to_string(m), std::move(labels), pred, gens), 0,
          thin_base(0)};
}

}  // namespace mc

// E theory

namespace mc {

BilinMap beta_map(Budget b) {
  BasedMulticat const e = make_E();
  auto frag = make_fragment(e.carrier, b);
  Multifunctor const zero = constant_base(frag, e);
  Multifunctor const one = identity_multifunctor(frag);
  return make_bilinear({zero, one}, {zero, one});
}

BalancedReport check_balanced(BasedMulticat const& m, EnumOptions opt) {
  BasedMulticat const e = make_E();
  BalancedReport rep;
  auto fs = enumerate_based_bilinear(e, e, m, opt);
  rep.maps = fs.size();
  for (std::size_t n = 0; n < fs.size(); ++n) {
    auto const& f = fs[n];
    for (ObjId a = 0; a < 2; ++a) {
      for (ObjId b = 0; b < 2; ++b) {
        ++rep.instances;
        if (f(a, b) != f(b, a)) {
          rep.failures.push_back("map " + std::to_string(n) + ": f(" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 ") is not symmetric");
        }
      }
      for (auto const& phi : f.left[a].frag->mors) {
        ++rep.instances;
        if (f.right[a](phi) != f.left[a](phi)) {
          rep.failures.push_back("map " + std::to_string(n) + ": f(" +
                                 std::to_string(a) + ", " +
                                 format_mor(e.carrier, phi) + ") differs");
        }
      }
    }
  }
  return rep;
}

FactorReport smash_EE(BasedMulticat const& m, EnumOptions opt) {
  BasedMulticat const e = make_E();
  FactorReport rep;
  BilinMap const beta = beta_map(opt.budget);
  auto hs = enumerate_based_multifunctors(e, m, opt);
  auto fs = enumerate_based_bilinear(e, e, m, opt);
  rep.maps = fs.size();
  std::vector<BilinMap> through;
  for (auto const& h : hs) {
    through.push_back(compose_bilinear(h, beta, m.carrier));
    if (std::find(fs.begin(), fs.end(), through.back()) == fs.end()) {
      rep.failures.push_back("h o beta is not among the based bilinear maps "
                             "for h = " + h.label(m.carrier));
    }
  }
  for (std::size_t n = 0; n < fs.size(); ++n) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < hs.size(); ++i) {
      if (through[i] == fs[n]) {
        hits.push_back(i);
      }
    }
    if (hits.size() != 1) {
      rep.failures.push_back("map " + std::to_string(n) + " factors " +
                             std::to_string(hits.size()) + " times");
    } else {
      rep.factors.push_back(hs[hits[0]]);
    }
  }
  return rep;
}

BilinMap e_module_structure(std::size_t m, Budget b) {
  BasedMulticat const e = make_E();
  BasedMulticat const em = E_power(m);
  auto fe = make_fragment(e.carrier, b);
  auto fm = make_fragment(em.carrier, b);
  std::vector<Multifunctor> left;
  for (ObjId s = 0; s < static_cast<ObjId>(em.carrier.size()); ++s) {
    if (s == 0) {
      left.push_back(constant_base(fe, em));
      continue;
    }
    std::vector<ObjId> obj{0, s};
    std::vector<Mor> gens;
    for (int g : fe->gens) {
      Profile p;
      for (ObjId a : fe->mors[g].profile.source) {
        p.source.push_back(obj[a]);
      }
      p.target = obj[fe->mors[g].target()];
      gens.push_back(Mor{p, "*"});
    }
    auto f = extend(fe, em.carrier, obj, gens);
    if (!f) {
      throw Error("E-module structure: slice at " + subset_label(s) +
                  " is not a multifunctor");
    }
    left.push_back(*f);
  }
  std::vector<Multifunctor> right{constant_base(fm, em),
                                  identity_multifunctor(fm)};
  return make_bilinear(std::move(left), std::move(right));
}

ModuleReport check_e_module(std::size_t m, Budget b) {
  BasedMulticat const e = make_E();
  BasedMulticat const em = E_power(m);
  BilinMap const f = e_module_structure(m, b);
  ModuleReport rep;
  if (auto v = bilinear_violation(f, em.carrier)) {
    rep.failures.push_back(*v);
  }
  if (!is_based_bilinear(f, e, em, em)) {
    rep.failures.push_back("structure map is not based");
  }
  std::set<ObjId> objs;
  for (ObjId s = 1; s < static_cast<ObjId>(em.carrier.size()); ++s) {
    objs.insert(f(1, s));
    if (f(0, s) != em.base) {
      rep.failures.push_back("(0, S) is not the basepoint");
    }
  }
  rep.objects = objs.size();
  if (objs.size() != em.carrier.size() - 1 || objs.count(em.base)) {
    rep.failures.push_back("slice at 1 is not bijective on objects");
  }
  Multifunctor const& one = f.right[1];
  std::set<Mor> images(one.images->begin(), one.images->end());
  std::set<Mor> mors(one.frag->mors.begin(), one.frag->mors.end());
  rep.morphisms = images.size();
  if (images.size() != one.frag->mors.size() || images != mors) {
    rep.failures.push_back("slice at 1 is not bijective on morphisms");
  }
  return rep;
}

bool absorption_agrees(std::size_t m, std::size_t n) {
  BilinMap const fm = e_module_structure(m);
  BilinMap const fn = e_module_structure(n);
  ObjId const sm = 1 << m;
  ObjId const sn = 1 << n;
  for (ObjId s = 0; s < sm; ++s) {
    for (ObjId a = 0; a < 2; ++a) {
      for (ObjId t = 0; t < sn; ++t) {
        ObjId const ls = fm(a, s);
        ObjId const rt = fn(a, t);
        bool const lb = ls == 0 || t == 0;
        bool const rb = s == 0 || rt == 0;
        if (lb != rb || (!lb && (ls != s || rt != t))) {
          return false;
        }
      }
    }
  }
  return true;
}

// based categories

std::vector<int> BasedCat::hom(int a, int b) const {
  std::vector<int> out;
  for (std::size_t f = 0; f < arrows.size(); ++f) {
    if (arrows[f].src == a && arrows[f].tgt == b) {
      out.push_back(static_cast<int>(f));
    }
  }
  return out;
}

std::optional<std::string> category_violation(BasedCat const& c) {
  int const n = static_cast<int>(c.objects.size());
  int const m = static_cast<int>(c.arrows.size());
  if (c.base < 0 || c.base >= n || static_cast<int>(c.ident.size()) != n ||
      static_cast<int>(c.compose.size()) != m) {
    return "malformed tables";
  }
  for (int a = 0; a < n; ++a) {
    auto const& i = c.arrows.at(c.ident[a]);
    if (i.src != a || i.tgt != a) {
      return "identity of " + c.objects[a] + " has the wrong ends";
    }
  }
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      int const r = c.compose[g].at(f);
      bool const ok = c.arrows[f].tgt == c.arrows[g].src;
      if (ok != (r >= 0)) {
        return "composite " + c.arrows[g].name + " o " + c.arrows[f].name +
               " defined wrongly";
      }
      if (ok && (c.arrows[r].src != c.arrows[f].src ||
                 c.arrows[r].tgt != c.arrows[g].tgt)) {
        return "composite " + c.arrows[g].name + " o " + c.arrows[f].name +
               " has the wrong ends";
      }
    }
  }
  for (int f = 0; f < m; ++f) {
    auto const& a = c.arrows[f];
    if (c.compose[c.ident[a.tgt]][f] != f || c.compose[f][c.ident[a.src]] != f) {
      return "unit law at " + a.name;
    }
    for (int g = 0; g < m; ++g) {
      int const gf = c.compose[g][f];
      if (gf < 0) {
        continue;
      }
      for (int h = 0; h < m; ++h) {
        int const hg = c.compose[h][g];
        if (hg >= 0 && c.compose[h][gf] != c.compose[hg][f]) {
          return "associativity at " + c.arrows[h].name + "," +
                 c.arrows[g].name + "," + a.name;
        }
      }
    }
  }
  return std::nullopt;
}

bool has_null_base(BasedCat const& c) {
  for (int a = 0; a < static_cast<int>(c.objects.size()); ++a) {
    if (c.hom(a, c.base).size() != 1 || c.hom(c.base, a).size() != 1) {
      return false;
    }
  }
  return true;
}

int zero_arrow(BasedCat const& c, int a, int b) {
  auto in = c.hom(a, c.base);
  auto out = c.hom(c.base, b);
  if (in.size() != 1 || out.size() != 1) {
    throw Error(c.name + ": basepoint is not null");
  }
  return c.compose[out[0]][in[0]];
}

namespace {

struct Smash {
  BasedCat cat;
  std::vector<std::pair<int, int>> obj_src;  // (-1, -1) for the basepoint
  std::vector<std::pair<int, int>> arr_src;  // (-1, -1) for zero arrows
};

Smash smash_with_sources(BasedCat const& c, BasedCat const& d) {
  if (!has_null_base(c) || !has_null_base(d)) {
    throw Error("null smash: basepoint is not null");
  }
  Smash s;
  BasedCat& r = s.cat;
  r.name = c.name + "^" + d.name;
  r.objects.push_back("*");
  s.obj_src.emplace_back(-1, -1);
  r.base = 0;
  for (int a = 0; a < static_cast<int>(c.objects.size()); ++a) {
    for (int b = 0; b < static_cast<int>(d.objects.size()); ++b) {
      if (a != c.base && b != d.base) {
        r.objects.push_back("(" + c.objects[a] + "," + d.objects[b] + ")");
        s.obj_src.emplace_back(a, b);
      }
    }
  }
  int const n = static_cast<int>(r.objects.size());
  std::vector<std::vector<int>> zero(n, std::vector<int>(n, -1));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      zero[x][y] = static_cast<int>(r.arrows.size());
      r.arrows.push_back({"0", x, y});
      s.arr_src.emplace_back(-1, -1);
      if (x == 0 || y == 0) {
        continue;
      }
      auto [a1, b1] = s.obj_src[x];
      auto [a2, b2] = s.obj_src[y];
      int const zc = zero_arrow(c, a1, a2);
      int const zd = zero_arrow(d, b1, b2);
      for (int f : c.hom(a1, a2)) {
        for (int g : d.hom(b1, b2)) {
          if (f != zc && g != zd) {
            r.arrows.push_back(
                {"(" + c.arrows[f].name + "," + d.arrows[g].name + ")", x, y});
            s.arr_src.emplace_back(f, g);
          }
        }
      }
    }
  }
  auto find_arrow = [&](int x, int y, int f, int g) {
    auto [a1, b1] = s.obj_src[x];
    auto [a2, b2] = s.obj_src[y];
    if (x == 0 || y == 0 || f == zero_arrow(c, a1, a2) ||
        g == zero_arrow(d, b1, b2)) {
      return zero[x][y];
    }
    for (std::size_t k = 0; k < r.arrows.size(); ++k) {
      if (s.arr_src[k] == std::make_pair(f, g)) {
        return static_cast<int>(k);
      }
    }
    throw Error("null smash: missing arrow");
  };
  for (int x = 0; x < n; ++x) {
    auto [a, b] = s.obj_src[x];
    r.ident.push_back(x == 0 ? zero[0][0]
                             : find_arrow(x, x, c.ident[a], d.ident[b]));
  }
  int const m = static_cast<int>(r.arrows.size());
  r.compose.assign(m, std::vector<int>(m, -1));
  for (int g = 0; g < m; ++g) {
    for (int f = 0; f < m; ++f) {
      auto const& af = r.arrows[f];
      auto const& ag = r.arrows[g];
      if (af.tgt != ag.src) {
        continue;
      }
      auto [f1, f2] = s.arr_src[f];
      auto [g1, g2] = s.arr_src[g];
      if (f1 < 0 || g1 < 0) {
        r.compose[g][f] = zero[af.src][ag.tgt];
      } else {
        r.compose[g][f] = find_arrow(af.src, ag.tgt, c.compose[g1][f1],
                                     d.compose[g2][f2]);
      }
    }
  }
  return s;
}

}  // namespace

BasedCat null_smash(BasedCat const& c, BasedCat const& d) {
  return smash_with_sources(c, d).cat;
}

BasedCat make_e() {
  BasedCat e;
  e.name = "e";
  e.objects = {"*", "()"};
  e.base = 0;
  e.arrows = {{"1_*", 0, 0}, {"1_()", 1, 1}, {"0_()", 1, 1}, {"i", 0, 1},
              {"t", 1, 0}};
  e.ident = {0, 1};
  int const x = -1;
  // [g][f]
  e.compose = {{0, x, x, x, 4},
               {x, 1, 2, 3, x},
               {x, 2, 2, 3, x},
               {3, x, x, x, 2},
               {x, 4, 4, 0, x}};
  return e;
}

BasedCat make_s0() {
  BasedCat s;
  s.name = "S0";
  s.objects = {"*", "()"};
  s.base = 0;
  s.arrows = {{"1_*", 0, 0}, {"1_()", 1, 1}};
  s.ident = {0, 1};
  s.compose = {{0, -1}, {-1, 1}};
  return s;
}

bool is_e_module(BasedCat const& c) {
  return !category_violation(c) && has_null_base(c);
}

std::optional<std::string> isomorphism_violation(BasedCat const& c,
                                                 BasedCat const& d,
                                                 std::vector<int> const& obj,
                                                 std::vector<int> const& arr) {
  if (obj.size() != c.objects.size() || arr.size() != c.arrows.size() ||
      c.objects.size() != d.objects.size() ||
      c.arrows.size() != d.arrows.size()) {
    return "sizes differ";
  }
  if (std::set<int>(obj.begin(), obj.end()).size() != obj.size() ||
      std::set<int>(arr.begin(), arr.end()).size() != arr.size()) {
    return "not injective";
  }
  if (obj[c.base] != d.base) {
    return "basepoint not preserved";
  }
  for (std::size_t a = 0; a < obj.size(); ++a) {
    if (arr[c.ident[a]] != d.ident[obj[a]]) {
      return "identity of " + c.objects[a] + " not preserved";
    }
  }
  for (std::size_t f = 0; f < arr.size(); ++f) {
    auto const& x = c.arrows[f];
    auto const& y = d.arrows.at(arr[f]);
    if (y.src != obj[x.src] || y.tgt != obj[x.tgt]) {
      return "ends of " + x.name + " not preserved";
    }
    for (std::size_t g = 0; g < arr.size(); ++g) {
      int const gf = c.compose[g][f];
      if (gf >= 0 && arr[gf] != d.compose[arr[g]][arr[f]]) {
        return "composite " + c.arrows[g].name + " o " + x.name;
      }
    }
  }
  return std::nullopt;
}

std::pair<std::vector<int>, std::vector<int>> unit_iso(BasedCat const& c) {
  Smash const s = smash_with_sources(make_e(), c);
  std::vector<int> obj;
  for (auto const& [a, b] : s.obj_src) {
    obj.push_back(a < 0 ? c.base : b);
  }
  std::vector<int> arr;
  for (std::size_t k = 0; k < s.cat.arrows.size(); ++k) {
    auto [f, g] = s.arr_src[k];
    auto const& x = s.cat.arrows[k];
    arr.push_back(f < 0 ? zero_arrow(c, obj[x.src], obj[x.tgt]) : g);
  }
  return {obj, arr};
}

// E*

EStar::EStar(GObj shape) : shape_(std::move(shape)) {
  if (shape_.is_base()) {
    return;
  }
  dims_ = shape_.dims();
  if (dims_.empty()) {
    dims_ = {1};
  }
  int total = 0;
  for (int d : dims_) {
    offset_.push_back(total);
    total += d;
  }
  if (total > 16) {
    throw Error("E*: shape " + shape_.str() + " too large");
  }
  codes_ = 1 << total;
  for (int c = 0; c < codes_; ++c) {
    if (!degenerate(c)) {
      objects_.push_back(c);
    }
  }
  std::stable_sort(objects_.begin(), objects_.end(), [](int a, int b) {
    return std::popcount(static_cast<unsigned>(a)) <
           std::popcount(static_cast<unsigned>(b));
  });
  int const k = slots();
  for (int c = 0; c < codes_; ++c) {
    for (int i = 0; i < k; ++i) {
      entry_base_.push_back(static_cast<int>(entry_list_.size()));
      Subset const s = part(c, i);
      int const bits = std::popcount(s);
      for (int idx = 0; idx < (1 << bits); ++idx) {
        Subset t = 0;
        int b = 0;
        for (int p = 0; p < dims_[i]; ++p) {
          if (s >> p & 1U) {
            if (idx >> b & 1) {
              t |= 1U << p;
            }
            ++b;
          }
        }
        entry_list_.push_back({c, i, t});
      }
    }
  }
}

int EStar::with(int code, int i, Subset t) const {
  Subset const mask = ((1U << dims_[i]) - 1) << offset_[i];
  return static_cast<int>((static_cast<Subset>(code) & ~mask) |
                          (t << offset_[i]));
}

int EStar::code(std::vector<Subset> const& tuple) const {
  if (static_cast<int>(tuple.size()) != slots()) {
    throw Error("E*: tuple of the wrong length for " + shape_.str());
  }
  Subset c = 0;
  for (int i = 0; i < slots(); ++i) {
    if (tuple[i] >> dims_[i]) {
      throw Error("E*: subset out of range for " + shape_.str());
    }
    c |= tuple[i] << offset_[i];
  }
  return static_cast<int>(c);
}

std::vector<Subset> EStar::tuple(int code) const {
  std::vector<Subset> t;
  for (int i = 0; i < slots(); ++i) {
    t.push_back(part(code, i));
  }
  return t;
}

bool EStar::degenerate(int code) const {
  for (int i = 0; i < slots(); ++i) {
    if (part(code, i) == 0) {
      return true;
    }
  }
  return false;
}

std::string EStar::label(int code) const {
  if (shape_.length() == 0) {
    return code == 0 ? "*" : "()";
  }
  std::string s = "(";
  for (int i = 0; i < slots(); ++i) {
    if (i) {
      s += ',';
    }
    s += subset_label(part(code, i));
  }
  return s + ")";
}

int EStar::entry(int code, int i, Subset t) const {
  Subset const s = part(code, i);
  if ((t & ~s) != 0) {
    throw Error("E*: part outside its slot");
  }
  int idx = 0;
  int b = 0;
  for (int p = 0; p < dims_[i]; ++p) {
    if (s >> p & 1U) {
      if (t >> p & 1U) {
        idx |= 1 << b;
      }
      ++b;
    }
  }
  return entry_base_[code * slots() + i] + idx;
}

EStarMap::EStarMap(GMor g)
    : g_(std::move(g)), src_(g_.tgt), tgt_(g_.src) {}

int EStarMap::object(int code) const {
  if (g_.null || tgt_.is_base() || src_.is_base() || src_.degenerate(code)) {
    return -1;
  }
  if (g_.tgt.length() == 0) {
    return code;
  }
  std::size_t const s = g_.tgt.length();
  std::vector<int> pre(s, -1);
  for (std::size_t i = 0; i < g_.q.size(); ++i) {
    pre[g_.q[i]] = static_cast<int>(i);
  }
  for (std::size_t j = 0; j < s; ++j) {
    if (pre[j] < 0) {
      int const t = g_.alpha[j].img[0];
      if (t == 0 || !(src_.part(code, static_cast<int>(j)) >> (t - 1) & 1U)) {
        return -1;
      }
    }
  }
  if (g_.src.length() == 0) {
    return tgt_.code({1});
  }
  std::vector<Subset> tup;
  for (std::size_t i = 0; i < g_.q.size(); ++i) {
    Subset const p =
        g_.alpha[g_.q[i]].preimage(src_.part(code, g_.q[i]));
    if (p == 0) {
      return -1;
    }
    tup.push_back(p);
  }
  return tgt_.code(tup);
}

SlotMor normalized(SlotMor f) {
  if (f.code < 0) {
    return {-1, 0, std::vector<Subset>(f.parts.size(), 0)};
  }
  if (f.slot < 0) {
    return f;
  }
  int nonempty = 0;
  for (Subset p : f.parts) {
    nonempty += p != 0;
  }
  if (nonempty != 1) {
    return f;
  }
  SlotMor u{f.code, -1, {}};
  for (Subset p : f.parts) {
    u.parts.push_back(p != 0);
  }
  return u;
}

SlotMor EStarMap::operator()(SlotMor const& f) const {
  SlotMor const base{-1, 0, std::vector<Subset>(f.parts.size(), 0)};
  if (f.code < 0) {
    return base;
  }
  int const c = object(f.code);
  if (c < 0) {
    return base;
  }
  if (f.slot < 0) {
    return {c, -1, f.parts};
  }
  if (g_.tgt.length() == 0) {
    return normalized({c, f.slot, f.parts});
  }
  for (std::size_t i = 0; i < g_.q.size(); ++i) {
    if (g_.q[i] == f.slot) {
      SlotMor r{c, static_cast<int>(i), {}};
      for (Subset p : f.parts) {
        r.parts.push_back(g_.alpha[f.slot].preimage(p));
      }
      return normalized(r);
    }
  }
  int const t = g_.alpha[f.slot].img[0];
  Subset const s0 = tgt_.part(c, 0);
  SlotMor r{c, 0, {}};
  for (Subset p : f.parts) {
    r.parts.push_back(p >> (t - 1) & 1U ? s0 : 0);
  }
  return normalized(r);
}

std::vector<SlotMor> slot_morphisms(EStar const& e, std::size_t arity) {
  std::vector<SlotMor> out;
  for (int c : e.objects()) {
    for (int i = 0; i < e.slots(); ++i) {
      Subset const s = e.part(c, i);
      std::vector<int> elems;
      for (int p = 0; p < e.dims()[i]; ++p) {
        if (s >> p & 1U) {
          elems.push_back(p);
        }
      }
      for (std::size_t k = 1; k <= arity; ++k) {
        // each element picks one of k parts
        std::vector<std::size_t> pick(elems.size(), 0);
        while (true) {
          SlotMor m{c, i, std::vector<Subset>(k, 0)};
          for (std::size_t x = 0; x < elems.size(); ++x) {
            m.parts[pick[x]] |= 1U << elems[x];
          }
          out.push_back(std::move(m));
          std::size_t x = elems.size();
          while (x > 0 && ++pick[x - 1] == k) {
            pick[--x] = 0;
          }
          if (x == 0) {
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace mc
