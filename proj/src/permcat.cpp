#include "mc/permcat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "json.hpp"

namespace mc {

void PermCat::finish() {
  std::size_t const n = objects.size();
  std::size_t const m = arrows.size();
  auto square = [](auto const& t, std::size_t k, char const* what) {
    if (t.size() != k) {
      throw Error(std::string("permutative category: bad ") + what + " table");
    }
    for (auto const& row : t) {
      if (row.size() != k) {
        throw Error(std::string("permutative category: bad ") + what
                    + " table");
      }
    }
  };
  square(oplus_obj, n, "object sum");
  square(compose, m, "composition");
  square(oplus_mor, m, "arrow sum");
  square(gamma, n, "symmetry");
  if (ident.size() != n || zero < 0 || zero >= static_cast<int>(n)) {
    throw Error("permutative category: bad identities or zero");
  }
  homs_.assign(n, std::vector<std::vector<int>>(n));
  by_name_.clear();
  by_label_.clear();
  for (std::size_t i = 0; i < m; ++i) {
    auto const& a = arrows[i];
    if (a.src < 0 || a.tgt < 0 || a.src >= static_cast<int>(n)
        || a.tgt >= static_cast<int>(n)) {
      throw Error("permutative category: arrow " + a.name + " out of range");
    }
    if (!by_name_.emplace(a.name, static_cast<int>(i)).second) {
      throw Error("permutative category: duplicate arrow " + a.name);
    }
    homs_[a.src][a.tgt].push_back(static_cast<int>(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!by_label_.emplace(objects[i], static_cast<int>(i)).second) {
      throw Error("permutative category: duplicate object " + objects[i]);
    }
  }
}

int PermCat::obj(std::string_view label) const {
  auto it = by_label_.find(label);
  if (it == by_label_.end()) {
    throw Error("unknown object " + std::string(label) + " in " + name);
  }
  return it->second;
}

int PermCat::arrow(std::string_view nm) const {
  auto it = by_name_.find(nm);
  if (it == by_name_.end()) {
    throw Error("unknown arrow " + std::string(nm) + " in " + name);
  }
  return it->second;
}

int PermCat::comp(int g, int f) const {
  int r = compose.at(g).at(f);
  if (r < 0) {
    throw Error("arrows " + arrows[g].name + " and " + arrows[f].name
                + " are not composable");
  }
  return r;
}

int PermCat::sum(std::vector<int> const& objs) const {
  int acc = zero;
  for (int a : objs) {
    acc = oplus_obj[acc][a];
  }
  return acc;
}

int PermCat::sum_arrows(std::vector<int> const& arrs) const {
  int acc = ident[zero];
  for (int f : arrs) {
    acc = oplus_mor[acc][f];
  }
  return acc;
}

int PermCat::shuffle(std::vector<int> const& objs, Perm const& s) const {
  std::vector<int> cur = s.images();
  auto total = [&](std::vector<int> const& order) {
    std::vector<int> o;
    for (int x : order) {
      o.push_back(objs[x]);
    }
    return sum(o);
  };
  int acc = ident[total(cur)];
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p] < cur[p + 1]) {
        continue;
      }
      std::vector<int> pre;
      std::vector<int> post;
      for (std::size_t q = 0; q < p; ++q) {
        pre.push_back(objs[cur[q]]);
      }
      for (std::size_t q = p + 2; q < cur.size(); ++q) {
        post.push_back(objs[cur[q]]);
      }
      int step = oplus_mor[ident[sum(pre)]][gamma[objs[cur[p]]][objs[cur[p + 1]]]];
      step = oplus_mor[step][ident[sum(post)]];
      acc = comp(step, acc);
      std::swap(cur[p], cur[p + 1]);
      swapped = true;
    }
  }
  return acc;
}

Monoid cyclic(int n) {
  Monoid m;
  for (int i = 0; i < n; ++i) {
    m.labels.push_back(std::to_string(i));
    m.table.emplace_back();
    for (int j = 0; j < n; ++j) {
      m.table.back().push_back((i + j) % n);
    }
  }
  return m;
}

Monoid symmetric3() {
  auto perms = Perm::all(3);
  Monoid m;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    m.labels.push_back(std::to_string(i));
  }
  for (auto const& p : perms) {
    m.table.emplace_back();
    for (auto const& q : perms) {
      auto r = p * q;
      m.table.back().push_back(static_cast<int>(
          std::find(perms.begin(), perms.end(), r) - perms.begin()));
    }
  }
  return m;
}

std::vector<int> element_orders(Monoid const& m) {
  std::vector<int> out;
  int const n = static_cast<int>(m.labels.size());
  for (int x = 0; x < n; ++x) {
    int p = x;
    int k = 1;
    while (p != 0 && k <= n) {
      p = m.table[p][x];
      ++k;
    }
    out.push_back(p == 0 ? k : 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool monoids_isomorphic(Monoid const& a, Monoid const& b) {
  std::size_t const n = a.labels.size();
  if (n != b.labels.size()) {
    return false;
  }
  for (auto const& p : Perm::all(n)) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      for (std::size_t y = 0; y < n && ok; ++y) {
        ok = p[a.table[x][y]] == b.table[p[x]][p[y]];
      }
    }
    if (ok) {
      return true;
    }
  }
  return false;
}

Monoid object_monoid(PermCat const& c) {
  Monoid m;
  // relabel so that zero comes first
  std::vector<int> order{c.zero};
  for (int a = 0; a < static_cast<int>(c.size()); ++a) {
    if (a != c.zero) {
      order.push_back(a);
    }
  }
  std::vector<int> pos(c.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    pos[order[i]] = static_cast<int>(i);
  }
  for (int a : order) {
    m.labels.push_back(c.objects[a]);
    m.table.emplace_back();
    for (int b : order) {
      m.table.back().push_back(pos[c.oplus_obj[a][b]]);
    }
  }
  return m;
}

namespace {

PermCat skeleton(std::string name, Monoid const& m) {
  PermCat c;
  c.name = std::move(name);
  c.objects = m.labels;
  c.zero = 0;
  c.oplus_obj = m.table;
  return c;
}

}  // namespace

PermCatPtr discrete_perm(std::string name, Monoid const& m) {
  PermCat c = skeleton(std::move(name), m);
  int const n = static_cast<int>(m.labels.size());
  for (int a = 0; a < n; ++a) {
    c.arrows.push_back({"1_" + m.labels[a], a, a});
    c.ident.push_back(a);
  }
  c.compose.assign(n, std::vector<int>(n, -1));
  c.oplus_mor.assign(n, std::vector<int>(n));
  c.gamma.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    c.compose[a][a] = a;
    for (int b = 0; b < n; ++b) {
      c.oplus_mor[a][b] = m.table[a][b];
      c.gamma[a][b] = m.table[a][b];
    }
  }
  c.finish();
  return std::make_shared<PermCat>(std::move(c));
}

PermCatPtr indiscrete_perm(std::string name, Monoid const& m) {
  PermCat c = skeleton(std::move(name), m);
  int const n = static_cast<int>(m.labels.size());
  auto id = [n](int a, int b) { return a * n + b; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      c.arrows.push_back({m.labels[a] + ">" + m.labels[b], a, b});
    }
    c.ident.push_back(id(a, a));
  }
  int const k = n * n;
  c.compose.assign(k, std::vector<int>(k, -1));
  c.oplus_mor.assign(k, std::vector<int>(k));
  for (int f = 0; f < k; ++f) {
    for (int g = 0; g < k; ++g) {
      auto const& af = c.arrows[f];
      auto const& ag = c.arrows[g];
      if (ag.src == af.tgt) {
        c.compose[g][f] = id(af.src, ag.tgt);
      }
      c.oplus_mor[f][g] = id(m.table[af.src][ag.src], m.table[af.tgt][ag.tgt]);
    }
  }
  c.gamma.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      c.gamma[a][b] = id(m.table[a][b], m.table[b][a]);
    }
  }
  c.finish();
  return std::make_shared<PermCat>(std::move(c));
}

PermCatPtr signed_z2() {
  PermCat c = skeleton("signed Z/2", cyclic(2));
  // arrow 2x + e is the element e of End(x)
  for (int x = 0; x < 2; ++x) {
    c.arrows.push_back({"1_" + std::to_string(x), x, x});
    c.arrows.push_back({"s_" + std::to_string(x), x, x});
    c.ident.push_back(2 * x);
  }
  c.compose.assign(4, std::vector<int>(4, -1));
  c.oplus_mor.assign(4, std::vector<int>(4));
  for (int f = 0; f < 4; ++f) {
    for (int g = 0; g < 4; ++g) {
      int const xf = f / 2;
      int const xg = g / 2;
      int const e = (f % 2 + g % 2) % 2;
      if (xf == xg) {
        c.compose[g][f] = 2 * xf + e;
      }
      c.oplus_mor[f][g] = 2 * ((xf + xg) % 2) + e;
    }
  }
  c.gamma.assign(2, std::vector<int>(2));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      c.gamma[a][b] = 2 * ((a + b) % 2) + a * b;
    }
  }
  c.finish();
  return std::make_shared<PermCat>(std::move(c));
}

std::pair<PermCatPtr, PermCatPtr> maclane_pair() {
  return {indiscrete_perm("E(Sigma_3)", symmetric3()),
          indiscrete_perm("E(Z/6)", cyclic(6))};
}

using nlohmann::json;

std::string permcat_to_json(PermCat const& c) {
  json j;
  j["schemaVersion"] = 1;
  j["name"] = c.name;
  j["objects"] = c.objects;
  j["zero"] = c.objects[c.zero];
  json oo = json::array();
  for (auto const& row : c.oplus_obj) {
    json r = json::array();
    for (int x : row) {
      r.push_back(c.objects[x]);
    }
    oo.push_back(r);
  }
  j["oplusObj"] = oo;
  json homs = json::array();
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = 0; b < c.size(); ++b) {
      auto const& h = c.hom(static_cast<int>(a), static_cast<int>(b));
      if (h.empty()) {
        continue;
      }
      json names = json::array();
      for (int f : h) {
        names.push_back(c.arrows[f].name);
      }
      homs.push_back({{"source", c.objects[a]},
                      {"target", c.objects[b]},
                      {"arrows", names}});
    }
  }
  j["homs"] = homs;
  json id = json::object();
  for (std::size_t a = 0; a < c.size(); ++a) {
    id[c.objects[a]] = c.arrows[c.ident[a]].name;
  }
  j["identities"] = id;
  json comp = json::object();
  json om = json::object();
  for (std::size_t g = 0; g < c.arrows.size(); ++g) {
    json cr = json::object();
    json orow = json::object();
    for (std::size_t f = 0; f < c.arrows.size(); ++f) {
      if (c.compose[g][f] >= 0) {
        cr[c.arrows[f].name] = c.arrows[c.compose[g][f]].name;
      }
      orow[c.arrows[f].name] = c.arrows[c.oplus_mor[g][f]].name;
    }
    comp[c.arrows[g].name] = cr;
    om[c.arrows[g].name] = orow;
  }
  j["compose"] = comp;
  j["oplusMor"] = om;
  json gm = json::array();
  for (auto const& row : c.gamma) {
    json r = json::array();
    for (int x : row) {
      r.push_back(c.arrows[x].name);
    }
    gm.push_back(r);
  }
  j["gamma"] = gm;
  return j.dump(2);
}

PermCatPtr permcat_from_json(std::string const& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (json::exception const& e) {
    throw Error(std::string("permutative category JSON: ") + e.what());
  }
  try {
    PermCat c;
    c.name = j.value("name", std::string("C"));
    c.objects = j.at("objects").get<std::vector<std::string>>();
    std::map<std::string, int> obj;
    for (std::size_t i = 0; i < c.objects.size(); ++i) {
      obj[c.objects[i]] = static_cast<int>(i);
    }
    auto o = [&](json const& x) {
      auto it = obj.find(x.get<std::string>());
      if (it == obj.end()) {
        throw Error("unknown object " + x.dump());
      }
      return it->second;
    };
    c.zero = o(j.at("zero"));
    for (auto const& row : j.at("oplusObj")) {
      c.oplus_obj.emplace_back();
      for (auto const& x : row) {
        c.oplus_obj.back().push_back(o(x));
      }
    }
    std::map<std::string, int> arr;
    for (auto const& h : j.at("homs")) {
      int s = o(h.at("source"));
      int t = o(h.at("target"));
      for (auto const& nm : h.at("arrows")) {
        arr[nm.get<std::string>()] = static_cast<int>(c.arrows.size());
        c.arrows.push_back({nm.get<std::string>(), s, t});
      }
    }
    auto a = [&](json const& x) {
      auto it = arr.find(x.get<std::string>());
      if (it == arr.end()) {
        throw Error("unknown arrow " + x.dump());
      }
      return it->second;
    };
    c.ident.assign(c.objects.size(), -1);
    for (auto const& [k, v] : j.at("identities").items()) {
      c.ident[obj.at(k)] = a(v);
    }
    std::size_t const m = c.arrows.size();
    c.compose.assign(m, std::vector<int>(m, -1));
    for (auto const& [g, row] : j.at("compose").items()) {
      for (auto const& [f, r] : row.items()) {
        c.compose[arr.at(g)][arr.at(f)] = a(r);
      }
    }
    c.oplus_mor.assign(m, std::vector<int>(m, -1));
    for (auto const& [g, row] : j.at("oplusMor").items()) {
      for (auto const& [f, r] : row.items()) {
        c.oplus_mor[arr.at(g)][arr.at(f)] = a(r);
      }
    }
    for (auto const& row : j.at("gamma")) {
      c.gamma.emplace_back();
      for (auto const& x : row) {
        c.gamma.back().push_back(a(x));
      }
    }
    for (auto const& row : c.oplus_mor) {
      if (std::find(row.begin(), row.end(), -1) != row.end()) {
        throw Error("arrow sum table is not total");
      }
    }
    if (std::find(c.ident.begin(), c.ident.end(), -1) != c.ident.end()) {
      throw Error("missing identity");
    }
    c.finish();
    return std::make_shared<PermCat>(std::move(c));
  } catch (json::exception const& e) {
    throw Error(std::string("permutative category JSON: ") + e.what());
  } catch (std::out_of_range const&) {
    throw Error("permutative category JSON: unknown name");
  }
}

namespace {

struct FiniteView {
  PermCat const& c;
  std::vector<int> objects() const {
    std::vector<int> v(c.size());
    std::iota(v.begin(), v.end(), 0);
    return v;
  }
  int zero() const {
    return c.zero;
  }
  std::optional<int> oplus_obj(int a, int b) const {
    return c.oplus_obj[a][b];
  }
  std::vector<int> const& hom(int a, int b) const {
    return c.hom(a, b);
  }
  int src(int f) const {
    return c.arrows[f].src;
  }
  int tgt(int f) const {
    return c.arrows[f].tgt;
  }
  int id(int a) const {
    return c.ident[a];
  }
  int compose(int g, int f) const {
    return c.compose[g][f];
  }
  std::optional<int> oplus_arr(int f, int g) const {
    return c.oplus_mor[f][g];
  }
  int gamma(int a, int b) const {
    return c.gamma[a][b];
  }
  std::string show_obj(int a) const {
    return c.objects[a];
  }
  std::string show_arr(int f) const {
    return c.arrows[f].name;
  }
};

}  // namespace

AxiomReport validate_permcat(PermCat const& c) {
  return validate_permutative(FiniteView{c});
}

namespace {

class UnderlyingImpl final : public MulticatImpl {
 public:
  explicit UnderlyingImpl(PermCatPtr c)
      : MulticatImpl("U(" + c->name + ")", c->objects, Kind::derived),
        c_(std::move(c)) {}

  std::vector<Mor> hom(Profile const& p) const override {
    std::vector<Mor> out;
    for (int f : c_->hom(c_->sum(p.source), p.target)) {
      out.push_back(Mor{p, c_->arrows[f].name});
    }
    return out;
  }
  Mor ident(ObjId a) const override {
    return Mor{Profile{{a}, a}, c_->arrows[c_->ident[a]].name};
  }
  Mor gamma(Mor const& outer, std::span<const Mor> inners) const override {
    std::vector<int> in;
    for (auto const& g : inners) {
      in.push_back(c_->arrow(g.tag));
    }
    int r = c_->comp(c_->arrow(outer.tag), c_->sum_arrows(in));
    return Mor{composite_profile(outer, inners), c_->arrows[r].name};
  }
  Mor act(Mor const& f, Perm const& s) const override {
    int r = c_->comp(c_->arrow(f.tag), c_->shuffle(f.profile.source, s));
    return Mor{Profile{permute_source(f.profile.source, s), f.target()},
               c_->arrows[r].name};
  }
  std::optional<std::vector<Mor>> generators() const override {
    std::vector<Mor> g;
    g.push_back(Mor{Profile{{}, c_->zero}, c_->arrows[c_->ident[c_->zero]].name});
    for (std::size_t a = 0; a < c_->size(); ++a) {
      for (std::size_t b = 0; b < c_->size(); ++b) {
        int const ab = c_->oplus_obj[a][b];
        g.push_back(Mor{Profile{{static_cast<ObjId>(a), static_cast<ObjId>(b)},
                                ab},
                        c_->arrows[c_->ident[ab]].name});
      }
    }
    for (std::size_t f = 0; f < c_->arrows.size(); ++f) {
      auto const& a = c_->arrows[f];
      if (c_->ident[a.src] != static_cast<int>(f)) {
        g.push_back(Mor{Profile{{a.src}, a.tgt}, a.name});
      }
    }
    return g;
  }

 private:
  PermCatPtr c_;
};

}  // namespace

Multicat underlying(PermCatPtr const& c) {
  return Multicat(std::make_shared<UnderlyingImpl>(c));
}

BasedMulticat underlying_based(PermCatPtr const& c) {
  std::string const id0 = c->arrows[c->ident[c->zero]].name;
  ObjId const z = c->zero;
  return {underlying(c), z, [z, id0](std::size_t k) {
            return Mor{Profile{std::vector<ObjId>(k, z), z}, id0};
          }};
}

// ---------------------------------------------------------------- lax maps

namespace {

struct Reporter {
  AxiomReport rep;
  std::size_t cap = 200;
  template <class F>
  void check(bool ok, char const* law, F&& detail) {
    ++rep.instances;
    if (!ok) {
      if (rep.violations.size() < cap) {
        rep.violations.push_back({law, detail()});
      } else {
        rep.truncated = true;
      }
    }
  }
};

// Every tuple over the given radices, first coordinate most significant.
std::vector<std::vector<int>> tuples(std::vector<std::size_t> const& radix) {
  std::vector<std::vector<int>> out;
  for (std::size_t r : radix) {
    if (r == 0) {
      return out;
    }
  }
  std::vector<int> cur(radix.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = radix.size();
    while (i > 0) {
      --i;
      if (++cur[i] < static_cast<int>(radix[i])) {
        break;
      }
      cur[i] = 0;
      if (i == 0) {
        return out;
      }
    }
    if (radix.empty()) {
      return out;
    }
  }
}

}  // namespace

AxiomReport validate_laxstar(LaxStarMap const& f) {
  PermCat const& c = *f.src;
  PermCat const& d = *f.tgt;
  Reporter r;
  int const n = static_cast<int>(c.size());
  r.check(f.obj.size() == c.size() && f.mor.size() == c.arrows.size()
              && f.lambda.size() == c.size(),
          "shape", [] { return std::string("table sizes"); });
  if (!r.rep.ok()) {
    return r.rep;
  }
  r.check(f.obj[c.zero] == d.zero, "zero", [] { return std::string("f(0)"); });
  for (std::size_t u = 0; u < c.arrows.size(); ++u) {
    auto const& a = c.arrows[u];
    auto const& b = d.arrows[f.mor[u]];
    r.check(b.src == f.obj[a.src] && b.tgt == f.obj[a.tgt], "functor profile",
            [&] { return a.name; });
  }
  if (!r.rep.ok()) {
    return r.rep;
  }
  for (int a = 0; a < n; ++a) {
    r.check(f.mor[c.ident[a]] == d.ident[f.obj[a]], "functor identity",
            [&] { return c.objects[a]; });
  }
  for (std::size_t g = 0; g < c.arrows.size(); ++g) {
    for (std::size_t u = 0; u < c.arrows.size(); ++u) {
      int gu = c.compose[g][u];
      if (gu < 0) {
        continue;
      }
      r.check(f.mor[gu] == d.comp(f.mor[g], f.mor[u]), "functor composition",
              [&] { return c.arrows[g].name + " o " + c.arrows[u].name; });
    }
  }
  auto lam = [&](int a, int b) { return f.lambda[a][b]; };
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto const& l = d.arrows[lam(a, b)];
      r.check(l.src == d.oplus_obj[f.obj[a]][f.obj[b]]
                  && l.tgt == f.obj[c.oplus_obj[a][b]],
              "lambda profile",
              [&] { return c.objects[a] + "," + c.objects[b]; });
    }
  }
  if (!r.rep.ok()) {
    return r.rep;
  }
  for (int a = 0; a < n; ++a) {
    r.check(lam(a, c.zero) == d.ident[f.obj[a]]
                && lam(c.zero, a) == d.ident[f.obj[a]],
            "lambda unit", [&] { return c.objects[a]; });
  }
  for (std::size_t u = 0; u < c.arrows.size(); ++u) {
    for (std::size_t v = 0; v < c.arrows.size(); ++v) {
      auto const& au = c.arrows[u];
      auto const& av = c.arrows[v];
      int lhs = d.comp(f.mor[c.oplus_mor[u][v]], lam(au.src, av.src));
      int rhs = d.comp(lam(au.tgt, av.tgt), d.oplus_mor[f.mor[u]][f.mor[v]]);
      r.check(lhs == rhs, "lambda naturality",
              [&] { return au.name + "," + av.name; });
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int const fa = f.obj[a];
      int const fb = f.obj[b];
      for (int x = 0; x < n; ++x) {
        int const fx = f.obj[x];
        int lhs = d.comp(lam(c.oplus_obj[a][b], x),
                         d.oplus_mor[lam(a, b)][d.ident[fx]]);
        int rhs = d.comp(lam(a, c.oplus_obj[b][x]),
                         d.oplus_mor[d.ident[fa]][lam(b, x)]);
        r.check(lhs == rhs, "lambda associativity", [&] {
          return c.objects[a] + "," + c.objects[b] + "," + c.objects[x];
        });
      }
      int lhs = d.comp(f.mor[c.gamma[a][b]], lam(a, b));
      int rhs = d.comp(lam(b, a), d.gamma[fa][fb]);
      r.check(lhs == rhs, "lambda symmetry",
              [&] { return c.objects[a] + "," + c.objects[b]; });
    }
  }
  return r.rep;
}

LaxStarMap identity_laxstar(PermCatPtr const& c) {
  LaxStarMap f{c, c, {}, {}, {}};
  for (std::size_t a = 0; a < c->size(); ++a) {
    f.obj.push_back(static_cast<int>(a));
  }
  for (std::size_t u = 0; u < c->arrows.size(); ++u) {
    f.mor.push_back(static_cast<int>(u));
  }
  f.lambda.assign(c->size(), std::vector<int>(c->size()));
  for (std::size_t a = 0; a < c->size(); ++a) {
    for (std::size_t b = 0; b < c->size(); ++b) {
      f.lambda[a][b] = c->ident[c->oplus_obj[a][b]];
    }
  }
  return f;
}

namespace {

// Functors c -> d with f(0) = 0, by backtracking over arrows with
// composition checked as soon as all three arrows are assigned.
std::vector<std::pair<std::vector<int>, std::vector<int>>> based_functors(
    PermCat const& c, PermCat const& d) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  std::vector<std::size_t> radix(c.size(), d.size());
  for (auto const& obj : tuples(radix)) {
    if (obj[c.zero] != d.zero) {
      continue;
    }
    std::vector<int> mor(c.arrows.size(), -1);
    for (std::size_t a = 0; a < c.size(); ++a) {
      mor[c.ident[a]] = d.ident[obj[a]];
    }
    std::vector<int> order;
    for (std::size_t u = 0; u < c.arrows.size(); ++u) {
      if (mor[u] < 0) {
        order.push_back(static_cast<int>(u));
      }
    }
    auto consistent = [&]() {
      for (std::size_t g = 0; g < c.arrows.size(); ++g) {
        for (std::size_t u = 0; u < c.arrows.size(); ++u) {
          int gu = c.compose[g][u];
          if (gu < 0 || mor[g] < 0 || mor[u] < 0 || mor[gu] < 0) {
            continue;
          }
          if (mor[gu] != d.comp(mor[g], mor[u])) {
            return false;
          }
        }
      }
      return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == order.size()) {
        out.emplace_back(obj, mor);
        return;
      }
      auto const& a = c.arrows[order[i]];
      for (int v : d.hom(obj[a.src], obj[a.tgt])) {
        mor[order[i]] = v;
        if (consistent()) {
          rec(i + 1);
        }
      }
      mor[order[i]] = -1;
    };
    if (consistent()) {
      rec(0);
    }
  }
  return out;
}

}  // namespace

std::vector<LaxStarMap> enumerate_laxstar(PermCatPtr const& c,
                                          PermCatPtr const& d) {
  std::vector<LaxStarMap> out;
  int const n = static_cast<int>(c->size());
  for (auto const& [obj, mor] : based_functors(*c, *d)) {
    LaxStarMap f{c, d, obj, mor,
                 std::vector<std::vector<int>>(n, std::vector<int>(n, -1))};
    std::vector<std::pair<int, int>> free;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == c->zero || b == c->zero) {
          f.lambda[a][b] = d->ident[obj[a == c->zero ? b : a]];
        } else {
          free.emplace_back(a, b);
        }
      }
    }
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == free.size()) {
        if (validate_laxstar(f).ok()) {
          out.push_back(f);
        }
        return;
      }
      auto [a, b] = free[i];
      for (int l : d->hom(d->oplus_obj[obj[a]][obj[b]], obj[c->oplus_obj[a][b]])) {
        f.lambda[a][b] = l;
        rec(i + 1);
      }
    };
    rec(0);
  }
  return out;
}

int lambda_fold(LaxStarMap const& f, std::vector<int> const& objs) {
  PermCat const& c = *f.src;
  PermCat const& d = *f.tgt;
  if (objs.empty()) {
    return d.ident[d.zero];
  }
  int acc = d.ident[f.obj[objs[0]]];
  int prefix = objs[0];
  for (std::size_t i = 1; i < objs.size(); ++i) {
    int step = d.oplus_mor[acc][d.ident[f.obj[objs[i]]]];
    acc = d.comp(f.lambda[prefix][objs[i]], step);
    prefix = c.oplus_obj[prefix][objs[i]];
  }
  return acc;
}

// ---------------------------------------------------------------- P_k

std::size_t PkObject::obj_index(std::vector<int> const& c) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    idx = idx * src[i]->size() + c[i];
  }
  return idx;
}

std::size_t PkObject::mor_index(std::vector<int> const& u) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    idx = idx * src[i]->arrows.size() + u[i];
  }
  return idx;
}

int PkObject::d(std::size_t i, std::vector<int> const& c, int ci2) const {
  return delta[i][obj_index(c) * src[i]->size() + ci2];
}

namespace {

std::vector<std::size_t> obj_radix(std::vector<PermCatPtr> const& cs) {
  std::vector<std::size_t> r;
  for (auto const& c : cs) {
    r.push_back(c->size());
  }
  return r;
}

std::vector<std::size_t> mor_radix(std::vector<PermCatPtr> const& cs) {
  std::vector<std::size_t> r;
  for (auto const& c : cs) {
    r.push_back(c->arrows.size());
  }
  return r;
}

std::string show_tuple(std::vector<PermCatPtr> const& cs,
                       std::vector<int> const& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) {
      s += ',';
    }
    s += cs[i]->objects[c[i]];
  }
  return s + ")";
}

std::vector<int> idents(std::vector<PermCatPtr> const& cs,
                        std::vector<int> const& c) {
  std::vector<int> u;
  for (std::size_t i = 0; i < c.size(); ++i) {
    u.push_back(cs[i]->ident[c[i]]);
  }
  return u;
}

}  // namespace

AxiomReport validate_pk(PkObject const& f) {
  Reporter r;
  PermCat const& d = *f.tgt;
  std::size_t const k = f.arity();
  auto const objs = tuples(obj_radix(f.src));
  auto const arrs = tuples(mor_radix(f.src));
  r.check(f.obj.size() == objs.size() && f.mor.size() == arrs.size()
              && f.delta.size() == k,
          "shape", [] { return std::string("table sizes"); });
  for (std::size_t i = 0; i < k && r.rep.ok(); ++i) {
    r.check(f.delta[i].size() == objs.size() * f.src[i]->size(), "shape",
            [] { return std::string("delta table size"); });
  }
  if (!r.rep.ok()) {
    return r.rep;
  }
  auto has_zero = [&](std::vector<int> const& c, std::size_t skip) {
    for (std::size_t i = 0; i < k; ++i) {
      if (i != skip && c[i] == f.src[i]->zero) {
        return true;
      }
    }
    return false;
  };
  auto src_of = [&](std::vector<int> const& u) {
    std::vector<int> c;
    for (std::size_t i = 0; i < k; ++i) {
      c.push_back(f.src[i]->arrows[u[i]].src);
    }
    return c;
  };
  auto tgt_of = [&](std::vector<int> const& u) {
    std::vector<int> c;
    for (std::size_t i = 0; i < k; ++i) {
      c.push_back(f.src[i]->arrows[u[i]].tgt);
    }
    return c;
  };
  // functor
  for (auto const& u : arrs) {
    auto const& a = d.arrows[f.on(u)];
    r.check(a.src == f.at(src_of(u)) && a.tgt == f.at(tgt_of(u)),
            "functor profile", [&] { return a.name; });
  }
  if (!r.rep.ok()) {
    return r.rep;
  }
  for (auto const& c : objs) {
    r.check(f.on(idents(f.src, c)) == d.ident[f.at(c)], "functor identity",
            [&] { return show_tuple(f.src, c); });
    if (has_zero(c, k)) {
      r.check(f.at(c) == d.zero, "zero", [&] { return show_tuple(f.src, c); });
    }
  }
  // identically 0: any slot holding the identity of 0 gives the identity of 0
  for (auto const& u : arrs) {
    bool z = false;
    for (std::size_t i = 0; i < k; ++i) {
      z = z || u[i] == f.src[i]->ident[f.src[i]->zero];
    }
    if (z) {
      r.check(f.on(u) == d.ident[d.zero], "zero arrow",
              [&] { return d.arrows[f.on(u)].name; });
    }
  }
  // composable pairs of tuples, one factor at a time
  for (auto const& g : arrs) {
    for (auto const& u : arrs) {
      std::vector<int> gu;
      for (std::size_t i = 0; i < k; ++i) {
        int x = f.src[i]->compose[g[i]][u[i]];
        if (x < 0) {
          break;
        }
        gu.push_back(x);
      }
      if (gu.size() != k) {
        continue;
      }
      r.check(f.on(gu) == d.comp(f.on(g), f.on(u)), "functor composition",
              [] { return std::string("composite"); });
    }
  }
  if (!r.rep.ok()) {
    return r.rep;
  }
  for (std::size_t i = 0; i < k; ++i) {
    PermCat const& ci = *f.src[i];
    int const ni = static_cast<int>(ci.size());
    auto with = [&](std::vector<int> c, int x) {
      c[i] = x;
      return c;
    };
    // profiles and identities
    for (auto const& c : objs) {
      for (int x = 0; x < ni; ++x) {
        auto const& a = d.arrows[f.d(i, c, x)];
        r.check(a.src == d.oplus_obj[f.at(c)][f.at(with(c, x))]
                    && a.tgt == f.at(with(c, ci.oplus_obj[c[i]][x])),
                "delta profile", [&] { return show_tuple(f.src, c); });
      }
    }
    if (!r.rep.ok()) {
      return r.rep;
    }
    for (auto const& c : objs) {
      for (int x = 0; x < ni; ++x) {
        if (c[i] == ci.zero || x == ci.zero || has_zero(c, i)) {
          r.check(f.d(i, c, x) == d.ident[f.at(with(c, ci.oplus_obj[c[i]][x]))],
                  "delta unit", [&] { return show_tuple(f.src, c); });
        }
      }
    }
    // naturality in every variable at once
    for (auto const& u : arrs) {
      auto const c = src_of(u);
      auto const t = tgt_of(u);
      for (std::size_t v = 0; v < ci.arrows.size(); ++v) {
        auto const& av = ci.arrows[v];
        auto uv = u;
        uv[i] = static_cast<int>(v);
        auto usum = u;
        usum[i] = ci.oplus_mor[u[i]][v];
        int lhs = d.comp(f.on(usum), f.d(i, c, av.src));
        int rhs = d.comp(f.d(i, t, av.tgt), d.oplus_mor[f.on(u)][f.on(uv)]);
        r.check(lhs == rhs, "delta naturality", [&] {
          return "slot " + std::to_string(i + 1) + " at "
                 + show_tuple(f.src, c);
        });
      }
    }
    // associativity and symmetry
    for (auto const& c : objs) {
      for (int x = 0; x < ni; ++x) {
        int const cx = ci.oplus_obj[c[i]][x];
        for (int y = 0; y < ni; ++y) {
          int lhs = d.comp(f.d(i, c, ci.oplus_obj[x][y]),
                           d.oplus_mor[d.ident[f.at(c)]][f.d(i, with(c, x), y)]);
          int rhs = d.comp(f.d(i, with(c, cx), y),
                           d.oplus_mor[f.d(i, c, x)][d.ident[f.at(with(c, y))]]);
          r.check(lhs == rhs, "delta associativity",
                  [&] { return show_tuple(f.src, c); });
        }
        auto ug = idents(f.src, c);
        ug[i] = ci.gamma[c[i]][x];
        int lhs = d.comp(f.on(ug), f.d(i, c, x));
        int rhs = d.comp(f.d(i, with(c, x), c[i]),
                         d.gamma[f.at(c)][f.at(with(c, x))]);
        r.check(lhs == rhs, "delta symmetry",
                [&] { return show_tuple(f.src, c); });
      }
    }
    // interchange with every other slot
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) {
        continue;
      }
      PermCat const& cj = *f.src[j];
      for (auto const& c : objs) {
        for (int x = 0; x < ni; ++x) {
          for (int y = 0; y < static_cast<int>(cj.size()); ++y) {
            auto at = [&](int vi, int vj) {
              auto t = c;
              t[i] = vi;
              t[j] = vj;
              return t;
            };
            int const ci0 = c[i];
            int const cj0 = c[j];
            int const si = ci.oplus_obj[ci0][x];
            int const sj = cj.oplus_obj[cj0][y];
            int const x1 = f.at(at(ci0, cj0));
            int const x2 = f.at(at(x, cj0));
            int const x3 = f.at(at(ci0, y));
            int const x4 = f.at(at(x, y));
            int top = d.comp(
                f.d(j, at(si, cj0), y),
                d.oplus_mor[f.d(i, at(ci0, cj0), x)][f.d(i, at(ci0, y), x)]);
            int swap = d.oplus_mor[d.oplus_mor[d.ident[x1]][d.gamma[x2][x3]]]
                                  [d.ident[x4]];
            int mid = d.oplus_mor[f.d(j, at(ci0, cj0), y)][f.d(j, at(x, cj0), y)];
            int bottom = d.comp(f.d(i, at(ci0, sj), x), d.comp(mid, swap));
            r.check(top == bottom, "delta interchange", [&] {
              return "slots " + std::to_string(i + 1) + ","
                     + std::to_string(j + 1) + " at "
                     + show_tuple(f.src, at(ci0, cj0));
            });
          }
        }
      }
    }
  }
  return r.rep;
}

PkObject compose_pk(PkObject const& g, std::vector<PkObject> const& fs) {
  if (fs.size() != g.arity()) {
    throw ProfileError("compose_pk: expected " + std::to_string(g.arity())
                       + " inner maps");
  }
  PkObject out;
  out.tgt = g.tgt;
  std::vector<std::size_t> block;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    if (fs[j].tgt != g.src[j] && fs[j].tgt->name != g.src[j]->name) {
      throw ProfileError("compose_pk: target of inner map "
                         + std::to_string(j + 1) + " does not match");
    }
    block.push_back(out.src.size());
    for (auto const& c : fs[j].src) {
      out.src.push_back(c);
    }
  }
  auto split = [&](std::vector<int> const& c, std::size_t j) {
    std::vector<int> part;
    for (std::size_t i = 0; i < fs[j].arity(); ++i) {
      part.push_back(c[block[j] + i]);
    }
    return part;
  };
  auto inner_objs = [&](std::vector<int> const& c) {
    std::vector<int> y;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      y.push_back(fs[j].at(split(c, j)));
    }
    return y;
  };
  auto const objs = tuples(obj_radix(out.src));
  for (auto const& c : objs) {
    out.obj.push_back(g.at(inner_objs(c)));
  }
  for (auto const& u : tuples(mor_radix(out.src))) {
    std::vector<int> y;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      y.push_back(fs[j].on(split(u, j)));
    }
    out.mor.push_back(g.on(y));
  }
  PermCat const& e = *g.tgt;
  out.delta.resize(out.src.size());
  for (std::size_t j = 0; j < fs.size(); ++j) {
    for (std::size_t i = 0; i < fs[j].arity(); ++i) {
      std::size_t const s = block[j] + i;
      for (auto const& c : objs) {
        auto const y = inner_objs(c);
        auto const cj = split(c, j);
        for (int x = 0; x < static_cast<int>(out.src[s]->size()); ++x) {
          auto cj2 = cj;
          cj2[i] = x;
          int const y2 = fs[j].at(cj2);
          int first = g.d(j, y, y2);
          auto ids = idents(g.src, y);
          ids[j] = fs[j].d(i, cj, x);
          int second = g.on(ids);
          out.delta[s].push_back(e.comp(second, first));
        }
      }
    }
  }
  return out;
}

PkObject sigma_star(PkObject const& f, Perm const& s) {
  std::size_t const k = f.arity();
  if (s.size() != k) {
    throw ProfileError("sigma_star: permutation of the wrong size");
  }
  PkObject out;
  out.tgt = f.tgt;
  for (std::size_t t = 0; t < k; ++t) {
    out.src.push_back(f.src[s[t]]);
  }
  auto back = [&](std::vector<int> const& dd) {
    std::vector<int> c(k);
    for (std::size_t t = 0; t < k; ++t) {
      c[s[t]] = dd[t];
    }
    return c;
  };
  auto const objs = tuples(obj_radix(out.src));
  for (auto const& dd : objs) {
    out.obj.push_back(f.at(back(dd)));
  }
  for (auto const& u : tuples(mor_radix(out.src))) {
    out.mor.push_back(f.on(back(u)));
  }
  out.delta.resize(k);
  for (std::size_t t = 0; t < k; ++t) {
    for (auto const& dd : objs) {
      for (int x = 0; x < static_cast<int>(out.src[t]->size()); ++x) {
        out.delta[t].push_back(f.d(s[t], back(dd), x));
      }
    }
  }
  return out;
}

PkObject as_pk(LaxStarMap const& f) {
  PkObject p;
  p.src = {f.src};
  p.tgt = f.tgt;
  p.obj = f.obj;
  p.mor = f.mor;
  p.delta.resize(1);
  for (std::size_t a = 0; a < f.src->size(); ++a) {
    for (std::size_t b = 0; b < f.src->size(); ++b) {
      p.delta[0].push_back(f.lambda[a][b]);
    }
  }
  return p;
}

LaxStarMap as_laxstar(PkObject const& f) {
  if (f.arity() != 1) {
    throw ProfileError("as_laxstar: arity must be 1");
  }
  std::size_t const n = f.src[0]->size();
  LaxStarMap l{f.src[0], f.tgt, f.obj, f.mor,
               std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      l.lambda[a][b] = f.delta[0][a * n + b];
    }
  }
  return l;
}

PkObject discrete_bilinear(PermCatPtr const& c,
                           std::vector<std::vector<int>> const& times) {
  PkObject p;
  p.src = {c, c};
  p.tgt = c;
  std::size_t const n = c->size();
  if (times.size() != n) {
    throw Error("product table needs " + std::to_string(n) + " rows");
  }
  for (auto const& row : times) {
    if (row.size() != n) {
      throw Error("product table rows need " + std::to_string(n) + " entries");
    }
    for (int v : row) {
      if (v < 0 || v >= static_cast<int>(n)) {
        throw Error("product table entry out of range");
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      p.obj.push_back(times[a][b]);
    }
  }
  for (std::size_t u = 0; u < c->arrows.size(); ++u) {
    for (std::size_t v = 0; v < c->arrows.size(); ++v) {
      p.mor.push_back(
          c->ident[times[c->arrows[u].src][c->arrows[v].src]]);
    }
  }
  p.delta.resize(2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        p.delta[0].push_back(c->ident[times[c->oplus_obj[a][x]][b]]);
        p.delta[1].push_back(c->ident[times[a][c->oplus_obj[b][x]]]);
      }
    }
  }
  return p;
}

PkObject indiscrete_bilinear(PermCatPtr const& c1, PermCatPtr const& c2,
                             PermCatPtr const& d,
                             std::vector<std::vector<int>> const& objmap) {
  PkObject p;
  p.src = {c1, c2};
  p.tgt = d;
  if (objmap.size() != c1->size()) {
    throw Error("object table needs one row per object");
  }
  for (auto const& row : objmap) {
    if (row.size() != c2->size()) {
      throw Error("object table rows need one entry per object");
    }
    for (int v : row) {
      if (v < 0 || v >= static_cast<int>(d->size())) {
        throw Error("object table entry out of range");
      }
    }
  }
  auto one = [&](int x, int y) {
    auto const& h = d->hom(x, y);
    if (h.size() != 1) {
      throw Error("indiscrete_bilinear: target is not indiscrete");
    }
    return h.front();
  };
  for (std::size_t a = 0; a < c1->size(); ++a) {
    for (std::size_t b = 0; b < c2->size(); ++b) {
      p.obj.push_back(objmap[a][b]);
    }
  }
  for (auto const& u : c1->arrows) {
    for (auto const& v : c2->arrows) {
      p.mor.push_back(one(objmap[u.src][v.src], objmap[u.tgt][v.tgt]));
    }
  }
  p.delta.resize(2);
  for (std::size_t a = 0; a < c1->size(); ++a) {
    for (std::size_t b = 0; b < c2->size(); ++b) {
      int const fab = objmap[a][b];
      for (std::size_t x = 0; x < c1->size(); ++x) {
        p.delta[0].push_back(one(d->oplus_obj[fab][objmap[x][b]],
                                 objmap[c1->oplus_obj[a][x]][b]));
      }
      for (std::size_t y = 0; y < c2->size(); ++y) {
        p.delta[1].push_back(one(d->oplus_obj[fab][objmap[a][y]],
                                 objmap[a][c2->oplus_obj[b][y]]));
      }
    }
  }
  return p;
}

namespace {

// f(c with slot i = x_1) + ... -> f(c with slot i = x_1 + ...), from the left.
int delta_fold(PkObject const& f, std::size_t i, std::vector<int> c,
               std::vector<int> const& xs) {
  PermCat const& d = *f.tgt;
  PermCat const& ci = *f.src[i];
  if (xs.empty()) {
    c[i] = ci.zero;
    return d.ident[f.at(c)];
  }
  c[i] = xs[0];
  int acc = d.ident[f.at(c)];
  for (std::size_t t = 1; t < xs.size(); ++t) {
    auto cx = c;
    cx[i] = xs[t];
    acc = d.comp(f.d(i, c, xs[t]), d.oplus_mor[acc][d.ident[f.at(cx)]]);
    c[i] = ci.oplus_obj[c[i]][xs[t]];
  }
  return acc;
}

}  // namespace

bool interchange_holds(PkObject const& f, std::vector<int> const& as,
                       std::vector<int> const& bs) {
  if (f.arity() != 2) {
    throw ProfileError("interchange_holds: arity must be 2");
  }
  PermCat const& d = *f.tgt;
  std::size_t const m = as.size();
  std::size_t const n = bs.size();
  int const A = f.src[0]->sum(as);
  int const B = f.src[1]->sum(bs);
  // route through sum over i of f(a_i, B)
  std::vector<int> first;
  for (int a : as) {
    first.push_back(delta_fold(f, 1, {a, 0}, bs));
  }
  int route1 = d.comp(delta_fold(f, 0, {0, B}, as), d.sum_arrows(first));
  // route through the shuffle and the sum over j of f(A, b_j)
  std::vector<int> target_order(m * n);
  std::vector<int> img(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      target_order[j * m + i] = f.at({as[i], bs[j]});
      img[i * n + j] = static_cast<int>(j * m + i);
    }
  }
  int sh = d.shuffle(target_order, Perm(img));
  std::vector<int> second;
  for (int b : bs) {
    second.push_back(delta_fold(f, 0, {0, b}, as));
  }
  int route2 = d.comp(delta_fold(f, 1, {A, 0}, bs),
                      d.comp(d.sum_arrows(second), sh));
  return route1 == route2;
}

// ---------------------------------------------------------------- U on maps

Multifunctor laxstar_to_multifunctor(LaxStarMap const& f, Budget b) {
  PermCat const& c = *f.src;
  PermCat const& d = *f.tgt;
  Multicat uc = underlying(f.src);
  Multicat ud = underlying(f.tgt);
  auto frag = make_fragment(uc, b);
  std::vector<Mor> gens;
  for (int g : frag->gens) {
    Mor const& x = frag->mors[g];
    Profile q;
    for (ObjId a : x.profile.source) {
      q.source.push_back(f.obj[a]);
    }
    q.target = f.obj[x.target()];
    int arrow = -1;
    switch (x.arity()) {
      case 0:
        arrow = d.ident[d.zero];
        break;
      case 1:
        arrow = f.mor[c.arrow(x.tag)];
        break;
      case 2:
        arrow = f.lambda[x.profile.source[0]][x.profile.source[1]];
        break;
      default:
        throw Error("unexpected generator of " + uc.name());
    }
    gens.push_back(Mor{q, d.arrows[arrow].name});
  }
  auto r = extend(frag, ud, f.obj, gens);
  if (!r) {
    throw Error("laxstar_to_multifunctor: not a lax* map");
  }
  return *r;
}

Mor uf_direct(LaxStarMap const& f, Mor const& phi) {
  PermCat const& d = *f.tgt;
  Profile q;
  for (ObjId a : phi.profile.source) {
    q.source.push_back(f.obj[a]);
  }
  q.target = f.obj[phi.target()];
  int r = d.comp(f.mor[f.src->arrow(phi.tag)],
                 lambda_fold(f, phi.profile.source));
  return Mor{q, d.arrows[r].name};
}

LaxStarMap multifunctor_to_laxstar(Multifunctor const& g, PermCatPtr const& c,
                                   PermCatPtr const& d) {
  std::size_t const n = c->size();
  LaxStarMap f{c, d, g.obj, {},
               std::vector<std::vector<int>>(n, std::vector<int>(n))};
  for (auto const& a : c->arrows) {
    f.mor.push_back(d->arrow(g(Mor{Profile{{a.src}, a.tgt}, a.name}).tag));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int const ab = c->oplus_obj[a][b];
      Mor mu{Profile{{static_cast<ObjId>(a), static_cast<ObjId>(b)}, ab},
             c->arrows[c->ident[ab]].name};
      f.lambda[a][b] = d->arrow(g(mu).tag);
    }
  }
  return f;
}

}  // namespace mc
