#include "mc/gstar.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "json.hpp"
#include "mc/permcat.hpp"

namespace mc {

using nlohmann::json;

GObj GObj::base() {
  GObj g;
  g.base_ = true;
  return g;
}

GObj GObj::of(std::vector<int> dims) {
  GObj g;
  for (int d : dims) {
    if (d < 0) {
      throw Error("negative size in an index object");
    }
    if (d == 0) {
      return base();
    }
  }
  g.dims_ = std::move(dims);
  return g;
}

int GObj::total() const {
  int t = 0;
  for (int d : dims_) {
    t += d;
  }
  return t;
}

std::string GObj::str() const {
  if (base_) {
    return "*";
  }
  std::string s = "(";
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    s += (i ? "," : "") + std::to_string(dims_[i]);
  }
  return s + ")";
}

GObj parse_gobj(std::string_view s) {
  if (s == "*") {
    return GObj::base();
  }
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') {
      throw Error("index object: unbalanced parentheses in '" + std::string(s)
                  + "'");
    }
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> dims;
  while (!s.empty()) {
    auto comma = s.find(',');
    auto part = s.substr(0, comma);
    int v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || p != part.data() + part.size()) {
      throw Error("index object: bad size '" + std::string(part) + "'");
    }
    dims.push_back(v);
    if (comma == std::string_view::npos) {
      break;
    }
    s = s.substr(comma + 1);
  }
  return GObj::of(std::move(dims));
}

// based maps

FMap FMap::identity(int n) {
  FMap f{n, n, {}};
  for (int t = 1; t <= n; ++t) {
    f.img.push_back(t);
  }
  return f;
}

bool FMap::is_zero() const {
  return std::all_of(img.begin(), img.end(), [](int x) { return x == 0; });
}

bool FMap::is_identity() const {
  if (src != tgt) {
    return false;
  }
  for (int t = 0; t < src; ++t) {
    if (img[t] != t + 1) {
      return false;
    }
  }
  return true;
}

std::uint32_t FMap::preimage(std::uint32_t subset) const {
  std::uint32_t out = 0;
  for (int t = 0; t < src; ++t) {
    if (img[t] > 0 && (subset >> (img[t] - 1) & 1u)) {
      out |= 1u << t;
    }
  }
  return out;
}

FMap compose_f(FMap const& b, FMap const& a) {
  if (a.tgt != b.src) {
    throw ProfileError("based maps do not compose");
  }
  FMap c{a.src, b.tgt, {}};
  for (int x : a.img) {
    c.img.push_back(x == 0 ? 0 : b.img[x - 1]);
  }
  return c;
}

// morphisms

std::string GMor::str() const {
  std::string s = src.str() + "->" + tgt.str();
  if (null) {
    return s + " null";
  }
  s += " q=[";
  for (std::size_t i = 0; i < q.size(); ++i) {
    s += (i ? " " : "") + std::to_string(q[i] + 1);
  }
  s += "] alpha=";
  for (auto const& a : alpha) {
    s += "[";
    for (std::size_t t = 0; t < a.img.size(); ++t) {
      s += (t ? " " : "") + std::to_string(a.img[t]);
    }
    s += "]";
  }
  return s;
}

GMor null_gmor(GObj src, GObj tgt) {
  return GMor{std::move(src), std::move(tgt), true, {}, {}};
}

GObj pushforward(GObj const& a, std::vector<int> const& q, std::size_t s) {
  if (a.is_base()) {
    return a;
  }
  std::vector<int> d(s, 1);
  for (std::size_t i = 0; i < q.size(); ++i) {
    d[q[i]] = a.dims()[i];
  }
  return GObj::of(d);
}

GMor make_gmor(GObj src, GObj tgt, std::vector<int> q,
               std::vector<FMap> alpha) {
  if (src.is_base() || tgt.is_base()) {
    return null_gmor(std::move(src), std::move(tgt));
  }
  std::size_t const r = src.length();
  std::size_t const s = tgt.length();
  if (q.size() != r || alpha.size() != s) {
    throw Error("index morphism: wrong number of slots");
  }
  std::vector<int> pre(s, -1);
  for (std::size_t i = 0; i < r; ++i) {
    if (q[i] < 0 || q[i] >= static_cast<int>(s) || pre[q[i]] >= 0) {
      throw Error("index morphism: q is not an injection");
    }
    pre[q[i]] = static_cast<int>(i);
  }
  bool zero = false;
  for (std::size_t j = 0; j < s; ++j) {
    int const d = pre[j] >= 0 ? src.dims()[pre[j]] : 1;
    auto const& a = alpha[j];
    if (a.src != d || a.tgt != tgt.dims()[j]
        || a.img.size() != static_cast<std::size_t>(d)) {
      throw Error("index morphism: map " + std::to_string(j + 1)
                  + " has the wrong sizes");
    }
    for (int x : a.img) {
      if (x < 0 || x > a.tgt) {
        throw Error("index morphism: map value out of range");
      }
    }
    zero = zero || a.is_zero();
  }
  if (zero) {
    return null_gmor(std::move(src), std::move(tgt));
  }
  return GMor{std::move(src), std::move(tgt), false, std::move(q),
              std::move(alpha)};
}

GMor identity_gmor(GObj a) {
  if (a.is_base()) {
    return null_gmor(a, a);
  }
  std::vector<int> q;
  std::vector<FMap> alpha;
  for (std::size_t i = 0; i < a.length(); ++i) {
    q.push_back(static_cast<int>(i));
    alpha.push_back(FMap::identity(a.dims()[i]));
  }
  return make_gmor(a, a, std::move(q), std::move(alpha));
}

GMor compose_g(GMor const& g2, GMor const& g1) {
  if (g1.tgt != g2.src) {
    throw ProfileError("index morphisms do not compose: " + g1.tgt.str()
                       + " vs " + g2.src.str());
  }
  if (g1.null || g2.null) {
    return null_gmor(g1.src, g2.tgt);
  }
  std::size_t const s = g2.src.length();
  std::size_t const t = g2.tgt.length();
  std::vector<int> pre2(t, -1);
  for (std::size_t j = 0; j < s; ++j) {
    pre2[g2.q[j]] = static_cast<int>(j);
  }
  std::vector<int> q;
  for (int x : g1.q) {
    q.push_back(g2.q[x]);
  }
  std::vector<FMap> alpha;
  for (std::size_t k = 0; k < t; ++k) {
    if (pre2[k] >= 0) {
      alpha.push_back(compose_f(g2.alpha[k], g1.alpha[pre2[k]]));
    } else {
      alpha.push_back(g2.alpha[k]);
    }
  }
  return make_gmor(g1.src, g2.tgt, std::move(q), std::move(alpha));
}

GObj odot(GObj const& a, GObj const& b) {
  if (a.is_base() || b.is_base()) {
    return GObj::base();
  }
  auto d = a.dims();
  d.insert(d.end(), b.dims().begin(), b.dims().end());
  return GObj::of(std::move(d));
}

GMor odot_mor(GMor const& f, GMor const& g) {
  GObj src = odot(f.src, g.src);
  GObj tgt = odot(f.tgt, g.tgt);
  if (f.null || g.null) {
    return null_gmor(src, tgt);
  }
  std::vector<int> q = f.q;
  int const off = static_cast<int>(f.tgt.length());
  for (int x : g.q) {
    q.push_back(x + off);
  }
  std::vector<FMap> alpha = f.alpha;
  alpha.insert(alpha.end(), g.alpha.begin(), g.alpha.end());
  return make_gmor(src, tgt, std::move(q), std::move(alpha));
}

GMor symmetry_g(GObj const& a, GObj const& b) {
  GObj ab = odot(a, b);
  GObj ba = odot(b, a);
  if (ab.is_base()) {
    return null_gmor(ab, ba);
  }
  int const m = static_cast<int>(a.length());
  int const n = static_cast<int>(b.length());
  std::vector<int> q;
  for (int i = 0; i < m; ++i) {
    q.push_back(n + i);
  }
  for (int j = 0; j < n; ++j) {
    q.push_back(j);
  }
  std::vector<FMap> alpha;
  for (int d : ba.dims()) {
    alpha.push_back(FMap::identity(d));
  }
  return make_gmor(ab, ba, std::move(q), std::move(alpha));
}

namespace {

// Every injection {0..r-1} -> {0..s-1} in lexicographic order.
std::vector<std::vector<int>> injections(std::size_t r, std::size_t s) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(s, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == r) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = 0; j < s; ++j) {
      if (!used[j]) {
        used[j] = true;
        cur.push_back(static_cast<int>(j));
        self(self);
        cur.pop_back();
        used[j] = false;
      }
    }
  };
  rec(rec);
  return out;
}

// Based maps d -> n other than the zero map.
std::vector<FMap> nonzero_maps(int d, int n) {
  std::vector<FMap> out;
  FMap f{d, n, std::vector<int>(d, 0)};
  while (true) {
    if (!f.is_zero()) {
      out.push_back(f);
    }
    int t = d;
    while (t > 0 && ++f.img[t - 1] > n) {
      f.img[--t] = 0;
    }
    if (t == 0) {
      break;
    }
  }
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) {
    r *= b;
  }
  return r;
}

}  // namespace

std::vector<GMor> enumerate_g_homset(GObj const& m, GObj const& n) {
  std::vector<GMor> out{null_gmor(m, n)};
  if (m.is_base() || n.is_base()) {
    return out;
  }
  std::size_t const s = n.length();
  for (auto const& q : injections(m.length(), s)) {
    std::vector<int> pre(s, -1);
    for (std::size_t i = 0; i < q.size(); ++i) {
      pre[q[i]] = static_cast<int>(i);
    }
    std::vector<std::vector<FMap>> choices;
    for (std::size_t j = 0; j < s; ++j) {
      int const d = pre[j] >= 0 ? m.dims()[pre[j]] : 1;
      choices.push_back(nonzero_maps(d, n.dims()[j]));
    }
    std::vector<std::size_t> idx(s, 0);
    while (true) {
      std::vector<FMap> alpha;
      for (std::size_t j = 0; j < s; ++j) {
        alpha.push_back(choices[j][idx[j]]);
      }
      out.push_back(make_gmor(m, n, q, std::move(alpha)));
      std::size_t j = s;
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

std::size_t g_hom_cardinality(GObj const& m, GObj const& n) {
  if (m.is_base() || n.is_base()) {
    return 1;
  }
  std::size_t total = 1;
  std::size_t const s = n.length();
  for (auto const& q : injections(m.length(), s)) {
    std::vector<int> pre(s, -1);
    for (std::size_t i = 0; i < q.size(); ++i) {
      pre[q[i]] = static_cast<int>(i);
    }
    std::size_t prod = 1;
    for (std::size_t j = 0; j < s; ++j) {
      int const d = pre[j] >= 0 ? m.dims()[pre[j]] : 1;
      prod *= ipow(n.dims()[j] + 1, d) - 1;
    }
    total += prod;
  }
  return total;
}

std::vector<GObj> gobjs_upto(int total) {
  std::vector<GObj> out{GObj::base(), GObj()};
  // compositions of every t <= total
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left) -> void {
    for (int d = 1; d <= left; ++d) {
      cur.push_back(d);
      out.push_back(GObj::of(cur));
      self(self, left - d);
      cur.pop_back();
    }
  };
  rec(rec, total);
  std::sort(out.begin() + 2, out.end(), [](GObj const& a, GObj const& b) {
    return std::pair(a.total(), a.dims()) < std::pair(b.total(), b.dims());
  });
  return out;
}

// generators

GMor stabilization(GObj const& a) {
  if (a.is_base()) {
    return null_gmor(a, a);
  }
  GObj b = odot(a, GObj::of({1}));
  std::vector<int> q;
  std::vector<FMap> alpha;
  for (std::size_t i = 0; i < a.length(); ++i) {
    q.push_back(static_cast<int>(i));
    alpha.push_back(FMap::identity(a.dims()[i]));
  }
  alpha.push_back(FMap::identity(1));
  return make_gmor(a, b, std::move(q), std::move(alpha));
}

GMor permutation_g(GObj const& a, std::vector<int> q) {
  if (a.is_base()) {
    return null_gmor(a, a);
  }
  if (q.size() != a.length()) {
    throw Error("permutation of the wrong length");
  }
  GObj b = pushforward(a, q, a.length());
  std::vector<FMap> alpha;
  for (int d : b.dims()) {
    alpha.push_back(FMap::identity(d));
  }
  return make_gmor(a, b, std::move(q), std::move(alpha));
}

GMor fmap_g(GObj const& a, std::vector<FMap> alpha) {
  if (a.is_base()) {
    return null_gmor(a, a);
  }
  std::vector<int> q;
  std::vector<int> d;
  for (std::size_t i = 0; i < a.length(); ++i) {
    q.push_back(static_cast<int>(i));
    d.push_back(i < alpha.size() ? alpha[i].tgt : 0);
  }
  return make_gmor(a, GObj::of(d), std::move(q), std::move(alpha));
}

bool is_stabilization(GMor const& g) {
  if (g.null || g.tgt.length() != g.src.length() + 1) {
    return false;
  }
  for (std::size_t i = 0; i < g.q.size(); ++i) {
    if (g.q[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return std::all_of(g.alpha.begin(), g.alpha.end(),
                     [](FMap const& f) { return f.is_identity(); });
}

bool is_permutation(GMor const& g) {
  return !g.null && g.src.length() == g.tgt.length()
         && std::all_of(g.alpha.begin(), g.alpha.end(),
                        [](FMap const& f) { return f.is_identity(); });
}

bool is_fmap(GMor const& g) {
  if (g.null || g.src.length() != g.tgt.length()) {
    return false;
  }
  for (std::size_t i = 0; i < g.q.size(); ++i) {
    if (g.q[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

std::vector<GMor> factor_generators(GMor const& g) {
  if (g.null) {
    throw Error("the null morphism has no factorization");
  }
  std::size_t const r = g.src.length();
  std::size_t const s = g.tgt.length();
  std::vector<GMor> out;
  GObj cur = g.src;
  for (std::size_t k = r; k < s; ++k) {
    out.push_back(stabilization(cur));
    cur = out.back().tgt;
  }
  // extend q by the missed positions in increasing order
  std::vector<int> p = g.q;
  std::vector<bool> hit(s, false);
  for (int x : g.q) {
    hit[x] = true;
  }
  for (std::size_t j = 0; j < s; ++j) {
    if (!hit[j]) {
      p.push_back(static_cast<int>(j));
    }
  }
  GMor sigma = permutation_g(cur, p);
  bool const has_sigma = sigma != identity_gmor(cur);
  if (has_sigma) {
    out.push_back(sigma);
    cur = sigma.tgt;
  }
  GMor a = fmap_g(cur, g.alpha);
  if (a != identity_gmor(cur) || !has_sigma) {
    out.push_back(a);
  }
  return out;
}

// permutative laws

namespace {

struct GView {
  std::vector<GObj> objs;
  int total;

  std::vector<GObj> objects() const {
    return objs;
  }
  int find(GObj const& a) const {
    auto it = std::find(objs.begin(), objs.end(), a);
    return it == objs.end() ? -1 : static_cast<int>(it - objs.begin());
  }
  GObj zero() const {
    return GObj();
  }
  std::optional<GObj> oplus_obj(GObj const& a, GObj const& b) const {
    GObj c = odot(a, b);
    if (find(c) < 0) {
      return std::nullopt;
    }
    return c;
  }
  std::vector<GMor> hom(GObj const& a, GObj const& b) const {
    return enumerate_g_homset(a, b);
  }
  GObj src(GMor const& f) const {
    return f.src;
  }
  GObj tgt(GMor const& f) const {
    return f.tgt;
  }
  GMor id(GObj const& a) const {
    return identity_gmor(a);
  }
  GMor compose(GMor const& g, GMor const& f) const {
    return compose_g(g, f);
  }
  std::optional<GMor> oplus_arr(GMor const& f, GMor const& g) const {
    if (!oplus_obj(f.src, g.src) || !oplus_obj(f.tgt, g.tgt)) {
      return std::nullopt;
    }
    return odot_mor(f, g);
  }
  GMor gamma(GObj const& a, GObj const& b) const {
    return symmetry_g(a, b);
  }
  std::string show_obj(GObj const& a) const {
    return a.str();
  }
  std::string show_arr(GMor const& f) const {
    return f.str();
  }
};

}  // namespace

AxiomReport validate_gstar(int total) {
  GView v{gobjs_upto(total), total};
  return validate_permutative(v);
}

// json

std::string gmor_to_json(GMor const& g) {
  json j;
  j["src"] = g.src.str();
  j["tgt"] = g.tgt.str();
  j["null"] = g.null;
  if (!g.null) {
    std::vector<int> q;
    for (int x : g.q) {
      q.push_back(x + 1);
    }
    j["q"] = q;
    j["alpha"] = json::array();
    for (auto const& a : g.alpha) {
      j["alpha"].push_back(a.img);
    }
  }
  return j.dump();
}

GMor gmor_from_json(std::string const& text) {
  try {
    json j = json::parse(text);
    GObj src = parse_gobj(j.at("src").get<std::string>());
    GObj tgt = parse_gobj(j.at("tgt").get<std::string>());
    if (j.value("null", false)) {
      return null_gmor(src, tgt);
    }
    std::vector<int> q;
    for (int x : j.at("q").get<std::vector<int>>()) {
      q.push_back(x - 1);
    }
    std::vector<int> pre(tgt.length(), -1);
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (q[i] < 0 || q[i] >= static_cast<int>(pre.size())) {
        throw Error("index morphism json: q out of range");
      }
      pre[q[i]] = static_cast<int>(i);
    }
    std::vector<FMap> alpha;
    auto const& as = j.at("alpha");
    for (std::size_t k = 0; k < as.size(); ++k) {
      FMap f;
      f.img = as[k].get<std::vector<int>>();
      f.src = static_cast<int>(f.img.size());
      f.tgt = k < tgt.length() ? tgt.dims()[k] : 0;
      alpha.push_back(std::move(f));
    }
    return make_gmor(src, tgt, std::move(q), std::move(alpha));
  } catch (json::exception const& e) {
    throw Error(std::string("index morphism json: ") + e.what());
  }
}

}  // namespace mc

namespace mc {

GAssocReport check_g_associativity(int total, Exec exec) {
  GAssocReport rep;
  auto const objs = gobjs_upto(total);
  std::size_t const n = objs.size();
  rep.objects = n;
  std::vector<std::vector<std::vector<GMor>>> homs(
      n, std::vector<std::vector<GMor>>(n));
  std::vector<std::vector<std::map<GMor, int>>> index(
      n, std::vector<std::map<GMor, int>>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      homs[a][b] = enumerate_g_homset(objs[a], objs[b]);
      for (std::size_t i = 0; i < homs[a][b].size(); ++i) {
        index[a][b].emplace(homs[a][b][i], static_cast<int>(i));
      }
    }
  }
  auto hs = [&](std::size_t a, std::size_t b) {
    return homs[a][b].size();
  };
  // table[a][b][c][x * |ab| + f] = index of x after f
  std::vector<std::vector<std::vector<std::vector<int>>>> table(
      n, std::vector<std::vector<std::vector<int>>>(
             n, std::vector<std::vector<int>>(n)));
  std::vector<std::vector<std::string>> errs(n);
  auto tabulate = [&](long a) {
    for (std::size_t b = 0; b < n; ++b) {
      GMor const ia = identity_gmor(objs[a]);
      for (auto const& f : homs[a][b]) {
        if (compose_g(identity_gmor(objs[b]), f) != f ||
            compose_g(f, ia) != f) {
          errs[a].push_back("unit law fails at " + f.str());
        }
      }
      for (std::size_t c = 0; c < n; ++c) {
        auto& t = table[a][b][c];
        t.assign(hs(a, b) * hs(b, c), -1);
        for (std::size_t x = 0; x < hs(b, c); ++x) {
          for (std::size_t f = 0; f < hs(a, b); ++f) {
            GMor const xf = compose_g(homs[b][c][x], homs[a][b][f]);
            auto it = index[a][c].find(xf);
            if (it == index[a][c].end()) {
              errs[a].push_back("composite outside its hom set: " + xf.str());
            } else {
              t[x * hs(a, b) + f] = it->second;
            }
          }
        }
      }
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long a = 0; a < static_cast<long>(n); ++a) {
      tabulate(a);
    }
  } else {
    for (long a = 0; a < static_cast<long>(n); ++a) {
      tabulate(a);
    }
  }
  for (auto& e : errs) {
    for (auto& s : e) {
      rep.failures.push_back(std::move(s));
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        rep.pairs += table[a][b][c].size();
      }
    }
  }
  if (!rep.ok()) {
    return rep;
  }
  std::vector<std::size_t> count(n, 0);
  std::vector<std::vector<std::string>> bad(n);
  auto triples = [&](long a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t const ab = hs(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        std::size_t const bc = hs(b, c);
        std::size_t const ac = hs(a, c);
        auto const& tabc = table[a][b][c];
        for (std::size_t d = 0; d < n; ++d) {
          std::size_t const cd = hs(c, d);
          auto const& tacd = table[a][c][d];
          auto const& tbcd = table[b][c][d];
          auto const& tabd = table[a][b][d];
          for (std::size_t x = 0; x < bc; ++x) {
            for (std::size_t f = 0; f < ab; ++f) {
              std::size_t const xf = tabc[x * ab + f];
              for (std::size_t y = 0; y < cd; ++y) {
                int const l = tacd[y * ac + xf];
                int const r = tabd[tbcd[y * bc + x] * ab + f];
                if (l != r && bad[a].size() < 10) {
                  bad[a].push_back("associativity fails at " +
                                   homs[a][b][f].str() + ", " +
                                   homs[b][c][x].str() + ", " +
                                   homs[c][d][y].str());
                }
              }
            }
          }
          count[a] += ab * bc * cd;
        }
      }
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long a = 0; a < static_cast<long>(n); ++a) {
      triples(a);
    }
  } else {
    for (long a = 0; a < static_cast<long>(n); ++a) {
      triples(a);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    rep.triples += count[a];
    for (auto& s : bad[a]) {
      rep.failures.push_back(std::move(s));
    }
  }
  return rep;
}

}  // namespace mc
