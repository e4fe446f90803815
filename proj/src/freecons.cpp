#include "mc/freecons.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace mc {

using nlohmann::json;

// graphs

void MGraph::validate() const {
  auto bad_name = [](std::string const& s) {
    return s.empty() || s.find_first_of("(),;|[]{} ") != std::string::npos;
  };
  std::set<std::string> seen;
  for (auto const& o : objects) {
    if (bad_name(o) || !seen.insert(o).second) {
      throw Error("graph: bad or repeated object label '" + o + "'");
    }
  }
  std::set<std::string> ids;
  auto const n = static_cast<ObjId>(objects.size());
  for (auto const& a : arrows) {
    if (bad_name(a.id) || a.id.rfind("1_", 0) == 0 || !ids.insert(a.id).second) {
      throw Error("graph: bad or repeated arrow id '" + a.id + "'");
    }
    for (ObjId x : a.source) {
      if (x < 0 || x >= n) {
        throw Error("graph: arrow " + a.id + " has a source out of range");
      }
    }
    if (a.target < 0 || a.target >= n) {
      throw Error("graph: arrow " + a.id + " has a target out of range");
    }
  }
}

MGraph mgraph_from_json(std::string const& text) {
  MGraph g;
  try {
    json j = json::parse(text);
    for (auto const& o : j.at("objects")) {
      g.objects.push_back(o.get<std::string>());
    }
    auto obj = [&](json const& v) {
      auto s = v.get<std::string>();
      auto it = std::find(g.objects.begin(), g.objects.end(), s);
      if (it == g.objects.end()) {
        throw Error("graph: unknown object '" + s + "'");
      }
      return static_cast<ObjId>(it - g.objects.begin());
    };
    for (auto const& a : j.at("arrows")) {
      MGraph::Arrow x;
      x.id = a.at("id").get<std::string>();
      for (auto const& s : a.at("source")) {
        x.source.push_back(obj(s));
      }
      x.target = obj(a.at("target"));
      g.arrows.push_back(std::move(x));
    }
  } catch (json::exception const& e) {
    throw Error(std::string("graph json: ") + e.what());
  }
  g.validate();
  return g;
}

std::string mgraph_to_json(MGraph const& g) {
  json j;
  j["objects"] = g.objects;
  j["arrows"] = json::array();
  for (auto const& a : g.arrows) {
    json s = json::array();
    for (ObjId x : a.source) {
      s.push_back(g.objects[x]);
    }
    j["arrows"].push_back(
        {{"id", a.id}, {"source", s}, {"target", g.objects[a.target]}});
  }
  return j.dump(2);
}

// trees

std::size_t height(Tree const& t) {
  if (t.is_identity()) {
    return 0;
  }
  std::size_t h = 0;
  for (auto const& c : t.children) {
    h = std::max(h, height(c));
  }
  return h + 1;
}

std::vector<ObjId> tree_source(MGraph const& g, Tree const& t) {
  if (t.is_identity()) {
    return {t.obj};
  }
  if (t.children.empty()) {
    return g.arrows.at(t.arrow).source;
  }
  std::vector<ObjId> out;
  for (auto const& c : t.children) {
    auto s = tree_source(g, c);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

ObjId tree_target(MGraph const& g, Tree const& t) {
  return t.is_identity() ? t.obj : g.arrows.at(t.arrow).target;
}

std::string tree_str(MGraph const& g, Tree const& t) {
  if (t.is_identity()) {
    return "1_" + g.objects.at(t.obj);
  }
  std::string s = g.arrows.at(t.arrow).id;
  if (!t.children.empty()) {
    s += "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      s += (i ? "," : "") + tree_str(g, t.children[i]);
    }
    s += ")";
  }
  return s;
}

namespace {

struct TreeParser {
  MGraph const& g;
  std::string_view s;
  std::size_t at = 0;

  [[noreturn]] void fail(std::string const& why) const {
    throw Error("tree '" + std::string(s) + "': " + why);
  }
  std::string_view word() {
    std::size_t b = at;
    while (at < s.size() && s[at] != '(' && s[at] != ')' && s[at] != ',') {
      ++at;
    }
    return s.substr(b, at - b);
  }
  Tree parse() {
    auto w = word();
    if (w.rfind("1_", 0) == 0) {
      auto lab = w.substr(2);
      auto it = std::find(g.objects.begin(), g.objects.end(), lab);
      if (it == g.objects.end()) {
        fail("unknown object");
      }
      return Tree{-1, static_cast<ObjId>(it - g.objects.begin()), {}};
    }
    auto it = std::find_if(g.arrows.begin(), g.arrows.end(),
                           [&](auto const& a) { return a.id == w; });
    if (it == g.arrows.end()) {
      fail("unknown arrow '" + std::string(w) + "'");
    }
    int const f = static_cast<int>(it - g.arrows.begin());
    if (at >= s.size() || s[at] != '(') {
      return Tree{f, 0, {}};
    }
    ++at;
    std::vector<Tree> cs;
    if (at < s.size() && s[at] == ')') {
      fail("empty child list");
    }
    while (true) {
      cs.push_back(parse());
      if (at >= s.size()) {
        fail("unterminated child list");
      }
      if (s[at++] == ')') {
        break;
      }
    }
    return make_node(g, f, std::move(cs));
  }
};

}  // namespace

Tree parse_tree(MGraph const& g, std::string_view s) {
  TreeParser p{g, s};
  Tree t = p.parse();
  if (p.at != s.size()) {
    p.fail("trailing characters");
  }
  return t;
}

Tree make_node(MGraph const& g, int f, std::vector<Tree> children) {
  auto const& a = g.arrows.at(f);
  if (children.size() != a.source.size()) {
    throw ProfileError("tree: arrow " + a.id + " has the wrong child count");
  }
  bool all_id = true;
  for (std::size_t j = 0; j < children.size(); ++j) {
    if (tree_target(g, children[j]) != a.source[j]) {
      throw ProfileError("tree: child " + std::to_string(j + 1) + " of "
                         + a.id + " has the wrong target");
    }
    all_id = all_id && children[j].is_identity();
  }
  if (all_id) {
    children.clear();
  }
  return Tree{f, 0, std::move(children)};
}

Tree tree_gamma(MGraph const& g, Tree const& outer,
                std::vector<Tree> const& inners) {
  auto const src = tree_source(g, outer);
  if (inners.size() != src.size()) {
    throw ProfileError("tree gamma: wrong number of inputs");
  }
  for (std::size_t j = 0; j < inners.size(); ++j) {
    if (tree_target(g, inners[j]) != src[j]) {
      throw ProfileError("tree gamma: input " + std::to_string(j + 1)
                         + " has the wrong target");
    }
  }
  if (outer.is_identity()) {
    return inners[0];
  }
  if (std::all_of(inners.begin(), inners.end(),
                  [](Tree const& t) { return t.is_identity(); })) {
    return outer;
  }
  if (outer.children.empty()) {
    return make_node(g, outer.arrow, inners);
  }
  std::vector<Tree> cs;
  std::size_t at = 0;
  for (auto const& c : outer.children) {
    std::size_t const k = c.is_identity() ? 1 : tree_source(g, c).size();
    std::vector<Tree> slice(inners.begin() + at, inners.begin() + at + k);
    at += k;
    cs.push_back(tree_gamma(g, c, slice));
  }
  return make_node(g, outer.arrow, std::move(cs));
}

std::vector<Tree> trees_upto(MGraph const& g, std::size_t h) {
  std::vector<Tree> ids;
  for (ObjId a = 0; a < static_cast<ObjId>(g.objects.size()); ++a) {
    ids.push_back(Tree{-1, a, {}});
  }
  std::vector<Tree> level = ids;
  for (std::size_t step = 0; step < h; ++step) {
    std::vector<std::vector<Tree>> by_target(g.objects.size());
    for (auto const& t : level) {
      by_target[tree_target(g, t)].push_back(t);
    }
    std::vector<Tree> next = ids;
    for (int f = 0; f < static_cast<int>(g.arrows.size()); ++f) {
      auto const& src = g.arrows[f].source;
      std::vector<std::size_t> idx(src.size(), 0);
      bool empty = false;
      for (ObjId x : src) {
        empty = empty || by_target[x].empty();
      }
      if (empty) {
        continue;
      }
      while (true) {
        std::vector<Tree> cs;
        for (std::size_t j = 0; j < src.size(); ++j) {
          cs.push_back(by_target[src[j]][idx[j]]);
        }
        next.push_back(make_node(g, f, std::move(cs)));
        std::size_t j = src.size();
        while (j > 0 && ++idx[j - 1] == by_target[src[j - 1]].size()) {
          idx[--j] = 0;
        }
        if (j == 0) {
          break;
        }
      }
    }
    level = std::move(next);
  }
  std::stable_sort(level.begin(), level.end(),
                   [](Tree const& a, Tree const& b) {
                     auto ha = height(a);
                     auto hb = height(b);
                     return ha != hb ? ha < hb : a < b;
                   });
  return level;
}

std::vector<Tree> trees_with_profile(MGraph const& g, std::size_t h,
                                     Profile const& p) {
  std::vector<Tree> out;
  for (auto& t : trees_upto(g, h)) {
    if (tree_target(g, t) == p.target && tree_source(g, t) == p.source) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

// the free multicategory

namespace {

class FreeImpl final : public MulticatImpl {
 public:
  FreeImpl(MGraph g, std::size_t h)
      : MulticatImpl("L(" + std::to_string(g.objects.size()) + " objects, "
                         + std::to_string(g.arrows.size()) + " arrows)",
                     g.objects, Kind::derived),
        g_(std::move(g)) {
    for (auto& t : trees_upto(g_, h)) {
      Profile p{tree_source(g_, t), tree_target(g_, t)};
      by_profile_[p].push_back(std::move(t));
    }
  }

  std::vector<Mor> hom(Profile const& p) const override {
    std::vector<Mor> out;
    std::size_t const k = p.arity();
    for (auto const& s : Perm::all(k)) {
      // act(t, s) has source entry i equal to source(t)[s(i)]
      Profile q{std::vector<ObjId>(k), p.target};
      for (std::size_t i = 0; i < k; ++i) {
        q.source[s[i]] = p.source[i];
      }
      auto it = by_profile_.find(q);
      if (it == by_profile_.end()) {
        continue;
      }
      for (auto const& t : it->second) {
        out.push_back(Mor{p, tag(t, s)});
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Mor ident(ObjId a) const override {
    return Mor{Profile{{a}, a}, tag(Tree{-1, a, {}}, Perm::identity(1))};
  }

  Mor gamma(Mor const& outer, std::span<const Mor> inners) const override {
    auto [t, s] = parts(outer);
    std::size_t const n = inners.size();
    Perm const si = s.inverse();
    std::vector<Tree> ts;
    std::vector<Perm> taus;
    std::vector<std::size_t> ar(n);
    for (std::size_t i = 0; i < n; ++i) {
      auto [u, tau] = parts(inners[si[i]]);
      ts.push_back(std::move(u));
      taus.push_back(std::move(tau));
      ar[i] = inners[i].arity();
    }
    Tree r = tree_gamma(g_, t, ts);
    Perm p = Perm::sum(taus) * Perm::block(s, ar);
    return Mor{composite_profile(outer, inners), tag(r, p)};
  }

  Mor act(Mor const& f, Perm const& sigma) const override {
    auto [t, s] = parts(f);
    return Mor{Profile{permute_source(f.profile.source, sigma), f.target()},
               tag(t, s * sigma)};
  }

  std::optional<std::vector<Mor>> generators() const override {
    std::vector<Mor> out;
    for (int f = 0; f < static_cast<int>(g_.arrows.size()); ++f) {
      auto const& a = g_.arrows[f];
      out.push_back(Mor{Profile{a.source, a.target},
                        tag(Tree{f, 0, {}}, Perm::identity(a.source.size()))});
    }
    return out;
  }

  std::string tag(Tree const& t, Perm const& s) const {
    return tree_str(g_, t) + "|" + s.str();
  }
  std::pair<Tree, Perm> parts(Mor const& f) const {
    auto bar = f.tag.find('|');
    if (bar == std::string::npos) {
      throw Error("free multicategory: malformed tag " + f.tag);
    }
    return {parse_tree(g_, std::string_view(f.tag).substr(0, bar)),
            Perm::parse(std::string_view(f.tag).substr(bar + 1))};
  }

  MGraph g_;
  std::map<Profile, std::vector<Tree>> by_profile_;
};

}  // namespace

Multicat free_multicat(MGraph const& g, std::size_t h) {
  g.validate();
  return Multicat(std::make_shared<FreeImpl>(g, h));
}

std::pair<Tree, Perm> free_parts(Multicat const& lx, Mor const& f) {
  auto impl = std::dynamic_pointer_cast<const FreeImpl>(lx.impl());
  if (!impl) {
    throw Error(lx.name() + " is not a free multicategory");
  }
  return impl->parts(f);
}

// the adjunction

std::vector<GraphMap> enumerate_graph_maps(MGraph const& g,
                                           Multicat const& n) {
  std::vector<GraphMap> out;
  for (auto const& obj : all_sources(n.size(), g.objects.size())) {
    std::vector<std::vector<Mor>> choices;
    bool empty = false;
    for (auto const& a : g.arrows) {
      Profile p{{}, obj[a.target]};
      for (ObjId x : a.source) {
        p.source.push_back(obj[x]);
      }
      choices.push_back(n.hom(p));
      empty = empty || choices.back().empty();
    }
    if (empty) {
      continue;
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      GraphMap m{obj, {}};
      for (std::size_t i = 0; i < choices.size(); ++i) {
        m.arrows.push_back(choices[i][idx[i]]);
      }
      out.push_back(std::move(m));
      std::size_t i = choices.size();
      while (i > 0 && ++idx[i - 1] == choices[i - 1].size()) {
        idx[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AdjunctionReport adjunction_check_free(MGraph const& g, Multicat const& n,
                                       EnumOptions opt, std::size_t h) {
  AdjunctionReport rep;
  for (auto const& a : g.arrows) {
    if (a.source.size() > opt.budget.arity) {
      throw Error("adjunction: arrow " + a.id + " exceeds the budget");
    }
  }
  Multicat lx = free_multicat(g, h);
  auto frag = make_fragment(lx, opt.budget);
  auto const gens = *lx.generators();
  std::vector<int> slot;  // fragment generator index of each arrow
  for (auto const& x : gens) {
    auto it = std::find(frag->gens.begin(), frag->gens.end(), frag->find(x));
    if (it == frag->gens.end()) {
      throw Error("adjunction: generator " + x.tag + " missing from fragment");
    }
    slot.push_back(static_cast<int>(it - frag->gens.begin()));
  }

  auto maps = enumerate_graph_maps(g, n);
  auto mfs = enumerate_multifunctors(lx, n, opt);
  rep.graph_maps = maps.size();
  rep.multifunctors = mfs.size();

  auto restrict = [&](Multifunctor const& f) {
    GraphMap m{f.obj, {}};
    for (int s : slot) {
      m.arrows.push_back(f.gens[s]);
    }
    return m;
  };
  for (auto const& m : maps) {
    std::vector<Mor> imgs(frag->gens.size());
    for (std::size_t i = 0; i < slot.size(); ++i) {
      imgs[slot[i]] = m.arrows[i];
    }
    auto f = extend(frag, n, m.obj, imgs);
    if (!f) {
      rep.failures.push_back("a graph map does not extend");
      continue;
    }
    if (restrict(*f) != m) {
      rep.failures.push_back("extension does not restrict to the graph map");
      continue;
    }
    if (std::find(mfs.begin(), mfs.end(), *f) == mfs.end()) {
      rep.failures.push_back("extension missing from the enumeration");
      continue;
    }
    ++rep.roundtrips;
  }
  for (auto const& f : mfs) {
    if (!std::binary_search(maps.begin(), maps.end(), restrict(f))) {
      rep.failures.push_back("restriction of " + f.label(n)
                             + " is not a listed graph map");
    }
  }
  return rep;
}

// the free permutative category

FreePerm::FreePerm(Multicat m, std::size_t length)
    : m_(std::move(m)), length_(length) {
  for (std::size_t k = 0; k <= length_; ++k) {
    for (auto& w : all_sources(m_.size(), k)) {
      index_[w] = static_cast<int>(words_.size());
      words_.push_back(std::move(w));
    }
    if (m_.size() == 0) {
      break;
    }
  }
}

int FreePerm::word(std::vector<ObjId> const& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

std::string FreePerm::show_word(int w) const {
  std::string s = "(";
  auto const& x = words_.at(w);
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += (i ? "," : "") + m_.label(x[i]);
  }
  return s + ")";
}

std::string FreePerm::show_arrow(Arrow const& a) const {
  std::string s = show_word(a.src) + "->" + show_word(a.tgt) + "[";
  for (std::size_t i = 0; i < a.phi.size(); ++i) {
    s += (i ? " " : "") + std::to_string(a.phi[i] + 1);
  }
  s += "]";
  std::vector<std::string> tags;
  for (auto const& p : a.parts) {
    tags.push_back(p.tag);
  }
  return s + join_tag(tags);
}

std::vector<FreePerm::Arrow> FreePerm::hom(int u, int v) const {
  auto const& us = words_.at(u);
  auto const& vs = words_.at(v);
  std::vector<Arrow> out;
  for (auto const& phi : all_sources(vs.size(), us.size())) {
    std::vector<std::vector<Mor>> choices;
    bool empty = false;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      Profile p{{}, vs[j]};
      for (std::size_t i = 0; i < us.size(); ++i) {
        if (phi[i] == static_cast<int>(j)) {
          p.source.push_back(us[i]);
        }
      }
      choices.push_back(m_.hom(p));
      empty = empty || choices.back().empty();
    }
    if (empty) {
      continue;
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      Arrow a{u, v, phi, {}};
      for (std::size_t j = 0; j < choices.size(); ++j) {
        a.parts.push_back(choices[j][idx[j]]);
      }
      out.push_back(std::move(a));
      std::size_t j = choices.size();
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

FreePerm::Arrow FreePerm::id(int u) const {
  auto const& us = words_.at(u);
  Arrow a{u, u, {}, {}};
  for (std::size_t i = 0; i < us.size(); ++i) {
    a.phi.push_back(static_cast<int>(i));
    a.parts.push_back(m_.ident(us[i]));
  }
  return a;
}

FreePerm::Arrow FreePerm::compose(Arrow const& g, Arrow const& f) const {
  if (g.src != f.tgt) {
    throw ProfileError("free permutative: composable arrows required");
  }
  Arrow h{f.src, g.tgt, {}, {}};
  for (int p : f.phi) {
    h.phi.push_back(g.phi[p]);
  }
  for (std::size_t k = 0; k < g.parts.size(); ++k) {
    std::vector<Mor> inners;
    std::vector<int> grouped;  // positions of u in the order of the composite
    for (std::size_t j = 0; j < f.parts.size(); ++j) {
      if (g.phi[j] != static_cast<int>(k)) {
        continue;
      }
      inners.push_back(f.parts[j]);
      for (std::size_t i = 0; i < f.phi.size(); ++i) {
        if (f.phi[i] == static_cast<int>(j)) {
          grouped.push_back(static_cast<int>(i));
        }
      }
    }
    Mor c = m_.gamma(g.parts[k], inners);
    std::vector<int> sorted = grouped;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> pi(sorted.size());
    for (std::size_t t = 0; t < sorted.size(); ++t) {
      pi[t] = static_cast<int>(
          std::find(grouped.begin(), grouped.end(), sorted[t])
          - grouped.begin());
    }
    h.parts.push_back(m_.act(c, Perm(pi)));
  }
  return h;
}

std::optional<int> FreePerm::oplus_obj(int u, int v) const {
  auto w = words_.at(u);
  auto const& b = words_.at(v);
  w.insert(w.end(), b.begin(), b.end());
  int r = word(w);
  if (r < 0) {
    return std::nullopt;
  }
  return r;
}

std::optional<FreePerm::Arrow> FreePerm::oplus_arr(Arrow const& f,
                                                   Arrow const& g) const {
  auto s = oplus_obj(f.src, g.src);
  auto t = oplus_obj(f.tgt, g.tgt);
  if (!s || !t) {
    return std::nullopt;
  }
  Arrow h{*s, *t, f.phi, f.parts};
  int const off = static_cast<int>(words_[f.tgt].size());
  for (int p : g.phi) {
    h.phi.push_back(p + off);
  }
  h.parts.insert(h.parts.end(), g.parts.begin(), g.parts.end());
  return h;
}

FreePerm::Arrow FreePerm::gamma(int u, int v) const {
  auto uv = oplus_obj(u, v);
  auto vu = oplus_obj(v, u);
  if (!uv || !vu) {
    throw Error("free permutative: symmetry outside the fragment");
  }
  int const m = static_cast<int>(words_[u].size());
  int const n = static_cast<int>(words_[v].size());
  Arrow a{*uv, *vu, {}, {}};
  for (int i = 0; i < m; ++i) {
    a.phi.push_back(n + i);
  }
  for (int j = 0; j < n; ++j) {
    a.phi.push_back(j);
  }
  for (ObjId x : words_[*vu]) {
    a.parts.push_back(m_.ident(x));
  }
  return a;
}

std::optional<PermCatPtr> FreePerm::as_permcat(std::string name) const {
  int const n = static_cast<int>(words_.size());
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (!oplus_obj(u, v)) {
        return std::nullopt;
      }
    }
  }
  auto c = std::make_shared<PermCat>();
  c->name = std::move(name);
  std::vector<Arrow> arrs;
  std::map<Arrow, int> at;
  for (int u = 0; u < n; ++u) {
    c->objects.push_back(show_word(u));
    for (int v = 0; v < n; ++v) {
      for (auto& a : hom(u, v)) {
        at[a] = static_cast<int>(arrs.size());
        c->arrows.push_back({show_arrow(a), u, v});
        arrs.push_back(std::move(a));
      }
    }
  }
  c->zero = word({});
  int const na = static_cast<int>(arrs.size());
  c->oplus_obj.assign(n, std::vector<int>(n));
  c->gamma.assign(n, std::vector<int>(n));
  for (int u = 0; u < n; ++u) {
    c->ident.push_back(at.at(id(u)));
    for (int v = 0; v < n; ++v) {
      c->oplus_obj[u][v] = *oplus_obj(u, v);
      c->gamma[u][v] = at.at(gamma(u, v));
    }
  }
  c->compose.assign(na, std::vector<int>(na, -1));
  c->oplus_mor.assign(na, std::vector<int>(na));
  for (int g = 0; g < na; ++g) {
    for (int f = 0; f < na; ++f) {
      if (arrs[g].src == arrs[f].tgt) {
        c->compose[g][f] = at.at(compose(arrs[g], arrs[f]));
      }
      c->oplus_mor[g][f] = at.at(*oplus_arr(arrs[g], arrs[f]));
    }
  }
  c->finish();
  return c;
}

namespace {

struct FreePermView {
  FreePerm const& f;
  std::vector<std::vector<std::vector<FreePerm::Arrow>>> homs;
  std::vector<std::vector<std::optional<int>>> sums;

  explicit FreePermView(FreePerm const& fp) : f(fp) {
    std::size_t const n = f.words().size();
    homs.assign(n, std::vector<std::vector<FreePerm::Arrow>>(n));
    sums.assign(n, std::vector<std::optional<int>>(n));
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        homs[u][v] = f.hom(static_cast<int>(u), static_cast<int>(v));
        sums[u][v] = f.oplus_obj(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }

  std::vector<int> objects() const {
    std::vector<int> out(f.words().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] = static_cast<int>(i);
    }
    return out;
  }
  int zero() const {
    return f.word({});
  }
  std::optional<int> oplus_obj(int a, int b) const {
    return sums[a][b];
  }
  std::vector<FreePerm::Arrow> const& hom(int a, int b) const {
    return homs[a][b];
  }
  int src(FreePerm::Arrow const& a) const {
    return a.src;
  }
  int tgt(FreePerm::Arrow const& a) const {
    return a.tgt;
  }
  FreePerm::Arrow id(int a) const {
    return f.id(a);
  }
  FreePerm::Arrow compose(FreePerm::Arrow const& g,
                          FreePerm::Arrow const& h) const {
    return f.compose(g, h);
  }
  std::optional<FreePerm::Arrow> oplus_arr(FreePerm::Arrow const& a,
                                           FreePerm::Arrow const& b) const {
    return f.oplus_arr(a, b);
  }
  FreePerm::Arrow gamma(int a, int b) const {
    return f.gamma(a, b);
  }
  std::string show_obj(int a) const {
    return f.show_word(a);
  }
  std::string show_arr(FreePerm::Arrow const& a) const {
    return f.show_arrow(a);
  }
};

}  // namespace

AxiomReport validate_free_perm(FreePerm const& f) {
  return validate_permutative(FreePermView{f});
}

}  // namespace mc
