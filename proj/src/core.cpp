#include "mc/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace mc {

// Perm

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || static_cast<std::size_t>(x) >= img_.size() || seen[x]) {
      throw Error("not a permutation: " + str());
    }
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::transposition(std::size_t k, std::size_t i, std::size_t j) {
  auto v = identity(k).img_;
  std::swap(v.at(i), v.at(j));
  return Perm(std::move(v));
}

std::vector<Perm> Perm::all(std::size_t k) {
  std::vector<Perm> out;
  auto v = identity(k).img_;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

Perm Perm::block(Perm const& sigma, std::span<const std::size_t> sizes) {
  std::size_t const k = sigma.size();
  if (sizes.size() != k) {
    throw Error("block permutation: size list does not match");
  }
  // source block i has the size of result block sigma^{-1}(i)
  Perm const inv = sigma.inverse();
  std::vector<std::size_t> src_start(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) {
    src_start[i + 1] = src_start[i] + sizes[inv[i]];
  }
  std::vector<int> out;
  out.reserve(src_start[k]);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t o = 0; o < sizes[t]; ++o) {
      out.push_back(static_cast<int>(src_start[sigma[t]] + o));
    }
  }
  return Perm(std::move(out));
}

Perm Perm::sum(std::span<const Perm> taus) {
  std::vector<int> out;
  int offset = 0;
  for (auto const& t : taus) {
    for (int x : t.img_) {
      out.push_back(offset + x);
    }
    offset += static_cast<int>(t.size());
  }
  return Perm(std::move(out));
}

bool Perm::is_identity() const noexcept {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != static_cast<int>(i)) {
      return false;
    }
  }
  return true;
}

Perm Perm::operator*(Perm const& t) const {
  if (t.size() != size()) {
    throw Error("composing permutations of different sizes");
  }
  std::vector<int> v(size());
  for (std::size_t i = 0; i < size(); ++i) {
    v[i] = img_[t.img_[i]];
  }
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(size());
  for (std::size_t i = 0; i < size(); ++i) {
    v[img_[i]] = static_cast<int>(i);
  }
  return Perm(std::move(v));
}

std::string Perm::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (i) {
      s += ' ';
    }
    s += std::to_string(img_[i] + 1);
  }
  return s + "]";
}

Perm Perm::parse(std::string_view s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') {
    throw Error("malformed permutation: " + std::string(s));
  }
  std::vector<int> img;
  std::size_t i = 1;
  while (i + 1 < s.size()) {
    if (s[i] == ' ') {
      ++i;
      continue;
    }
    int v = 0;
    std::size_t const start = i;
    while (i + 1 < s.size() && s[i] >= '0' && s[i] <= '9') {
      v = v * 10 + (s[i] - '0');
      ++i;
    }
    if (i == start || v < 1) {
      throw Error("malformed permutation: " + std::string(s));
    }
    img.push_back(v - 1);
  }
  return Perm(std::move(img));
}

// Multicat

MulticatImpl::MulticatImpl(std::string name, std::vector<std::string> labels,
                           Kind kind, std::optional<std::size_t> max_arity)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      kind_(kind),
      max_arity_(max_arity) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) {
    throw Error("duplicate object labels in " + name_);
  }
}

Multicat::Multicat(std::shared_ptr<const MulticatImpl> impl)
    : impl_(std::move(impl)) {}

void Multicat::check_obj(ObjId a) const {
  if (a < 0 || static_cast<std::size_t>(a) >= size()) {
    throw Error("unknown object id " + std::to_string(a) + " in " + name());
  }
}

std::string const& Multicat::label(ObjId a) const {
  check_obj(a);
  return impl_->labels_[a];
}

ObjId Multicat::find(std::string_view label) const {
  auto const& ls = impl_->labels_;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) {
    throw Error("unknown object '" + std::string(label) + "' in " + name());
  }
  return static_cast<ObjId>(it - ls.begin());
}

std::vector<Mor> Multicat::hom(Profile const& p) const {
  for (ObjId a : p.source) {
    check_obj(a);
  }
  check_obj(p.target);
  if (max_arity() && p.arity() > *max_arity()) {
    throw BudgetError("arity " + std::to_string(p.arity())
                      + " exceeds the declared maximum "
                      + std::to_string(*max_arity()) + " of " + name());
  }
  return impl_->hom(p);
}

bool Multicat::contains(Mor const& f) const {
  auto const h = hom(f.profile);
  return std::find(h.begin(), h.end(), f) != h.end();
}

Mor Multicat::ident(ObjId a) const {
  check_obj(a);
  return impl_->ident(a);
}

Mor Multicat::gamma(Mor const& outer, std::span<const Mor> inners) const {
  if (inners.size() != outer.arity()) {
    throw ProfileError("gamma: " + std::to_string(inners.size())
                       + " inputs for a morphism of arity "
                       + std::to_string(outer.arity()));
  }
  for (std::size_t j = 0; j < inners.size(); ++j) {
    if (inners[j].target() != outer.profile.source[j]) {
      throw ProfileError("gamma: input " + std::to_string(j + 1)
                         + " has the wrong target");
    }
  }
  if (max_arity()) {
    std::size_t total = 0;
    for (auto const& g : inners) {
      total += g.arity();
    }
    if (total > *max_arity()) {
      throw BudgetError("composite arity exceeds the declared maximum of "
                        + name());
    }
  }
  return impl_->gamma(outer, inners);
}

Mor Multicat::act(Mor const& f, Perm const& sigma) const {
  if (sigma.size() != f.arity()) {
    throw ProfileError("act: permutation size does not match arity");
  }
  return impl_->act(f, sigma);
}

bool BasedMulticat::from_base(Mor const& f) const {
  return f == base_mor(f.arity());
}

// helpers

Profile composite_profile(Mor const& outer, std::span<const Mor> inners) {
  Profile p;
  p.target = outer.target();
  for (auto const& g : inners) {
    p.source.insert(p.source.end(), g.profile.source.begin(),
                    g.profile.source.end());
  }
  return p;
}

std::vector<ObjId> permute_source(std::vector<ObjId> const& src,
                                  Perm const& sigma) {
  std::vector<ObjId> out(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    out[i] = src[sigma[i]];
  }
  return out;
}

std::string join_tag(std::span<const std::string> parts) {
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) {
      s += ',';
    }
    s += parts[i];
  }
  return s + ")";
}

std::vector<std::string> split_tag(std::string_view tag) {
  if (tag.size() < 2 || tag.front() != '(' || tag.back() != ')') {
    throw Error("malformed composite tag: " + std::string(tag));
  }
  std::vector<std::string> out;
  std::string_view body = tag.substr(1, tag.size() - 2);
  if (body.empty()) {
    return out;
  }
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    char c = body[i];
    if (c == '(' || c == '[' || c == '{') {
      ++depth;
    } else if (c == ')' || c == ']' || c == '}') {
      --depth;
    } else if (c == ',' && depth == 0) {
      out.emplace_back(body.substr(start, i - start));
      start = i + 1;
    }
  }
  out.emplace_back(body.substr(start));
  return out;
}

std::string format_profile(Multicat const& m, Profile const& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.source.size(); ++i) {
    if (i) {
      s += ',';
    }
    s += m.label(p.source[i]);
  }
  return s + ")->" + m.label(p.target);
}

std::string format_mor(Multicat const& m, Mor const& f) {
  return f.tag + ":" + format_profile(m, f.profile);
}

std::vector<std::vector<ObjId>> all_sources(std::size_t n, std::size_t k) {
  std::vector<std::vector<ObjId>> out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  if (n == 0) {
    return out;
  }
  std::vector<ObjId> cur(k, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && ++cur[i - 1] == static_cast<ObjId>(n)) {
      cur[i - 1] = 0;
      --i;
    }
    if (i == 0) {
      return out;
    }
  }
}

// thin

namespace {

class ThinImpl final : public MulticatImpl {
 public:
  ThinImpl(std::string name, std::vector<std::string> labels, HomPredicate p,
           std::optional<std::vector<Profile>> gens)
      : MulticatImpl(std::move(name), std::move(labels), Kind::thin),
        pred_(std::move(p)),
        gens_(std::move(gens)) {}

  std::vector<Mor> hom(Profile const& p) const override {
    if (pred_(p)) {
      return {Mor{p, "*"}};
    }
    return {};
  }
  Mor ident(ObjId a) const override {
    return Mor{Profile{{a}, a}, "*"};
  }
  Mor gamma(Mor const& outer, std::span<const Mor> inners) const override {
    return forced(composite_profile(outer, inners));
  }
  Mor act(Mor const& f, Perm const& sigma) const override {
    return forced(Profile{permute_source(f.profile.source, sigma),
                          f.profile.target});
  }
  std::optional<std::vector<Mor>> generators() const override {
    if (!gens_) {
      return std::nullopt;
    }
    std::vector<Mor> out;
    for (auto const& p : *gens_) {
      out.push_back(Mor{p, "*"});
    }
    return out;
  }

 private:
  Mor forced(Profile p) const {
    if (!pred_(p)) {
      throw Error("thin multicategory " + name_
                  + " is not closed: empty hom set for a forced composite");
    }
    return Mor{std::move(p), "*"};
  }

  HomPredicate pred_;
  std::optional<std::vector<Profile>> gens_;
};

}  // namespace

Multicat thin(std::string name, std::vector<std::string> labels,
              HomPredicate pred, std::optional<std::vector<Profile>> gens) {
  return Multicat(std::make_shared<ThinImpl>(
      std::move(name), std::move(labels), std::move(pred), std::move(gens)));
}

Multicat terminal() {
  std::vector<Profile> gens{Profile{{}, 0}, Profile{{0, 0}, 0}};
  return thin(
      "*", {"*"}, [](Profile const&) { return true; }, gens);
}

Multicat discrete(std::vector<std::string> labels) {
  return thin(
      "discrete", std::move(labels),
      [](Profile const& p) {
        return p.arity() == 1 && p.source[0] == p.target;
      },
      std::vector<Profile>{});
}

Multicat indiscrete(std::vector<std::string> labels) {
  std::size_t const n = labels.size();
  std::vector<Profile> gens;
  for (ObjId b = 0; b < static_cast<ObjId>(n); ++b) {
    gens.push_back(Profile{{}, b});
    for (ObjId a = 0; a < static_cast<ObjId>(n); ++a) {
      if (a != b) {
        gens.push_back(Profile{{a}, b});
      }
    }
    for (auto const& s : all_sources(n, 2)) {
      gens.push_back(Profile{s, b});
    }
  }
  return thin(
      "indiscrete", std::move(labels), [](Profile const&) { return true; },
      gens);
}

// product

namespace {

class ProductImpl final : public MulticatImpl {
 public:
  ProductImpl(Multicat m, Multicat n, std::vector<std::string> labels)
      : MulticatImpl("(" + m.name() + "x" + n.name() + ")", std::move(labels),
                     Kind::derived),
        m_(std::move(m)),
        n_(std::move(n)) {}

  std::pair<Profile, Profile> split(Profile const& p) const {
    Profile a, b;
    int const w = static_cast<int>(n_.size());
    for (ObjId x : p.source) {
      a.source.push_back(x / w);
      b.source.push_back(x % w);
    }
    a.target = p.target / w;
    b.target = p.target % w;
    return {a, b};
  }

  std::pair<Mor, Mor> split(Mor const& f) const {
    auto [pa, pb] = split(f.profile);
    auto tags = split_tag(f.tag);
    return {Mor{pa, tags.at(0)}, Mor{pb, tags.at(1)}};
  }

  Mor join(Profile p, Mor const& a, Mor const& b) const {
    std::string parts[2] = {a.tag, b.tag};
    return Mor{std::move(p), join_tag(parts)};
  }

  std::vector<Mor> hom(Profile const& p) const override {
    auto [pa, pb] = split(p);
    std::vector<Mor> out;
    auto ha = m_.hom(pa);
    if (ha.empty()) {
      return out;
    }
    auto hb = n_.hom(pb);
    for (auto const& x : ha) {
      for (auto const& y : hb) {
        out.push_back(join(p, x, y));
      }
    }
    return out;
  }
  Mor ident(ObjId a) const override {
    int const w = static_cast<int>(n_.size());
    return join(Profile{{a}, a}, m_.ident(a / w), n_.ident(a % w));
  }
  Mor gamma(Mor const& outer, std::span<const Mor> inners) const override {
    auto [oa, ob] = split(outer);
    std::vector<Mor> ia, ib;
    for (auto const& g : inners) {
      auto [x, y] = split(g);
      ia.push_back(std::move(x));
      ib.push_back(std::move(y));
    }
    return join(composite_profile(outer, inners), m_.gamma(oa, ia),
                n_.gamma(ob, ib));
  }
  Mor act(Mor const& f, Perm const& sigma) const override {
    auto [a, b] = split(f);
    return join(Profile{permute_source(f.profile.source, sigma),
                        f.profile.target},
                m_.act(a, sigma), n_.act(b, sigma));
  }

 private:
  Multicat m_, n_;
};

class CoproductImpl final : public MulticatImpl {
 public:
  CoproductImpl(Multicat m, Multicat n, std::vector<std::string> labels,
                Kind kind)
      : MulticatImpl("(" + m.name() + "+" + n.name() + ")", std::move(labels),
                     kind),
        m_(std::move(m)),
        n_(std::move(n)) {}

  // side 0 or 1 and the profile inside that summand, if unmixed
  std::optional<std::pair<int, Profile>> side(Profile const& p) const {
    int const w = static_cast<int>(m_.size());
    int const s = p.target < w ? 0 : 1;
    Profile q;
    q.target = p.target - s * w;
    for (ObjId x : p.source) {
      if ((x < w ? 0 : 1) != s) {
        return std::nullopt;
      }
      q.source.push_back(x - s * w);
    }
    return std::make_pair(s, q);
  }

  Mor lift(int s, Mor f) const {
    int const w = s * static_cast<int>(m_.size());
    for (auto& x : f.profile.source) {
      x += w;
    }
    f.profile.target += w;
    return f;
  }

  Mor lower(Mor f) const {
    int const w = static_cast<int>(m_.size());
    int const s = f.profile.target < w ? 0 : 1;
    for (auto& x : f.profile.source) {
      x -= s * w;
    }
    f.profile.target -= s * w;
    return f;
  }

  Multicat const& summand(int s) const {
    return s == 0 ? m_ : n_;
  }

  std::vector<Mor> hom(Profile const& p) const override {
    auto sd = side(p);
    std::vector<Mor> out;
    if (!sd) {
      return out;
    }
    for (auto& f : summand(sd->first).hom(sd->second)) {
      out.push_back(lift(sd->first, std::move(f)));
    }
    return out;
  }
  Mor ident(ObjId a) const override {
    int const w = static_cast<int>(m_.size());
    int const s = a < w ? 0 : 1;
    return lift(s, summand(s).ident(a - s * w));
  }
  Mor gamma(Mor const& outer, std::span<const Mor> inners) const override {
    int const s = outer.target() < static_cast<int>(m_.size()) ? 0 : 1;
    std::vector<Mor> in;
    for (auto const& g : inners) {
      in.push_back(lower(g));
    }
    return lift(s, summand(s).gamma(lower(outer), in));
  }
  Mor act(Mor const& f, Perm const& sigma) const override {
    int const s = f.target() < static_cast<int>(m_.size()) ? 0 : 1;
    return lift(s, summand(s).act(lower(f), sigma));
  }
  std::optional<std::vector<Mor>> generators() const override {
    auto a = m_.generators();
    auto b = n_.generators();
    if (!a || !b) {
      return std::nullopt;
    }
    std::vector<Mor> out;
    for (auto& f : *a) {
      out.push_back(lift(0, f));
    }
    for (auto& f : *b) {
      out.push_back(lift(1, f));
    }
    return out;
  }

 private:
  Multicat m_, n_;
};

}  // namespace

Multicat product(Multicat const& m, Multicat const& n) {
  std::vector<std::string> labels;
  for (auto const& a : m.labels()) {
    for (auto const& b : n.labels()) {
      labels.push_back("(" + a + "," + b + ")");
    }
  }
  if (m.kind() == Kind::thin && n.kind() == Kind::thin) {
    int const w = static_cast<int>(n.size());
    return thin("(" + m.name() + "x" + n.name() + ")", std::move(labels),
                [m, n, w](Profile const& p) {
                  Profile a, b;
                  for (ObjId x : p.source) {
                    a.source.push_back(x / w);
                    b.source.push_back(x % w);
                  }
                  a.target = p.target / w;
                  b.target = p.target % w;
                  return !m.hom(a).empty() && !n.hom(b).empty();
                });
  }
  return Multicat(std::make_shared<ProductImpl>(m, n, std::move(labels)));
}

Multicat coproduct(Multicat const& m, Multicat const& n) {
  std::vector<std::string> labels;
  std::set<std::string> seen;
  bool clash = false;
  for (auto const* side : {&m, &n}) {
    for (auto const& a : side->labels()) {
      clash = clash || !seen.insert(a).second;
    }
  }
  for (auto const& a : m.labels()) {
    labels.push_back(clash ? "0:" + a : a);
  }
  for (auto const& b : n.labels()) {
    labels.push_back(clash ? "1:" + b : b);
  }
  Kind const k = (m.kind() == Kind::thin && n.kind() == Kind::thin)
                     ? Kind::thin
                     : Kind::derived;
  return Multicat(std::make_shared<CoproductImpl>(m, n, std::move(labels), k));
}

// table

namespace {

class TableImpl final : public MulticatImpl {
 public:
  explicit TableImpl(TableData d)
      : MulticatImpl(d.name.empty() ? "table" : d.name, d.objects,
                     Kind::table, d.max_arity),
        data_(std::move(d)) {
    std::size_t const n = labels_.size();
    if (data_.ident_tags.empty()) {
      data_.ident_tags.assign(n, "id");
    }
    if (data_.ident_tags.size() != n) {
      throw Error("table: identity tag list has the wrong length");
    }
    for (auto const& h : data_.homs) {
      if (h.profile.arity() > data_.max_arity) {
        throw Error("table: hom entry beyond maxArity");
      }
      auto& v = homs_[h.profile];
      for (auto const& t : h.tags) {
        if (std::find(v.begin(), v.end(), t) != v.end()) {
          throw Error("table: duplicate tag " + t);
        }
        v.push_back(t);
      }
    }
    for (ObjId a = 0; a < static_cast<ObjId>(n); ++a) {
      auto& v = homs_[Profile{{a}, a}];
      if (std::find(v.begin(), v.end(), data_.ident_tags[a]) == v.end()) {
        v.insert(v.begin(), data_.ident_tags[a]);
      }
    }
    for (auto const& g : data_.gamma) {
      gamma_[{g.outer, g.inners}] = g.result;
    }
    for (auto const& a : data_.act) {
      act_[{a.mor, a.perm}] = a.result;
    }
  }

  std::vector<Mor> hom(Profile const& p) const override {
    std::vector<Mor> out;
    auto it = homs_.find(p);
    if (it != homs_.end()) {
      for (auto const& t : it->second) {
        out.push_back(Mor{p, t});
      }
    }
    return out;
  }
  Mor ident(ObjId a) const override {
    return Mor{Profile{{a}, a}, data_.ident_tags[a]};
  }
  bool is_ident(Mor const& f) const {
    return f.arity() == 1 && f.profile.source[0] == f.target()
           && f.tag == data_.ident_tags[f.target()];
  }
  Mor gamma(Mor const& outer, std::span<const Mor> inners) const override {
    if (is_ident(outer)) {
      return inners[0];
    }
    if (std::all_of(inners.begin(), inners.end(),
                    [this](Mor const& g) { return is_ident(g); })) {
      return outer;
    }
    auto it = gamma_.find({outer, std::vector<Mor>(inners.begin(),
                                                   inners.end())});
    if (it == gamma_.end()) {
      throw Error("table " + name_ + ": no gamma entry for outer " + outer.tag);
    }
    return Mor{composite_profile(outer, inners), it->second};
  }
  Mor act(Mor const& f, Perm const& sigma) const override {
    if (sigma.is_identity()) {
      return f;
    }
    auto it = act_.find({f, sigma});
    if (it == act_.end()) {
      throw Error("table " + name_ + ": no act entry for " + f.tag);
    }
    return Mor{Profile{permute_source(f.profile.source, sigma),
                       f.profile.target},
               it->second};
  }
  std::optional<std::vector<Mor>> generators() const override {
    return data_.generators;
  }

 private:
  TableData data_;
  std::map<Profile, std::vector<std::string>> homs_;
  std::map<std::pair<Mor, std::vector<Mor>>, std::string> gamma_;
  std::map<std::pair<Mor, Perm>, std::string> act_;
};

}  // namespace

Multicat table(TableData data) {
  return Multicat(std::make_shared<TableImpl>(std::move(data)));
}

}  // namespace mc
