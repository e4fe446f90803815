#include <set>
#include <algorithm>
#include <map>

#include "doctest.h"
#include "mc/axioms.hpp"
#include "mc/based.hpp"
#include "mc/core.hpp"

using namespace mc;

namespace {

// A multicategory that answers like `base` except on one composite.
class Corrupted final : public MulticatImpl {
 public:
  Corrupted(Multicat base, Mor outer, std::vector<Mor> inners)
      : MulticatImpl("corrupted", base.labels(), Kind::derived),
        base_(std::move(base)),
        outer_(std::move(outer)),
        inners_(std::move(inners)) {}
  std::vector<Mor> hom(Profile const& p) const override {
    return base_.hom(p);
  }
  Mor ident(ObjId a) const override {
    return base_.ident(a);
  }
  Mor gamma(Mor const& o, std::span<const Mor> in) const override {
    Mor r = base_.gamma(o, in);
    if (o == outer_ && std::equal(in.begin(), in.end(), inners_.begin(),
                                  inners_.end())) {
      r.tag = "bad";
    }
    return r;
  }
  Mor act(Mor const& f, Perm const& s) const override {
    return base_.act(f, s);
  }

 private:
  Multicat base_;
  Mor outer_;
  std::vector<Mor> inners_;
};

Mor thin_mor(std::vector<ObjId> src, ObjId tgt) {
  return Mor{Profile{std::move(src), tgt}, "*"};
}

// Oracle for block permutations: label every letter by (block, offset),
// reorder the blocks by hand, and read off where each letter came from.
Perm block_oracle(Perm const& s, std::vector<std::size_t> const& src_sizes) {
  std::vector<std::vector<int>> blocks;
  int next = 0;
  for (auto k : src_sizes) {
    std::vector<int> b;
    for (std::size_t o = 0; o < k; ++o) {
      b.push_back(next++);
    }
    blocks.push_back(b);
  }
  std::vector<int> img;
  for (std::size_t t = 0; t < s.size(); ++t) {
    for (int x : blocks[s[t]]) {
      img.push_back(x);
    }
  }
  return Perm(img);
}

}  // namespace

TEST_CASE("permutations") {
  auto s = Perm({1, 2, 0});
  auto t = Perm({1, 0, 2});
  CHECK((s * t)[0] == s[t[0]]);
  CHECK((s * s.inverse()).is_identity());
  CHECK(Perm::all(3).size() == 6);
  CHECK(Perm::all(0).size() == 1);
  CHECK_THROWS_AS(Perm({0, 0}), Error);

  for (auto const& sigma : Perm::all(3)) {
    std::vector<std::size_t> src{2, 0, 1};
    std::vector<std::size_t> res(3);
    for (std::size_t t = 0; t < 3; ++t) {
      res[t] = src[sigma[t]];
    }
    CHECK(Perm::block(sigma, res) == block_oracle(sigma, src));
  }
  std::vector<Perm> taus{Perm({1, 0}), Perm::identity(1)};
  CHECK(Perm::sum(taus) == Perm({1, 0, 2}));
}

TEST_CASE("E hom sets and evaluators") {
  Multicat E = make_E().carrier;
  CHECK(E.hom(Profile{{0, 1}, 1}).size() == 1);
  CHECK(E.hom(Profile{{1, 1}, 1}).empty());
  CHECK(E.hom(Profile{{1}, 1}).front() == E.ident(1));

  Mor const phi2 = thin_mor({0, 1}, 1);
  Mor const eps0 = thin_mor({}, 0);
  Mor const eps1 = thin_mor({0}, 0);
  std::vector<Mor> a{eps0, E.ident(1)};
  CHECK(E.gamma(phi2, a) == E.ident(1));
  std::vector<Mor> b{eps1, phi2};
  CHECK(E.gamma(phi2, b) == thin_mor({0, 0, 1}, 1));
  CHECK(E.act(phi2, Perm({1, 0})) == thin_mor({1, 0}, 1));
  CHECK(E.act(phi2, Perm::identity(2)) == phi2);
  CHECK_THROWS_AS(E.gamma(phi2, std::vector<Mor>{eps0}), ProfileError);
}

TEST_CASE("hom queries are pure") {
  Multicat P = product(make_E().carrier, indiscrete({"x", "y"}));
  for (auto const& src : all_sources(P.size(), 2)) {
    for (ObjId b = 0; b < static_cast<ObjId>(P.size()); ++b) {
      CHECK(P.hom(Profile{src, b}) == P.hom(Profile{src, b}));
    }
  }
}

TEST_CASE("products, coproducts, terminal, discrete, indiscrete") {
  Multicat E = make_E().carrier;
  Multicat EE = product(E, E);
  ObjId const p00 = EE.find("(0,0)");
  ObjId const p11 = EE.find("(1,1)");
  CHECK(EE.hom(Profile{{p00, p11}, p11}).size() == 1);
  CHECK(EE.hom(Profile{{p11, p11}, p11}).empty());

  Multicat C = coproduct(E, E);
  CHECK(C.size() == 4);
  CHECK(C.hom(Profile{{C.find("0:0"), C.find("1:1")}, C.find("1:1")}).empty());
  CHECK(C.hom(Profile{{C.find("1:0"), C.find("1:1")}, C.find("1:1")}).size()
        == 1);

  Multicat T = terminal();
  CHECK(T.hom(Profile{{0, 0, 0, 0, 0}, 0}).size() == 1);
  CHECK(T.hom(Profile{{}, 0}).size() == 1);

  Multicat D = discrete({"x"});
  CHECK(D.hom(Profile{{0, 0}, 0}).empty());
  CHECK(D.hom(Profile{{0}, 0}).size() == 1);

  Multicat I = indiscrete({"x", "y"});
  CHECK(I.hom(Profile{{0, 1, 0}, 1}).size() == 1);

  // a derived product (one factor not thin) keeps coordinatewise hom sets
  TableData td;
  td.objects = {"x"};
  td.max_arity = 2;
  td.homs.push_back({Profile{{0}, 0}, {"id", "s"}});
  td.gamma.push_back({Mor{Profile{{0}, 0}, "s"},
                      {Mor{Profile{{0}, 0}, "s"}},
                      "id"});
  Multicat Z2 = table(td);
  Multicat PZ = product(Z2, E);
  CHECK(PZ.kind() == Kind::derived);
  CHECK(PZ.hom(Profile{{PZ.find("(x,1)")}, PZ.find("(x,1)")}).size() == 2);
  CHECK(check_operad_axioms(PZ, Budget{2, 2}).ok());
}

TEST_CASE("table kind rejects arity beyond its maximum") {
  TableData td;
  td.objects = {"x"};
  td.max_arity = 1;
  Multicat T = table(td);
  CHECK(T.hom(Profile{{0}, 0}).size() == 1);
  CHECK_THROWS_AS(T.hom(Profile{{0, 0}, 0}), BudgetError);
}

namespace {

// The associative operad up to arity 3: Ass(k) = permutations of k letters,
// composition by block permutation after the blockwise sum.
Multicat associative_operad(std::size_t top, bool corrupt = false) {
  TableData td;
  td.name = "Ass";
  td.objects = {"x"};
  td.max_arity = top;
  td.ident_tags = {"[1]"};
  auto prof = [](std::size_t k) {
    return Profile{std::vector<ObjId>(k, 0), 0};
  };
  for (std::size_t k = 0; k <= top; ++k) {
    TableData::Hom h{prof(k), {}};
    for (auto const& p : Perm::all(k)) {
      h.tags.push_back(p.str());
    }
    td.homs.push_back(h);
    for (auto const& p : Perm::all(k)) {
      for (auto const& q : Perm::all(k)) {
        td.act.push_back({Mor{prof(k), p.str()}, q, (p * q).str()});
      }
    }
  }
  // all compositions with total arity <= top
  for (std::size_t n = 0; n <= top; ++n) {
    std::vector<std::vector<std::size_t>> arities{{}};
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<std::size_t>> next;
      for (auto const& a : arities) {
        for (std::size_t k = 0; k <= top; ++k) {
          auto b = a;
          b.push_back(k);
          next.push_back(b);
        }
      }
      arities = next;
    }
    for (auto const& ks : arities) {
      std::size_t total = 0;
      for (auto k : ks) {
        total += k;
      }
      if (total > top) {
        continue;
      }
      std::vector<std::vector<Perm>> choice{{}};
      for (auto k : ks) {
        std::vector<std::vector<Perm>> next;
        for (auto const& c : choice) {
          for (auto const& p : Perm::all(k)) {
            auto d = c;
            d.push_back(p);
            next.push_back(d);
          }
        }
        choice = next;
      }
      for (auto const& s : Perm::all(n)) {
        for (auto const& taus : choice) {
          std::vector<Mor> inners;
          for (auto const& t : taus) {
            inners.push_back(Mor{prof(t.size()), t.str()});
          }
          Perm const r = Perm::block(s, ks) * Perm::sum(taus);
          Perm wrong = r;
          if (corrupt && n == 2 && ks[0] == 2 && ks[1] == 1
              && !s.is_identity() && taus[0].is_identity()) {
            // one composite swapped for another morphism of the same profile
            wrong = r * Perm::all(3)[1];
          }
          td.gamma.push_back({Mor{prof(n), s.str()}, inners, wrong.str()});
        }
      }
    }
  }
  return table(td);
}

}  // namespace

TEST_CASE("operad axioms: shipped instances") {
  CHECK(check_operad_axioms(make_E().carrier).ok());
  CHECK(check_operad_axioms(terminal()).ok());
  CHECK(check_operad_axioms(make_unit_u().carrier).ok());
  for (std::size_t m = 0; m <= 3; ++m) {
    CHECK(check_operad_axioms(E_power(m).carrier).ok());
  }
  CHECK(check_operad_axioms(associative_operad(3), Budget{3, 3}, Exec::serial,
                            true)
            .ok());
}

TEST_CASE("operad axioms: the thin shortcut agrees with the full check") {
  for (auto const& m : {make_E().carrier, E_power(2).carrier,
                        indiscrete({"x", "y"}), make_unit_u().carrier}) {
    auto fast = check_operad_axioms(m, Budget{3, 3}, Exec::serial, false);
    auto slow = check_operad_axioms(m, Budget{3, 3}, Exec::serial, true);
    CHECK(fast.ok());
    CHECK(slow.ok());
    CHECK(slow.instances > fast.instances);
  }
}

TEST_CASE("operad axioms: serial and parallel reports agree") {
  Multicat bad = Multicat(std::make_shared<Corrupted>(
      make_E().carrier, thin_mor({0, 1}, 1),
      std::vector<Mor>{thin_mor({}, 0), thin_mor({1}, 1)}));
  auto a = check_operad_axioms(bad, Budget{3, 3}, Exec::serial);
  auto b = check_operad_axioms(bad, Budget{3, 3}, Exec::parallel);
  CHECK(a.violations == b.violations);
  CHECK(a.instances == b.instances);
}

TEST_CASE("operad axioms: fault injection is reported") {
  Mor const outer = thin_mor({0, 1}, 1);
  std::vector<Mor> inners{thin_mor({}, 0), thin_mor({1}, 1)};
  Multicat bad = Multicat(
      std::make_shared<Corrupted>(make_E().carrier, outer, inners));
  auto rep = check_operad_axioms(bad, Budget{4, 4}, Exec::serial, true);
  REQUIRE_FALSE(rep.ok());
  // Every reported instance involves the corrupted composite.
  std::string const needle = "*:(0,1)->1";
  std::size_t closure = 0;
  for (auto const& v : rep.violations) {
    CHECK(v.detail.find("bad") != std::string::npos);
    closure += v.law == "closure";
  }
  CHECK(closure == 1);
}

TEST_CASE("operad axioms: a wrong composite inside its hom set is reported") {
  auto rep = check_operad_axioms(associative_operad(3, true), Budget{3, 3},
                                 Exec::serial, true);
  REQUIRE_FALSE(rep.ok());
  std::set<std::string> laws;
  for (auto const& v : rep.violations) {
    laws.insert(v.law);
  }
  CHECK(laws.count("closure") == 0);
  CHECK(laws.count("associativity") == 1);
  CHECK(laws.count("outer equivariance") == 1);
}
