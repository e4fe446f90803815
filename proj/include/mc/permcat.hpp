#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mc/axioms.hpp"
#include "mc/core.hpp"
#include "mc/multifunctor.hpp"

namespace mc {

// A finite permutative category given by explicit tables.  Objects and
// arrows are indices; arrow names are unique across the whole category.
class PermCat {
 public:
  struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
  };

  std::string name;
  std::vector<std::string> objects;
  int zero = 0;
  std::vector<std::vector<int>> oplus_obj;
  std::vector<Arrow> arrows;
  std::vector<int> ident;
  std::vector<std::vector<int>> compose;  // [g][f] is g after f, -1 if none
  std::vector<std::vector<int>> oplus_mor;
  std::vector<std::vector<int>> gamma;  // [a][b]: a+b -> b+a

  // Builds the lookup indices; throws if the tables have the wrong shape.
  void finish();

  std::size_t size() const {
    return objects.size();
  }
  std::vector<int> const& hom(int a, int b) const {
    return homs_.at(a).at(b);
  }
  int obj(std::string_view label) const;
  int arrow(std::string_view name) const;
  int comp(int g, int f) const;
  int sum(std::vector<int> const& objs) const;
  int sum_arrows(std::vector<int> const& arrs) const;
  // The coherence arrow from the sum of objs[s(i)] to the sum of objs[i],
  // built from adjacent symmetries.
  int shuffle(std::vector<int> const& objs, Perm const& s) const;

 private:
  std::vector<std::vector<std::vector<int>>> homs_;
  std::map<std::string, int, std::less<>> by_name_;
  std::map<std::string, int, std::less<>> by_label_;
};

using PermCatPtr = std::shared_ptr<const PermCat>;

// Finite monoids for the object sets, given by labels and a table.  The
// first label is the unit.
struct Monoid {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;
};
Monoid cyclic(int n);
Monoid symmetric3();
std::vector<int> element_orders(Monoid const& m);
bool monoids_isomorphic(Monoid const& a, Monoid const& b);
Monoid object_monoid(PermCat const& c);

// Only identity arrows; gamma is the identity.  Needs a commutative monoid.
PermCatPtr discrete_perm(std::string name, Monoid const& m);
// One arrow between any two objects.
PermCatPtr indiscrete_perm(std::string name, Monoid const& m);
// Objects Z/2, End(x) = Z/2 for each x and no other arrows, gamma(a,b) = ab.
PermCatPtr signed_z2();
// E(Sigma_3) and E(Z/6) on the labels 0..5.
std::pair<PermCatPtr, PermCatPtr> maclane_pair();

PermCatPtr permcat_from_json(std::string const& text);
std::string permcat_to_json(PermCat const& c);

// The checks shared by finite tables and bounded fragments of infinite
// permutative categories.  A view provides objects(), zero(),
// oplus_obj(a,b) (nullopt outside the fragment), hom(a,b), src(f), tgt(f),
// id(a), compose(g,f), oplus_arr(f,g) (nullopt outside the fragment),
// gamma(a,b), show_obj(a) and show_arr(f).
template <class V>
AxiomReport validate_permutative(V const& v, std::size_t max_violations = 200);

AxiomReport validate_permcat(PermCat const& c);

// U of a permutative category: k-morphisms (a_1..a_k; b) are the arrows
// a_1+...+a_k -> b, tagged by arrow name.
Multicat underlying(PermCatPtr const& c);
BasedMulticat underlying_based(PermCatPtr const& c);

struct LaxStarMap {
  PermCatPtr src;
  PermCatPtr tgt;
  std::vector<int> obj;
  std::vector<int> mor;
  std::vector<std::vector<int>> lambda;  // [a][b]: f(a)+f(b) -> f(a+b)

  bool operator==(LaxStarMap const& o) const {
    return obj == o.obj && mor == o.mor && lambda == o.lambda;
  }
};

AxiomReport validate_laxstar(LaxStarMap const& f);
LaxStarMap identity_laxstar(PermCatPtr const& c);
std::vector<LaxStarMap> enumerate_laxstar(PermCatPtr const& c,
                                          PermCatPtr const& d);
// f(a_1)+...+f(a_k) -> f(a_1+...+a_k), folding lambda from the left.
int lambda_fold(LaxStarMap const& f, std::vector<int> const& objs);

// U on 1-morphisms: the multifunctor generated by arrows, lambda on the
// 2-morphisms id_{a+b} and id_0 on the 0-morphism.
Multifunctor laxstar_to_multifunctor(LaxStarMap const& f, Budget b = {3, 3});
// Uf(phi) = f(phi) after the folded lambda, computed directly.
Mor uf_direct(LaxStarMap const& f, Mor const& phi);
// Restriction to 1-morphisms, with lambda read off the image of id_{a+b}.
LaxStarMap multifunctor_to_laxstar(Multifunctor const& g, PermCatPtr const& c,
                                   PermCatPtr const& d);

// An object of P_k(C_1..C_k; D).  Objects and arrows of the product are
// indexed in mixed radix, first factor most significant.
struct PkObject {
  std::vector<PermCatPtr> src;
  PermCatPtr tgt;
  std::vector<int> obj;
  std::vector<int> mor;
  // delta[i][t * n_i + c]: f(t) + f(t with slot i set to c)
  //   -> f(t with slot i set to t_i + c)
  std::vector<std::vector<int>> delta;

  std::size_t arity() const {
    return src.size();
  }
  std::size_t obj_index(std::vector<int> const& c) const;
  std::size_t mor_index(std::vector<int> const& u) const;
  int at(std::vector<int> const& c) const {
    return obj[obj_index(c)];
  }
  int on(std::vector<int> const& u) const {
    return mor[mor_index(u)];
  }
  int d(std::size_t i, std::vector<int> const& c, int ci2) const;
  bool operator==(PkObject const& o) const {
    return obj == o.obj && mor == o.mor && delta == o.delta;
  }
};

AxiomReport validate_pk(PkObject const& f);
PkObject compose_pk(PkObject const& g, std::vector<PkObject> const& fs);
PkObject sigma_star(PkObject const& f, Perm const& s);
PkObject as_pk(LaxStarMap const& f);
LaxStarMap as_laxstar(PkObject const& f);
// Product on a commutative monoid viewed as a bilinear map of a discrete
// permutative category into itself; requires a semiring table.
PkObject discrete_bilinear(PermCatPtr const& c,
                           std::vector<std::vector<int>> const& times);
// The unique 2-linear map into an indiscrete target given by an object map.
PkObject indiscrete_bilinear(PermCatPtr const& c1, PermCatPtr const& c2,
                             PermCatPtr const& d,
                             std::vector<std::vector<int>> const& objmap);

// The (m,n) interchange square for a 2-linear map: both routes from the
// sum over i then j of f(a_i, b_j) to f(sum a, sum b).
bool interchange_holds(PkObject const& f, std::vector<int> const& as,
                       std::vector<int> const& bs);

}  // namespace mc

#include "mc/permcat_validate.hpp"
