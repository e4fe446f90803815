#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mc/core.hpp"
#include "mc/multifunctor.hpp"

namespace mc {

// The permutation reversing the priority of two indices: it sends position
// i * inner + j to j * outer + i, turning `outer` blocks of `inner` entries
// into `inner` blocks of `outer` entries.
Perm reverse_priority(std::size_t outer, std::size_t inner);

// Multifunctor composite h after f, on the fragment of f.
Multifunctor compose_multifunctors(Multifunctor const& h,
                                   Multifunctor const& f,
                                   Multicat const& target);

// The naturality square of xi at phi, for xi with components comp(a) from
// (f_1..f_k) to g.  Returns a description when it fails.
std::optional<std::string> knat_square(
    Multicat const& n, std::vector<Multifunctor> const& fs,
    Multifunctor const& g, std::function<Mor(ObjId)> const& comp,
    Mor const& phi);

struct KNat {
  std::vector<Multifunctor> src;
  Multifunctor tgt;
  std::vector<Mor> comp;  // indexed by object of the source multicategory
};

struct KNatCheck {
  bool generators_ok = false;
  std::optional<KNat> knat;
  std::string failure;  // the first failing square, if any
};

// Checks the squares on the generators of the common source fragment, and
// if they commute, on every morphism of the fragment.
KNatCheck knat_from_generators(Multicat const& n,
                               std::vector<Multifunctor> const& fs,
                               Multifunctor const& g, std::vector<Mor> comp);

// A random transformation between random multifunctors that is natural on
// the generators of the source; nothing if the sampled multifunctors
// admit none.
struct NatSample {
  std::vector<Multifunctor> fs;
  Multifunctor g;
  std::vector<Mor> comp;
};
std::optional<NatSample> sample_generator_natural(
    std::vector<Multifunctor> const& maps, Multicat const& target,
    std::mt19937& rng);

// A multicategory whose objects are families of objects of `target` indexed
// by a finite set of points, with k-morphisms the families of k-morphisms
// that pass a naturality test.  Composition and actions are pointwise.
struct PointwiseSpec {
  std::string name;
  Multicat target;
  std::vector<std::string> labels;
  std::vector<std::vector<ObjId>> values;  // [object][point]
  // Empty result means natural.
  std::function<std::optional<std::string>(
      std::vector<ObjId> const& src, ObjId tgt, std::vector<Mor> const& comps)>
      natural;
};
Multicat pointwise(PointwiseSpec spec);
// Components of a morphism of a pointwise multicategory, one per point.
std::vector<Mor> components(Multicat const& pw, Mor const& f);
Mor from_components(Multicat const& pw, Profile p,
                    std::vector<Mor> const& comps);

// Hom(M, N): objects are the multifunctors enumerated within the budget,
// k-morphisms are k-natural transformations checked on the whole fragment.
Multicat hom_multicat(Multicat const& m, Multicat const& n,
                      EnumOptions opt = {});
std::vector<Multifunctor> const& hom_objects(Multicat const& h);

struct BilinMap {
  std::size_t nn = 0;                  // objects of the second variable
  std::vector<ObjId> obj;              // [a * nn + b]
  std::vector<Multifunctor> left;      // f(-, b), indexed by b
  std::vector<Multifunctor> right;     // f(a, -), indexed by a

  ObjId operator()(ObjId a, ObjId b) const {
    return obj.at(static_cast<std::size_t>(a) * nn + b);
  }
  bool operator==(BilinMap const& o) const {
    return left == o.left && right == o.right;
  }
  bool operator<(BilinMap const& o) const {
    return std::tie(left, right) < std::tie(o.left, o.right);
  }
};

// Assembles a bilinear candidate from its slices; throws if the object maps
// of the slices disagree.
BilinMap make_bilinear(std::vector<Multifunctor> left,
                       std::vector<Multifunctor> right);
// The first failing bilinearity square, over all morphisms of both
// fragments.
std::optional<std::string> bilinear_violation(BilinMap const& f,
                                              Multicat const& p);
std::vector<BilinMap> enumerate_bilinear(Multicat const& m, Multicat const& n,
                                         Multicat const& p,
                                         EnumOptions opt = {});
bool is_based_bilinear(BilinMap const& f, BasedMulticat const& m,
                       BasedMulticat const& n, BasedMulticat const& p);
std::vector<BilinMap> enumerate_based_bilinear(BasedMulticat const& m,
                                               BasedMulticat const& n,
                                               BasedMulticat const& p,
                                               EnumOptions opt = {});
// h after f.
BilinMap compose_bilinear(Multifunctor const& h, BilinMap const& f,
                          Multicat const& target);

// Bilin(M, N; P) with k-morphisms natural in each variable separately.
// Points are pairs (a, b), indexed a * |N| + b.
Multicat bilin_multicat(Multicat const& m, Multicat const& n,
                        Multicat const& p, EnumOptions opt = {});
std::vector<BilinMap> const& bilin_objects(Multicat const& b);

struct CurryReport {
  std::size_t hom_mn = 0;  // objects of Hom(M, Hom(N, P))
  std::size_t bilin = 0;
  std::size_t hom_nm = 0;  // objects of Hom(N, Hom(M, P))
  std::size_t profiles = 0;
  std::size_t morphisms = 0;
  std::size_t composites = 0;
  std::size_t naturality = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty();
  }
};

// Builds both currying bijections explicitly and checks them on objects,
// on k-morphisms for k <= max_k, against composition and actions, and
// against postcomposition with every endomultifunctor of P.
CurryReport check_currying(Multicat const& m, Multicat const& n,
                           Multicat const& p, EnumOptions opt = {},
                           std::size_t max_k = 2);

}  // namespace mc
