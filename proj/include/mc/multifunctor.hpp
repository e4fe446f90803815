#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mc/core.hpp"

namespace mc {

// Every morphism of a multicategory within a budget, with the composition
// and action instances among them.  Instances whose result falls outside the
// fragment are dropped.
struct Fragment {
  struct Comp {
    int outer;
    std::vector<int> inners;
    int result;
  };
  struct Act {
    int mor;
    Perm perm;
    int result;
  };

  Multicat m;
  Budget budget;
  std::vector<Mor> mors;
  std::map<Mor, int> index;
  std::vector<int> ident;
  std::vector<Comp> comps;
  std::vector<Act> acts;
  std::vector<int> gens;

  int find(Mor const& f) const {
    auto it = index.find(f);
    return it == index.end() ? -1 : it->second;
  }
};

// Generators: the declared list if any, otherwise every non-identity morphism
// of a thin multicategory within the budget.
std::shared_ptr<const Fragment> make_fragment(Multicat const& m, Budget b);

class Multifunctor {
 public:
  std::vector<ObjId> obj;
  std::vector<Mor> gens;  // images of frag->gens, in order
  std::shared_ptr<const Fragment> frag;
  std::shared_ptr<const std::vector<Mor>> images;  // aligned with frag->mors

  ObjId operator()(ObjId a) const {
    return obj.at(a);
  }
  Mor operator()(Mor const& f) const;
  bool operator==(Multifunctor const& o) const {
    return obj == o.obj && gens == o.gens;
  }
  bool operator<(Multifunctor const& o) const {
    return std::tie(obj, gens) < std::tie(o.obj, o.gens);
  }
  std::string label(Multicat const& target) const;
};

// Extends generator images to the whole fragment by closure under
// composition and action, checking every instance.  Returns nothing when the
// data does not define a multifunctor; throws when the generators do not
// reach the whole fragment.
std::optional<Multifunctor> extend(std::shared_ptr<const Fragment> const& frag,
                                   Multicat const& target,
                                   std::vector<ObjId> obj,
                                   std::vector<Mor> gen_images);

// The same map on a different fragment of the same source.
Multifunctor with_budget(Multifunctor const& f, Multicat const& target,
                         Budget b);

Multifunctor identity_multifunctor(std::shared_ptr<const Fragment> const& f);

struct EnumOptions {
  Budget budget{3, 3};
  Exec exec = Exec::parallel;
};

std::vector<Multifunctor> enumerate_multifunctors(Multicat const& m,
                                                  Multicat const& n,
                                                  EnumOptions opt = {});
std::vector<Multifunctor> enumerate_based_multifunctors(
    BasedMulticat const& m, BasedMulticat const& n, EnumOptions opt = {});

// The multifunctor sending everything to the basepoint of n.
Multifunctor constant_base(std::shared_ptr<const Fragment> const& frag,
                           BasedMulticat const& n);
bool is_based(Multifunctor const& f, BasedMulticat const& m,
              BasedMulticat const& n);

}  // namespace mc
