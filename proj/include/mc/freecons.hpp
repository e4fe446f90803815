#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mc/axioms.hpp"
#include "mc/core.hpp"
#include "mc/multifunctor.hpp"
#include "mc/permcat.hpp"

namespace mc {

// Objects and arrows with a source list and a target each.  Labels and ids
// may not contain any of "(),;|[]{} ".
struct MGraph {
  struct Arrow {
    std::string id;
    std::vector<ObjId> source;
    ObjId target = 0;
  };
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;

  void validate() const;  // throws Error
};

MGraph mgraph_from_json(std::string const& text);
std::string mgraph_to_json(MGraph const& g);

// A morphism of the free non-symmetric multicategory: an identity, a single
// arrow, or an arrow with children not all identities.
struct Tree {
  int arrow = -1;  // -1 for an identity
  ObjId obj = 0;   // the object of an identity
  std::vector<Tree> children;  // empty for identities and single arrows

  bool is_identity() const {
    return arrow < 0;
  }
  bool operator==(Tree const& o) const {
    return arrow == o.arrow && obj == o.obj && children == o.children;
  }
  bool operator<(Tree const& o) const {
    return std::tie(arrow, obj, children) < std::tie(o.arrow, o.obj, o.children);
  }
};

std::size_t height(Tree const& t);
std::vector<ObjId> tree_source(MGraph const& g, Tree const& t);
ObjId tree_target(MGraph const& g, Tree const& t);
std::string tree_str(MGraph const& g, Tree const& t);
Tree parse_tree(MGraph const& g, std::string_view s);
// The arrow f applied to children, normalized to a single arrow when every
// child is an identity; throws on a profile mismatch.
Tree make_node(MGraph const& g, int f, std::vector<Tree> children);

// Composition of trees by induction on the height of the outer tree.
Tree tree_gamma(MGraph const& g, Tree const& outer,
                std::vector<Tree> const& inners);

// Every tree of height at most h, by height then structure.
std::vector<Tree> trees_upto(MGraph const& g, std::size_t h);
// The trees of height at most h with the given profile.
std::vector<Tree> trees_with_profile(MGraph const& g, std::size_t h,
                                     Profile const& p);

// The free multicategory L X: morphisms are pairs (tree, sigma) standing for
// act(tree, sigma), with hom sets cut at height h.  Generated by the arrows.
Multicat free_multicat(MGraph const& g, std::size_t h = 3);
// The tree and permutation of a morphism of free_multicat.
std::pair<Tree, Perm> free_parts(Multicat const& lx, Mor const& f);

// A map of graphs X -> U N: objects, and one morphism per arrow.
struct GraphMap {
  std::vector<ObjId> obj;
  std::vector<Mor> arrows;
  auto operator<=>(GraphMap const&) const = default;
};

std::vector<GraphMap> enumerate_graph_maps(MGraph const& g, Multicat const& n);

struct AdjunctionReport {
  std::size_t graph_maps = 0;
  std::size_t multifunctors = 0;
  std::size_t roundtrips = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty() && graph_maps == multifunctors
           && roundtrips == graph_maps;
  }
};

// Graph maps X -> U N against multifunctors L X -> N within the budget, in
// both directions.
AdjunctionReport adjunction_check_free(MGraph const& g, Multicat const& n,
                                       EnumOptions opt = {},
                                       std::size_t h = 3);

// A bounded fragment of the free permutative category F M: objects are
// words over Ob M of length at most `length`; an arrow u -> v is a function
// phi from positions of u to positions of v with one morphism of M per
// position of v.
class FreePerm {
 public:
  struct Arrow {
    int src = 0;
    int tgt = 0;
    std::vector<int> phi;
    std::vector<Mor> parts;
    auto operator<=>(Arrow const&) const = default;
  };

  FreePerm(Multicat m, std::size_t length);

  Multicat const& base() const {
    return m_;
  }
  std::size_t length() const {
    return length_;
  }
  std::vector<std::vector<ObjId>> const& words() const {
    return words_;
  }
  int word(std::vector<ObjId> const& w) const;  // -1 outside the fragment
  std::string show_word(int w) const;
  std::string show_arrow(Arrow const& a) const;

  std::vector<Arrow> hom(int u, int v) const;
  Arrow id(int u) const;
  Arrow compose(Arrow const& g, Arrow const& f) const;
  std::optional<int> oplus_obj(int u, int v) const;
  std::optional<Arrow> oplus_arr(Arrow const& f, Arrow const& g) const;
  Arrow gamma(int u, int v) const;  // needs u + v in the fragment

  // The fragment as a finite permutative category, when it is closed under
  // the sum (only for M without objects).
  std::optional<PermCatPtr> as_permcat(std::string name) const;

 private:
  Multicat m_;
  std::size_t length_;
  std::vector<std::vector<ObjId>> words_;
  std::map<std::vector<ObjId>, int> index_;
};

AxiomReport validate_free_perm(FreePerm const& f);

}  // namespace mc
