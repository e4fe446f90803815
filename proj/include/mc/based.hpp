#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mc/core.hpp"
#include "mc/gstar.hpp"
#include "mc/homtensor.hpp"
#include "mc/multifunctor.hpp"

namespace mc {

// Subsets of {1..m} are bitmasks; bit i-1 stands for the element i.
using Subset = std::uint32_t;
std::string subset_label(Subset s);

BasedMulticat based_terminal();
// Objects 0 and 1; 0 is a commutative monoid, 1 carries only its identity.
BasedMulticat make_unit_u();
// Objects 0 and 1 with a unique (a_1..a_k) -> a' exactly when the sum is a'.
BasedMulticat make_E();
// Objects are subsets of {1..m}; (T_1..T_k) -> T' exists when the T_i are
// disjoint with union T'.  E_power(0) is the terminal multicategory.
BasedMulticat E_power(std::size_t m);

// (E, E) -> E sending (a, b) to ab.
BilinMap beta_map(Budget b = {3, 3});

struct BalancedReport {
  std::size_t maps = 0;
  std::size_t instances = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty();
  }
};
// f(a, phi) = f(phi, a) for every based bilinear f: (E, E) -> M.
BalancedReport check_balanced(BasedMulticat const& m, EnumOptions opt = {});

struct FactorReport {
  std::size_t maps = 0;
  std::vector<Multifunctor> factors;  // one per bilinear map, in order
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty();
  }
};
// Every based bilinear (E, E) -> M is h o beta for exactly one based h.
FactorReport smash_EE(BasedMulticat const& m, EnumOptions opt = {});

// The module structure (E, E^m) -> E^m: (1, S) -> S, (0, S) -> {}.
BilinMap e_module_structure(std::size_t m, Budget b = {3, 3});
struct ModuleReport {
  std::size_t objects = 0;    // non-basepoint objects of the smash
  std::size_t morphisms = 0;  // morphisms of the unit slice
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty();
  }
};
// The structure map is based bilinear, and the slice at 1 is a bijection on
// objects and morphisms.
ModuleReport check_e_module(std::size_t m, Budget b = {3, 3});
// For E-modules E^m and E^n, the two maps E^m ^ E ^ E^n -> E^m ^ E^n
// absorbing E to the left or to the right agree on objects.
bool absorption_agrees(std::size_t m, std::size_t n);

// A finite category with a chosen basepoint object.
struct BasedCat {
  struct Arrow {
    std::string name;
    int src = 0;
    int tgt = 0;
  };
  std::string name;
  std::vector<std::string> objects;
  int base = 0;
  std::vector<Arrow> arrows;
  std::vector<int> ident;
  std::vector<std::vector<int>> compose;  // [g][f], -1 when not composable

  std::vector<int> hom(int a, int b) const;
};

// Unit and associativity laws; the first failure if any.
std::optional<std::string> category_violation(BasedCat const& c);
// Exactly one arrow into and out of the basepoint from every object.
bool has_null_base(BasedCat const& c);
// The zero arrow a -> * -> b.
int zero_arrow(BasedCat const& c, int a, int b);
// Objects are the smash of the object sets, hom sets the smash of hom sets
// pointed at the zero arrows.  Throws unless both basepoints are null.
BasedCat null_smash(BasedCat const& c, BasedCat const& d);
// Objects * and (); End(()) is {null, identity}.
BasedCat make_e();
// Objects * and () with identities only; the basepoint is not null.
BasedCat make_s0();
bool is_e_module(BasedCat const& c);
// Checks that the maps are a bijective functor; the first failure if any.
std::optional<std::string> isomorphism_violation(BasedCat const& c,
                                                 BasedCat const& d,
                                                 std::vector<int> const& obj,
                                                 std::vector<int> const& arr);
// The canonical isomorphism e ^ C -> C for C with a null basepoint, as an
// object map and an arrow map.
std::pair<std::vector<int>, std::vector<int>> unit_iso(BasedCat const& c);

// The presented object E*<m> = E^{m_1} ^ ... ^ E^{m_k}.  Objects are tuples
// of subsets encoded as bit fields, slot i at bit offset(i); tuples with an
// empty slot stand for the basepoint.  E*() is E, stored as one slot of
// size 1.
class EStar {
 public:
  struct Entry {
    int code;
    int slot;
    Subset part;  // T; the other part is the rest of the slot
  };

  explicit EStar(GObj shape);

  GObj const& shape() const {
    return shape_;
  }
  bool is_base() const {
    return shape_.is_base();
  }
  int slots() const {
    return static_cast<int>(dims_.size());
  }
  std::vector<int> const& dims() const {
    return dims_;
  }
  int codes() const {
    return codes_;
  }
  Subset part(int code, int i) const {
    return (static_cast<Subset>(code) >> offset_[i]) & ((1U << dims_[i]) - 1);
  }
  int with(int code, int i, Subset t) const;
  int code(std::vector<Subset> const& tuple) const;
  std::vector<Subset> tuple(int code) const;
  bool degenerate(int code) const;
  std::string label(int code) const;
  // Non-basepoint objects by total size, then code.
  std::vector<int> const& objects() const {
    return objects_;
  }
  // Binary generator slots (S, i, T) for every code S, slot i and T inside
  // S_i, degenerate S included.
  int entries() const {
    return static_cast<int>(entry_list_.size());
  }
  int entry(int code, int i, Subset t) const;
  Entry const& entry_at(int e) const {
    return entry_list_[e];
  }

 private:
  GObj shape_;
  std::vector<int> dims_;
  std::vector<int> offset_;
  int codes_ = 0;
  std::vector<int> objects_;
  std::vector<int> entry_base_;  // first entry of (code, slot)
  std::vector<Entry> entry_list_;
};

// A morphism of E*<m> moving one slot: parts of S_slot in the slot, the
// other slots fixed.  code < 0 is a basepoint morphism with parts.size()
// inputs.  slot < 0 is a unit morphism (*..S..*) -> S, which is the same in
// every slot; parts then marks the position of S with 1.
struct SlotMor {
  int code = -1;
  int slot = 0;
  std::vector<Subset> parts;

  auto operator<=>(SlotMor const&) const = default;
};

// Basepoint morphisms get zero parts, single nonempty parts become unit
// morphisms.
SlotMor normalized(SlotMor f);

// E*(g): E*<n> -> E*<m> for g: <m> -> <n>.
class EStarMap {
 public:
  explicit EStarMap(GMor g);

  GMor const& gmor() const {
    return g_;
  }
  EStar const& src() const {
    return src_;
  }
  EStar const& tgt() const {
    return tgt_;
  }
  // Code in the target or -1 for the basepoint.
  int object(int code) const;
  // Normalized.
  SlotMor operator()(SlotMor const& f) const;

 private:
  GMor g_;
  EStar src_;  // E*<n>
  EStar tgt_;  // E*<m>
};

// Every slot morphism of E*<m> with at most `arity` parts, basepoint
// morphisms excluded.
std::vector<SlotMor> slot_morphisms(EStar const& e, std::size_t arity);

}  // namespace mc
