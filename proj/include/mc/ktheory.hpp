#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "mc/based.hpp"
#include "mc/core.hpp"
#include "mc/gstar.hpp"
#include "mc/permcat.hpp"

namespace mc {

// A system over a shape, stored densely along the codes and entries of
// EStar(shape): values[code] is C_S (the zero object on degenerate codes)
// and rho[entry] is rho_{S;i,T,U} for the entry (S, i, T) with U = S_i - T,
// forced entries included.  R is an arrow index of a permutative category
// or a 2-morphism of a based multicategory.
template <class R>
struct BasicSystem {
  GObj shape;
  std::vector<int> values;
  std::vector<R> rho;

  auto operator<=>(BasicSystem const&) const = default;
};
using System = BasicSystem<int>;
using MSystem = BasicSystem<Mor>;

// Components f_S: C_S -> C'_S, one per code.
template <class R>
struct BasicSystemMor {
  std::vector<R> comp;

  auto operator<=>(BasicSystemMor const&) const = default;
};
using SystemMor = BasicSystemMor<int>;
using MSystemMor = BasicSystemMor<Mor>;

// The category of systems: every valid system and every morphism between
// them.
template <class R>
struct SystemCat {
  struct Arrow {
    int src = 0;
    int tgt = 0;
    BasicSystemMor<R> mor;
  };
  GObj shape;
  std::vector<BasicSystem<R>> objects;
  std::vector<Arrow> arrows;
  std::vector<int> ident;

  int find_object(BasicSystem<R> const& s) const;
  int find_arrow(int src, int tgt, BasicSystemMor<R> const& f) const;
  // Builds the lookup tables and the identities.
  void index();

 private:
  std::map<BasicSystem<R>, int> obj_index_;
  std::map<std::tuple<int, int, std::vector<R>>, int> arr_index_;
};
using JC = SystemCat<int>;
using JHat = SystemCat<Mor>;

// Componentwise composite g after f; -1 when not composable.
int compose_arrows(PermCat const& c, JC const& j, int g, int f);
int compose_arrows(BasedMulticat const& m, JHat const& j, int g, int f);

// Conditions (1)-(5) over every entry; the first failure if any.
std::optional<std::string> system_violation(PermCat const& c, System const& s);
// The same conditions in the language of composition and symmetric group
// actions, plus the unit law for rho with an empty part, and agreement of
// the unit morphisms across slots.
std::optional<std::string> msystem_violation(BasedMulticat const& m,
                                             MSystem const& s);
std::optional<std::string> mor_violation(PermCat const& c, System const& x,
                                         System const& y, SystemMor const& f);
std::optional<std::string> mmor_violation(BasedMulticat const& m,
                                          MSystem const& x, MSystem const& y,
                                          MSystemMor const& f);

JC enumerate_jc(PermCatPtr const& c, GObj const& shape,
                Exec exec = Exec::parallel);
JHat jhat(BasedMulticat const& m, GObj const& shape,
          Exec exec = Exec::parallel);

// Reindexing along the codes of two shapes: value[c'] is a code of src or -1
// for the zero object, rho[e'] an entry of src or -1 for the zero arrow.
// In normalized form an entry with an empty part at a nondegenerate code c
// is -(2 + c), standing for the identity of C_c.
struct Reindex {
  GObj src;
  GObj tgt;
  std::vector<int> value;
  std::vector<int> rho;

  auto operator<=>(Reindex const&) const = default;
};

Reindex identity_reindex(GObj const& shape);
// The action of a stabilization, permutation or based map.
Reindex jc_generator_reindex(GMor const& g);
// Along factor_generators; null morphisms give the zero reindex.
Reindex jc_reindex(GMor const& g);
// Precomposition with E*(g) on the binary generators.
Reindex estar_reindex(GMor const& g);
// Inverse of the stabilization of `shape`: from shape.(1) back to shape.
Reindex drop_last(GObj const& shape);
Reindex compose(Reindex const& r2, Reindex const& r1);  // r2 after r1
Reindex normalize_jc(Reindex const& r);

System apply(PermCat const& c, Reindex const& r, System const& s);
SystemMor apply_mor(PermCat const& c, Reindex const& r, SystemMor const& f);
MSystem apply(BasedMulticat const& m, Reindex const& r, MSystem const& s);
MSystemMor apply_mor(BasedMulticat const& m, Reindex const& r,
                     MSystemMor const& f);

// Systems in C and systems in U C.
MSystem to_msystem(PermCat const& c, System const& s);
System from_msystem(PermCat const& c, MSystem const& s);
MSystemMor to_msystem_mor(PermCat const& c, System const& x, System const& y,
                          SystemMor const& f);
SystemMor from_msystem_mor(PermCat const& c, MSystemMor const& f);

// The morphism induced by a valid system on (T_1..T_n) -> S_i in slot i,
// splitting off T_n (or T_1) first.
Mor evaluate(BasedMulticat const& m, MSystem const& s, int code, int slot,
             std::vector<Subset> const& parts, bool last_first = true);

struct EvalReport {
  std::size_t systems = 0;
  std::size_t morphisms = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty();
  }
};
// Every system of the shape, read as a multifunctor out of E^m (or a
// bilinear map out of (E^m1, E^m2)) through its generators, is one; the
// evaluator agrees with it in both split orders.  Shapes of length at most 2.
EvalReport check_evaluator(BasedMulticat const& m, JHat const& j,
                           Budget b = {4, 4});

// The systems read off based multifunctors E^m -> M (shape (m) or ()) or
// based bilinear maps (E^m1, E^m2) -> M.
std::vector<MSystem> oracle_systems(BasedMulticat const& m, GObj const& shape,
                                    EnumOptions opt = {});

struct ExtnReport {
  std::size_t objects = 0;
  std::size_t morphisms = 0;
  std::size_t composites = 0;
  std::size_t generators = 0;
  std::size_t transports = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty();
  }
};
// Both enumerations, the translation between them on objects and
// morphisms, compatibility with composition, and naturality along every
// generator out of the shape with target of total size at most max_total.
ExtnReport extn_roundtrip(PermCatPtr const& c, GObj const& shape,
                          int max_total = 4);

struct FunctorialityReport {
  std::size_t pairs = 0;
  std::size_t permutation_pairs = 0;
  std::size_t stabilizations = 0;
  std::size_t transports = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty();
  }
};
// (g2 g1)_! = g2_! g1_! on normalized reindexes for all composable pairs
// with every shape of total size at most max_total; dropping the added
// slot inverts stabilization; the action on the given categories of
// systems lands in valid systems and composes.
FunctorialityReport check_jc_functoriality(
    int max_total, std::vector<std::pair<PermCatPtr, JC const*>> const& cats);

// Pairing along a 2-linear map f: (C, D) -> E.
System pair_systems(PkObject const& f, System const& x, System const& y);

std::string system_to_json(PermCat const& c, System const& s);
System system_from_json(PermCat const& c, std::string const& text);
std::string jc_to_dot(PermCat const& c, JC const& j);
std::string system_label(PermCat const& c, System const& s);

}  // namespace mc
