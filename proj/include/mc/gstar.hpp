#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mc/axioms.hpp"
#include "mc/core.hpp"

namespace mc {

// An object of the index category: the basepoint, or a list of positive
// sizes (possibly empty).  Lists containing 0 are the basepoint.
class GObj {
 public:
  GObj() = default;  // the empty list
  static GObj base();
  static GObj of(std::vector<int> dims);

  bool is_base() const {
    return base_;
  }
  std::vector<int> const& dims() const {
    return dims_;
  }
  std::size_t length() const {
    return dims_.size();
  }
  int total() const;
  std::string str() const;  // "*", "()", "(2,1)"

  auto operator<=>(GObj const&) const = default;

 private:
  bool base_ = false;
  std::vector<int> dims_;
};

// "*", "()" or "", "2,1", "(2,1)".
GObj parse_gobj(std::string_view s);

// A based map {0..src} -> {0..tgt}; img[t - 1] is the image of t.
struct FMap {
  int src = 0;
  int tgt = 0;
  std::vector<int> img;

  static FMap identity(int n);
  bool is_zero() const;
  bool is_identity() const;
  // The elements of {1..src} sent into the subset (bit t-1 for t).
  std::uint32_t preimage(std::uint32_t subset) const;
  auto operator<=>(FMap const&) const = default;
};
FMap compose_f(FMap const& b, FMap const& a);  // b after a

// A morphism src -> tgt: null, or an injection q of list positions with one
// based map per target position, alpha[j] from the size of the position
// mapped to j (1 if none) to tgt[j].
struct GMor {
  GObj src;
  GObj tgt;
  bool null = true;
  std::vector<int> q;
  std::vector<FMap> alpha;

  auto operator<=>(GMor const&) const = default;
  std::string str() const;
};

// Validates and normalizes (null when an end is the basepoint or some
// alpha[j] is zero); throws Error on malformed data.
GMor make_gmor(GObj src, GObj tgt, std::vector<int> q,
               std::vector<FMap> alpha);
GMor null_gmor(GObj src, GObj tgt);
GMor identity_gmor(GObj a);
// q_* a: the list of sizes along q, with 1 in missed positions.
GObj pushforward(GObj const& a, std::vector<int> const& q, std::size_t s);

GMor compose_g(GMor const& g2, GMor const& g1);  // g2 after g1

GObj odot(GObj const& a, GObj const& b);
GMor odot_mor(GMor const& f, GMor const& g);
GMor symmetry_g(GObj const& a, GObj const& b);  // a.b -> b.a

std::vector<GMor> enumerate_g_homset(GObj const& m, GObj const& n);
// 1 + sum over injections q of prod_j ((n_j + 1)^(m_q^-1(j)) - 1).
std::size_t g_hom_cardinality(GObj const& m, GObj const& n);
// Every object with total size at most `total` and every length, plus the
// basepoint; the empty list included.
std::vector<GObj> gobjs_upto(int total);

// Generators: a -> a.(1) adding a slot of size 1; a bijective q with
// identity maps; a tuple of based maps with q the identity.
GMor stabilization(GObj const& a);
GMor permutation_g(GObj const& a, std::vector<int> q);
GMor fmap_g(GObj const& a, std::vector<FMap> alpha);
bool is_stabilization(GMor const& g);
bool is_permutation(GMor const& g);
bool is_fmap(GMor const& g);

// g = fmap o permutation o stabilizations, listed in order of application;
// throws on the null morphism.
std::vector<GMor> factor_generators(GMor const& g);

struct GAssocReport {
  std::size_t objects = 0;
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::vector<std::string> failures;
  bool ok() const {
    return failures.empty();
  }
};
// Unit laws on every morphism and associativity on every composable triple
// over the objects of total size at most `total`.  Composites are tabulated
// once per pair; triples compare table entries.
GAssocReport check_g_associativity(int total, Exec exec = Exec::parallel);

// Permutative laws for the concatenation product on objects of total size
// at most `total`.
AxiomReport validate_gstar(int total);

std::string gmor_to_json(GMor const& g);
GMor gmor_from_json(std::string const& text);

}  // namespace mc
