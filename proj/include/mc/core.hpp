#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by table multicategories for queries beyond their declared arity.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class ProfileError : public Error {
 public:
  using Error::Error;
};

using ObjId = int;

// A bijection of {0,...,k-1}, stored as its image list.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);

  static Perm identity(std::size_t k);
  static Perm transposition(std::size_t k, std::size_t i, std::size_t j);
  // Every permutation of k letters, in lexicographic order of image lists.
  static std::vector<Perm> all(std::size_t k);

  // Block permutation: blocks of sizes[t] (indexed by position in the
  // result) are moved so that result block t is source block sigma(t).
  static Perm block(Perm const& sigma, std::span<const std::size_t> sizes);
  // tau_1 + ... + tau_n acting blockwise.
  static Perm sum(std::span<const Perm> taus);

  std::size_t size() const noexcept {
    return img_.size();
  }
  int operator[](std::size_t i) const {
    return img_[i];
  }
  std::vector<int> const& images() const noexcept {
    return img_;
  }
  bool is_identity() const noexcept;

  // (s * t)(i) = s(t(i)).
  Perm operator*(Perm const& t) const;
  Perm inverse() const;

  std::string str() const;
  // Inverse of str(): "[2 1 3]"; throws on malformed input.
  static Perm parse(std::string_view s);

  auto operator<=>(Perm const&) const = default;

 private:
  std::vector<int> img_;
};

struct Profile {
  std::vector<ObjId> source;
  ObjId target = 0;

  std::size_t arity() const noexcept {
    return source.size();
  }
  auto operator<=>(Profile const&) const = default;
};

struct Mor {
  Profile profile;
  std::string tag;

  std::size_t arity() const noexcept {
    return profile.source.size();
  }
  ObjId target() const noexcept {
    return profile.target;
  }
  auto operator<=>(Mor const&) const = default;
};

enum class Kind { thin, table, derived };

// Limits for exhaustive checks: every morphism in a checked instance has
// arity at most `arity`, every inner morphism at most `slot`, and composites
// stay within `arity`.
struct Budget {
  std::size_t arity = 4;
  std::size_t slot = 4;
};

enum class Exec { serial, parallel };

class MulticatImpl {
 public:
  MulticatImpl(std::string name, std::vector<std::string> labels, Kind kind,
               std::optional<std::size_t> max_arity = std::nullopt);
  virtual ~MulticatImpl() = default;

  virtual std::vector<Mor> hom(Profile const& p) const = 0;
  virtual Mor ident(ObjId a) const = 0;
  virtual Mor gamma(Mor const& outer, std::span<const Mor> inners) const = 0;
  virtual Mor act(Mor const& f, Perm const& sigma) const = 0;
  virtual std::optional<std::vector<Mor>> generators() const {
    return std::nullopt;
  }

  std::string name_;
  std::vector<std::string> labels_;
  Kind kind_;
  std::optional<std::size_t> max_arity_;
};

class Multicat {
 public:
  Multicat() = default;
  explicit Multicat(std::shared_ptr<const MulticatImpl> impl);

  std::size_t size() const {
    return impl_->labels_.size();
  }
  std::string const& name() const {
    return impl_->name_;
  }
  std::string const& label(ObjId a) const;
  std::vector<std::string> const& labels() const {
    return impl_->labels_;
  }
  ObjId find(std::string_view label) const;
  Kind kind() const {
    return impl_->kind_;
  }
  std::optional<std::size_t> max_arity() const {
    return impl_->max_arity_;
  }

  std::vector<Mor> hom(Profile const& p) const;
  bool contains(Mor const& f) const;
  Mor ident(ObjId a) const;
  Mor gamma(Mor const& outer, std::span<const Mor> inners) const;
  Mor act(Mor const& f, Perm const& sigma) const;
  std::optional<std::vector<Mor>> generators() const {
    return impl_->generators();
  }

  std::shared_ptr<const MulticatImpl> const& impl() const {
    return impl_;
  }

 private:
  void check_obj(ObjId a) const;
  std::shared_ptr<const MulticatImpl> impl_;
};

// Result profile of Gamma(outer; inners) without evaluating it.
Profile composite_profile(Mor const& outer, std::span<const Mor> inners);
// Source of act(f, sigma): entry i is source[sigma(i)].
std::vector<ObjId> permute_source(std::vector<ObjId> const& src,
                                  Perm const& sigma);

// Tags of derived multicategories are parenthesised lists of component tags.
std::string join_tag(std::span<const std::string> parts);
std::vector<std::string> split_tag(std::string_view tag);

std::string format_profile(Multicat const& m, Profile const& p);
std::string format_mor(Multicat const& m, Mor const& f);

// Every source list of length k over n objects, in lexicographic order.
std::vector<std::vector<ObjId>> all_sources(std::size_t n, std::size_t k);

// A multicategory whose hom sets are decided by a predicate; tags are "*".
using HomPredicate = std::function<bool(Profile const&)>;
Multicat thin(std::string name, std::vector<std::string> labels,
              HomPredicate pred,
              std::optional<std::vector<Profile>> generators = std::nullopt);

Multicat terminal();
Multicat discrete(std::vector<std::string> labels);
Multicat indiscrete(std::vector<std::string> labels);
Multicat product(Multicat const& m, Multicat const& n);
Multicat coproduct(Multicat const& m, Multicat const& n);

// Explicit tables up to a declared maximum arity.
struct TableData {
  struct Hom {
    Profile profile;
    std::vector<std::string> tags;
  };
  struct GammaEntry {
    Mor outer;
    std::vector<Mor> inners;
    std::string result;
  };
  struct ActEntry {
    Mor mor;
    Perm perm;
    std::string result;
  };
  std::string name;
  std::vector<std::string> objects;
  std::size_t max_arity = 0;
  std::vector<Hom> homs;
  std::vector<std::string> ident_tags;  // per object; empty means "id"
  std::vector<GammaEntry> gamma;
  std::vector<ActEntry> act;
  std::optional<std::vector<Mor>> generators;
};
Multicat table(TableData data);

// A based multicategory: a multicategory with a chosen multifunctor from the
// terminal multicategory, given by its object and its k-morphisms.
struct BasedMulticat {
  Multicat carrier;
  ObjId base = 0;
  std::function<Mor(std::size_t)> base_mor;

  bool from_base(Mor const& f) const;
};

}  // namespace mc
