#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mc/core.hpp"

namespace mc {

struct Violation {
  std::string law;
  std::string detail;
  auto operator<=>(Violation const&) const = default;
};

struct AxiomReport {
  std::vector<Violation> violations;
  std::size_t instances = 0;
  bool truncated = false;

  bool ok() const noexcept {
    return violations.empty();
  }
};

// All morphisms of arity at most k, ordered by arity, then source, target, tag.
std::vector<Mor> morphisms_upto(Multicat const& m, std::size_t k);

// Checks identity membership, closure, both unit laws, associativity, both
// equivariance laws and the right-action law over every composable tuple in
// the budget.  When every hom set within the budget has at most one element
// (always so for thin kind) each law compares two elements of one hom set,
// so closure already decides it; the laws are then skipped unless `full` is
// set.  Associativity instances with an identity outer map, or with only
// identities in one layer of inner maps, are implied by the unit laws and
// not enumerated.
AxiomReport check_operad_axioms(Multicat const& m, Budget budget = {},
                                Exec exec = Exec::parallel, bool full = false,
                                std::size_t max_violations = 1000);

}  // namespace mc
