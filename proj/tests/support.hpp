#pragma once

// Shared by the unit tests and the acceptance run.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mc/core.hpp"
#include "mc/homtensor.hpp"
#include "mc/multifunctor.hpp"

namespace mc::testing {

// A commutative partial monoid on {0, 1, .., n-1} with unit 0; -1 marks an
// undefined sum.
struct PartialMonoid {
  std::vector<std::vector<int>> sum;

  std::optional<int> add(int x, int y) const {
    int r = sum[x][y];
    return r < 0 ? std::nullopt : std::optional<int>(r);
  }
  // (x + y) + z and x + (y + z) are both undefined or both equal.
  bool associative() const {
    int const n = static_cast<int>(sum.size());
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          auto xy = add(x, y);
          auto yz = add(y, z);
          std::optional<int> l = xy ? add(*xy, z) : std::nullopt;
          std::optional<int> r = yz ? add(x, *yz) : std::nullopt;
          if (l != r) {
            return false;
          }
        }
      }
    }
    return true;
  }
};

inline PartialMonoid random_partial_monoid(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(-1, n - 1);
  while (true) {
    PartialMonoid m;
    m.sum.assign(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x) {
      m.sum[0][x] = m.sum[x][0] = x;
    }
    for (int x = 1; x < n; ++x) {
      for (int y = x; y < n; ++y) {
        m.sum[x][y] = m.sum[y][x] = pick(rng);
      }
    }
    if (m.associative()) {
      return m;
    }
  }
}

// The thin multicategory with (x_1..x_k) -> y exactly when the sum is
// defined and equals y, generated by the nullary and binary sums.
inline Multicat partial_monoid_multicat(PartialMonoid const& pm,
                                        std::string name) {
  int const n = static_cast<int>(pm.sum.size());
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    labels.push_back(std::to_string(x));
  }
  auto pred = [pm](Profile const& p) {
    std::optional<int> s = 0;
    for (ObjId a : p.source) {
      s = s ? pm.add(*s, a) : std::nullopt;
    }
    return s && *s == p.target;
  };
  std::vector<Profile> gens{Profile{{}, 0}};
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (auto s = pm.add(x, y)) {
        gens.push_back(Profile{{x, y}, *s});
      }
    }
  }
  return thin(std::move(name), std::move(labels), pred, gens);
}

}  // namespace mc::testing
