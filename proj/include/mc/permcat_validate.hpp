#pragma once

// Template body of validate_permutative; included from permcat.hpp.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace mc {

template <class V>
AxiomReport validate_permutative(V const& v, std::size_t max_violations) {
  AxiomReport rep;
  auto fail = [&](std::string law, std::string detail) {
    if (rep.violations.size() < max_violations) {
      rep.violations.push_back({std::move(law), std::move(detail)});
    } else {
      rep.truncated = true;
    }
  };
  auto check = [&](bool ok, char const* law, auto&& detail) {
    ++rep.instances;
    if (!ok) {
      fail(law, detail());
    }
  };

  auto const objs = v.objects();
  auto const z = v.zero();
  using Arr = decltype(v.id(z));
  std::size_t const no = objs.size();
  auto index = [&](auto const& a) {
    for (std::size_t i = 0; i < no; ++i) {
      if (objs[i] == a) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };
  // sum table on object indices, -1 when undefined
  std::vector<int> osum(no * no, -1);
  for (std::size_t i = 0; i < no; ++i) {
    for (std::size_t j = 0; j < no; ++j) {
      if (auto c = v.oplus_obj(objs[i], objs[j])) {
        osum[i * no + j] = index(*c);
      }
    }
  }
  std::vector<Arr> arrs;
  std::vector<int> asrc;
  std::vector<int> atgt;
  for (std::size_t i = 0; i < no; ++i) {
    for (std::size_t j = 0; j < no; ++j) {
      for (auto const& f : v.hom(objs[i], objs[j])) {
        arrs.push_back(f);
        asrc.push_back(static_cast<int>(i));
        atgt.push_back(static_cast<int>(j));
      }
    }
  }
  std::size_t const na = arrs.size();
  // arrows bucketed by source index
  std::vector<std::vector<std::size_t>> by_src(no);
  for (std::size_t k = 0; k < na; ++k) {
    by_src[asrc[k]].push_back(k);
  }

  // category
  for (auto const& a : objs) {
    auto i = v.id(a);
    check(v.src(i) == a && v.tgt(i) == a, "identity",
          [&] { return "id on " + v.show_obj(a); });
  }
  for (auto const& f : arrs) {
    check(v.compose(f, v.id(v.src(f))) == f
              && v.compose(v.id(v.tgt(f)), f) == f,
          "unit", [&] { return v.show_arr(f); });
  }
  // composable pairs (g, f) by index, with composites
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<Arr> composites;
  for (std::size_t fi = 0; fi < na; ++fi) {
    auto const& f = arrs[fi];
    for (std::size_t gi : by_src[atgt[fi]]) {
      auto const& g = arrs[gi];
      auto gf = v.compose(g, f);
      check(v.src(gf) == v.src(f) && v.tgt(gf) == objs[atgt[gi]],
            "composite",
            [&] { return v.show_arr(g) + " o " + v.show_arr(f); });
      for (std::size_t hi : by_src[atgt[gi]]) {
        auto const& h = arrs[hi];
        check(v.compose(h, gf) == v.compose(v.compose(h, g), f),
              "associativity", [&] {
                return v.show_arr(h) + " o " + v.show_arr(g) + " o "
                       + v.show_arr(f);
              });
      }
      pairs.emplace_back(gi, fi);
      composites.push_back(std::move(gf));
    }
  }

  // monoid on objects
  for (auto const& a : objs) {
    check(v.oplus_obj(a, z) == a && v.oplus_obj(z, a) == a, "unit object",
          [&] { return v.show_obj(a); });
    for (auto const& b : objs) {
      auto ab = v.oplus_obj(a, b);
      if (!ab) {
        continue;
      }
      for (auto const& c : objs) {
        auto bc = v.oplus_obj(b, c);
        if (!bc) {
          continue;
        }
        auto l = v.oplus_obj(*ab, c);
        auto r = v.oplus_obj(a, *bc);
        if (l || r) {
          check(l == r, "associativity of objects", [&] {
            return v.show_obj(a) + "," + v.show_obj(b) + "," + v.show_obj(c);
          });
        }
      }
    }
  }

  // monoid on arrows, functoriality
  auto const iz = v.id(z);
  for (auto const& f : arrs) {
    check(v.oplus_arr(f, iz) == f && v.oplus_arr(iz, f) == f, "unit arrow",
          [&] { return v.show_arr(f); });
  }
  for (auto const& a : objs) {
    for (auto const& b : objs) {
      auto ab = v.oplus_obj(a, b);
      if (!ab) {
        continue;
      }
      check(v.oplus_arr(v.id(a), v.id(b)) == v.id(*ab), "identity sum",
            [&] { return v.show_obj(a) + "," + v.show_obj(b); });
    }
  }
  auto summable = [&](std::size_t f, std::size_t g) {
    return osum[asrc[f] * no + asrc[g]] >= 0
           && osum[atgt[f] * no + atgt[g]] >= 0;
  };
  for (std::size_t fi = 0; fi < na; ++fi) {
    auto const& f = arrs[fi];
    for (std::size_t gi = 0; gi < na; ++gi) {
      if (!summable(fi, gi)) {
        continue;
      }
      auto const& g = arrs[gi];
      auto fg = v.oplus_arr(f, g);
      if (!fg) {
        continue;
      }
      check(v.src(*fg) == v.oplus_obj(v.src(f), v.src(g))
                && v.tgt(*fg) == v.oplus_obj(v.tgt(f), v.tgt(g)),
            "sum profile",
            [&] { return v.show_arr(f) + " + " + v.show_arr(g); });
      int const s1 = osum[asrc[fi] * no + asrc[gi]];
      int const t1 = osum[atgt[fi] * no + atgt[gi]];
      for (std::size_t hi = 0; hi < na; ++hi) {
        if (!summable(gi, hi)) {
          continue;
        }
        bool const left = osum[s1 * no + asrc[hi]] >= 0
                          && osum[t1 * no + atgt[hi]] >= 0;
        if (!left) {
          // the other bracketing is defined exactly when this one is
          int const s2 = osum[asrc[gi] * no + asrc[hi]];
          int const t2 = osum[atgt[gi] * no + atgt[hi]];
          if (osum[asrc[fi] * no + s2] < 0 || osum[atgt[fi] * no + t2] < 0) {
            continue;
          }
        }
        auto const& h = arrs[hi];
        auto gh = v.oplus_arr(g, h);
        if (!gh) {
          continue;
        }
        auto l = v.oplus_arr(*fg, h);
        auto r = v.oplus_arr(f, *gh);
        if (l || r) {
          check(l == r, "associativity of arrows", [&] {
            return v.show_arr(f) + " + " + v.show_arr(g) + " + "
                   + v.show_arr(h);
          });
        }
      }
    }
  }
  // (g o f) + (g' o f') = (g + g') o (f + f'), pairs bucketed by the
  // source of f and the target of g
  std::vector<std::vector<std::size_t>> by_ends(no * no);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto const [gi, fi] = pairs[i];
    by_ends[asrc[fi] * no + atgt[gi]].push_back(i);
  }
  for (std::size_t a = 0; a < no; ++a) {
    for (std::size_t c = 0; c < no; ++c) {
      for (std::size_t a2 = 0; a2 < no; ++a2) {
        if (osum[a * no + a2] < 0) {
          continue;
        }
        for (std::size_t c2 = 0; c2 < no; ++c2) {
          if (osum[c * no + c2] < 0) {
            continue;
          }
          for (std::size_t i : by_ends[a * no + c]) {
            auto const [gi, fi] = pairs[i];
            for (std::size_t j : by_ends[a2 * no + c2]) {
              auto const [gj, fj] = pairs[j];
              auto const& g = arrs[gi];
              auto const& f = arrs[fi];
              auto const& g2 = arrs[gj];
              auto const& f2 = arrs[fj];
              auto lhs = v.oplus_arr(composites[i], composites[j]);
              auto gg = v.oplus_arr(g, g2);
              auto ff = v.oplus_arr(f, f2);
              if (!lhs || !gg || !ff) {
                continue;
              }
              check(*lhs == v.compose(*gg, *ff), "functoriality", [&] {
                return "(" + v.show_arr(g) + " o " + v.show_arr(f) + ") + ("
                       + v.show_arr(g2) + " o " + v.show_arr(f2) + ")";
              });
            }
          }
        }
      }
    }
  }

  // symmetry
  for (auto const& a : objs) {
    for (auto const& b : objs) {
      auto ab = v.oplus_obj(a, b);
      auto ba = v.oplus_obj(b, a);
      if (!ab || !ba) {
        continue;
      }
      auto g = v.gamma(a, b);
      check(v.src(g) == *ab && v.tgt(g) == *ba, "symmetry profile",
            [&] { return v.show_obj(a) + "," + v.show_obj(b); });
      check(v.compose(v.gamma(b, a), g) == v.id(*ab), "symmetry inverse",
            [&] { return v.show_obj(a) + "," + v.show_obj(b); });
    }
    check(v.gamma(a, z) == v.id(a), "symmetry unit",
          [&] { return v.show_obj(a); });
  }
  for (auto const& a : objs) {
    for (auto const& b : objs) {
      auto ab = v.oplus_obj(a, b);
      if (!ab) {
        continue;
      }
      for (auto const& c : objs) {
        auto abc = v.oplus_obj(*ab, c);
        auto ac = v.oplus_obj(a, c);
        auto bc = v.oplus_obj(b, c);
        if (!abc || !ac || !bc) {
          continue;
        }
        // a+b+c -> a+c+b -> c+a+b
        auto step1 = v.oplus_arr(v.id(a), v.gamma(b, c));
        auto step2 = v.oplus_arr(v.gamma(a, c), v.id(b));
        if (!step1 || !step2) {
          continue;
        }
        check(v.gamma(*ab, c) == v.compose(*step2, *step1), "symmetry hexagon",
              [&] {
                return v.show_obj(a) + "," + v.show_obj(b) + ","
                       + v.show_obj(c);
              });
      }
    }
  }
  // naturality of gamma
  for (std::size_t fi = 0; fi < na; ++fi) {
    for (std::size_t gi = 0; gi < na; ++gi) {
      if (!summable(fi, gi) || !summable(gi, fi)) {
        continue;
      }
      auto const& f = arrs[fi];
      auto const& g = arrs[gi];
      auto fg = v.oplus_arr(f, g);
      auto gf = v.oplus_arr(g, f);
      if (!fg || !gf) {
        continue;
      }
      auto lhs = v.compose(v.gamma(v.tgt(f), v.tgt(g)), *fg);
      auto rhs = v.compose(*gf, v.gamma(v.src(f), v.src(g)));
      check(lhs == rhs, "symmetry naturality",
            [&] { return v.show_arr(f) + "," + v.show_arr(g); });
    }
  }
  return rep;
}

}  // namespace mc
