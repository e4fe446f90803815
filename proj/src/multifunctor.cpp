#include "mc/multifunctor.hpp"

#include <algorithm>
#include <exception>
#include <functional>

#include "mc/axioms.hpp"

namespace mc {

namespace {

bool is_identity(Multicat const& m, Mor const& f) {
  return f.arity() == 1 && f.profile.source[0] == f.target()
         && f == m.ident(f.target());
}

void inner_tuples(std::vector<std::vector<int>> const& by_target,
                  std::vector<Mor> const& mors,
                  std::vector<ObjId> const& targets, std::size_t room,
                  std::size_t slot, std::vector<int>& cur,
                  std::function<void(std::vector<int> const&)> const& fn) {
  if (cur.size() == targets.size()) {
    fn(cur);
    return;
  }
  for (int g : by_target[targets[cur.size()]]) {
    std::size_t const k = mors[g].arity();
    if (k > room || k > slot) {
      continue;
    }
    cur.push_back(g);
    inner_tuples(by_target, mors, targets, room - k, slot, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

std::shared_ptr<const Fragment> make_fragment(Multicat const& m, Budget b) {
  auto fr = std::make_shared<Fragment>();
  fr->m = m;
  fr->budget = b;
  if (m.max_arity()) {
    b.arity = std::min(b.arity, *m.max_arity());
    b.slot = std::min(b.slot, b.arity);
    fr->budget = b;
  }
  fr->mors = morphisms_upto(m, b.arity);
  for (std::size_t i = 0; i < fr->mors.size(); ++i) {
    fr->index.emplace(fr->mors[i], static_cast<int>(i));
  }
  for (ObjId a = 0; a < static_cast<ObjId>(m.size()); ++a) {
    fr->ident.push_back(fr->find(m.ident(a)));
  }
  std::vector<std::vector<int>> by_target(m.size());
  std::vector<bool> ident(fr->mors.size(), false);
  for (std::size_t i = 0; i < fr->mors.size(); ++i) {
    by_target[fr->mors[i].target()].push_back(static_cast<int>(i));
    ident[i] = is_identity(m, fr->mors[i]);
  }
  for (std::size_t i = 0; i < fr->mors.size(); ++i) {
    Mor const& f = fr->mors[i];
    for (auto const& s : Perm::all(f.arity())) {
      if (s.is_identity()) {
        continue;
      }
      int r = fr->find(m.act(f, s));
      if (r >= 0) {
        fr->acts.push_back({static_cast<int>(i), s, r});
      }
    }
    if (ident[i]) {
      continue;
    }
    std::vector<int> cur;
    inner_tuples(by_target, fr->mors, f.profile.source, b.arity, b.slot, cur,
                 [&](std::vector<int> const& g) {
                   bool all_ident = true;
                   std::vector<Mor> in;
                   for (int x : g) {
                     all_ident = all_ident && ident[x];
                     in.push_back(fr->mors[x]);
                   }
                   if (all_ident) {
                     return;
                   }
                   int r = fr->find(m.gamma(f, in));
                   if (r >= 0) {
                     fr->comps.push_back({static_cast<int>(i), g, r});
                   }
                 });
  }
  auto gens = m.generators();
  if (!gens) {
    if (m.kind() != Kind::thin) {
      throw Error(m.name() + " has no declared generators and is not thin");
    }
    for (std::size_t i = 0; i < fr->mors.size(); ++i) {
      if (!ident[i]) {
        fr->gens.push_back(static_cast<int>(i));
      }
    }
  } else {
    for (auto const& g : *gens) {
      if (is_identity(m, g) || g.arity() > b.arity) {
        continue;
      }
      int i = fr->find(g);
      if (i < 0) {
        throw Error("generator " + format_mor(m, g) + " is not a morphism of "
                    + m.name());
      }
      fr->gens.push_back(i);
    }
  }
  return fr;
}

Mor Multifunctor::operator()(Mor const& f) const {
  int i = frag->find(f);
  if (i < 0) {
    throw Error("multifunctor evaluated outside its budget: "
                + format_mor(frag->m, f));
  }
  return (*images)[i];
}

std::string Multifunctor::label(Multicat const& target) const {
  std::string s = "{";
  for (std::size_t a = 0; a < obj.size(); ++a) {
    if (a) {
      s += ',';
    }
    s += frag->m.label(static_cast<ObjId>(a)) + ">" + target.label(obj[a]);
  }
  s += "|";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) {
      s += ',';
    }
    s += gens[i].tag;
  }
  return s + "}";
}

std::optional<Multifunctor> extend(std::shared_ptr<const Fragment> const& frag,
                                   Multicat const& target,
                                   std::vector<ObjId> obj,
                                   std::vector<Mor> gen_images) {
  Fragment const& fr = *frag;
  std::vector<std::optional<Mor>> img(fr.mors.size());
  auto mapped = [&](Profile const& p) {
    Profile q;
    for (ObjId a : p.source) {
      q.source.push_back(obj[a]);
    }
    q.target = obj[p.target];
    return q;
  };
  auto assign = [&](int i, Mor const& v) {
    if (v.profile != mapped(fr.mors[i].profile)) {
      return false;
    }
    if (img[i]) {
      return *img[i] == v;
    }
    img[i] = v;
    return true;
  };
  for (ObjId a = 0; a < static_cast<ObjId>(obj.size()); ++a) {
    if (fr.ident[a] >= 0 && !assign(fr.ident[a], target.ident(obj[a]))) {
      return std::nullopt;
    }
  }
  if (gen_images.size() != fr.gens.size()) {
    throw Error("extend: wrong number of generator images");
  }
  for (std::size_t g = 0; g < fr.gens.size(); ++g) {
    if (!assign(fr.gens[g], gen_images[g])) {
      return std::nullopt;
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto const& a : fr.acts) {
      if (!img[a.mor]) {
        continue;
      }
      bool had = img[a.result].has_value();
      if (!assign(a.result, target.act(*img[a.mor], a.perm))) {
        return std::nullopt;
      }
      changed = changed || !had;
    }
    for (auto const& c : fr.comps) {
      if (!img[c.outer]) {
        continue;
      }
      std::vector<Mor> in;
      bool ready = true;
      for (int x : c.inners) {
        if (!img[x]) {
          ready = false;
          break;
        }
        in.push_back(*img[x]);
      }
      if (!ready) {
        continue;
      }
      bool had = img[c.result].has_value();
      if (!assign(c.result, target.gamma(*img[c.outer], in))) {
        return std::nullopt;
      }
      changed = changed || !had;
    }
  }
  auto images = std::make_shared<std::vector<Mor>>();
  images->reserve(img.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    if (!img[i]) {
      throw Error("generators of " + fr.m.name() + " do not reach "
                  + format_mor(fr.m, fr.mors[i]) + " within the budget");
    }
    images->push_back(*img[i]);
  }
  return Multifunctor{std::move(obj), std::move(gen_images), frag,
                      std::move(images)};
}

Multifunctor with_budget(Multifunctor const& f, Multicat const& target,
                         Budget b) {
  auto frag = make_fragment(f.frag->m, b);
  std::vector<Mor> gens;
  for (int g : frag->gens) {
    Mor const& x = frag->mors[g];
    int i = f.frag->find(x);
    if (i < 0) {
      throw Error("with_budget: generator outside the original budget");
    }
    gens.push_back((*f.images)[i]);
  }
  auto r = extend(frag, target, f.obj, gens);
  if (!r) {
    throw Error("with_budget: not a multifunctor on the larger budget");
  }
  return *r;
}

Multifunctor identity_multifunctor(std::shared_ptr<const Fragment> const& f) {
  std::vector<ObjId> obj(f->m.size());
  for (std::size_t a = 0; a < obj.size(); ++a) {
    obj[a] = static_cast<ObjId>(a);
  }
  std::vector<Mor> gens;
  for (int g : f->gens) {
    gens.push_back(f->mors[g]);
  }
  return *extend(f, f->m, obj, gens);
}

namespace {

struct Job {
  std::vector<ObjId> obj;
  std::vector<std::vector<Mor>> cands;
  std::size_t count;
};

std::vector<Multifunctor> run_jobs(std::shared_ptr<const Fragment> const& fr,
                                   Multicat const& n,
                                   std::vector<Job> const& jobs, Exec exec) {
  std::vector<std::size_t> start{0};
  for (auto const& j : jobs) {
    start.push_back(start.back() + j.count);
  }
  std::size_t const total = start.back();
  std::vector<std::optional<Multifunctor>> out(total);
  auto work = [&](std::size_t idx) {
    std::size_t const j = static_cast<std::size_t>(
        std::upper_bound(start.begin(), start.end(), idx) - start.begin() - 1);
    Job const& job = jobs[j];
    std::size_t r = idx - start[j];
    std::vector<Mor> gens(job.cands.size());
    for (std::size_t g = job.cands.size(); g-- > 0;) {
      gens[g] = job.cands[g][r % job.cands[g].size()];
      r /= job.cands[g].size();
    }
    out[idx] = extend(fr, n, job.obj, std::move(gens));
  };
  long const t = static_cast<long>(total);
  std::vector<std::exception_ptr> err(total);
  auto guarded = [&](std::size_t i) {
    try {
      work(i);
    } catch (...) {
      err[i] = std::current_exception();
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < t; ++i) {
      guarded(static_cast<std::size_t>(i));
    }
  } else {
    for (long i = 0; i < t; ++i) {
      guarded(static_cast<std::size_t>(i));
    }
  }
  for (auto const& e : err) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  std::vector<Multifunctor> res;
  for (auto& x : out) {
    if (x) {
      res.push_back(std::move(*x));
    }
  }
  return res;
}

template <typename Cands>
std::vector<Job> make_jobs(Fragment const& fr, std::size_t nsize,
                           std::optional<std::pair<ObjId, ObjId>> pin,
                           Cands&& cands) {
  std::vector<Job> jobs;
  std::size_t const msize = fr.m.size();
  for (auto const& obj : all_sources(nsize, msize)) {
    if (pin && obj[pin->first] != pin->second) {
      continue;
    }
    Job job{obj, {}, 1};
    for (int g : fr.gens) {
      auto c = cands(obj, fr.mors[g]);
      if (c.empty()) {
        job.count = 0;
        break;
      }
      job.count *= c.size();
      job.cands.push_back(std::move(c));
    }
    if (job.count > 0) {
      jobs.push_back(std::move(job));
    }
  }
  return jobs;
}

Profile mapped(std::vector<ObjId> const& obj, Profile const& p) {
  Profile q;
  for (ObjId a : p.source) {
    q.source.push_back(obj[a]);
  }
  q.target = obj[p.target];
  return q;
}

}  // namespace

std::vector<Multifunctor> enumerate_multifunctors(Multicat const& m,
                                                  Multicat const& n,
                                                  EnumOptions opt) {
  auto fr = make_fragment(m, opt.budget);
  auto jobs = make_jobs(*fr, n.size(), std::nullopt,
                        [&](std::vector<ObjId> const& obj, Mor const& g) {
                          return n.hom(mapped(obj, g.profile));
                        });
  return run_jobs(fr, n, jobs, opt.exec);
}

std::vector<Multifunctor> enumerate_based_multifunctors(BasedMulticat const& m,
                                                        BasedMulticat const& n,
                                                        EnumOptions opt) {
  auto fr = make_fragment(m.carrier, opt.budget);
  auto jobs = make_jobs(
      *fr, n.carrier.size(), std::make_pair(m.base, n.base),
      [&](std::vector<ObjId> const& obj, Mor const& g) {
        if (m.from_base(g)) {
          return std::vector<Mor>{n.base_mor(g.arity())};
        }
        return n.carrier.hom(mapped(obj, g.profile));
      });
  auto all = run_jobs(fr, n.carrier, jobs, opt.exec);
  std::vector<Multifunctor> res;
  for (auto& f : all) {
    if (is_based(f, m, n)) {
      res.push_back(std::move(f));
    }
  }
  return res;
}

Multifunctor constant_base(std::shared_ptr<const Fragment> const& frag,
                           BasedMulticat const& n) {
  std::vector<ObjId> obj(frag->m.size(), n.base);
  std::vector<Mor> gens;
  for (int g : frag->gens) {
    gens.push_back(n.base_mor(frag->mors[g].arity()));
  }
  auto r = extend(frag, n.carrier, obj, gens);
  if (!r) {
    throw Error("the basepoint of " + n.carrier.name()
                + " is not a multifunctor");
  }
  return *r;
}

bool is_based(Multifunctor const& f, BasedMulticat const& m,
              BasedMulticat const& n) {
  if (f.obj[m.base] != n.base) {
    return false;
  }
  for (std::size_t i = 0; i < f.frag->mors.size(); ++i) {
    Mor const& x = f.frag->mors[i];
    if (m.from_base(x) && !n.from_base((*f.images)[i])) {
      return false;
    }
  }
  return true;
}

}  // namespace mc
