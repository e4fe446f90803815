// Serial against parallel on the heavier enumerations.  OMP_NUM_THREADS
// sets the team size of the parallel runs.

#include <benchmark/benchmark.h>

#include "mc/axioms.hpp"
#include "mc/based.hpp"
#include "mc/gstar.hpp"
#include "mc/ktheory.hpp"
#include "mc/multifunctor.hpp"

using namespace mc;

namespace {

Exec mode(benchmark::State const& st) {
  return st.range(0) != 0 ? Exec::parallel : Exec::serial;
}

void BM_operad_axioms(benchmark::State& st) {
  Multicat const m = E_power(2).carrier;
  for (auto _ : st) {
    auto rep = check_operad_axioms(m, Budget{4, 4}, mode(st), true);
    benchmark::DoNotOptimize(rep.instances);
  }
}

void BM_enumerate_jc(benchmark::State& st) {
  auto c = indiscrete_perm("E(Sigma_2)", cyclic(2));
  GObj const shape = GObj::of({2, 1});
  for (auto _ : st) {
    JC const j = enumerate_jc(c, shape, mode(st));
    benchmark::DoNotOptimize(j.objects.size());
  }
}

void BM_g_associativity(benchmark::State& st) {
  for (auto _ : st) {
    auto rep = check_g_associativity(3, mode(st));
    benchmark::DoNotOptimize(rep.triples);
  }
}

void BM_multifunctors(benchmark::State& st) {
  Multicat const m = make_E().carrier;
  Multicat const n = indiscrete({"a", "b", "c"});
  EnumOptions opt{Budget{4, 4}};
  opt.exec = mode(st);
  for (auto _ : st) {
    auto maps = enumerate_multifunctors(m, n, opt);
    benchmark::DoNotOptimize(maps.size());
  }
}

}  // namespace

BENCHMARK(BM_operad_axioms)->ArgName("parallel")->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate_jc)->ArgName("parallel")->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_g_associativity)->ArgName("parallel")->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_multifunctors)->ArgName("parallel")->Arg(0)->Arg(1)
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
