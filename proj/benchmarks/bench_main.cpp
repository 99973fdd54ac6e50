#include <benchmark/benchmark.h>

#include "stsp/stsp.hpp"

using namespace stsp;

namespace {

void BM_EsdMatrix(benchmark::State& state) {
  const Ring z = Ring::integers();
  const int l = static_cast<int>(state.range(0));
  const FormIdeal whole = FormIdeal::whole(z);
  Draw d(whole, l, Rng(1), 8);
  HVector u = d.vec(), v = d.vec();
  d.orthogonalize(v, {u}, {}, false);
  const Scalar a = d.r();
  for (auto _ : state) benchmark::DoNotOptimize(esd_matrix(u, v, a));
}
BENCHMARK(BM_EsdMatrix)->Arg(3)->Arg(8)->Arg(16);

void BM_EvalAbsWord(benchmark::State& state) {
  const Ring r = Ring::modulo(12);
  const FormIdeal whole = FormIdeal::whole(r);
  Draw d(whole, 4, Rng(2), 8);
  const AbsWord w = d.abs_word(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_abs_word(w));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_EvalAbsWord)->Arg(8)->Arg(64)->Arg(512);

void BM_EvalRelWord(benchmark::State& state) {
  const Ring z = Ring::integers();
  const FormIdeal f = FormIdeal::maximal(z, {z(2)});
  Draw d(f, 4, Rng(3), 8);
  RelWord w(z, 4);
  for (long k = 0; k < state.range(0); ++k) {
    const int i = d.index();
    const int j = d.index_not_in({i});
    w.push(d.abs_word(4), i, j, j == -i ? d.gamma() : d.ideal());
  }
  for (auto _ : state) benchmark::DoNotOptimize(eval_rel_word(w));
}
BENCHMARK(BM_EvalRelWord)->Arg(8)->Arg(64);

void BM_KlSuite(benchmark::State& state) {
  const Ring r = Ring::modulo(12);
  const FormIdeal f = FormIdeal::minimal(r, {r(4)});
  for (auto _ : state) benchmark::DoNotOptimize(verify_kl_relations(f, 3, SuiteOptions{20, 1, 8}).passes());
}
BENCHMARK(BM_KlSuite)->Unit(benchmark::kMillisecond);

void BM_VdkTSuite(benchmark::State& state) {
  const Ring z = Ring::integers();
  const FormIdeal f = FormIdeal::maximal(z, {z(2)});
  for (auto _ : state) benchmark::DoNotOptimize(verify_t_relations(f, 3, SuiteOptions{20, 1, 8}).passes());
}
BENCHMARK(BM_VdkTSuite)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
