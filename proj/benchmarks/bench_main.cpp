#include "cusg/completion.hpp"
#include "cusg/corpus.hpp"
#include "cusg/named.hpp"
#include "cusg/properties.hpp"
#include "cusg/tensor.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace cusg;

const std::vector<FinPom>& corpus() {
  static const std::vector<FinPom> c = pom_corpus(31, 64, 6);
  return c;
}

void BM_CheckProperty(benchmark::State& state, Prop p) {
  for (auto _ : state)
    for (const auto& m : corpus()) benchmark::DoNotOptimize(check_property(m, {p}));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus().size()));
}
BENCHMARK_CAPTURE(BM_CheckProperty, riesz_refinement, Prop::RieszRefinement);
BENCHMARK_CAPTURE(BM_CheckProperty, nearly_unperforated, Prop::NearlyUnperforated);
BENCHMARK_CAPTURE(BM_CheckProperty, o5, Prop::O5);

void BM_CuOfPom(benchmark::State& state) {
  for (auto _ : state)
    for (const auto& m : corpus()) benchmark::DoNotOptimize(cu_of_pom(m));
}
BENCHMARK(BM_CuOfPom);

void BM_SaturateWithElementary(benchmark::State& state) {
  const FinPom e = make_elementary(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_saturate(e, e));
}
BENCHMARK(BM_SaturateWithElementary)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_TensorLeqNaturals(benchmark::State& state) {
  const GridCarrier nat = GridCarrier::naturals(6);
  const FormalSum f = {{2, 3}}, g = {{1, 6}};
  for (auto _ : state) benchmark::DoNotOptimize(tensor_leq(nat, nat, f, g));
}
BENCHMARK(BM_TensorLeqNaturals)->Unit(benchmark::kMicrosecond);

void BM_NamedArithmetic(benchmark::State& state) {
  const NamedCu s = parse_named("gensolid(P={2,3};K={2};e={2:2})");
  const Elem a = parse_elem(s, "5/6|1"), b = parse_elem(s, "7/4|3");
  for (auto _ : state) {
    Elem x = add(s, mul(s, a, b), a);
    benchmark::DoNotOptimize(leq(s, x, times(s, 3, b)));
  }
}
BENCHMARK(BM_NamedArithmetic);

void BM_SolidityWitness(benchmark::State& state) {
  const NamedCu s = parse_named("r(6^inf)");
  const Elem a = parse_elem(s, "35/72");
  for (auto _ : state) benchmark::DoNotOptimize(solidity_witness(s, a, true));
}
BENCHMARK(BM_SolidityWitness);

void BM_RqLimit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rq_limit_simplicial(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_RqLimit)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
