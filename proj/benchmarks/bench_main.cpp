#include <benchmark/benchmark.h>

#include <variant>

#include "gauss_forge/closed_diagram.hpp"
#include "gauss_forge/corpus.hpp"
#include "gauss_forge/geometry.hpp"
#include "gauss_forge/oracles.hpp"
#include "gauss_forge/patterns.hpp"
#include "gauss_forge/resolve.hpp"

using namespace gauss_forge;

namespace {

GaussDiagram knot_sample(int segments) { return extract_diagram(random_long_link(11, 1, segments)).diagram; }

GaussDiagram link_sample(int segments) { return extract_diagram(random_long_link(11, 3, segments)).diagram; }

void BM_CountKnotPatterns(benchmark::State& state) {
  const GaussDiagram g = knot_sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(casson(g));
  state.counters["chords"] = static_cast<double>(g.chords().size());
}
BENCHMARK(BM_CountKnotPatterns)->Arg(8)->Arg(16)->Arg(32);

void BM_CountLinkPatterns(benchmark::State& state) {
  const GaussDiagram g = link_sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_patterns(g));
  state.counters["chords"] = static_cast<double>(g.chords().size());
}
BENCHMARK(BM_CountLinkPatterns)->Arg(4)->Arg(8)->Arg(16);

void BM_ResolveAll(benchmark::State& state) {
  const GaussDiagram g = extract_diagram(random_long_link(5, 1, 9, {.forced_multiplicity = static_cast<int>(state.range(0))})).diagram;
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(resolve_all(g, seed++));
}
BENCHMARK(BM_ResolveAll)->Arg(3)->Arg(4);

void BM_ExtractDiagram(benchmark::State& state) {
  const PolyLink link = random_long_link(3, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(extract_diagram(link));
}
BENCHMARK(BM_ExtractDiagram)->Arg(4)->Arg(8)->Arg(16);

void BM_ConwayTrefoil(benchmark::State& state) {
  const ClosedDiagram d = std::get<ClosedDiagram>(corpus_get("trefoil_closed").payload);
  for (auto _ : state) benchmark::DoNotOptimize(conway(d));
}
BENCHMARK(BM_ConwayTrefoil);

void BM_ConwayRandomKnot(benchmark::State& state) {
  const ClosedDiagram d = closure(knot_sample(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(conway(d));
}
BENCHMARK(BM_ConwayRandomKnot)->Arg(6)->Arg(8);

void BM_MagnusBorromean(benchmark::State& state) {
  const ClosedDiagram d = std::get<ClosedDiagram>(corpus_get("borromean_closed").payload);
  for (auto _ : state) benchmark::DoNotOptimize(magnus_mu123(d));
}
BENCHMARK(BM_MagnusBorromean);

}  // namespace
BENCHMARK_MAIN();
