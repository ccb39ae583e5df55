#include <benchmark/benchmark.h>

#include "streamcert/cert_one.hpp"
#include "streamcert/generators.hpp"

namespace {

using namespace streamcert;

void BM_OneCertInsertOnly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  ArcStream s = shuffled(insertion_stream(gen::random_tournament(n, 7)), 7);
  RecursionPlan plan = RecursionPlan::for_passes(p, StreamModel::kInsertOnly);
  std::int64_t peak = 0;
  for (auto _ : state) {
    OneCertResult r = one_cert_stream(s, plan);
    peak = r.stats.peak_words;
    benchmark::DoNotOptimize(r.cert.graph.num_arcs());
  }
  state.counters["peak_words"] = static_cast<double>(peak);
  state.counters["arcs"] = static_cast<double>(s.updates.size());
}
BENCHMARK(BM_OneCertInsertOnly)->ArgsProduct({{32, 64, 128}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_OneCertTurnstile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ArcStream s = turnstile_stream(gen::random_digraph(n, 0.3, 3), 0.2, 3);
  RecursionPlan plan = RecursionPlan::for_passes(5, StreamModel::kTurnstile);
  for (auto _ : state) {
    OneCertResult r = one_cert_stream(s, plan);
    benchmark::DoNotOptimize(r.cert.graph.num_arcs());
  }
}
BENCHMARK(BM_OneCertTurnstile)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Prune(benchmark::State& state) {
  Digraph g = gen::random_digraph(static_cast<int>(state.range(0)), 0.2, 11);
  for (auto _ : state) benchmark::DoNotOptimize(tc_preserving_prune(g).graph.num_arcs());
}
BENCHMARK(BM_Prune)->Arg(64)->Arg(256);

}  // namespace
