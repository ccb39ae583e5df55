#include <benchmark/benchmark.h>

#include "streamcert/congest.hpp"
#include "streamcert/generators.hpp"

namespace {

using namespace streamcert;
using namespace streamcert::congest;

void BM_CongestToposort(benchmark::State& state) {
  CongestNetwork net(gen::random_digraph(static_cast<int>(state.range(0)), 0.1, 4));
  int rounds = 0;
  for (auto _ : state) {
    TopoRun r = congest_toposort(net, 4);
    rounds = r.trace.rounds_used;
    benchmark::DoNotOptimize(r.rank.data());
  }
  state.counters["rounds"] = rounds;
}
BENCHMARK(BM_CongestToposort)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_CongestKCert(benchmark::State& state) {
  CongestNetwork net(gen::random_digraph(static_cast<int>(state.range(0)), 0.3, 8));
  for (auto _ : state) {
    KCertRun r = congest_k_cert(net, 2, 0.5, 8);
    benchmark::DoNotOptimize(r.certificate.num_arcs());
  }
}
BENCHMARK(BM_CongestKCert)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
