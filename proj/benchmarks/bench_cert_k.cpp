#include <benchmark/benchmark.h>

#include "streamcert/cert_k.hpp"
#include "streamcert/generators.hpp"
#include "streamcert/oracle.hpp"

namespace {

using namespace streamcert;

void BM_KNodeCert(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  ArcStream s = insertion_stream(gen::random_digraph(n, 0.4, 5));
  SampleScheme scheme;
  scheme.seed = 5;
  for (auto _ : state) {
    KCertResult r = k_node_cert(s, k, scheme, RecursionPlan{});
    benchmark::DoNotOptimize(r.cert.graph.num_arcs());
  }
}
BENCHMARK(BM_KNodeCert)->Args({20, 2})->Args({30, 3})->Unit(benchmark::kMillisecond);

void BM_Peeling(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  ArcStream s = insertion_stream(gen::random_arc_strong(n, k, 0.2, 9));
  for (auto _ : state) {
    KCertResult r = k_arc_cert_peeling(s, k, RecursionPlan{});
    benchmark::DoNotOptimize(r.cert.graph.num_arcs());
  }
}
BENCHMARK(BM_Peeling)->Args({25, 2})->Args({50, 3})->Unit(benchmark::kMillisecond);

void BM_ValidateCertificate(benchmark::State& state) {
  Digraph g = gen::random_digraph(static_cast<int>(state.range(0)), 0.3, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::validate_certificate(g, g, 3, CertKind::kNode).passed);
  }
}
BENCHMARK(BM_ValidateCertificate)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace
