#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "streamcert/cert_k.hpp"
#include "streamcert/errors.hpp"
#include "streamcert/generators.hpp"
#include "streamcert/oracle.hpp"
#include "support.hpp"

using namespace streamcert;

TEST(KNodeCert, CompleteDigraphK6) {
  SampleScheme scheme;
  scheme.rho = 0.5;
  scheme.r = 24;
  scheme.seed = 1;
  Digraph g = gen::complete_digraph(6);
  KCertResult r = k_node_cert(insertion_stream(g), 2, scheme, RecursionPlan{});
  EXPECT_EQ(r.samples, 24);
  EXPECT_TRUE(oracle::validate_certificate(g, r.cert.graph, 2, CertKind::kNode).passed);
}

TEST(KNodeCert, CutVertexPairsKeepExactConnectivity) {
  // Two 4-cliques sharing node 3.
  std::vector<Arc> arcs;
  for (int u = 0; u < 7; ++u) {
    for (int v = 0; v < 7; ++v) {
      bool left = u <= 3 && v <= 3, right = u >= 3 && v >= 3;
      if (u != v && (left || right)) arcs.push_back({u, v});
    }
  }
  Digraph g(7, arcs);
  SampleScheme scheme;
  scheme.seed = 4;
  KCertResult r = k_node_cert(insertion_stream(g), 2, scheme, RecursionPlan{});
  for (Node s : {0, 1, 2}) {
    for (Node t : {4, 5, 6}) {
      EXPECT_EQ(oracle::kappa_st(r.cert.graph, s, t), 1);
    }
  }
  EXPECT_TRUE(oracle::validate_certificate(g, r.cert.graph, 2, CertKind::kNode).passed);
}

TEST(KNodeCert, RhoBoundaries) {
  Digraph g = gen::random_digraph(12, 0.3, 2);
  SampleScheme full;
  full.rho = 1.0;
  KCertResult r = k_node_cert(insertion_stream(g), 1, full, RecursionPlan{});
  EXPECT_EQ(r.samples, 1);
  EXPECT_EQ(r.cert.graph, tc_preserving_prune(g).graph);
  EXPECT_THROW(k_node_cert(insertion_stream(g), 2, full, RecursionPlan{}), ArgumentError);
  SampleScheme negative;
  negative.rho = -0.1;
  EXPECT_THROW(k_node_cert(insertion_stream(g), 1, negative, RecursionPlan{}), ArgumentError);
}

TEST(KNodeCert, SamplesSharePasses) {
  SampleScheme scheme;
  scheme.seed = 3;
  ArcStream s = insertion_stream(gen::random_digraph(20, 0.3, 3));
  for (int p : {1, 2, 3}) {
    KCertResult r = k_node_cert(s, 2, scheme, RecursionPlan::for_passes(p, StreamModel::kInsertOnly));
    EXPECT_EQ(r.stats.passes, p);
  }
}

TEST(SampledNodes, Deterministic) {
  SampleScheme scheme;
  scheme.seed = 9;
  EXPECT_EQ(sampled_nodes(scheme, 0.5, 3, 40), sampled_nodes(scheme, 0.5, 3, 40));
  EXPECT_NE(sampled_nodes(scheme, 0.5, 3, 40), sampled_nodes(scheme, 0.5, 4, 40));
  EXPECT_EQ(sampled_nodes(scheme, 1.0, 0, 10).size(), 10u);
}

TEST(KArcSampled, RingOfDoubleArcs) {
  // Bidirected cycle: 2-arc-strong.
  Digraph g = gen::circulant(10, std::vector<int>{1, 2});
  SampleScheme scheme;
  scheme.seed = 5;
  KCertResult r = k_arc_cert_sampled(insertion_stream(g), 2, scheme, RecursionPlan{});
  EXPECT_TRUE(oracle::validate_certificate(g, r.cert.graph, 2, CertKind::kArc).passed);
}

TEST(KArcSampled, FullSampleIsOneCert) {
  Digraph g = gen::random_digraph(15, 0.2, 8);
  SampleScheme scheme;
  scheme.rho = 1.0;
  KCertResult r = k_arc_cert_sampled(insertion_stream(g), 1, scheme, RecursionPlan{});
  EXPECT_EQ(r.samples, 1);
  EXPECT_EQ(transitive_closure(r.cert.graph), transitive_closure(g));
}

TEST(KArcSampled, SampleIndependenceGrowth) {
  // alpha = 2, n = 48: two tournaments with no arcs between them.
  Digraph a = gen::random_tournament(24, 1), b = gen::random_tournament(24, 2);
  std::vector<Arc> arcs(a.arcs().begin(), a.arcs().end());
  for (const Arc& x : b.arcs()) arcs.push_back({x.from + 24, x.to + 24});
  Digraph g(48, arcs);
  ASSERT_EQ(independence_number_exact(g), 2);
  SampleScheme scheme;
  scheme.seed = 6;
  const double bound = 4.0 * 2 * 2 * std::log(48.0);
  for (int i = 0; i < 100; ++i) {
    std::vector<Arc> kept;
    for (const Arc& x : g.arcs()) {
      if (arc_sampled(scheme, 0.5, i, x)) kept.push_back(x);
    }
    EXPECT_LE(independence_number_exact(Digraph(48, kept)), bound) << "sample " << i;
  }
}

TEST(Peeling, StronglyConnectedK1) {
  Digraph g = gen::random_strong(20, 0.2, 2);
  KCertResult r = k_arc_cert_peeling(insertion_stream(g), 1, RecursionPlan{});
  EXPECT_LE(r.cert.graph.num_arcs(), 2u * 19);
  EXPECT_TRUE(strongly_connected(r.cert.graph));
}

TEST(Peeling, K4IsTwoArcStrong) {
  Digraph g = gen::complete_digraph(4);
  KCertResult r = k_arc_cert_peeling(insertion_stream(g), 2, RecursionPlan{});
  EXPECT_LE(r.cert.graph.num_arcs(), 4u * 3);
  EXPECT_TRUE(oracle::validate_certificate(g, r.cert.graph, 2, CertKind::kArc).passed);
}

TEST(Peeling, PromiseViolationAtSecondRound) {
  try {
    k_arc_cert_peeling(insertion_stream(gen::directed_cycle(6)), 2, RecursionPlan{});
    FAIL();
  } catch (const PromiseViolation& e) {
    EXPECT_EQ(e.round(), 2);
  }
}

TEST(DisjointBranchings, DoubledCycle) {
  Digraph g = gen::circulant(8, std::vector<int>{1, 7});
  for (Node root : {0, 5}) {
    auto bs = extract_disjoint_branchings(g, root, 2);
    ASSERT_EQ(bs.size(), 2u);
    std::set<Arc> seen;
    std::vector<char> all(8, 1);
    for (const auto& b : bs) {
      EXPECT_TRUE(is_branching(g, b, all));
      for (const Arc& a : b.arcs) EXPECT_TRUE(seen.insert(a).second);
    }
  }
}

TEST(DisjointBranchings, CycleInfeasible) {
  try {
    extract_disjoint_branchings(gen::directed_cycle(5), 0, 2);
    FAIL();
  } catch (const InfeasibleError& e) {
    EXPECT_EQ(e.cut(), 1);
  }
  auto one = extract_disjoint_branchings(gen::directed_cycle(5), 0, 1);
  EXPECT_EQ(one.at(0).arcs.size(), 4u);
}

TEST(Residual, Examples) {
  Digraph t = gen::random_tournament(12, 3);
  EXPECT_TRUE(residual_independence_check(t, Digraph(12)).holds);
  Branching b = grow_branching(t, 0, BranchingKind::kOut);
  ResidualReport rep = residual_independence_check(t, Digraph(12, b.arcs));
  EXPECT_TRUE(rep.holds);
  EXPECT_LE(rep.alpha_residual, 2);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph g = gen::random_digraph(20, 0.3, seed);
    Digraph h = tc_preserving_prune(g).graph;
    EXPECT_TRUE(residual_independence_check(g, h).holds) << "seed " << seed;
  }
}
