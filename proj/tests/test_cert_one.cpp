#include <gtest/gtest.h>

#include <cmath>

#include "streamcert/cert_one.hpp"
#include "streamcert/errors.hpp"
#include "streamcert/generators.hpp"
#include "streamcert/hardness.hpp"
#include "streamcert/oracle.hpp"
#include "support.hpp"

using namespace streamcert;

TEST(Prune, TransitiveTournamentKeepsHamiltonianPath) {
  PruneResult r = tc_preserving_prune(gen::transitive_tournament(5));
  EXPECT_EQ(r.graph, streamcert::testing::path(5));
  EXPECT_TRUE(check_structure(r.graph, r.witness));
  EXPECT_EQ(r.witness.chains, 1);
}

TEST(Prune, CycleAndEmpty) {
  EXPECT_EQ(tc_preserving_prune(gen::directed_cycle(3)).graph, gen::directed_cycle(3));
  EXPECT_EQ(tc_preserving_prune(Digraph(6)).graph, Digraph(6));
}

TEST(Prune, PreservesClosureOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Digraph g = gen::random_digraph(30, 0.02 + 0.02 * static_cast<double>(seed % 10), seed);
    PruneResult r = tc_preserving_prune(g);
    ASSERT_TRUE(g.contains(r.graph));
    ASSERT_EQ(transitive_closure(r.graph), transitive_closure(g)) << "seed " << seed;
    ASSERT_TRUE(check_structure(r.graph, r.witness));
  }
}

TEST(RecursionPlan, Passes) {
  EXPECT_EQ(RecursionPlan::for_passes(3, StreamModel::kInsertOnly).passes(StreamModel::kInsertOnly), 3);
  for (int p = 1; p <= 12; ++p) {
    RecursionPlan plan = RecursionPlan::for_passes(p, StreamModel::kTurnstile);
    EXPECT_LE(plan.passes(StreamModel::kTurnstile), p);
  }
  EXPECT_THROW(RecursionPlan::for_passes(0, StreamModel::kInsertOnly), ArgumentError);
}

TEST(OneCert, SinglePassEqualsPrune) {
  Digraph g = gen::random_digraph(25, 0.2, 3);
  OneCertResult r = one_cert_stream(shuffled(insertion_stream(g), 3), RecursionPlan{});
  EXPECT_EQ(r.cert.graph, tc_preserving_prune(g).graph);
  EXPECT_EQ(r.stats.passes, 1);
  EXPECT_GE(r.stats.peak_words, static_cast<std::int64_t>(g.num_arcs()));
}

TEST(OneCert, FigureTournamentTwoPasses) {
  hardness::BitMatrix zero = hardness::BitMatrix::zeros(2);
  hardness::BitMatrix x2 = zero, y2 = zero;
  x2.set(1, 0, true);
  y2.set(0, 0, true);
  y2.set(1, 0, true);
  y2.set(1, 1, true);
  std::vector<Digraph> gadgets{hardness::gadget_triangle(zero, zero), hardness::gadget_triangle(x2, y2)};
  Digraph g = hardness::embed_tournament(gadgets, 6);
  RecursionPlan plan;
  plan.depth = 2;
  plan.b = 4;
  OneCertResult r = one_cert_stream(insertion_stream(g), plan);
  EXPECT_EQ(r.stats.passes, 2);
  EXPECT_TRUE(validate_one_cert(g, r.cert).ok());
  EXPECT_TRUE(oracle::validate_certificate(g, r.cert.graph, 1, CertKind::kNode).passed);
}

TEST(OneCert, TurnstileDeletesNaiveChoices) {
  // Every arc the insertion prefix offers first gets deleted later, so a
  // selector that remembers early survivors would pick dead arcs.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph g = gen::random_digraph(20, 0.25, seed);
    Digraph decoy = gen::transitive_tournament(20);
    ArcStream s{20, StreamModel::kTurnstile, {}};
    for (const Arc& a : decoy.arcs()) {
      if (!g.has_arc(a.from, a.to)) s.updates.push_back({a, +1});
    }
    for (const Arc& a : g.arcs()) s.updates.push_back({a, +1});
    for (const Arc& a : decoy.arcs()) {
      if (!g.has_arc(a.from, a.to)) s.updates.push_back({a, -1});
    }
    for (int p : {3, 5}) {
      OneCertResult r = one_cert_stream(s, RecursionPlan::for_passes(p, StreamModel::kTurnstile));
      ASSERT_TRUE(g.contains(r.cert.graph)) << "seed " << seed;
      ASSERT_EQ(transitive_closure(r.cert.graph), transitive_closure(g)) << "seed " << seed;
    }
  }
}

TEST(OneCert, StrictBudgetThrows) {
  OneCertOptions opt;
  opt.strict = true;
  opt.budget = 10;
  ArcStream s = insertion_stream(gen::random_tournament(30, 1));
  EXPECT_THROW(one_cert_stream(s, RecursionPlan{}, opt), BudgetViolation);
}

TEST(ValidateOneCert, DetectsMissingArc) {
  Digraph g = streamcert::testing::path(4);
  Certificate cert;
  cert.graph = streamcert::testing::graph(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(validate_one_cert(g, cert).tc_equal);
}

TEST(OneCert, GridPeakRegression) {
  // 10 x 10 grid: bipartite with a perfect matching, so alpha = 50.
  Digraph g = gen::grid(10, 10);
  OneCertResult r = one_cert_stream(insertion_stream(g), RecursionPlan::for_passes(2, StreamModel::kInsertOnly));
  const double baseline = 50.0 * std::pow(100.0, 1.5);
  EXPECT_LE(static_cast<double>(r.stats.peak_words), 4.0 * baseline);
  EXPECT_EQ(r.stats.peak_words, 1522);
}
