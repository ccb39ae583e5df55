#include <gtest/gtest.h>

#include "streamcert/errors.hpp"
#include "streamcert/generators.hpp"
#include "streamcert/oracle.hpp"
#include "support.hpp"

using namespace streamcert;
using streamcert::testing::graph;

TEST(Lambda, Examples) {
  EXPECT_EQ(oracle::lambda_st(gen::directed_cycle(3), 0, 1), 1);
  EXPECT_EQ(oracle::lambda_st(graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}), 0, 3), 2);
  EXPECT_EQ(oracle::lambda_st(gen::complete_digraph(5), 1, 3), 4);
  EXPECT_THROW(oracle::lambda_st(gen::directed_cycle(3), 1, 1), ArgumentError);
}

TEST(Kappa, Examples) {
  EXPECT_EQ(oracle::kappa_st(streamcert::testing::path(3), 0, 2), 1);
  EXPECT_EQ(oracle::kappa_st(gen::complete_digraph(4), 2, 0), 3);
  EXPECT_EQ(oracle::kappa_st(graph(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}, {0, 3}}), 0, 3), 3);
  EXPECT_EQ(oracle::kappa_st(gen::complete_digraph(6), 0, 1, 2), 2);
  EXPECT_THROW(oracle::kappa_st(gen::directed_cycle(3), 1, 1), ArgumentError);
}

TEST(Kappa, AtMostLambda) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Digraph g = gen::random_digraph(12, 0.4, seed);
    for (Node s = 0; s < 12; ++s) {
      for (Node t = 0; t < 12; ++t) {
        if (s != t) ASSERT_LE(oracle::kappa_st(g, s, t), oracle::lambda_st(g, s, t));
      }
    }
  }
}

TEST(ValidateCertificate, Examples) {
  Digraph g = gen::random_digraph(15, 0.3, 1);
  EXPECT_TRUE(oracle::validate_certificate(g, g, 3, CertKind::kNode).passed);
  Digraph p = streamcert::testing::path(4);
  Arc bridge{1, 2};
  oracle::ConnReport bad = oracle::validate_certificate(p, p.without({&bridge, 1}), 1, CertKind::kNode);
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.violations.size(), 4u);
  Digraph k4 = gen::complete_digraph(4);
  Arc critical{0, 1};
  Digraph cut = k4.without({&critical, 1});
  EXPECT_FALSE(oracle::validate_certificate(k4, cut, 3, CertKind::kNode).passed);
  EXPECT_TRUE(oracle::validate_certificate(k4, cut, 2, CertKind::kNode).passed);
  EXPECT_FALSE(oracle::validate_certificate(p, graph(4, {{0, 2}}), 1, CertKind::kNode).subgraph);
}

TEST(MinimalCertificates, Examples) {
  auto cyc = oracle::minimal_certificates_exhaustive(gen::directed_cycle(3), 1, CertKind::kNode);
  ASSERT_EQ(cyc.size(), 1u);
  EXPECT_EQ(cyc[0].size(), 3u);
  auto tt = oracle::minimal_certificates_exhaustive(gen::transitive_tournament(3), 1, CertKind::kNode);
  ASSERT_EQ(tt.size(), 1u);
  EXPECT_EQ(tt[0], (std::vector<Arc>{{0, 1}, {1, 2}}));
  auto empty = oracle::minimal_certificates_exhaustive(Digraph(4), 2, CertKind::kArc);
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_TRUE(empty[0].empty());
}
