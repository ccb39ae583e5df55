#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "streamcert/errors.hpp"
#include "streamcert/generators.hpp"
#include "support.hpp"

using namespace streamcert;
using streamcert::testing::graph;
using streamcert::testing::path;

TEST(Digraph, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(graph(2, {{0, 0}}), ArgumentError);
  EXPECT_THROW(graph(2, {{0, 1}, {0, 1}}), ArgumentError);
  EXPECT_THROW(graph(2, {{0, 2}}), ArgumentError);
  Digraph loose = Digraph::from_loose_arcs(2, {{0, 1}, {0, 1}, {1, 1}});
  EXPECT_EQ(loose.num_arcs(), 1u);
}

TEST(Digraph, Adjacency) {
  Digraph g = graph(4, {{0, 1}, {0, 2}, {3, 0}});
  EXPECT_EQ(g.out_degree(0), 2);
  EXPECT_EQ(g.in_degree(0), 1);
  EXPECT_TRUE(g.has_arc(3, 0));
  EXPECT_FALSE(g.has_arc(0, 3));
  EXPECT_TRUE(g.reversed().has_arc(0, 3));
  Arc drop{0, 1};
  EXPECT_FALSE(g.without({&drop, 1}).has_arc(0, 1));
  EXPECT_TRUE(g.contains(graph(4, {{3, 0}})));
}

TEST(Reachability, Basics) {
  Digraph cycle = gen::directed_cycle(3);
  EXPECT_TRUE(reachable(cycle, 0, 2));
  EXPECT_FALSE(reachable(Digraph(2), 0, 1));
  EXPECT_THROW(reachable(cycle, 0, 3), ArgumentError);
}

TEST(Reachability, MatrixAgreesWithBfs) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph g = gen::random_digraph(70, 0.03, seed);
    ReachMatrix m(g);
    for (Node s = 0; s < g.num_nodes(); s += 7) {
      auto row = reach_from(g, s);
      for (Node t = 0; t < g.num_nodes(); ++t) ASSERT_EQ(m(s, t), row[t] != 0);
    }
  }
}

TEST(TransitiveClosure, Examples) {
  Digraph tc = transitive_closure(path(3));
  EXPECT_EQ(tc, graph(3, {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(transitive_closure(gen::directed_cycle(3)).num_arcs(), 6u);
  EXPECT_EQ(transitive_closure(Digraph(4)).num_arcs(), 0u);
}

TEST(Scc, Examples) {
  EXPECT_EQ(scc_tarjan(gen::directed_cycle(3)).count(), 1);
  EXPECT_EQ(scc_tarjan(path(3)).count(), 3);
  EXPECT_EQ(scc_tarjan(streamcert::testing::bridge_figure_g()).count(), 1);
}

TEST(Scc, ReverseTopologicalIds) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Digraph g = gen::random_digraph(25, 0.08, seed);
    SccDecomposition d = scc_tarjan(g);
    for (const Arc& a : g.arcs()) EXPECT_GE(d.component[a.from], d.component[a.to]);
    for (Node u = 0; u < g.num_nodes(); ++u) {
      for (Node v = 0; v < g.num_nodes(); ++v) {
        bool same = reachable(g, u, v) && reachable(g, v, u);
        ASSERT_EQ(same, d.component[u] == d.component[v]);
      }
    }
  }
}

TEST(IndependenceNumber, Examples) {
  EXPECT_EQ(independence_number_exact(gen::random_tournament(5, 3)), 1);
  EXPECT_EQ(independence_number_exact(Digraph(7)), 7);
  EXPECT_EQ(independence_number_exact(gen::directed_cycle(7)), 3);
  EXPECT_THROW(independence_number_exact(Digraph(65)), BudgetError);
}

TEST(ChainCover, Examples) {
  ChainCover c = chain_cover_minimum(gen::transitive_tournament(4));
  ASSERT_EQ(c.size(), 1);
  EXPECT_EQ(c.chains[0], (std::vector<Node>{0, 1, 2, 3}));
  EXPECT_EQ(chain_cover_minimum(Digraph(3)).size(), 3);
}

namespace {

// Minimum number of chains by brute force over set partitions.
int brute_chain_cover(const Digraph& g) {
  const int n = g.num_nodes();
  ReachMatrix r(g);
  int best = n;
  std::vector<int> block(n, 0);
  auto valid = [&](int blocks) {
    for (int b = 0; b < blocks; ++b) {
      for (Node u = 0; u < n; ++u) {
        for (Node v = u + 1; v < n; ++v) {
          if (block[u] == b && block[v] == b && !r(u, v) && !r(v, u)) return false;
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int i, int blocks) -> void {
    if (blocks >= best) return;
    if (i == n) {
      if (valid(blocks)) best = blocks;
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[i] = b;
      self(self, i + 1, std::max(blocks, b + 1));
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace

TEST(ChainCover, MatchesBruteForceOnDags) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    Digraph g = gen::random_dag(8, 0.25, seed);
    ChainCover c = chain_cover_minimum(g);
    EXPECT_EQ(c.size(), brute_chain_cover(g)) << "seed " << seed;
    ReachMatrix r(g);
    for (const auto& chain : c.chains) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) EXPECT_TRUE(r(chain[i], chain[i + 1]));
    }
  }
}

TEST(ChainCover, AtMostIndependenceNumber) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph g = gen::random_digraph(18, 0.15, seed);
    EXPECT_LE(chain_cover_minimum(g).size(), independence_number_exact(g));
  }
}

TEST(Branching, Examples) {
  Branching b = grow_branching(gen::directed_cycle(3), 0, BranchingKind::kOut);
  EXPECT_EQ(b.arcs, (std::vector<Arc>{{0, 1}, {1, 2}}));
  Digraph star = graph(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(grow_branching(star, 0, BranchingKind::kOut).arcs.size(), 3u);
  try {
    grow_branching(path(3), 2, BranchingKind::kOut);
    FAIL() << "expected a coverage error";
  } catch (const CoverageError& e) {
    EXPECT_TRUE(e.missing() == 0 || e.missing() == 1);
  }
}

TEST(Branching, InBranchingValidates) {
  Digraph g = gen::random_strong(15, 0.1, 4);
  Branching in = grow_branching(g, 3, BranchingKind::kIn);
  std::vector<char> all(15, 1);
  EXPECT_TRUE(is_branching(g, in, all));
  EXPECT_EQ(in.arcs.size(), 14u);
}

TEST(Degeneracy, Examples) {
  EXPECT_EQ(degeneracy(path(6)), 1);
  EXPECT_EQ(degeneracy(gen::complete_digraph(4)), 3);
  Digraph g = gen::random_strong(20, 0.2, 1);
  Branching a = grow_branching(g, 0, BranchingKind::kOut);
  Branching b = grow_branching(g, 0, BranchingKind::kIn);
  std::vector<Arc> both = a.arcs;
  both.insert(both.end(), b.arcs.begin(), b.arcs.end());
  EXPECT_LE(degeneracy(Digraph::from_loose_arcs(20, both)), 3);
}
