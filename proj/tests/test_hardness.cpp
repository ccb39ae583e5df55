#include <gtest/gtest.h>

#include "streamcert/errors.hpp"
#include "streamcert/hardness.hpp"
#include "support.hpp"

using namespace streamcert;
using namespace streamcert::hardness;

namespace {

BitMatrix matrix(std::initializer_list<std::initializer_list<int>> rows) {
  BitMatrix b = BitMatrix::zeros(static_cast<int>(rows.size()));
  int i = 0;
  for (auto row : rows) {
    int j = 0;
    for (int v : row) b.set(i, j++, v != 0);
    ++i;
  }
  return b;
}

}  // namespace

TEST(PlainGadget, Examples) {
  EXPECT_EQ(gadget_plain(BitMatrix::zeros(3), BitMatrix::zeros(3)), Digraph(9));
  Digraph one = gadget_plain(matrix({{1}}), matrix({{1}}));
  EXPECT_EQ(one, streamcert::testing::path(3));
}

TEST(TriangleGadget, FigureTriangle) {
  Digraph g = gadget_triangle(matrix({{0, 0}, {1, 0}}), matrix({{1, 0}, {1, 1}}));
  // a2 = 1, b1 = 2, c2 = 5
  EXPECT_TRUE(g.has_arc(1, 2));
  EXPECT_TRUE(g.has_arc(2, 5));
  EXPECT_TRUE(g.has_arc(5, 1));
  EXPECT_TRUE(has_directed_triangle(g));
  EXPECT_FALSE(has_directed_triangle(gadget_triangle(BitMatrix::zeros(3), BitMatrix::zeros(3))));
}

TEST(EmbedTournament, FigureArcForArc) {
  BitMatrix zero = BitMatrix::zeros(2);
  std::vector<Digraph> gadgets{gadget_triangle(zero, zero),
                               gadget_triangle(matrix({{0, 0}, {1, 0}}), matrix({{1, 0}, {1, 1}}))};
  Digraph g = embed_tournament(gadgets, 6);
  // Per gadget: a1 a2 b1 b2 c1 c2 at offsets 0..5.
  std::vector<Arc> expect;
  for (Node u = 0; u < 6; ++u) {
    for (Node v = 6; v < 12; ++v) expect.push_back({u, v});
  }
  for (auto [u, v] : std::vector<std::pair<int, int>>{
           {2, 0}, {3, 0}, {2, 1}, {3, 1}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {4, 0}, {5, 1}}) {
    expect.push_back({u, v});
  }
  for (auto [u, v] : std::vector<std::pair<int, int>>{
           {2, 0}, {3, 0}, {1, 2}, {3, 1}, {2, 4}, {4, 3}, {2, 5}, {3, 5}, {4, 0}, {5, 1}}) {
    expect.push_back({u + 6, v + 6});
  }
  EXPECT_EQ(g, Digraph(12, expect));
  EXPECT_LE(independence_number_exact(g), 2);
}

TEST(EmbedTournament, EmptyGadgets) {
  std::vector<Digraph> gadgets(2, Digraph(2));
  EXPECT_EQ(embed_tournament(gadgets, 2).num_arcs(), 4u);
  std::vector<Digraph> bad{Digraph(2), Digraph(3)};
  EXPECT_THROW(embed_tournament(bad, 2), ArgumentError);
}

TEST(TriangleAlphaGadget, Examples) {
  TerminalGadget g = gadget_triangle_alpha(false, true, 3);
  EXPECT_EQ(g.graph.num_nodes(), 6);
  EXPECT_TRUE(has_hamiltonian_path(g.graph, g.s));
  EXPECT_TRUE(reachable(g.graph, g.s, g.t));
  TerminalGadget both = gadget_triangle_alpha(true, true, 3);
  EXPECT_FALSE(reachable(both.graph, both.s, both.t));
  EXPECT_FALSE(has_hamiltonian_path(both.graph, both.s));
  TerminalGadget none = gadget_triangle_alpha(false, false, 3);
  EXPECT_TRUE(none.graph.has_arc(none.s, none.t));
  for (int alpha : {1, 2, 3, 4}) {
    for (int x : {0, 1}) {
      for (int y : {0, 1}) {
        TerminalGadget t = gadget_triangle_alpha(x, y, alpha);
        EXPECT_LE(independence_number_exact(t.graph), std::max(alpha, 1));
        EXPECT_EQ(has_hamiltonian_path(t.graph, t.s), !(x && y));
      }
    }
  }
}

TEST(HamPathStar, Examples) {
  std::vector<Digraph> singles(4, Digraph(1));
  Instance a = hampath_star(singles);
  EXPECT_TRUE(has_hamiltonian_path(a.graph, a.source, a.sink));
  Instance b = hampath_star(std::vector<Digraph>{Digraph(2), Digraph(2)});
  EXPECT_FALSE(has_hamiltonian_path(b.graph, b.source, b.sink));
  std::vector<Digraph> paths(2, streamcert::testing::path(2));
  Instance c = hampath_star(paths);
  EXPECT_TRUE(has_hamiltonian_path(c.graph, c.source, c.sink));
}

TEST(ReachBackedge, Examples) {
  TerminalGadget direct{streamcert::testing::graph(3, {{0, 2}}), 0, 2};
  TerminalGadget cut{Digraph(3), 0, 2};
  std::vector<TerminalGadget> ok(3, direct);
  Instance a = reach_backedge(ok);
  EXPECT_TRUE(reachable(a.graph, a.source, a.sink));
  std::vector<TerminalGadget> broken{direct, cut, direct};
  Instance b = reach_backedge(broken);
  EXPECT_FALSE(reachable(b.graph, b.source, b.sink));
  std::vector<TerminalGadget> single{gadget_triangle_alpha(true, true, 2)};
  Instance c = reach_backedge(single);
  EXPECT_EQ(reachable(c.graph, c.source, c.sink),
            reachable(single[0].graph, single[0].s, single[0].t));
}

TEST(HamiltonianPath, Budget) {
  EXPECT_THROW(has_hamiltonian_path(Digraph(25)), BudgetError);
  EXPECT_TRUE(has_hamiltonian_path(streamcert::testing::path(6), 0, 5));
  EXPECT_FALSE(has_hamiltonian_path(streamcert::testing::path(6), 1));
}

TEST(Generate, FamiliesAndBits) {
  auto bits = bits_from_hex("a5");
  EXPECT_EQ(bits, (std::vector<std::uint8_t>{1, 0, 1, 0, 0, 1, 0, 1}));
  for (Family f : {Family::kPlain, Family::kTriangle, Family::kTriangleAlpha, Family::kHamPathStar,
                   Family::kReachBackedge}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
    FamilySpec spec{f, 12, 6};
    Instance a = generate(spec, {}, 3), b = generate(spec, {}, 3);
    EXPECT_EQ(a.graph, b.graph);
  }
  EXPECT_THROW(parse_family("nope"), ArgumentError);
  EXPECT_THROW(generate(FamilySpec{Family::kTriangle, 12, 4}, {}, 1), ArgumentError);
}
