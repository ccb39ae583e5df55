#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streamcert/digraph.hpp"

namespace streamcert::hardness {

// m x m bit matrix, row-major; at(i, j) is bit (i, j) with 0-based indices.
struct BitMatrix {
  int m = 0;
  std::vector<std::uint8_t> bits;

  static BitMatrix zeros(int m) { return {m, std::vector<std::uint8_t>(static_cast<std::size_t>(m) * m, 0)}; }
  bool at(int i, int j) const { return bits[static_cast<std::size_t>(i) * m + j] != 0; }
  void set(int i, int j, bool v) { bits[static_cast<std::size_t>(i) * m + j] = v; }
};

// Node layout for the 3m-node gadgets: a_i = i, b_j = m + j, c_i = 2m + i.
Digraph gadget_plain(const BitMatrix& x, const BitMatrix& y);
Digraph gadget_triangle(const BitMatrix& x, const BitMatrix& y);

struct TerminalGadget {
  Digraph graph;
  Node s = 0;
  Node t = 0;
};

// Nodes s = 0, u = 1, t = 2, then the path p_1..p_{2 alpha - 3}.
TerminalGadget gadget_triangle_alpha(bool x, bool y, int alpha);

// Gadget i occupies nodes i*d .. i*d + d - 1; every arc between different
// gadgets points from the lower-indexed gadget to the higher one.
Digraph embed_tournament(std::span<const Digraph> gadgets, int d);

struct Instance {
  Digraph graph;
  Node source = 0;
  Node sink = 0;
};

// Embedded tournament plus s* -> every node and every node -> t*, with
// s* = N and t* = N + 1.
Instance hampath_star(std::span<const Digraph> gadgets);
// Embedded tournament with s_i, t_i placed first and last in their gadget,
// and each forward arc (i, first) -> (i+1, last) reversed.
Instance reach_backedge(std::span<const TerminalGadget> gadgets);

bool has_directed_triangle(const Digraph& g);
// Bitmask DP; at most 24 nodes.
bool has_hamiltonian_path(const Digraph& g, std::optional<Node> start = std::nullopt,
                          std::optional<Node> end = std::nullopt);
bool disjoint(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y);

enum class Family { kPlain, kTriangle, kTriangleAlpha, kHamPathStar, kReachBackedge };
Family parse_family(const std::string& name);
std::string family_name(Family f);

struct FamilySpec {
  Family family = Family::kTriangle;
  int n = 12;  // total nodes in the embedded tournament
  int d = 6;   // nodes per gadget
};

// Draws gadget bits from `bits` (consumed in order, cycling) or from the
// seed when `bits` is empty.
Instance generate(const FamilySpec& spec, std::span<const std::uint8_t> bits, std::uint64_t seed);
std::vector<std::uint8_t> bits_from_hex(const std::string& hex);

}  // namespace streamcert::hardness
