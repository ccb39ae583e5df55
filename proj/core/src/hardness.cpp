#include "streamcert/hardness.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>

#include "streamcert/errors.hpp"

namespace streamcert::hardness {

namespace {

void check_pair(const BitMatrix& x, const BitMatrix& y) {
  if (x.m != y.m || x.m < 1) throw ArgumentError("gadget bit matrices must be m x m with m >= 1");
  if (x.bits.size() != static_cast<std::size_t>(x.m) * x.m ||
      y.bits.size() != static_cast<std::size_t>(y.m) * y.m) {
    throw ArgumentError("gadget bit matrix has the wrong number of entries");
  }
}

}  // namespace

Digraph gadget_plain(const BitMatrix& x, const BitMatrix& y) {
  check_pair(x, y);
  const int m = x.m;
  std::vector<Arc> arcs;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (x.at(i, j)) arcs.push_back({i, m + j});
      if (y.at(i, j)) arcs.push_back({m + j, 2 * m + i});
    }
  }
  return Digraph(3 * m, std::move(arcs));
}

Digraph gadget_triangle(const BitMatrix& x, const BitMatrix& y) {
  check_pair(x, y);
  const int m = x.m;
  std::vector<Arc> arcs;
  for (int i = 0; i < m; ++i) {
    const Node a = i, c = 2 * m + i;
    for (int j = 0; j < m; ++j) {
      const Node b = m + j;
      arcs.push_back(x.at(i, j) ? Arc{a, b} : Arc{b, a});
      arcs.push_back(y.at(i, j) ? Arc{b, c} : Arc{c, b});
    }
    arcs.push_back({c, a});
  }
  return Digraph(3 * m, std::move(arcs));
}

TerminalGadget gadget_triangle_alpha(bool x, bool y, int alpha) {
  if (alpha < 1) throw ArgumentError("alpha must be positive");
  constexpr Node s = 0, u = 1, t = 2;
  const int path = std::max(0, 2 * alpha - 3);
  std::vector<Arc> arcs;
  if (!x) {
    arcs.push_back({s, u});
    arcs.push_back({u, t});
  } else {
    arcs.push_back({u, s});
    arcs.push_back({t, u});
  }
  arcs.push_back(y ? Arc{t, s} : Arc{s, t});
  if (path > 0) {
    arcs.push_back({t, 3});
    for (int i = 0; i + 1 < path; ++i) arcs.push_back({3 + i, 4 + i});
    arcs.push_back({3 + path - 1, u});
  }
  return {Digraph(3 + path, std::move(arcs)), s, t};
}

Digraph embed_tournament(std::span<const Digraph> gadgets, int d) {
  if (d < 1) throw ArgumentError("gadget size must be positive");
  const int count = static_cast<int>(gadgets.size());
  std::vector<Arc> arcs;
  for (int i = 0; i < count; ++i) {
    if (gadgets[i].num_nodes() != d) throw ArgumentError("every gadget must have d nodes");
    for (const Arc& a : gadgets[i].arcs()) arcs.push_back({i * d + a.from, i * d + a.to});
    for (int j = i + 1; j < count; ++j) {
      for (int p = 0; p < d; ++p) {
        for (int q = 0; q < d; ++q) arcs.push_back({i * d + p, j * d + q});
      }
    }
  }
  return Digraph(count * d, std::move(arcs));
}

Instance hampath_star(std::span<const Digraph> gadgets) {
  const int d = gadgets.empty() ? 1 : gadgets.front().num_nodes();
  Digraph base = embed_tournament(gadgets, d);
  const int n = base.num_nodes();
  std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
  for (Node v = 0; v < n; ++v) {
    arcs.push_back({n, v});
    arcs.push_back({v, n + 1});
  }
  return {Digraph(n + 2, std::move(arcs)), n, n + 1};
}

Instance reach_backedge(std::span<const TerminalGadget> gadgets) {
  if (gadgets.empty()) throw ArgumentError("need at least one gadget");
  const int d = gadgets.front().graph.num_nodes();
  std::vector<Digraph> placed;
  for (const TerminalGadget& g : gadgets) {
    if (g.graph.num_nodes() != d) throw ArgumentError("every gadget must have d nodes");
    if (g.s == g.t) throw ArgumentError("gadget terminals must differ");
    check_node(g.graph, g.s);
    check_node(g.graph, g.t);
    std::vector<Node> perm(d);
    perm[g.s] = 0;
    perm[g.t] = d - 1;
    Node next = 1;
    for (Node v = 0; v < d; ++v) {
      if (v != g.s && v != g.t) perm[v] = next++;
    }
    std::vector<Arc> arcs;
    for (const Arc& a : g.graph.arcs()) arcs.push_back({perm[a.from], perm[a.to]});
    placed.emplace_back(d, std::move(arcs));
  }
  Digraph base = embed_tournament(placed, d);
  const int count = static_cast<int>(gadgets.size());
  std::vector<Arc> flip;
  std::vector<Arc> added;
  for (int i = 0; i + 1 < count; ++i) {
    flip.push_back({i * d, (i + 1) * d + d - 1});
    added.push_back({(i + 1) * d + d - 1, i * d});
  }
  Digraph trimmed = base.without(flip);
  std::vector<Arc> arcs(trimmed.arcs().begin(), trimmed.arcs().end());
  arcs.insert(arcs.end(), added.begin(), added.end());
  return {Digraph(base.num_nodes(), std::move(arcs)), (count - 1) * d, d - 1};
}

bool has_directed_triangle(const Digraph& g) {
  const int n = g.num_nodes();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> in_bits(static_cast<std::size_t>(n) * words, 0);
  std::vector<std::uint64_t> out_bits(static_cast<std::size_t>(n) * words, 0);
  for (const Arc& a : g.arcs()) {
    out_bits[a.from * words + (a.to >> 6)] |= std::uint64_t{1} << (a.to & 63);
    in_bits[a.to * words + (a.from >> 6)] |= std::uint64_t{1} << (a.from & 63);
  }
  for (const Arc& a : g.arcs()) {
    // u -> v -> w -> u
    for (std::size_t i = 0; i < words; ++i) {
      if (out_bits[a.to * words + i] & in_bits[a.from * words + i]) return true;
    }
  }
  return false;
}

bool has_hamiltonian_path(const Digraph& g, std::optional<Node> start, std::optional<Node> end) {
  const int n = g.num_nodes();
  if (n > 24) throw BudgetError("Hamiltonian path search is limited to 24 nodes");
  if (n == 0) return true;
  if (start) check_node(g, *start);
  if (end) check_node(g, *end);
  std::vector<std::uint32_t> out(n, 0);
  for (const Arc& a : g.arcs()) out[a.from] |= 1U << a.to;
  const std::uint32_t full = n == 32 ? ~0U : (1U << n) - 1;
  std::vector<std::uint32_t> ends(static_cast<std::size_t>(full) + 1, 0);
  for (Node v = 0; v < n; ++v) {
    if (!start || *start == v) ends[1U << v] = 1U << v;
  }
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    for (std::uint32_t e = ends[mask]; e; e &= e - 1) {
      const int v = std::countr_zero(e);
      for (std::uint32_t w = out[v] & ~mask; w; w &= w - 1) {
        const int x = std::countr_zero(w);
        ends[mask | (1U << x)] |= 1U << x;
      }
    }
  }
  const std::uint32_t last = ends[full];
  return end ? (last >> *end & 1U) != 0 : last != 0;
}

bool disjoint(std::span<const std::uint8_t> x, std::span<const std::uint8_t> y) {
  if (x.size() != y.size()) throw ArgumentError("inputs differ in length");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] && y[i]) return false;
  }
  return true;
}

Family parse_family(const std::string& name) {
  if (name == "plain") return Family::kPlain;
  if (name == "triangle") return Family::kTriangle;
  if (name == "triangle_alpha") return Family::kTriangleAlpha;
  if (name == "hampath_star") return Family::kHamPathStar;
  if (name == "reach_backedge") return Family::kReachBackedge;
  throw ArgumentError("unknown gadget family '" + name + "'");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::kPlain: return "plain";
    case Family::kTriangle: return "triangle";
    case Family::kTriangleAlpha: return "triangle_alpha";
    case Family::kHamPathStar: return "hampath_star";
    case Family::kReachBackedge: return "reach_backedge";
  }
  return "unknown";
}

std::vector<std::uint8_t> bits_from_hex(const std::string& hex) {
  std::vector<std::uint8_t> bits;
  for (char ch : hex) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (!std::isxdigit(static_cast<unsigned char>(ch))) {
      throw ArgumentError(std::string("not a hex digit: '") + ch + "'");
    }
    int v = std::isdigit(static_cast<unsigned char>(ch)) ? ch - '0'
                                                        : std::tolower(ch) - 'a' + 10;
    for (int b = 3; b >= 0; --b) bits.push_back(static_cast<std::uint8_t>(v >> b & 1));
  }
  return bits;
}

Instance generate(const FamilySpec& spec, std::span<const std::uint8_t> bits, std::uint64_t seed) {
  if (spec.d < 1 || spec.n < spec.d || spec.n % spec.d != 0) {
    throw ArgumentError("n must be a positive multiple of d");
  }
  const int count = spec.n / spec.d;
  std::mt19937_64 rng(seed);
  std::size_t cursor = 0;
  auto next_bit = [&]() -> bool {
    if (!bits.empty()) return bits[cursor++ % bits.size()] != 0;
    return (rng() & 1U) != 0;
  };
  auto matrix = [&](int m) {
    BitMatrix b = BitMatrix::zeros(m);
    for (auto& bit : b.bits) bit = next_bit();
    return b;
  };
  switch (spec.family) {
    case Family::kPlain:
    case Family::kTriangle: {
      if (spec.d % 3 != 0) throw ArgumentError("gadget size must be a multiple of 3");
      std::vector<Digraph> gadgets;
      for (int i = 0; i < count; ++i) {
        BitMatrix x = matrix(spec.d / 3), y = matrix(spec.d / 3);
        gadgets.push_back(spec.family == Family::kPlain ? gadget_plain(x, y) : gadget_triangle(x, y));
      }
      return {embed_tournament(gadgets, spec.d), 0, 0};
    }
    case Family::kTriangleAlpha:
    case Family::kHamPathStar:
    case Family::kReachBackedge: {
      if (spec.d != 3 && (spec.d % 2 != 0 || spec.d < 4)) {
        throw ArgumentError("alpha gadgets have 3 or an even number >= 4 of nodes");
      }
      const int alpha = spec.d == 3 ? 1 : spec.d / 2;
      std::vector<TerminalGadget> gadgets;
      std::vector<Digraph> graphs;
      for (int i = 0; i < count; ++i) {
        bool x = next_bit(), y = next_bit();
        gadgets.push_back(gadget_triangle_alpha(x, y, alpha));
        graphs.push_back(gadgets.back().graph);
      }
      if (spec.family == Family::kHamPathStar) return hampath_star(graphs);
      if (spec.family == Family::kReachBackedge) return reach_backedge(gadgets);
      return {embed_tournament(graphs, spec.d), gadgets.front().s, gadgets.front().t};
    }
  }
  throw ArgumentError("unknown family");
}

}  // namespace streamcert::hardness
