#include "streamcert/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "streamcert/errors.hpp"

namespace streamcert::gen {

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Arc> arcs;
  for (Node u = 0; u < n; ++u) {
    for (Node v = 0; v < n; ++v) {
      if (u != v && coin(rng)) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph random_dag(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) arcs.push_back({order[i], order[j]});
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph random_tournament(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Arc> arcs;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) arcs.push_back(coin(rng) ? Arc{u, v} : Arc{v, u});
  }
  return Digraph(n, std::move(arcs));
}

Digraph transitive_tournament(int n) {
  std::vector<Arc> arcs;
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v < n; ++v) arcs.push_back({u, v});
  }
  return Digraph(n, std::move(arcs));
}

Digraph complete_digraph(int n) {
  std::vector<Arc> arcs;
  for (Node u = 0; u < n; ++u) {
    for (Node v = 0; v < n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  if (n >= 2) {
    for (Node v = 0; v < n; ++v) arcs.push_back({v, static_cast<Node>((v + 1) % n)});
  }
  return Digraph::from_loose_arcs(n, std::move(arcs));
}

Digraph bidirected_cycle(int n) {
  std::vector<Arc> arcs;
  for (Node v = 0; n >= 2 && v < n; ++v) {
    Node w = static_cast<Node>((v + 1) % n);
    arcs.push_back({v, w});
    arcs.push_back({w, v});
  }
  return Digraph::from_loose_arcs(n, std::move(arcs));
}

Digraph circulant(int n, std::span<const int> offsets) {
  std::vector<Arc> arcs;
  for (Node v = 0; v < n; ++v) {
    for (int d : offsets) {
      arcs.push_back({v, static_cast<Node>(((v + d) % n + n) % n)});
    }
  }
  return Digraph::from_loose_arcs(n, std::move(arcs));
}

Digraph grid(int rows, int cols) {
  std::vector<Arc> arcs;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Node v = r * cols + c;
      if (c + 1 < cols) arcs.push_back({v, v + 1});
      if (r + 1 < rows) arcs.push_back({v, v + cols});
    }
  }
  return Digraph(rows * cols, std::move(arcs));
}

Digraph random_strong(int n, double p, std::uint64_t seed) {
  Digraph base = random_digraph(n, p, seed);
  std::vector<Arc> arcs(base.arcs().begin(), base.arcs().end());
  for (Node v = 0; n >= 2 && v < n; ++v) arcs.push_back({v, static_cast<Node>((v + 1) % n)});
  return random_relabel(Digraph::from_loose_arcs(n, std::move(arcs)), seed ^ 0xabcdefULL);
}

Digraph random_arc_strong(int n, int k, double p, std::uint64_t seed) {
  if (n <= k) throw ArgumentError("need more than k nodes");
  std::vector<int> offsets(k);
  std::iota(offsets.begin(), offsets.end(), 1);
  Digraph base = circulant(n, offsets);
  Digraph noise = random_digraph(n, p, seed);
  return random_relabel(Digraph::unite(base, noise), seed ^ 0x13579bdfULL);
}

Digraph relabel(const Digraph& g, std::span<const Node> perm) {
  std::vector<Arc> arcs;
  arcs.reserve(g.num_arcs());
  for (const Arc& a : g.arcs()) arcs.push_back({perm[a.from], perm[a.to]});
  return Digraph(g.num_nodes(), std::move(arcs));
}

Digraph random_relabel(const Digraph& g, std::uint64_t seed) {
  std::vector<Node> perm(g.num_nodes());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(g, perm);
}

}  // namespace streamcert::gen
