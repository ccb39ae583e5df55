#include "streamcert/applications.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>

#include "streamcert/cert_k.hpp"
#include "streamcert/cert_one.hpp"
#include "streamcert/errors.hpp"

namespace streamcert::apps {

SccToposort scc_and_toposort(const Digraph& g) {
  SccDecomposition scc = scc_tarjan(g);
  SccToposort out;
  out.component = scc.component;
  out.rank.resize(g.num_nodes());
  // Tarjan ids are reverse topological.
  for (Node v = 0; v < g.num_nodes(); ++v) out.rank[v] = scc.count() - 1 - scc.component[v];
  return out;
}

SccToposort scc_and_toposort(const Certificate& cert) { return scc_and_toposort(cert.graph); }

namespace {

Node literal_node(int literal, int vars) {
  int v = std::abs(literal);
  if (literal == 0 || v > vars) throw ArgumentError("literal " + std::to_string(literal) + " out of range");
  return 2 * (v - 1) + (literal < 0 ? 1 : 0);
}

}  // namespace

Digraph implication_graph(const std::vector<Clause>& clauses, int vars) {
  std::vector<Arc> arcs;
  for (const Clause& c : clauses) {
    // (a or b): not a -> b, not b -> a.
    Node a = literal_node(c.a, vars), b = literal_node(c.b, vars);
    arcs.push_back({a ^ 1, b});
    arcs.push_back({b ^ 1, a});
  }
  return Digraph::from_loose_arcs(2 * vars, std::move(arcs));
}

std::optional<std::vector<bool>> two_sat_from_graph(const Digraph& implication, int vars) {
  SccDecomposition scc = scc_tarjan(implication);
  std::vector<bool> value(vars);
  for (int v = 0; v < vars; ++v) {
    int pos = scc.component[2 * v], neg = scc.component[2 * v + 1];
    if (pos == neg) return std::nullopt;
    // The literal later in topological order (earlier Tarjan id) is true.
    value[v] = pos < neg;
  }
  return value;
}

std::optional<std::vector<bool>> two_sat(const std::vector<Clause>& clauses, int vars) {
  Digraph g = implication_graph(clauses, vars);
  OneCertResult cert = one_cert_stream(insertion_stream(g), RecursionPlan{2, 0, 1});
  return two_sat_from_graph(cert.cert.graph, vars);
}

bool satisfies(const std::vector<Clause>& clauses, const std::vector<bool>& assignment) {
  auto holds = [&](int lit) {
    bool v = assignment[static_cast<std::size_t>(std::abs(lit) - 1)];
    return lit > 0 ? v : !v;
  };
  return std::all_of(clauses.begin(), clauses.end(),
                     [&](const Clause& c) { return holds(c.a) || holds(c.b); });
}

ChainCover min_chain_cover_dag(const Certificate& cert) {
  if (!is_acyclic(cert.graph)) throw DomainError("minimum chain cover needs an acyclic input");
  return chain_cover_minimum(cert.graph);
}

std::optional<Digraph> msss_2apx(const Certificate& cert) {
  const Digraph& g = cert.graph;
  if (g.num_nodes() == 0) return Digraph(0);
  if (!strongly_connected(g)) return std::nullopt;
  Branching out = grow_branching(g, 0, BranchingKind::kOut);
  Branching in = grow_branching(g, 0, BranchingKind::kIn);
  std::vector<Arc> arcs = out.arcs;
  arcs.insert(arcs.end(), in.arcs.begin(), in.arcs.end());
  return Digraph::from_loose_arcs(g.num_nodes(), std::move(arcs));
}

std::vector<Arc> strong_bridges_of(const Digraph& g) {
  const int base = scc_tarjan(g).count();
  std::vector<Arc> bridges;
  for (const Arc& a : g.arcs()) {
    Arc one[] = {a};
    if (scc_tarjan(g.without(one)).count() > base) bridges.push_back(a);
  }
  return bridges;
}

std::vector<Arc> strong_bridges(const Certificate& cert) {
  if (cert.k < 2) throw ContractError("strong bridges need a certificate with k >= 2");
  return strong_bridges_of(cert.graph);
}

std::vector<Branching> arc_disjoint_out_branchings(const Certificate& cert, Node root, int k) {
  if (cert.k < k) throw ContractError("certificate connectivity is below the requested count");
  return extract_disjoint_branchings(cert.graph, root, k, BranchingKind::kOut);
}

namespace {

using Mask = std::uint64_t;

// Internal nodes on each root path, or nullopt on a cycle or dangling parent.
std::optional<std::vector<Mask>> path_interiors(const std::vector<Node>& parent, Node root) {
  const int n = static_cast<int>(parent.size());
  std::vector<Mask> interior(n, 0);
  std::vector<int> state(n, 0);  // 0 new, 1 active, 2 done
  state[root] = 2;
  for (Node v = 0; v < n; ++v) {
    std::vector<Node> trail;
    Node x = v;
    while (state[x] == 0) {
      state[x] = 1;
      trail.push_back(x);
      x = parent[x];
      if (x < 0) return std::nullopt;
    }
    if (state[x] == 1) return std::nullopt;
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
      Node p = parent[*it];
      interior[*it] = p == root ? 0 : (interior[p] | (Mask{1} << p));
      state[*it] = 2;
    }
  }
  return interior;
}

Branching as_branching(const std::vector<Node>& parent, Node root) {
  Branching b{root, BranchingKind::kOut, {}};
  for (Node v = 0; v < static_cast<Node>(parent.size()); ++v) {
    if (v != root) b.arcs.push_back({parent[v], v});
  }
  std::sort(b.arcs.begin(), b.arcs.end());
  return b;
}

}  // namespace

bool independent_pair(const Digraph& g, const Branching& a, const Branching& b) {
  const int n = g.num_nodes();
  std::vector<char> all(n, 1);
  if (!is_branching(g, a, all) || !is_branching(g, b, all) || a.root != b.root) return false;
  std::vector<Node> pa(n, -1), pb(n, -1);
  for (const Arc& x : a.arcs) pa[x.to] = x.from;
  for (const Arc& x : b.arcs) pb[x.to] = x.from;
  auto ia = path_interiors(pa, a.root), ib = path_interiors(pb, b.root);
  if (!ia || !ib) return false;
  for (Node v = 0; v < n; ++v) {
    if (((*ia)[v] & (*ib)[v]) != 0) return false;
  }
  return true;
}

std::optional<std::pair<Branching, Branching>> independent_branchings_2(const Digraph& g,
                                                                        Node root) {
  check_node(g, root);
  const int n = g.num_nodes();
  if (n > 64) throw BudgetError("independent branching search is limited to 64 nodes");
  std::vector<Node> order;
  for (Node v = 0; v < n; ++v) {
    if (v != root) order.push_back(v);
  }
  std::vector<Node> first(n, -1), second(n, -1);
  first[root] = second[root] = root;
  std::vector<Mask> first_interior;

  // Parent choices for one tree; `accept` vets a complete assignment.
  std::function<bool(std::vector<Node>&, std::size_t, const std::function<bool()>&,
                     const std::function<bool(Node, Node)>&)>
      assign = [&](std::vector<Node>& parent, std::size_t i, const std::function<bool()>& accept,
                   const std::function<bool(Node, Node)>& allowed) -> bool {
    if (i == order.size()) return accept();
    Node v = order[i];
    for (Node p : g.in(v)) {
      if (!allowed(v, p)) continue;
      // Reject choices that close a cycle among assigned nodes.
      Node x = p;
      int steps = 0;
      while (x != root && x != v && parent[x] != -1 && steps++ < n) x = parent[x];
      if (x == v) continue;
      parent[v] = p;
      if (assign(parent, i + 1, accept, allowed)) return true;
      parent[v] = -1;
    }
    return false;
  };

  std::function<bool()> second_ok = [&]() {
    auto interior = path_interiors(second, root);
    if (!interior) return false;
    for (Node v = 0; v < n; ++v) {
      if (((*interior)[v] & first_interior[v]) != 0) return false;
    }
    return true;
  };
  auto second_allowed = [&](Node v, Node p) {
    return p == root || (p != first[v] && !(first_interior[v] >> p & 1));
  };
  std::function<bool()> first_ok = [&]() {
    auto interior = path_interiors(first, root);
    if (!interior) return false;
    first_interior = *interior;
    std::fill(second.begin(), second.end(), -1);
    second[root] = root;
    return assign(second, 0, second_ok, second_allowed);
  };
  auto any = [](Node, Node) { return true; };
  for (Node& p : first) p = -1;
  first[root] = root;
  if (!assign(first, 0, first_ok, any)) return std::nullopt;
  first[root] = second[root] = -1;
  return std::make_pair(as_branching(first, root), as_branching(second, root));
}

std::optional<std::pair<Branching, Branching>> independent_branchings_2(const Certificate& cert,
                                                                        Node root) {
  if (cert.k < 2) throw ContractError("independent branchings need a certificate with k >= 2");
  return independent_branchings_2(cert.graph, root);
}

std::vector<Node> distance_d_dominating(const Certificate& cert, int d) {
  const Digraph& g = cert.graph;
  const int n = g.num_nodes();
  if (d < 1) throw ArgumentError("distance must be positive");
  if (n == 0) return {};
  if (!strongly_connected(g)) throw DomainError("dominating set needs a strongly connected input");
  Branching tree = grow_branching(g, 0, BranchingKind::kOut);
  std::vector<Node> parent(n, -1);
  std::vector<std::vector<Node>> children(n);
  for (const Arc& a : tree.arcs) {
    parent[a.to] = a.from;
    children[a.from].push_back(a.to);
  }
  std::vector<int> depth(n, 0);
  {
    std::deque<Node> q{0};
    while (!q.empty()) {
      Node v = q.front();
      q.pop_front();
      for (Node c : children[v]) {
        depth[c] = depth[v] + 1;
        q.push_back(c);
      }
    }
  }
  std::vector<char> alive(n, 1);
  std::vector<Node> chosen;
  int remaining = n;
  while (remaining > 0) {
    std::vector<Node> leaves;
    for (Node v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      bool leaf = std::none_of(children[v].begin(), children[v].end(),
                               [&](Node c) { return alive[c]; });
      if (leaf) leaves.push_back(v);
    }
    std::sort(leaves.begin(), leaves.end(), [&](Node a, Node b) {
      return depth[a] != depth[b] ? depth[a] > depth[b] : a < b;
    });
    std::vector<char> marked(n, 0);
    for (Node leaf : leaves) {
      Node x = leaf;
      for (int step = 0; step < d && parent[x] != -1 && alive[parent[x]]; ++step) x = parent[x];
      marked[x] = 1;
    }
    // Keep marked nodes with no marked proper descendant.
    std::vector<char> has_marked_below(n, 0);
    for (Node v = 0; v < n; ++v) {
      if (!marked[v]) continue;
      for (Node x = parent[v]; x != -1 && alive[x]; x = parent[x]) has_marked_below[x] = 1;
    }
    std::vector<Node> picked;
    for (Node v = 0; v < n; ++v) {
      if (marked[v] && !has_marked_below[v]) picked.push_back(v);
    }
    for (Node w : picked) {
      chosen.push_back(w);
      std::vector<Node> stack{w};
      while (!stack.empty()) {
        Node x = stack.back();
        stack.pop_back();
        if (!alive[x]) continue;
        alive[x] = 0;
        --remaining;
        for (Node c : children[x]) stack.push_back(c);
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool dominates_within(const Digraph& g, const std::vector<Node>& set, int d) {
  const int n = g.num_nodes();
  std::vector<int> dist(n, -1);
  std::deque<Node> q;
  for (Node s : set) {
    check_node(g, s);
    if (dist[s] == -1) {
      dist[s] = 0;
      q.push_back(s);
    }
  }
  while (!q.empty()) {
    Node v = q.front();
    q.pop_front();
    if (dist[v] == d) continue;
    for (Node w : g.out(v)) {
      if (dist[w] == -1) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
    }
  }
  return std::all_of(dist.begin(), dist.end(), [](int x) { return x >= 0; });
}

Digraph transitive_closure_from_cert(const Certificate& cert) {
  return transitive_closure(cert.graph);
}

}  // namespace streamcert::apps
