#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "streamcert/types.hpp"

namespace streamcert {

// Simple digraph on nodes 0..n-1. Arcs are kept sorted; no self-loops, no
// parallel arcs. Immutable once built.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  Digraph(int n, std::vector<Arc> arcs);

  // Sorts, drops self-loops and duplicates instead of rejecting them.
  static Digraph from_loose_arcs(int n, std::vector<Arc> arcs);

  int num_nodes() const noexcept { return n_; }
  std::size_t num_arcs() const noexcept { return arcs_.size(); }
  std::span<const Arc> arcs() const noexcept { return arcs_; }
  std::span<const Node> out(Node v) const;
  std::span<const Node> in(Node v) const;
  int out_degree(Node v) const { return static_cast<int>(out(v).size()); }
  int in_degree(Node v) const { return static_cast<int>(in(v).size()); }
  bool has_arc(Node u, Node v) const;
  bool contains(const Digraph& sub) const;

  Digraph reversed() const;
  Digraph without(std::span<const Arc> removed) const;
  static Digraph unite(const Digraph& a, const Digraph& b);

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  void build_adjacency();

  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::int32_t> out_offset_;
  std::vector<Node> out_;
  std::vector<std::int32_t> in_offset_;
  std::vector<Node> in_;
};

// Reflexive reachability as one bitset row per node.
class ReachMatrix {
 public:
  explicit ReachMatrix(const Digraph& g);

  bool operator()(Node u, Node v) const {
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Node u) const {
    return {bits_.data() + static_cast<std::size_t>(u) * words_, words_};
  }
  int num_nodes() const noexcept { return n_; }

 private:
  int n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct SccDecomposition {
  // Component ids follow Tarjan completion order, i.e. reverse topological.
  std::vector<int> component;
  std::vector<std::vector<Node>> members;
  int count() const noexcept { return static_cast<int>(members.size()); }
};

struct Branching {
  Node root = 0;
  BranchingKind kind = BranchingKind::kOut;
  std::vector<Arc> arcs;
};

struct ChainCover {
  std::vector<std::vector<Node>> chains;
  std::vector<int> chain_of;
  std::vector<int> position;
  int size() const noexcept { return static_cast<int>(chains.size()); }
};

bool reachable(const Digraph& g, Node s, Node t);
std::vector<char> reach_from(const Digraph& g, Node s, bool backwards = false);
Digraph transitive_closure(const Digraph& g);
SccDecomposition scc_tarjan(const Digraph& g);
bool is_acyclic(const Digraph& g);
bool strongly_connected(const Digraph& g);

// Exact; throws BudgetError above 64 nodes.
int independence_number_exact(const Digraph& g);

// Minimum cover of the reachability preorder by vertex-disjoint chains.
ChainCover chain_cover_minimum(const Digraph& g);

// BFS branching over all nodes, smaller ids first. Throws CoverageError.
Branching grow_branching(const Digraph& g, Node root, BranchingKind kind);
// Same, restricted to the nodes flagged in `allowed`.
Branching grow_branching(const Digraph& g, Node root, BranchingKind kind,
                         std::span<const char> allowed);
bool is_branching(const Digraph& host, const Branching& b, std::span<const char> span_of);

int degeneracy(const Digraph& g);

void check_node(const Digraph& g, Node v);

}  // namespace streamcert
