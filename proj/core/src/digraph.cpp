#include "streamcert/digraph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <string>

#include "streamcert/errors.hpp"

namespace streamcert {

Digraph::Digraph(int n) : n_(n) {
  if (n < 0) throw ArgumentError("negative node count");
  build_adjacency();
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw ArgumentError("negative node count");
  for (const Arc& a : arcs_) {
    if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) {
      throw ArgumentError("arc (" + std::to_string(a.from) + "," + std::to_string(a.to) +
                          ") out of range");
    }
    if (a.from == a.to) throw ArgumentError("self-loop at " + std::to_string(a.from));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw ArgumentError("parallel arcs");
  }
  build_adjacency();
}

Digraph Digraph::from_loose_arcs(int n, std::vector<Arc> arcs) {
  std::erase_if(arcs, [](const Arc& a) { return a.from == a.to; });
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return Digraph(n, std::move(arcs));
}

void Digraph::build_adjacency() {
  out_offset_.assign(n_ + 1, 0);
  in_offset_.assign(n_ + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offset_[a.from + 1];
    ++in_offset_[a.to + 1];
  }
  for (int v = 0; v < n_; ++v) {
    out_offset_[v + 1] += out_offset_[v];
    in_offset_[v + 1] += in_offset_[v];
  }
  out_.resize(arcs_.size());
  in_.resize(arcs_.size());
  std::vector<std::int32_t> in_fill(in_offset_.begin(), in_offset_.end() - 1);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    // arcs_ is sorted, so both lists come out sorted.
    out_[i] = arcs_[i].to;
    in_[in_fill[arcs_[i].to]++] = arcs_[i].from;
  }
}

std::span<const Node> Digraph::out(Node v) const {
  return {out_.data() + out_offset_[v], out_.data() + out_offset_[v + 1]};
}

std::span<const Node> Digraph::in(Node v) const {
  return {in_.data() + in_offset_[v], in_.data() + in_offset_[v + 1]};
}

bool Digraph::has_arc(Node u, Node v) const {
  if (u < 0 || u >= n_) return false;
  auto nbrs = out(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

bool Digraph::contains(const Digraph& sub) const {
  if (sub.n_ != n_) return false;
  return std::includes(arcs_.begin(), arcs_.end(), sub.arcs_.begin(), sub.arcs_.end());
}

Digraph Digraph::reversed() const {
  std::vector<Arc> rev;
  rev.reserve(arcs_.size());
  for (const Arc& a : arcs_) rev.push_back({a.to, a.from});
  return Digraph(n_, std::move(rev));
}

Digraph Digraph::without(std::span<const Arc> removed) const {
  std::vector<Arc> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  std::vector<Arc> kept;
  kept.reserve(arcs_.size());
  std::set_difference(arcs_.begin(), arcs_.end(), drop.begin(), drop.end(),
                      std::back_inserter(kept));
  return Digraph(n_, std::move(kept));
}

Digraph Digraph::unite(const Digraph& a, const Digraph& b) {
  if (a.n_ != b.n_) throw ArgumentError("union of digraphs on different node sets");
  std::vector<Arc> all;
  std::set_union(a.arcs_.begin(), a.arcs_.end(), b.arcs_.begin(), b.arcs_.end(),
                 std::back_inserter(all));
  return Digraph(a.n_, std::move(all));
}

void check_node(const Digraph& g, Node v) {
  if (v < 0 || v >= g.num_nodes()) {
    throw ArgumentError("node " + std::to_string(v) + " out of range");
  }
}

SccDecomposition scc_tarjan(const Digraph& g) {
  const int n = g.num_nodes();
  SccDecomposition out;
  out.component.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<Node> stack;
  std::vector<char> on_stack(n, 0);
  std::vector<std::pair<Node, std::size_t>> call;
  int counter = 0;
  for (Node start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    call.push_back({start, 0});
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      auto nbrs = g.out(v);
      if (next < nbrs.size()) {
        Node w = nbrs[next++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Node done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] == index[done]) {
        std::vector<Node> comp;
        Node w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          out.component[w] = out.count();
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        out.members.push_back(std::move(comp));
      }
    }
  }
  return out;
}

bool is_acyclic(const Digraph& g) { return scc_tarjan(g).count() == g.num_nodes(); }

bool strongly_connected(const Digraph& g) {
  return g.num_nodes() <= 1 || scc_tarjan(g).count() == 1;
}

std::vector<char> reach_from(const Digraph& g, Node s, bool backwards) {
  check_node(g, s);
  std::vector<char> seen(g.num_nodes(), 0);
  std::vector<Node> todo{s};
  seen[s] = 1;
  while (!todo.empty()) {
    Node v = todo.back();
    todo.pop_back();
    for (Node w : backwards ? g.in(v) : g.out(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

bool reachable(const Digraph& g, Node s, Node t) {
  check_node(g, t);
  return reach_from(g, s)[t] != 0;
}

ReachMatrix::ReachMatrix(const Digraph& g)
    : n_(g.num_nodes()), words_((g.num_nodes() + 63) / 64) {
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
  SccDecomposition scc = scc_tarjan(g);
  // Components arrive sinks first, so successors are finished before use.
  std::vector<std::uint64_t> comp_bits(static_cast<std::size_t>(scc.count()) * words_, 0);
  for (int c = 0; c < scc.count(); ++c) {
    std::uint64_t* row = comp_bits.data() + static_cast<std::size_t>(c) * words_;
    for (Node v : scc.members[c]) {
      row[v >> 6] |= std::uint64_t{1} << (v & 63);
      for (Node w : g.out(v)) {
        int d = scc.component[w];
        if (d == c) continue;
        const std::uint64_t* other = comp_bits.data() + static_cast<std::size_t>(d) * words_;
        for (std::size_t i = 0; i < words_; ++i) row[i] |= other[i];
      }
    }
  }
  for (Node v = 0; v < n_; ++v) {
    std::copy_n(comp_bits.data() + static_cast<std::size_t>(scc.component[v]) * words_, words_,
                bits_.data() + static_cast<std::size_t>(v) * words_);
  }
}

Digraph transitive_closure(const Digraph& g) {
  ReachMatrix reach(g);
  std::vector<Arc> arcs;
  for (Node u = 0; u < g.num_nodes(); ++u) {
    for (Node v = 0; v < g.num_nodes(); ++v) {
      if (u != v && reach(u, v)) arcs.push_back({u, v});
    }
  }
  return Digraph(g.num_nodes(), std::move(arcs));
}

namespace {

using Mask = std::uint64_t;

class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const Digraph& g) : n_(g.num_nodes()), adj_(n_, 0) {
    for (const Arc& a : g.arcs()) {
      adj_[a.from] |= Mask{1} << a.to;
      adj_[a.to] |= Mask{1} << a.from;
    }
  }

  int solve() {
    Mask all = n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1;
    search(all, 0);
    return best_;
  }

 private:
  int degree(int v, Mask mask) const { return std::popcount(adj_[v] & mask); }

  // Greedy clique cover: an upper bound on the independence number.
  int clique_cover(Mask mask) const {
    int cliques = 0;
    while (mask) {
      int v = std::countr_zero(mask);
      Mask clique = Mask{1} << v;
      Mask cand = mask & adj_[v];
      while (cand) {
        int w = std::countr_zero(cand);
        clique |= Mask{1} << w;
        cand &= adj_[w];
      }
      mask &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  // Paths and cycles only.
  int low_degree(Mask mask) const {
    int total = 0;
    while (mask) {
      int v = std::countr_zero(mask);
      Mask comp = Mask{1} << v, frontier = comp;
      while (frontier) {
        Mask next = 0;
        for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
        frontier = next & mask & ~comp;
        comp |= frontier;
      }
      int size = std::popcount(comp);
      bool cycle = true;
      for (Mask c = comp; c; c &= c - 1) {
        if (degree(std::countr_zero(c), mask) != 2) cycle = false;
      }
      total += cycle ? size / 2 : (size + 1) / 2;
      mask &= ~comp;
    }
    return total;
  }

  void search(Mask mask, int taken) {
    bool changed = true;
    while (changed && mask) {
      changed = false;
      for (Mask m = mask; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (!(mask >> v & 1)) continue;
        if (degree(v, mask) <= 1) {
          mask &= ~(adj_[v] | (Mask{1} << v));
          ++taken;
          changed = true;
        }
      }
    }
    if (!mask) {
      best_ = std::max(best_, taken);
      return;
    }
    if (taken + clique_cover(mask) <= best_) return;
    int pick = -1, pick_deg = -1;
    for (Mask m = mask; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = degree(v, mask);
      if (d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    }
    if (pick_deg <= 2) {
      best_ = std::max(best_, taken + low_degree(mask));
      return;
    }
    search(mask & ~(adj_[pick] | (Mask{1} << pick)), taken + 1);
    search(mask & ~(Mask{1} << pick), taken);
  }

  int n_;
  std::vector<Mask> adj_;
  int best_ = 0;
};

// Kuhn's augmenting paths on the comparability bipartite graph.
bool augment(int a, const std::vector<std::vector<int>>& succ, std::vector<int>& match_right,
             std::vector<char>& visited) {
  for (int b : succ[a]) {
    if (visited[b]) continue;
    visited[b] = 1;
    if (match_right[b] == -1 || augment(match_right[b], succ, match_right, visited)) {
      match_right[b] = a;
      return true;
    }
  }
  return false;
}

}  // namespace

int independence_number_exact(const Digraph& g) {
  if (g.num_nodes() > 64) {
    throw BudgetError("exact independence number is limited to 64 nodes");
  }
  if (g.num_nodes() == 0) return 0;
  return IndependentSetSearch(g).solve();
}

ChainCover chain_cover_minimum(const Digraph& g) {
  const int n = g.num_nodes();
  SccDecomposition scc = scc_tarjan(g);
  const int c = scc.count();
  // Condensation reachability; component ids are reverse topological.
  std::vector<std::vector<int>> succ(c);
  {
    std::size_t words = (c + 63) / 64;
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(c) * words, 0);
    for (int x = 0; x < c; ++x) {
      std::uint64_t* row = bits.data() + static_cast<std::size_t>(x) * words;
      for (Node v : scc.members[x]) {
        for (Node w : g.out(v)) {
          int y = scc.component[w];
          if (y == x) continue;
          row[y >> 6] |= std::uint64_t{1} << (y & 63);
          const std::uint64_t* other = bits.data() + static_cast<std::size_t>(y) * words;
          for (std::size_t i = 0; i < words; ++i) row[i] |= other[i];
        }
      }
    }
    for (int x = 0; x < c; ++x) {
      const std::uint64_t* row = bits.data() + static_cast<std::size_t>(x) * words;
      for (int y = 0; y < c; ++y) {
        if (row[y >> 6] >> (y & 63) & 1) succ[x].push_back(y);
      }
    }
  }
  std::vector<int> match_right(c, -1);
  std::vector<char> visited(c);
  for (int x = c - 1; x >= 0; --x) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(x, succ, match_right, visited);
  }
  std::vector<int> next(c, -1);
  std::vector<char> has_pred(c, 0);
  for (int y = 0; y < c; ++y) {
    if (match_right[y] != -1) {
      next[match_right[y]] = y;
      has_pred[y] = 1;
    }
  }
  std::vector<int> heads;
  for (int x = 0; x < c; ++x) {
    if (!has_pred[x]) heads.push_back(x);
  }
  std::sort(heads.begin(), heads.end(), [&](int a, int b) {
    return scc.members[a].front() < scc.members[b].front();
  });
  ChainCover cover;
  cover.chain_of.assign(n, -1);
  cover.position.assign(n, -1);
  for (int head : heads) {
    std::vector<Node> chain;
    for (int x = head; x != -1; x = next[x]) {
      for (Node v : scc.members[x]) {
        cover.chain_of[v] = cover.size();
        cover.position[v] = static_cast<int>(chain.size());
        chain.push_back(v);
      }
    }
    cover.chains.push_back(std::move(chain));
  }
  return cover;
}

Branching grow_branching(const Digraph& g, Node root, BranchingKind kind,
                         std::span<const char> allowed) {
  check_node(g, root);
  const int n = g.num_nodes();
  Branching b{root, kind, {}};
  std::vector<char> seen(n, 0);
  std::deque<Node> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    Node v = queue.front();
    queue.pop_front();
    for (Node w : kind == BranchingKind::kOut ? g.out(v) : g.in(v)) {
      if (seen[w] || !allowed[w]) continue;
      seen[w] = 1;
      b.arcs.push_back(kind == BranchingKind::kOut ? Arc{v, w} : Arc{w, v});
      queue.push_back(w);
    }
  }
  for (Node v = 0; v < n; ++v) {
    if (allowed[v] && !seen[v]) {
      throw CoverageError(v, "node " + std::to_string(v) + " not covered by branching from " +
                                 std::to_string(root));
    }
  }
  return b;
}

Branching grow_branching(const Digraph& g, Node root, BranchingKind kind) {
  std::vector<char> all(g.num_nodes(), 1);
  return grow_branching(g, root, kind, all);
}

bool is_branching(const Digraph& host, const Branching& b, std::span<const char> span_of) {
  const int n = host.num_nodes();
  if (b.root < 0 || b.root >= n || !span_of[b.root]) return false;
  // Out-branching: every spanned non-root node has exactly one parent arc.
  std::vector<Node> parent(n, -1);
  int expected = 0;
  for (Node v = 0; v < n; ++v) expected += span_of[v] && v != b.root;
  if (static_cast<int>(b.arcs.size()) != expected) return false;
  for (const Arc& a : b.arcs) {
    if (!host.has_arc(a.from, a.to)) return false;
    Node child = b.kind == BranchingKind::kOut ? a.to : a.from;
    Node par = b.kind == BranchingKind::kOut ? a.from : a.to;
    if (!span_of[child] || !span_of[par] || child == b.root || parent[child] != -1) return false;
    parent[child] = par;
  }
  for (Node v = 0; v < n; ++v) {
    if (!span_of[v] || v == b.root) continue;
    Node x = v;
    for (int steps = 0; x != b.root; ++steps) {
      if (x == -1 || steps > n) return false;
      x = parent[x];
    }
  }
  return true;
}

int degeneracy(const Digraph& g) {
  const int n = g.num_nodes();
  std::vector<std::vector<Node>> nbrs(n);
  for (const Arc& a : g.arcs()) {
    nbrs[a.from].push_back(a.to);
    nbrs[a.to].push_back(a.from);
  }
  std::vector<int> deg(n);
  for (Node v = 0; v < n; ++v) {
    std::sort(nbrs[v].begin(), nbrs[v].end());
    nbrs[v].erase(std::unique(nbrs[v].begin(), nbrs[v].end()), nbrs[v].end());
    deg[v] = static_cast<int>(nbrs[v].size());
  }
  std::vector<char> gone(n, 0);
  int result = 0;
  for (int step = 0; step < n; ++step) {
    Node pick = -1;
    for (Node v = 0; v < n; ++v) {
      if (!gone[v] && (pick == -1 || deg[v] < deg[pick])) pick = v;
    }
    result = std::max(result, deg[pick]);
    gone[pick] = 1;
    for (Node w : nbrs[pick]) {
      if (!gone[w]) --deg[w];
    }
  }
  return result;
}

}  // namespace streamcert
