#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <tuple>

#include "prf.hpp"
#include "streamcert/cert_k.hpp"
#include "streamcert/cert_one.hpp"
#include "streamcert/congest.hpp"
#include "streamcert/errors.hpp"

namespace streamcert::congest {

namespace {

using Values = std::vector<std::int64_t>;

// What each node knows about its neighbours' subproblem labels.
struct View {
  const CongestNetwork& net;
  const Values& label;
  const std::vector<Values>& nbr;

  int slot(Node v, Node w) const {
    auto l = net.links(v);
    return static_cast<int>(std::lower_bound(l.begin(), l.end(), w) - l.begin());
  }
  bool same(Node v, Node w) const { return label[v] >= 0 && nbr[v][slot(v, w)] == label[v]; }
};

struct Tree {
  std::vector<Node> parent;
  std::vector<std::vector<Node>> children;
  bool root(Node v, const Values& label) const { return label[v] >= 0 && parent[v] < 0; }
};

class GroupLeader : public Protocol {
 public:
  explicit GroupLeader(const View& view) : view_(view), best_(view.net.num_nodes(), -1) {}
  std::string name() const override { return "leader"; }

  void start(Node v, Outbox& out) override {
    if (view_.label[v] < 0) return;
    best_[v] = v;
    flood(v, out);
  }

  void receive(Node v, std::span<const Incoming> inbox, Outbox& out) override {
    if (view_.label[v] < 0) return;
    std::int64_t m = best_[v];
    for (const Incoming& in : inbox) m = std::min(m, in.msg.fields[0]);
    if (m == best_[v]) return;
    best_[v] = m;
    flood(v, out);
  }

  std::vector<std::int64_t> output(Node v) const override { return {best_[v]}; }

 private:
  void flood(Node v, Outbox& out) {
    for (Node w : view_.net.links(v)) {
      if (view_.same(v, w)) out.send(w, {{best_[v]}});
    }
  }

  const View& view_;
  Values best_;
};

class GroupTree : public Protocol {
 public:
  GroupTree(const View& view, Tree& tree) : view_(view), tree_(tree), joined_(view.net.num_nodes(), 0) {
    const int n = view.net.num_nodes();
    tree_.parent.assign(n, -1);
    tree_.children.assign(n, {});
  }
  std::string name() const override { return "tree"; }

  void start(Node v, Outbox& out) override {
    // The leader of a subproblem is its minimum id, which the node already knows.
    if (view_.label[v] != v) return;
    joined_[v] = 1;
    for (Node w : view_.net.links(v)) {
      if (view_.same(v, w)) out.send(w, {{0}});
    }
  }

  void receive(Node v, std::span<const Incoming> inbox, Outbox& out) override {
    if (view_.label[v] < 0) return;
    for (const Incoming& in : inbox) {
      if (in.msg.fields[0] == 1) tree_.children[v].push_back(in.from);
    }
    if (joined_[v]) return;
    auto join = std::find_if(inbox.begin(), inbox.end(), [](const Incoming& in) { return in.msg.fields[0] == 0; });
    if (join == inbox.end()) return;
    joined_[v] = 1;
    tree_.parent[v] = join->from;
    for (Node w : view_.net.links(v)) {
      if (!view_.same(v, w)) continue;
      if (w == join->from) {
        out.send(w, {{1}});
        continue;
      }
      bool heard = std::any_of(inbox.begin(), inbox.end(), [w](const Incoming& in) { return in.from == w; });
      if (!heard) out.send(w, {{0}});
    }
  }

 private:
  const View& view_;
  Tree& tree_;
  std::vector<char> joined_;
};

// Roots push their values down the tree, one value per round.
class TreeBroadcast : public Protocol {
 public:
  TreeBroadcast(const View& view, const Tree& tree, const std::vector<Values>& at_root)
      : view_(view), tree_(tree), at_root_(at_root), got_(view.net.num_nodes()),
        pos_(view.net.num_nodes(), 0) {}
  std::string name() const override { return "broadcast"; }

  void start(Node v, Outbox& out) override {
    if (!tree_.root(v, view_.label)) return;
    got_[v] = at_root_[v];
    push(v, out);
  }

  void receive(Node v, std::span<const Incoming> inbox, Outbox& out) override {
    for (const Incoming& in : inbox) got_[v].push_back(in.msg.fields[0]);
    push(v, out);
  }

  std::vector<std::int64_t> output(Node v) const override { return got_[v]; }

 private:
  void push(Node v, Outbox& out) {
    if (pos_[v] >= got_[v].size()) return;
    for (Node c : tree_.children[v]) out.send(c, {{got_[v][pos_[v]]}});
    ++pos_[v];
  }

  const View& view_;
  const Tree& tree_;
  const std::vector<Values>& at_root_;
  std::vector<Values> got_;
  std::vector<std::size_t> pos_;
};

// Sums per-node vectors up the tree; value j moves once every child has sent its j-th.
class TreeConvergecast : public Protocol {
 public:
  TreeConvergecast(const View& view, const Tree& tree, const std::vector<Values>& local)
      : view_(view), tree_(tree), sums_(local), got_(view.net.num_nodes()),
        sent_(view.net.num_nodes(), 0) {
    for (Node v = 0; v < view.net.num_nodes(); ++v) got_[v].assign(tree.children[v].size(), 0);
  }
  std::string name() const override { return "convergecast"; }

  void start(Node v, Outbox& out) override { push(v, out); }

  void receive(Node v, std::span<const Incoming> inbox, Outbox& out) override {
    for (const Incoming& in : inbox) {
      const auto& ch = tree_.children[v];
      auto idx = std::lower_bound(ch.begin(), ch.end(), in.from) - ch.begin();
      sums_[v][got_[v][idx]++] += in.msg.fields[0];
    }
    push(v, out);
  }

  std::vector<std::int64_t> output(Node v) const override {
    return tree_.root(v, view_.label) ? sums_[v] : Values{};
  }

 private:
  void push(Node v, Outbox& out) {
    if (view_.label[v] < 0 || tree_.parent[v] < 0) return;
    const std::size_t j = sent_[v];
    if (j >= sums_[v].size()) return;
    for (int g : got_[v]) {
      if (static_cast<std::size_t>(g) <= j) return;
    }
    out.send(tree_.parent[v], {{sums_[v][j]}});
    ++sent_[v];
  }

  const View& view_;
  const Tree& tree_;
  std::vector<Values> sums_;
  std::vector<std::vector<int>> got_;
  std::vector<std::size_t> sent_;
};

// Multi-source reachability inside each subproblem through a virtual source
// linked to every source. Each reached node records the source it came from.
class ReachFlood : public Protocol {
 public:
  ReachFlood(const View& view, std::vector<char> sources, bool backward)
      : view_(view), sources_(std::move(sources)), backward_(backward),
        origin_(view.net.num_nodes(), -1) {}
  std::string name() const override { return "reach"; }

  std::vector<Node> virtual_targets() const override {
    std::vector<Node> t;
    for (Node v = 0; v < view_.net.num_nodes(); ++v) {
      if (sources_[v] && view_.label[v] >= 0) t.push_back(v);
    }
    return t;
  }

  void start_virtual(Outbox& out) override {
    for (Node w : virtual_targets()) out.send(w, {{0}});
  }

  void start(Node, Outbox&) override {}

  void receive(Node v, std::span<const Incoming> inbox, Outbox& out) override {
    if (origin_[v] >= 0 || inbox.empty()) return;
    const int n = view_.net.num_nodes();
    origin_[v] = inbox.back().from == n ? v : inbox.front().msg.fields[0];
    const Digraph& g = view_.net.topology();
    for (Node w : backward_ ? g.in(v) : g.out(v)) {
      if (view_.same(v, w)) out.send(w, {{origin_[v]}});
    }
  }

  std::vector<std::int64_t> output(Node v) const override { return {origin_[v]}; }

 private:
  const View& view_;
  std::vector<char> sources_;
  bool backward_;
  Values origin_;
};

// One round: each node tells its subproblem neighbours a flag; outputs the
// number of out-neighbours whose flag is set.
class FlagExchange : public Protocol {
 public:
  FlagExchange(const View& view, const std::vector<char>& flag)
      : view_(view), flag_(flag), count_(view.net.num_nodes(), 0) {}
  std::string name() const override { return "exchange"; }

  void start(Node v, Outbox& out) override {
    for (Node w : view_.net.links(v)) {
      if (view_.same(v, w)) out.send(w, {{flag_[v] ? 1 : 0}});
    }
  }

  void receive(Node v, std::span<const Incoming> inbox, Outbox&) override {
    for (const Incoming& in : inbox) {
      if (in.msg.fields[0] == 1 && view_.net.topology().has_arc(v, in.from)) ++count_[v];
    }
  }

  std::vector<std::int64_t> output(Node v) const override { return {count_[v]}; }

 private:
  const View& view_;
  const std::vector<char>& flag_;
  Values count_;
};

// One round: every node tells all neighbours its new label (-1 when done).
class LabelExchange : public Protocol {
 public:
  LabelExchange(const CongestNetwork& net, const Values& label, std::vector<Values>& nbr)
      : net_(net), label_(label), nbr_(nbr) {}
  std::string name() const override { return "labels"; }

  void start(Node v, Outbox& out) override {
    for (Node w : net_.links(v)) out.send(w, {{label_[v] + 1}});
  }

  void receive(Node v, std::span<const Incoming> inbox, Outbox&) override {
    auto l = net_.links(v);
    for (const Incoming& in : inbox) {
      nbr_[v][std::lower_bound(l.begin(), l.end(), in.from) - l.begin()] = in.msg.fields[0] - 1;
    }
  }

 private:
  const CongestNetwork& net_;
  const Values& label_;
  std::vector<Values>& nbr_;
};

struct SchudyResult {
  std::vector<Node> component;
  std::vector<int> rank;
  RoundTrace trace;
};

SchudyResult schudy(const CongestNetwork& net, std::uint64_t seed, bool with_ranks) {
  const int n = net.num_nodes();
  SchudyResult res;
  res.component.assign(n, -1);
  res.rank.assign(n, 1);
  RoundTrace& trace = res.trace;
  Values label(n, 0);
  std::vector<Values> nbr(n);
  for (Node v = 0; v < n; ++v) nbr[v].assign(net.links(v).size(), 0);
  const View view{net, label, nbr};
  const Digraph& g = net.topology();
  const std::int64_t cube = static_cast<std::int64_t>(n) * n * n;
  const int steps = static_cast<int>(std::bit_width(static_cast<std::uint64_t>(std::max<std::int64_t>(cube - 1, 1))));

  auto run = [&](Protocol& p) {
    ProtocolRun r = run_protocol(net, p, seed);
    trace.append(r.trace);
    return r.outputs;
  };
  Tree tree;
  auto convergecast = [&](const std::vector<Values>& local) {
    TreeConvergecast p(view, tree, local);
    return run(p);
  };
  auto broadcast = [&](const std::vector<Values>& at_root) {
    TreeBroadcast p(view, tree, at_root);
    return run(p);
  };
  auto reach = [&](std::vector<char> sources, bool backward) {
    ReachFlood p(view, std::move(sources), backward);
    auto out = run(p);
    Values origin(n);
    for (Node v = 0; v < n; ++v) origin[v] = out[v][0];
    return origin;
  };

  int depth = 0;
  while (true) {
    bool any = false;
    for (Node v = 0; v < n; ++v) {
      if (label[v] < 0) continue;
      bool alone = std::none_of(net.links(v).begin(), net.links(v).end(),
                                [&](Node w) { return view.same(v, w); });
      if (alone) {
        res.component[v] = v;
        label[v] = -1;
      } else {
        any = true;
      }
    }
    if (!any) break;
    ++depth;

    {
      GroupLeader p(view);
      auto leader = run(p);
      for (Node v = 0; v < n; ++v) {
        if (label[v] < 0) continue;
        for (auto& x : nbr[v]) {
          if (x == label[v]) x = leader[v][0];
        }
        label[v] = leader[v][0];
      }
    }
    {
      GroupTree p(view, tree);
      run(p);
      for (auto& ch : tree.children) std::sort(ch.begin(), ch.end());
    }

    Values rank(n, 0);
    for (std::uint64_t attempt = 0;; ++attempt) {
      std::map<std::int64_t, std::set<std::int64_t>> seen;
      bool clash = false;
      for (Node v = 0; v < n; ++v) {
        if (label[v] < 0) continue;
        rank[v] = 1 + static_cast<std::int64_t>(detail::prf(seed, static_cast<std::uint64_t>(depth),
                                                             static_cast<std::uint64_t>(v), attempt) %
                                                static_cast<std::uint64_t>(cube));
        clash |= !seen[label[v]].insert(rank[v]).second;
      }
      if (!clash) break;
      ++trace.rank_resamples;
    }

    std::vector<Values> local(n, Values{0});
    for (Node v = 0; v < n; ++v) {
      if (label[v] < 0) continue;
      local[v][0] = 1;
      for (Node u : g.out(v)) local[v][0] += view.same(v, u) ? 1 : 0;
    }
    auto totals = convergecast(local);
    Values lo(n, 1), hi(n, cube);
    for (int step = 0; step < steps; ++step) {
      std::vector<Values> at_root(n);
      for (Node v = 0; v < n; ++v) {
        if (tree.root(v, label)) at_root[v] = {(lo[v] + hi[v]) / 2};
      }
      auto thr = broadcast(at_root);
      std::vector<char> src(n, 0);
      for (Node v = 0; v < n; ++v) src[v] = label[v] >= 0 && rank[v] <= thr[v][0];
      Values origin = reach(src, false);
      std::vector<char> in(n, 0);
      for (Node v = 0; v < n; ++v) in[v] = origin[v] >= 0;
      FlagExchange ex(view, in);
      auto cnt = run(ex);
      for (Node v = 0; v < n; ++v) local[v] = {in[v] ? 1 + cnt[v][0] : 0};
      auto count = convergecast(local);
      for (Node v = 0; v < n; ++v) {
        if (!tree.root(v, label)) continue;
        const std::int64_t mid = at_root[v][0];
        if (2 * count[v][0] >= totals[v][0]) {
          hi[v] = mid;
        } else {
          lo[v] = mid + 1;
        }
      }
    }
    std::vector<Values> at_root(n);
    for (Node v = 0; v < n; ++v) {
      if (tree.root(v, label)) at_root[v] = {lo[v]};
    }
    auto pick = broadcast(at_root);
    std::vector<char> before(n, 0), pivot(n, 0);
    for (Node v = 0; v < n; ++v) {
      if (label[v] < 0) continue;
      before[v] = rank[v] < pick[v][0];
      pivot[v] = rank[v] == pick[v][0];
    }
    Values a = reach(before, false);
    Values b = reach(pivot, false);
    Values r = reach(pivot, true);
    std::vector<int> part(n, -1);
    for (Node v = 0; v < n; ++v) {
      if (label[v] < 0) continue;
      const bool in_a = a[v] >= 0, in_b = b[v] >= 0, in_c = in_b && r[v] >= 0;
      if (!in_a && !in_b) part[v] = 0;
      else if (in_a && !in_b) part[v] = 1;
      else if (in_c) part[v] = 2;
      else if (!in_a) part[v] = 3;
      else part[v] = 4;
    }
    if (with_ranks) {
      for (Node v = 0; v < n; ++v) {
        local[v].assign(5, 0);
        if (part[v] >= 0) local[v][part[v]] = 1;
      }
      auto sizes = convergecast(local);
      for (Node v = 0; v < n; ++v) {
        if (tree.root(v, label)) at_root[v] = sizes[v];
      }
      auto known = broadcast(at_root);
      for (Node v = 0; v < n; ++v) {
        if (part[v] < 0) continue;
        for (int i = 0; i < part[v]; ++i) res.rank[v] += static_cast<int>(known[v][i]);
      }
    }
    for (Node v = 0; v < n; ++v) {
      if (part[v] < 0) continue;
      if (part[v] == 2) {
        res.component[v] = static_cast<Node>(b[v]);
        label[v] = -1;
      } else {
        label[v] = n + label[v] * 5 + part[v];
      }
    }
    LabelExchange lx(net, label, nbr);
    run(lx);
  }
  trace.recursion_depth = depth;
  return res;
}

}  // namespace

SccRun congest_scc(const CongestNetwork& net, std::uint64_t seed) {
  SchudyResult r = schudy(net, seed, false);
  return {std::move(r.component), std::move(r.trace)};
}

TopoRun congest_toposort(const CongestNetwork& net, std::uint64_t seed) {
  SchudyResult r = schudy(net, seed, true);
  return {std::move(r.rank), std::move(r.component), std::move(r.trace)};
}

bool rank_contract_holds(const Digraph& g, std::span<const int> rank) {
  if (rank.size() != static_cast<std::size_t>(g.num_nodes())) return false;
  SccDecomposition scc = scc_tarjan(g);
  for (const Arc& a : g.arcs()) {
    const bool same = scc.component[a.from] == scc.component[a.to];
    if (same ? rank[a.from] != rank[a.to] : rank[a.from] >= rank[a.to]) return false;
  }
  return true;
}

namespace {

// Each node announces the samples it belongs to, one per round.
class Announce : public Protocol {
 public:
  Announce(const CongestNetwork& net, const std::vector<std::vector<int>>& member,
           std::vector<std::map<Node, std::vector<int>>>& heard)
      : net_(net), member_(member), heard_(heard), pos_(net.num_nodes(), 0) {}
  std::string name() const override { return "announce"; }

  void start(Node v, Outbox& out) override { push(v, out); }

  void receive(Node v, std::span<const Incoming> inbox, Outbox& out) override {
    for (const Incoming& in : inbox) heard_[v][in.from].push_back(static_cast<int>(in.msg.fields[0]));
    push(v, out);
  }

 private:
  void push(Node v, Outbox& out) {
    if (pos_[v] >= member_[v].size()) return;
    for (Node w : net_.links(v)) out.send(w, {{member_[v][pos_[v]]}});
    ++pos_[v];
  }

  const CongestNetwork& net_;
  const std::vector<std::vector<int>>& member_;
  std::vector<std::map<Node, std::vector<int>>>& heard_;
  std::vector<std::size_t> pos_;
};

// Every G[V_i] floods its arcs; links are shared between samples one message
// per round, served in arrival order.
class ArcFlood : public Protocol {
 public:
  using Item = std::tuple<int, Node, Node>;

  ArcFlood(const CongestNetwork& net, const std::vector<std::vector<int>>& member,
           const std::vector<std::map<Node, std::vector<int>>>& heard)
      : net_(net), member_(member), heard_(heard), known_(net.num_nodes()), queue_(net.num_nodes()) {}
  std::string name() const override { return "arc_flood"; }

  void start(Node v, Outbox& out) override {
    for (int i : member_[v]) {
      for (Node u : net_.topology().out(v)) {
        if (in_sample(v, u, i)) learn(v, {i, v, u}, -1);
      }
    }
    push(v, out);
  }

  void receive(Node v, std::span<const Incoming> inbox, Outbox& out) override {
    for (const Incoming& in : inbox) {
      const auto& f = in.msg.fields;
      learn(v, {static_cast<int>(f[0]), static_cast<Node>(f[1]), static_cast<Node>(f[2])}, in.from);
    }
    push(v, out);
  }

  const std::map<int, std::vector<Arc>>& known(Node v) const { return known_[v]; }

 private:
  bool in_sample(Node v, Node w, int i) const {
    auto it = heard_[v].find(w);
    if (it == heard_[v].end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), i);
  }

  void learn(Node v, const Item& item, Node from) {
    const auto [i, a, b] = item;
    auto& arcs = known_[v][i];
    if (std::find(arcs.begin(), arcs.end(), Arc{a, b}) != arcs.end()) return;
    arcs.push_back({a, b});
    for (Node w : net_.links(v)) {
      if (w != from && in_sample(v, w, i)) queue_[v][w].push_back(item);
    }
  }

  void push(Node v, Outbox& out) {
    for (auto& [w, q] : queue_[v]) {
      if (q.empty()) continue;
      const auto [i, a, b] = q.front();
      q.pop_front();
      out.send(w, {{i, a, b}});
    }
  }

  const CongestNetwork& net_;
  const std::vector<std::vector<int>>& member_;
  const std::vector<std::map<Node, std::vector<int>>>& heard_;
  std::vector<std::map<int, std::vector<Arc>>> known_;
  std::vector<std::map<Node, std::deque<Item>>> queue_;
};

}  // namespace

KCertRun congest_k_cert(const CongestNetwork& net, int k, double rho, std::uint64_t seed, int r) {
  if (k < 1) throw ArgumentError("k must be positive");
  if (!(rho > 0.0) || rho > 1.0 / k + 1e-12) throw ArgumentError("rho must lie in (0, 1/k]");
  const int n = net.num_nodes();
  SampleScheme scheme{rho, r, 8.0, seed};
  KCertRun run;
  run.samples = scheme.resolved_r(n, k);
  std::vector<std::vector<int>> member(n);
  for (int i = 0; i < run.samples; ++i) {
    for (Node v : sampled_nodes(scheme, rho, i, n)) member[v].push_back(i);
  }
  run.memberships.resize(n);
  for (Node v = 0; v < n; ++v) run.memberships[v] = static_cast<int>(member[v].size());

  std::vector<std::map<Node, std::vector<int>>> heard(n);
  Announce announce(net, member, heard);
  run.trace.append(run_protocol(net, announce, seed).trace);
  ArcFlood flood(net, member, heard);
  run.trace.append(run_protocol(net, flood, seed).trace);

  run.marks.assign(n, {});
  std::vector<Arc> all;
  for (Node v = 0; v < n; ++v) {
    std::set<Arc> mine;
    for (const auto& [i, arcs] : flood.known(v)) {
      PruneResult pruned = tc_preserving_prune(Digraph::from_loose_arcs(n, arcs));
      for (const Arc& a : pruned.graph.arcs()) {
        if (a.from == v || a.to == v) mine.insert(a);
      }
    }
    run.marks[v].assign(mine.begin(), mine.end());
    all.insert(all.end(), mine.begin(), mine.end());
  }
  run.certificate = Digraph::from_loose_arcs(n, std::move(all));
  return run;
}

}  // namespace streamcert::congest
