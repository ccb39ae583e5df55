#include "streamcert/cert_one.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "streamcert/errors.hpp"

namespace streamcert {

RecursionPlan RecursionPlan::for_passes(int p, StreamModel model) {
  if (p < 1) throw ArgumentError("pass budget must be at least 1");
  RecursionPlan plan;
  if (model == StreamModel::kInsertOnly) {
    plan.depth = p;
    return plan;
  }
  if (p == 1) return plan;
  plan.q = std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(p - 1)))));
  while ((plan.q + 1) * (plan.q + 1) <= p - 1) ++plan.q;
  while (plan.q * plan.q > p - 1) --plan.q;
  plan.depth = 1 + (p - 1) / plan.q;
  return plan;
}

int RecursionPlan::branching_for(int n) const {
  if (b > 0) return b;
  if (depth <= 1) return std::max(n, 1);
  for (int c = 2;; ++c) {
    long long power = 1;
    for (int i = 0; i < depth && power < n; ++i) power *= c;
    if (power >= n) return c;
  }
}

void RecursionPlan::validate() const {
  if (depth < 1) throw ArgumentError("recursion depth must be at least 1");
  if (q < 1) throw ArgumentError("selection passes must be at least 1");
  if (b != 0 && b < 2) throw ArgumentError("branching factor must be at least 2");
}

PruneResult tc_preserving_prune(const Digraph& g, int alpha_hint) {
  const int n = g.num_nodes();
  SccDecomposition scc = scc_tarjan(g);
  PruneResult out;
  std::vector<Arc> kept;
  kept.reserve(static_cast<std::size_t>(std::max(alpha_hint, 1) + 2) * n);
  std::vector<char> allowed(n, 0);
  for (const auto& members : scc.members) {
    if (members.size() < 2) continue;
    for (Node v : members) allowed[v] = 1;
    ComponentWitness cw;
    cw.root = members.front();
    cw.members = members;
    cw.out = grow_branching(g, cw.root, BranchingKind::kOut, allowed);
    cw.in = grow_branching(g, cw.root, BranchingKind::kIn, allowed);
    for (Node v : members) allowed[v] = 0;
    kept.insert(kept.end(), cw.out.arcs.begin(), cw.out.arcs.end());
    kept.insert(kept.end(), cw.in.arcs.begin(), cw.in.arcs.end());
    out.witness.components.push_back(std::move(cw));
  }

  ChainCover cover = chain_cover_minimum(g);
  const int m = cover.size();
  out.witness.chains = m;
  std::vector<int> max_pos(m, -1);
  for (Node x = 0; x < n; ++x) {
    std::vector<Node> outs;
    for (Node y : g.out(x)) {
      if (scc.component[y] != scc.component[x]) outs.push_back(y);
    }
    while (static_cast<int>(outs.size()) > m) {
      for (Node y : outs) max_pos[cover.chain_of[y]] = std::max(max_pos[cover.chain_of[y]], cover.position[y]);
      // Smallest u with a later out-neighbour on its chain, then the smallest
      // such later neighbour v; x -> v is implied by x -> u.
      Node u = -1;
      for (Node y : outs) {
        if (cover.position[y] < max_pos[cover.chain_of[y]]) {
          u = y;
          break;
        }
      }
      for (Node y : outs) max_pos[cover.chain_of[y]] = -1;
      if (u == -1) throw ContractError("pigeonhole step found no redundant arc");
      auto v = std::find_if(outs.begin(), outs.end(), [&](Node y) {
        return cover.chain_of[y] == cover.chain_of[u] && cover.position[y] > cover.position[u];
      });
      outs.erase(v);
    }
    for (Node y : outs) kept.push_back({x, y});
  }
  out.graph = Digraph::from_loose_arcs(n, std::move(kept));
  return out;
}

NodeScope NodeScope::all(int n) {
  NodeScope s;
  s.size_ = n;
  s.universe_ = n;
  return s;
}

NodeScope NodeScope::subset(std::vector<Node> sorted_nodes) {
  if (!std::is_sorted(sorted_nodes.begin(), sorted_nodes.end())) {
    throw ArgumentError("node scope must be sorted");
  }
  NodeScope s;
  s.size_ = static_cast<int>(sorted_nodes.size());
  s.universe_ = -1;
  s.nodes_ = std::move(sorted_nodes);
  return s;
}

int NodeScope::local(Node v) const {
  if (universe_ >= 0) return v >= 0 && v < universe_ ? v : -1;
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  return it != nodes_.end() && *it == v ? static_cast<int>(it - nodes_.begin()) : -1;
}

OneCertRun::OneCertRun(NodeScope scope, ArcFilter filter, RecursionPlan plan, StreamModel model,
                       SpaceMeter& meter, std::string name,
                       std::optional<std::int64_t> budget)
    : scope_(std::move(scope)),
      filter_(std::move(filter)),
      plan_(plan),
      model_(model),
      account_(meter.open(std::move(name), budget)) {
  plan_.validate();
  passes_ = plan_.passes(model_);
  sub_passes_ = model_ == StreamModel::kInsertOnly ? 1 : plan_.q;
  const int n = scope_.size();
  std::int64_t blocks = 0;
  if (n > 0) {
    const int b = plan_.branching_for(n);
    levels_.assign(plan_.depth, {});
    levels_.back().push_back({0, n});
    for (int level = plan_.depth - 1; level >= 1; --level) {
      for (Block& blk : levels_[level]) {
        blk.first_child = static_cast<int>(levels_[level - 1].size());
        const long long span = blk.hi - blk.lo;
        for (int j = 0; j < b; ++j) {
          int lo = blk.lo + static_cast<int>(j * span / b);
          int hi = blk.lo + static_cast<int>((j + 1) * span / b);
          if (hi > lo) {
            levels_[level - 1].push_back({lo, hi});
            ++blk.child_count;
          }
        }
      }
    }
    for (const auto& lvl : levels_) blocks += static_cast<std::int64_t>(lvl.size());
    if (model_ == StreamModel::kInsertOnly) {
      leaf_arcs_.resize(levels_[0].size());
    } else {
      leaf_live_.resize(levels_[0].size());
    }
  }
  // Plan parameters, pass counters and the block table.
  account_.charge(8 + 4 * blocks + (scope_.explicit_list() ? n : 0));
}

int OneCertRun::locate(int level, int x) const {
  const auto& lvl = levels_[level];
  auto it = std::upper_bound(lvl.begin(), lvl.end(), x,
                             [](int value, const Block& b) { return value < b.lo; });
  return static_cast<int>(it - lvl.begin()) - 1;
}

void OneCertRun::begin_pass(int pass) {
  if (pass >= passes_ || levels_.empty() || pass == 0) return;
  level_ = 1 + (pass - 1) / sub_passes_;
  sub_pass_ = (pass - 1) % sub_passes_;
  if (sub_pass_ == 0) start_level();
}

void OneCertRun::consume(const ArcUpdate& u) {
  if (finished_ || levels_.empty()) return;
  const int x = scope_.local(u.arc.from);
  if (x < 0) return;
  const int y = scope_.local(u.arc.to);
  if (y < 0) return;
  if (filter_ && !filter_(u.arc)) return;
  if (level_ == 0) {
    const int leaf = locate(0, x);
    if (locate(0, y) != leaf) return;
    if (model_ == StreamModel::kInsertOnly) {
      leaf_arcs_[leaf].push_back({x, y});
      account_.charge(1);
    } else {
      auto k = (static_cast<std::uint64_t>(x) << 32) | static_cast<std::uint32_t>(y);
      if (u.sign > 0) {
        if (leaf_live_[leaf].insert(k).second) account_.charge(1);
      } else if (leaf_live_[leaf].erase(k) != 0) {
        account_.release(1);
      }
    }
    return;
  }
  const int bx = locate(level_, x);
  if (locate(level_, y) != bx) return;
  if (locate(level_ - 1, x) == locate(level_ - 1, y)) return;
  const Block& blk = levels_[level_][bx];
  const int base = chain_begin_[blk.first_child];
  const int width = chain_begin_[blk.first_child + blk.child_count] - base;
  const std::int64_t slot =
      slot_begin_[bx] + static_cast<std::int64_t>(x - blk.lo) * width + (chain_of_[y] - base);
  if (model_ == StreamModel::kInsertOnly) {
    int& best = best_[slot];
    if (best == -1 || position_[y] < best) best = position_[y];
  } else {
    selectors_[slot].observe(position_[y], u.sign);
  }
}

void OneCertRun::end_pass(int pass) {
  if (pass >= passes_) return;
  if (!levels_.empty()) {
    if (pass == 0) {
      finish_base();
    } else {
      if (model_ == StreamModel::kTurnstile) {
        for (MinSelector& s : selectors_) s.finish_pass();
      }
      if (sub_pass_ == sub_passes_ - 1) finish_level();
    }
  }
  if (pass == passes_ - 1) {
    finished_ = true;
    if (!levels_.empty()) {
      result_.clear();
      for (const Arc& a : held_[0]) result_.push_back({scope_.global(a.from), scope_.global(a.to)});
      std::sort(result_.begin(), result_.end());
    }
    account_.release_all();
  }
}

std::vector<Arc> OneCertRun::prune_block(int level, int block, std::vector<Arc> arcs) {
  const Block& blk = levels_[level][block];
  for (Arc& a : arcs) {
    a.from -= blk.lo;
    a.to -= blk.lo;
  }
  PruneResult pruned = tc_preserving_prune(Digraph::from_loose_arcs(blk.hi - blk.lo, std::move(arcs)));
  std::vector<Arc> out;
  out.reserve(pruned.graph.num_arcs());
  for (const Arc& a : pruned.graph.arcs()) out.push_back({a.from + blk.lo, a.to + blk.lo});
  if (level == plan_.depth - 1) {
    auto lift = [&](Node v) { return scope_.global(v + blk.lo); };
    auto lift_branching = [&](Branching& b) {
      b.root = lift(b.root);
      for (Arc& a : b.arcs) a = {lift(a.from), lift(a.to)};
    };
    witness_ = std::move(pruned.witness);
    for (ComponentWitness& cw : witness_.components) {
      cw.root = lift(cw.root);
      for (Node& v : cw.members) v = lift(v);
      lift_branching(cw.out);
      lift_branching(cw.in);
    }
  }
  return out;
}

void OneCertRun::finish_base() {
  const std::size_t leaves = levels_[0].size();
  held_.assign(leaves, {});
  for (std::size_t leaf = 0; leaf < leaves; ++leaf) {
    std::vector<Arc> arcs;
    if (model_ == StreamModel::kInsertOnly) {
      arcs = std::move(leaf_arcs_[leaf]);
      leaf_arcs_[leaf] = {};
    } else {
      for (std::uint64_t k : leaf_live_[leaf]) {
        arcs.push_back({static_cast<Node>(k >> 32), static_cast<Node>(k & 0xffffffffU)});
      }
      leaf_live_[leaf] = {};
    }
    const auto stored = static_cast<std::int64_t>(arcs.size());
    held_[leaf] = prune_block(0, static_cast<int>(leaf), std::move(arcs));
    account_.charge(static_cast<std::int64_t>(held_[leaf].size()));
    account_.release(stored);
  }
}

void OneCertRun::start_level() {
  const auto& children = levels_[level_ - 1];
  const auto& blocks = levels_[level_];
  const int n = scope_.size();
  chain_of_.assign(n, -1);
  position_.assign(n, -1);
  chains_.clear();
  chain_begin_.assign(children.size() + 1, 0);
  std::vector<int> chain_child;
  for (std::size_t c = 0; c < children.size(); ++c) {
    const Block& blk = children[c];
    std::vector<Arc> arcs;
    for (const Arc& a : held_[c]) arcs.push_back({a.from - blk.lo, a.to - blk.lo});
    ChainCover cover = chain_cover_minimum(Digraph(blk.hi - blk.lo, std::move(arcs)));
    chain_begin_[c] = static_cast<int>(chains_.size());
    for (auto& chain : cover.chains) {
      for (std::size_t i = 0; i < chain.size(); ++i) {
        chain[i] += blk.lo;
        chain_of_[chain[i]] = static_cast<int>(chains_.size());
        position_[chain[i]] = static_cast<int>(i);
      }
      chains_.push_back(std::move(chain));
      chain_child.push_back(static_cast<int>(c));
    }
  }
  chain_begin_[children.size()] = static_cast<int>(chains_.size());
  chain_words_ = 3LL * n;
  account_.charge(chain_words_);

  slot_begin_.assign(blocks.size() + 1, 0);
  std::int64_t used = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& blk = blocks[bi];
    const int base = chain_begin_[blk.first_child];
    const int width = chain_begin_[blk.first_child + blk.child_count] - base;
    slot_begin_[bi + 1] = slot_begin_[bi] + static_cast<std::int64_t>(blk.hi - blk.lo) * width;
    for (int c = blk.first_child; c < blk.first_child + blk.child_count; ++c) {
      const int size = children[c].hi - children[c].lo;
      used += static_cast<std::int64_t>(blk.hi - blk.lo - size) *
              (chain_begin_[c + 1] - chain_begin_[c]);
    }
  }
  const std::int64_t total = slot_begin_.back();
  if (model_ == StreamModel::kInsertOnly) {
    best_.assign(total, -1);
    slot_words_ = used;
  } else {
    selectors_.clear();
    selectors_.reserve(total);
    slot_words_ = 0;
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      const Block& blk = blocks[bi];
      const int base = chain_begin_[blk.first_child];
      const int width = chain_begin_[blk.first_child + blk.child_count] - base;
      for (int x = blk.lo; x < blk.hi; ++x) {
        const int own = locate(level_ - 1, x);
        for (int c = base; c < base + width; ++c) {
          selectors_.emplace_back(0, static_cast<std::int64_t>(chains_[c].size()) - 1, plan_.q);
          if (chain_child[c] != own) slot_words_ += selectors_.back().words();
        }
      }
    }
  }
  account_.charge(slot_words_);
}

void OneCertRun::finish_level() {
  const auto& blocks = levels_[level_];
  std::vector<std::vector<Arc>> next(blocks.size());
  std::int64_t released = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& blk = blocks[bi];
    std::vector<Arc> arcs;
    for (int c = blk.first_child; c < blk.first_child + blk.child_count; ++c) {
      arcs.insert(arcs.end(), held_[c].begin(), held_[c].end());
      released += static_cast<std::int64_t>(held_[c].size());
    }
    const int base = chain_begin_[blk.first_child];
    const int width = chain_begin_[blk.first_child + blk.child_count] - base;
    for (int x = blk.lo; x < blk.hi; ++x) {
      const int own = locate(level_ - 1, x);
      for (int c = base; c < base + width; ++c) {
        if (c >= chain_begin_[own] && c < chain_begin_[own + 1]) continue;
        const std::int64_t slot =
            slot_begin_[bi] + static_cast<std::int64_t>(x - blk.lo) * width + (c - base);
        std::optional<std::int64_t> pos;
        if (model_ == StreamModel::kInsertOnly) {
          if (best_[slot] != -1) pos = best_[slot];
        } else {
          pos = selectors_[slot].result();
        }
        if (pos) arcs.push_back({x, chains_[c][static_cast<std::size_t>(*pos)]});
      }
    }
    next[bi] = prune_block(level_, static_cast<int>(bi), std::move(arcs));
    account_.charge(static_cast<std::int64_t>(next[bi].size()));
  }
  account_.release(released + chain_words_ + slot_words_);
  chain_words_ = slot_words_ = 0;
  held_ = std::move(next);
  best_ = {};
  selectors_ = {};
}

OneCertResult one_cert_stream(const ArcStream& s, const RecursionPlan& plan,
                              const OneCertOptions& options) {
  validate_stream(s);
  SpaceMeter meter(options.strict);
  OneCertRun run(NodeScope::all(s.n), {}, plan, s.model, meter, "one_cert", options.budget);
  PassConsumer* consumers[] = {&run};
  StreamStats stats = run_passes(s, consumers, run.passes(), meter);
  OneCertResult out;
  out.cert.graph = Digraph(s.n, run.result());
  out.cert.kind = CertKind::kNode;
  out.cert.k = 1;
  out.cert.provenance.algorithm = "one_cert";
  out.cert.provenance.params = {{"depth", std::to_string(plan.depth)},
                                {"b", std::to_string(plan.branching_for(s.n))},
                                {"q", std::to_string(plan.q)},
                                {"model", s.model == StreamModel::kInsertOnly ? "ins" : "turn"}};
  out.cert.structure = run.witness();
  out.stats = std::move(stats);
  return out;
}

bool check_structure(const Digraph& h, const StructureWitness& w) {
  const int n = h.num_nodes();
  SccDecomposition scc = scc_tarjan(h);
  std::vector<int> out_deg(n, 0);
  std::vector<Arc> internal;
  for (const Arc& a : h.arcs()) {
    if (scc.component[a.from] != scc.component[a.to]) {
      ++out_deg[a.from];
    } else {
      internal.push_back(a);
    }
  }
  if (w.chains != chain_cover_minimum(h).size()) return false;
  if (n > 0 && *std::max_element(out_deg.begin(), out_deg.end()) > w.chains) return false;
  int nontrivial = 0;
  for (const auto& m : scc.members) nontrivial += m.size() >= 2;
  if (static_cast<int>(w.components.size()) != nontrivial) return false;
  std::set<Arc> covered;
  std::vector<char> span(n, 0);
  for (const ComponentWitness& cw : w.components) {
    if (cw.members.size() < 2) return false;
    const int comp = scc.component[cw.members.front()];
    if (scc.members[comp] != cw.members) return false;
    for (Node v : cw.members) span[v] = 1;
    bool ok = cw.out.kind == BranchingKind::kOut && cw.in.kind == BranchingKind::kIn &&
              cw.out.root == cw.root && cw.in.root == cw.root && is_branching(h, cw.out, span) &&
              is_branching(h, cw.in, span);
    for (Node v : cw.members) span[v] = 0;
    if (!ok) return false;
    covered.insert(cw.out.arcs.begin(), cw.out.arcs.end());
    covered.insert(cw.in.arcs.begin(), cw.in.arcs.end());
  }
  return std::equal(covered.begin(), covered.end(), internal.begin(), internal.end());
}

OneCertReport validate_one_cert(const Digraph& g, const Certificate& cert) {
  OneCertReport r;
  const Digraph& h = cert.graph;
  r.size = h.num_arcs();
  r.subgraph = g.contains(h);
  if (g.num_nodes() == h.num_nodes()) {
    ReachMatrix rg(g), rh(h);
    r.tc_equal = true;
    for (Node v = 0; v < g.num_nodes() && r.tc_equal; ++v) {
      auto a = rg.row(v), b = rh.row(v);
      r.tc_equal = std::equal(a.begin(), a.end(), b.begin());
    }
  }
  if (g.num_nodes() <= 64) {
    r.alpha = independence_number_exact(g);
    r.size_bound = static_cast<long long>(h.num_arcs()) <=
                   static_cast<long long>(*r.alpha + 2) * g.num_nodes();
  }
  r.structure = cert.structure.has_value() && check_structure(h, *cert.structure);
  return r;
}

}  // namespace streamcert
