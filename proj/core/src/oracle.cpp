#include "streamcert/oracle.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "streamcert/errors.hpp"

namespace streamcert::oracle {

UnitFlow::UnitFlow(const Digraph& g, CertKind kind) : kind_(kind), n_(g.num_nodes()) {
  const int vertices = kind == CertKind::kNode ? 2 * n_ : n_;
  head_.assign(vertices, -1);
  if (kind == CertKind::kNode) {
    for (Node v = 0; v < n_; ++v) add_edge(2 * v, 2 * v + 1);
    for (const Arc& a : g.arcs()) add_edge(2 * a.from + 1, 2 * a.to);
  } else {
    for (const Arc& a : g.arcs()) add_edge(a.from, a.to);
  }
  parent_edge_.assign(vertices, -1);
  reached_.assign(vertices, 0);
}

void UnitFlow::add_edge(int a, int b) {
  for (auto [x, y, c] : {std::tuple{a, b, 1}, std::tuple{b, a, 0}}) {
    to_.push_back(y);
    base_cap_.push_back(c);
    next_.push_back(head_[x]);
    head_[x] = static_cast<int>(to_.size()) - 1;
  }
}

int UnitFlow::flow(Node s, Node t, int cap) {
  if (s < 0 || s >= n_ || t < 0 || t >= n_) throw ArgumentError("flow endpoint out of range");
  if (s == t) throw ArgumentError("flow endpoints must differ");
  const int source = kind_ == CertKind::kNode ? 2 * s + 1 : s;
  const int sink = kind_ == CertKind::kNode ? 2 * t : t;
  cap_ = base_cap_;
  int total = 0;
  std::deque<int> queue;
  while (total < cap) {
    std::fill(reached_.begin(), reached_.end(), 0);
    reached_[source] = 1;
    queue.assign(1, source);
    while (!queue.empty() && !reached_[sink]) {
      int x = queue.front();
      queue.pop_front();
      for (int e = head_[x]; e != -1; e = next_[e]) {
        if (cap_[e] > 0 && !reached_[to_[e]]) {
          reached_[to_[e]] = 1;
          parent_edge_[to_[e]] = e;
          queue.push_back(to_[e]);
        }
      }
    }
    if (!reached_[sink]) break;
    for (int x = sink; x != source; x = to_[parent_edge_[x] ^ 1]) {
      --cap_[parent_edge_[x]];
      ++cap_[parent_edge_[x] ^ 1];
    }
    ++total;
  }
  return total;
}

std::vector<char> UnitFlow::source_side() const {
  if (kind_ == CertKind::kArc) return reached_;
  std::vector<char> side(n_);
  for (Node v = 0; v < n_; ++v) side[v] = reached_[2 * v + 1];
  return side;
}

int lambda_st(const Digraph& g, Node s, Node t, int cap) {
  return UnitFlow(g, CertKind::kArc).flow(s, t, cap);
}

int kappa_st(const Digraph& g, Node s, Node t, int cap) {
  return UnitFlow(g, CertKind::kNode).flow(s, t, cap);
}

ConnReport validate_certificate(const Digraph& g, const Digraph& h, int k, CertKind kind,
                                bool stop_at_first) {
  if (g.num_nodes() > 64) throw BudgetError("certificate validation is limited to 64 nodes");
  if (k < 1) throw ArgumentError("k must be positive");
  ConnReport report;
  report.subgraph = g.contains(h);
  if (h.num_nodes() != g.num_nodes()) {
    report.passed = false;
    return report;
  }
  ReachMatrix reach_g(g), reach_h(h);
  UnitFlow flow_g(g, kind), flow_h(h, kind);
  for (Node s = 0; s < g.num_nodes(); ++s) {
    for (Node t = 0; t < g.num_nodes(); ++t) {
      if (s == t) continue;
      ++report.pairs_checked;
      if (!reach_g(s, t)) continue;
      int have = reach_h(s, t) ? (k == 1 ? 1 : flow_h.flow(s, t, k)) : 0;
      if (have >= k) continue;
      int need = std::min(k, flow_g.flow(s, t, k));
      if (have < need) {
        report.violations.push_back({s, t, need, have});
        if (stop_at_first) {
          report.passed = false;
          return report;
        }
      }
    }
  }
  report.passed = report.subgraph && report.violations.empty();
  return report;
}

std::vector<std::vector<Arc>> minimal_certificates_exhaustive(const Digraph& g, int k,
                                                              CertKind kind) {
  const int m = static_cast<int>(g.num_arcs());
  if (m > 18) throw BudgetError("exhaustive certificate search is limited to 18 arcs");
  if (k < 1) throw ArgumentError("k must be positive");
  const int n = g.num_nodes();
  std::vector<int> need(static_cast<std::size_t>(n) * n, 0);
  {
    UnitFlow flow(g, kind);
    ReachMatrix reach(g);
    for (Node s = 0; s < n; ++s) {
      for (Node t = 0; t < n; ++t) {
        if (s != t && reach(s, t)) need[s * n + t] = flow.flow(s, t, k);
      }
    }
  }
  const auto arcs = g.arcs();
  auto subgraph = [&](std::uint32_t mask) {
    std::vector<Arc> chosen;
    for (int i = 0; i < m; ++i) {
      if (mask >> i & 1) chosen.push_back(arcs[i]);
    }
    return Digraph(n, std::move(chosen));
  };
  auto valid = [&](std::uint32_t mask) {
    Digraph h = subgraph(mask);
    ReachMatrix reach(h);
    for (Node s = 0; s < n; ++s) {
      for (Node t = 0; t < n; ++t) {
        if (need[s * n + t] >= 1 && !reach(s, t)) return false;
      }
    }
    UnitFlow flow(h, kind);
    for (Node s = 0; s < n; ++s) {
      for (Node t = 0; t < n; ++t) {
        if (need[s * n + t] >= 2 && flow.flow(s, t, need[s * n + t]) < need[s * n + t]) {
          return false;
        }
      }
    }
    return true;
  };
  // Validity is monotone, so an invalid superset-by-one settles a mask.
  const std::uint32_t full = (1U << m) - 1;
  std::vector<char> ok(static_cast<std::size_t>(full) + 1, 0);
  for (std::uint32_t mask = full + 1; mask-- > 0;) {
    bool parents_ok = true;
    for (int i = 0; i < m && parents_ok; ++i) {
      if (!(mask >> i & 1)) parents_ok = ok[mask | (1U << i)];
    }
    ok[mask] = parents_ok && valid(mask);
  }
  std::vector<std::vector<Arc>> result;
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    if (!ok[mask]) continue;
    bool minimal = true;
    for (int i = 0; i < m && minimal; ++i) {
      if (mask >> i & 1) minimal = !ok[mask ^ (1U << i)];
    }
    if (minimal) {
      Digraph h = subgraph(mask);
      result.emplace_back(h.arcs().begin(), h.arcs().end());
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace streamcert::oracle
