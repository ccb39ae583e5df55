#include "streamcert/cert_k.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>

#include "prf.hpp"
#include "streamcert/errors.hpp"
#include "streamcert/oracle.hpp"

namespace streamcert {

double SampleScheme::resolved_rho(int k) const {
  if (k < 1) throw ArgumentError("k must be positive");
  if (rho == 0.0) return 1.0 / k;
  if (!(rho > 0.0) || rho > 1.0 / k + 1e-12) {
    throw ArgumentError("rho must lie in (0, 1/k], got " + std::to_string(rho));
  }
  return rho;
}

int SampleScheme::resolved_r(int n, int k) const {
  if (r > 0) return r;
  if (resolved_rho(k) >= 1.0) return 1;
  if (n < 2) return 1;
  return static_cast<int>(std::ceil(c * k * k * std::log(static_cast<double>(n))));
}

std::vector<Node> sampled_nodes(const SampleScheme& scheme, double rho, int sample, int n) {
  std::vector<Node> nodes;
  for (Node v = 0; v < n; ++v) {
    if (detail::prf_coin(rho, scheme.seed, static_cast<std::uint64_t>(sample), static_cast<std::uint64_t>(v))) {
      nodes.push_back(v);
    }
  }
  return nodes;
}

bool arc_sampled(const SampleScheme& scheme, double rho, int sample, const Arc& a) {
  return detail::prf_coin(rho, scheme.seed ^ 0xa5a5a5a5ULL, static_cast<std::uint64_t>(sample),
                          static_cast<std::uint64_t>(a.from), static_cast<std::uint64_t>(a.to) + 1);
}

namespace {

void check_k(int k) {
  if (k < 1) throw ArgumentError("k must be positive");
}

std::map<std::string, std::string> plan_params(const RecursionPlan& plan, StreamModel model) {
  return {{"depth", std::to_string(plan.depth)},
          {"q", std::to_string(plan.q)},
          {"model", model == StreamModel::kInsertOnly ? "ins" : "turn"}};
}

KCertResult run_samples(const ArcStream& s, std::vector<std::unique_ptr<OneCertRun>>& runs,
                        SpaceMeter& meter) {
  std::vector<PassConsumer*> consumers;
  for (auto& r : runs) consumers.push_back(r.get());
  const int passes = runs.empty() ? 0 : runs.front()->passes();
  KCertResult out;
  out.stats = run_passes(s, consumers, passes, meter);
  std::vector<Arc> all;
  for (auto& r : runs) all.insert(all.end(), r->result().begin(), r->result().end());
  out.cert.graph = Digraph::from_loose_arcs(s.n, std::move(all));
  out.samples = static_cast<int>(runs.size());
  return out;
}

}  // namespace

KCertResult k_node_cert(const ArcStream& s, int k, const SampleScheme& scheme,
                        const RecursionPlan& plan) {
  check_k(k);
  validate_stream(s);
  const double rho = scheme.resolved_rho(k);
  const int r = scheme.resolved_r(s.n, k);
  SpaceMeter meter;
  std::vector<std::unique_ptr<OneCertRun>> runs;
  for (int i = 0; i < r; ++i) {
    runs.push_back(std::make_unique<OneCertRun>(NodeScope::subset(sampled_nodes(scheme, rho, i, s.n)),
                                                ArcFilter{}, plan, s.model, meter,
                                                "node_sample_" + std::to_string(i)));
  }
  KCertResult out = run_samples(s, runs, meter);
  out.cert.kind = CertKind::kNode;
  out.cert.k = k;
  out.cert.provenance.algorithm = "k_node_cert";
  out.cert.provenance.seed = scheme.seed;
  out.cert.provenance.params = plan_params(plan, s.model);
  out.cert.provenance.params["rho"] = std::to_string(rho);
  out.cert.provenance.params["r"] = std::to_string(r);
  return out;
}

KCertResult k_arc_cert_sampled(const ArcStream& s, int k, const SampleScheme& scheme,
                               const RecursionPlan& plan) {
  check_k(k);
  validate_stream(s);
  const double rho = scheme.resolved_rho(k);
  const int r = scheme.resolved_r(s.n, k);
  SpaceMeter meter;
  std::vector<std::unique_ptr<OneCertRun>> runs;
  for (int i = 0; i < r; ++i) {
    ArcFilter keep = [scheme, rho, i](const Arc& a) { return arc_sampled(scheme, rho, i, a); };
    runs.push_back(std::make_unique<OneCertRun>(NodeScope::all(s.n), std::move(keep), plan, s.model,
                                                meter, "arc_sample_" + std::to_string(i)));
  }
  KCertResult out = run_samples(s, runs, meter);
  out.cert.kind = CertKind::kArc;
  out.cert.k = k;
  out.cert.provenance.algorithm = "k_arc_cert_sampled";
  out.cert.provenance.seed = scheme.seed;
  out.cert.provenance.params = plan_params(plan, s.model);
  out.cert.provenance.params["rho"] = std::to_string(rho);
  out.cert.provenance.params["r"] = std::to_string(r);
  return out;
}

std::vector<Branching> extract_disjoint_branchings(const Digraph& u, Node root, int t,
                                                   BranchingKind kind) {
  check_node(u, root);
  if (t < 0) throw ArgumentError("branching count must be non-negative");
  if (kind == BranchingKind::kIn) {
    std::vector<Branching> out = extract_disjoint_branchings(u.reversed(), root, t);
    for (Branching& b : out) {
      b.kind = BranchingKind::kIn;
      for (Arc& a : b.arcs) std::swap(a.from, a.to);
      std::sort(b.arcs.begin(), b.arcs.end());
    }
    return out;
  }
  const int n = u.num_nodes();
  {
    oracle::UnitFlow flow(u, CertKind::kArc);
    for (Node v = 0; v < n; ++v) {
      if (v == root) continue;
      int cut = flow.flow(root, v, t);
      if (cut < t) {
        throw InfeasibleError(v, cut, "node " + std::to_string(v) + " has root cut " +
                                          std::to_string(cut) + " < " + std::to_string(t));
      }
    }
  }
  // Lovasz: grow one branching at a time, keeping the rest of the graph
  // (remaining - 1)-arc-connected from the root.
  std::vector<Arc> pool(u.arcs().begin(), u.arcs().end());
  std::vector<Branching> out;
  for (int i = 0; i < t; ++i) {
    const int rest = t - i - 1;
    Branching b{root, BranchingKind::kOut, {}};
    std::vector<char> in_tree(n, 0);
    in_tree[root] = 1;
    std::vector<char> used(pool.size(), 0);
    auto still_feasible = [&](std::size_t candidate) {
      if (rest == 0) return true;
      std::vector<Arc> left;
      for (std::size_t j = 0; j < pool.size(); ++j) {
        if (!used[j] && j != candidate) left.push_back(pool[j]);
      }
      Digraph d(n, std::move(left));
      oracle::UnitFlow flow(d, CertKind::kArc);
      for (Node v = 0; v < n; ++v) {
        if (v != root && flow.flow(root, v, rest) < rest) return false;
      }
      return true;
    };
    for (int grown = 1; grown < n; ++grown) {
      bool extended = false;
      for (std::size_t j = 0; j < pool.size() && !extended; ++j) {
        const Arc& a = pool[j];
        if (used[j] || !in_tree[a.from] || in_tree[a.to]) continue;
        if (!still_feasible(j)) continue;
        used[j] = 1;
        in_tree[a.to] = 1;
        b.arcs.push_back(a);
        extended = true;
      }
      if (!extended) throw ContractError("no feasible extension of a partial branching");
    }
    std::vector<Arc> left;
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (!used[j]) left.push_back(pool[j]);
    }
    pool = std::move(left);
    std::sort(b.arcs.begin(), b.arcs.end());
    out.push_back(std::move(b));
  }
  return out;
}

KCertResult k_arc_cert_peeling(const ArcStream& s, int k, const RecursionPlan& plan, Node root) {
  check_k(k);
  validate_stream(s);
  if (root < 0 || root >= s.n) throw ArgumentError("root out of range");
  const int n = s.n;
  SpaceMeter meter;
  ChargeAccount& store = meter.open("peeling_store");
  std::set<Arc> used_out, used_in;
  std::vector<Arc> union_out, union_in;
  std::vector<Branching> outs, ins;
  KCertResult result;
  for (int t = 1; t <= k; ++t) {
    OneCertRun fwd(NodeScope::all(n), [&](const Arc& a) { return !used_out.count(a); }, plan,
                   s.model, meter, "peel_out_" + std::to_string(t));
    OneCertRun bwd(NodeScope::all(n), [&](const Arc& a) { return !used_in.count(a); }, plan,
                   s.model, meter, "peel_in_" + std::to_string(t));
    PassConsumer* consumers[] = {&fwd, &bwd};
    StreamStats st = run_passes(s, consumers, fwd.passes(), meter);
    result.stats.passes += st.passes;
    result.stats.updates_read += st.updates_read;
    union_out.insert(union_out.end(), fwd.result().begin(), fwd.result().end());
    union_in.insert(union_in.end(), bwd.result().begin(), bwd.result().end());
    Digraph u_out = Digraph::from_loose_arcs(n, union_out);
    Digraph u_in = Digraph::from_loose_arcs(n, union_in);
    store.charge(static_cast<std::int64_t>(u_out.num_arcs() + u_in.num_arcs()));
    try {
      outs = extract_disjoint_branchings(u_out, root, t, BranchingKind::kOut);
      ins = extract_disjoint_branchings(u_in, root, t, BranchingKind::kIn);
    } catch (const InfeasibleError& e) {
      throw PromiseViolation(t, e.node(),
                             "input is not " + std::to_string(k) + "-arc-strong: round " +
                                 std::to_string(t) + " cannot reach node " +
                                 std::to_string(e.node()));
    }
    used_out.clear();
    used_in.clear();
    for (const Branching& b : outs) used_out.insert(b.arcs.begin(), b.arcs.end());
    for (const Branching& b : ins) used_in.insert(b.arcs.begin(), b.arcs.end());
    store.release_all();
    store.charge(static_cast<std::int64_t>(u_out.num_arcs() + u_in.num_arcs() + used_out.size() +
                                           used_in.size()));
  }
  std::vector<Arc> all(used_out.begin(), used_out.end());
  all.insert(all.end(), used_in.begin(), used_in.end());
  result.cert.graph = Digraph::from_loose_arcs(n, std::move(all));
  result.cert.kind = CertKind::kArc;
  result.cert.k = k;
  result.cert.provenance.algorithm = "k_arc_cert_peeling";
  result.cert.provenance.params = plan_params(plan, s.model);
  result.cert.provenance.params["root"] = std::to_string(root);
  result.cert.branchings = outs;
  result.cert.branchings.insert(result.cert.branchings.end(), ins.begin(), ins.end());
  result.stats.peak_words = meter.peak_words();
  result.stats.violations = meter.violations();
  result.samples = k;
  return result;
}

ResidualReport residual_independence_check(const Digraph& g, const Digraph& h) {
  ResidualReport r;
  r.alpha_g = independence_number_exact(g);
  r.alpha_residual = independence_number_exact(g.without(h.arcs()));
  r.degeneracy_h = degeneracy(h);
  r.holds = r.alpha_residual <= (r.degeneracy_h + 1) * r.alpha_g;
  return r;
}

}  // namespace streamcert
