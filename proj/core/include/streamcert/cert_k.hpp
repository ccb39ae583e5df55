#pragma once

#include <cstdint>
#include <vector>

#include "streamcert/cert_one.hpp"

namespace streamcert {

// r independent samples, each keeping a node (or arc) with probability rho.
// Membership is a pure function of (seed, sample, element).
struct SampleScheme {
  double rho = 0.0;  // 0 means 1/k; otherwise in (0, 1/k]
  int r = 0;         // 0 means ceil(c * k^2 * ln n), or 1 when rho is 1
  double c = 8.0;
  std::uint64_t seed = 0;

  double resolved_rho(int k) const;
  int resolved_r(int n, int k) const;
};

std::vector<Node> sampled_nodes(const SampleScheme& scheme, double rho, int sample, int n);
bool arc_sampled(const SampleScheme& scheme, double rho, int sample, const Arc& a);

struct KCertResult {
  Certificate cert;
  StreamStats stats;
  int samples = 0;
};

// Union of 1-certificates of the induced subgraphs on the node samples.
KCertResult k_node_cert(const ArcStream& s, int k, const SampleScheme& scheme,
                        const RecursionPlan& plan);
// Union of 1-certificates of the arc-sampled subgraphs.
KCertResult k_arc_cert_sampled(const ArcStream& s, int k, const SampleScheme& scheme,
                               const RecursionPlan& plan);
// k rounds of peeling arc-disjoint in- and out-branchings at `root`.
// Throws PromiseViolation when the input is not k-arc-strong.
KCertResult k_arc_cert_peeling(const ArcStream& s, int k, const RecursionPlan& plan,
                               Node root = 0);

// t arc-disjoint branchings at `root`. Throws InfeasibleError naming a node
// whose root cut is below t.
std::vector<Branching> extract_disjoint_branchings(const Digraph& u, Node root, int t,
                                                   BranchingKind kind = BranchingKind::kOut);

struct ResidualReport {
  int alpha_g = 0;
  int alpha_residual = 0;
  int degeneracy_h = 0;
  bool holds = false;
};

// alpha(G minus the arcs of H) <= (degeneracy(H) + 1) * alpha(G).
ResidualReport residual_independence_check(const Digraph& g, const Digraph& h);

}  // namespace streamcert
