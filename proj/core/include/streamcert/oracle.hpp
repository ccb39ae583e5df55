#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "streamcert/digraph.hpp"

namespace streamcert::oracle {

inline constexpr int kUncapped = std::numeric_limits<int>::max();

// Unit-capacity max-flow on a fixed digraph; reusable across (s, t) pairs.
class UnitFlow {
 public:
  UnitFlow(const Digraph& g, CertKind kind);
  // Number of arc- or internally node-disjoint s-t paths, stopping at `cap`.
  int flow(Node s, Node t, int cap = kUncapped);
  // Source side of a minimum cut after the last flow() call.
  std::vector<char> source_side() const;

 private:
  void add_edge(int a, int b);

  CertKind kind_;
  int n_ = 0;
  std::vector<int> head_, next_, to_, cap_, base_cap_;
  std::vector<int> parent_edge_;
  std::vector<char> reached_;
};

int lambda_st(const Digraph& g, Node s, Node t, int cap = kUncapped);
// A direct arc s->t counts as one path.
int kappa_st(const Digraph& g, Node s, Node t, int cap = kUncapped);

struct Violation {
  Node s = 0;
  Node t = 0;
  int required = 0;
  int actual = 0;
};

struct ConnReport {
  bool passed = false;
  bool subgraph = false;
  std::int64_t pairs_checked = 0;
  std::vector<Violation> violations;
};

// All ordered pairs: conn_h(s,t) >= min(k, conn_g(s,t)). At most 64 nodes.
ConnReport validate_certificate(const Digraph& g, const Digraph& h, int k, CertKind kind,
                                bool stop_at_first = false);

// Every inclusion-minimal certificate, each as a sorted arc list. At most
// 18 arcs.
std::vector<std::vector<Arc>> minimal_certificates_exhaustive(const Digraph& g, int k,
                                                              CertKind kind);

}  // namespace streamcert::oracle
