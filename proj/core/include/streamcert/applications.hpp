#pragma once

#include <optional>
#include <vector>

#include "streamcert/certificate.hpp"
#include "streamcert/digraph.hpp"

namespace streamcert::apps {

struct SccToposort {
  std::vector<int> component;  // equal iff strongly connected
  std::vector<int> rank;       // equal within a component, increasing along arcs
};

SccToposort scc_and_toposort(const Certificate& cert);
SccToposort scc_and_toposort(const Digraph& g);

// Literal +v / -v with 1-based variables.
struct Clause {
  int a = 0;
  int b = 0;
};

Digraph implication_graph(const std::vector<Clause>& clauses, int vars);
// Satisfying assignment (index 0 is variable 1), or nullopt when unsatisfiable.
std::optional<std::vector<bool>> two_sat_from_graph(const Digraph& implication, int vars);
// Builds the implication graph, streams it through the 1-certificate, and
// solves from the certificate.
std::optional<std::vector<bool>> two_sat(const std::vector<Clause>& clauses, int vars);
bool satisfies(const std::vector<Clause>& clauses, const std::vector<bool>& assignment);

// Throws DomainError on a cyclic input.
ChainCover min_chain_cover_dag(const Certificate& cert);

// In-branching plus out-branching at node 0; nullopt when not strongly connected.
std::optional<Digraph> msss_2apx(const Certificate& cert);

// Needs a certificate with k >= 2.
std::vector<Arc> strong_bridges(const Certificate& cert);
std::vector<Arc> strong_bridges_of(const Digraph& g);

std::vector<Branching> arc_disjoint_out_branchings(const Certificate& cert, Node root, int k);

// Two out-branchings at `root` whose root paths are internally disjoint.
// Exhaustive search; meant for small graphs.
std::optional<std::pair<Branching, Branching>> independent_branchings_2(const Certificate& cert,
                                                                        Node root);
std::optional<std::pair<Branching, Branching>> independent_branchings_2(const Digraph& g,
                                                                        Node root);
bool independent_pair(const Digraph& g, const Branching& a, const Branching& b);

// Throws DomainError when the certificate is not strongly connected.
std::vector<Node> distance_d_dominating(const Certificate& cert, int d);
bool dominates_within(const Digraph& g, const std::vector<Node>& set, int d);

Digraph transitive_closure_from_cert(const Certificate& cert);

}  // namespace streamcert::apps
