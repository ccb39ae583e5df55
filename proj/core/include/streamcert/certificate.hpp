#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "streamcert/digraph.hpp"
#include "streamcert/stream.hpp"

namespace streamcert {

// Recursion shape for the streaming 1-certificate. `depth` counts levels
// including the base case; every level above the base costs one pass on
// insertion-only streams and `q` passes on turnstile streams.
struct RecursionPlan {
  int depth = 1;
  int b = 0;  // 0 picks the smallest b with b^depth >= n
  int q = 1;

  // Largest plan whose pass count fits in `p`.
  static RecursionPlan for_passes(int p, StreamModel model);

  int passes(StreamModel model) const {
    return 1 + (depth - 1) * (model == StreamModel::kInsertOnly ? 1 : q);
  }
  int branching_for(int n) const;
  void validate() const;
};

// Per strongly connected component of the pruned graph: one in- and one
// out-branching at `root` whose union is exactly its internal arcs.
struct ComponentWitness {
  Node root = 0;
  std::vector<Node> members;
  Branching out;
  Branching in;
};

// The remaining arcs run between components, form a DAG, and leave each
// node at most `chains` times.
struct StructureWitness {
  int chains = 0;
  std::vector<ComponentWitness> components;
};

struct Provenance {
  std::string algorithm;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;
};

struct Certificate {
  Digraph graph;
  CertKind kind = CertKind::kNode;
  int k = 1;
  Provenance provenance;
  std::optional<StructureWitness> structure;
  std::vector<Branching> branchings;

  int base_n() const noexcept { return graph.num_nodes(); }
};

}  // namespace streamcert
