#pragma once

#include <functional>
#include <optional>
#include <unordered_set>
#include <string>
#include <vector>

#include "streamcert/certificate.hpp"
#include "streamcert/min_select.hpp"
#include "streamcert/stream.hpp"

namespace streamcert {

struct PruneResult {
  Digraph graph;
  StructureWitness witness;
};

// Keeps an in- and out-branching per nontrivial SCC plus the inter-SCC arcs,
// then drops redundant inter-SCC arcs until every out-degree there is at
// most the number of chains in a minimum chain cover.
PruneResult tc_preserving_prune(const Digraph& g, int alpha_hint = 0);

// The nodes a streaming run works on, renumbered 0..size()-1 in id order.
class NodeScope {
 public:
  static NodeScope all(int n);
  static NodeScope subset(std::vector<Node> sorted_nodes);

  int size() const noexcept { return size_; }
  bool explicit_list() const noexcept { return !nodes_.empty() || size_ == 0; }
  int local(Node v) const;  // -1 when outside
  Node global(int i) const { return nodes_.empty() ? i : nodes_[i]; }

 private:
  int size_ = 0;
  int universe_ = 0;
  std::vector<Node> nodes_;
};

using ArcFilter = std::function<bool(const Arc&)>;

// One streaming 1-certificate computation, driven by run_passes. Several
// runs can share the same passes.
class OneCertRun : public PassConsumer {
 public:
  OneCertRun(NodeScope scope, ArcFilter filter, RecursionPlan plan, StreamModel model,
             SpaceMeter& meter, std::string name,
             std::optional<std::int64_t> budget = std::nullopt);

  int passes() const noexcept { return passes_; }
  bool finished() const noexcept { return finished_; }

  void begin_pass(int pass) override;
  void consume(const ArcUpdate& u) override;
  void end_pass(int pass) override;

  // Global ids; valid once finished().
  const std::vector<Arc>& result() const { return result_; }
  const StructureWitness& witness() const { return witness_; }

 private:
  struct Block {
    int lo = 0;
    int hi = 0;
    int first_child = -1;
    int child_count = 0;
  };

  int locate(int level, int x) const;
  void finish_base();
  void start_level();
  void finish_level();
  std::vector<Arc> prune_block(int level, int block, std::vector<Arc> arcs);

  NodeScope scope_;
  ArcFilter filter_;
  RecursionPlan plan_;
  StreamModel model_;
  ChargeAccount& account_;
  int passes_ = 0;
  int sub_passes_ = 1;
  bool finished_ = false;

  std::vector<std::vector<Block>> levels_;  // levels_[0] holds the leaves
  int level_ = 0;
  int sub_pass_ = 0;

  std::vector<std::vector<Arc>> leaf_arcs_;
  std::vector<std::unordered_set<std::uint64_t>> leaf_live_;
  std::vector<std::vector<Arc>> held_;  // pruned arcs per block of the level below

  std::vector<int> chain_of_;
  std::vector<int> position_;
  std::vector<std::vector<int>> chains_;
  std::vector<int> chain_begin_;  // per child block
  std::vector<std::int64_t> slot_begin_;  // per block of the current level
  std::vector<int> best_;
  std::vector<MinSelector> selectors_;
  std::int64_t slot_words_ = 0;
  std::int64_t chain_words_ = 0;

  std::vector<Arc> result_;
  StructureWitness witness_;
};

struct OneCertOptions {
  bool strict = false;
  std::optional<std::int64_t> budget;
};

struct OneCertResult {
  Certificate cert;
  StreamStats stats;
};

OneCertResult one_cert_stream(const ArcStream& s, const RecursionPlan& plan,
                              const OneCertOptions& options = {});

struct OneCertReport {
  bool subgraph = false;
  bool tc_equal = false;
  std::optional<int> alpha;
  std::optional<bool> size_bound;
  bool structure = false;
  std::size_t size = 0;

  bool ok() const { return subgraph && tc_equal && size_bound.value_or(true) && structure; }
};

OneCertReport validate_one_cert(const Digraph& g, const Certificate& cert);
bool check_structure(const Digraph& h, const StructureWitness& w);

}  // namespace streamcert
