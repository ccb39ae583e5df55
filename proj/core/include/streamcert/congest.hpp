#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streamcert/digraph.hpp"

namespace streamcert::congest {

// Fields are non-negative; each costs max(1, bit_width(value)) bits.
struct Message {
  std::vector<std::int64_t> fields;
};

int message_bits(const Message& m);

// Bidirectional links over the arcs of a digraph.
class CongestNetwork {
 public:
  explicit CongestNetwork(Digraph topology, int max_message_bits = 0);

  const Digraph& topology() const { return topology_; }
  int num_nodes() const { return topology_.num_nodes(); }
  std::span<const Node> links(Node v) const { return links_[v]; }
  bool linked(Node u, Node v) const;
  int max_message_bits() const { return max_bits_; }

  static int default_budget(int n);

 private:
  Digraph topology_;
  std::vector<std::vector<Node>> links_;
  int max_bits_;
};

struct Incoming {
  Node from;
  Message msg;
};

class Outbox {
 public:
  Node self() const { return self_; }
  int round() const { return round_; }
  std::uint64_t seed() const { return seed_; }
  // Checked against the link set, the bit budget and one message per link.
  void send(Node to, Message m);

 private:
  friend class Scheduler;
  Outbox(const CongestNetwork& net, std::span<const Node> virtual_targets, Node self, int round,
         std::uint64_t seed);

  const CongestNetwork* net_;
  std::span<const Node> virtual_targets_;
  Node self_;
  int round_;
  std::uint64_t seed_;
  std::vector<std::pair<Node, Message>> sent_;
};

// Node v's handlers may only touch v's own state.
class Protocol {
 public:
  virtual ~Protocol() = default;
  virtual std::string name() const = 0;
  virtual void start(Node v, Outbox& out) = 0;
  virtual void receive(Node v, std::span<const Incoming> inbox, Outbox& out) = 0;
  virtual std::vector<std::int64_t> output(Node v) const { (void)v; return {}; }
  // Nodes the virtual source (id n) links to; empty means no virtual source.
  virtual std::vector<Node> virtual_targets() const { return {}; }
  // The virtual source's round-one messages.
  virtual void start_virtual(Outbox& out) { (void)out; }
};

struct PhaseStats {
  std::string name;
  int rounds = 0;
  std::int64_t messages = 0;
};

struct RoundTrace {
  int rounds_used = 0;
  std::int64_t messages = 0;
  int max_bits_seen = 0;
  int virtual_sends = 0;
  int virtual_late_sends = 0;
  int recursion_depth = 0;
  int rank_resamples = 0;
  std::vector<PhaseStats> phases;

  void append(const RoundTrace& phase);
};

struct ProtocolRun {
  std::vector<std::vector<std::int64_t>> outputs;
  RoundTrace trace;
};

// Runs synchronous rounds until a round passes with no message sent.
ProtocolRun run_protocol(const CongestNetwork& net, Protocol& protocol, std::uint64_t seed);

// Reference protocols.
ProtocolRun flood_bfs(const CongestNetwork& net, Node root, std::uint64_t seed = 0);
ProtocolRun elect_leader(const CongestNetwork& net, std::uint64_t seed = 0);

struct SccRun {
  std::vector<Node> component;  // label = id of a member
  RoundTrace trace;
};

struct TopoRun {
  std::vector<int> rank;  // 1-based
  std::vector<Node> component;
  RoundTrace trace;
};

SccRun congest_scc(const CongestNetwork& net, std::uint64_t seed);
TopoRun congest_toposort(const CongestNetwork& net, std::uint64_t seed);

// Equal ranks inside an SCC, strictly increasing along arcs between SCCs.
bool rank_contract_holds(const Digraph& g, std::span<const int> rank);

struct KCertRun {
  std::vector<std::vector<Arc>> marks;  // per node, incident arcs
  Digraph certificate;
  std::vector<int> memberships;  // sampled sets per node
  int samples = 0;
  RoundTrace trace;
};

// r = 0 picks the default sample count for (n, k).
KCertRun congest_k_cert(const CongestNetwork& net, int k, double rho, std::uint64_t seed, int r = 0);

}  // namespace streamcert::congest
