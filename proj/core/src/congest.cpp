#include "streamcert/congest.hpp"

#include <algorithm>
#include <bit>

#include "streamcert/errors.hpp"

namespace streamcert::congest {

namespace {

constexpr int kRoundLimit = 1'000'000;

}  // namespace

int message_bits(const Message& m) {
  int bits = 0;
  for (std::int64_t f : m.fields) {
    if (f < 0) throw ContractError("message fields must be non-negative");
    bits += std::max(1, static_cast<int>(std::bit_width(static_cast<std::uint64_t>(f))));
  }
  return bits;
}

CongestNetwork::CongestNetwork(Digraph topology, int max_message_bits)
    : topology_(std::move(topology)), links_(topology_.num_nodes()) {
  const int n = topology_.num_nodes();
  max_bits_ = max_message_bits > 0 ? max_message_bits : default_budget(n);
  for (const Arc& a : topology_.arcs()) {
    links_[a.from].push_back(a.to);
    links_[a.to].push_back(a.from);
  }
  for (auto& l : links_) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
}

bool CongestNetwork::linked(Node u, Node v) const {
  if (u < 0 || u >= num_nodes()) return false;
  return std::binary_search(links_[u].begin(), links_[u].end(), v);
}

int CongestNetwork::default_budget(int n) {
  int log = n <= 1 ? 1 : static_cast<int>(std::bit_width(static_cast<unsigned>(n - 1)));
  return 8 * log;
}

Outbox::Outbox(const CongestNetwork& net, std::span<const Node> virtual_targets, Node self,
               int round, std::uint64_t seed)
    : net_(&net), virtual_targets_(virtual_targets), self_(self), round_(round), seed_(seed) {}

void Outbox::send(Node to, Message m) {
  const int bits = message_bits(m);
  const bool is_virtual = self_ == net_->num_nodes();
  const bool ok_link =
      is_virtual ? std::binary_search(virtual_targets_.begin(), virtual_targets_.end(), to)
                 : net_->linked(self_, to);
  if (!ok_link) {
    throw ProtocolViolation(self_, round_, bits,
                            "node " + std::to_string(self_) + " has no link to " +
                                std::to_string(to) + " in round " + std::to_string(round_));
  }
  if (bits > net_->max_message_bits()) {
    throw ProtocolViolation(self_, round_, bits,
                            "node " + std::to_string(self_) + " sent a " + std::to_string(bits) +
                                "-bit message in round " + std::to_string(round_) +
                                " (budget " + std::to_string(net_->max_message_bits()) + ")");
  }
  for (const auto& [prev, msg] : sent_) {
    if (prev == to) {
      throw ProtocolViolation(self_, round_, bits,
                              "node " + std::to_string(self_) + " sent twice to " +
                                  std::to_string(to) + " in round " + std::to_string(round_));
    }
  }
  sent_.emplace_back(to, std::move(m));
}

void RoundTrace::append(const RoundTrace& phase) {
  rounds_used += phase.rounds_used;
  messages += phase.messages;
  max_bits_seen = std::max(max_bits_seen, phase.max_bits_seen);
  virtual_sends += phase.virtual_sends;
  virtual_late_sends += phase.virtual_late_sends;
  rank_resamples += phase.rank_resamples;
  recursion_depth = std::max(recursion_depth, phase.recursion_depth);
  for (const PhaseStats& p : phase.phases) {
    auto it = std::find_if(phases.begin(), phases.end(),
                           [&](const PhaseStats& q) { return q.name == p.name; });
    if (it == phases.end()) {
      phases.push_back(p);
    } else {
      it->rounds += p.rounds;
      it->messages += p.messages;
    }
  }
}

class Scheduler {
 public:
  static ProtocolRun run(const CongestNetwork& net, Protocol& p, std::uint64_t seed) {
    const int n = net.num_nodes();
    std::vector<Node> targets = p.virtual_targets();
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (Node w : targets) check_node(net.topology(), w);

    ProtocolRun run;
    RoundTrace& trace = run.trace;
    std::vector<std::vector<Incoming>> next(n), inbox(n);
    std::int64_t sent_now = 0;
    int round = 1;
    auto collect = [&](Outbox& ob) {
      for (auto& [to, msg] : ob.sent_) {
        ++trace.messages;
        ++sent_now;
        trace.max_bits_seen = std::max(trace.max_bits_seen, message_bits(msg));
        if (ob.self_ == n) {
          ++trace.virtual_sends;
          if (round > 1) ++trace.virtual_late_sends;
        }
        next[to].push_back({ob.self_, std::move(msg)});
      }
    };

    for (Node v = 0; v < n; ++v) {
      Outbox ob(net, targets, v, round, seed);
      p.start(v, ob);
      collect(ob);
    }
    if (!targets.empty()) {
      Outbox ob(net, targets, n, round, seed);
      p.start_virtual(ob);
      collect(ob);
    }
    while (sent_now > 0) {
      trace.rounds_used = round;
      if (++round > kRoundLimit) throw ContractError(p.name() + " did not terminate");
      std::swap(inbox, next);
      for (auto& box : next) box.clear();
      sent_now = 0;
      for (Node v = 0; v < n; ++v) {
        std::stable_sort(inbox[v].begin(), inbox[v].end(),
                         [](const Incoming& a, const Incoming& b) { return a.from < b.from; });
        Outbox ob(net, targets, v, round, seed);
        p.receive(v, inbox[v], ob);
        collect(ob);
      }
    }
    trace.phases.push_back({p.name(), trace.rounds_used, trace.messages});
    run.outputs.resize(n);
    for (Node v = 0; v < n; ++v) run.outputs[v] = p.output(v);
    return run;
  }
};

ProtocolRun run_protocol(const CongestNetwork& net, Protocol& protocol, std::uint64_t seed) {
  return Scheduler::run(net, protocol, seed);
}

namespace {

class FloodBfs : public Protocol {
 public:
  FloodBfs(const CongestNetwork& net, Node root)
      : net_(net), root_(root), dist_(net.num_nodes(), -1), parent_(net.num_nodes(), -1) {}

  std::string name() const override { return "bfs"; }

  void start(Node v, Outbox& out) override {
    if (v != root_) return;
    dist_[v] = 0;
    for (Node w : net_.links(v)) out.send(w, {{0}});
  }

  void receive(Node v, std::span<const Incoming> inbox, Outbox& out) override {
    if (dist_[v] >= 0 || inbox.empty()) return;
    dist_[v] = inbox.front().msg.fields[0] + 1;
    parent_[v] = inbox.front().from;
    for (Node w : net_.links(v)) {
      bool heard = std::any_of(inbox.begin(), inbox.end(), [w](const Incoming& m) { return m.from == w; });
      if (!heard) out.send(w, {{dist_[v]}});
    }
  }

  std::vector<std::int64_t> output(Node v) const override { return {dist_[v], parent_[v]}; }

 private:
  const CongestNetwork& net_;
  Node root_;
  std::vector<std::int64_t> dist_;
  std::vector<std::int64_t> parent_;
};

class MinIdLeader : public Protocol {
 public:
  explicit MinIdLeader(const CongestNetwork& net) : net_(net), best_(net.num_nodes()) {}

  std::string name() const override { return "leader"; }

  void start(Node v, Outbox& out) override {
    best_[v] = v;
    for (Node w : net_.links(v)) out.send(w, {{v}});
  }

  void receive(Node v, std::span<const Incoming> inbox, Outbox& out) override {
    std::int64_t m = best_[v];
    for (const Incoming& in : inbox) m = std::min(m, in.msg.fields[0]);
    if (m == best_[v]) return;
    best_[v] = m;
    for (Node w : net_.links(v)) out.send(w, {{m}});
  }

  std::vector<std::int64_t> output(Node v) const override { return {best_[v]}; }

 private:
  const CongestNetwork& net_;
  std::vector<std::int64_t> best_;
};

}  // namespace

ProtocolRun flood_bfs(const CongestNetwork& net, Node root, std::uint64_t seed) {
  check_node(net.topology(), root);
  FloodBfs p(net, root);
  return run_protocol(net, p, seed);
}

ProtocolRun elect_leader(const CongestNetwork& net, std::uint64_t seed) {
  MinIdLeader p(net);
  return run_protocol(net, p, seed);
}

}  // namespace streamcert::congest
