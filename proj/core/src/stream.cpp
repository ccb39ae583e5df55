#include "streamcert/stream.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "streamcert/errors.hpp"

namespace streamcert {

namespace {

std::uint64_t key(const Arc& a) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a.from)) << 32) |
         static_cast<std::uint32_t>(a.to);
}

std::unordered_map<std::uint64_t, int> replay(const ArcStream& s) {
  std::unordered_map<std::uint64_t, int> mult;
  for (std::size_t i = 0; i < s.updates.size(); ++i) {
    const ArcUpdate& u = s.updates[i];
    if (u.arc.from < 0 || u.arc.from >= s.n || u.arc.to < 0 || u.arc.to >= s.n) {
      throw StreamIntegrityError(i, "endpoint out of range");
    }
    if (u.arc.from == u.arc.to) throw StreamIntegrityError(i, "self-loop");
    if (u.sign != 1 && u.sign != -1) throw StreamIntegrityError(i, "sign must be +1 or -1");
    if (u.sign < 0 && s.model == StreamModel::kInsertOnly) {
      throw StreamIntegrityError(i, "deletion in an insertion-only stream");
    }
    int& m = mult[key(u.arc)];
    m += u.sign;
    if (m < 0) throw StreamIntegrityError(i, "deletion of an arc that is not present");
    if (m > 1) throw StreamIntegrityError(i, "arc multiplicity above one");
  }
  return mult;
}

}  // namespace

void validate_stream(const ArcStream& s) { replay(s); }

Digraph final_multiplicity(const ArcStream& s) {
  std::vector<Arc> arcs;
  for (const auto& [k, m] : replay(s)) {
    if (m == 1) arcs.push_back({static_cast<Node>(k >> 32), static_cast<Node>(k & 0xffffffffU)});
  }
  return Digraph(s.n, std::move(arcs));
}

ArcStream insertion_stream(const Digraph& g) {
  ArcStream s{g.num_nodes(), StreamModel::kInsertOnly, {}};
  s.updates.reserve(g.num_arcs());
  for (const Arc& a : g.arcs()) s.updates.push_back({a, +1});
  return s;
}

ArcStream shuffled(const ArcStream& s, std::uint64_t order_seed) {
  ArcStream out = s;
  std::mt19937_64 rng(order_seed);
  if (s.model == StreamModel::kInsertOnly) {
    std::shuffle(out.updates.begin(), out.updates.end(), rng);
    return out;
  }
  // Keep each arc's own update sequence in order; interleave arcs randomly.
  std::vector<std::vector<ArcUpdate>> per_arc;
  std::unordered_map<std::uint64_t, std::size_t> slot;
  for (const ArcUpdate& u : s.updates) {
    auto [it, fresh] = slot.try_emplace(key(u.arc), per_arc.size());
    if (fresh) per_arc.emplace_back();
    per_arc[it->second].push_back(u);
  }
  std::vector<std::size_t> tickets;
  for (std::size_t i = 0; i < per_arc.size(); ++i) {
    tickets.insert(tickets.end(), per_arc[i].size(), i);
  }
  std::shuffle(tickets.begin(), tickets.end(), rng);
  std::vector<std::size_t> next(per_arc.size(), 0);
  out.updates.clear();
  for (std::size_t t : tickets) out.updates.push_back(per_arc[t][next[t]++]);
  return out;
}

ArcStream turnstile_stream(const Digraph& g, double noise, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(noise);
  ArcStream s{g.num_nodes(), StreamModel::kTurnstile, {}};
  for (Node u = 0; u < g.num_nodes(); ++u) {
    for (Node v = 0; v < g.num_nodes(); ++v) {
      if (u == v) continue;
      bool live = g.has_arc(u, v);
      bool churn = flip(rng);
      if (live) {
        s.updates.push_back({{u, v}, +1});
        if (churn) {
          s.updates.push_back({{u, v}, -1});
          s.updates.push_back({{u, v}, +1});
        }
      } else if (churn) {
        s.updates.push_back({{u, v}, +1});
        s.updates.push_back({{u, v}, -1});
      }
    }
  }
  return shuffled(s, rng());
}

void ChargeAccount::charge(std::int64_t words) { meter_->adjust(*this, words); }

void ChargeAccount::release(std::int64_t words) { meter_->adjust(*this, -words); }

ChargeAccount& SpaceMeter::open(std::string name, std::optional<std::int64_t> budget) {
  accounts_.push_back(ChargeAccount(this, std::move(name), budget));
  return accounts_.back();
}

void SpaceMeter::adjust(ChargeAccount& account, std::int64_t delta) {
  account.current_ += delta;
  if (account.current_ < 0) throw ContractError("account '" + account.name_ + "' released more than it holds");
  account.high_water_ = std::max(account.high_water_, account.current_);
  current_ += delta;
  peak_ = std::max(peak_, current_);
  if (account.budget_ && account.current_ > *account.budget_) {
    if (strict_) throw BudgetViolation(account.name_, account.current_, *account.budget_);
    violations_.push_back({account.name_, account.current_, *account.budget_});
  }
}

StreamStats run_passes(const ArcStream& s, std::span<PassConsumer* const> consumers, int passes,
                       SpaceMeter& meter) {
  if (passes < 0) throw ArgumentError("negative pass count");
  StreamStats stats;
  for (int p = 0; p < passes; ++p) {
    for (PassConsumer* c : consumers) c->begin_pass(p);
    for (const ArcUpdate& u : s.updates) {
      for (PassConsumer* c : consumers) c->consume(u);
    }
    stats.updates_read += static_cast<std::int64_t>(s.updates.size());
    for (PassConsumer* c : consumers) c->end_pass(p);
  }
  stats.passes = passes;
  stats.peak_words = meter.peak_words();
  stats.violations = meter.violations();
  return stats;
}

}  // namespace streamcert
