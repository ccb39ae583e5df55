#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "streamcert/digraph.hpp"

namespace streamcert {

enum class StreamModel { kInsertOnly, kTurnstile };

struct ArcUpdate {
  Arc arc;
  int sign = +1;
};

struct ArcStream {
  int n = 0;
  StreamModel model = StreamModel::kInsertOnly;
  std::vector<ArcUpdate> updates;
};

// Throws StreamIntegrityError on a deletion without a live insertion, a
// multiplicity above one, a deletion in an insertion-only stream, or a
// self-loop / out-of-range endpoint.
void validate_stream(const ArcStream& s);
Digraph final_multiplicity(const ArcStream& s);

ArcStream insertion_stream(const Digraph& g);
ArcStream shuffled(const ArcStream& s, std::uint64_t order_seed);

// Turnstile stream whose final graph is `g`. Every arc absent from `g` gets
// inserted then deleted with probability `noise`; arcs of `g` get
// deleted and re-inserted with the same probability.
ArcStream turnstile_stream(const Digraph& g, double noise, std::uint64_t seed);

struct BudgetViolationRecord {
  std::string consumer;
  std::int64_t words = 0;
  std::int64_t budget = 0;
};

class SpaceMeter;

// Words held by one consumer. Output written to the sink is never charged.
class ChargeAccount {
 public:
  void charge(std::int64_t words);
  void release(std::int64_t words);
  void release_all() { release(current_); }
  const std::string& name() const noexcept { return name_; }
  std::int64_t current() const noexcept { return current_; }
  std::int64_t high_water() const noexcept { return high_water_; }

 private:
  friend class SpaceMeter;
  ChargeAccount(SpaceMeter* meter, std::string name, std::optional<std::int64_t> budget)
      : meter_(meter), name_(std::move(name)), budget_(budget) {}

  SpaceMeter* meter_;
  std::string name_;
  std::optional<std::int64_t> budget_;
  std::int64_t current_ = 0;
  std::int64_t high_water_ = 0;
};

class SpaceMeter {
 public:
  explicit SpaceMeter(bool strict = false) : strict_(strict) {}
  SpaceMeter(const SpaceMeter&) = delete;
  SpaceMeter& operator=(const SpaceMeter&) = delete;

  ChargeAccount& open(std::string name, std::optional<std::int64_t> budget = std::nullopt);

  std::int64_t current_words() const noexcept { return current_; }
  std::int64_t peak_words() const noexcept { return peak_; }
  bool strict() const noexcept { return strict_; }
  const std::vector<BudgetViolationRecord>& violations() const noexcept { return violations_; }

 private:
  friend class ChargeAccount;
  void adjust(ChargeAccount& account, std::int64_t delta);

  bool strict_;
  std::deque<ChargeAccount> accounts_;
  std::int64_t current_ = 0;
  std::int64_t peak_ = 0;
  std::vector<BudgetViolationRecord> violations_;
};

class PassConsumer {
 public:
  virtual ~PassConsumer() = default;
  virtual void begin_pass(int /*pass*/) {}
  virtual void consume(const ArcUpdate& update) = 0;
  virtual void end_pass(int /*pass*/) {}
};

struct StreamStats {
  int passes = 0;
  std::int64_t peak_words = 0;
  std::int64_t updates_read = 0;
  std::vector<BudgetViolationRecord> violations;
};

// Feeds every update of every pass, in stream order, to all consumers.
StreamStats run_passes(const ArcStream& s, std::span<PassConsumer* const> consumers, int passes,
                       SpaceMeter& meter);

}  // namespace streamcert
