#include "streamcert/min_select.hpp"

#include <algorithm>

#include "streamcert/errors.hpp"

namespace streamcert {

int MinSelector::blocks_for(std::int64_t universe, int q) {
  if (universe <= 1) return 1;
  int b = 1;
  for (;; ++b) {
    std::int64_t power = 1;
    for (int i = 0; i < q && power < universe; ++i) power *= b;
    if (power >= universe) return b;
  }
}

MinSelector::MinSelector(std::int64_t lo, std::int64_t hi, int q)
    : lo_(lo), hi_(hi), q_(q) {
  if (q < 1) throw ArgumentError("selection needs at least one pass");
  if (hi < lo) throw ArgumentError("empty rank range");
  blocks_ = blocks_for(hi - lo + 1, q);
  counters_.assign(blocks_, 0);
}

std::int64_t MinSelector::block_width() const {
  std::int64_t span = hi_ - lo_ + 1;
  return (span + blocks_ - 1) / blocks_;
}

void MinSelector::observe(std::int64_t rank, int sign) {
  if (empty_ || rank < lo_ || rank > hi_) return;
  counters_[static_cast<std::size_t>((rank - lo_) / block_width())] += sign;
}

void MinSelector::finish_pass() {
  if (empty_ || passes_done_ >= q_) return;
  ++passes_done_;
  std::int64_t width = block_width();
  auto hit = std::find_if(counters_.begin(), counters_.end(), [](std::int64_t c) { return c > 0; });
  if (hit == counters_.end()) {
    empty_ = true;
  } else {
    std::int64_t new_lo = lo_ + (hit - counters_.begin()) * width;
    hi_ = std::min(hi_, new_lo + width - 1);
    lo_ = new_lo;
  }
  std::fill(counters_.begin(), counters_.end(), 0);
}

std::optional<std::int64_t> MinSelector::result() const {
  if (empty_) return std::nullopt;
  if (passes_done_ < q_) throw ContractError("selection queried before its last pass");
  if (lo_ != hi_) return std::nullopt;
  return lo_;
}

namespace {

class SelectConsumer : public PassConsumer {
 public:
  SelectConsumer(const RankFn& rank_of, MinSelector& selector)
      : rank_of_(rank_of), selector_(selector) {}
  void consume(const ArcUpdate& u) override {
    if (auto r = rank_of_(u.arc)) selector_.observe(*r, u.sign);
  }
  void end_pass(int) override { selector_.finish_pass(); }

 private:
  const RankFn& rank_of_;
  MinSelector& selector_;
};

}  // namespace

MinSelectResult mp_min_select(const ArcStream& s, const RankFn& rank_of, std::int64_t lo,
                              std::int64_t hi, int q) {
  validate_stream(s);
  MinSelector selector(lo, hi, q);
  SpaceMeter meter;
  ChargeAccount& account = meter.open("mp_min_select");
  account.charge(selector.words());
  SelectConsumer consumer(rank_of, selector);
  PassConsumer* list[] = {&consumer};
  StreamStats stats = run_passes(s, list, q, meter);
  return {selector.result(), stats.passes, selector.blocks(), stats.peak_words};
}

}  // namespace streamcert
