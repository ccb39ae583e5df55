#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "streamcert/stream.hpp"

namespace streamcert {

// Munro-Paterson style selection of the smallest surviving rank in
// [lo, hi] over q passes of a turnstile stream. Each pass splits the active
// range into `blocks()` contiguous blocks, one counter each, and keeps the
// lowest block whose net count is positive.
class MinSelector {
 public:
  MinSelector(std::int64_t lo, std::int64_t hi, int q);

  void observe(std::int64_t rank, int sign);
  void finish_pass();

  int blocks() const noexcept { return blocks_; }
  int passes_done() const noexcept { return passes_done_; }
  // Words held during a pass: the counters plus the active range.
  std::int64_t words() const noexcept { return blocks_ + 2; }
  std::optional<std::int64_t> result() const;

  static int blocks_for(std::int64_t universe, int q);

 private:
  std::int64_t block_width() const;

  std::int64_t lo_;
  std::int64_t hi_;
  int q_;
  int blocks_;
  int passes_done_ = 0;
  bool empty_ = false;
  std::vector<std::int64_t> counters_;
};

struct MinSelectResult {
  std::optional<std::int64_t> rank;
  int passes = 0;
  int counters_per_pass = 0;
  std::int64_t peak_words = 0;
};

using RankFn = std::function<std::optional<std::int64_t>(const Arc&)>;

MinSelectResult mp_min_select(const ArcStream& s, const RankFn& rank_of, std::int64_t lo,
                              std::int64_t hi, int q);

}  // namespace streamcert
