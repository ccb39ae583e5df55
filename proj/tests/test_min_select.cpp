#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "streamcert/min_select.hpp"

using namespace streamcert;

namespace {

// Encodes rank r as the arc (0, r) so the rank function reads it back.
ArcStream ranks_stream(int hi, const std::vector<std::pair<int, int>>& ups) {
  ArcStream s{hi + 1, StreamModel::kTurnstile, {}};
  for (auto [r, sign] : ups) s.updates.push_back({{0, r}, sign});
  return s;
}

const RankFn kIdentity = [](const Arc& a) -> std::optional<std::int64_t> { return a.to; };

}  // namespace

TEST(MinSelect, SurvivorsSinglePass) {
  ArcStream s = ranks_stream(16, {{5, +1}, {9, +1}, {2, +1}});
  MinSelectResult r = mp_min_select(s, kIdentity, 1, 16, 1);
  ASSERT_TRUE(r.rank.has_value());
  EXPECT_EQ(*r.rank, 2);
  EXPECT_EQ(r.passes, 1);
}

TEST(MinSelect, HandSimulatedBlocks) {
  std::vector<std::pair<int, int>> ups;
  for (int i = 1; i <= 16; ++i) ups.push_back({i, +1});
  for (int i = 1; i <= 8; ++i) ups.push_back({i, -1});
  MinSelectResult r = mp_min_select(ranks_stream(16, ups), kIdentity, 1, 16, 2);
  ASSERT_TRUE(r.rank.has_value());
  EXPECT_EQ(*r.rank, 9);
  EXPECT_EQ(r.passes, 2);
  EXPECT_EQ(r.counters_per_pass, 4);
}

TEST(MinSelect, AllDeleted) {
  std::vector<std::pair<int, int>> ups;
  for (int i = 1; i <= 10; ++i) ups.push_back({i, +1});
  for (int i = 1; i <= 10; ++i) ups.push_back({i, -1});
  EXPECT_FALSE(mp_min_select(ranks_stream(10, ups), kIdentity, 1, 10, 2).rank.has_value());
}

TEST(MinSelect, RandomAgreesWithScan) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int hi = 1 + static_cast<int>(rng() % 200);
    const int q = 1 + static_cast<int>(rng() % 4);
    std::vector<int> live(hi + 1, 0);
    std::vector<std::pair<int, int>> ups;
    for (int i = 0; i < 3 * hi; ++i) {
      int r = 1 + static_cast<int>(rng() % hi);
      if (live[r] && rng() % 2) {
        ups.push_back({r, -1});
        live[r] = 0;
      } else if (!live[r]) {
        ups.push_back({r, +1});
        live[r] = 1;
      }
    }
    std::optional<std::int64_t> expect;
    for (int r = 1; r <= hi; ++r) {
      if (live[r]) {
        expect = r;
        break;
      }
    }
    MinSelectResult got = mp_min_select(ranks_stream(hi, ups), kIdentity, 1, hi, q);
    ASSERT_EQ(got.rank, expect) << "trial " << trial;
    EXPECT_LE(got.passes, q);
    EXPECT_LE(static_cast<std::int64_t>(got.counters_per_pass),
              static_cast<std::int64_t>(std::ceil(std::pow(hi, 1.0 / q))) + 1);
  }
}
