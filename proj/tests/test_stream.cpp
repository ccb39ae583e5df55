#include <gtest/gtest.h>

#include "streamcert/errors.hpp"
#include "streamcert/generators.hpp"
#include "streamcert/stream.hpp"

using namespace streamcert;

namespace {

ArcStream turn(int n, std::initializer_list<ArcUpdate> ups) {
  return {n, StreamModel::kTurnstile, std::vector<ArcUpdate>(ups)};
}

class Noop : public PassConsumer {
 public:
  void consume(const ArcUpdate&) override {}
};

class StoreAll : public PassConsumer {
 public:
  explicit StoreAll(SpaceMeter& m) : account_(m.open("store")) {}
  void consume(const ArcUpdate&) override { account_.charge(1); }
  void end_pass(int) override { account_.release_all(); }

 private:
  ChargeAccount& account_;
};

}  // namespace

TEST(FinalMultiplicity, Examples) {
  EXPECT_EQ(final_multiplicity(turn(2, {{{0, 1}, +1}, {{0, 1}, -1}})).num_arcs(), 0u);
  EXPECT_EQ(final_multiplicity(turn(3, {{{0, 1}, +1}, {{1, 2}, +1}})).num_arcs(), 2u);
  EXPECT_EQ(final_multiplicity(turn(2, {{{0, 1}, +1}, {{0, 1}, -1}, {{0, 1}, +1}})).num_arcs(), 1u);
}

TEST(ValidateStream, Integrity) {
  EXPECT_THROW(validate_stream(turn(2, {{{0, 1}, -1}})), StreamIntegrityError);
  EXPECT_THROW(validate_stream(turn(2, {{{0, 1}, +1}, {{0, 1}, +1}})), StreamIntegrityError);
  EXPECT_THROW(validate_stream(turn(2, {{{1, 1}, +1}})), StreamIntegrityError);
  ArcStream ins{2, StreamModel::kInsertOnly, {{{0, 1}, +1}, {{0, 1}, -1}}};
  EXPECT_THROW(validate_stream(ins), StreamIntegrityError);
}

TEST(TurnstileStream, FinalGraphIsInput) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Digraph g = gen::random_digraph(15, 0.3, seed);
    ArcStream s = turnstile_stream(g, 0.4, seed);
    EXPECT_NO_THROW(validate_stream(s));
    EXPECT_EQ(final_multiplicity(s), g);
    EXPECT_GT(s.updates.size(), g.num_arcs());
  }
}

TEST(RunPasses, Accounting) {
  SpaceMeter meter;
  Noop noop;
  PassConsumer* one[] = {&noop};
  StreamStats st = run_passes(ArcStream{4, StreamModel::kInsertOnly, {}}, one, 2, meter);
  EXPECT_EQ(st.passes, 2);
  EXPECT_LE(st.peak_words, 1);

  ArcStream s = insertion_stream(gen::random_digraph(20, 0.3, 1));
  SpaceMeter meter2;
  StoreAll store(meter2);
  PassConsumer* two[] = {&store};
  StreamStats st2 = run_passes(s, two, 1, meter2);
  EXPECT_EQ(st2.peak_words, static_cast<std::int64_t>(s.updates.size()));
  EXPECT_EQ(st2.updates_read, static_cast<std::int64_t>(s.updates.size()));
}

TEST(SpaceMeter, StrictBudget) {
  SpaceMeter strict(true);
  ChargeAccount& a = strict.open("tight", 3);
  a.charge(3);
  try {
    a.charge(1);
    FAIL();
  } catch (const BudgetViolation& e) {
    EXPECT_EQ(e.consumer(), "tight");
  }
  SpaceMeter lax;
  ChargeAccount& b = lax.open("tight", 3);
  b.charge(5);
  ASSERT_EQ(lax.violations().size(), 1u);
  EXPECT_EQ(lax.violations()[0].words, 5);
}
