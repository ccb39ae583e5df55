#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "streamcert/bench.hpp"
#include "streamcert/errors.hpp"
#include "streamcert/graph_io.hpp"
#include "support.hpp"

using namespace streamcert;
using namespace streamcert::bench;

TEST(Bench, EmbeddedRowsAreMonotoneMostly) {
  BenchConfig config;
  config.alphas = {1, 2, 4};
  std::vector<BenchRow> rows = bench_space_passes(config);
  ASSERT_EQ(rows.size(), 9u);
  int monotone = 0, pairs = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i].alpha == rows[i + 1].alpha && rows[i].p < rows[i + 1].p) {
      ++pairs;
      monotone += rows[i + 1].peak_words <= rows[i].peak_words;
    }
  }
  EXPECT_GE(monotone * 10, pairs * 9);
  for (const BenchRow& r : rows) {
    EXPECT_EQ(r.verified, "true");
    if (r.p == 1) EXPECT_GE(r.peak_words, 64 * 63 / 2 - (64 / r.alpha) * r.alpha * (r.alpha - 1) / 2);
  }
}

TEST(Bench, KScaling) {
  BenchConfig config;
  config.family = "random";
  config.alg = Algorithm::kKCert;
  config.n = 24;
  config.ks = {2, 4};
  config.ps = {2};
  std::vector<BenchRow> rows = bench_space_passes(config);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_LE(rows[1].cert_size, 2 * 2 * rows[0].cert_size);
}

TEST(Bench, CsvShape) {
  BenchConfig config;
  config.n = 8;
  config.ps = {1};
  std::ostringstream out;
  write_csv(out, bench_space_passes(config));
  EXPECT_EQ(out.str().substr(0, csv_header().size()), csv_header());
  EXPECT_THROW(family_graph("bogus", 4, 1, 1, 0.1, 1), ArgumentError);
}

TEST(VerifyAll, ExitCodes) {
  auto dir = std::filesystem::temp_directory_path() / "streamcert_verify_test";
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const Digraph& g) {
    std::ofstream f(dir / name);
    write_graph(f, g);
    return (dir / name).string();
  };
  Digraph p = streamcert::testing::path(5);
  Arc cut{2, 3};
  std::string full = write("p.txt", p), broken = write("q.txt", p.without({&cut, 1}));
  EXPECT_EQ(verify_all(full, full, 1, CertKind::kNode).exit_code, 0);
  EXPECT_EQ(verify_all(full, broken, 1, CertKind::kNode).exit_code, 1);
  std::ofstream(dir / "junk.txt") << "not a graph\n";
  EXPECT_EQ(verify_all(full, (dir / "junk.txt").string(), 1, CertKind::kNode).exit_code, 2);
  std::filesystem::remove_all(dir);
}
