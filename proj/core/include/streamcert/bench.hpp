#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "streamcert/oracle.hpp"
#include "streamcert/stream.hpp"

namespace streamcert::bench {

enum class Algorithm { kOne, kKCert, kPeel };

Algorithm parse_algorithm(const std::string& name);
std::string algorithm_name(Algorithm a);
StreamModel parse_model(const std::string& name);
std::string model_name(StreamModel m);

// Families: transitive (alpha 1), embedded (empty gadgets of size alpha),
// tournament, random (density), strong (k-arc-strong circulant plus noise).
Digraph family_graph(const std::string& family, int n, int alpha, int k, double density,
                     std::uint64_t seed);

struct BenchConfig {
  std::string family = "embedded";
  Algorithm alg = Algorithm::kOne;
  int n = 64;
  std::vector<int> alphas{1};
  std::vector<int> ks{1};
  std::vector<int> ps{1, 2, 3};
  std::vector<StreamModel> models{StreamModel::kInsertOnly};
  std::vector<std::uint64_t> seeds{1};
  double density = 0.3;
  double noise = 0.2;
};

struct BenchRow {
  std::string family;
  std::string alg;
  std::uint64_t seed = 0;
  int n = 0;
  int alpha = 0;  // exact for n <= 64, design value otherwise, -1 unknown
  int k = 1;
  int p = 1;
  std::string model;
  std::int64_t peak_words = 0;
  int passes = 0;
  std::int64_t cert_size = 0;
  std::string verified;  // true, false or skipped
};

BenchRow bench_row(const BenchConfig& config, int alpha, int k, int p, StreamModel model,
                   std::uint64_t seed);
// Rows in (alpha, k, model, seed, p) order. Failures carry the row parameters.
std::vector<BenchRow> bench_space_passes(const BenchConfig& config);

std::string csv_header();
std::string csv_line(const BenchRow& row);
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

struct VerifyOutcome {
  int exit_code = 0;
  std::string message;
  oracle::ConnReport report;
};

// 0 iff the certificate passes the oracle; 1 on failure, 2 on unreadable input.
VerifyOutcome verify_all(const std::string& graph_file, const std::string& cert_file, int k,
                         CertKind kind);

}  // namespace streamcert::bench
