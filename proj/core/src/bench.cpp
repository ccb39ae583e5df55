#include "streamcert/bench.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "streamcert/cert_k.hpp"
#include "streamcert/cert_one.hpp"
#include "streamcert/errors.hpp"
#include "streamcert/generators.hpp"
#include "streamcert/graph_io.hpp"
#include "streamcert/hardness.hpp"

namespace streamcert::bench {

Algorithm parse_algorithm(const std::string& name) {
  if (name == "one") return Algorithm::kOne;
  if (name == "kcert") return Algorithm::kKCert;
  if (name == "peel") return Algorithm::kPeel;
  throw ArgumentError("unknown algorithm '" + name + "'");
}

std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::kOne: return "one";
    case Algorithm::kKCert: return "kcert";
    case Algorithm::kPeel: return "peel";
  }
  return "unknown";
}

StreamModel parse_model(const std::string& name) {
  if (name == "ins") return StreamModel::kInsertOnly;
  if (name == "turn") return StreamModel::kTurnstile;
  throw ArgumentError("unknown stream model '" + name + "'");
}

std::string model_name(StreamModel m) { return m == StreamModel::kInsertOnly ? "ins" : "turn"; }

Digraph family_graph(const std::string& family, int n, int alpha, int k, double density,
                     std::uint64_t seed) {
  if (n < 1) throw ArgumentError("n must be positive");
  if (family == "transitive") return gen::transitive_tournament(n);
  if (family == "tournament") return gen::random_tournament(n, seed);
  if (family == "random") return gen::random_digraph(n, density, seed);
  if (family == "strong") return gen::random_arc_strong(n, k, density, seed);
  if (family == "embedded") {
    if (alpha < 1 || n % alpha != 0) throw ArgumentError("embedded family needs alpha dividing n");
    std::vector<Digraph> gadgets(n / alpha, Digraph(alpha));
    return gen::random_relabel(hardness::embed_tournament(gadgets, alpha), seed);
  }
  throw ArgumentError("unknown family '" + family + "'");
}

namespace {

int design_alpha(const std::string& family, int alpha) {
  if (family == "transitive" || family == "tournament") return 1;
  if (family == "embedded") return alpha;
  return -1;
}

}  // namespace

BenchRow bench_row(const BenchConfig& config, int alpha, int k, int p, StreamModel model,
                   std::uint64_t seed) {
  BenchRow row;
  row.family = config.family;
  row.alg = algorithm_name(config.alg);
  row.seed = seed;
  row.n = config.n;
  row.k = k;
  row.p = p;
  row.model = model_name(model);
  Digraph g = family_graph(config.family, config.n, alpha, k, config.density, seed);
  row.alpha = config.n <= 64 ? independence_number_exact(g) : design_alpha(config.family, alpha);
  ArcStream s = model == StreamModel::kInsertOnly ? shuffled(insertion_stream(g), seed)
                                                  : turnstile_stream(g, config.noise, seed);
  RecursionPlan plan = RecursionPlan::for_passes(p, model);
  Digraph cert;
  CertKind kind = CertKind::kNode;
  switch (config.alg) {
    case Algorithm::kOne: {
      OneCertResult r = one_cert_stream(s, plan);
      cert = r.cert.graph;
      row.peak_words = r.stats.peak_words;
      row.passes = r.stats.passes;
      k = 1;
      break;
    }
    case Algorithm::kKCert: {
      SampleScheme scheme;
      scheme.seed = seed;
      KCertResult r = k_node_cert(s, k, scheme, plan);
      cert = r.cert.graph;
      row.peak_words = r.stats.peak_words;
      row.passes = r.stats.passes;
      break;
    }
    case Algorithm::kPeel: {
      KCertResult r = k_arc_cert_peeling(s, k, plan);
      cert = r.cert.graph;
      row.peak_words = r.stats.peak_words;
      row.passes = r.stats.passes;
      kind = CertKind::kArc;
      break;
    }
  }
  row.cert_size = static_cast<std::int64_t>(cert.num_arcs());
  if (config.n <= 64) {
    row.verified = oracle::validate_certificate(g, cert, k, kind, true).passed ? "true" : "false";
  } else {
    row.verified = "skipped";
  }
  return row;
}

std::vector<BenchRow> bench_space_passes(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (int alpha : config.alphas) {
    for (int k : config.ks) {
      for (StreamModel model : config.models) {
        for (std::uint64_t seed : config.seeds) {
          for (int p : config.ps) {
            try {
              rows.push_back(bench_row(config, alpha, k, p, model, seed));
            } catch (const std::exception& e) {
              std::ostringstream where;
              where << "family=" << config.family << " n=" << config.n << " alpha=" << alpha
                    << " k=" << k << " p=" << p << " model=" << model_name(model)
                    << " seed=" << seed << ": " << e.what();
              throw std::runtime_error(where.str());
            }
          }
        }
      }
    }
  }
  return rows;
}

std::string csv_header() { return "n,alpha,k,p,model,peak_words,passes,cert_size,verified,family,alg,seed"; }

std::string csv_line(const BenchRow& r) {
  std::ostringstream out;
  out << r.n << ',' << r.alpha << ',' << r.k << ',' << r.p << ',' << r.model << ','
      << r.peak_words << ',' << r.passes << ',' << r.cert_size << ',' << r.verified << ','
      << r.family << ',' << r.alg << ',' << r.seed;
  return out.str();
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << csv_header() << '\n';
  for (const BenchRow& r : rows) out << csv_line(r) << '\n';
}

VerifyOutcome verify_all(const std::string& graph_file, const std::string& cert_file, int k,
                         CertKind kind) {
  VerifyOutcome out;
  Digraph g, h;
  try {
    g = final_multiplicity(read_graph_or_stream_file(graph_file));
    h = final_multiplicity(read_graph_or_stream_file(cert_file));
  } catch (const std::exception& e) {
    out.exit_code = 2;
    out.message = e.what();
    return out;
  }
  if (g.num_nodes() != h.num_nodes()) {
    out.exit_code = 1;
    out.message = "node counts differ: " + std::to_string(g.num_nodes()) + " vs " +
                  std::to_string(h.num_nodes());
    return out;
  }
  out.report = oracle::validate_certificate(g, h, k, kind, false);
  std::ostringstream msg;
  msg << (out.report.passed ? "pass" : "fail") << ": " << out.report.pairs_checked
      << " pairs checked, " << out.report.violations.size() << " violations";
  if (!out.report.subgraph) msg << ", not a subgraph";
  for (std::size_t i = 0; i < out.report.violations.size() && i < 5; ++i) {
    const auto& v = out.report.violations[i];
    msg << "\n  " << v.s << " -> " << v.t << ": need " << v.required << ", have " << v.actual;
  }
  out.message = msg.str();
  out.exit_code = out.report.passed ? 0 : 1;
  return out;
}

}  // namespace streamcert::bench
