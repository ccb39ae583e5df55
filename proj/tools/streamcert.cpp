#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "space_expr.hpp"
#include "streamcert/applications.hpp"
#include "streamcert/bench.hpp"
#include "streamcert/cert_k.hpp"
#include "streamcert/cert_one.hpp"
#include "streamcert/congest.hpp"
#include "streamcert/errors.hpp"
#include "streamcert/generators.hpp"
#include "streamcert/graph_io.hpp"
#include "streamcert/hardness.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace streamcert;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Globals {
  std::uint64_t seed = 1;
  std::string out_dir;
  std::string format = "csv";
};

// A small table printed as CSV or as a JSON array of objects.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;

  std::string render(const std::string& format) const {
    std::ostringstream out;
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json obj;
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = r[i];
        arr.push_back(obj);
      }
      out << arr.dump(2) << '\n';
      return out.str();
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        out << (i ? "," : "") << (r[i].is_string() ? r[i].get<std::string>() : r[i].dump());
      }
      out << '\n';
    }
    return out.str();
  }
};

void emit(const Globals& g, const std::string& file, const std::string& text) {
  std::cout << text;
  if (g.out_dir.empty()) return;
  fs::create_directories(g.out_dir);
  std::ofstream(fs::path(g.out_dir) / file) << text;
}

std::string arcs_text(const std::vector<Arc>& arcs) {
  std::ostringstream out;
  for (const Arc& a : arcs) out << a.from << "->" << a.to << ' ';
  std::string s = out.str();
  if (!s.empty()) s.pop_back();
  return s;
}

json stats_json(const StreamStats& st) {
  json v = json::array();
  for (const auto& r : st.violations) v.push_back({{"consumer", r.consumer}, {"words", r.words}, {"budget", r.budget}});
  return {{"passes", st.passes}, {"peak_words", st.peak_words}, {"updates_read", st.updates_read},
          {"violations", v}};
}

json trace_json(const congest::RoundTrace& t) {
  json phases = json::array();
  for (const auto& p : t.phases) phases.push_back({{"name", p.name}, {"rounds", p.rounds}, {"messages", p.messages}});
  return {{"rounds_used", t.rounds_used},     {"messages", t.messages},
          {"max_bits_seen", t.max_bits_seen}, {"virtual_sends", t.virtual_sends},
          {"virtual_late_sends", t.virtual_late_sends}, {"recursion_depth", t.recursion_depth},
          {"rank_resamples", t.rank_resamples}, {"phases", phases}};
}

ArcStream load_stream(const std::string& path, const std::string& model, double noise,
                      std::uint64_t seed) {
  ArcStream s = read_graph_or_stream_file(path);
  if (model == "turn" && s.model == StreamModel::kInsertOnly) {
    s = turnstile_stream(final_multiplicity(s), noise, seed);
  } else if (model == "ins" && s.model == StreamModel::kTurnstile) {
    s = insertion_stream(final_multiplicity(s));
  }
  return s;
}

RecursionPlan make_plan(int passes, StreamModel model, int mp_passes) {
  RecursionPlan plan = RecursionPlan::for_passes(passes, model);
  if (mp_passes > 0 && model == StreamModel::kTurnstile) {
    plan.q = mp_passes;
    plan.depth = 1 + (passes - 1) / mp_passes;
  }
  return plan;
}

std::vector<apps::Clause> read_clauses(const std::string& path, int& vars) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<apps::Clause> clauses;
  vars = 0;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == 'c') continue;
    if (first == "p") {
      std::string cnf;
      int declared = 0;
      if (!(ls >> cnf >> declared)) throw ParseError(number, "malformed problem line");
      vars = std::max(vars, declared);
      continue;
    }
    int a = 0, b = 0;
    try {
      a = std::stoi(first);
    } catch (const std::exception&) {
      throw ParseError(number, "expected a literal, got '" + first + "'");
    }
    if (!(ls >> b)) throw ParseError(number, "a clause needs two literals");
    int tail = 0;
    if (ls >> tail && tail != 0) throw ParseError(number, "a clause has exactly two literals");
    if (a == 0 || b == 0) throw ParseError(number, "literal 0 is not a variable");
    vars = std::max({vars, std::abs(a), std::abs(b)});
    clauses.push_back({a, b});
  }
  return clauses;
}

Digraph gen_graph(const std::string& family, int n, int d, int k, double density,
                  const std::string& bits_arg, std::uint64_t seed, json& meta) {
  std::uint64_t gen_seed = seed;
  std::vector<std::uint8_t> bits;
  if (!bits_arg.empty()) {
    if (fs::exists(bits_arg)) {
      std::ifstream in(bits_arg);
      std::stringstream buf;
      buf << in.rdbuf();
      bits = hardness::bits_from_hex(buf.str());
    } else {
      gen_seed = std::stoull(bits_arg);
    }
  }
  for (const char* h : {"plain", "triangle", "triangle_alpha", "hampath_star", "reach_backedge"}) {
    if (family != h) continue;
    hardness::Instance inst = hardness::generate({hardness::parse_family(family), n, d}, bits, gen_seed);
    meta["source"] = inst.source;
    meta["sink"] = inst.sink;
    return inst.graph;
  }
  return bench::family_graph(family, n, d, k, density, gen_seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Streaming strong-connectivity certificates"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--out-dir", g.out_dir, "Also write outputs into this directory");
  app.add_option("--format", g.format, "Table format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  std::function<int()> action;

  // gen
  std::string family, bits, gen_model = "ins";
  int gen_n = 12, gen_d = 3, gen_k = 2;
  double density = 0.3, noise = 0.2;
  auto* gen = app.add_subcommand("gen", "Generate a graph or stream");
  gen->add_option("--family", family, "plain|triangle|triangle_alpha|hampath_star|reach_backedge|transitive|embedded|tournament|random|strong")->required();
  gen->add_option("--n", gen_n, "Node count")->capture_default_str();
  gen->add_option("--d", gen_d, "Gadget size (alpha for embedded)")->capture_default_str();
  gen->add_option("--k", gen_k, "Arc strength for the strong family")->capture_default_str();
  gen->add_option("--density", density, "Arc probability")->capture_default_str();
  gen->add_option("--bits", bits, "Hex file of gadget bits, or an integer seed");
  gen->add_option("--model", gen_model, "Output model")->check(CLI::IsMember({"ins", "turn"}))->capture_default_str();
  gen->add_option("--noise", noise, "Turnstile churn probability")->capture_default_str();
  gen->callback([&] {
    action = [&] {
      json meta{{"family", family}, {"n", gen_n}, {"d", gen_d}, {"seed", g.seed}};
      Digraph graph = gen_graph(family, gen_n, gen_d, gen_k, density, bits, g.seed, meta);
      std::ostringstream out;
      if (gen_model == "turn") {
        write_stream(out, turnstile_stream(graph, noise, g.seed));
      } else {
        write_graph(out, graph);
      }
      emit(g, "graph.txt", out.str());
      meta["arcs"] = graph.num_arcs();
      std::cerr << meta.dump() << '\n';
      return 0;
    };
  });

  // one
  std::string input, model, strict_space;
  int passes = 1, mp_passes = 0;
  auto* one = app.add_subcommand("one", "Streaming 1-node certificate");
  one->add_option("--input", input, "Graph or stream file")->required();
  one->add_option("--passes", passes, "Pass budget")->capture_default_str();
  one->add_option("--model", model, "Override the stream model")->check(CLI::IsMember({"ins", "turn"}));
  one->add_option("--mp-passes", mp_passes, "Selection passes per level on turnstile streams");
  one->add_option("--noise", noise, "Churn when converting to turnstile")->capture_default_str();
  one->add_option("--strict-space", strict_space, "Word budget expression in n; exceeding it is an error");
  one->callback([&] {
    action = [&] {
      ArcStream s = load_stream(input, model, noise, g.seed);
      OneCertOptions opt;
      if (!strict_space.empty()) {
        opt.strict = true;
        opt.budget = static_cast<std::int64_t>(tools::eval_space_expr(strict_space, s.n));
      }
      OneCertResult r = one_cert_stream(s, make_plan(passes, s.model, mp_passes), opt);
      std::ostringstream out;
      write_graph(out, r.cert.graph);
      emit(g, "certificate.txt", out.str());
      std::cerr << stats_json(r.stats).dump() << '\n';
      return 0;
    };
  });

  // kcert
  int k = 2, r_override = 0;
  double rho = 0.0;
  std::string mode = "node";
  auto* kcert = app.add_subcommand("kcert", "Streaming k-certificate");
  kcert->add_option("--k", k, "Connectivity threshold")->capture_default_str();
  kcert->add_option("--input", input, "Graph or stream file")->required();
  kcert->add_option("--passes", passes, "Passes per 1-certificate run")->capture_default_str();
  kcert->add_option("--mode", mode, "node|arc|peel")->check(CLI::IsMember({"node", "arc", "peel"}))->capture_default_str();
  kcert->add_option("--r", r_override, "Sample count override");
  kcert->add_option("--rho", rho, "Sampling probability (default 1/k)");
  kcert->add_option("--model", model, "Override the stream model")->check(CLI::IsMember({"ins", "turn"}));
  kcert->add_option("--noise", noise, "Churn when converting to turnstile")->capture_default_str();
  kcert->callback([&] {
    action = [&] {
      ArcStream s = load_stream(input, model, noise, g.seed);
      RecursionPlan plan = RecursionPlan::for_passes(passes, s.model);
      SampleScheme scheme{rho, r_override, 8.0, g.seed};
      KCertResult res = mode == "node"  ? k_node_cert(s, k, scheme, plan)
                        : mode == "arc" ? k_arc_cert_sampled(s, k, scheme, plan)
                                        : k_arc_cert_peeling(s, k, plan);
      std::ostringstream out;
      write_graph(out, res.cert.graph);
      emit(g, "certificate.txt", out.str());
      json st = stats_json(res.stats);
      st["samples"] = res.samples;
      std::cerr << st.dump() << '\n';
      return 0;
    };
  });

  // congest
  std::string proto;
  double crho = 0.5;
  int ck = 2;
  auto* cg = app.add_subcommand("congest", "Run a CONGEST protocol");
  cg->add_option("--proto", proto, "kcert|scc|topo")->check(CLI::IsMember({"kcert", "scc", "topo"}))->required();
  cg->add_option("--input", input, "Graph file")->required();
  cg->add_option("--rho", crho, "Sampling probability")->capture_default_str();
  cg->add_option("--k", ck, "Connectivity threshold")->capture_default_str();
  cg->callback([&] {
    action = [&] {
      congest::CongestNetwork net(final_multiplicity(read_graph_or_stream_file(input)));
      Table t;
      congest::RoundTrace trace;
      if (proto == "scc") {
        auto run = congest::congest_scc(net, g.seed);
        t.columns = {"node", "component"};
        for (Node v = 0; v < net.num_nodes(); ++v) t.rows.push_back({v, run.component[v]});
        trace = run.trace;
      } else if (proto == "topo") {
        auto run = congest::congest_toposort(net, g.seed);
        t.columns = {"node", "component", "rank"};
        for (Node v = 0; v < net.num_nodes(); ++v) t.rows.push_back({v, run.component[v], run.rank[v]});
        trace = run.trace;
      } else {
        auto run = congest::congest_k_cert(net, ck, crho, g.seed);
        t.columns = {"node", "memberships", "marked"};
        for (Node v = 0; v < net.num_nodes(); ++v) {
          t.rows.push_back({v, run.memberships[v], arcs_text(run.marks[v])});
        }
        trace = run.trace;
      }
      emit(g, "congest." + g.format, t.render(g.format));
      std::cerr << trace_json(trace).dump() << '\n';
      return 0;
    };
  });

  // verify
  std::string graph_file, cert_file, kind = "node";
  int vk = 1;
  auto* verify = app.add_subcommand("verify", "Check a certificate against the flow oracle");
  verify->add_option("--graph", graph_file, "Graph or stream file")->required();
  verify->add_option("--cert", cert_file, "Certificate file")->required();
  verify->add_option("--k", vk, "Connectivity threshold")->capture_default_str();
  verify->add_option("--kind", kind, "node|arc")->check(CLI::IsMember({"node", "arc"}))->capture_default_str();
  verify->callback([&] {
    action = [&] {
      auto out = bench::verify_all(graph_file, cert_file, vk, kind == "node" ? CertKind::kNode : CertKind::kArc);
      (out.exit_code == 0 ? std::cout : std::cerr) << out.message << '\n';
      return out.exit_code;
    };
  });

  // bench
  bench::BenchConfig bc;
  std::string alg = "one";
  std::vector<std::string> models{"ins"};
  auto* bn = app.add_subcommand("bench", "Space-versus-passes table");
  bn->add_option("--family", bc.family, "transitive|embedded|tournament|random|strong")->capture_default_str();
  bn->add_option("--alg", alg, "one|kcert|peel")->check(CLI::IsMember({"one", "kcert", "peel"}))->capture_default_str();
  bn->add_option("--n", bc.n, "Node count")->capture_default_str();
  bn->add_option("--alphas", bc.alphas, "Component sizes for the embedded family")->delimiter(',');
  bn->add_option("--ks", bc.ks, "Connectivity thresholds")->delimiter(',');
  bn->add_option("--ps", bc.ps, "Pass budgets")->delimiter(',');
  bn->add_option("--models", models, "ins,turn")->delimiter(',');
  bn->add_option("--seeds", bc.seeds, "Seeds (default: --seed)")->delimiter(',');
  bn->add_option("--density", bc.density, "Arc probability")->capture_default_str();
  bn->add_option("--noise", bc.noise, "Turnstile churn probability")->capture_default_str();
  bn->callback([&] {
    action = [&] {
      bc.alg = bench::parse_algorithm(alg);
      bc.models.clear();
      for (const auto& m : models) bc.models.push_back(bench::parse_model(m));
      if (bn->count("--seeds") == 0) bc.seeds = {g.seed};
      auto rows = bench::bench_space_passes(bc);
      Table t;
      t.columns = {"n", "alpha", "k", "p", "model", "peak_words", "passes", "cert_size", "verified", "family", "alg", "seed"};
      for (const auto& r : rows) {
        t.rows.push_back({r.n, r.alpha, r.k, r.p, r.model, r.peak_words, r.passes, r.cert_size,
                          r.verified, r.family, r.alg, r.seed});
      }
      emit(g, "bench." + g.format, t.render(g.format));
      if (!g.out_dir.empty()) {
        json config{{"family", bc.family}, {"alg", alg}, {"n", bc.n}, {"alphas", bc.alphas},
                    {"ks", bc.ks}, {"ps", bc.ps}, {"models", models}, {"seeds", bc.seeds},
                    {"density", bc.density}, {"noise", bc.noise}};
        std::ostringstream hash;
        hash << std::hex << std::hash<std::string>{}(config.dump());
        json manifest{{"tool", "streamcert"}, {"version", kVersion}, {"seeds", bc.seeds},
                      {"config", config}, {"config_hash", hash.str()},
                      {"rows", rows.size()}, {"table", "bench." + g.format}};
        std::ofstream(fs::path(g.out_dir) / "manifest.json") << manifest.dump(2) << '\n';
      }
      return 0;
    };
  });

  // applications
  int app_passes = 1, root = 0, bk = 1, dist = 1;
  bool independent = false;
  auto add_app = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, name == "2sat" ? "Clause file" : "Graph or stream file")->required();
    sub->add_option("--passes", app_passes, "Pass budget for the certificate")->capture_default_str();
    return sub;
  };
  auto one_cert = [&] {
    ArcStream s = read_graph_or_stream_file(input);
    return one_cert_stream(s, RecursionPlan::for_passes(app_passes, s.model)).cert;
  };
  auto k_cert = [&](int kk) {
    ArcStream s = read_graph_or_stream_file(input);
    SampleScheme scheme;
    scheme.seed = g.seed;
    return k_node_cert(s, kk, scheme, RecursionPlan::for_passes(app_passes, s.model)).cert;
  };

  add_app("scc", "Strongly connected components")->callback([&] {
    action = [&] {
      auto res = apps::scc_and_toposort(one_cert());
      Table t{{"node", "component"}, {}};
      for (std::size_t v = 0; v < res.component.size(); ++v) t.rows.push_back({v, res.component[v]});
      emit(g, "scc." + g.format, t.render(g.format));
      return 0;
    };
  });
  add_app("toposort", "Topological ranks of the components")->callback([&] {
    action = [&] {
      auto res = apps::scc_and_toposort(one_cert());
      Table t{{"node", "component", "rank"}, {}};
      for (std::size_t v = 0; v < res.rank.size(); ++v) t.rows.push_back({v, res.component[v], res.rank[v]});
      emit(g, "toposort." + g.format, t.render(g.format));
      return 0;
    };
  });
  add_app("2sat", "2-SAT through the implication graph")->callback([&] {
    action = [&] {
      int vars = 0;
      auto clauses = read_clauses(input, vars);
      auto res = apps::two_sat(clauses, vars);
      if (!res) {
        std::cout << "UNSAT\n";
        return 1;
      }
      Table t{{"var", "value"}, {}};
      for (int v = 0; v < vars; ++v) t.rows.push_back({v + 1, static_cast<bool>((*res)[v])});
      emit(g, "2sat." + g.format, t.render(g.format));
      return 0;
    };
  });
  add_app("mcc", "Minimum chain cover of a DAG")->callback([&] {
    action = [&] {
      ChainCover cc = apps::min_chain_cover_dag(one_cert());
      Table t{{"chain", "nodes"}, {}};
      for (std::size_t i = 0; i < cc.chains.size(); ++i) {
        std::string nodes;
        for (Node v : cc.chains[i]) nodes += (nodes.empty() ? "" : " ") + std::to_string(v);
        t.rows.push_back({i, nodes});
      }
      emit(g, "mcc." + g.format, t.render(g.format));
      return 0;
    };
  });
  add_app("msss", "2-approximate minimum strongly spanning subgraph")->callback([&] {
    action = [&] {
      auto res = apps::msss_2apx(one_cert());
      if (!res) {
        std::cerr << "input is not strongly connected\n";
        return 1;
      }
      std::ostringstream out;
      write_graph(out, *res);
      emit(g, "msss.txt", out.str());
      return 0;
    };
  });
  add_app("bridges", "Strong bridges")->callback([&] {
    action = [&] {
      auto res = apps::strong_bridges(k_cert(2));
      Table t{{"from", "to"}, {}};
      for (const Arc& a : res) t.rows.push_back({a.from, a.to});
      emit(g, "bridges." + g.format, t.render(g.format));
      return 0;
    };
  });
  auto* br = add_app("branchings", "Arc-disjoint or independent out-branchings");
  br->add_option("--root", root, "Root node")->capture_default_str();
  br->add_option("--k", bk, "Number of arc-disjoint branchings")->capture_default_str();
  br->add_flag("--independent", independent, "Two branchings with internally disjoint root paths");
  br->callback([&] {
    action = [&] {
      std::vector<Branching> found;
      if (independent) {
        auto pair = apps::independent_branchings_2(k_cert(2), root);
        if (!pair) {
          std::cerr << "no independent pair\n";
          return 1;
        }
        found = {pair->first, pair->second};
      } else {
        found = apps::arc_disjoint_out_branchings(bk == 1 ? one_cert() : k_cert(bk), root, bk);
      }
      Table t{{"branching", "arcs"}, {}};
      for (std::size_t i = 0; i < found.size(); ++i) t.rows.push_back({i, arcs_text(found[i].arcs)});
      emit(g, "branchings." + g.format, t.render(g.format));
      return 0;
    };
  });
  auto* ds = add_app("domset", "Distance-d dominating set");
  ds->add_option("--d", dist, "Distance")->capture_default_str();
  ds->callback([&] {
    action = [&] {
      auto res = apps::distance_d_dominating(one_cert(), dist);
      Table t{{"node"}, {}};
      for (Node v : res) t.rows.push_back({v});
      emit(g, "domset." + g.format, t.render(g.format));
      return 0;
    };
  });
  add_app("tc", "Transitive closure")->callback([&] {
    action = [&] {
      std::ostringstream out;
      write_graph(out, apps::transitive_closure_from_cert(one_cert()));
      emit(g, "closure.txt", out.str());
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return action ? action() : 0;
  } catch (const BudgetViolation& e) {
    std::cerr << "space budget exceeded: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
