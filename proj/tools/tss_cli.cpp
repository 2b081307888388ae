// Command-line front end: solve, bench, verify, bound, gen.

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tss/tss.hpp"

namespace {

constexpr int kExitInputError = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitBug = 3;

struct GraphArgs {
  std::string edges;
  std::string gen;
};

struct ThresholdArgs {
  std::string policy;
  std::string list;
  std::string file;
};

void add_graph_options(CLI::App* cmd, GraphArgs& g) {
  auto* edges = cmd->add_option("--edges", g.edges, "Edge-list file (whitespace-separated pairs)");
  auto* gen = cmd->add_option("--gen", g.gen, "Generator: gnp:N:P[:SEED] tree:N[:SEED] cycle:N clique:N star:N");
  edges->excludes(gen);
  gen->excludes(edges);
}

void add_threshold_options(CLI::App* cmd, ThresholdArgs& t) {
  cmd->add_option("--policy", t.policy, "constant:T | random | degree | center:T");
  cmd->add_option("--thresholds", t.list, "Explicit comma-separated thresholds, one per vertex");
  cmd->add_option("--threshold-file", t.file, "File of 'vertex_id threshold' lines");
}

tss::LoadedGraph load_graph(const GraphArgs& args, std::uint64_t seed) {
  if (!args.edges.empty()) {
    std::ifstream in(args.edges);
    if (!in) throw tss::Error("cannot open edge list '" + args.edges + "'");
    return tss::load_edge_list(in);
  }
  if (!args.gen.empty()) {
    auto src = tss::parse_generator_spec(args.gen, seed);
    tss::Graph g = tss::generate(src);
    const std::size_t n = g.num_vertices();
    return {std::move(g), tss::IdMap::identity(n)};
  }
  throw tss::Error("one of --edges or --gen is required");
}

std::vector<tss::Threshold> parse_int_list(const std::string& text) {
  std::vector<tss::Threshold> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      std::size_t pos = 0;
      long long v = std::stoll(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw tss::Error("bad integer '" + tok + "' in list '" + text + "'");
    }
  }
  return out;
}

// "A..B" or "a,b,c".
std::vector<tss::Threshold> parse_sweep(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) return parse_int_list(text);
  auto lo = parse_int_list(text.substr(0, dots));
  auto hi = parse_int_list(text.substr(dots + 2));
  if (lo.size() != 1 || hi.size() != 1 || lo[0] > hi[0]) throw tss::Error("bad range '" + text + "'");
  std::vector<tss::Threshold> out;
  for (auto x = lo[0]; x <= hi[0]; ++x) out.push_back(x);
  return out;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      out.push_back(std::stod(tok));
    } catch (const std::exception&) {
      throw tss::Error("bad number '" + tok + "'");
    }
  }
  return out;
}

tss::ThresholdPolicy parse_policy(const std::string& text) {
  static const std::regex center_alias(R"(explicit-center\(t=(\d+)\))");
  std::smatch match;
  if (std::regex_match(text, match, center_alias)) return tss::policy::Center{std::stoll(match[1].str())};
  auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto need_int = [&]() {
    auto v = parse_int_list(arg);
    if (v.size() != 1) throw tss::Error("policy '" + name + "' needs one integer argument");
    return v[0];
  };
  if (name == "constant") return tss::policy::ConstantCapped{need_int()};
  if (name == "random") return tss::policy::RandomInDegree{};
  if (name == "degree") return tss::policy::Degree{};
  if (name == "center") return tss::policy::Center{need_int()};
  throw tss::Error("unknown threshold policy '" + text + "'");
}

tss::ThresholdPolicy resolve_policy(const ThresholdArgs& args, const tss::LoadedGraph& lg) {
  const int given = !args.policy.empty() + !args.list.empty() + !args.file.empty();
  if (given > 1) throw tss::Error("use only one of --policy, --thresholds, --threshold-file");
  if (!args.list.empty()) return tss::policy::Explicit{tss::ThresholdAssignment(parse_int_list(args.list))};
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw tss::Error("cannot open threshold file '" + args.file + "'");
    return tss::policy::Explicit{tss::load_threshold_file(in, lg.ids)};
  }
  if (!args.policy.empty()) return parse_policy(args.policy);
  return tss::policy::ConstantCapped{1};
}

int cmd_solve(const GraphArgs& ga, const ThresholdArgs& ta, const std::string& alg_name, std::uint64_t seed,
              bool order, bool trace) {
  auto lg = load_graph(ga, seed);
  auto t = tss::assign_thresholds(lg.graph, resolve_policy(ta, lg), seed);
  auto alg = tss::parse_algorithm(alg_name);
  tss::SolverReport r = tss::solve_with(alg, lg.graph, t);
  auto activation = tss::run_activation(lg.graph, t, r.target_set);
  if (!activation.all_active()) {
    std::cerr << "BUG: " << alg_name << " returned a set that does not activate the graph (" << activation.active_count
              << " of " << lg.graph.num_vertices() << " active)\n";
    return kExitBug;
  }
  std::cout << "algorithm=" << alg_name << '\n';
  std::cout << "n=" << lg.graph.num_vertices() << '\n' << "m=" << lg.graph.num_edges() << '\n';
  tss::write_report(std::cout, r, &lg.ids, order);
  if (trace) tss::write_trace(std::cout, activation, &lg.ids);
  return 0;
}

int cmd_bound(const GraphArgs& ga, const ThresholdArgs& ta, std::uint64_t seed, bool exact) {
  auto lg = load_graph(ga, seed);
  auto t = tss::assign_thresholds(lg.graph, resolve_policy(ta, lg), seed);
  auto b = tss::check_bound_dominance(lg.graph, t);
  if (exact) {
    tss::write_bound_csv_header(std::cout);
    std::cout << b.bound_new.exact.str() << ',' << b.bound_old.exact.str() << ',' << b.tss_size << ','
              << (b.applicable ? "true" : "false") << '\n';
  } else {
    tss::write_bound_csv_header(std::cout);
    tss::write_bound_csv_row(std::cout, b);
  }
  if (!b.dominance_holds || (b.applicable && !b.solver_within_bound)) {
    std::cerr << "BUG: bound relation violated (dominance=" << b.dominance_holds
              << ", within=" << b.solver_within_bound << ")\n";
    return kExitBug;
  }
  return 0;
}

int cmd_gen(const std::string& spec, std::uint64_t seed, const std::string& out_path) {
  auto src = tss::parse_generator_spec(spec, seed);
  auto g = tss::generate(src);
  if (out_path.empty() || out_path == "-") {
    tss::write_edge_list(std::cout, g);
  } else {
    std::ofstream out(out_path);
    if (!out) throw tss::Error("cannot write '" + out_path + "'");
    tss::write_edge_list(out, g);
  }
  return 0;
}

int cmd_verify(const std::string& cls, std::size_t n_max, std::size_t instances, std::uint64_t seed) {
  auto summary = tss::run_verify(tss::parse_graph_class(cls), n_max, instances, seed);
  std::cout << "class=" << cls << " n_max=" << n_max << " instances=" << summary.instances
            << " mismatches=" << summary.mismatches.size() << '\n';
  for (const auto& mm : summary.mismatches) {
    std::cout << "mismatch index=" << mm.index << " seed=" << mm.seed << " n=" << mm.n << " tss=" << mm.tss_size
              << " exact=" << mm.exact_size;
    if (mm.closed_form) std::cout << " closed_form=" << *mm.closed_form;
    if (!mm.tss_valid) std::cout << " tss_invalid";
    std::cout << '\n';
  }
  std::cout << (summary.ok() ? "PASS" : "FAIL") << '\n';
  return summary.ok() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Target set selection under the linear-threshold model"};
  app.require_subcommand(1);
  app.fallthrough();
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for every random choice")->capture_default_str();

  GraphArgs solve_graph;
  ThresholdArgs solve_thresholds;
  std::string solve_alg = "tss";
  bool solve_order = false;
  bool solve_trace = false;
  auto* solve = app.add_subcommand("solve", "Find a target set and print the report");
  add_graph_options(solve, solve_graph);
  add_threshold_options(solve, solve_thresholds);
  solve->add_option("--alg", solve_alg, "tss | greedy | exact")->capture_default_str();
  solve->add_flag("--order", solve_order, "Also print the elimination order (vertex:case)");
  solve->add_flag("--trace", solve_trace, "Also print the activation rounds of the result");

  GraphArgs bench_graph;
  ThresholdArgs bench_thresholds;
  std::string bench_algs = "tss,greedy";
  std::string bench_sweep = "1..10";
  std::string bench_p;
  std::string bench_out;
  std::size_t bench_reps = 1;
  bool bench_no_timing = false;
  std::size_t bench_threads = tss::threads_from_env();
  auto* bench = app.add_subcommand("bench", "Threshold sweep benchmark, CSV output");
  add_graph_options(bench, bench_graph);
  bench->add_option("--policy", bench_thresholds.policy, "constant (swept) | random | degree | center:T");
  bench->add_option("--alg", bench_algs, "Comma-separated algorithms")->capture_default_str();
  bench->add_option("--sweep", bench_sweep, "Threshold values for the constant policy, 'A..B' or list")
      ->capture_default_str();
  bench->add_option("--p-sweep", bench_p, "Comma-separated edge probabilities (gnp only)");
  bench->add_option("--reps", bench_reps, "Repetitions")->capture_default_str();
  bench->add_option("--out", bench_out, "CSV output file (default stdout)");
  bench->add_flag("--no-timing", bench_no_timing, "Leave elapsed_ms empty for byte-stable output");
  bench->add_option("--threads", bench_threads, "Worker threads (default $TSS_THREADS or 1)");

  std::string verify_class;
  std::size_t verify_n_max = 12;
  std::size_t verify_instances = 200;
  auto* verify = app.add_subcommand("verify", "Compare against the exact oracle on trees, cycles or cliques");
  verify->add_option("--class", verify_class, "tree | cycle | clique")->required();
  verify->add_option("--n-max", verify_n_max, "Largest instance size")->capture_default_str();
  verify->add_option("--instances", verify_instances, "Number of random instances")->capture_default_str();

  GraphArgs bound_graph;
  ThresholdArgs bound_thresholds;
  bool bound_exact = false;
  auto* bound = app.add_subcommand("bound", "Evaluate both upper bounds and the solver size");
  add_graph_options(bound, bound_graph);
  add_threshold_options(bound, bound_thresholds);
  bound->add_flag("--exact", bound_exact, "Print exact rationals instead of decimals");

  std::string gen_spec;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("spec", gen_spec, "gnp:N:P[:SEED] tree:N[:SEED] cycle:N clique:N star:N")->required();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) return cmd_solve(solve_graph, solve_thresholds, solve_alg, seed, solve_order, solve_trace);
    if (*bound) return cmd_bound(bound_graph, bound_thresholds, seed, bound_exact);
    if (*gen) return cmd_gen(gen_spec, seed, gen_out);
    if (*verify) return cmd_verify(verify_class, verify_n_max, verify_instances, seed);
    if (*bench) {
      tss::BenchConfig cfg;
      if (!bench_graph.edges.empty()) {
        cfg.source.kind = tss::SourceKind::EdgeListFile;
        cfg.source.path = bench_graph.edges;
      } else if (!bench_graph.gen.empty()) {
        cfg.source = tss::parse_generator_spec(bench_graph.gen, seed);
      } else {
        throw tss::Error("one of --edges or --gen is required");
      }
      cfg.policy = bench_thresholds.policy.empty() || bench_thresholds.policy == "constant"
                       ? tss::ThresholdPolicy{tss::policy::ConstantCapped{}}
                       : parse_policy(bench_thresholds.policy);
      cfg.threshold_sweep = parse_sweep(bench_sweep);
      if (!bench_p.empty()) cfg.p_sweep = parse_double_list(bench_p);
      cfg.algorithms.clear();
      std::stringstream ss(bench_algs);
      for (std::string a; std::getline(ss, a, ',');) cfg.algorithms.push_back(tss::parse_algorithm(a));
      cfg.seed = seed;
      cfg.repetitions = bench_reps;
      cfg.record_timing = !bench_no_timing;
      cfg.threads = bench_threads;
      auto rows = tss::run_bench(cfg);
      if (bench_out.empty() || bench_out == "-") {
        tss::write_bench_csv(std::cout, rows);
      } else {
        std::ofstream out(bench_out);
        if (!out) throw tss::Error("cannot write '" + bench_out + "'");
        tss::write_bench_csv(out, rows);
      }
      return 0;
    }
  } catch (const tss::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return 0;
}
