#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "tss/bounds.hpp"
#include "tss/diffusion.hpp"
#include "tss/edge_list.hpp"
#include "tss/generators.hpp"
#include "tss/reference_solvers.hpp"
#include "tss/report.hpp"
#include "tss/thresholds.hpp"
#include "tss/tss_solver.hpp"

namespace tss {

enum class Algorithm { Tss, Greedy, Exact };

inline const char* to_string(Algorithm a) {
  switch (a) {
    case Algorithm::Tss: return "tss";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::Exact: return "exact";
  }
  return "?";
}

inline Algorithm parse_algorithm(const std::string& name) {
  if (name == "tss") return Algorithm::Tss;
  if (name == "greedy") return Algorithm::Greedy;
  if (name == "exact") return Algorithm::Exact;
  throw Error("unknown algorithm '" + name + "' (expected tss, greedy, exact)");
}

/// Runs one algorithm and returns its report. Exact results are wrapped
/// into a SolverReport whose target set is the witness.
inline SolverReport solve_with(Algorithm alg, const Graph& g, const ThresholdAssignment& t) {
  switch (alg) {
    case Algorithm::Tss: return tss_solve(g, t);
    case Algorithm::Greedy: return greedy_tss(g, t);
    case Algorithm::Exact: {
      const auto start = std::chrono::steady_clock::now();
      ExactResult e = exact_solve(g, t);
      SolverReport r;
      r.target_set = std::move(e.witness);
      r.case_counts[1] = r.target_set.size();
      r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
      return r;
    }
  }
  throw Error("unreachable");
}

/// splitmix64 finalizer; derives independent per-task seeds from a master.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) {
  return mix_seed(mix_seed(mix_seed(master ^ mix_seed(a)) ^ b) ^ c);
}

/// Worker count from TSS_THREADS, defaulting to 1.
inline std::size_t threads_from_env() {
  if (const char* env = std::getenv("TSS_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct BenchConfig {
  GraphSource source;
  // gnp sources only; empty means {source.p}.
  std::vector<double> p_sweep;
  std::vector<Threshold> threshold_sweep{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  // ConstantCapped takes its t from threshold_sweep; other policies run once.
  ThresholdPolicy policy = policy::ConstantCapped{};
  std::vector<Algorithm> algorithms{Algorithm::Tss, Algorithm::Greedy};
  std::uint64_t seed = 1;
  std::size_t repetitions = 1;
  bool record_timing = true;
  std::size_t threads = 1;
};

struct BenchRow {
  std::string graph_name;
  std::size_t n = 0;
  std::size_t m = 0;
  std::optional<Threshold> t_param;
  Algorithm algorithm = Algorithm::Tss;
  std::optional<std::size_t> solution_size;
  double bound_new = 0.0;
  double bound_old = 0.0;
  std::optional<double> elapsed_ms;
  std::uint64_t seed = 0;
  std::string error;
};

inline constexpr const char* kBenchCsvHeader =
    "graph_name,n,m,t_param,algorithm,solution_size,bound_new,bound_old,elapsed_ms,seed,error";

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
  out << kBenchCsvHeader << '\n';
  for (const auto& r : rows) {
    out << csv_escape(r.graph_name) << ',' << r.n << ',' << r.m << ',';
    if (r.t_param) out << *r.t_param;
    out << ',' << to_string(r.algorithm) << ',';
    if (r.solution_size) out << *r.solution_size;
    out << ',' << format_decimal(r.bound_new) << ',' << format_decimal(r.bound_old) << ',';
    if (r.elapsed_ms) out << format_decimal(*r.elapsed_ms, 3);
    out << ',' << r.seed << ',' << csv_escape(r.error) << '\n';
  }
}

namespace detail {

struct BenchInstance {
  std::string name;
  std::shared_ptr<const Graph> graph;
  std::uint64_t seed = 0;
};

// Runs fn(i) for i in [0, count) on up to `threads` workers.
inline void parallel_for(std::size_t count, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

}  // namespace detail

/// Sweeps (repetition, p, t, algorithm) and returns one verified row per
/// combination, in that nesting order regardless of thread scheduling.
inline std::vector<BenchRow> run_bench(const BenchConfig& cfg) {
  if (cfg.algorithms.empty()) throw Error("bench needs at least one algorithm");
  const bool constant = std::holds_alternative<policy::ConstantCapped>(cfg.policy);
  if (constant && cfg.threshold_sweep.empty()) throw Error("constant threshold policy needs a non-empty sweep");

  std::vector<detail::BenchInstance> instances;
  std::shared_ptr<const Graph> file_graph;
  if (cfg.source.kind == SourceKind::EdgeListFile) {
    std::ifstream in(cfg.source.path);
    if (!in) throw Error("cannot open edge list '" + cfg.source.path + "'");
    file_graph = std::make_shared<const Graph>(load_edge_list(in).graph);
  }
  std::vector<double> ps = cfg.p_sweep;
  if (ps.empty() || cfg.source.kind != SourceKind::Gnp) ps = {cfg.source.p};

  for (std::size_t rep = 0; rep < cfg.repetitions; ++rep) {
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
      detail::BenchInstance inst;
      inst.seed = derive_seed(cfg.seed, rep, pi);
      if (file_graph) {
        inst.graph = file_graph;
        inst.name = cfg.source.name();
      } else {
        GraphSource src = cfg.source;
        src.p = ps[pi];
        src.seed = inst.seed;
        inst.graph = std::make_shared<const Graph>(generate(src));
        inst.name = src.name();
      }
      instances.push_back(std::move(inst));
    }
  }

  struct Task {
    std::size_t instance;
    std::optional<Threshold> t_param;
    Algorithm algorithm;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    std::vector<std::optional<Threshold>> params;
    if (constant) {
      params.assign(cfg.threshold_sweep.begin(), cfg.threshold_sweep.end());
    } else {
      params.push_back(std::nullopt);
    }
    for (const auto& param : params) {
      for (Algorithm a : cfg.algorithms) tasks.push_back({i, param, a});
    }
  }

  std::vector<BenchRow> rows(tasks.size());
  detail::parallel_for(tasks.size(), cfg.threads, [&](std::size_t ti) {
    const Task& task = tasks[ti];
    const auto& inst = instances[task.instance];
    const Graph& g = *inst.graph;
    BenchRow& row = rows[ti];
    row.graph_name = inst.name;
    row.n = g.num_vertices();
    row.m = g.num_edges();
    row.t_param = task.t_param;
    row.algorithm = task.algorithm;
    row.seed = inst.seed;
    try {
      ThresholdPolicy pol = cfg.policy;
      if (task.t_param) pol = policy::ConstantCapped{*task.t_param};
      // Threshold draws depend on the instance only, so every algorithm
      // sees the same assignment.
      const auto t = assign_thresholds(g, pol, derive_seed(inst.seed, 0x7468u));
      const auto bn = bound_new(g, t);
      const auto bo = bound_old(g, t);
      row.bound_new = bn.decimal;
      row.bound_old = bo.decimal;
      SolverReport r = solve_with(task.algorithm, g, t);
      if (!is_target_set(g, t, r.target_set)) {
        row.error = "verification failed";
        return;
      }
      row.solution_size = r.size();
      if (cfg.record_timing) row.elapsed_ms = r.elapsed_ms();
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return rows;
}

// ---------------------------------------------------------------------------
// Optimality verification on trees, cycles, cliques
// ---------------------------------------------------------------------------

enum class GraphClass { Tree, Cycle, Clique };

inline GraphClass parse_graph_class(const std::string& s) {
  if (s == "tree") return GraphClass::Tree;
  if (s == "cycle") return GraphClass::Cycle;
  if (s == "clique") return GraphClass::Clique;
  throw Error("unknown graph class '" + s + "' (expected tree, cycle, clique)");
}

inline const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "tree";
    case GraphClass::Cycle: return "cycle";
    case GraphClass::Clique: return "clique";
  }
  return "?";
}

struct VerifyInstance {
  Graph graph;
  ThresholdAssignment thresholds;
  std::uint64_t seed = 0;
};

/// Random instance of a class:
///   tree:   uniform labeled tree on [2, n_max] vertices, t uniform in [1, d].
///   cycle:  [3, n_max] vertices; per instance a random non-empty palette
///           from {0, 1, 2, d+1}, each vertex drawing from it.
///   clique: [1, n_max] vertices, t uniform in [1, n+2].
inline VerifyInstance make_verify_instance(GraphClass cls, std::size_t n_max, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  VerifyInstance inst;
  inst.seed = seed;
  switch (cls) {
    case GraphClass::Tree: {
      if (n_max < 2) throw Error("tree verification needs n_max >= 2");
      inst.graph = random_tree(uniform(2, n_max), rng());
      inst.thresholds = assign_thresholds(inst.graph, policy::RandomInDegree{}, rng());
      break;
    }
    case GraphClass::Cycle: {
      if (n_max < 3) throw Error("cycle verification needs n_max >= 3");
      inst.graph = cycle_graph(uniform(3, n_max));
      const std::vector<Threshold> all{0, 1, 2, 3};
      std::vector<Threshold> palette;
      while (palette.empty()) {
        for (Threshold x : all) {
          if (rng() & 1) palette.push_back(x);
        }
      }
      std::vector<Threshold> t(inst.graph.num_vertices());
      for (auto& x : t) x = palette[uniform(0, palette.size() - 1)];
      inst.thresholds = ThresholdAssignment(std::move(t));
      break;
    }
    case GraphClass::Clique: {
      if (n_max < 1) throw Error("clique verification needs n_max >= 1");
      const std::size_t n = uniform(1, n_max);
      inst.graph = clique_graph(n);
      std::vector<Threshold> t(n);
      for (auto& x : t) x = static_cast<Threshold>(uniform(1, n + 2));
      inst.thresholds = ThresholdAssignment(std::move(t));
      break;
    }
  }
  return inst;
}

struct VerifyMismatch {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t tss_size = 0;
  std::size_t exact_size = 0;
  std::optional<std::size_t> closed_form;
  bool tss_valid = true;
};

struct VerifySummary {
  std::size_t instances = 0;
  std::vector<VerifyMismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Compares the elimination algorithm against the exhaustive oracle (and,
/// for cliques, the closed form) on `instances` random instances.
inline VerifySummary run_verify(GraphClass cls, std::size_t n_max, std::size_t instances, std::uint64_t seed) {
  if (n_max > kExactSolverMaxVertices) throw Error("n_max exceeds the exact solver cap");
  VerifySummary summary;
  summary.instances = instances;
  for (std::size_t i = 0; i < instances; ++i) {
    const std::uint64_t s = derive_seed(seed, i);
    VerifyInstance inst = make_verify_instance(cls, n_max, s);
    const auto& g = inst.graph;
    const auto& t = inst.thresholds;
    SolverReport r = tss_solve(g, t);
    ExactResult e = exact_solve(g, t);
    VerifyMismatch mm;
    mm.index = i;
    mm.seed = s;
    mm.n = g.num_vertices();
    mm.tss_size = r.size();
    mm.exact_size = e.optimum_size;
    mm.tss_valid = is_target_set(g, t, r.target_set);
    bool bad = !mm.tss_valid || mm.tss_size != mm.exact_size;
    if (cls == GraphClass::Clique) {
      std::vector<Threshold> sorted = t.values();
      std::sort(sorted.begin(), sorted.end());
      mm.closed_form = clique_optimum(sorted);
      bad = bad || *mm.closed_form != mm.exact_size;
    }
    if (bad) summary.mismatches.push_back(mm);
  }
  return summary;
}

}  // namespace tss
