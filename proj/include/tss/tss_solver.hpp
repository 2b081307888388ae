#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tss/graph.hpp"
#include "tss/indexed_heap.hpp"
#include "tss/thresholds.hpp"
#include "tss/types.hpp"

namespace tss {

/// Why a vertex left the residual graph.
///   Case1: k(v) = 0, already activated by eliminated neighbors.
///   Case2: delta(v) < k(v), too few residual neighbors, so v is seeded.
///   Case3: v maximizes k/(delta*(delta+1)) and will be activated later.
enum class CaseTag : std::uint8_t { Case1 = 1, Case2 = 2, Case3 = 3 };

inline CaseTag classify(Threshold k, std::size_t delta) {
  if (k == 0) return CaseTag::Case1;
  if (static_cast<Threshold>(delta) < k) return CaseTag::Case2;
  return CaseTag::Case3;
}

struct Elimination {
  Vertex vertex;
  CaseTag tag;

  friend bool operator==(const Elimination&, const Elimination&) = default;
};

/// Common report for every solver in the library.
struct SolverReport {
  VertexSet target_set;  // sorted
  std::vector<Elimination> elimination_order;
  std::array<std::size_t, 3> case_counts{};
  std::chrono::nanoseconds elapsed{0};

  std::size_t size() const noexcept { return target_set.size(); }
  double elapsed_ms() const { return std::chrono::duration<double, std::milli>(elapsed).count(); }
};

/// Live view of the shrinking graph: alive set U, residual degree delta,
/// residual threshold k, and the seeds chosen so far. Residual neighborhoods
/// are implicit (alive neighbors in the input graph).
struct ResidualState {
  std::vector<bool> alive;
  std::vector<std::size_t> delta;
  std::vector<Threshold> k;
  VertexSet seeds;
  std::size_t alive_count = 0;

  ResidualState() = default;
  ResidualState(const Graph& g, const ThresholdAssignment& t)
      : alive(g.num_vertices(), true), delta(g.num_vertices()), k(t.values()), alive_count(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) delta[v] = g.degree(v);
  }
};

struct ConsistencyCheck {
  bool ok = true;
  Vertex offending = 0;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks that every alive vertex's delta equals its degree in the subgraph
/// induced by the alive set, that k is nonnegative, and that no seed is
/// still alive. Reports the first offending vertex.
inline ConsistencyCheck check_residual_consistency(const ResidualState& s, const Graph& g) {
  auto fail = [](Vertex v, std::string why) { return ConsistencyCheck{false, v, std::move(why)}; };
  const std::size_t n = g.num_vertices();
  if (s.alive.size() != n || s.delta.size() != n || s.k.size() != n) return fail(0, "size mismatch");
  std::size_t alive = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!s.alive[v]) continue;
    ++alive;
    std::size_t induced = 0;
    for (Vertex u : g.neighbors(v)) induced += s.alive[u] ? 1 : 0;
    if (induced != s.delta[v]) {
      return fail(v, "delta " + std::to_string(s.delta[v]) + " != induced degree " + std::to_string(induced));
    }
    if (s.k[v] < 0) return fail(v, "negative residual threshold");
  }
  if (alive != s.alive_count) return fail(0, "alive count mismatch");
  for (Vertex v : s.seeds) {
    if (v >= n || s.alive[v]) return fail(v, "seed still in residual graph");
  }
  return {};
}

struct SolveOptions {
  // Runs check_residual_consistency before every iteration (O(n + m) each).
  bool check_residual = false;
};

/// The elimination algorithm, one vertex per step.
///
/// Every alive vertex sits in exactly one of three queues according to
/// classify(k, delta). Selection priority is Case1 > Case2 > Case3 with
/// ties broken as follows:
///   Case1: smallest id.
///   Case2: largest k, then largest id.
///   Case3: largest k/(delta*(delta+1)) compared exactly, then largest k,
///          then largest id.
/// Total cost O(m log n).
class TssSolver {
 public:
  TssSolver(const Graph& g, const ThresholdAssignment& t)
      : g_(g),
        slots_(checked(g, t)),
        alive_count_(g.num_vertices()),
        ready_(g.num_vertices()),
        forced_(g.num_vertices()),
        metric_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) queue_push(v);
  }

  TssSolver(const TssSolver&) = delete;
  TssSolver& operator=(const TssSolver&) = delete;

  bool done() const noexcept { return alive_count_ == 0; }

  /// Snapshot of the residual graph, O(n).
  ResidualState state() const {
    ResidualState s;
    const std::size_t n = slots_.size();
    s.alive.resize(n);
    s.delta.resize(n);
    s.k.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      s.alive[v] = slots_[v].alive;
      s.delta[v] = slots_[v].delta;
      s.k[v] = slots_[v].k;
    }
    s.seeds = seeds_;
    s.alive_count = alive_count_;
    return s;
  }

  /// Eliminates one vertex and returns it with the case that applied.
  Elimination step() {
    if (done()) throw std::logic_error("TssSolver::step on empty residual graph");
    Vertex v;
    CaseTag tag;
    if (!ready_.empty()) {
      v = ready_.pop();
      tag = CaseTag::Case1;
    } else if (!forced_.empty()) {
      v = forced_.pop();
      tag = CaseTag::Case2;
    } else {
      v = metric_.pop();
      tag = CaseTag::Case3;
    }

    slots_[v].alive = false;
    --alive_count_;
    if (tag == CaseTag::Case2) seeds_.push_back(v);

    const auto nbrs = g_.neighbors(v);
    for (Vertex u : nbrs) {
      __builtin_prefetch(&slots_[u]);
      metric_.prefetch(u);
    }
    for (Vertex u : nbrs) {
      Slot& su = slots_[u];
      if (!su.alive) continue;
      if (tag == CaseTag::Case1) {
        su.k = std::max<Threshold>(su.k - 1, 0);
      } else if (tag == CaseTag::Case2) {
        // Case1 vertices are drained first, so every alive k is >= 1 here.
        --su.k;
        if (su.k < 0) throw std::logic_error("residual threshold went negative in Case 2");
      }
      --su.delta;
      reclassify(u);
    }
    return {v, tag};
  }

  SolverReport run(const SolveOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    SolverReport report;
    report.elimination_order.reserve(alive_count_);
    while (!done()) {
      if (opts.check_residual) {
        auto check = check_residual_consistency(state(), g_);
        if (!check) {
          throw std::logic_error("residual state inconsistent at vertex " + std::to_string(check.offending) + ": " +
                                 check.reason);
        }
      }
      Elimination e = step();
      report.elimination_order.push_back(e);
      ++report.case_counts[static_cast<std::size_t>(e.tag) - 1];
    }
    report.target_set = seeds_;
    std::sort(report.target_set.begin(), report.target_set.end());
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return report;
  }

 private:
  // Per-vertex working state packed into one record so a neighbor update
  // touches a single cache line.
  struct Slot {
    Threshold k;
    std::uint32_t delta;
    CaseTag cls;
    bool alive;
  };

  struct NoKey {};

  struct ByLowestId {
    bool operator()(const HeapEntry<NoKey>& a, const HeapEntry<NoKey>& b) const { return a.vertex < b.vertex; }
  };

  struct ByThresholdThenId {
    bool operator()(const HeapEntry<Threshold>& a, const HeapEntry<Threshold>& b) const {
      if (a.key != b.key) return a.key > b.key;
      return a.vertex > b.vertex;
    }
  };

  // Case3 vertices have 1 <= k <= delta < 2^32, so both fit in 32 bits.
  struct MetricKey {
    std::uint32_t k;
    std::uint32_t delta;
  };

  // k_a/(d_a(d_a+1)) > k_b/(d_b(d_b+1)) by cross multiplication.
  struct ByMetric {
    bool operator()(const HeapEntry<MetricKey>& a, const HeapEntry<MetricKey>& b) const {
      using wide = unsigned __int128;
      const wide da = a.key.delta;
      const wide db = b.key.delta;
      const wide lhs = wide{a.key.k} * db * (db + 1);
      const wide rhs = wide{b.key.k} * da * (da + 1);
      if (lhs != rhs) return lhs > rhs;
      if (a.key.k != b.key.k) return a.key.k > b.key.k;
      return a.vertex > b.vertex;
    }
  };

  static std::vector<Slot> checked(const Graph& g, const ThresholdAssignment& t) {
    if (t.size() != g.num_vertices()) {
      throw Error("threshold count " + std::to_string(t.size()) + " does not match vertex count " +
                  std::to_string(g.num_vertices()));
    }
    std::vector<Slot> slots(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const auto d = static_cast<std::uint32_t>(g.degree(v));
      slots[v] = {t[v], d, classify(t[v], d), true};
    }
    return slots;
  }

  MetricKey metric_key(Vertex v) const {
    return {static_cast<std::uint32_t>(slots_[v].k), slots_[v].delta};
  }

  void queue_push(Vertex v) {
    switch (slots_[v].cls) {
      case CaseTag::Case1: ready_.push(v, {}); break;
      case CaseTag::Case2: forced_.push(v, slots_[v].k); break;
      case CaseTag::Case3: metric_.push(v, metric_key(v)); break;
    }
  }

  void reclassify(Vertex u) {
    Slot& su = slots_[u];
    const CaseTag next = classify(su.k, su.delta);
    if (next == su.cls) {
      if (next == CaseTag::Case2) forced_.update(u, su.k);
      if (next == CaseTag::Case3) metric_.update(u, metric_key(u));
      return;
    }
    switch (su.cls) {
      case CaseTag::Case1: ready_.erase(u); break;
      case CaseTag::Case2: forced_.erase(u); break;
      case CaseTag::Case3: metric_.erase(u); break;
    }
    su.cls = next;
    queue_push(u);
  }

  const Graph& g_;
  std::vector<Slot> slots_;
  VertexSet seeds_;
  std::size_t alive_count_;
  IndexedHeap<NoKey, ByLowestId> ready_;
  IndexedHeap<Threshold, ByThresholdThenId> forced_;
  IndexedHeap<MetricKey, ByMetric> metric_;
};

/// Runs the elimination algorithm to completion. The returned target set
/// activates the whole graph.
inline SolverReport tss_solve(const Graph& g, const ThresholdAssignment& t, const SolveOptions& opts = {}) {
  TssSolver solver(g, t);
  return solver.run(opts);
}

}  // namespace tss
