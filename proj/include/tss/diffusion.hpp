#pragma once

#include <algorithm>
#include <deque>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tss/edge_list.hpp"
#include "tss/graph.hpp"
#include "tss/thresholds.hpp"
#include "tss/types.hpp"

namespace tss {

/// Result of a synchronous activation process.
///
/// rounds[0] is the (deduplicated, sorted) seed set and rounds[l] holds the
/// vertices activated exactly at round l. The last entry is never empty
/// unless it is round 0. converged_round is the smallest l with
/// Active[S,l] = Active[S,l+1].
struct ActivationTrace {
  std::vector<VertexSet> rounds;
  std::vector<bool> active;
  std::size_t active_count = 0;
  std::size_t converged_round = 0;

  bool all_active() const noexcept { return active_count == active.size(); }

  VertexSet active_set() const {
    VertexSet out;
    for (Vertex v = 0; v < active.size(); ++v) {
      if (active[v]) out.push_back(v);
    }
    return out;
  }
};

namespace detail {

inline void check_inputs(const Graph& g, const ThresholdAssignment& t, std::span<const Vertex> seeds) {
  if (t.size() != g.num_vertices()) {
    throw Error("threshold count " + std::to_string(t.size()) + " does not match vertex count " +
                std::to_string(g.num_vertices()));
  }
  for (Vertex s : seeds) {
    if (s >= g.num_vertices()) throw Error("seed id " + std::to_string(s) + " out of range");
  }
}

}  // namespace detail

/// Runs the synchronous round process: a vertex outside Active[S,l-1] joins
/// at round l iff it has at least t(u) neighbors in Active[S,l-1]. Rounds
/// are processed as waves with per-vertex hit counters, O(n + m) total.
inline ActivationTrace run_activation(const Graph& g, const ThresholdAssignment& t, std::span<const Vertex> seeds) {
  detail::check_inputs(g, t, seeds);
  const std::size_t n = g.num_vertices();

  ActivationTrace trace;
  trace.active.assign(n, false);

  VertexSet wave;
  for (Vertex s : seeds) {
    if (!trace.active[s]) {
      trace.active[s] = true;
      wave.push_back(s);
    }
  }
  std::sort(wave.begin(), wave.end());
  trace.active_count = wave.size();
  trace.rounds.push_back(wave);

  // Zero-threshold vertices need no active neighbor and join at round 1.
  VertexSet next;
  for (Vertex v = 0; v < n; ++v) {
    if (!trace.active[v] && t[v] == 0) next.push_back(v);
  }

  std::vector<Threshold> hits(n, 0);
  while (true) {
    for (Vertex v : wave) {
      for (Vertex u : g.neighbors(v)) {
        if (trace.active[u]) continue;
        if (++hits[u] == t[u]) next.push_back(u);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    for (Vertex u : next) trace.active[u] = true;
    trace.active_count += next.size();
    trace.rounds.push_back(next);
    wave = std::move(next);
    next.clear();
  }
  trace.converged_round = trace.rounds.size() - 1;
  return trace;
}

inline ActivationTrace run_activation(const Graph& g, const ThresholdAssignment& t, const VertexSet& seeds) {
  return run_activation(g, t, std::span<const Vertex>(seeds));
}

/// Order-free closure: repeatedly activates any vertex whose active
/// neighbor count reaches its threshold, in FIFO worklist order. Gives the
/// same final set as the synchronous process, without round labels.
inline std::vector<bool> activation_closure(const Graph& g, const ThresholdAssignment& t, std::span<const Vertex> seeds) {
  detail::check_inputs(g, t, seeds);
  const std::size_t n = g.num_vertices();
  std::vector<bool> active(n, false);
  std::vector<Threshold> missing(t.values());
  std::deque<Vertex> work;
  auto activate = [&](Vertex v) {
    active[v] = true;
    work.push_back(v);
  };
  for (Vertex s : seeds) {
    if (!active[s]) activate(s);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!active[v] && missing[v] <= 0) activate(v);
  }
  while (!work.empty()) {
    Vertex v = work.front();
    work.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (!active[u] && --missing[u] <= 0) activate(u);
    }
  }
  return active;
}

inline bool is_target_set(const Graph& g, const ThresholdAssignment& t, std::span<const Vertex> seeds) {
  return run_activation(g, t, seeds).all_active();
}

inline bool is_target_set(const Graph& g, const ThresholdAssignment& t, const VertexSet& seeds) {
  return is_target_set(g, t, std::span<const Vertex>(seeds));
}

/// One line per round: "round_index: sorted vertex ids".
inline void write_trace(std::ostream& out, const ActivationTrace& trace, const IdMap* ids = nullptr) {
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    out << r << ':';
    if (ids) {
      std::vector<std::int64_t> ext;
      for (Vertex v : trace.rounds[r]) ext.push_back(ids->external(v));
      std::sort(ext.begin(), ext.end());
      for (auto e : ext) out << ' ' << e;
    } else {
      for (Vertex v : trace.rounds[r]) out << ' ' << v;
    }
    out << '\n';
  }
}

}  // namespace tss
