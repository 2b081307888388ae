#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tss/graph.hpp"
#include "tss/indexed_heap.hpp"
#include "tss/thresholds.hpp"
#include "tss/tss_solver.hpp"
#include "tss/types.hpp"

namespace tss {

// ---------------------------------------------------------------------------
// Greedy baseline
// ---------------------------------------------------------------------------

/// Greedy max-degree seeding. Each round takes the alive vertex of minimum
/// residual threshold; if that threshold is positive the vertex of maximum
/// residual degree is seeded instead. The chosen vertex then influences its
/// alive neighbors (k <- max(0, k-1)) and leaves the graph.
///
/// Ties: smallest id for the min-threshold pick, largest id for the
/// max-degree pick. Case tags in the report: Case1 for zero-threshold
/// removals, Case2 for seeds.
inline SolverReport greedy_tss(const Graph& g, const ThresholdAssignment& t) {
  if (t.size() != g.num_vertices()) throw Error("threshold count does not match vertex count");
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = g.num_vertices();
  ResidualState s(g, t);

  struct MinThreshold {
    bool operator()(const HeapEntry<Threshold>& a, const HeapEntry<Threshold>& b) const {
      if (a.key != b.key) return a.key < b.key;
      return a.vertex < b.vertex;
    }
  };
  struct MaxDegree {
    bool operator()(const HeapEntry<std::size_t>& a, const HeapEntry<std::size_t>& b) const {
      if (a.key != b.key) return a.key > b.key;
      return a.vertex > b.vertex;
    }
  };
  IndexedHeap<Threshold, MinThreshold> by_threshold(n);
  IndexedHeap<std::size_t, MaxDegree> by_degree(n);
  for (Vertex v = 0; v < n; ++v) {
    by_threshold.push(v, s.k[v]);
    by_degree.push(v, s.delta[v]);
  }

  SolverReport report;
  while (s.alive_count > 0) {
    Vertex v = by_threshold.top();
    CaseTag tag = CaseTag::Case1;
    if (s.k[v] > 0) {
      v = by_degree.top();
      s.seeds.push_back(v);
      tag = CaseTag::Case2;
    }
    by_threshold.erase(v);
    by_degree.erase(v);
    s.alive[v] = false;
    --s.alive_count;
    for (Vertex u : g.neighbors(v)) {
      if (!s.alive[u]) continue;
      s.k[u] = std::max<Threshold>(0, s.k[u] - 1);
      --s.delta[u];
      by_threshold.update(u, s.k[u]);
      by_degree.update(u, s.delta[u]);
    }
    report.elimination_order.push_back({v, tag});
    ++report.case_counts[static_cast<std::size_t>(tag) - 1];
  }
  report.target_set = std::move(s.seeds);
  std::sort(report.target_set.begin(), report.target_set.end());
  report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return report;
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

inline constexpr std::size_t kExactSolverMaxVertices = 64;

struct ExactResult {
  bool found = false;  // false: optimum exceeds the budget
  std::size_t optimum_size = 0;
  VertexSet witness;
  std::uint64_t subsets_examined = 0;
};

namespace detail {

class BitsetClosure {
 public:
  BitsetClosure(const Graph& g, const ThresholdAssignment& t) : n_(g.num_vertices()), adj_(n_, 0), t_(t.values()) {
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex u : g.neighbors(v)) adj_[v] |= bit(u);
    }
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << v; }
  std::uint64_t full() const noexcept { return full_; }

  // Closure of `active` after adding the vertices in `added`.
  std::uint64_t extend(std::uint64_t active, std::uint64_t added) const {
    std::uint64_t fresh = added & ~active;
    active |= fresh;
    while (fresh) {
      std::uint64_t frontier = 0;
      for (std::uint64_t f = fresh; f; f &= f - 1) frontier |= adj_[std::countr_zero(f)];
      frontier &= ~active;
      fresh = 0;
      for (std::uint64_t c = frontier; c; c &= c - 1) {
        const int u = std::countr_zero(c);
        if (std::popcount(adj_[u] & active) >= t_[u]) fresh |= bit(static_cast<Vertex>(u));
      }
      active |= fresh;
    }
    return active;
  }

  // Closure from the seeds alone, including zero-threshold vertices.
  std::uint64_t closure(std::uint64_t seeds) const {
    std::uint64_t zero = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (t_[v] == 0) zero |= bit(v);
    }
    return extend(extend(0, seeds), zero);
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<Threshold> t_;
  std::uint64_t full_ = 0;
};

}  // namespace detail

/// Minimum target set by exhaustive search over seed sets of increasing
/// size, lexicographic within a size. The first size with a hit is optimal
/// because supersets of target sets are target sets.
///
/// Search-space reductions that keep the result exact: vertices with
/// t(v) > d(v) are in every target set; zero-threshold vertices are never
/// needed; a candidate already inside the closure of the partial set is
/// skipped, since adding it cannot change the closure.
inline ExactResult exact_solve(const Graph& g, const ThresholdAssignment& t, std::size_t budget) {
  const std::size_t n = g.num_vertices();
  if (n > kExactSolverMaxVertices) throw Error("instance too large for exact solver");
  if (t.size() != n) throw Error("threshold count does not match vertex count");
  budget = std::min(budget, n);

  detail::BitsetClosure closure(g, t);
  std::uint64_t forced = 0;
  std::vector<Vertex> candidates;
  for (Vertex v = 0; v < n; ++v) {
    if (t[v] > static_cast<Threshold>(g.degree(v))) {
      forced |= detail::BitsetClosure::bit(v);
    } else if (t[v] > 0) {
      candidates.push_back(v);
    }
  }

  ExactResult result;
  const auto forced_count = static_cast<std::size_t>(std::popcount(forced));
  if (forced_count > budget) return result;
  const std::uint64_t base = closure.closure(forced);

  std::vector<Vertex> chosen;
  auto search = [&](auto&& self, std::size_t from, std::size_t remaining, std::uint64_t active) -> bool {
    if (remaining == 0) {
      ++result.subsets_examined;
      return active == closure.full();
    }
    for (std::size_t i = from; i + remaining <= candidates.size(); ++i) {
      const Vertex c = candidates[i];
      const std::uint64_t b = detail::BitsetClosure::bit(c);
      if (active & b) continue;
      chosen.push_back(c);
      if (self(self, i + 1, remaining - 1, closure.extend(active, b))) return true;
      chosen.pop_back();
    }
    return false;
  };

  for (std::size_t extra = 0; forced_count + extra <= budget; ++extra) {
    chosen.clear();
    if (search(search, 0, extra, base)) {
      result.found = true;
      result.optimum_size = forced_count + extra;
      for (Vertex v = 0; v < n; ++v) {
        if (forced & detail::BitsetClosure::bit(v)) result.witness.push_back(v);
      }
      result.witness.insert(result.witness.end(), chosen.begin(), chosen.end());
      std::sort(result.witness.begin(), result.witness.end());
      return result;
    }
  }
  return result;
}

inline ExactResult exact_solve(const Graph& g, const ThresholdAssignment& t) {
  return exact_solve(g, t, g.num_vertices());
}

// ---------------------------------------------------------------------------
// Clique closed form
// ---------------------------------------------------------------------------

/// Minimum target-set size of the n-clique with nondecreasing thresholds
/// t_1 <= ... <= t_n: with m = |{j : t_j >= n}|,
///   m + max over 1 <= j <= n-m of max(t_j - m - j + 1, 0).
inline std::size_t clique_optimum(std::span<const Threshold> sorted) {
  if (!std::is_sorted(sorted.begin(), sorted.end())) {
    throw Error("clique_optimum requires thresholds in nondecreasing order");
  }
  const auto n = static_cast<Threshold>(sorted.size());
  Threshold m = 0;
  for (Threshold x : sorted) m += x >= n ? 1 : 0;
  Threshold best = 0;
  for (Threshold j = 1; j <= n - m; ++j) {
    best = std::max(best, sorted[static_cast<std::size_t>(j - 1)] - m - j + 1);
  }
  return static_cast<std::size_t>(m + best);
}

inline std::size_t clique_optimum(std::span<const Threshold> sorted, std::size_t n) {
  if (sorted.size() != n) throw Error("clique_optimum: threshold list length differs from n");
  return clique_optimum(sorted);
}

}  // namespace tss
