#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tss/graph.hpp"
#include "tss/thresholds.hpp"
#include "tss/tss_solver.hpp"

namespace tss {

using Rational = boost::multiprecision::cpp_rational;

/// Exact value of a bound plus a double for display.
struct BoundValue {
  Rational exact;
  double decimal = 0.0;
};

namespace detail {

// Sums terms min(1, num/den). Terms are bucketed by denominator so the
// rational arithmetic touches each distinct denominator once.
class FractionSum {
 public:
  void add_capped(Threshold num, std::int64_t den) {
    if (num >= den) {
      buckets_[1] += 1;
    } else if (num > 0) {
      buckets_[den] += num;
    }
  }

  BoundValue value() const {
    Rational total = 0;
    for (const auto& [den, num] : buckets_) {
      Rational term(num);
      term /= den;
      total += term;
    }
    return {total, total.convert_to<double>()};
  }

 private:
  std::map<std::int64_t, std::int64_t> buckets_;
};

}  // namespace detail

/// Sum of min(1, t(v)/(d(v)+1)) over all vertices.
inline BoundValue bound_old(const Graph& g, const ThresholdAssignment& t) {
  detail::FractionSum sum;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    sum.add_capped(t[v], static_cast<std::int64_t>(g.degree(v)) + 1);
  }
  return sum.value();
}

/// A vertex counts toward the refined bound unless it has degree <= 1 and
/// threshold exactly 1.
inline bool counts_in_refined_bound(const Graph& g, const ThresholdAssignment& t, Vertex v) {
  return g.degree(v) >= 2 || t[v] != 1;
}

/// Refined bound: sum over counted vertices of min(1, t(v)/(d2(v)+1)), where
/// d2(v) is the number of counted neighbors of v.
inline BoundValue bound_new(const Graph& g, const ThresholdAssignment& t) {
  detail::FractionSum sum;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!counts_in_refined_bound(g, t, v)) continue;
    std::int64_t d2 = 0;
    for (Vertex u : g.neighbors(v)) d2 += counts_in_refined_bound(g, t, u) ? 1 : 0;
    sum.add_capped(t[v], d2 + 1);
  }
  return sum.value();
}

struct BoundReport {
  BoundValue bound_new;
  BoundValue bound_old;
  std::size_t v2_size = 0;
  // Every connected component has at least 3 vertices.
  bool applicable = false;
  std::size_t tss_size = 0;
  bool dominance_holds = false;        // bound_new <= bound_old
  bool solver_within_bound = false;    // tss_size <= bound_new
};

/// Evaluates both bounds and the solver size on (g, t). Callers decide what
/// to assert; the refined bound's guarantee covers applicable graphs only.
inline BoundReport check_bound_dominance(const Graph& g, const ThresholdAssignment& t) {
  BoundReport r;
  r.bound_new = bound_new(g, t);
  r.bound_old = bound_old(g, t);
  for (Vertex v = 0; v < g.num_vertices(); ++v) r.v2_size += g.degree(v) >= 2 ? 1 : 0;
  const auto comps = connected_components(g);
  r.applicable = g.num_vertices() > 0;
  for (std::size_t size : comps.sizes) r.applicable = r.applicable && size >= 3;
  r.tss_size = tss_solve(g, t).size();
  r.dominance_holds = r.bound_new.exact <= r.bound_old.exact;
  r.solver_within_bound = Rational(static_cast<long long>(r.tss_size)) <= r.bound_new.exact;
  return r;
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace tss
