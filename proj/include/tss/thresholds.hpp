#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <random>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "tss/edge_list.hpp"
#include "tss/graph.hpp"
#include "tss/types.hpp"

namespace tss {

/// Per-vertex nonnegative thresholds t(v), indexed by internal vertex id.
class ThresholdAssignment {
 public:
  ThresholdAssignment() = default;

  explicit ThresholdAssignment(std::vector<Threshold> values) : t_(std::move(values)) {
    for (std::size_t v = 0; v < t_.size(); ++v) {
      if (t_[v] < 0) {
        throw Error("negative threshold " + std::to_string(t_[v]) + " for vertex " + std::to_string(v));
      }
    }
  }

  Threshold operator[](Vertex v) const { return t_[v]; }
  std::size_t size() const noexcept { return t_.size(); }
  const std::vector<Threshold>& values() const noexcept { return t_; }

  friend bool operator==(const ThresholdAssignment&, const ThresholdAssignment&) = default;

 private:
  std::vector<Threshold> t_;
};

namespace policy {

/// t(v) = min(t, d(v)); isolated vertices get 0.
struct ConstantCapped {
  Threshold t = 1;
};

/// t(v) uniform in [1, d(v)]; isolated vertices get 0.
struct RandomInDegree {};

/// t(v) = d(v): every target set is then a vertex cover.
struct Degree {};

/// Vertex 0 gets `center`, every other vertex 1. Matches the star examples.
struct Center {
  Threshold center = 1;
};

struct Explicit {
  ThresholdAssignment thresholds;
};

}  // namespace policy

using ThresholdPolicy =
    std::variant<policy::ConstantCapped, policy::RandomInDegree, policy::Degree, policy::Center, policy::Explicit>;

inline ThresholdAssignment assign_thresholds(const Graph& g, const ThresholdPolicy& p, std::uint64_t seed = 0) {
  const std::size_t n = g.num_vertices();
  std::vector<Threshold> t(n, 0);
  std::visit(
      [&](const auto& pol) {
        using P = std::decay_t<decltype(pol)>;
        if constexpr (std::is_same_v<P, policy::ConstantCapped>) {
          if (pol.t < 1) throw Error("constant threshold must be >= 1, got " + std::to_string(pol.t));
          for (Vertex v = 0; v < n; ++v) t[v] = std::min<Threshold>(pol.t, static_cast<Threshold>(g.degree(v)));
        } else if constexpr (std::is_same_v<P, policy::RandomInDegree>) {
          std::mt19937_64 rng(seed);
          for (Vertex v = 0; v < n; ++v) {
            const auto d = static_cast<Threshold>(g.degree(v));
            if (d == 0) continue;
            t[v] = std::uniform_int_distribution<Threshold>(1, d)(rng);
          }
        } else if constexpr (std::is_same_v<P, policy::Degree>) {
          for (Vertex v = 0; v < n; ++v) t[v] = static_cast<Threshold>(g.degree(v));
        } else if constexpr (std::is_same_v<P, policy::Center>) {
          std::fill(t.begin(), t.end(), 1);
          if (n > 0) t[0] = pol.center;
        } else {
          if (pol.thresholds.size() != n) {
            throw Error("explicit thresholds cover " + std::to_string(pol.thresholds.size()) + " vertices, graph has " +
                        std::to_string(n));
          }
          t = pol.thresholds.values();
        }
      },
      p);
  return ThresholdAssignment(std::move(t));
}

/// Reads "vertex_id threshold" lines (external ids). Every vertex of the
/// graph must appear; the error lists the missing external ids.
inline ThresholdAssignment load_threshold_file(std::istream& in, const IdMap& ids) {
  constexpr Threshold unset = -1;
  std::vector<Threshold> t(ids.size(), unset);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment_or_blank(line)) continue;
    auto tokens = detail::split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 'vertex_id threshold', found " + std::to_string(tokens.size()) + " tokens");
    }
    const std::int64_t ext = detail::parse_int(tokens[0], line_no);
    const Threshold value = detail::parse_int(tokens[1], line_no);
    if (value < 0) throw ParseError(line_no, "negative threshold");
    auto v = ids.find(ext);
    if (!v) throw ParseError(line_no, "unknown vertex id " + std::to_string(ext));
    t[*v] = value;
  }
  std::string missing;
  std::size_t missing_count = 0;
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t[v] != unset) continue;
    if (missing_count++ < 20) missing += (missing.empty() ? "" : " ") + std::to_string(ids.external(v));
  }
  if (missing_count > 0) {
    if (missing_count > 20) missing += " ...";
    throw Error("threshold file is missing " + std::to_string(missing_count) + " vertices: " + missing);
  }
  return ThresholdAssignment(std::move(t));
}

}  // namespace tss
