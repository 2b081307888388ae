#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tss/graph.hpp"
#include "tss/types.hpp"

namespace tss {

enum class SourceKind { EdgeListFile, Gnp, Tree, Cycle, Clique, Star };

inline const char* to_string(SourceKind k) {
  switch (k) {
    case SourceKind::EdgeListFile: return "file";
    case SourceKind::Gnp: return "gnp";
    case SourceKind::Tree: return "tree";
    case SourceKind::Cycle: return "cycle";
    case SourceKind::Clique: return "clique";
    case SourceKind::Star: return "star";
  }
  return "?";
}

/// Where a graph comes from. Only the fields relevant to `kind` are used.
struct GraphSource {
  SourceKind kind = SourceKind::Clique;
  std::string path;
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;

  std::string name() const {
    std::ostringstream os;
    switch (kind) {
      case SourceKind::EdgeListFile: os << path; break;
      case SourceKind::Gnp: os << "gnp(" << n << "," << p << ")"; break;
      default: os << to_string(kind) << "(" << n << ")"; break;
    }
    return os.str();
  }
};

/// Erdos-Renyi G(n, p): each of the n(n-1)/2 pairs is an edge independently
/// with probability p. Uses geometric skipping over the pair sequence, so the
/// cost is O(n + m) rather than O(n^2).
inline Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw Error("gnp requires n >= 1");
  if (!(p > 0.0 && p < 1.0)) throw Error("gnp requires 0 < p < 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0 * 1.1) + 16);
  std::int64_t v = 1;
  std::int64_t w = -1;
  const auto nn = static_cast<std::int64_t>(n);
  while (v < nn) {
    const double r = unit(rng);
    const double skip = std::floor(std::log1p(-r) / log_q);
    // Skips beyond the remaining pair count end the walk.
    if (skip > 1e18) break;
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= v && v < nn) {
      w -= v;
      ++v;
    }
    if (v < nn) edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>(w));
  }
  return Graph::from_edges(n, edges);
}

/// Uniform random labeled tree, decoded from a random Pruefer sequence.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw Error("tree requires n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  if (n == 2) edges.emplace_back(0, 1);
  if (n > 2) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> code(n - 2);
    for (auto& c : code) c = pick(rng);

    std::vector<std::size_t> remaining(n, 1);
    for (Vertex c : code) ++remaining[c];
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
      if (remaining[v] == 1) leaves.push(v);
    }
    for (Vertex c : code) {
      Vertex leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(leaf, c);
      if (--remaining[c] == 1) leaves.push(c);
    }
    Vertex a = leaves.top();
    leaves.pop();
    Vertex b = leaves.top();
    edges.emplace_back(a, b);
  }
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error("cycle requires n >= 3");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw Error("path requires n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph clique_graph(std::size_t n) {
  if (n < 1) throw Error("clique requires n >= 1");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

/// Star with center 0 and leaves 1..n-1.
inline Graph star_graph(std::size_t n) {
  if (n < 2) throw Error("star requires n >= 2");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

/// Builds a graph from a generator source. File sources go through
/// load_edge_list() instead.
inline Graph generate(const GraphSource& src) {
  switch (src.kind) {
    case SourceKind::Gnp: return gnp(src.n, src.p, src.seed);
    case SourceKind::Tree: return random_tree(src.n, src.seed);
    case SourceKind::Cycle: return cycle_graph(src.n);
    case SourceKind::Clique: return clique_graph(src.n);
    case SourceKind::Star: return star_graph(src.n);
    case SourceKind::EdgeListFile: break;
  }
  throw Error("generate() does not handle edge-list files");
}

/// Parses "gnp:N:P[:SEED]", "tree:N[:SEED]", "cycle:N", "clique:N", "star:N".
/// A seed embedded in the descriptor wins over `default_seed`.
inline GraphSource parse_generator_spec(const std::string& spec, std::uint64_t default_seed = 0) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (parts.empty()) throw Error("empty generator spec");

  auto as_size = [&](std::size_t i) -> std::size_t {
    if (i >= parts.size()) throw Error("generator spec '" + spec + "' is missing a field");
    try {
      std::size_t pos = 0;
      long long v = std::stoll(parts[i], &pos);
      if (pos != parts[i].size() || v < 0) throw Error("");
      return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      throw Error("generator spec '" + spec + "': bad integer '" + parts[i] + "'");
    }
  };

  GraphSource src;
  src.seed = default_seed;
  const std::string& kind = parts[0];
  std::size_t expected = 2;
  if (kind == "gnp") {
    src.kind = SourceKind::Gnp;
    src.n = as_size(1);
    if (parts.size() < 3) throw Error("gnp descriptor needs N:P");
    try {
      src.p = std::stod(parts[2]);
    } catch (const std::exception&) {
      throw Error("generator spec '" + spec + "': bad probability '" + parts[2] + "'");
    }
    expected = 3;
    if (parts.size() == 4) {
      src.seed = as_size(3);
      expected = 4;
    }
    if (!(src.p > 0.0 && src.p < 1.0)) throw Error("gnp requires 0 < p < 1");
  } else if (kind == "tree") {
    src.kind = SourceKind::Tree;
    src.n = as_size(1);
    if (parts.size() == 3) {
      src.seed = as_size(2);
      expected = 3;
    }
  } else if (kind == "cycle") {
    src.kind = SourceKind::Cycle;
    src.n = as_size(1);
  } else if (kind == "clique") {
    src.kind = SourceKind::Clique;
    src.n = as_size(1);
  } else if (kind == "star") {
    src.kind = SourceKind::Star;
    src.n = as_size(1);
  } else {
    throw Error("unknown generator '" + kind + "' (expected gnp, tree, cycle, clique, star)");
  }
  if (parts.size() != expected) throw Error("generator spec '" + spec + "' has unexpected fields");
  return src;
}

}  // namespace tss
