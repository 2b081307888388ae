#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tss/types.hpp"

namespace tss {

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted, free of self-loops and duplicates, and
/// symmetric. Every construction path goes through from_edges(), which
/// normalizes its input and then validates the result.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph on `n` vertices. Self-loops are dropped, duplicate and
  /// reversed pairs collapse to one undirected edge.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw Error("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                    ") out of range for " + std::to_string(n) + " vertices");
      }
      if (u == v) continue;
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
    }
    std::size_t half_edges = 0;
    for (auto& list : g.adj_) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      list.shrink_to_fit();
      half_edges += list.size();
    }
    g.m_ = half_edges / 2;
    g.validate();
    return g;
  }

  static Graph from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges));
  }

  std::size_t num_vertices() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adj_) best = std::max(best, list.size());
    return best;
  }

  /// Each undirected edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  // Symmetry, sortedness, no loops, no duplicates, sum of degrees = 2m.
  void validate() const {
    std::size_t half_edges = 0;
    for (Vertex u = 0; u < adj_.size(); ++u) {
      const auto& list = adj_[u];
      half_edges += list.size();
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] == u) throw std::logic_error("graph invariant: self-loop");
        if (i > 0 && list[i - 1] >= list[i]) {
          throw std::logic_error("graph invariant: adjacency not strictly sorted");
        }
        if (!has_edge(list[i], u)) throw std::logic_error("graph invariant: asymmetric adjacency");
      }
    }
    if (half_edges != 2 * m_) throw std::logic_error("graph invariant: degree sum != 2m");
  }

  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
};

/// Connected components as a per-vertex component index plus component count.
struct Components {
  std::vector<std::size_t> component_of;
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return sizes.size(); }
};

inline Components connected_components(const Graph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  Components c;
  c.component_of.assign(g.num_vertices(), unset);
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (c.component_of[root] != unset) continue;
    const std::size_t id = c.sizes.size();
    c.sizes.push_back(0);
    c.component_of[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++c.sizes[id];
      for (Vertex u : g.neighbors(v)) {
        if (c.component_of[u] == unset) {
          c.component_of[u] = id;
          stack.push_back(u);
        }
      }
    }
  }
  return c;
}

inline bool is_connected(const Graph& g) {
  return g.num_vertices() > 0 && connected_components(g).count() == 1;
}

}  // namespace tss
