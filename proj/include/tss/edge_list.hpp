#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tss/graph.hpp"
#include "tss/types.hpp"

namespace tss {

/// Maps compact internal ids 0..n-1 to the ids used in an input file.
class IdMap {
 public:
  IdMap() = default;

  static IdMap identity(std::size_t n) {
    IdMap map;
    for (std::size_t i = 0; i < n; ++i) map.intern(static_cast<std::int64_t>(i));
    return map;
  }

  /// Returns the internal id for `external`, assigning the next free one on
  /// first sight.
  Vertex intern(std::int64_t external) {
    auto [it, inserted] = index_.try_emplace(external, static_cast<Vertex>(external_.size()));
    if (inserted) external_.push_back(external);
    return it->second;
  }

  std::optional<Vertex> find(std::int64_t external) const {
    auto it = index_.find(external);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::int64_t external(Vertex v) const { return external_.at(v); }
  std::size_t size() const noexcept { return external_.size(); }

 private:
  std::vector<std::int64_t> external_;
  std::unordered_map<std::int64_t, Vertex> index_;
};

struct LoadedGraph {
  Graph graph;
  IdMap ids;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) ++i;
    std::size_t j = i;
    while (j < line.size() && !(line[j] == ' ' || line[j] == '\t' || line[j] == '\r' || line[j] == ',')) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

inline std::int64_t parse_int(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line_no, "malformed integer token '" + std::string(token) + "'");
  }
  return value;
}

inline bool is_comment_or_blank(std::string_view line) {
  std::size_t i = line.find_first_not_of(" \t\r");
  return i == std::string_view::npos || line[i] == '#' || line[i] == '%';
}

}  // namespace detail

/// Reads a whitespace-separated edge list. Lines starting with '#' or '%'
/// are comments. External ids are compacted to 0..n-1 in order of first
/// appearance; self-loops, duplicates and reversed repeats are dropped.
inline LoadedGraph load_edge_list(std::istream& in) {
  IdMap ids;
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (detail::is_comment_or_blank(line)) continue;
    auto tokens = detail::split_ws(line);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 2 tokens, found " + std::to_string(tokens.size()));
    }
    std::int64_t a = detail::parse_int(tokens[0], line_no);
    std::int64_t b = detail::parse_int(tokens[1], line_no);
    Vertex u = ids.intern(a);
    Vertex v = ids.intern(b);
    edges.emplace_back(u, v);
  }
  if (ids.size() == 0) throw Error("empty graph");
  return LoadedGraph{Graph::from_edges(ids.size(), edges), std::move(ids)};
}

/// Writes one "u v" line per edge, using external ids when a map is given.
inline void write_edge_list(std::ostream& out, const Graph& g, const IdMap* ids = nullptr) {
  out << "# vertices " << g.num_vertices() << " edges " << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) {
    if (ids) {
      out << ids->external(u) << ' ' << ids->external(v) << '\n';
    } else {
      out << u << ' ' << v << '\n';
    }
  }
}

}  // namespace tss
