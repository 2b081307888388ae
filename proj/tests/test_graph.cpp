#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "tss/edge_list.hpp"
#include "tss/generators.hpp"
#include "tss/graph.hpp"
#include "tss/thresholds.hpp"
#include "oracles.hpp"

using namespace tss;

namespace {

LoadedGraph load(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

void expect_simple(const Graph& g) {
  std::size_t half = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    half += g.degree(v);
    std::set<Vertex> seen;
    for (Vertex u : g.neighbors(v)) {
      EXPECT_NE(u, v);
      EXPECT_TRUE(seen.insert(u).second);
      EXPECT_TRUE(g.has_edge(u, v));
    }
  }
  EXPECT_EQ(half, 2 * g.num_edges());
}

}  // namespace

TEST(EdgeList, PathOnThreeVertices) {
  auto lg = load("0 1\n1 2");
  EXPECT_EQ(lg.graph.num_vertices(), 3u);
  EXPECT_EQ(lg.graph.num_edges(), 2u);
  auto adj = lg.graph.neighbors(1);
  EXPECT_EQ(std::vector<Vertex>(adj.begin(), adj.end()), (std::vector<Vertex>{0, 2}));
}

TEST(EdgeList, DropsDuplicatesReversedPairsAndSelfLoops) {
  auto lg = load("0 1\n1 0\n0 0");
  EXPECT_EQ(lg.graph.num_vertices(), 2u);
  EXPECT_EQ(lg.graph.num_edges(), 1u);
}

TEST(EdgeList, CompactsIdsByFirstAppearance) {
  auto lg = load("# c\n5 9\n9 7");
  EXPECT_EQ(lg.graph.num_vertices(), 3u);
  EXPECT_EQ(lg.graph.num_edges(), 2u);
  EXPECT_EQ(lg.ids.external(0), 5);
  EXPECT_EQ(lg.ids.external(1), 9);
  EXPECT_EQ(lg.ids.external(2), 7);
  EXPECT_EQ(lg.ids.find(7), Vertex{2});
  EXPECT_FALSE(lg.ids.find(6).has_value());
}

TEST(EdgeList, AcceptsPercentCommentsTabsAndBlankLines) {
  auto lg = load("% matrix market style\n\n1\t2\r\n  # indented comment\n2\t3\n");
  EXPECT_EQ(lg.graph.num_edges(), 2u);
}

TEST(EdgeList, MalformedTokenReportsLine) {
  try {
    load("# header\n1 2\n3 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("'x'"), std::string::npos);
  }
  EXPECT_THROW(load("1 2 3\n"), ParseError);
  EXPECT_THROW(load("1\n"), ParseError);
}

TEST(EdgeList, EmptyInputIsAnError) {
  try {
    load("# only comments\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "empty graph");
  }
  EXPECT_THROW(load(""), Error);
}

TEST(EdgeList, WriteThenLoadPreservesGraph) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = gnp(40, 0.2, seed);
    // Isolated vertices do not survive an edge list and ids are recompacted,
    // so compare through the id map.
    std::stringstream buf;
    write_edge_list(buf, g);
    auto lg = load_edge_list(buf);
    std::size_t non_isolated = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) non_isolated += g.degree(v) > 0;
    ASSERT_EQ(lg.graph.num_vertices(), non_isolated);
    ASSERT_EQ(lg.graph.num_edges(), g.num_edges());
    for (auto [u, v] : lg.graph.edges()) {
      EXPECT_TRUE(g.has_edge(static_cast<Vertex>(lg.ids.external(u)), static_cast<Vertex>(lg.ids.external(v))));
    }
  }
}

TEST(Graph, RejectsOutOfRangeEdges) {
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, edges), Error);
}

TEST(Graph, ConnectedComponents) {
  auto g = Graph::from_edges(5, std::vector<std::pair<Vertex, Vertex>>{{0, 1}, {2, 3}});
  auto c = connected_components(g);
  EXPECT_EQ(c.count(), 3u);
  EXPECT_EQ(c.component_of[0], c.component_of[1]);
  EXPECT_NE(c.component_of[1], c.component_of[2]);
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(clique_graph(4)));
}

TEST(Generators, CanonicalGraphs) {
  auto k4 = clique_graph(4);
  EXPECT_EQ(k4.num_vertices(), 4u);
  EXPECT_EQ(k4.num_edges(), 6u);

  auto s5 = star_graph(5);
  EXPECT_EQ(s5.degree(0), 4u);
  for (Vertex v = 1; v < 5; ++v) EXPECT_EQ(s5.degree(v), 1u);

  auto c6 = cycle_graph(6);
  EXPECT_EQ(c6.num_edges(), 6u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(c6.degree(v), 2u);

  EXPECT_THROW(cycle_graph(2), Error);
  EXPECT_THROW(star_graph(1), Error);
  EXPECT_THROW(gnp(10, 0.0, 1), Error);
  EXPECT_THROW(gnp(10, 1.0, 1), Error);
  EXPECT_THROW(gnp(0, 0.5, 1), Error);
}

TEST(Generators, GnpIsDeterministicPerSeed) {
  auto a = gnp(30, 0.5, 42);
  auto b = gnp(30, 0.5, 42);
  auto c = gnp(30, 0.5, 43);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  expect_simple(a);
}

TEST(Generators, GnpEdgeCountMatchesPairwiseCoinFlips) {
  // Mean edge count of the skip generator against per-pair coin flips and
  // against the exact expectation p*n(n-1)/2. 4 sigma on 200 draws.
  const std::size_t n = 60;
  for (double p : {0.05, 0.3, 0.8}) {
    double skip_sum = 0, pair_sum = 0;
    const int draws = 200;
    for (int s = 0; s < draws; ++s) {
      skip_sum += static_cast<double>(gnp(n, p, 1000 + s).num_edges());
      pair_sum += static_cast<double>(oracle::pairwise_gnp_edges(n, p, 5000 + s));
    }
    const double pairs = n * (n - 1) / 2.0;
    const double mean = p * pairs;
    const double sd_of_mean = std::sqrt(pairs * p * (1 - p) / draws);
    EXPECT_NEAR(skip_sum / draws, mean, 4 * sd_of_mean) << "p=" << p;
    EXPECT_NEAR(pair_sum / draws, mean, 4 * sd_of_mean) << "p=" << p;
  }
}

TEST(Generators, PrueferTreesAreSpanningTrees) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 40;
    auto t = random_tree(n, seed);
    expect_simple(t);
    EXPECT_EQ(t.num_edges(), n - 1);
    EXPECT_TRUE(is_connected(t));
  }
}

TEST(Generators, PrueferTreesCoverAllLabeledTreesOnFourVertices) {
  // Cayley: 4^2 = 16 labeled trees on 4 vertices, each equally likely.
  std::map<std::vector<std::pair<Vertex, Vertex>>, int> counts;
  const int draws = 16000;
  for (int s = 0; s < draws; ++s) ++counts[random_tree(4, s).edges()];
  EXPECT_EQ(counts.size(), 16u);
  for (const auto& [edges, c] : counts) EXPECT_NEAR(c, draws / 16, 150);
}

TEST(Generators, ParseSpecs) {
  auto s = parse_generator_spec("gnp:30:0.5", 7);
  EXPECT_EQ(s.kind, SourceKind::Gnp);
  EXPECT_EQ(s.n, 30u);
  EXPECT_DOUBLE_EQ(s.p, 0.5);
  EXPECT_EQ(s.seed, 7u);
  EXPECT_EQ(parse_generator_spec("gnp:30:0.5:9", 7).seed, 9u);
  EXPECT_EQ(parse_generator_spec("star:9").kind, SourceKind::Star);
  EXPECT_EQ(parse_generator_spec("tree:12:3").seed, 3u);
  EXPECT_THROW(parse_generator_spec("gnp:30:1.5"), Error);
  EXPECT_THROW(parse_generator_spec("wheel:5"), Error);
  EXPECT_THROW(parse_generator_spec("clique:x"), Error);
  EXPECT_THROW(parse_generator_spec("clique:4:5"), Error);
}

TEST(Thresholds, ConstantCappedUsesMinOfTAndDegree) {
  auto path = path_graph(3);
  auto t = assign_thresholds(path, policy::ConstantCapped{2});
  EXPECT_EQ(t.values(), (std::vector<Threshold>{1, 2, 1}));
  EXPECT_THROW(assign_thresholds(path, policy::ConstantCapped{0}), Error);

  auto with_isolated = Graph::from_edges(3, std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
  EXPECT_EQ(assign_thresholds(with_isolated, policy::ConstantCapped{3}).values(), (std::vector<Threshold>{1, 1, 0}));
}

TEST(Thresholds, DegreePolicy) {
  auto g = gnp(25, 0.3, 3);
  auto t = assign_thresholds(g, policy::Degree{});
  for (Vertex v = 0; v < g.num_vertices(); ++v) EXPECT_EQ(t[v], static_cast<Threshold>(g.degree(v)));
}

TEST(Thresholds, RandomInDegreeRangeAndReproducibility) {
  auto star = star_graph(5);
  auto t = assign_thresholds(star, policy::RandomInDegree{}, 11);
  for (Vertex v = 1; v < 5; ++v) EXPECT_EQ(t[v], 1);
  EXPECT_GE(t[0], 1);
  EXPECT_LE(t[0], 4);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto g = gnp(40, 0.15, seed);
    auto a = assign_thresholds(g, policy::RandomInDegree{}, seed);
    EXPECT_EQ(a, assign_thresholds(g, policy::RandomInDegree{}, seed));
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) == 0) {
        EXPECT_EQ(a[v], 0);
      } else {
        EXPECT_GE(a[v], 1);
        EXPECT_LE(a[v], static_cast<Threshold>(g.degree(v)));
      }
    }
    auto c = assign_thresholds(g, policy::ConstantCapped{1 + static_cast<Threshold>(seed % 10)});
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      EXPECT_GE(c[v], 0);
      EXPECT_LE(c[v], static_cast<Threshold>(g.degree(v)));
    }
  }
}

TEST(Thresholds, CenterAndExplicit) {
  auto star = star_graph(4);
  EXPECT_EQ(assign_thresholds(star, policy::Center{3}).values(), (std::vector<Threshold>{3, 1, 1, 1}));
  EXPECT_EQ(assign_thresholds(star, policy::Explicit{ThresholdAssignment({0, 1, 2, 3})}).values(),
            (std::vector<Threshold>{0, 1, 2, 3}));
  EXPECT_THROW(assign_thresholds(star, policy::Explicit{ThresholdAssignment({1, 1})}), Error);
  EXPECT_THROW(ThresholdAssignment({1, -1}), Error);
}

TEST(Thresholds, FileUsesOriginalIdsAndListsMissing) {
  auto lg = load("5 9\n9 7\n");
  std::istringstream good("# id t\n9 2\n5 1\n7 1\n");
  EXPECT_EQ(load_threshold_file(good, lg.ids).values(), (std::vector<Threshold>{1, 2, 1}));

  std::istringstream missing("9 2\n");
  try {
    load_threshold_file(missing, lg.ids);
    FAIL();
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("missing 2 vertices"), std::string::npos) << msg;
    EXPECT_NE(msg.find("5 7"), std::string::npos) << msg;
  }
  std::istringstream unknown("5 1\n9 1\n7 1\n8 1\n");
  EXPECT_THROW(load_threshold_file(unknown, lg.ids), ParseError);
  std::istringstream negative("5 -1\n");
  EXPECT_THROW(load_threshold_file(negative, lg.ids), ParseError);
}
