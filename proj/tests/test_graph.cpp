#include <gtest/gtest.h>

#include "support.hpp"
#include "tperf/connectivity.hpp"
#include "tperf/isomorphism.hpp"

using namespace tperf;

TEST(Graph, RejectsLoopsAndDuplicates) {
  EXPECT_THROW(Graph::from_edges(3, {{0, 0}}), InvalidInput);
  EXPECT_THROW(Graph::from_edges(3, {{0, 1}, {1, 0}}), InvalidInput);
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), InvalidInput);
}

TEST(Graph, NamedGraphs) {
  Graph c7 = make_named(NamedGraph::c2, 7);
  EXPECT_EQ(c7.order(), 7);
  EXPECT_EQ(c7.size(), 14);
  for (Vertex v = 0; v < 7; ++v) EXPECT_EQ(c7.degree(v), 4);
  Graph w = make_named(NamedGraph::w5);
  EXPECT_EQ(w.order(), 6);
  EXPECT_EQ(w.degree(5), 5);
  Graph k = make_named(NamedGraph::claw);
  EXPECT_EQ(k.size(), 3);
  EXPECT_EQ(k.degree(0), 3);
  EXPECT_THROW(make_named(NamedGraph::c2, 4), InvalidInput);
  Graph c6e = make_named(NamedGraph::c6sq_minus_edge);
  EXPECT_FALSE(c6e.adjacent(0, 5));
  EXPECT_EQ(c6e.size(), 11);
  EXPECT_EQ(make_named(NamedGraph::c2_minus_vertex, 10).order(), 9);
}

TEST(Blocks, PathBowtieCycle) {
  auto p = blocks(path_graph(3));
  EXPECT_EQ(p.blocks.size(), 2u);
  EXPECT_EQ(p.cut_vertices, std::vector<Vertex>{1});

  Graph bowtie = Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  auto b = blocks(bowtie);
  EXPECT_EQ(b.blocks.size(), 2u);
  EXPECT_EQ(b.cut_vertices, std::vector<Vertex>{2});

  auto c = blocks(cycle_graph(5));
  EXPECT_EQ(c.blocks.size(), 1u);
  EXPECT_TRUE(c.cut_vertices.empty());
}

TEST(Blocks, RandomEdgePartitionAndCutVertices) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    const int n = 2 + static_cast<int>(rng() % 10);
    Graph g = brute::random_graph(n, 0.3, rng);
    auto d = blocks(g);
    std::vector<Edge> all;
    for (const auto& be : d.block_edges) all.insert(all.end(), be.begin(), be.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, g.edges());
    // Cut vertices by definition: removal increases the number of components.
    const auto base = connected_components(g).size();
    std::vector<Vertex> expect;
    for (Vertex v = 0; v < n; ++v) {
      const Vertex r[1] = {v};
      auto rest = delete_vertices(g, r);
      if (connected_components(rest.graph).size() > base - (g.degree(v) == 0 ? 1 : 0)) expect.push_back(v);
    }
    EXPECT_EQ(d.cut_vertices, expect);
    // Each block with >= 3 vertices is 2-connected.
    for (const auto& bl : d.blocks)
      if (bl.size() >= 3) {
        EXPECT_TRUE(is_two_connected(induced_subgraph(g, bl).graph));
      }
  }
}

TEST(Connectivity, ThreeConnected) {
  EXPECT_TRUE(is_three_connected(complete_graph(4)));
  EXPECT_FALSE(is_three_connected(cycle_graph(5)));
  EXPECT_TRUE(is_three_connected(cycle_square(7)));
  EXPECT_FALSE(is_three_connected(complete_graph(3)));
  std::mt19937_64 rng(5);
  for (int it = 0; it < 300; ++it) {
    const int n = 4 + static_cast<int>(rng() % 6);
    Graph g = brute::random_graph(n, 0.55, rng);
    EXPECT_EQ(is_three_connected(g), brute::brute_vertex_connectivity(g) >= 3);
  }
}

TEST(Connectivity, TwoSeparation) {
  Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto s = find_two_separation(diamond);
  EXPECT_EQ(s.separator, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(s.order(), 2);
  EXPECT_THROW(find_two_separation(complete_graph(4)), PreconditionViolation);

  // The exceptional graphs are 3-connected (exhaustive pair check agrees).
  for (const Graph& x : {cycle_square_minus_vertex(7), cycle_square_minus_vertex(10), cycle_square6_minus_edge()}) {
    EXPECT_EQ(brute::brute_vertex_connectivity(x), 3);
    EXPECT_THROW(find_two_separation(x), PreconditionViolation);
  }
  std::vector<Graph> cases{cycle_graph(6)};
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    Graph g = brute::random_graph(4 + static_cast<int>(rng() % 6), 0.5, rng);
    if (is_connected(g) && !is_three_connected(g)) cases.push_back(g);
  }
  for (const Graph& g : cases) {
    auto sep = find_two_separation(g);
    ASSERT_EQ(sep.order(), 2);
    auto rest = delete_vertices(g, sep.separator);
    EXPECT_FALSE(is_connected(rest.graph));
    EXPECT_LT(sep.side1.size(), static_cast<std::size_t>(g.order()));
    EXPECT_LT(sep.side2.size(), static_cast<std::size_t>(g.order()));
    for (const Edge& e : g.edges()) {
      bool in1 = std::binary_search(sep.side1.begin(), sep.side1.end(), e.u) &&
                 std::binary_search(sep.side1.begin(), sep.side1.end(), e.v);
      bool in2 = std::binary_search(sep.side2.begin(), sep.side2.end(), e.u) &&
                 std::binary_search(sep.side2.begin(), sep.side2.end(), e.v);
      EXPECT_TRUE(in1 || in2);
    }
  }
}

TEST(Connectivity, FundamentalCycle) {
  Graph c4 = cycle_graph(4);
  std::vector<Edge> tree{{0, 1}, {1, 2}, {2, 3}};
  auto c = spanning_tree_fundamental_cycle(c4, tree, Edge(0, 3));
  EXPECT_EQ(c, (std::vector<Vertex>{0, 1, 2, 3}));
  Graph k4 = complete_graph(4);
  std::vector<Edge> star{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(spanning_tree_fundamental_cycle(k4, star, Edge(1, 2)), (std::vector<Vertex>{1, 0, 2}));
  EXPECT_THROW(spanning_tree_fundamental_cycle(k4, star, Edge(0, 1)), PreconditionViolation);
}

TEST(Isomorphism, FixedCases) {
  Graph c7 = cycle_square(7);
  std::mt19937_64 rng(1);
  EXPECT_TRUE(is_isomorphic_small(c7, brute::relabel(c7, brute::random_permutation(7, rng))));
  EXPECT_FALSE(is_isomorphic_small(c7, cycle_square_minus_vertex(7)));
  EXPECT_FALSE(is_isomorphic_small(complete_graph(4), claw()));
  EXPECT_THROW(is_isomorphic_small(Graph(17), Graph(17)), SizeGuardExceeded);
}

TEST(Isomorphism, AgreesWithPermutationEnumeration) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 1500; ++it) {
    const int n = 1 + static_cast<int>(rng() % 7);
    Graph g = brute::random_graph(n, 0.5, rng);
    Graph h = (it % 2) ? brute::relabel(g, brute::random_permutation(n, rng)) : brute::random_graph(n, 0.5, rng);
    EXPECT_EQ(is_isomorphic_small(g, h), brute::brute_isomorphic(g, h));
  }
}

TEST(Identify, CollapsesToSimpleGraph) {
  auto p = identify_vertices(path_graph(3), 0, 2);
  EXPECT_EQ(p.graph.order(), 2);
  EXPECT_EQ(p.graph.size(), 1);
  auto c = identify_vertices(cycle_graph(4), 0, 2);
  EXPECT_EQ(c.graph.order(), 3);
  EXPECT_EQ(c.graph.size(), 2);
  auto c5 = identify_vertices(cycle_graph(5), 0, 2);
  EXPECT_FALSE(articulation_points(c5.graph).empty());
  std::mt19937_64 rng(4);
  for (int it = 0; it < 300; ++it) {
    const int n = 2 + static_cast<int>(rng() % 9);
    Graph g = brute::random_graph(n, 0.4, rng);
    Vertex a = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    Vertex b = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    if (a == b) continue;
    auto m = identify_vertices(g, a, b);
    for (Vertex v = 0; v < m.graph.order(); ++v) {
      EXPECT_FALSE(m.graph.adjacent(v, v));
      auto nb = m.graph.neighbors(v);
      EXPECT_EQ(std::adjacent_find(nb.begin(), nb.end()), nb.end());
    }
  }
}
