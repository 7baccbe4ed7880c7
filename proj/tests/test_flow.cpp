#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "tperf/flow.hpp"

using namespace tperf;

namespace {

std::vector<Edge> path_edges_of(const std::vector<Vertex>& p) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < p.size(); ++i) out.emplace_back(p[i - 1], p[i]);
  return out;
}

void check_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_TRUE(g.adjacent(p[i - 1], p[i]));
  std::set<Vertex> s(p.begin(), p.end());
  EXPECT_EQ(s.size(), p.size());
}

}  // namespace

TEST(Flow, SmallCuts) {
  const Vertex a[1] = {0}, c[1] = {2}, b[1] = {1};
  EXPECT_EQ(min_edge_cut_between(path_graph(3), a, c).size(), 1u);
  EXPECT_EQ(min_edge_cut_between(complete_graph(4), a, b).size(), 3u);
  // theta with paths of lengths 2, 3, 3 between 0 and 1
  Graph th = Graph::from_edges(7, {{0, 2}, {2, 1}, {0, 3}, {3, 4}, {4, 1}, {0, 5}, {5, 6}, {6, 1}});
  EXPECT_EQ(min_edge_cut_between(th, a, b).size(), 3u);
}

TEST(Flow, CutSidesAreConsistent) {
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}});
  const Vertex s[1] = {0}, t[1] = {5};
  auto cut = min_edge_cut_between(g, s, t);
  ASSERT_EQ(cut.size(), 1u);
  for (const Edge& e : cut.edges)
    EXPECT_NE(cut.in_source_side[static_cast<std::size_t>(e.u)], cut.in_source_side[static_cast<std::size_t>(e.v)]);
  EXPECT_TRUE(cut.in_source_side[0]);
  EXPECT_FALSE(cut.in_source_side[5]);
}

TEST(Flow, EdgeDisjointPathsExamples) {
  const Vertex a[1] = {0}, c[1] = {2}, b[1] = {1};
  auto p = edge_disjoint_paths(cycle_graph(4), a, c, 2);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->size(), 2u);
  EXPECT_FALSE(edge_disjoint_paths(path_graph(3), a, c, 2).has_value());
  auto k = edge_disjoint_paths(complete_graph(4), a, b, 3);
  ASSERT_TRUE(k.has_value());
  EXPECT_EQ(k->size(), 3u);
}

TEST(Flow, MengerDualityOnRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 400; ++it) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Graph g = brute::random_graph(n, 0.35, rng);
    std::vector<Vertex> src, snk;
    for (Vertex v = 0; v < n; ++v) {
      auto r = rng() % 4;
      if (r == 0) src.push_back(v);
      else if (r == 1) snk.push_back(v);
    }
    if (src.empty() || snk.empty()) continue;
    auto cut = min_edge_cut_between(g, src, snk);
    const int k = static_cast<int>(cut.size());
    EXPECT_EQ(k, brute::brute_min_cut(g, src, snk));
    auto paths = edge_disjoint_paths(g, src, snk, k);
    ASSERT_TRUE(paths.has_value());
    std::set<Edge> used;
    for (const auto& p : *paths) {
      check_path(g, p);
      EXPECT_TRUE(std::find(src.begin(), src.end(), p.front()) != src.end());
      EXPECT_TRUE(std::find(snk.begin(), snk.end(), p.back()) != snk.end());
      for (const Edge& e : path_edges_of(p)) EXPECT_TRUE(used.insert(e).second);
    }
    EXPECT_FALSE(edge_disjoint_paths(g, src, snk, k + 1).has_value());
  }
}

TEST(Flow, VertexDisjointAndFan) {
  const Vertex rest[3] = {1, 2, 3};
  auto f = fan_paths(complete_graph(4), 0, rest, 3);
  ASSERT_TRUE(f.has_value());
  for (const auto& p : *f) EXPECT_EQ(p.size(), 2u);
  const Vertex c5t[3] = {1, 2, 3};
  EXPECT_FALSE(fan_paths(cycle_graph(5), 0, c5t, 3).has_value());

  Graph c6 = cycle_graph(6);
  const Vertex s[2] = {0, 1}, t[2] = {3, 4};
  auto vp = vertex_disjoint_paths(c6, s, t, 2);
  ASSERT_TRUE(vp.has_value());
  std::set<Vertex> seen;
  for (const auto& p : *vp) {
    check_path(c6, p);
    for (Vertex v : p) EXPECT_TRUE(seen.insert(v).second);
  }
}

TEST(Flow, FanMatchesSeparatorBound) {
  // A 3-fan from z exists iff no set of at most two vertices other than z
  // meets every z-target path.
  std::mt19937_64 rng(8);
  for (int it = 0; it < 400; ++it) {
    const int n = 4 + static_cast<int>(rng() % 8);
    Graph g = brute::random_graph(n, 0.4, rng);
    const Vertex z = 0;
    std::vector<Vertex> targets{1, 2, 3};
    bool brute = true;
    for (Vertex x = 1; x < n && brute; ++x)
      for (Vertex y = x; y < n && brute; ++y) {
        std::vector<char> blocked(static_cast<std::size_t>(n), 0);
        blocked[static_cast<std::size_t>(x)] = blocked[static_cast<std::size_t>(y)] = 1;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::vector<Vertex> st{z};
        seen[0] = 1;
        bool hit = false;
        while (!st.empty()) {
          Vertex q = st.back();
          st.pop_back();
          if (q != z && q <= 3) hit = true;
          for (Vertex w : g.neighbors(q))
            if (!seen[static_cast<std::size_t>(w)] && !blocked[static_cast<std::size_t>(w)]) {
              seen[static_cast<std::size_t>(w)] = 1;
              st.push_back(w);
            }
        }
        if (!hit) brute = false;
      }
    auto f = fan_paths(g, z, targets, 3);
    EXPECT_EQ(f.has_value(), brute);
    if (f) {
      std::set<Vertex> seen;
      for (const auto& p : *f) {
        check_path(g, p);
        EXPECT_EQ(p.front(), z);
        EXPECT_TRUE(std::find(targets.begin(), targets.end(), p.back()) != targets.end());
        for (std::size_t i = 1; i < p.size(); ++i) EXPECT_TRUE(seen.insert(p[i]).second);
      }
    }
  }
}
