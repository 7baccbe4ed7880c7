#include <gtest/gtest.h>

#include "support.hpp"
#include "tperf/corpus.hpp"
#include "tperf/isomorphism.hpp"
#include "tperf/oracle.hpp"

using namespace tperf;

namespace {

// Two triangles 0-1-2 and 3-4-5 with rungs 0~3, 1~4, 2~5; rung i gets
// extra[i] subdivision vertices.
Graph prism_with_rungs(std::array<int, 3> extra) {
  GraphBuilder b(6);
  b.add_edge(0, 1), b.add_edge(1, 2), b.add_edge(0, 2);
  b.add_edge(3, 4), b.add_edge(4, 5), b.add_edge(3, 5);
  for (int i = 0; i < 3; ++i) {
    Vertex prev = i;
    for (int k = 0; k < extra[static_cast<std::size_t>(i)]; ++k) {
      Vertex x = b.add_vertex();
      b.add_edge(prev, x);
      prev = x;
    }
    b.add_edge(prev, 3 + i);
  }
  return b.build();
}

// Branch vertices 0 and 1 joined by paths of the given lengths.
Graph theta(std::array<int, 3> len) {
  GraphBuilder b(2);
  for (int l : len) {
    Vertex prev = 0;
    for (int k = 1; k < l; ++k) {
      Vertex x = b.add_vertex();
      b.add_edge(prev, x);
      prev = x;
    }
    b.add_edge(prev, 1);
  }
  return b.build();
}

}  // namespace

TEST(Oracle, TContract) {
  auto p = t_contract(path_graph(3), 1);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->order(), 1);
  EXPECT_FALSE(t_contract(complete_graph(3), 0).has_value());
  for (Vertex v = 0; v < 5; ++v) {
    auto c = t_contract(cycle_graph(5), v);
    ASSERT_TRUE(c.has_value());
    EXPECT_TRUE(is_isomorphic_small(*c, cycle_graph(3)));
  }
}

TEST(Oracle, TPerfectNamedGraphs) {
  EXPECT_FALSE(is_t_perfect_bruteforce(complete_graph(4)));
  EXPECT_FALSE(is_t_perfect_bruteforce(wheel5()));
  EXPECT_FALSE(is_t_perfect_bruteforce(cycle_square(7)));
  EXPECT_FALSE(is_t_perfect_bruteforce(cycle_square(10)));
  EXPECT_TRUE(is_t_perfect_bruteforce(cycle_graph(5)));
  EXPECT_TRUE(is_t_perfect_bruteforce(cycle_graph(4)));
  EXPECT_TRUE(is_t_perfect_bruteforce(cycle_square_minus_vertex(7)));
  EXPECT_TRUE(is_t_perfect_bruteforce(cycle_square_minus_vertex(10)));
  EXPECT_TRUE(is_t_perfect_bruteforce(cycle_square6_minus_edge()));
  EXPECT_TRUE(is_t_perfect_bruteforce(line_graph(complete_graph(4)).graph));
  EXPECT_THROW(is_t_perfect_bruteforce(claw()), InvalidInput);
  EXPECT_THROW(is_t_perfect_bruteforce(cycle_graph(13)), SizeGuardExceeded);
}

TEST(Oracle, SkewedThetaBruteForce) {
  EXPECT_FALSE(has_skewed_theta_bruteforce(complete_graph(4)));
  EXPECT_TRUE(has_skewed_theta_bruteforce(theta({2, 3, 3})));
  EXPECT_TRUE(has_skewed_theta_bruteforce(theta({1, 2, 3})));
  EXPECT_FALSE(has_skewed_theta_bruteforce(theta({2, 2, 2})));
  EXPECT_FALSE(has_skewed_theta_bruteforce(theta({1, 3, 3})));
  EXPECT_FALSE(has_skewed_theta_bruteforce(cycle_graph(8)));
  EXPECT_THROW(has_skewed_theta_bruteforce(Graph(15)), SizeGuardExceeded);
}

TEST(Oracle, SkewedPrismBruteForce) {
  EXPECT_TRUE(has_skewed_prism_bruteforce(complete_graph(4)));
  EXPECT_FALSE(has_skewed_prism_bruteforce(cycle_graph(6)));
  EXPECT_TRUE(has_skewed_prism_bruteforce(prism_with_rungs({1, 1, 0})));
  // one subdivided rung leaves one even and two odd rungs
  EXPECT_FALSE(has_skewed_prism_bruteforce(prism_with_rungs({1, 0, 0})));
  EXPECT_FALSE(has_skewed_prism_bruteforce(prism_with_rungs({0, 0, 0})));
  auto k4 = TMinorSearch::k4_only();
  EXPECT_FALSE(k4.reaches_target(prism_with_rungs({1, 0, 0})));
  EXPECT_TRUE(k4.reaches_target(prism_with_rungs({1, 1, 0})));
}

TEST(Oracle, CanonicalClassesArePermutationInvariant) {
  std::mt19937_64 rng(17);
  detail::IsoClassMap<int> classes;
  for (int it = 0; it < 400; ++it) {
    const int n = 1 + static_cast<int>(rng() % 9);
    Graph g = brute::random_graph(n, 0.4, rng);
    Graph h = brute::relabel(g, brute::random_permutation(n, rng));
    SmallGraph sg(g), sh(h);
    if (!classes.find(sg)) classes.insert(sg, it);
    ASSERT_NE(classes.find(sh), nullptr);
    EXPECT_EQ(*classes.find(sh), *classes.find(sg));
  }
}

TEST(Oracle, EnumerationCounts) {
  // Connected claw-free and connected subcubic graphs per vertex count, as
  // catalogued (atlas recount for n <= 7).
  auto cf = enumerate_connected(8, is_claw_free);
  const std::vector<std::size_t> cf_counts{0, 1, 1, 2, 5, 14, 50, 191, 881};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(cf[static_cast<std::size_t>(n)].size(), cf_counts[static_cast<std::size_t>(n)]) << n;
  auto sc = enumerate_connected(8, is_subcubic);
  const std::vector<std::size_t> sc_counts{0, 1, 1, 2, 6, 10, 29, 64, 194};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(sc[static_cast<std::size_t>(n)].size(), sc_counts[static_cast<std::size_t>(n)]) << n;
}

TEST(Oracle, PrismIffK4TMinor) {
  Rng rng(5);
  auto k4 = TMinorSearch::k4_only();
  for (int it = 0; it < 300; ++it) {
    Graph g = random_clawfree(rng.between(4, 10), rng, rng.between(2, 5));
    EXPECT_EQ(has_skewed_prism_bruteforce(g), k4.reaches_target(g));
  }
}

TEST(Oracle, LineGraphBridge) {
  Rng rng(6);
  auto search = TMinorSearch::forbidden();
  int checked = 0;
  for (int it = 0; it < 300; ++it) {
    Graph h = random_subcubic(rng.between(3, 10), rng);
    if (h.size() == 0 || h.size() > kTMinorGuard) continue;
    const bool tp = is_t_perfect_bruteforce(line_graph(h).graph, search);
    EXPECT_EQ(tp, !has_skewed_theta_bruteforce(h));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(Oracle, DegreeAndExceptionalCharacterisation) {
  // For connected claw-free graphs: t-perfect iff max degree <= 4, not one of
  // the two squared cycles, and no K4 t-minor.
  Rng rng(7);
  auto search = TMinorSearch::forbidden();
  auto k4 = TMinorSearch::k4_only();
  for (int it = 0; it < 300; ++it) {
    Graph g = random_clawfree(rng.between(4, 10), rng, rng.between(3, 6));
    if (!is_connected(g)) continue;
    const bool exceptional = (g.order() == 7 && is_isomorphic_small(g, cycle_square(7))) ||
                             (g.order() == 10 && is_isomorphic_small(g, cycle_square(10)));
    const bool expect = g.max_degree() <= 4 && !exceptional && !k4.reaches_target(g);
    EXPECT_EQ(is_t_perfect_bruteforce(g, search), expect);
  }
}
