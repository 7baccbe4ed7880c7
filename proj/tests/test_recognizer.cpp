#include <gtest/gtest.h>

#include "support.hpp"
#include "tperf/corpus.hpp"
#include "tperf/oracle.hpp"
#include "tperf/recognizer.hpp"

using namespace tperf;

namespace {

std::string edge_string(const Graph& g) {
  std::string s = std::to_string(g.order()) + ":";
  for (const Edge& e : g.edges()) s += to_string(e);
  return s;
}

void expect_agrees(const Graph& g, TMinorSearch& oracle) {
  const bool want = is_t_perfect_bruteforce(g, oracle);
  Decision got;
  ASSERT_NO_THROW(got = is_t_perfect(g)) << edge_string(g);
  EXPECT_EQ(got.t_perfect(), want) << edge_string(g);
}

bool fired(const Decision& d, const std::string& rule) {
  return std::any_of(d.trace.begin(), d.trace.end(), [&](const RuleFiring& r) { return r.rule == rule; });
}

}  // namespace

TEST(Recognizer, NamedGraphs) {
  EXPECT_FALSE(is_t_perfect(complete_graph(4)).t_perfect());
  EXPECT_FALSE(is_t_perfect(wheel5()).t_perfect());
  EXPECT_FALSE(is_t_perfect(cycle_square(7)).t_perfect());
  EXPECT_FALSE(is_t_perfect(cycle_square(10)).t_perfect());
  EXPECT_TRUE(is_t_perfect(cycle_square6_minus_edge()).t_perfect());
  EXPECT_TRUE(is_t_perfect(cycle_square_minus_vertex(7)).t_perfect());
  EXPECT_TRUE(is_t_perfect(cycle_square_minus_vertex(10)).t_perfect());
  EXPECT_TRUE(is_t_perfect(cycle_graph(5)).t_perfect());
  EXPECT_TRUE(is_t_perfect(Graph(0)).t_perfect());
}

TEST(Recognizer, ClawIsRejectedWithWitness) {
  try {
    (void)is_t_perfect(claw());
    FAIL() << "claw accepted";
  } catch (const NotClawFree& e) {
    EXPECT_EQ(e.witness().centre, 0);
    auto l = e.witness().leaves;
    std::sort(l.begin(), l.end());
    EXPECT_EQ(l, (std::array<Vertex, 3>{1, 2, 3}));
  }
  EXPECT_THROW((void)is_t_perfect(claw()), InvalidInput);
}

TEST(Recognizer, RulesAreTraced) {
  EXPECT_TRUE(fired(is_t_perfect(cycle_square(7)), "exceptional-not-t-perfect"));
  EXPECT_TRUE(fired(is_t_perfect(cycle_square_minus_vertex(7)), "exceptional-t-perfect"));
  EXPECT_TRUE(fired(is_t_perfect(complete_graph(4)), "line-graph-root-degree-4"));
  // two triangles sharing a vertex: a block split
  GraphBuilder b(5);
  for (auto [x, y] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}) b.add_edge(x, y);
  const Decision d = is_t_perfect(b.build());
  EXPECT_TRUE(d.t_perfect());
  // the bowtie is the line graph of a paw-like root, so no split is needed
  EXPECT_GE(d.stats.recursions, 1);
}

TEST(Recognizer, DisconnectedInputDecidedPerComponent) {
  GraphBuilder b(9);
  for (int i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
  for (int i = 5; i < 9; ++i)
    for (int j = i + 1; j < 9; ++j) b.add_edge(i, j);
  const Decision d = is_t_perfect(b.build());
  EXPECT_FALSE(d.t_perfect());
  EXPECT_TRUE(fired(d, "components-conjoined"));
}

TEST(Recognizer, ReducedSidesFollowParities) {
  // sides: u=0, v=1 with a path of length 2 (even) or 3 (odd) between them
  auto path_side = [](int len) {
    GraphBuilder b(2);
    Vertex prev = 0;
    for (int k = 1; k < len; ++k) {
      Vertex x = b.add_vertex();
      b.add_edge(prev, x);
      prev = x;
    }
    b.add_edge(prev, 1);
    return b.build();
  };
  const Graph even = path_side(2), odd = path_side(3);
  auto r = build_reduced_sides(odd, even, 0, 1, 0, 1, {false, true}, {true, false});
  EXPECT_EQ(r.which, SeparationCase::odd_on_one_side);
  EXPECT_EQ(r.side1.graph.order(), odd.order() - 1);
  EXPECT_TRUE(r.side2.graph.adjacent(0, 1));
  r = build_reduced_sides(even, even, 0, 1, 0, 1, {true, false}, {true, false});
  EXPECT_EQ(r.which, SeparationCase::no_odd_path);
  EXPECT_EQ(r.side1.graph.size(), even.size());
  EXPECT_THROW((void)build_reduced_sides(even, even, 0, 1, 0, 1, {true, true}, {true, true}), PreconditionViolation);
}

TEST(Recognizer, AgreesWithBruteForceExhaustive) {
  auto oracle = TMinorSearch::forbidden();
  const auto levels = enumerate_connected(9, is_claw_free);
  int count = 0;
  for (const auto& level : levels)
    for (const Graph& g : level) {
      expect_agrees(g, oracle);
      ++count;
    }
  EXPECT_GT(count, 5000);
}

TEST(Recognizer, AgreesWithBruteForceRandom) {
  auto oracle = TMinorSearch::forbidden();
  const auto general = generate_corpus(CorpusKind::random_clawfree, 6000, 7001, 12, 4);
  const auto lines = generate_corpus(CorpusKind::random_clawfree_via_linegraph, 2000, 7002, 12, 4);
  for (const Graph& g : general) expect_agrees(g, oracle);
  for (const Graph& g : lines) expect_agrees(g, oracle);
}

TEST(Recognizer, StableUnderRelabelling) {
  std::mt19937_64 rng(99);
  const auto corpus = generate_corpus(CorpusKind::random_clawfree, 300, 7003, 11, 5);
  for (const Graph& g : corpus) {
    const Graph h = brute::relabel(g, brute::random_permutation(g.order(), rng));
    EXPECT_EQ(is_t_perfect(g).verdict, is_t_perfect(h).verdict) << edge_string(g);
  }
}
