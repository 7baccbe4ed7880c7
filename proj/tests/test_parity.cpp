#include <gtest/gtest.h>
#include <functional>

#include "support.hpp"
#include "tperf/parity.hpp"

using namespace tperf;

namespace {

// Induced u-v path parities by checking every vertex subset: the subset
// must induce a path whose ends are u and v.
InducedPathParities subset_parities(const Graph& g, Vertex u, Vertex v) {
  InducedPathParities out;
  const int n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> u & 1u) || !(mask >> v & 1u)) continue;
    int edges = 0;
    bool ok = true;
    for (Vertex x = 0; x < n && ok; ++x) {
      if (!(mask >> x & 1u)) continue;
      int d = 0;
      for (Vertex y : g.neighbors(x))
        if (mask >> y & 1u) ++d;
      edges += d;
      ok = (x == u || x == v) ? d == 1 : d == 2;
    }
    if (!ok || !brute::mask_connected(g, mask)) continue;
    ((edges / 2) % 2 == 0 ? out.even : out.odd) = true;
  }
  return out;
}

// Every simple s1-t1 path, then plain reachability for s2-t2 in the rest.
bool linkage_by_paths(const Graph& g, Vertex s1, Vertex t1, Vertex s2, Vertex t2) {
  const int n = g.order();
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  auto second = [&] {
    std::vector<char> seen(used);
    std::vector<Vertex> stack{s2};
    seen[static_cast<std::size_t>(s2)] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      if (x == t2) return true;
      for (Vertex y : g.neighbors(x))
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
    }
    return false;
  };
  std::function<bool(Vertex)> walk = [&](Vertex x) {
    used[static_cast<std::size_t>(x)] = 1;
    bool found = x == t1 ? second() : false;
    if (x != t1)
      for (Vertex y : g.neighbors(x))
        if (!found && !used[static_cast<std::size_t>(y)] && y != s2 && y != t2) found = walk(y);
    used[static_cast<std::size_t>(x)] = 0;
    return found;
  };
  return walk(s1);
}

}  // namespace

TEST(Parity, CycleExamples) {
  const Graph c5 = cycle_graph(5);
  EXPECT_TRUE(exists_induced_path_with_parity(c5, {0, 1, Parity::odd}));
  EXPECT_FALSE(exists_induced_path_with_parity(c5, {0, 1, Parity::even}));
  const auto c4 = induced_path_parities(cycle_graph(4), 0, 2);
  EXPECT_TRUE(c4.even);
  EXPECT_FALSE(c4.odd);
  const auto c6 = induced_path_parities(cycle_graph(6), 0, 3);
  EXPECT_FALSE(c6.even);
  EXPECT_TRUE(c6.odd);
}

TEST(Parity, NoPathWhenDisconnected) {
  const Graph g(4);
  const auto p = induced_path_parities(g, 0, 3);
  EXPECT_FALSE(p.even || p.odd);
}

TEST(Parity, ErrorsAndGuards) {
  EXPECT_THROW((void)induced_path_parities(cycle_graph(5), 2, 2), PreconditionViolation);
  EXPECT_THROW((void)induced_path_parities(cycle_graph(5), 0, 7), PreconditionViolation);
  EXPECT_THROW((void)induced_path_parities(cycle_graph(30), 0, 15), SizeGuardExceeded);
  ParityConfig wide;
  wide.max_exhaustive_n = 40;
  EXPECT_TRUE(induced_path_parities(cycle_graph(30), 0, 15, wide).odd);
  ParityConfig poly;
  poly.backend = ParityBackend::polynomial;
  EXPECT_THROW((void)induced_path_parities(cycle_graph(5), 0, 1, poly), PreconditionViolation);
}

TEST(Parity, InducedPathsAgreeWithSubsets) {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const Graph g = brute::random_graph(n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0, rng);
    const Vertex u = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    if (u == v) v = (v + 1) % n;
    const auto want = subset_parities(g, u, v);
    const auto got = induced_path_parities(g, u, v);
    ASSERT_EQ(got.even, want.even) << "trial " << trial;
    ASSERT_EQ(got.odd, want.odd) << "trial " << trial;
  }
}

TEST(Parity, LinkageExamples) {
  EXPECT_TRUE(two_disjoint_paths(complete_graph(4), {0, 1, 2, 3, {}}));
  const Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  EXPECT_FALSE(two_disjoint_paths(star, {1, 2, 3, 4, {}}));
  const Graph c6 = cycle_graph(6);
  EXPECT_FALSE(two_disjoint_paths(c6, {0, 3, 1, 4, {}}));
  EXPECT_TRUE(two_disjoint_paths(c6, {0, 1, 2, 3, {}}));
  // forbidding the direct edge forces the first path around the cycle
  EXPECT_FALSE(two_disjoint_paths(c6, {0, 1, 2, 3, {Edge(0, 1)}}));
  EXPECT_TRUE(two_disjoint_paths(c6, {0, 0, 2, 3, {}}));
  EXPECT_THROW((void)two_disjoint_paths(c6, {0, 1, 1, 3, {}}), PreconditionViolation);
  ParityConfig small;
  small.max_linkage_n = 4;
  EXPECT_THROW((void)two_disjoint_paths(c6, {0, 1, 2, 3, {}}, small), SizeGuardExceeded);
}

TEST(Parity, LinkageAgreesWithPathEnumeration) {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = brute::random_graph(n, 0.2 + 0.5 * static_cast<double>(rng() % 100) / 100.0, rng);
    auto perm = brute::random_permutation(n, rng);
    const Vertex s1 = perm[0], t1 = perm[1], s2 = perm[2], t2 = perm[3];
    ASSERT_EQ(two_disjoint_paths(g, {s1, t1, s2, t2, {}}), linkage_by_paths(g, s1, t1, s2, t2)) << "trial " << trial;
  }
}
