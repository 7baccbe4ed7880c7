#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tperf/graph.hpp"
#include "tperf/linegraph.hpp"
#include "tperf/oracle.hpp"

namespace tperf {

// Seeded source of uniform draws. Distribution objects from <random> are
// implementation-defined, so draws are taken from the raw engine to keep
// corpora identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  int below(int bound) {
    detail::require(bound > 0, "Rng::below needs a positive bound");
    const std::uint64_t b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % b;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return static_cast<int>(x % b);
  }
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(below(static_cast<int>(i)))]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class CorpusKind { random_subcubic, random_clawfree_via_linegraph, random_clawfree, named };

inline std::vector<Edge> all_pairs(int n) {
  std::vector<Edge> out;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

// Degree-capped random edge insertion with a random density.
inline Graph random_subcubic(int n, Rng& rng) {
  auto pairs = all_pairs(n);
  rng.shuffle(pairs);
  const double keep = 0.15 + 0.85 * rng.unit();
  GraphBuilder b(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : pairs) {
    if (deg[static_cast<std::size_t>(e.u)] >= 3 || deg[static_cast<std::size_t>(e.v)] >= 3 || !rng.chance(keep)) continue;
    b.add_edge(e.u, e.v);
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return b.build();
}

// Random subcubic graph that is connected: a random spanning tree first,
// then degree-capped insertions.
inline Graph random_connected_subcubic(int n, Rng& rng) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  rng.shuffle(order);
  GraphBuilder b(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    std::vector<Vertex> open;
    for (int j = 0; j < i; ++j)
      if (deg[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] < 3) open.push_back(order[static_cast<std::size_t>(j)]);
    const Vertex p = open[static_cast<std::size_t>(rng.below(static_cast<int>(open.size())))];
    const Vertex c = order[static_cast<std::size_t>(i)];
    b.add_edge(p, c);
    ++deg[static_cast<std::size_t>(p)];
    ++deg[static_cast<std::size_t>(c)];
  }
  auto pairs = all_pairs(n);
  rng.shuffle(pairs);
  const double keep = 0.1 + 0.9 * rng.unit();
  for (const Edge& e : pairs) {
    if (deg[static_cast<std::size_t>(e.u)] >= 3 || deg[static_cast<std::size_t>(e.v)] >= 3 || !rng.chance(keep)) continue;
    if (b.add_edge_if_absent(e.u, e.v)) {
      ++deg[static_cast<std::size_t>(e.u)];
      ++deg[static_cast<std::size_t>(e.v)];
    }
  }
  return b.build();
}

namespace detail {

// Would adding ab create an induced claw? Only claws through a or b can appear.
inline bool edge_keeps_claw_free(const std::vector<std::vector<char>>& adj, Vertex a, Vertex b) {
  const int n = static_cast<int>(adj.size());
  auto adjacent = [&](Vertex x, Vertex y) {
    if ((x == a && y == b) || (x == b && y == a)) return true;
    return adj[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != 0;
  };
  auto claw_at = [&](Vertex c, Vertex must) {
    // claws centred at c using leaf `must` (or any leaf when must < 0)
    std::vector<Vertex> nb;
    for (Vertex x = 0; x < n; ++x)
      if (x != c && adjacent(c, x)) nb.push_back(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k) {
          if (adjacent(nb[i], nb[k]) || adjacent(nb[j], nb[k])) continue;
          if (must < 0 || nb[i] == must || nb[j] == must || nb[k] == must) return true;
        }
      }
    return false;
  };
  // new edge as a spoke: centre a with leaf b, or centre b with leaf a
  if (claw_at(a, b) || claw_at(b, a)) return false;
  // new edge can only destroy claws elsewhere, never create them
  return true;
}

}  // namespace detail

// Greedy claw-free edge insertion under a degree cap.
inline Graph random_clawfree(int n, Rng& rng, int max_degree = 4) {
  auto pairs = all_pairs(n);
  rng.shuffle(pairs);
  const double keep = 0.2 + 0.8 * rng.unit();
  std::vector<std::vector<char>> adj(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  GraphBuilder b(n);
  for (const Edge& e : pairs) {
    if (deg[static_cast<std::size_t>(e.u)] >= max_degree || deg[static_cast<std::size_t>(e.v)] >= max_degree) continue;
    if (!rng.chance(keep) || !detail::edge_keeps_claw_free(adj, e.u, e.v)) continue;
    adj[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] = 1;
    adj[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] = 1;
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
    b.add_edge(e.u, e.v);
  }
  Graph g = b.build();
  detail::ensure(!find_claw_centre(g), "random_clawfree produced a claw");
  return g;
}

// Line graph of a random subcubic graph with at most max_vertices edges.
inline Graph random_clawfree_via_linegraph(int max_vertices, Rng& rng) {
  for (;;) {
    const int root_n = rng.between(2, std::max(2, max_vertices));
    Graph h = random_subcubic(root_n, rng);
    if (h.size() == 0 || h.size() > max_vertices) continue;
    Graph g = line_graph(h).graph;
    detail::ensure(!find_claw_centre(g), "line graph with a claw");
    return g;
  }
}

inline std::vector<std::pair<std::string, Graph>> named_corpus() {
  return {{"K4", complete_graph(4)},
          {"W5", wheel5()},
          {"claw", claw()},
          {"C7sq", cycle_square(7)},
          {"C10sq", cycle_square(10)},
          {"C6sq-minus-v1v6", cycle_square6_minus_edge()},
          {"C7sq-minus-v7", cycle_square_minus_vertex(7)},
          {"C10sq-minus-v10", cycle_square_minus_vertex(10)}};
}

// Graphs of a seeded random corpus. Vertex counts are drawn from
// [min_n, max_n]; for the line-graph kind max_n bounds the line graph.
inline std::vector<Graph> generate_corpus(CorpusKind kind, int count, std::uint64_t seed, int max_n = 12,
                                          int min_n = 1) {
  detail::require(count >= 1, "generate_corpus: count must be positive");
  std::vector<Graph> out;
  if (kind == CorpusKind::named) {
    for (auto& [name, g] : named_corpus()) out.push_back(g);
    return out;
  }
  Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const int n = rng.between(min_n, max_n);
    switch (kind) {
      case CorpusKind::random_subcubic: out.push_back(random_subcubic(n, rng)); break;
      case CorpusKind::random_clawfree_via_linegraph: out.push_back(random_clawfree_via_linegraph(max_n, rng)); break;
      case CorpusKind::random_clawfree: out.push_back(random_clawfree(n, rng, rng.between(2, 5))); break;
      case CorpusKind::named: break;
    }
  }
  return out;
}

// All connected graphs on 1..max_n vertices with a hereditary property, one
// per isomorphism class, grouped by vertex count. Each connected graph has a
// vertex whose deletion keeps it connected, so growing by one vertex at a
// time from the previous level reaches every class.
inline std::vector<std::vector<Graph>> enumerate_connected(int max_n, const std::function<bool(const Graph&)>& keep) {
  detail::require(max_n >= 1 && max_n <= 10, "enumerate_connected: max_n must lie in [1, 10]");
  std::vector<std::vector<Graph>> levels(static_cast<std::size_t>(max_n) + 1);
  levels[1].push_back(Graph(1));
  for (int n = 2; n <= max_n; ++n) {
    detail::IsoClassMap<char> seen;
    for (const Graph& g : levels[static_cast<std::size_t>(n) - 1]) {
      const int m = g.order();
      for (unsigned s = 1; s < (1u << m); ++s) {
        GraphBuilder b(n);
        for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
        for (int v = 0; v < m; ++v)
          if (s >> v & 1u) b.add_edge(v, m);
        Graph h = b.build();
        if (!keep(h)) continue;
        SmallGraph sh(h);
        if (seen.find(sh)) continue;
        seen.insert(sh, 1);
        levels[static_cast<std::size_t>(n)].push_back(std::move(h));
      }
    }
  }
  return levels;
}

inline bool is_claw_free(const Graph& g) { return !find_claw_centre(g); }
inline bool is_subcubic(const Graph& g) { return g.max_degree() <= 3; }

}  // namespace tperf
