#pragma once

// Independent brute-force helpers shared by the unit tests. Nothing here
// calls into the library's algorithms beyond the Graph container itself.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf::brute {

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) b.add_edge(i, j);
  return b.build();
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  return b.build();
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Connectivity of the subgraph induced by a vertex mask, by plain DFS.
inline bool mask_connected(const Graph& g, std::uint32_t mask) {
  if (mask == 0) return true;
  std::uint32_t seen = mask & (~mask + 1);
  std::vector<Vertex> stack{__builtin_ctz(seen)};
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x))
      if ((mask >> y & 1u) && !(seen >> y & 1u)) {
        seen |= 1u << y;
        stack.push_back(y);
      }
  }
  return seen == mask;
}

inline std::uint32_t full_mask(int n) { return n >= 32 ? ~0u : (1u << n) - 1; }

// Smallest number of vertices whose removal disconnects g (n-1 for complete graphs).
inline int brute_vertex_connectivity(const Graph& g) {
  const int n = g.order();
  int best = std::max(0, n - 1);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int k = __builtin_popcount(s);
    if (k >= best || k > n - 2) continue;
    if (!mask_connected(g, full_mask(n) & ~s)) best = k;
  }
  return best;
}

// Minimum edge cut separating sources from sinks, by trying every side.
inline int brute_min_cut(const Graph& g, const std::vector<Vertex>& src, const std::vector<Vertex>& snk) {
  const int n = g.order();
  int best = g.size() + 1;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    bool ok = true;
    for (Vertex s : src) ok = ok && (x >> s & 1u);
    for (Vertex t : snk) ok = ok && !(x >> t & 1u);
    if (!ok) continue;
    int c = 0;
    for (const Edge& e : g.edges()) c += ((x >> e.u) & 1u) != ((x >> e.v) & 1u);
    best = std::min(best, c);
  }
  return best;
}

inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<Vertex> p(static_cast<std::size_t>(g.order()));
  std::iota(p.begin(), p.end(), 0);
  do {
    if (relabel(g, p) == h) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace tperf::brute
