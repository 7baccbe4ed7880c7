#pragma once

#include <algorithm>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

inline constexpr int kIsomorphismGuard = 16;

namespace detail {

inline bool extend_iso(const Graph& g, const Graph& h, std::vector<Vertex>& map, std::vector<char>& used,
                       const std::vector<Vertex>& order, std::size_t depth) {
  if (depth == order.size()) return true;
  const Vertex x = order[depth];
  for (Vertex y = 0; y < h.order(); ++y) {
    if (used[static_cast<std::size_t>(y)] || g.degree(x) != h.degree(y)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const Vertex a = order[i];
      ok = g.adjacent(x, a) == h.adjacent(y, map[static_cast<std::size_t>(a)]);
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(x)] = y;
    used[static_cast<std::size_t>(y)] = 1;
    if (extend_iso(g, h, map, used, order, depth + 1)) return true;
    used[static_cast<std::size_t>(y)] = 0;
  }
  return false;
}

}  // namespace detail

// Exact isomorphism test for small graphs by degree-pruned backtracking.
inline bool is_isomorphic_small(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismGuard || h.order() > kIsomorphismGuard)
    throw SizeGuardExceeded("is_isomorphic_small: more than " + std::to_string(kIsomorphismGuard) + " vertices");
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> dg, dh;
  for (Vertex v = 0; v < g.order(); ++v) dg.push_back(g.degree(v));
  for (Vertex v = 0; v < h.order(); ++v) dh.push_back(h.degree(v));
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;

  // BFS order keeps each new vertex attached to already-mapped ones.
  std::vector<Vertex> order;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex r = 0; r < g.order(); ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    seen[static_cast<std::size_t>(r)] = 1;
    const std::size_t start = order.size();
    order.push_back(r);
    for (std::size_t i = start; i < order.size(); ++i)
      for (Vertex y : g.neighbors(order[i]))
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          order.push_back(y);
        }
  }
  std::vector<Vertex> map(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> used(static_cast<std::size_t>(h.order()), 0);
  return detail::extend_iso(g, h, map, used, order, 0);
}

}  // namespace tperf
