#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

enum class Parity { even = 0, odd = 1 };

inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

enum class ParityBackend { exhaustive, polynomial };

struct ParityConfig {
  ParityBackend backend = ParityBackend::exhaustive;
  int max_exhaustive_n = 20;  // induced-path search
  int max_linkage_n = 64;     // two disjoint paths search
};

struct ParityQuery {
  Vertex u = 0;
  Vertex v = 0;
  Parity parity = Parity::even;
};

// Which parities are realised by induced u-v paths: bit 0 even, bit 1 odd.
struct InducedPathParities {
  bool even = false;
  bool odd = false;
  bool has(Parity p) const { return p == Parity::even ? even : odd; }
};

namespace detail {

class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, Vertex target) : g_(g), target_(target) {
    closed_.resize(static_cast<std::size_t>(g.order()));
    for (Vertex x = 0; x < g.order(); ++x) {
      std::uint64_t m = std::uint64_t{1} << x;
      for (Vertex y : g.neighbors(x)) m |= std::uint64_t{1} << y;
      closed_[static_cast<std::size_t>(x)] = m;
    }
  }

  // Parities (bit mask) of the remaining length from `end` to the target
  // when the path so far forbids the vertices in `blocked`.
  unsigned run(Vertex end, std::uint64_t blocked) {
    if (end == target_) return 1u;
    auto key = std::make_pair(end, blocked);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    unsigned result = 0;
    const std::uint64_t next_blocked = blocked | closed_[static_cast<std::size_t>(end)];
    for (Vertex w : g_.neighbors(end)) {
      if (blocked >> w & 1u) continue;
      const unsigned sub = run(w, next_blocked);
      // one more edge flips the parity
      result |= ((sub & 1u) << 1) | ((sub >> 1) & 1u);
      if (result == 3u) break;
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  const Graph& g_;
  Vertex target_;
  std::vector<std::uint64_t> closed_;
  std::map<std::pair<Vertex, std::uint64_t>, unsigned> memo_;
};

inline void check_backend(const Graph& g, const ParityConfig& cfg) {
  if (cfg.backend == ParityBackend::polynomial)
    throw PreconditionViolation("induced path parity: the polynomial backend is not available in this build");
  if (g.order() > cfg.max_exhaustive_n || g.order() > 64)
    throw SizeGuardExceeded("induced path parity: " + std::to_string(g.order()) +
                            " vertices exceed the exhaustive threshold of " + std::to_string(cfg.max_exhaustive_n));
}

}  // namespace detail

// Both parity answers for induced u-v paths at once.
inline InducedPathParities induced_path_parities(const Graph& g, Vertex u, Vertex v, const ParityConfig& cfg = {}) {
  detail::require(u != v, "induced path query needs distinct endpoints");
  detail::require(u >= 0 && v >= 0 && u < g.order() && v < g.order(), "induced path query: vertex out of range");
  detail::check_backend(g, cfg);
  detail::InducedPathSearch search(g, v);
  // Vertices after u must avoid N[u] except the next vertex itself, which the
  // recursion handles by blocking only from the second step on.
  const unsigned r = search.run(u, std::uint64_t{1} << u);
  return {(r & 1u) != 0, (r & 2u) != 0};
}

inline bool exists_induced_path_with_parity(const Graph& g, const ParityQuery& q, const ParityConfig& cfg = {}) {
  return induced_path_parities(g, q.u, q.v, cfg).has(q.parity);
}

struct LinkageQuery {
  Vertex s1 = 0, t1 = 0, s2 = 0, t2 = 0;
  std::vector<Edge> forbidden_edges;
};

namespace detail {

class LinkageSearch {
 public:
  LinkageSearch(const Graph& g, const LinkageQuery& q) : g_(g), q_(q), used_(static_cast<std::size_t>(g.order()), 0) {}

  bool run() {
    used_[static_cast<std::size_t>(q_.s1)] = 1;
    return extend(q_.s1);
  }

 private:
  bool edge_ok(Vertex a, Vertex b) const {
    for (const Edge& e : q_.forbidden_edges)
      if (e == Edge(a, b)) return false;
    return true;
  }

  // BFS from `from` to `to` over unused vertices (plus `to`), honouring
  // the forbidden edges; `extra` marks further vertices to avoid.
  bool reachable(Vertex from, Vertex to, Vertex avoid1, Vertex avoid2) const {
    std::vector<char> seen(used_.size(), 0);
    seen[static_cast<std::size_t>(from)] = 1;
    std::vector<Vertex> queue{from};
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const Vertex x = queue[h];
      if (x == to) return true;
      for (Vertex y : g_.neighbors(x)) {
        if (seen[static_cast<std::size_t>(y)] || y == avoid1 || y == avoid2 || !edge_ok(x, y)) continue;
        if (y != to && used_[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        queue.push_back(y);
      }
    }
    return false;
  }

  bool second_path_exists() const { return reachable(q_.s2, q_.t2, -1, -1); }

  bool extend(Vertex end) {
    if (end == q_.t1) return second_path_exists();
    if (!second_path_exists()) return false;
    if (!reachable(end, q_.t1, q_.s2, q_.t2)) return false;
    for (Vertex w : g_.neighbors(end)) {
      if (used_[static_cast<std::size_t>(w)] || w == q_.s2 || w == q_.t2 || !edge_ok(end, w)) continue;
      used_[static_cast<std::size_t>(w)] = 1;
      const bool ok = extend(w);
      used_[static_cast<std::size_t>(w)] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Graph& g_;
  const LinkageQuery& q_;
  std::vector<char> used_;
};

}  // namespace detail

// Vertex-disjoint s1-t1 and s2-t2 paths avoiding the forbidden edges.
inline bool two_disjoint_paths(const Graph& g, const LinkageQuery& q, const ParityConfig& cfg = {}) {
  for (Vertex x : {q.s1, q.t1, q.s2, q.t2}) detail::require(x >= 0 && x < g.order(), "linkage terminal out of range");
  detail::require(q.s1 != q.s2 && q.s1 != q.t2 && q.t1 != q.s2 && q.t1 != q.t2,
                  "linkage: terminals of different pairs must be distinct");
  if (g.order() > cfg.max_linkage_n)
    throw SizeGuardExceeded("two disjoint paths: " + std::to_string(g.order()) + " vertices exceed the threshold of " +
                            std::to_string(cfg.max_linkage_n));
  if (q.s1 == q.t1) {
    // a trivial first path; only the second needs routing around it
    std::vector<Vertex> keep;
    for (Vertex x = 0; x < g.order(); ++x)
      if (x != q.s1) keep.push_back(x);
    auto sub = induced_subgraph(g, keep);
    std::vector<Edge> fe;
    for (const Edge& e : q.forbidden_edges) {
      const Vertex a = sub.from_parent[static_cast<std::size_t>(e.u)], b = sub.from_parent[static_cast<std::size_t>(e.v)];
      if (a >= 0 && b >= 0) fe.emplace_back(a, b);
    }
    sub.graph = delete_edges(sub.graph, fe);
    const Vertex a = sub.from_parent[static_cast<std::size_t>(q.s2)], b = sub.from_parent[static_cast<std::size_t>(q.t2)];
    if (a == b) return true;
    auto comps = connected_components(sub.graph);
    for (const auto& c : comps)
      if (std::binary_search(c.begin(), c.end(), a)) return std::binary_search(c.begin(), c.end(), b);
    return false;
  }
  if (q.s2 == q.t2) {
    LinkageQuery swapped{q.s2, q.t2, q.s1, q.t1, q.forbidden_edges};
    return two_disjoint_paths(g, swapped, cfg);
  }
  detail::LinkageSearch search(g, q);
  return search.run();
}

}  // namespace tperf
