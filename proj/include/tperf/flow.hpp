#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

// Edge cut E(X, Y) with X = the vertices flagged in in_source_side.
struct EdgeCut {
  std::vector<Edge> edges;
  std::vector<bool> in_source_side;

  std::size_t size() const { return edges.size(); }
  bool contains(const Edge& e) const { return std::find(edges.begin(), edges.end(), e) != edges.end(); }
};

// E_G(X, V - X) for the given side indicator.
inline EdgeCut cut_of_side(const Graph& g, std::vector<bool> side) {
  EdgeCut c;
  for (const Edge& e : g.edges())
    if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) c.edges.push_back(e);
  c.in_source_side = std::move(side);
  return c;
}

namespace detail {

// Unit-capacity augmenting-path max flow. Capacities are tiny everywhere in
// this library, so BFS augmentation is plenty.
class FlowNetwork {
 public:
  static constexpr int kInf = std::numeric_limits<int>::max() / 4;

  explicit FlowNetwork(int n) : adj_(static_cast<std::size_t>(n)) {}

  int add_arc(int from, int to, int cap, int rev_cap = 0) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, cap});
    arcs_.push_back({from, rev_cap});
    adj_[static_cast<std::size_t>(from)].push_back(id);
    adj_[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  // Augments one unit at a time until no path remains or limit is reached.
  int max_flow(int s, int t, int limit = kInf) {
    int flow = 0;
    std::vector<int> via(adj_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      via[static_cast<std::size_t>(s)] = -2;
      std::vector<int> queue{s};
      for (std::size_t h = 0; h < queue.size() && via[static_cast<std::size_t>(t)] == -1; ++h) {
        const int x = queue[h];
        for (int id : adj_[static_cast<std::size_t>(x)]) {
          const Arc& a = arcs_[static_cast<std::size_t>(id)];
          if (a.cap > 0 && via[static_cast<std::size_t>(a.to)] == -1) {
            via[static_cast<std::size_t>(a.to)] = id;
            queue.push_back(a.to);
          }
        }
      }
      if (via[static_cast<std::size_t>(t)] == -1) break;
      for (int x = t; x != s;) {
        const int id = via[static_cast<std::size_t>(x)];
        arcs_[static_cast<std::size_t>(id)].cap -= 1;
        arcs_[static_cast<std::size_t>(id ^ 1)].cap += 1;
        x = arcs_[static_cast<std::size_t>(id ^ 1)].to;
      }
      ++flow;
    }
    return flow;
  }

  std::vector<bool> residual_reachable(int s) const {
    std::vector<bool> seen(adj_.size(), false);
    seen[static_cast<std::size_t>(s)] = true;
    std::vector<int> queue{s};
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (int id : adj_[static_cast<std::size_t>(queue[h])]) {
        const Arc& a = arcs_[static_cast<std::size_t>(id)];
        if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = true;
          queue.push_back(a.to);
        }
      }
    return seen;
  }

  int cap(int id) const { return arcs_[static_cast<std::size_t>(id)].cap; }
  int head(int id) const { return arcs_[static_cast<std::size_t>(id)].to; }

 private:
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> adj_;
};

inline std::vector<bool> membership(int n, std::span<const Vertex> set) {
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  for (Vertex v : set) in[static_cast<std::size_t>(v)] = true;
  return in;
}

inline void check_terminal_sets(const Graph& g, std::span<const Vertex> sources, std::span<const Vertex> sinks,
                                bool allow_overlap) {
  require(!sources.empty() && !sinks.empty(), "terminal sets must be nonempty");
  for (Vertex v : sources) require(v >= 0 && v < g.order(), "source out of range");
  for (Vertex v : sinks) require(v >= 0 && v < g.order(), "sink out of range");
  if (!allow_overlap) {
    auto in = membership(g.order(), sources);
    for (Vertex v : sinks) require(!in[static_cast<std::size_t>(v)], "sources and sinks must be disjoint");
  }
}

// Removes repeated vertices from a walk and keeps only its last segment that
// starts in `from` and first reaches `to` (an X-Y path in the usual sense).
inline std::vector<Vertex> trim_walk(std::vector<Vertex> walk, const std::vector<bool>& from,
                                     const std::vector<bool>& to) {
  // shortcut cycles
  std::vector<Vertex> simple;
  std::vector<int> pos;
  for (Vertex v : walk) {
    auto it = std::find(simple.begin(), simple.end(), v);
    if (it != simple.end())
      simple.erase(it + 1, simple.end());
    else
      simple.push_back(v);
  }
  std::size_t end = simple.size() - 1;
  for (std::size_t i = 0; i < simple.size(); ++i)
    if (to[static_cast<std::size_t>(simple[i])]) {
      end = i;
      break;
    }
  std::size_t begin = 0;
  for (std::size_t i = 0; i <= end; ++i)
    if (from[static_cast<std::size_t>(simple[i])]) begin = i;
  return {simple.begin() + static_cast<std::ptrdiff_t>(begin), simple.begin() + static_cast<std::ptrdiff_t>(end) + 1};
}

}  // namespace detail

// Minimum number of edges separating sources from sinks, with the source side
// X being everything reachable from the sources in the final residual graph.
inline EdgeCut min_edge_cut_between(const Graph& g, std::span<const Vertex> sources,
                                    std::span<const Vertex> sinks) {
  detail::check_terminal_sets(g, sources, sinks, false);
  const int n = g.order();
  detail::FlowNetwork net(n + 2);
  const int s = n, t = n + 1;
  for (const Edge& e : g.edges()) net.add_arc(e.u, e.v, 1, 1);
  for (Vertex v : sources) net.add_arc(s, v, detail::FlowNetwork::kInf);
  for (Vertex v : sinks) net.add_arc(v, t, detail::FlowNetwork::kInf);
  net.max_flow(s, t);
  auto reach = net.residual_reachable(s);
  reach.resize(static_cast<std::size_t>(n));
  return cut_of_side(g, std::move(reach));
}

// k pairwise edge-disjoint source-sink paths (vertex sequences whose internal
// vertices avoid both terminal sets), or nullopt if fewer than k exist.
inline std::optional<std::vector<std::vector<Vertex>>> edge_disjoint_paths(const Graph& g,
                                                                          std::span<const Vertex> sources,
                                                                          std::span<const Vertex> sinks, int k) {
  detail::check_terminal_sets(g, sources, sinks, false);
  const int n = g.order();
  detail::FlowNetwork net(n + 2);
  const int s = n, t = n + 1;
  const auto edges = g.edges();
  std::vector<int> arc_of(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) arc_of[i] = net.add_arc(edges[i].u, edges[i].v, 1, 1);
  for (Vertex v : sources) net.add_arc(s, v, detail::FlowNetwork::kInf);
  for (Vertex v : sinks) net.add_arc(v, t, detail::FlowNetwork::kInf);
  if (net.max_flow(s, t, k) < k) return std::nullopt;

  // Net flow direction per edge: cap 0 on the forward arc means u->v carries a unit.
  std::vector<std::vector<Vertex>> out_flow(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int c = net.cap(arc_of[i]);
    if (c == 0) out_flow[static_cast<std::size_t>(edges[i].u)].push_back(edges[i].v);
    if (c == 2) out_flow[static_cast<std::size_t>(edges[i].v)].push_back(edges[i].u);
  }
  const auto in_src = detail::membership(n, sources);
  const auto in_snk = detail::membership(n, sinks);
  std::vector<int> excess(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : out_flow[static_cast<std::size_t>(v)]) {
      ++excess[static_cast<std::size_t>(v)];
      --excess[static_cast<std::size_t>(w)];
    }
  std::vector<std::vector<Vertex>> paths;
  std::vector<Vertex> starts;
  for (Vertex v : sources)
    for (int i = 0; i < excess[static_cast<std::size_t>(v)]; ++i) starts.push_back(v);
  std::sort(starts.begin(), starts.end());
  for (Vertex v : starts) {
    std::vector<Vertex> walk{v};
    Vertex x = v;
    while (!(in_snk[static_cast<std::size_t>(x)] && out_flow[static_cast<std::size_t>(x)].empty()) &&
           !out_flow[static_cast<std::size_t>(x)].empty()) {
      Vertex y = out_flow[static_cast<std::size_t>(x)].back();
      out_flow[static_cast<std::size_t>(x)].pop_back();
      walk.push_back(y);
      x = y;
    }
    paths.push_back(detail::trim_walk(std::move(walk), in_src, in_snk));
    if (static_cast<int>(paths.size()) == k) break;
  }
  detail::ensure(static_cast<int>(paths.size()) == k, "edge_disjoint_paths: flow decomposition came up short");
  return paths;
}

// k pairwise vertex-disjoint source-sink paths via vertex splitting. A vertex
// in both sets yields a single-vertex path.
inline std::optional<std::vector<std::vector<Vertex>>> vertex_disjoint_paths(const Graph& g,
                                                                            std::span<const Vertex> sources,
                                                                            std::span<const Vertex> sinks, int k) {
  detail::check_terminal_sets(g, sources, sinks, true);
  const int n = g.order();
  // v_in = v, v_out = v + n
  detail::FlowNetwork net(2 * n + 2);
  const int s = 2 * n, t = 2 * n + 1;
  std::vector<int> split(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) split[static_cast<std::size_t>(v)] = net.add_arc(v, v + n, 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u + n, e.v, 1);
    net.add_arc(e.v + n, e.u, 1);
  }
  for (Vertex v : sources) net.add_arc(s, v, 1);
  for (Vertex v : sinks) net.add_arc(v + n, t, 1);
  if (net.max_flow(s, t, k) < k) return std::nullopt;

  const auto in_src = detail::membership(n, sources);
  const auto in_snk = detail::membership(n, sinks);
  // Successor of each used vertex along the flow.
  std::vector<Vertex> next(static_cast<std::size_t>(n), -1);
  std::vector<Vertex> heads;
  for (Vertex v = 0; v < n; ++v) {
    if (net.cap(split[static_cast<std::size_t>(v)]) != 0) continue;  // vertex unused
    heads.push_back(v);
  }
  // Rebuild successor relation from arc capacities.
  {
    int id = 2 * n;  // arc ids: split arcs occupy [0, 2n)
    for (const Edge& e : g.edges()) {
      if (net.cap(id) == 0) next[static_cast<std::size_t>(e.u)] = e.v;
      if (net.cap(id + 2) == 0) next[static_cast<std::size_t>(e.v)] = e.u;
      id += 4;
    }
  }
  // A used vertex is a path start if no used vertex points to it.
  std::vector<char> has_pred(static_cast<std::size_t>(n), 0);
  for (Vertex v : heads)
    if (next[static_cast<std::size_t>(v)] >= 0) has_pred[static_cast<std::size_t>(next[static_cast<std::size_t>(v)])] = 1;
  std::vector<std::vector<Vertex>> paths;
  for (Vertex v : heads) {
    if (has_pred[static_cast<std::size_t>(v)]) continue;
    std::vector<Vertex> walk{v};
    for (Vertex x = next[static_cast<std::size_t>(v)]; x >= 0; x = next[static_cast<std::size_t>(x)]) walk.push_back(x);
    paths.push_back(detail::trim_walk(std::move(walk), in_src, in_snk));
  }
  detail::ensure(static_cast<int>(paths.size()) == k, "vertex_disjoint_paths: flow decomposition came up short");
  return paths;
}

// k paths from z to distinct members of targets that pairwise share only z.
// If z is itself a target it contributes the trivial path {z}.
inline std::optional<std::vector<std::vector<Vertex>>> fan_paths(const Graph& g, Vertex z,
                                                                std::span<const Vertex> targets, int k) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> rest;
  for (Vertex t : targets) {
    if (t == z)
      out.push_back({z});
    else
      rest.push_back(t);
  }
  const int need = k - static_cast<int>(out.size());
  if (need <= 0) return out;
  if (static_cast<int>(rest.size()) < need) return std::nullopt;
  const int n = g.order();
  detail::FlowNetwork net(2 * n + 1);
  const int t = 2 * n;
  for (Vertex v = 0; v < n; ++v) net.add_arc(v, v + n, v == z ? detail::FlowNetwork::kInf : 1);
  for (const Edge& e : g.edges()) {
    net.add_arc(e.u + n, e.v, 1);
    net.add_arc(e.v + n, e.u, 1);
  }
  auto is_target = detail::membership(n, rest);
  for (Vertex v : rest) net.add_arc(v + n, t, 1);
  // Targets terminate paths: they must not forward flow.
  if (net.max_flow(z, t, need) < need) return std::nullopt;
  std::vector<std::vector<Vertex>> succ(static_cast<std::size_t>(n));
  int id = 2 * n;
  for (const Edge& e : g.edges()) {
    if (net.cap(id) == 0) succ[static_cast<std::size_t>(e.u)].push_back(e.v);
    if (net.cap(id + 2) == 0) succ[static_cast<std::size_t>(e.v)].push_back(e.u);
    id += 4;
  }
  std::vector<bool> from(static_cast<std::size_t>(n), false);
  from[static_cast<std::size_t>(z)] = true;
  while (!succ[static_cast<std::size_t>(z)].empty()) {
    std::vector<Vertex> walk{z};
    Vertex x = succ[static_cast<std::size_t>(z)].back();
    succ[static_cast<std::size_t>(z)].pop_back();
    walk.push_back(x);
    while (!is_target[static_cast<std::size_t>(x)] || !succ[static_cast<std::size_t>(x)].empty()) {
      if (succ[static_cast<std::size_t>(x)].empty()) break;
      Vertex y = succ[static_cast<std::size_t>(x)].back();
      succ[static_cast<std::size_t>(x)].pop_back();
      walk.push_back(y);
      x = y;
    }
    out.push_back(detail::trim_walk(std::move(walk), from, is_target));
  }
  detail::ensure(static_cast<int>(out.size()) >= k, "fan_paths: flow decomposition came up short");
  out.resize(static_cast<std::size_t>(k));
  return out;
}

}  // namespace tperf
