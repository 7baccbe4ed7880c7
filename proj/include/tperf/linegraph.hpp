#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

// Root graph H with L(H) = G. vertex_to_edge[x] is the edge of H that
// represents vertex x of G.
struct RootMapping {
  Graph root;
  std::vector<Edge> vertex_to_edge;

  Vertex edge_to_vertex(const Edge& e) const {
    auto it = std::find(vertex_to_edge.begin(), vertex_to_edge.end(), e);
    return it == vertex_to_edge.end() ? -1 : static_cast<Vertex>(it - vertex_to_edge.begin());
  }
};

struct LineGraph {
  Graph graph;
  std::vector<Edge> vertex_to_edge;  // vertex i stands for the i-th edge of h in lexicographic order
};

inline LineGraph line_graph(const Graph& h) {
  if (h.size() == 0) throw InvalidInput("line_graph: root graph has no edges");
  LineGraph out;
  out.vertex_to_edge = h.edges();
  std::map<Edge, Vertex> index;
  for (std::size_t i = 0; i < out.vertex_to_edge.size(); ++i) index[out.vertex_to_edge[i]] = static_cast<Vertex>(i);
  GraphBuilder b(h.size());
  for (Vertex x = 0; x < h.order(); ++x) {
    auto nb = h.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        b.add_edge_if_absent(index[Edge(x, nb[i])], index[Edge(x, nb[j])]);
  }
  out.graph = b.build();
  return out;
}

// True iff L(m.root) under m.vertex_to_edge is exactly g.
inline bool verify_root_mapping(const Graph& g, const RootMapping& m) {
  if (static_cast<int>(m.vertex_to_edge.size()) != g.order() || m.root.size() != g.order()) return false;
  std::vector<Edge> sorted = m.vertex_to_edge;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const Edge& e : sorted)
    if (e.v >= m.root.order() || !m.root.has_edge(e)) return false;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b = a + 1; b < g.order(); ++b) {
      const Edge& ea = m.vertex_to_edge[static_cast<std::size_t>(a)];
      const Edge& eb = m.vertex_to_edge[static_cast<std::size_t>(b)];
      const bool share = ea.has(eb.u) || ea.has(eb.v);
      if (share != g.adjacent(a, b)) return false;
    }
  return true;
}

namespace detail {

// Partial root built over a prefix of a BFS order of g.
struct PartialRoot {
  std::vector<Edge> edge_of;                   // per g-vertex, valid once placed
  std::vector<std::vector<Vertex>> incident;   // per root vertex, placed g-vertices
  int root_order = 0;

  // Stars of the root vertices as sets of g-vertices; equal keys mean the
  // two partial roots differ only by renaming root vertices.
  std::vector<std::vector<Vertex>> key() const {
    std::vector<std::vector<Vertex>> k;
    for (auto s : incident) {
      std::sort(s.begin(), s.end());
      k.push_back(std::move(s));
    }
    std::sort(k.begin(), k.end());
    return k;
  }
};

inline constexpr std::size_t kMaxPartialRoots = 256;

inline std::optional<RootMapping> recognize_connected_line_graph(const Graph& g) {
  const int n = g.order();
  if (n == 0) return RootMapping{Graph(0), {}};
  std::vector<Vertex> order{0};
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (Vertex y : g.neighbors(order[h]))
      if (!seen[static_cast<std::size_t>(y)]) {
        seen[static_cast<std::size_t>(y)] = 1;
        order.push_back(y);
      }
  detail::require(static_cast<int>(order.size()) == n, "recognize_line_graph: graph must be connected");

  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  PartialRoot first;
  first.edge_of.assign(static_cast<std::size_t>(n), Edge());
  first.edge_of[static_cast<std::size_t>(order[0])] = Edge(0, 1);
  first.incident = {{order[0]}, {order[0]}};
  first.root_order = 2;
  placed[static_cast<std::size_t>(order[0])] = 1;
  std::vector<PartialRoot> cands{first};

  for (std::size_t step = 1; step < order.size(); ++step) {
    const Vertex v = order[step];
    std::vector<Vertex> nbrs;
    for (Vertex y : g.neighbors(v))
      if (placed[static_cast<std::size_t>(y)]) nbrs.push_back(y);
    const Vertex w = nbrs.front();
    std::vector<PartialRoot> next;
    std::vector<std::vector<std::vector<Vertex>>> keys;
    for (const PartialRoot& pr : cands) {
      const Edge we = pr.edge_of[static_cast<std::size_t>(w)];
      for (Vertex s : {we.u, we.v}) {
        const auto& at_s = pr.incident[static_cast<std::size_t>(s)];
        // every g-vertex at s must be a neighbour of v
        bool ok = std::all_of(at_s.begin(), at_s.end(),
                              [&](Vertex z) { return std::binary_search(nbrs.begin(), nbrs.end(), z); });
        if (!ok) continue;
        std::vector<Vertex> rest;
        for (Vertex z : nbrs)
          if (!pr.edge_of[static_cast<std::size_t>(z)].has(s)) rest.push_back(z);
        std::vector<Vertex> t_options;
        if (rest.empty()) {
          t_options.push_back(pr.root_order);  // fresh vertex
        } else {
          const Edge re = pr.edge_of[static_cast<std::size_t>(rest.front())];
          t_options = {re.u, re.v};
        }
        for (Vertex t : t_options) {
          if (t == s) continue;
          if (t < pr.root_order) {
            const auto& at_t = pr.incident[static_cast<std::size_t>(t)];
            if (at_t.size() != rest.size()) continue;
            bool match = std::all_of(at_t.begin(), at_t.end(), [&](Vertex z) {
              return std::find(rest.begin(), rest.end(), z) != rest.end();
            });
            if (!match) continue;
            // root must stay simple
            bool parallel = std::any_of(at_s.begin(), at_s.end(),
                                        [&](Vertex z) { return pr.edge_of[static_cast<std::size_t>(z)].has(t); });
            if (parallel) continue;
          }
          PartialRoot nx = pr;
          if (t == pr.root_order) {
            nx.incident.emplace_back();
            ++nx.root_order;
          }
          nx.edge_of[static_cast<std::size_t>(v)] = Edge(s, t);
          nx.incident[static_cast<std::size_t>(s)].push_back(v);
          nx.incident[static_cast<std::size_t>(t)].push_back(v);
          auto k = nx.key();
          if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
          keys.push_back(std::move(k));
          next.push_back(std::move(nx));
        }
      }
    }
    if (next.empty()) return std::nullopt;
    detail::ensure(next.size() <= kMaxPartialRoots, "recognize_line_graph: too many partial roots");
    cands = std::move(next);
    placed[static_cast<std::size_t>(v)] = 1;
  }

  // Prefer the root with fewest vertices (K3 yields K3, not the claw).
  const PartialRoot* best = nullptr;
  for (const PartialRoot& pr : cands)
    if (!best || pr.root_order < best->root_order) best = &pr;
  RootMapping m;
  m.vertex_to_edge = best->edge_of;
  m.root = Graph::from_edges(best->root_order, m.vertex_to_edge);
  return m;
}

}  // namespace detail

// Root reconstruction per connected component; roots of different components
// are placed side by side. Returns nullopt when g is not a line graph.
inline std::optional<RootMapping> recognize_line_graph(const Graph& g) {
  RootMapping out;
  out.vertex_to_edge.assign(static_cast<std::size_t>(g.order()), Edge());
  std::vector<Edge> all;
  int offset = 0;
  for (const auto& comp : connected_components(g)) {
    Mapped sub = induced_subgraph(g, comp);
    auto m = detail::recognize_connected_line_graph(sub.graph);
    if (!m) return std::nullopt;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      const Edge e = m->vertex_to_edge[i];
      const Edge shifted(e.u + offset, e.v + offset);
      out.vertex_to_edge[static_cast<std::size_t>(sub.to_parent[i])] = shifted;
      all.push_back(shifted);
    }
    offset += m->root.order();
  }
  out.root = Graph::from_edges(offset, all);
  detail::ensure(verify_root_mapping(g, out), "recognize_line_graph: reconstructed root fails verification");
  return out;
}

}  // namespace tperf
