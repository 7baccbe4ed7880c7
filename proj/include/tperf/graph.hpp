#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tperf/errors.hpp"

namespace tperf {

using Vertex = int;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  bool has(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable once built; use GraphBuilder or Graph::from_edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)) {
    detail::require(n >= 0, "negative vertex count");
  }

  // Strict constructor: rejects loops, duplicates and out-of-range ends.
  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Edge> list;
    for (auto [a, b] : edges) {
      if (a == b) throw InvalidInput("loop at vertex " + std::to_string(a));
      list.emplace_back(a, b);
    }
    return from_edges(n, list);
  }

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return m_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  bool adjacent(Vertex a, Vertex b) const {
    const auto& row = adj_[static_cast<std::size_t>(a)];
    return std::binary_search(row.begin(), row.end(), b);
  }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  int max_degree() const {
    int d = 0;
    for (const auto& row : adj_) d = std::max(d, static_cast<int>(row.size()));
    return d;
  }

  // All edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex a = 0; a < order(); ++a)
      for (Vertex b : neighbors(a))
        if (a < b) out.emplace_back(a, b);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

// Mutable staging area for graph construction.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n = 0) : adj_(static_cast<std::size_t>(n)) {}

  int order() const { return static_cast<int>(adj_.size()); }

  Vertex add_vertex() {
    adj_.emplace_back();
    return order() - 1;
  }

  // Returns false (and changes nothing) for loops and already present edges.
  bool add_edge_if_absent(Vertex a, Vertex b) {
    check(a);
    check(b);
    if (a == b) return false;
    auto& ra = adj_[static_cast<std::size_t>(a)];
    if (std::find(ra.begin(), ra.end(), b) != ra.end()) return false;
    ra.push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
    return true;
  }

  void add_edge(Vertex a, Vertex b) {
    check(a);
    check(b);
    if (a == b) throw InvalidInput("loop at vertex " + std::to_string(a));
    if (!add_edge_if_absent(a, b))
      throw InvalidInput("duplicate edge " + to_string(Edge(a, b)));
  }

  Graph build() const {
    Graph g;
    g.adj_ = adj_;
    std::size_t deg_sum = 0;
    for (auto& row : g.adj_) {
      std::sort(row.begin(), row.end());
      deg_sum += row.size();
    }
    g.m_ = static_cast<int>(deg_sum / 2);
    return g;
  }

 private:
  void check(Vertex x) const {
    if (x < 0 || x >= order())
      throw InvalidInput("vertex " + std::to_string(x) + " out of range [0," +
                         std::to_string(order()) + ")");
  }
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const Edge& e : edges) b.add_edge(e.u, e.v);
  return b.build();
}

// A derived graph together with the vertex correspondence to its parent.
// to_parent[i] is a representative parent vertex of new vertex i (-1 for
// vertices with no parent); from_parent[p] is the image of parent vertex p
// (-1 if it was removed).
struct Mapped {
  Graph graph;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;
};

inline Mapped induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Mapped out;
  out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    out.from_parent[static_cast<std::size_t>(v)] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  GraphBuilder b(static_cast<int>(sorted.size()));
  for (Vertex v : sorted)
    for (Vertex w : g.neighbors(v))
      if (v < w && out.from_parent[static_cast<std::size_t>(w)] >= 0)
        b.add_edge(out.from_parent[static_cast<std::size_t>(v)],
                   out.from_parent[static_cast<std::size_t>(w)]);
  out.graph = b.build();
  return out;
}

inline Mapped delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) gone[static_cast<std::size_t>(v)] = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[static_cast<std::size_t>(v)]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

inline Graph delete_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  std::sort(drop.begin(), drop.end());
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) b.add_edge(e.u, e.v);
  return b.build();
}

inline Graph add_edge(const Graph& g, Vertex a, Vertex b) {
  GraphBuilder builder(g.order());
  for (const Edge& e : g.edges()) builder.add_edge(e.u, e.v);
  builder.add_edge_if_absent(a, b);
  return builder.build();
}

// Merges u and v into a single vertex. Parallel edges collapse and the edge
// uv, if present, disappears. The merged vertex takes the smaller label slot.
inline Mapped identify_vertices(const Graph& g, Vertex u, Vertex v) {
  detail::require(u != v, "identify_vertices needs distinct vertices");
  detail::require(u >= 0 && v >= 0 && u < g.order() && v < g.order(),
                  "identify_vertices: vertex out of range");
  const Vertex keep = std::min(u, v);
  const Vertex drop = std::max(u, v);
  Mapped out;
  out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  for (Vertex x = 0; x < g.order(); ++x) {
    if (x == drop) continue;
    out.from_parent[static_cast<std::size_t>(x)] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(x);
  }
  out.from_parent[static_cast<std::size_t>(drop)] = out.from_parent[static_cast<std::size_t>(keep)];
  GraphBuilder b(static_cast<int>(out.to_parent.size()));
  for (const Edge& e : g.edges())
    b.add_edge_if_absent(out.from_parent[static_cast<std::size_t>(e.u)],
                         out.from_parent[static_cast<std::size_t>(e.v)]);
  out.graph = b.build();
  return out;
}

// Connected components as sorted vertex lists, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.order()), -1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    comp[static_cast<std::size_t>(s)] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (Vertex y : g.neighbors(x))
        if (comp[static_cast<std::size_t>(y)] < 0) {
          comp[static_cast<std::size_t>(y)] = id;
          stack.push_back(y);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

// ---------------------------------------------------------------------------
// Named graphs. Squares of cycles use v1..vn mapped to 0..n-1, vi ~ vj iff
// their cyclic distance is at most 2.

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) b.add_edge(i, j);
  return b.build();
}

inline Graph cycle_graph(int n) {
  detail::require(n >= 3, "cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return b.build();
}

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return b.build();
}

// Rim 0..4, hub 5.
inline Graph wheel5() {
  GraphBuilder b(6);
  for (Vertex i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, 5);
  }
  return b.build();
}

// Centre 0, leaves 1, 2, 3.
inline Graph claw() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}); }

inline Graph cycle_square(int n) {
  if (n < 5) throw InvalidInput("square of a cycle needs n >= 5");
  GraphBuilder b(n);
  for (Vertex i = 0; i < n; ++i) {
    b.add_edge_if_absent(i, (i + 1) % n);
    b.add_edge_if_absent(i, (i + 2) % n);
  }
  return b.build();
}

// C_n^2 - v_n.
inline Graph cycle_square_minus_vertex(int n) {
  const Vertex last = n - 1;
  return delete_vertices(cycle_square(n), std::span<const Vertex>(&last, 1)).graph;
}

// C_6^2 - v1v6.
inline Graph cycle_square6_minus_edge() {
  const Edge e(0, 5);
  return delete_edges(cycle_square(6), std::span<const Edge>(&e, 1));
}

enum class NamedGraph { k4, w5, claw, c2, c2_minus_vertex, c6sq_minus_edge };

inline Graph make_named(NamedGraph name, int n = 0) {
  switch (name) {
    case NamedGraph::k4: return complete_graph(4);
    case NamedGraph::w5: return wheel5();
    case NamedGraph::claw: return claw();
    case NamedGraph::c2: return cycle_square(n);
    case NamedGraph::c2_minus_vertex: return cycle_square_minus_vertex(n);
    case NamedGraph::c6sq_minus_edge: return cycle_square6_minus_edge();
  }
  throw InvalidInput("unknown named graph");
}

}  // namespace tperf
