#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

struct BlockDecomposition {
  // Sorted vertex sets; bridges appear as two-vertex blocks and isolated
  // vertices as singletons. Ordered lexicographically by vertex list.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<std::vector<Edge>> block_edges;
  std::vector<Vertex> cut_vertices;
  // Block-cut incidence: for each block the cut vertices it contains.
  std::vector<std::vector<Vertex>> block_cut_vertices;

  // Index of the block containing edge e, or -1.
  int block_of(const Edge& e) const {
    for (std::size_t i = 0; i < block_edges.size(); ++i)
      if (std::binary_search(block_edges[i].begin(), block_edges[i].end(), e))
        return static_cast<int>(i);
    return -1;
  }
};

inline BlockDecomposition blocks(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Edge>> raw_blocks;
  std::vector<Edge> edge_stack;
  std::vector<char> is_cut(static_cast<std::size_t>(n), 0);
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;

  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    if (g.degree(root) == 0) {
      raw_blocks.emplace_back();  // isolated vertex, filled below
      raw_blocks.back().emplace_back(root, root);
      continue;
    }
    stack.push_back({root, -1, 0, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nb = g.neighbors(f.v);
      if (f.next < nb.size()) {
        Vertex w = nb[f.next++];
        if (w == f.parent) continue;
        if (disc[static_cast<std::size_t>(w)] < 0) {
          edge_stack.emplace_back(f.v, w);
          ++f.children;
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, f.v, 0, 0});
        } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(f.v)]) {
          edge_stack.emplace_back(f.v, w);
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex p = f.parent;
      const int children = f.children;
      stack.pop_back();
      if (p < 0) {
        if (children > 1) is_cut[static_cast<std::size_t>(v)] = 1;
        continue;
      }
      low[static_cast<std::size_t>(p)] =
          std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(v)]);
      if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(p)]) {
        if (stack.back().parent >= 0) is_cut[static_cast<std::size_t>(p)] = 1;
        std::vector<Edge> block;
        const Edge stop(p, v);
        while (!edge_stack.empty()) {
          Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e == stop) break;
        }
        raw_blocks.push_back(std::move(block));
      }
    }
  }

  struct Item {
    std::vector<Vertex> verts;
    std::vector<Edge> edges;
  };
  std::vector<Item> items;
  for (auto& be : raw_blocks) {
    Item it;
    if (be.size() == 1 && be[0].u == be[0].v) {
      it.verts = {be[0].u};
    } else {
      for (const Edge& e : be) {
        it.verts.push_back(e.u);
        it.verts.push_back(e.v);
      }
      std::sort(it.verts.begin(), it.verts.end());
      it.verts.erase(std::unique(it.verts.begin(), it.verts.end()), it.verts.end());
      it.edges = be;
      std::sort(it.edges.begin(), it.edges.end());
    }
    items.push_back(std::move(it));
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.verts < b.verts; });

  BlockDecomposition out;
  for (Vertex v = 0; v < n; ++v)
    if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
  for (auto& it : items) {
    std::vector<Vertex> cuts;
    for (Vertex v : it.verts)
      if (is_cut[static_cast<std::size_t>(v)]) cuts.push_back(v);
    out.blocks.push_back(std::move(it.verts));
    out.block_edges.push_back(std::move(it.edges));
    out.block_cut_vertices.push_back(std::move(cuts));
  }
  return out;
}

inline std::vector<Vertex> articulation_points(const Graph& g) { return blocks(g).cut_vertices; }

// Connected, at least three vertices, no cut vertex.
inline bool is_two_connected(const Graph& g) {
  if (g.order() < 3) return false;
  if (!is_connected(g)) return false;
  return articulation_points(g).empty();
}

// Vertex separation (G1, G2) of a graph: both sides proper, no edge between
// side1 \ side2 and side2 \ side1.
struct Separation {
  std::vector<Vertex> side1;
  std::vector<Vertex> side2;
  std::vector<Vertex> separator;  // side1 ∩ side2, sorted

  int order() const { return static_cast<int>(separator.size()); }
};

namespace detail {

// Components of g - removed, as sorted vertex lists.
inline std::vector<std::vector<Vertex>> components_without(const Graph& g,
                                                           std::span<const Vertex> removed) {
  Mapped rest = delete_vertices(g, removed);
  auto comps = connected_components(rest.graph);
  for (auto& c : comps) {
    for (auto& x : c) x = rest.to_parent[static_cast<std::size_t>(x)];
    std::sort(c.begin(), c.end());
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

// Lexicographically smallest pair {a, b}, a < b, whose removal disconnects g.
inline std::optional<std::pair<Vertex, Vertex>> smallest_separating_pair(const Graph& g) {
  const int n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    const Vertex ra[1] = {a};
    Mapped rest = delete_vertices(g, ra);
    if (!is_connected(rest.graph)) {
      // a is a cut vertex: pair it with the smallest b keeping g - {a,b} disconnected.
      for (Vertex b = a + 1; b < n; ++b) {
        const Vertex pair[2] = {a, b};
        if (components_without(g, pair).size() >= 2) return std::pair{a, b};
      }
      for (Vertex b = 0; b < a; ++b) {
        const Vertex pair[2] = {b, a};
        if (components_without(g, pair).size() >= 2) return std::pair{b, a};
      }
      continue;
    }
    auto cuts = articulation_points(rest.graph);
    Vertex best = -1;
    for (Vertex c : cuts) {
      Vertex b = rest.to_parent[static_cast<std::size_t>(c)];
      if (b > a && (best < 0 || b < best)) best = b;
    }
    if (best >= 0) return std::pair{a, best};
  }
  return std::nullopt;
}

}  // namespace detail

// Connected, at least four vertices, and no set of at most two vertices
// disconnects it. Graphs on fewer than four vertices report false.
inline bool is_three_connected(const Graph& g) {
  if (g.order() < 4) return false;
  if (!is_two_connected(g)) return false;
  return !detail::smallest_separating_pair(g).has_value();
}

// Order-2 separation at the lexicographically smallest separating pair.
// side1 = the pair plus the component of g - {u,v} holding the smallest vertex.
inline Separation find_two_separation(const Graph& g) {
  detail::require(g.order() >= 4, "find_two_separation needs at least four vertices");
  detail::require(is_connected(g), "find_two_separation needs a connected graph");
  auto pair = detail::smallest_separating_pair(g);
  if (!pair) throw PreconditionViolation("find_two_separation: graph is 3-connected");
  const Vertex sep[2] = {pair->first, pair->second};
  auto comps = detail::components_without(g, sep);
  Separation s;
  s.separator = {pair->first, pair->second};
  s.side1 = comps.front();
  for (std::size_t i = 1; i < comps.size(); ++i)
    s.side2.insert(s.side2.end(), comps[i].begin(), comps[i].end());
  for (Vertex x : sep) {
    s.side1.push_back(x);
    s.side2.push_back(x);
  }
  std::sort(s.side1.begin(), s.side1.end());
  std::sort(s.side2.begin(), s.side2.end());
  return s;
}

// ---------------------------------------------------------------------------
// Spanning trees and fundamental cycles.

// BFS spanning forest, roots taken in increasing vertex order.
inline std::vector<Edge> spanning_forest(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Edge> tree;
  std::vector<Vertex> queue;
  for (Vertex r = 0; r < g.order(); ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    seen[static_cast<std::size_t>(r)] = 1;
    queue.assign(1, r);
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (Vertex y : g.neighbors(queue[h]))
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          tree.emplace_back(queue[h], y);
          queue.push_back(y);
        }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

// Vertex sequence of the path between a and b in a forest given by its edges.
inline std::vector<Vertex> tree_path(int n, std::span<const Edge> tree, Vertex a, Vertex b) {
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const Edge& e : tree) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -2);
  parent[static_cast<std::size_t>(a)] = -1;
  std::vector<Vertex> queue{a};
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (Vertex y : adj[static_cast<std::size_t>(queue[h])])
      if (parent[static_cast<std::size_t>(y)] == -2) {
        parent[static_cast<std::size_t>(y)] = queue[h];
        queue.push_back(y);
      }
  if (parent[static_cast<std::size_t>(b)] == -2) throw PreconditionViolation("tree_path: endpoints not connected by the tree");
  std::vector<Vertex> path;
  for (Vertex x = b; x != -1; x = parent[static_cast<std::size_t>(x)]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

// The unique cycle of tree + e, as a vertex sequence starting at e.u and
// ending at e.v (the closing edge e is implicit).
inline std::vector<Vertex> spanning_tree_fundamental_cycle(const Graph& g, std::span<const Edge> tree,
                                                           const Edge& e) {
  detail::require(g.has_edge(e), "fundamental cycle: edge not in graph");
  detail::require(std::find(tree.begin(), tree.end(), e) == tree.end(),
                  "fundamental cycle: edge " + to_string(e) + " is a tree edge");
  return tree_path(g.order(), tree, e.u, e.v);
}

inline std::vector<Edge> path_edges(std::span<const Vertex> path) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < path.size(); ++i) out.emplace_back(path[i - 1], path[i]);
  return out;
}

}  // namespace tperf
