#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tperf/connectivity.hpp"
#include "tperf/flow.hpp"
#include "tperf/graph.hpp"
#include "tperf/parity.hpp"

namespace tperf {

// Two colour classes; an edge is odd when both ends share a class. in_b[v]
// is 1 for class B. Class A is the default.
struct Bipartition {
  std::vector<char> in_b;

  static Bipartition all_in_a(int n) { return {std::vector<char>(static_cast<std::size_t>(n), 0)}; }
  int order() const { return static_cast<int>(in_b.size()); }
  char side(Vertex v) const { return in_b[static_cast<std::size_t>(v)]; }
  bool odd(const Edge& e) const { return side(e.u) == side(e.v); }
};

// Odd edges of g under p (sorted) and the spanning subgraph of even edges.
struct OddEdgeView {
  std::vector<Edge> odd_edges;
  Graph even_subgraph;
};

inline OddEdgeView odd_edge_view(const Graph& g, const Bipartition& p) {
  detail::require(p.order() == g.order(), "bipartition size does not match the graph");
  OddEdgeView out;
  GraphBuilder b(g.order());
  for (const Edge& e : g.edges()) {
    if (p.odd(e))
      out.odd_edges.push_back(e);
    else
      b.add_edge(e.u, e.v);
  }
  out.even_subgraph = b.build();
  return out;
}

inline std::vector<Edge> odd_edges(const Graph& g, const Bipartition& p) { return odd_edge_view(g, p).odd_edges; }

// A xor X: every vertex of the side switches class.
inline Bipartition flip(const Bipartition& p, const std::vector<bool>& side) {
  detail::require(side.size() == p.in_b.size(), "flip: side indicator has the wrong size");
  Bipartition q = p;
  for (std::size_t i = 0; i < side.size(); ++i)
    if (side[i]) q.in_b[i] ^= 1;
  return q;
}

// Do the chords p1p2 and q1q2 of a cycle cross? The cycle is a vertex
// sequence; all four endpoints must be distinct cycle vertices.
inline bool crossing_on_cycle(std::span<const Vertex> cycle, Vertex p1, Vertex p2, Vertex q1, Vertex q2) {
  auto pos = [&](Vertex x) {
    auto it = std::find(cycle.begin(), cycle.end(), x);
    detail::require(it != cycle.end(), "crossing_on_cycle: vertex " + std::to_string(x) + " is not on the cycle");
    return it - cycle.begin();
  };
  const auto a = pos(p1), b = pos(p2), c = pos(q1), d = pos(q2);
  detail::require(a != b && a != c && a != d && b != c && b != d && c != d,
                  "crossing_on_cycle: endpoints must be distinct");
  const auto lo = std::min(a, b), hi = std::max(a, b);
  const bool c_in = lo < c && c < hi, d_in = lo < d && d < hi;
  return c_in != d_in;
}

struct ThetaStats {
  std::int64_t triads_calls = 0;
  std::int64_t flips = 0;
  std::int64_t one_odd_calls = 0;
  std::int64_t two_odd_cut_calls = 0;
  std::int64_t two_odd_decide_calls = 0;
  std::int64_t reductions = 0;
  std::int64_t branchings = 0;
  std::int64_t invariant_checks = 0;
  int max_depth = 0;
};

// One step of the decision, named "<procedure>:<step>", with the size of the
// graph it acted on and the recursion depth.
struct TraceEntry {
  std::string rule;
  int order = 0;
  int size = 0;
  int depth = 0;
};

struct ThetaVerdict {
  bool contains_skewed_theta = false;
  std::vector<TraceEntry> trace;
  ThetaStats stats;
};

struct ThetaOptions {
  ParityConfig parity;
  bool record_trace = true;
};

namespace detail {

inline std::size_t ix(Vertex v) { return static_cast<std::size_t>(v); }

struct ThetaRun {
  ThetaOptions options;
  ThetaStats stats;
  std::vector<TraceEntry> trace;
  int depth = 0;

  void note(const std::string& rule, const Graph& g) {
    if (options.record_trace) trace.push_back({rule, g.order(), g.size(), depth});
  }
  void check(bool ok, const std::string& what) {
    ++stats.invariant_checks;
    ensure(ok, what);
  }
  struct Descend {
    ThetaRun& run;
    explicit Descend(ThetaRun& r) : run(r) { run.stats.max_depth = std::max(run.stats.max_depth, ++run.depth); }
    ~Descend() { --run.depth; }
  };
};

struct Restricted {
  Graph g;
  Bipartition p;
  std::vector<Vertex> to_parent;
  std::vector<Vertex> from_parent;
};

inline Restricted restrict_to(const Graph& g, const Bipartition& p, std::span<const Vertex> vertices) {
  Mapped m = induced_subgraph(g, vertices);
  Restricted r{std::move(m.graph), {}, std::move(m.to_parent), std::move(m.from_parent)};
  r.p.in_b.resize(r.to_parent.size());
  for (std::size_t i = 0; i < r.to_parent.size(); ++i) r.p.in_b[i] = p.side(r.to_parent[i]);
  return r;
}

inline Restricted restrict_mapped(Mapped m, const Bipartition& p) {
  Restricted r{std::move(m.graph), {}, std::move(m.to_parent), std::move(m.from_parent)};
  r.p.in_b.resize(r.to_parent.size());
  for (std::size_t i = 0; i < r.to_parent.size(); ++i) r.p.in_b[i] = p.side(r.to_parent[i]);
  return r;
}

inline std::vector<Vertex> block_containing(const Graph& g, const Edge& e) {
  const auto bd = blocks(g);
  const int b = bd.block_of(e);
  ensure(b >= 0, "edge " + to_string(e) + " lies in no block");
  return bd.blocks[static_cast<std::size_t>(b)];
}

inline bool in_set(std::span<const Vertex> s, Vertex x) { return std::find(s.begin(), s.end(), x) != s.end(); }

inline std::pair<int, int> count_parity(const EdgeCut& cut, const Bipartition& p) {
  int odd = 0, even = 0;
  for (const Edge& e : cut.edges) (p.odd(e) ? odd : even)++;
  return {odd, even};
}

// Components of the forest spanned by `edges` (isolated vertices excluded).
inline std::vector<std::vector<Vertex>> forest_components(int n, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(ix(n));
  std::vector<char> touched(ix(n), 0);
  for (const Edge& e : edges) {
    adj[ix(e.u)].push_back(e.v);
    adj[ix(e.v)].push_back(e.u);
    touched[ix(e.u)] = touched[ix(e.v)] = 1;
  }
  std::vector<char> seen(ix(n), 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (!touched[ix(s)] || seen[ix(s)]) continue;
    seen[ix(s)] = 1;
    std::vector<Vertex> comp{s};
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (Vertex y : adj[ix(comp[h])])
        if (!seen[ix(y)]) {
          seen[ix(y)] = 1;
          comp.push_back(y);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

struct TriadsResult {
  bool theta = false;
  EdgeCut cut;
};

// Shared tail of the triads procedure: two disjoint trees, each meeting one
// end of every chosen odd edge, are pruned to minimal trees and the even
// edge connectivity between them decides.
inline TriadsResult tree_pair_cut(const Graph& g, const Bipartition& p, const Graph& gp, std::vector<Edge> forest,
                                  const std::vector<Edge>& odd3, ThetaRun& run, const std::string& label) {
  const int n = g.order();
  std::sort(forest.begin(), forest.end());
  forest.erase(std::unique(forest.begin(), forest.end()), forest.end());
  std::vector<char> terminal(ix(n), 0);
  for (const Edge& o : odd3) terminal[ix(o.u)] = terminal[ix(o.v)] = 1;

  // prune non-terminal leaves
  std::vector<int> deg(ix(n), 0);
  for (const Edge& e : forest) ++deg[ix(e.u)], ++deg[ix(e.v)];
  std::vector<char> alive_edge(forest.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < forest.size(); ++i) {
      if (!alive_edge[i]) continue;
      const Edge& e = forest[i];
      for (Vertex leaf : {e.u, e.v}) {
        if (deg[ix(leaf)] == 1 && !terminal[ix(leaf)]) {
          alive_edge[i] = 0;
          --deg[ix(e.u)], --deg[ix(e.v)];
          changed = true;
          break;
        }
      }
    }
  }
  std::vector<Edge> pruned;
  for (std::size_t i = 0; i < forest.size(); ++i)
    if (alive_edge[i]) pruned.push_back(forest[i]);
  auto trees = forest_components(n, pruned);
  // a terminal isolated by pruning is a one-vertex tree
  for (Vertex v = 0; v < n; ++v) {
    if (!terminal[ix(v)] || deg[ix(v)] != 0) continue;
    trees.push_back({v});
  }
  run.check(trees.size() == 2, label + ": expected two trees, found " + std::to_string(trees.size()));
  std::size_t acyclic_edges = 0;
  for (const auto& t : trees) acyclic_edges += t.size() - 1;
  run.check(acyclic_edges == pruned.size(), label + ": tree pair contains a cycle");
  for (const Edge& o : odd3) {
    const bool a = in_set(trees[0], o.u), b = in_set(trees[0], o.v);
    const bool c = in_set(trees[1], o.u), d = in_set(trees[1], o.v);
    run.check((a && d && !b && !c) || (b && c && !a && !d),
              label + ": odd edge " + to_string(o) + " does not join the two trees");
  }
  const EdgeCut even_cut = min_edge_cut_between(gp, trees[0], trees[1]);
  if (even_cut.size() >= 3) {
    run.note("triads:" + label + "-theta", g);
    return {true, {}};
  }
  EdgeCut cut = cut_of_side(g, even_cut.in_source_side);
  const auto [odd, even] = count_parity(cut, p);
  run.check(odd >= 3 && even <= 2, label + ": returned cut is not odd-heavy");
  run.note("triads:" + label + "-cut", g);
  return {false, std::move(cut)};
}

}  // namespace detail

// Given three odd edges of a 2-connected subcubic graph, either certify a
// skewed theta (theta = true) or return an edge cut with more odd than even
// edges.
inline detail::TriadsResult triads(const Graph& g, const Bipartition& p, const std::vector<Edge>& odd3,
                                   detail::ThetaRun& run) {
  using detail::ix;
  ++run.stats.triads_calls;
  detail::require(odd3.size() == 3, "triads needs exactly three odd edges");
  for (const Edge& o : odd3) detail::require(g.has_edge(o) && p.odd(o), "triads: " + to_string(o) + " is not an odd edge");
  const int n = g.order();
  const Graph gp = odd_edge_view(g, p).even_subgraph;

  // disconnected even subgraph
  const auto comps = connected_components(gp);
  if (comps.size() > 1) {
    EdgeCut cut = cut_of_side(g, detail::membership(n, comps.front()));
    const auto [odd, even] = detail::count_parity(cut, p);
    run.check(even == 0 && odd >= 1, "triads: component cut contains even edges");
    run.note("triads:even-subgraph-disconnected", g);
    return {false, std::move(cut)};
  }

  // fundamental cycles of a spanning tree of the even subgraph
  const auto tree = spanning_forest(gp);
  std::vector<std::vector<Edge>> tree_part(3);
  for (int i = 0; i < 3; ++i) tree_part[ix(i)] = path_edges(tree_path(n, tree, odd3[ix(i)].u, odd3[ix(i)].v));

  // edge-disjoint fundamental cycles
  auto shares_edge = [](const std::vector<Edge>& a, const std::vector<Edge>& b) {
    for (const Edge& e : a)
      if (std::find(b.begin(), b.end(), e) != b.end()) return true;
    return false;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!shares_edge(tree_part[ix(i)], tree_part[ix(j)])) {
        run.note("triads:edge-disjoint-odd-cycles", g);
        return {true, {}};
      }

  // an edge on all three cycles
  std::optional<Edge> common;
  for (const Edge& e : tree_part[0])
    if (std::find(tree_part[1].begin(), tree_part[1].end(), e) != tree_part[1].end() &&
        std::find(tree_part[2].begin(), tree_part[2].end(), e) != tree_part[2].end()) {
      if (!common || e < *common) common = e;
    }
  if (common) {
    std::vector<Edge> forest;
    for (const auto& part : tree_part)
      for (const Edge& e : part)
        if (e != *common) forest.push_back(e);
    return detail::tree_pair_cut(g, p, gp, std::move(forest), odd3, run, "common-edge");
  }

  // D = edges on exactly one of the cycles, split by the odd edges
  std::vector<Edge> all;
  for (int i = 0; i < 3; ++i) {
    all.insert(all.end(), tree_part[ix(i)].begin(), tree_part[ix(i)].end());
    all.push_back(odd3[ix(i)]);
  }
  std::sort(all.begin(), all.end());
  std::vector<Edge> dset;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    if (j - i == 1) dset.push_back(all[i]);
    i = j;
  }
  std::vector<std::vector<Vertex>> dadj(ix(n));
  for (const Edge& e : dset) {
    dadj[ix(e.u)].push_back(e.v);
    dadj[ix(e.v)].push_back(e.u);
  }
  for (Vertex v = 0; v < n; ++v)
    run.check(dadj[ix(v)].empty() || dadj[ix(v)].size() == 2, "triads: symmetric difference is not a cycle");
  const Edge& o1 = odd3[0];
  std::vector<Vertex> dcycle{o1.v};
  for (Vertex prev = o1.u, cur = o1.v;;) {
    const auto& nb = dadj[ix(cur)];
    const Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = nxt;
    if (cur == o1.v) break;
    dcycle.push_back(cur);
  }
  const auto on_d = std::count_if(dadj.begin(), dadj.end(), [](const auto& a) { return !a.empty(); });
  run.check(dcycle.size() == static_cast<std::size_t>(on_d), "triads: symmetric difference is not a single cycle");
  run.check(dcycle.back() == o1.u, "triads: cycle walk did not close through the first odd edge");
  std::vector<std::size_t> breaks;  // i such that (dcycle[i], dcycle[i+1]) is o2 or o3
  for (std::size_t i = 0; i + 1 < dcycle.size(); ++i) {
    const Edge e(dcycle[i], dcycle[i + 1]);
    if (e == odd3[1] || e == odd3[2]) breaks.push_back(i);
  }
  run.check(breaks.size() == 2, "triads: cycle does not contain all three odd edges");
  const std::vector<Vertex> s1(dcycle.begin(), dcycle.begin() + static_cast<std::ptrdiff_t>(breaks[0]) + 1);
  const std::vector<Vertex> s2(dcycle.begin() + static_cast<std::ptrdiff_t>(breaks[0]) + 1,
                               dcycle.begin() + static_cast<std::ptrdiff_t>(breaks[1]) + 1);
  const std::vector<Vertex> s3(dcycle.begin() + static_cast<std::ptrdiff_t>(breaks[1]) + 1, dcycle.end());
  std::vector<Vertex> s23 = s2;
  s23.insert(s23.end(), s3.begin(), s3.end());

  // a single even edge separating S1 from the rest
  const EdgeCut sep = min_edge_cut_between(gp, s1, s23);
  run.check(sep.size() >= 1, "triads: even subgraph disconnected after the connectivity test");
  if (sep.size() == 1) {
    EdgeCut cut = cut_of_side(g, sep.in_source_side);
    const auto [odd, even] = detail::count_parity(cut, p);
    run.check(even == 1 && odd >= 2, "triads: bridge cut is not odd-heavy");
    run.note("triads:even-bridge-cut", g);
    return {false, std::move(cut)};
  }

  // two S1-(S2+S3) paths, rerouted to end in different segments
  auto paths = edge_disjoint_paths(gp, s1, s23, 2);
  run.check(paths.has_value(), "triads: two edge-disjoint paths expected");
  std::vector<Vertex> P = (*paths)[0], Q = (*paths)[1];
  auto seg = [&](Vertex x) { return detail::in_set(s2, x) ? 2 : (detail::in_set(s3, x) ? 3 : 1); };
  run.check(P.front() != Q.front() && P.back() != Q.back(), "triads: paths share an endpoint in a subcubic graph");
  if (seg(P.back()) == seg(Q.back())) {
    const std::vector<Vertex>& from_seg = seg(P.back()) == 2 ? s2 : s3;
    const std::vector<Vertex>& to_seg = seg(P.back()) == 2 ? s3 : s2;
    Mapped without = delete_vertices(gp, from_seg);
    std::vector<Vertex> src, snk;
    for (Vertex x : s1) src.push_back(without.from_parent[ix(x)]);
    for (Vertex x : to_seg) snk.push_back(without.from_parent[ix(x)]);
    auto r = edge_disjoint_paths(without.graph, src, snk, 1);
    run.check(r.has_value(), "triads: no path from S1 to the missed segment");
    std::vector<Vertex> R;
    for (Vertex x : r->front()) R.push_back(without.to_parent[ix(x)]);
    int last = -1;
    for (std::size_t i = 0; i < R.size(); ++i)
      if (detail::in_set(P, R[i]) || detail::in_set(Q, R[i])) last = static_cast<int>(i);
    if (last < 0) {
      Q = R;
    } else {
      const Vertex q = R[ix(last)];
      std::vector<Vertex>& target = detail::in_set(P, q) ? P : Q;
      auto at = std::find(target.begin(), target.end(), q);
      target.erase(at + 1, target.end());
      target.insert(target.end(), R.begin() + last + 1, R.end());
    }
    run.check(seg(P.back()) != seg(Q.back()) && seg(P.back()) != 1 && seg(Q.back()) != 1,
              "triads: rerouting failed to reach both segments");
    auto pe = path_edges(P), qe = path_edges(Q);
    std::sort(pe.begin(), pe.end());
    for (const Edge& e : qe) run.check(!std::binary_search(pe.begin(), pe.end(), e), "triads: rerouted paths share an edge");
  }

  // non-crossing paths give a theta
  if (!crossing_on_cycle(dcycle, P.front(), P.back(), Q.front(), Q.back())) {
    run.note("triads:non-crossing-paths", g);
    return {true, {}};
  }

  // cut the S1 segment between the path starts
  const auto i = std::find(s1.begin(), s1.end(), P.front()) - s1.begin();
  const auto j = std::find(s1.begin(), s1.end(), Q.front()) - s1.begin();
  run.check(i != j, "triads: paths start at the same vertex");
  const Edge split(s1[static_cast<std::size_t>(i)], s1[static_cast<std::size_t>(i + (j > i ? 1 : -1))]);
  std::vector<Edge> forest;
  for (const Edge& e : dset)
    if (e != split && std::find(odd3.begin(), odd3.end(), e) == odd3.end()) forest.push_back(e);
  for (const Edge& e : path_edges(P)) forest.push_back(e);
  for (const Edge& e : path_edges(Q)) forest.push_back(e);
  return detail::tree_pair_cut(g, p, gp, std::move(forest), odd3, run, "crossing-paths");
}

namespace detail {

inline bool one_odd_edge_impl(Graph g, Bipartition p, ThetaRun& run);
inline bool decide_few_odd_edges_impl(const Graph& g, const Bipartition& p, ThetaRun& run);

// Deletes the given vertices and adds the given edges (in old labels).
inline Restricted rebuild(const Graph& g, const Bipartition& p, std::span<const Vertex> removed,
                          std::span<const Edge> extra, ThetaRun& run, const std::string& label) {
  Restricted r = restrict_mapped(delete_vertices(g, removed), p);
  GraphBuilder b(r.g.order());
  for (const Edge& e : r.g.edges()) b.add_edge(e.u, e.v);
  for (const Edge& e : extra) {
    const Vertex a = r.from_parent[ix(e.u)], c = r.from_parent[ix(e.v)];
    run.check(a >= 0 && c >= 0 && a != c, label + ": new edge endpoint was removed");
    run.check(b.add_edge_if_absent(a, c), label + ": reduction would create a parallel edge");
  }
  r.g = b.build();
  run.check(r.g.max_degree() <= 3, label + ": reduction raised the maximum degree above 3");
  return r;
}

inline Vertex other_neighbour(const Graph& g, Vertex v, Vertex not_this) {
  for (Vertex w : g.neighbors(v))
    if (w != not_this) return w;
  throw InvariantViolation("vertex " + std::to_string(v) + " has no second neighbour");
}

// One simplification of the graph around the odd edge xy, or false when none
// applies. x and y are updated to the new labels.
inline bool reduce_once(Graph& g, Bipartition& p, Vertex& x, Vertex& y, ThetaRun& run) {
  auto apply = [&](const Restricted& r, Vertex nx, Vertex ny, const std::string& rule) {
    g = r.g;
    p = r.p;
    x = r.from_parent[ix(nx)];
    y = r.from_parent[ix(ny)];
    ++run.stats.reductions;
    run.note("one_odd_edge:" + rule, g);
  };
  // common neighbour of degree 2: u-w paths avoiding x and y stay bipartite
  for (Vertex c : g.neighbors(x))
    if (c != y && g.degree(c) == 2 && g.adjacent(c, y)) {
      const Vertex rm[] = {c};
      apply(rebuild(g, p, rm, {}, run, "drop-common-neighbour"), x, y, "drop-common-neighbour");
      return true;
    }
  // both ends of degree 2: contract the path x'-x-y-y' to the edge x'y'
  if (g.degree(x) == 2 && g.degree(y) == 2) {
    const Vertex xp = other_neighbour(g, x, y), yp = other_neighbour(g, y, x);
    run.check(xp != yp, "one_odd_edge: odd edge lies in a triangle block");
    run.check(!g.adjacent(xp, yp), "one_odd_edge: contracted edge already present");
    const Vertex rm[] = {x, y};
    const Edge add[] = {Edge(xp, yp)};
    apply(rebuild(g, p, rm, add, run, "contract-degree-two-ends"), xp, yp, "contract-degree-two-ends");
    return true;
  }
  // twin degree-2 neighbours on the same side
  for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
    std::vector<std::pair<Vertex, Vertex>> twos;  // (neighbour, its far neighbour)
    for (Vertex c : g.neighbors(a))
      if (c != b && g.degree(c) == 2) twos.emplace_back(c, other_neighbour(g, c, a));
    if (twos.size() == 2 && twos[0].second == twos[1].second) {
      const Vertex rm[] = {std::max(twos[0].first, twos[1].first)};
      apply(rebuild(g, p, rm, {}, run, "drop-parallel-route"), x, y, "drop-parallel-route");
      return true;
    }
  }
  return false;
}

struct OneOddAnalysis {
  int verdict = -1;  // 1 theta, 0 none, -1 recurse into parts
  bool stuck = false;  // the branching block would be the whole graph again
  std::vector<std::pair<Graph, Bipartition>> parts;
};

// Branch-vertex test at x and block split of G - x, for the odd edge xy.
inline OneOddAnalysis analyse_at(const Graph& g, const Bipartition& p, Vertex x, Vertex y, ThetaRun& run) {
  std::vector<Vertex> uv;
  for (Vertex c : g.neighbors(x))
    if (c != y) uv.push_back(c);
  run.check(uv.size() == 2, "one_odd_edge: odd edge end without two further neighbours");
  if (g.degree(y) == 3 && g.degree(uv[0]) != 3) std::swap(uv[0], uv[1]);
  const Vertex u = uv[0], v = uv[1];
  const char a_side = p.side(x);

  const Vertex rm_x[] = {x};
  const Mapped h = delete_vertices(g, rm_x);
  const Vertex hy = h.from_parent[ix(y)], hu = h.from_parent[ix(u)], hv = h.from_parent[ix(v)];
  const std::vector<Vertex> targets{hy, hu, hv};

  // x is a branch vertex: three paths from a B vertex to y, u, v meeting only at their start
  for (Vertex z = 0; z < h.graph.order(); ++z) {
    if (p.side(h.to_parent[ix(z)]) == a_side) continue;
    if (h.graph.degree(z) < 3 && z != hu && z != hv) continue;
    if (fan_paths(h.graph, z, targets, 3)) {
      run.note("one_odd_edge:three-fan", g);
      return {1, false, {}};
    }
  }
  if (is_two_connected(h.graph)) {
    run.note("one_odd_edge:two-connected-remainder", g);
    return {1, false, {}};
  }
  const auto bd = blocks(h.graph);
  std::vector<Vertex> sset = bd.cut_vertices;
  sset.insert(sset.end(), targets.begin(), targets.end());
  std::sort(sset.begin(), sset.end());
  sset.erase(std::unique(sset.begin(), sset.end()), sset.end());

  struct Piece {
    std::vector<Vertex> block;  // labels of h
    std::vector<Vertex> s;
  };
  std::vector<Piece> pieces;
  for (const auto& blk : bd.blocks) {
    if (blk.size() < 3) continue;
    Piece pc{blk, {}};
    for (Vertex s : blk)
      if (std::binary_search(sset.begin(), sset.end(), s)) pc.s.push_back(s);
    for (Vertex s : pc.s)
      if (p.side(h.to_parent[ix(s)]) != p.side(h.to_parent[ix(pc.s.front())])) {
        run.note("one_odd_edge:mixed-attachments", g);
        return {1, false, {}};
      }
    run.check(pc.s.size() == 2 || pc.s.size() == 3,
              "one_odd_edge: block with " + std::to_string(pc.s.size()) + " attachment vertices");
    pieces.push_back(std::move(pc));
  }
  run.check(std::count_if(pieces.begin(), pieces.end(), [](const Piece& pc) { return pc.s.size() == 3; }) <= 1,
            "one_odd_edge: more than one branching block");

  OneOddAnalysis out;
  for (const Piece& pc : pieces) {
    std::vector<Vertex> in_g;
    for (Vertex w : pc.block) in_g.push_back(h.to_parent[ix(w)]);
    Restricted r = restrict_to(g, p, in_g);
    GraphBuilder b(r.g.order());
    for (const Edge& e : r.g.edges()) b.add_edge(e.u, e.v);
    if (pc.s.size() == 2) {
      const Vertex rr = r.from_parent[ix(h.to_parent[ix(pc.s[0])])];
      const Vertex ss = r.from_parent[ix(h.to_parent[ix(pc.s[1])])];
      run.check(b.add_edge_if_absent(rr, ss), "one_odd_edge: attachment vertices already adjacent");
    } else {
      run.check(!in_set(pc.block, hu) && !in_set(pc.block, hv), "one_odd_edge: branching block contains u or v");
      // where the branches holding y, u and v attach to the block
      auto attach = [&](Vertex t) {
        if (in_set(pc.block, t)) return t;
        std::vector<char> seen(ix(h.graph.order()), 0);
        std::vector<Vertex> queue{t}, hits;
        seen[ix(t)] = 1;
        for (std::size_t k = 0; k < queue.size(); ++k)
          for (Vertex w : h.graph.neighbors(queue[k])) {
            if (seen[ix(w)]) continue;
            seen[ix(w)] = 1;
            if (in_set(pc.block, w))
              hits.push_back(w);
            else
              queue.push_back(w);
          }
        run.check(hits.size() == 1, "one_odd_edge: branch attaches to the block more than once");
        return hits.front();
      };
      const Vertex yp = attach(hy), up = attach(hu), vp = attach(hv);
      run.check(yp != up && yp != vp && up != vp, "one_odd_edge: branches share an attachment vertex");
      for (Vertex t : {yp, up, vp})
        run.check(p.side(h.to_parent[ix(t)]) == a_side, "one_odd_edge: attachment vertex outside class A");
      const Vertex nx = b.add_vertex(), nu = b.add_vertex(), nv = b.add_vertex();
      r.p.in_b.push_back(a_side);
      r.p.in_b.push_back(p.side(u));
      r.p.in_b.push_back(p.side(v));
      auto loc = [&](Vertex t) { return r.from_parent[ix(h.to_parent[ix(t)])]; };
      b.add_edge(nx, nu);
      b.add_edge(nx, nv);
      b.add_edge(nx, loc(yp));
      b.add_edge(nu, loc(up));
      b.add_edge(nv, loc(vp));
      if (r.g.order() + 3 == g.order()) out.stuck = true;
    }
    out.parts.emplace_back(b.build(), r.p);
  }
  if (out.stuck) return out;
  int total = 0;
  for (const auto& [pg, pp] : out.parts) {
    run.check(pg.order() < g.order(), "one_odd_edge: piece is not smaller than the graph");
    run.check(odd_edges(pg, pp).size() == 1, "one_odd_edge: piece does not have exactly one odd edge");
    total += pg.order();
  }
  run.check(total <= g.order() + 2, "one_odd_edge: pieces too large in total");
  return out;
}

inline bool one_odd_edge_impl(Graph g, Bipartition p, ThetaRun& run) {
  ++run.stats.one_odd_calls;
  ThetaRun::Descend guard(run);
  run.check(g.max_degree() <= 3, "one_odd_edge: graph is not subcubic");
  const auto odd = odd_edges(g, p);
  run.check(odd.size() <= 1, "one_odd_edge: more than one odd edge");
  if (odd.empty()) {
    run.note("one_odd_edge:bipartite", g);
    return false;
  }
  {
    Restricted r = restrict_to(g, p, block_containing(g, odd[0]));
    g = std::move(r.g);
    p = std::move(r.p);
  }
  const Edge o = odd_edges(g, p).front();
  Vertex x = o.u, y = o.v;
  for (;;) {
    if (g.order() <= 3) {
      run.note("one_odd_edge:small-block", g);
      return false;
    }
    if (!reduce_once(g, p, x, y, run)) break;
  }
  run.check(g.degree(x) >= 2 && g.degree(y) >= 2, "one_odd_edge: block has a vertex of degree below 2");

  // orient: deg x = 3, and x has an outer neighbour of degree 3 whenever y has degree 3
  if (g.degree(x) < g.degree(y)) std::swap(x, y);
  run.check(g.degree(x) == 3, "one_odd_edge: odd edge ends both of degree 2 after reduction");
  auto has_deg3_outer = [&](Vertex a, Vertex b) {
    for (Vertex c : g.neighbors(a))
      if (c != b && g.degree(c) == 3) return true;
    return false;
  };
  bool balanced = true;  // both ends of degree 3, all outer neighbours of degree 2
  if (g.degree(y) == 3) {
    if (!has_deg3_outer(x, y)) std::swap(x, y);
    balanced = !has_deg3_outer(x, y);
  }

  OneOddAnalysis res = analyse_at(g, p, x, y, run);
  if (res.stuck) {
    run.check(balanced, "one_odd_edge: branching block as large as the graph");
    res = analyse_at(g, p, y, x, run);
  }
  if (res.stuck) {
    // Neither end can be a branch vertex, so a skewed theta passes through x
    // and avoids one of its outer neighbours.
    run.note("one_odd_edge:branch-on-outer-neighbour", g);
    ++run.stats.branchings;
    for (Vertex c : g.neighbors(x)) {
      if (c == y) continue;
      const Vertex rm[] = {c};
      Restricted r = restrict_mapped(delete_vertices(g, rm), p);
      if (one_odd_edge_impl(r.g, r.p, run)) return true;
    }
    return false;
  }
  if (res.verdict >= 0) return res.verdict == 1;
  run.note("one_odd_edge:split", g);
  for (auto& [pg, pp] : res.parts)
    if (one_odd_edge_impl(std::move(pg), std::move(pp), run)) return true;
  return false;
}

struct TwoOddCut {
  bool theta = false;
  EdgeCut cut;
};

// With two odd edges an odd cycle uses exactly one of them, so two disjoint
// odd cycles are two disjoint paths joining the ends of each odd edge.
inline bool has_two_disjoint_odd_cycles_impl(const Graph& g, const Bipartition& p, ThetaRun& run) {
  const auto odd = odd_edges(g, p);
  run.check(odd.size() == 2, "disjoint odd cycles: expected two odd edges");
  const Edge o1 = odd[0], o2 = odd[1];
  if (o1.has(o2.u) || o1.has(o2.v)) return false;
  LinkageQuery q{o1.u, o1.v, o2.u, o2.v, {o1, o2}};
  return two_disjoint_paths(g, q, run.options.parity);
}

inline TwoOddCut two_odd_cut_impl(const Graph& g, const Bipartition& p, ThetaRun& run) {
  ++run.stats.two_odd_cut_calls;
  const auto odd = odd_edges(g, p);
  run.check(odd.size() == 2, "two_odd_cut: expected two odd edges");
  const std::vector<Vertex> a{odd[0].u, odd[0].v}, b{odd[1].u, odd[1].v};
  auto paths = vertex_disjoint_paths(g, a, b, 2);
  run.check(paths.has_value(), "two_odd_cut: 2-connected graph without two disjoint linking paths");
  const EdgeCut cut = min_edge_cut_between(g, (*paths)[0], (*paths)[1]);
  run.check(cut.contains(odd[0]) && cut.contains(odd[1]), "two_odd_cut: cut misses an odd edge");
  if (cut.size() >= 5) {
    run.note("two_odd_cut:wide-cut", g);
    return {true, {}};
  }
  run.note("two_odd_cut:narrow-cut", g);
  return {false, cut};
}

inline bool two_odd_decide_impl(const Graph& g0, const Bipartition& p0, const EdgeCut& f0, ThetaRun& run) {
  ++run.stats.two_odd_decide_calls;
  ThetaRun::Descend guard(run);
  auto odd0 = odd_edges(g0, p0);
  run.check(odd0.size() == 2, "two_odd_decide: expected two odd edges");

  // odd edges in different blocks are handled separately
  const auto bd0 = blocks(g0);
  const int b1 = bd0.block_of(odd0[0]), b2 = bd0.block_of(odd0[1]);
  if (b1 != b2) {
    run.note("two_odd_decide:separate-blocks", g0);
    for (int bi : {b1, b2}) {
      Restricted r = restrict_to(g0, p0, bd0.blocks[ix(bi)]);
      if (one_odd_edge_impl(r.g, r.p, run)) return true;
    }
    return false;
  }
  Restricted blk = restrict_to(g0, p0, bd0.blocks[ix(b1)]);
  const Graph& g = blk.g;
  const Bipartition& p = blk.p;
  std::vector<Edge> fe;
  for (const Edge& e : f0.edges) {
    const Vertex a = blk.from_parent[ix(e.u)], c = blk.from_parent[ix(e.v)];
    if (a >= 0 && c >= 0) fe.emplace_back(a, c);
  }
  const auto odd = odd_edges(g, p);
  const Edge o1 = odd[0], o2 = odd[1];
  const int n = g.order();

  // a cut made of both odd edges and at most one more edge
  {
    std::vector<std::optional<Edge>> extra{std::nullopt};
    for (const Edge& e : g.edges())
      if (e != o1 && e != o2) extra.emplace_back(e);
    for (const auto& e : extra) {
      std::vector<Edge> fp{o1, o2};
      if (e) fp.push_back(*e);
      const auto comps = connected_components(delete_edges(g, fp));
      if (comps.size() < 2) continue;
      const unsigned r = static_cast<unsigned>(comps.size());
      for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
        std::vector<bool> side(ix(n), false);
        for (unsigned k = 0; k < r; ++k)
          if (mask >> k & 1u)
            for (Vertex w : comps[k]) side[ix(w)] = true;
        auto crosses = [&](const Edge& ed) { return side[ix(ed.u)] != side[ix(ed.v)]; };
        if (!crosses(o1) || !crosses(o2)) continue;
        run.note("two_odd_decide:three-edge-cut", g);
        Bipartition q = flip(p, side);
        ++run.stats.flips;
        run.check(odd_edges(g, q).size() <= 1, "two_odd_decide: flip left several odd edges");
        return one_odd_edge_impl(g, q, run);
      }
    }
  }

  run.check(fe.size() == 4, "two_odd_decide: cut must have four edges here, has " + std::to_string(fe.size()));
  std::vector<Edge> evens;
  for (const Edge& e : fe)
    if (e != o1 && e != o2) evens.push_back(e);
  run.check(evens.size() == 2, "two_odd_decide: cut must hold both odd edges");
  const auto sides = connected_components(delete_edges(g, fe));
  run.check(sides.size() == 2, "two_odd_decide: cut is not minimal");
  const std::vector<bool> c1 = membership(n, sides[0]);

  // thetas avoiding an odd edge
  for (const Edge& o : {o1, o2}) {
    const Edge rm[] = {o};
    if (one_odd_edge_impl(delete_edges(g, rm), p, run)) {
      run.note("two_odd_decide:theta-avoiding-odd-edge", g);
      return true;
    }
  }
  // thetas avoiding an even cut edge
  for (const Edge& e : evens) {
    const Edge rm[] = {e};
    const Graph h = delete_edges(g, rm);
    Bipartition q = flip(p, c1);
    ++run.stats.flips;
    run.check(odd_edges(h, q).size() == 1, "two_odd_decide: flip should leave one odd edge");
    if (one_odd_edge_impl(h, q, run)) {
      run.note("two_odd_decide:theta-avoiding-cut-edge", g);
      return true;
    }
  }
  if (has_two_disjoint_odd_cycles_impl(g, p, run)) {
    run.note("two_odd_decide:disjoint-odd-cycles", g);
    return true;
  }

  // linking paths inside each side
  struct SidePaths {
    std::vector<Vertex> P, Q;  // parent labels; P from o1's end, Q from o2's end
  };
  std::vector<SidePaths> sp(2);
  for (int i = 0; i < 2; ++i) {
    Restricted side = restrict_to(g, p, sides[ix(i)]);
    auto end_in = [&](const Edge& e) { return detail::in_set(sides[ix(i)], e.u) ? e.u : e.v; };
    const Vertex xi = end_in(o1), yi = end_in(o2);
    run.check(xi != yi, "two_odd_decide: odd edges share an end after the cut test");
    const Vertex ui = end_in(evens[0]), vi = end_in(evens[1]);
    run.check(ui != vi, "two_odd_decide: even cut edges share an end after the cut test");
    const std::vector<Vertex> src{side.from_parent[ix(xi)], side.from_parent[ix(yi)]};
    const std::vector<Vertex> snk{side.from_parent[ix(ui)], side.from_parent[ix(vi)]};
    auto paths = vertex_disjoint_paths(side.g, src, snk, 2);
    run.check(paths.has_value(), "two_odd_decide: linking paths missing in a side");
    for (auto& path : *paths) {
      std::vector<Vertex> back;
      for (Vertex w : path) back.push_back(side.to_parent[ix(w)]);
      (back.front() == xi ? sp[ix(i)].P : sp[ix(i)].Q) = std::move(back);
    }
    run.check(!sp[ix(i)].P.empty() && !sp[ix(i)].Q.empty(), "two_odd_decide: linking paths start at the same end");
  }
  // e1 = v1u2 and e2 = u1v2, otherwise two disjoint odd cycles exist
  auto partner = [&](Vertex w) {
    for (const Edge& e : evens)
      if (e.has(w)) return e.other(w);
    throw InvariantViolation("two_odd_decide: path end is not on an even cut edge");
  };
  const Vertex u1 = sp[0].P.back(), v1 = sp[0].Q.back(), u2 = sp[1].P.back(), v2 = sp[1].Q.back();
  run.check(partner(v1) == u2 && partner(u1) == v2, "two_odd_decide: linking paths close two disjoint odd cycles");

  auto build = [&](int i) {
    const int j = 1 - i;
    const auto& own = sides[ix(i)];
    const SidePaths& far = sp[ix(j)];
    const Vertex xi = sp[ix(i)].P.front(), yi = sp[ix(i)].Q.front();
    const Vertex xj = far.P.front(), yj = far.Q.front();
    const Vertex pa = partner(far.P.back()), qa = partner(far.Q.back());
    const bool p_odd = (far.P.size() - 1) % 2 == 1, q_odd = (far.Q.size() - 1) % 2 == 1;
    std::vector<Vertex> keep = own;
    if (!p_odd) keep.push_back(xj);
    if (!q_odd) keep.push_back(yj);
    const bool clash = p_odd && q_odd && xi == qa && pa == yi;
    if (clash) keep.push_back(xj);
    Restricted r = restrict_to(g, p, keep);
    GraphBuilder b(r.g.order());
    for (const Edge& e : r.g.edges()) {
      const Vertex a = r.to_parent[ix(e.u)], c = r.to_parent[ix(e.v)];
      if (in_set(own, a) && in_set(own, c)) b.add_edge(e.u, e.v);
    }
    auto loc = [&](Vertex w) { return r.from_parent[ix(w)]; };
    auto add = [&](Vertex a, Vertex c) {
      run.check(b.add_edge_if_absent(a, c), "two_odd_decide: replacement path would duplicate an edge");
    };
    if (clash) {
      const Vertex extra = b.add_vertex();
      r.p.in_b.push_back(static_cast<char>(p.side(xj) ^ 1));
      add(loc(xi), loc(xj));
      add(loc(xj), extra);
      add(extra, loc(pa));
    } else if (p_odd) {
      add(loc(xi), loc(pa));
    } else {
      add(loc(xi), loc(xj));
      add(loc(xj), loc(pa));
    }
    if (q_odd) {
      add(loc(yi), loc(qa));
    } else {
      add(loc(yi), loc(yj));
      add(loc(yj), loc(qa));
    }
    return std::pair<Graph, Bipartition>{b.build(), r.p};
  };
  auto [g1, p1] = build(0);
  auto [g2, p2] = build(1);
  for (const auto* part : {&g1, &g2}) {
    run.check(part->size() < g.size(), "two_odd_decide: side graph is not smaller");
    run.check(part->max_degree() <= 3, "two_odd_decide: side graph is not subcubic");
  }
  run.check(odd_edges(g1, p1).size() == 2 && odd_edges(g2, p2).size() == 2,
            "two_odd_decide: side graph does not have two odd edges");
  run.check(g1.size() + g2.size() <= g.size() + 4, "two_odd_decide: side graphs too large in total");
  run.note("two_odd_decide:split", g);
  return decide_few_odd_edges_impl(g1, p1, run) || decide_few_odd_edges_impl(g2, p2, run);
}

inline bool decide_few_odd_edges_impl(const Graph& g, const Bipartition& p, ThetaRun& run) {
  run.check(odd_edges(g, p).size() <= 2, "decide_few_odd_edges: more than two odd edges");
  const auto bd = blocks(g);
  for (const auto& blk : bd.blocks) {
    if (blk.size() < 3) continue;
    Restricted r = restrict_to(g, p, blk);
    const auto odd = odd_edges(r.g, r.p);
    if (odd.empty()) continue;
    if (odd.size() == 1) {
      if (one_odd_edge_impl(r.g, r.p, run)) return true;
      continue;
    }
    const TwoOddCut c = two_odd_cut_impl(r.g, r.p, run);
    if (c.theta) return true;
    if (two_odd_decide_impl(r.g, r.p, c.cut, run)) return true;
  }
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Public entry points. Each runs with a fresh trace.

using TwoOddCut = detail::TwoOddCut;
using TriadsResult = detail::TriadsResult;

namespace detail {

template <class F>
ThetaVerdict run_theta(const ThetaOptions& options, F&& body) {
  ThetaRun run;
  run.options = options;
  ThetaVerdict v;
  v.contains_skewed_theta = body(run);
  v.trace = std::move(run.trace);
  v.stats = run.stats;
  return v;
}

inline void require_subcubic(const Graph& g, const Bipartition& p) {
  require(g.max_degree() <= 3, "skewed theta detection needs a graph of maximum degree at most 3");
  require(p.order() == g.order(), "bipartition size does not match the graph");
}

}  // namespace detail

inline bool has_two_disjoint_odd_cycles(const Graph& g, const Bipartition& p, const ParityConfig& cfg = {}) {
  detail::require(odd_edges(g, p).size() == 2, "has_two_disjoint_odd_cycles needs exactly two odd edges");
  detail::ThetaRun run;
  run.options.parity = cfg;
  return detail::has_two_disjoint_odd_cycles_impl(g, p, run);
}

inline TriadsResult triads(const Graph& g, const Bipartition& p, const std::vector<Edge>& odd3) {
  detail::require_subcubic(g, p);
  detail::require(is_two_connected(g), "triads needs a 2-connected graph");
  detail::ThetaRun run;
  return triads(g, p, odd3, run);
}

inline ThetaVerdict one_odd_edge(const Graph& g, const Bipartition& p, const ThetaOptions& options = {}) {
  detail::require_subcubic(g, p);
  detail::require(odd_edges(g, p).size() <= 1, "one_odd_edge needs at most one odd edge");
  return detail::run_theta(options, [&](detail::ThetaRun& run) { return detail::one_odd_edge_impl(g, p, run); });
}

inline TwoOddCut two_odd_cut(const Graph& g, const Bipartition& p) {
  detail::require_subcubic(g, p);
  detail::require(is_two_connected(g), "two_odd_cut needs a 2-connected graph");
  detail::require(odd_edges(g, p).size() == 2, "two_odd_cut needs exactly two odd edges");
  detail::ThetaRun run;
  return detail::two_odd_cut_impl(g, p, run);
}

inline ThetaVerdict two_odd_decide(const Graph& g, const Bipartition& p, const EdgeCut& cut,
                                   const ThetaOptions& options = {}) {
  detail::require_subcubic(g, p);
  detail::require(odd_edges(g, p).size() == 2, "two_odd_decide needs exactly two odd edges");
  return detail::run_theta(options,
                           [&](detail::ThetaRun& run) { return detail::two_odd_decide_impl(g, p, cut, run); });
}

inline ThetaVerdict decide_few_odd_edges(const Graph& g, const Bipartition& p, const ThetaOptions& options = {}) {
  detail::require_subcubic(g, p);
  detail::require(odd_edges(g, p).size() <= 2, "decide_few_odd_edges needs at most two odd edges");
  return detail::run_theta(options,
                           [&](detail::ThetaRun& run) { return detail::decide_few_odd_edges_impl(g, p, run); });
}

// Skewed theta detection in a graph of maximum degree at most 3. Each block
// starts with every edge odd; triads cuts are flipped until at most two odd
// edges remain, then the few-odd-edge procedures decide.
inline ThetaVerdict has_skewed_theta(const Graph& g, const ThetaOptions& options = {}) {
  detail::require(g.max_degree() <= 3, "skewed theta detection needs a graph of maximum degree at most 3");
  return detail::run_theta(options, [&](detail::ThetaRun& run) {
    for (const auto& blk : blocks(g).blocks) {
      if (blk.size() < 3) continue;
      detail::Restricted r = detail::restrict_to(g, Bipartition::all_in_a(g.order()), blk);
      Bipartition p = r.p;
      auto odd = odd_edges(r.g, p);
      while (odd.size() >= 3) {
        const std::vector<Edge> three(odd.begin(), odd.begin() + 3);
        auto t = triads(r.g, p, three, run);
        if (t.theta) return true;
        const auto [o, e] = detail::count_parity(t.cut, p);
        run.check(o > e, "flip on a cut that is not odd-heavy");
        p = flip(p, t.cut.in_source_side);
        ++run.stats.flips;
        auto next = odd_edges(r.g, p);
        run.check(next.size() < odd.size(), "flip did not reduce the odd edges");
        odd = std::move(next);
      }
      if (detail::decide_few_odd_edges_impl(r.g, p, run)) return true;
    }
    return false;
  });
}

}  // namespace tperf
