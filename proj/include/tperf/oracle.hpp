#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

inline constexpr int kTMinorGuard = 12;
inline constexpr int kThetaBruteGuard = 14;
inline constexpr int kPrismBruteGuard = 12;

// Bitmask adjacency for graphs on at most 16 vertices.
class SmallGraph {
 public:
  static constexpr int kMax = 16;
  using Mask = std::uint16_t;

  SmallGraph() = default;
  explicit SmallGraph(const Graph& g) : n_(g.order()) {
    if (n_ > kMax) throw SizeGuardExceeded("SmallGraph: more than 16 vertices");
    for (const Edge& e : g.edges()) add_edge(e.u, e.v);
  }

  int order() const { return n_; }
  Mask nbrs(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }
  bool adjacent(int a, int b) const { return adj_[static_cast<std::size_t>(a)] >> b & 1u; }
  int size() const {
    int s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return s / 2;
  }

  void add_edge(int a, int b) {
    adj_[static_cast<std::size_t>(a)] |= static_cast<Mask>(1u << b);
    adj_[static_cast<std::size_t>(b)] |= static_cast<Mask>(1u << a);
  }

  // Subgraph induced by `keep`, relabelled in increasing order.
  SmallGraph induced(Mask keep) const {
    SmallGraph out;
    std::array<int, kMax> pos{};
    for (int v = 0; v < n_; ++v)
      if (keep >> v & 1u) pos[static_cast<std::size_t>(v)] = out.n_++;
    for (int v = 0; v < n_; ++v) {
      if (!(keep >> v & 1u)) continue;
      for (int w = v + 1; w < n_; ++w)
        if ((keep >> w & 1u) && adjacent(v, w)) out.add_edge(pos[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(w)]);
    }
    return out;
  }

  Mask all() const { return static_cast<Mask>((1u << n_) - 1u); }

  Graph to_graph() const {
    GraphBuilder b(n_);
    for (int v = 0; v < n_; ++v)
      for (int w = v + 1; w < n_; ++w)
        if (adjacent(v, w)) b.add_edge(v, w);
    return b.build();
  }

  friend bool operator==(const SmallGraph&, const SmallGraph&) = default;

 private:
  int n_ = 0;
  std::array<Mask, kMax> adj_{};
};

namespace detail {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Isomorphism-invariant per-vertex signature: degree, neighbour degree
// multiset and number of triangles through the vertex.
inline std::vector<std::uint64_t> vertex_signatures(const SmallGraph& g) {
  std::vector<std::uint64_t> sig(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    std::array<int, SmallGraph::kMax + 1> count{};
    int tri = 0;
    for (int w = 0; w < g.order(); ++w)
      if (g.adjacent(v, w)) {
        ++count[static_cast<std::size_t>(g.degree(w))];
        tri += std::popcount(static_cast<unsigned>(g.nbrs(v) & g.nbrs(w)));
      }
    std::uint64_t h = static_cast<std::uint64_t>(g.degree(v)) * 1315423911ULL + static_cast<std::uint64_t>(tri);
    for (int d = 0; d <= SmallGraph::kMax; ++d) h = mix(h, static_cast<std::uint64_t>(count[static_cast<std::size_t>(d)]));
    sig[static_cast<std::size_t>(v)] = h;
  }
  return sig;
}

inline std::uint64_t invariant_hash(const SmallGraph& g, const std::vector<std::uint64_t>& sig) {
  std::vector<std::uint64_t> s = sig;
  std::sort(s.begin(), s.end());
  std::uint64_t h = mix(static_cast<std::uint64_t>(g.order()), static_cast<std::uint64_t>(g.size()));
  for (auto x : s) h = mix(h, x);
  return h;
}

struct SmallIsoMatcher {
  const SmallGraph& g;
  const SmallGraph& h;
  const std::vector<std::uint64_t>& sg;
  const std::vector<std::uint64_t>& sh;
  std::vector<int> order;
  std::array<int, SmallGraph::kMax> map{};
  SmallGraph::Mask used = 0;

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const int x = order[depth];
    for (int y = 0; y < h.order(); ++y) {
      if ((used >> y & 1u) || sg[static_cast<std::size_t>(x)] != sh[static_cast<std::size_t>(y)]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i)
        ok = g.adjacent(x, order[i]) == h.adjacent(y, map[static_cast<std::size_t>(order[i])]);
      if (!ok) continue;
      map[static_cast<std::size_t>(x)] = y;
      used = static_cast<SmallGraph::Mask>(used | (1u << y));
      if (run(depth + 1)) return true;
      used = static_cast<SmallGraph::Mask>(used & ~(1u << y));
    }
    return false;
  }
};

inline bool small_isomorphic(const SmallGraph& g, const std::vector<std::uint64_t>& sg, const SmallGraph& h,
                             const std::vector<std::uint64_t>& sh) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  SmallIsoMatcher m{g, h, sg, sh, {}, {}, 0};
  SmallGraph::Mask seen = 0;
  for (int r = 0; r < g.order(); ++r) {
    if (seen >> r & 1u) continue;
    seen = static_cast<SmallGraph::Mask>(seen | (1u << r));
    std::size_t start = m.order.size();
    m.order.push_back(r);
    for (std::size_t i = start; i < m.order.size(); ++i)
      for (int w = 0; w < g.order(); ++w)
        if (g.adjacent(m.order[i], w) && !(seen >> w & 1u)) {
          seen = static_cast<SmallGraph::Mask>(seen | (1u << w));
          m.order.push_back(w);
        }
  }
  return m.run(0);
}

// Set of small graphs up to isomorphism, with an attached value per class.
template <class Value>
class IsoClassMap {
 public:
  Value* find(const SmallGraph& g) {
    auto sig = vertex_signatures(g);
    auto it = buckets_.find(invariant_hash(g, sig));
    if (it == buckets_.end()) return nullptr;
    for (auto& e : it->second)
      if (small_isomorphic(g, sig, e.graph, e.sig)) return &e.value;
    return nullptr;
  }

  void insert(const SmallGraph& g, Value v) {
    auto sig = vertex_signatures(g);
    const auto key = invariant_hash(g, sig);
    buckets_[key].push_back({g, std::move(sig), std::move(v)});
    ++count_;
  }

  std::size_t size() const { return count_; }

 private:
  struct Entry {
    SmallGraph graph;
    std::vector<std::uint64_t> sig;
    Value value;
  };
  std::unordered_map<std::uint64_t, std::vector<Entry>> buckets_;
  std::size_t count_ = 0;
};

inline bool has_clique4(const SmallGraph& g) {
  for (int a = 0; a < g.order(); ++a)
    for (int b = a + 1; b < g.order(); ++b) {
      if (!g.adjacent(a, b)) continue;
      unsigned common = static_cast<unsigned>(g.nbrs(a) & g.nbrs(b)) & ~((2u << b) - 1u);
      for (unsigned c = common; c; c &= c - 1) {
        const int x = std::countr_zero(c);
        if (g.nbrs(static_cast<int>(x)) & common & ~((2u << x) - 1u)) return true;
      }
    }
  return false;
}

// Connected components of g as induced subgraphs.
inline std::vector<SmallGraph> small_components(const SmallGraph& g) {
  std::vector<SmallGraph> out;
  SmallGraph::Mask left = g.all();
  while (left) {
    SmallGraph::Mask comp = static_cast<SmallGraph::Mask>(left & (~left + 1u));
    SmallGraph::Mask frontier = comp;
    while (frontier) {
      SmallGraph::Mask next = 0;
      for (unsigned f = frontier; f; f &= f - 1) next |= g.nbrs(std::countr_zero(f));
      frontier = static_cast<SmallGraph::Mask>(next & ~comp);
      comp |= frontier;
    }
    left = static_cast<SmallGraph::Mask>(left & ~comp);
    out.push_back(g.induced(comp));
  }
  return out;
}

}  // namespace detail

// Contract all edges at v when N(v) is stable: v and its neighbours become one
// vertex adjacent to everything they saw. The merged vertex takes the
// smallest label among them; other labels shift down.
inline std::optional<Graph> t_contract(const Graph& g, Vertex v) {
  detail::require(v >= 0 && v < g.order(), "t_contract: vertex out of range");
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (g.adjacent(nb[i], nb[j])) return std::nullopt;
  std::vector<char> merged(static_cast<std::size_t>(g.order()), 0);
  merged[static_cast<std::size_t>(v)] = 1;
  for (Vertex w : nb) merged[static_cast<std::size_t>(w)] = 1;
  Vertex rep = v;
  for (Vertex w : nb) rep = std::min(rep, w);
  std::vector<Vertex> label(static_cast<std::size_t>(g.order()));
  int next = 0;
  for (Vertex x = 0; x < g.order(); ++x) {
    if (merged[static_cast<std::size_t>(x)] && x != rep) continue;
    label[static_cast<std::size_t>(x)] = next++;
  }
  for (Vertex x = 0; x < g.order(); ++x)
    if (merged[static_cast<std::size_t>(x)]) label[static_cast<std::size_t>(x)] = label[static_cast<std::size_t>(rep)];
  GraphBuilder b(next);
  for (const Edge& e : g.edges())
    b.add_edge_if_absent(label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]);
  return b.build();
}

namespace detail {

inline std::optional<SmallGraph> small_t_contract(const SmallGraph& g, int v) {
  const SmallGraph::Mask nv = g.nbrs(v);
  for (unsigned f = nv; f; f &= f - 1)
    if (g.nbrs(std::countr_zero(f)) & nv) return std::nullopt;
  const SmallGraph::Mask blob = static_cast<SmallGraph::Mask>(nv | (1u << v));
  SmallGraph::Mask outside = 0;
  for (unsigned f = blob; f; f &= f - 1) outside |= g.nbrs(std::countr_zero(f));
  outside = static_cast<SmallGraph::Mask>(outside & ~blob);
  // Keep v as the merged vertex, drop its neighbours.
  SmallGraph h = g;
  for (unsigned f = outside; f; f &= f - 1) h.add_edge(v, std::countr_zero(f));
  return h.induced(static_cast<SmallGraph::Mask>(g.all() & ~nv));
}

}  // namespace detail

// Decides whether some target is a t-minor of the input, caching verdicts per
// isomorphism class so repeated queries over a corpus share work. Only
// connected t-minors with at least four vertices are explored, which suffices
// because every target is connected and has at least four vertices.
class TMinorSearch {
 public:
  explicit TMinorSearch(std::vector<Graph> targets) {
    for (const Graph& t : targets) {
      detail::require(is_connected(t) && t.order() >= 4, "TMinorSearch: targets must be connected with >= 4 vertices");
      targets_.emplace_back(t);
      if (t.order() == 4 && t.size() == 6) k4_target_ = true;
    }
  }

  // The standard forbidden list for claw-free graphs.
  static TMinorSearch forbidden() {
    return TMinorSearch({complete_graph(4), wheel5(), cycle_square(7), cycle_square(10)});
  }
  static TMinorSearch k4_only() { return TMinorSearch({complete_graph(4)}); }

  bool reaches_target(const Graph& g) {
    if (g.order() > kTMinorGuard)
      throw SizeGuardExceeded("t-minor search: more than " + std::to_string(kTMinorGuard) + " vertices");
    for (const auto& c : detail::small_components(SmallGraph(g)))
      if (c.order() >= 4 && reaches(c)) return true;
    return false;
  }

  std::size_t cached_classes() const { return memo_.size(); }

 private:
  bool is_target(const SmallGraph& g) {
    for (const auto& t : targets_) {
      if (t.order() != g.order() || t.size() != g.size()) continue;
      if (detail::small_isomorphic(g, detail::vertex_signatures(g), t, detail::vertex_signatures(t))) return true;
    }
    return false;
  }

  bool reaches(const SmallGraph& g) {
    if (bool* hit = memo_.find(g)) return *hit;
    bool result = (k4_target_ && detail::has_clique4(g)) || is_target(g);
    for (int v = 0; v < g.order() && !result; ++v) {
      result = explore(g.induced(static_cast<SmallGraph::Mask>(g.all() & ~(1u << v))));
      if (!result)
        if (auto c = detail::small_t_contract(g, v)) result = explore(*c);
    }
    memo_.insert(g, result);
    return result;
  }

  bool explore(const SmallGraph& h) {
    for (const auto& c : detail::small_components(h))
      if (c.order() >= 4 && reaches(c)) return true;
    return false;
  }

  std::vector<SmallGraph> targets_;
  bool k4_target_ = false;
  detail::IsoClassMap<bool> memo_;
};

inline std::optional<Vertex> find_claw_centre(const Graph& g);

// t-perfection of a claw-free graph via its forbidden t-minors.
inline bool is_t_perfect_bruteforce(const Graph& g, TMinorSearch& search) {
  if (find_claw_centre(g)) throw InvalidInput("is_t_perfect_bruteforce: graph is not claw-free");
  return !search.reaches_target(g);
}

inline bool is_t_perfect_bruteforce(const Graph& g) {
  auto s = TMinorSearch::forbidden();
  return is_t_perfect_bruteforce(g, s);
}

inline bool contains_t_minor(const Graph& g, const Graph& target) {
  TMinorSearch s({target});
  return s.reaches_target(g);
}

inline std::optional<Vertex> find_claw_centre(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return c;
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Skewed theta by exhaustive path enumeration.

namespace detail {

using EdgeMask = unsigned __int128;

inline void enumerate_paths(const Graph& g, const std::vector<std::vector<int>>& edge_id, Vertex x, Vertex target,
                            std::uint32_t visited, EdgeMask used, int len,
                            std::vector<std::pair<EdgeMask, int>>& out) {
  if (x == target) {
    out.emplace_back(used, len);
    return;
  }
  auto nb = g.neighbors(x);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    const Vertex y = nb[i];
    if (visited >> y & 1u) continue;
    enumerate_paths(g, edge_id, y, target, visited | (1u << y),
                    used | (EdgeMask{1} << edge_id[static_cast<std::size_t>(x)][i]), len + 1, out);
  }
}

}  // namespace detail

// Two branch vertices joined by three pairwise edge-disjoint paths, two of
// odd and one of even length.
inline bool has_skewed_theta_bruteforce(const Graph& h) {
  if (h.order() > kThetaBruteGuard)
    throw SizeGuardExceeded("skewed theta brute force: more than " + std::to_string(kThetaBruteGuard) + " vertices");
  if (h.size() > 128) throw SizeGuardExceeded("skewed theta brute force: more than 128 edges");
  std::vector<std::vector<int>> edge_id(static_cast<std::size_t>(h.order()));
  {
    const auto edges = h.edges();
    for (Vertex x = 0; x < h.order(); ++x)
      for (Vertex y : h.neighbors(x))
        edge_id[static_cast<std::size_t>(x)].push_back(
            static_cast<int>(std::lower_bound(edges.begin(), edges.end(), Edge(x, y)) - edges.begin()));
  }
  for (Vertex a = 0; a < h.order(); ++a) {
    if (h.degree(a) < 3) continue;
    for (Vertex b = a + 1; b < h.order(); ++b) {
      if (h.degree(b) < 3) continue;
      std::vector<std::pair<detail::EdgeMask, int>> paths;
      detail::enumerate_paths(h, edge_id, a, b, 1u << a, 0, 0, paths);
      std::vector<detail::EdgeMask> odd, even;
      for (auto& [m, len] : paths) (len % 2 ? odd : even).push_back(m);
      for (auto e : even)
        for (std::size_t i = 0; i < odd.size(); ++i) {
          if (odd[i] & e) continue;
          const auto both = odd[i] | e;
          for (std::size_t j = i + 1; j < odd.size(); ++j)
            if (!(odd[j] & both)) return true;
        }
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Skewed prism: an induced subgraph made of two triangles x1x2x3, y1y2y3 and
// three vertex-disjoint paths xi-y(s(i)), two of even length (possibly zero,
// meaning xi = y(s(i))) and one of odd length.

namespace detail {

inline bool is_skewed_prism(const SmallGraph& g, const std::array<int, 3>& x, const std::array<int, 3>& y) {
  auto tri_edge = [&](int a, int b) {
    auto in = [](const std::array<int, 3>& t, int v) { return t[0] == v || t[1] == v || t[2] == v; };
    return (in(x, a) && in(x, b)) || (in(y, a) && in(y, b));
  };
  std::array<int, 3> perm{0, 1, 2};
  do {
    int even = 0, odd = 0;
    int path_edges = 0;
    SmallGraph::Mask covered = 0;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i) {
      const int s = x[static_cast<std::size_t>(i)];
      const int t = y[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      if (covered >> s & 1u) {
        ok = false;
        break;
      }
      int len = 0;
      int prev = -1, cur = s;
      covered = static_cast<SmallGraph::Mask>(covered | (1u << s));
      while (cur != t) {
        int next = -1, deg = 0;
        for (int w = 0; w < g.order(); ++w) {
          if (!g.adjacent(cur, w) || tri_edge(cur, w)) continue;
          ++deg;
          if (w != prev) next = w;
        }
        const int want = (cur == s) ? 1 : 2;
        if (deg != want || next < 0 || (covered >> next & 1u)) {
          ok = false;
          break;
        }
        prev = cur;
        cur = next;
        covered = static_cast<SmallGraph::Mask>(covered | (1u << cur));
        ++len;
      }
      if (!ok) break;
      // the far end must not continue
      int deg_t = 0;
      for (int w = 0; w < g.order(); ++w)
        if (g.adjacent(t, w) && !tri_edge(t, w)) ++deg_t;
      if (deg_t != (len == 0 ? 0 : 1)) ok = false;
      path_edges += len;
      (len % 2 ? odd : even) += 1;
    }
    if (!ok || odd != 1 || even != 2) continue;
    if (covered != g.all()) continue;
    int non_tri = 0;
    for (int a = 0; a < g.order(); ++a)
      for (int b = a + 1; b < g.order(); ++b)
        if (g.adjacent(a, b) && !tri_edge(a, b)) ++non_tri;
    if (non_tri == path_edges) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace detail

inline bool has_skewed_prism_bruteforce(const Graph& g) {
  if (g.order() > kPrismBruteGuard)
    throw SizeGuardExceeded("skewed prism brute force: more than " + std::to_string(kPrismBruteGuard) + " vertices");
  const SmallGraph full(g);
  const int n = g.order();
  std::vector<SmallGraph::Mask> subsets;
  for (unsigned s = 1; s < (1u << n); ++s)
    if (std::popcount(s) >= 4) subsets.push_back(static_cast<SmallGraph::Mask>(s));
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  for (auto s : subsets) {
    const SmallGraph h = full.induced(s);
    std::vector<std::array<int, 3>> tris;
    for (int a = 0; a < h.order(); ++a)
      for (int b = a + 1; b < h.order(); ++b)
        for (int c = b + 1; c < h.order(); ++c)
          if (h.adjacent(a, b) && h.adjacent(a, c) && h.adjacent(b, c)) tris.push_back({a, b, c});
    if (tris.size() < 2) continue;
    for (std::size_t i = 0; i < tris.size(); ++i)
      for (std::size_t j = i + 1; j < tris.size(); ++j)
        if (detail::is_skewed_prism(h, tris[i], tris[j])) return true;
  }
  return false;
}

}  // namespace tperf
