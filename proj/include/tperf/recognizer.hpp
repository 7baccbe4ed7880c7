#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tperf/connectivity.hpp"
#include "tperf/graph.hpp"
#include "tperf/isomorphism.hpp"
#include "tperf/linegraph.hpp"
#include "tperf/parity.hpp"
#include "tperf/theta.hpp"

namespace tperf {

struct ClawWitness {
  Vertex centre = -1;
  std::array<Vertex, 3> leaves{};
};

inline std::optional<ClawWitness> find_claw(const Graph& g) {
  for (Vertex c = 0; c < g.order(); ++c) {
    auto nb = g.neighbors(c);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (g.adjacent(nb[i], nb[j])) continue;
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) return ClawWitness{c, {nb[i], nb[j], nb[k]}};
      }
  }
  return std::nullopt;
}

class NotClawFree : public InvalidInput {
 public:
  explicit NotClawFree(const ClawWitness& w)
      : InvalidInput("graph contains an induced claw centred at " + std::to_string(w.centre) + " with leaves " +
                     std::to_string(w.leaves[0]) + ", " + std::to_string(w.leaves[1]) + ", " +
                     std::to_string(w.leaves[2])),
        witness_(w) {}
  const ClawWitness& witness() const { return witness_; }

 private:
  ClawWitness witness_;
};

enum class Verdict { t_perfect, not_t_perfect };

inline const char* to_string(Verdict v) { return v == Verdict::t_perfect ? "t-perfect" : "not-t-perfect"; }

// How the two sides of an order-2 separation are reduced, keyed by which
// induced u-v path parities the sides admit.
enum class SeparationCase {
  adjacent_pair,          // uv is an edge: the sides are decided separately
  both_parities_both,     // both sides admit both parities: not t-perfect
  odd_on_one_side,        // identify u,v on the odd side, add uv on the other
  no_odd_path,            // sides unchanged
  even_on_one_side,       // add uv on the even side, identify u,v on the other
  no_even_path,           // sides unchanged
};

inline const char* to_string(SeparationCase c) {
  switch (c) {
    case SeparationCase::adjacent_pair: return "adjacent-pair";
    case SeparationCase::both_parities_both: return "both-parities-on-both-sides";
    case SeparationCase::odd_on_one_side: return "odd-on-one-side";
    case SeparationCase::no_odd_path: return "no-odd-path";
    case SeparationCase::even_on_one_side: return "even-on-one-side";
    case SeparationCase::no_even_path: return "no-even-path";
  }
  return "?";
}

struct RuleFiring {
  std::string rule;
  std::vector<Vertex> vertices;  // original input vertices of the graph acted on
  std::optional<std::pair<Vertex, Vertex>> separator;  // original labels of u and v
  std::optional<SeparationCase> separation_case;
  std::optional<Verdict> verdict;
  int depth = 0;
};

struct RecognizerStats {
  std::int64_t recursions = 0;
  std::int64_t separations = 0;
  std::int64_t parity_queries = 0;
  std::int64_t line_graph_checks = 0;
  std::int64_t theta_calls = 0;
  std::int64_t theta_steps = 0;  // triads, one- and two-odd-edge calls
  std::int64_t invariant_checks = 0;
};

struct Decision {
  Verdict verdict = Verdict::t_perfect;
  std::vector<RuleFiring> trace;
  RecognizerStats stats;
  ThetaStats theta_stats;

  bool t_perfect() const { return verdict == Verdict::t_perfect; }
};

struct RecognizerOptions {
  ParityConfig parity;
  bool record_trace = true;
};

// Sides of a separation after reduction.
struct ReducedSides {
  SeparationCase which = SeparationCase::no_odd_path;
  Mapped side1;
  Mapped side2;
};

namespace detail {

inline Mapped identity_map(const Graph& g) {
  Mapped m{g, {}, {}};
  for (Vertex x = 0; x < g.order(); ++x) {
    m.to_parent.push_back(x);
    m.from_parent.push_back(x);
  }
  return m;
}

}  // namespace detail

// Reduces both sides of an order-2 separation {u,v} from the induced path
// parities of each side. Maps are relative to the induced side graphs,
// given here with u and v in side-local labels.
inline ReducedSides build_reduced_sides(const Graph& g1, const Graph& g2, Vertex u1, Vertex v1, Vertex u2, Vertex v2,
                                        InducedPathParities p1, InducedPathParities p2) {
  detail::require(!(g1.adjacent(u1, v1) || g2.adjacent(u2, v2)), "build_reduced_sides: u and v are adjacent");
  detail::require(!(p1.even && p1.odd && p2.even && p2.odd),
                  "build_reduced_sides: both sides admit both parities, nothing to reduce");
  auto plus = [](const Graph& g, Vertex a, Vertex b) {
    Mapped m = detail::identity_map(g);
    m.graph = add_edge(g, a, b);
    return m;
  };
  ReducedSides out;
  const bool o1 = p1.odd, o2 = p2.odd, e1 = p1.even, e2 = p2.even;
  if (o1 != o2) {
    out.which = SeparationCase::odd_on_one_side;
    out.side1 = o1 ? identify_vertices(g1, u1, v1) : plus(g1, u1, v1);
    out.side2 = o1 ? plus(g2, u2, v2) : identify_vertices(g2, u2, v2);
  } else if (!o1) {
    out.which = SeparationCase::no_odd_path;
    out.side1 = detail::identity_map(g1);
    out.side2 = detail::identity_map(g2);
  } else if (e1 != e2) {
    out.which = SeparationCase::even_on_one_side;
    out.side1 = e1 ? plus(g1, u1, v1) : identify_vertices(g1, u1, v1);
    out.side2 = e1 ? identify_vertices(g2, u2, v2) : plus(g2, u2, v2);
  } else {
    out.which = SeparationCase::no_even_path;
    out.side1 = detail::identity_map(g1);
    out.side2 = detail::identity_map(g2);
  }
  return out;
}

namespace detail {

// A graph in the recursion with, per vertex, the original input vertices it
// stands for (more than one after identifications).
struct Tracked {
  Graph g;
  std::vector<std::vector<Vertex>> origin;
};

inline Tracked track_mapped(const Tracked& parent, const Mapped& m) {
  Tracked t{m.graph, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(m.graph.order()))};
  for (Vertex p = 0; p < parent.g.order(); ++p) {
    const Vertex c = m.from_parent[ix(p)];
    if (c < 0) continue;
    auto& o = t.origin[ix(c)];
    o.insert(o.end(), parent.origin[ix(p)].begin(), parent.origin[ix(p)].end());
  }
  for (auto& o : t.origin) std::sort(o.begin(), o.end());
  return t;
}

inline Tracked track_subgraph(const Tracked& parent, std::span<const Vertex> vertices) {
  return track_mapped(parent, induced_subgraph(parent.g, vertices));
}

struct ExceptionalGraphs {
  Graph c7sq = cycle_square(7);
  Graph c10sq = cycle_square(10);
  Graph c6sq_minus_edge = cycle_square6_minus_edge();
  Graph c7sq_minus_vertex = cycle_square_minus_vertex(7);
  Graph c10sq_minus_vertex = cycle_square_minus_vertex(10);
};

inline const ExceptionalGraphs& exceptional_graphs() {
  static const ExceptionalGraphs e;
  return e;
}

inline bool same_graph(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.size() == h.size() && is_isomorphic_small(g, h);
}

class Recognizer {
 public:
  explicit Recognizer(RecognizerOptions options) : options_(std::move(options)) {}

  Verdict decide(const Tracked& t) {
    ++stats_.recursions;
    ++depth_;
    const Verdict v = decide_inner(t);
    --depth_;
    return v;
  }

  RecognizerStats stats_;
  ThetaStats theta_stats_;
  std::vector<RuleFiring> trace_;

 private:
  void check(bool ok, const std::string& what) {
    ++stats_.invariant_checks;
    ensure(ok, what);
  }

  static std::vector<Vertex> originals(const Tracked& t) {
    std::vector<Vertex> out;
    for (const auto& o : t.origin) out.insert(out.end(), o.begin(), o.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  Verdict fire(const Tracked& t, const std::string& rule, std::optional<Verdict> verdict,
               std::optional<std::pair<Vertex, Vertex>> sep = std::nullopt,
               std::optional<SeparationCase> which = std::nullopt) {
    if (options_.record_trace) trace_.push_back({rule, originals(t), sep, which, verdict, depth_});
    return verdict.value_or(Verdict::t_perfect);
  }

  void absorb(const ThetaStats& s) {
    theta_stats_.triads_calls += s.triads_calls;
    theta_stats_.flips += s.flips;
    theta_stats_.one_odd_calls += s.one_odd_calls;
    theta_stats_.two_odd_cut_calls += s.two_odd_cut_calls;
    theta_stats_.two_odd_decide_calls += s.two_odd_decide_calls;
    theta_stats_.reductions += s.reductions;
    theta_stats_.branchings += s.branchings;
    theta_stats_.invariant_checks += s.invariant_checks;
    theta_stats_.max_depth = std::max(theta_stats_.max_depth, s.max_depth);
    stats_.theta_steps += s.triads_calls + s.one_odd_calls + s.two_odd_cut_calls + s.two_odd_decide_calls;
  }

  Verdict decide_inner(const Tracked& t) {
    const Graph& g = t.g;
    if (g.order() == 0) return fire(t, "empty-graph", Verdict::t_perfect);

    // line graphs are decided on their root
    ++stats_.line_graph_checks;
    if (auto root = recognize_line_graph(g)) {
      if (root->root.max_degree() >= 4) return fire(t, "line-graph-root-degree-4", Verdict::not_t_perfect);
      ++stats_.theta_calls;
      ThetaOptions to;
      to.parity = options_.parity;
      to.record_trace = false;
      const ThetaVerdict tv = has_skewed_theta(root->root, to);
      absorb(tv.stats);
      return fire(t, tv.contains_skewed_theta ? "line-graph-root-skewed-theta" : "line-graph-root-no-skewed-theta",
                  tv.contains_skewed_theta ? Verdict::not_t_perfect : Verdict::t_perfect);
    }

    // blocks are independent
    if (!is_two_connected(g)) {
      const auto bd = blocks(g);
      fire(t, "block-split", std::nullopt);
      Verdict v = Verdict::t_perfect;
      for (const auto& blk : bd.blocks) {
        if (decide(track_subgraph(t, blk)) == Verdict::not_t_perfect) {
          v = Verdict::not_t_perfect;
          break;
        }
      }
      return fire(t, "blocks-conjoined", v);
    }

    if (g.max_degree() >= 5) return fire(t, "degree-at-least-5", Verdict::not_t_perfect);
    const auto& ex = exceptional_graphs();
    if (same_graph(g, ex.c7sq) || same_graph(g, ex.c10sq)) return fire(t, "exceptional-not-t-perfect", Verdict::not_t_perfect);
    if (same_graph(g, ex.c6sq_minus_edge) || same_graph(g, ex.c7sq_minus_vertex) || same_graph(g, ex.c10sq_minus_vertex))
      return fire(t, "exceptional-t-perfect", Verdict::t_perfect);
    if (is_three_connected(g)) return fire(t, "three-connected", Verdict::not_t_perfect);

    const Separation sep = find_two_separation(g);
    ++stats_.separations;
    const Vertex u = sep.separator[0], v = sep.separator[1];
    const auto orig_pair = std::pair{t.origin[ix(u)].front(), t.origin[ix(v)].front()};
    const Tracked s1 = track_subgraph(t, sep.side1), s2 = track_subgraph(t, sep.side2);
    const Mapped m1 = induced_subgraph(g, sep.side1), m2 = induced_subgraph(g, sep.side2);
    const Vertex u1 = m1.from_parent[ix(u)], v1 = m1.from_parent[ix(v)];
    const Vertex u2 = m2.from_parent[ix(u)], v2 = m2.from_parent[ix(v)];

    std::vector<Tracked> children;
    if (g.adjacent(u, v)) {
      fire(t, "separation", std::nullopt, orig_pair, SeparationCase::adjacent_pair);
      children = {s1, s2};
    } else {
      stats_.parity_queries += 4;
      const InducedPathParities p1 = induced_path_parities(m1.graph, u1, v1, options_.parity);
      const InducedPathParities p2 = induced_path_parities(m2.graph, u2, v2, options_.parity);
      check(p1.even || p1.odd, "a side of a 2-connected graph has no induced u-v path");
      check(p2.even || p2.odd, "a side of a 2-connected graph has no induced u-v path");
      if (p1.even && p1.odd && p2.even && p2.odd)
        return fire(t, "separation", Verdict::not_t_perfect, orig_pair, SeparationCase::both_parities_both);
      ReducedSides rs = build_reduced_sides(m1.graph, m2.graph, u1, v1, u2, v2, p1, p2);
      fire(t, "separation", std::nullopt, orig_pair, rs.which);
      children = {track_mapped(s1, rs.side1), track_mapped(s2, rs.side2)};
    }
    // progress: each child keeps an input vertex the other lacks
    const auto o1 = originals(children[0]), o2 = originals(children[1]);
    auto has_private = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
      return std::any_of(a.begin(), a.end(), [&](Vertex x) { return !std::binary_search(b.begin(), b.end(), x); });
    };
    check(has_private(o1, o2) && has_private(o2, o1), "separation child does not shrink");
    Verdict verdict = Verdict::t_perfect;
    for (const Tracked& c : children) {
      check(!find_claw(c.g).has_value(), "separation produced a graph with a claw");
      check(c.g.order() < g.order() || c.g.size() < g.size(), "separation child is not smaller");
      if (decide(c) == Verdict::not_t_perfect) {
        verdict = Verdict::not_t_perfect;
        break;
      }
    }
    return fire(t, "separation-children-conjoined", verdict, orig_pair);
  }

  RecognizerOptions options_;
  int depth_ = 0;
};

}  // namespace detail

// Decides t-perfection of a claw-free graph. A claw raises NotClawFree;
// components are decided independently.
inline Decision is_t_perfect(const Graph& g, const RecognizerOptions& options = {}) {
  if (auto claw = find_claw(g)) throw NotClawFree(*claw);
  detail::Recognizer rec(options);
  Decision d;
  detail::Tracked top{g, std::vector<std::vector<Vertex>>(static_cast<std::size_t>(g.order()))};
  for (Vertex x = 0; x < g.order(); ++x) top.origin[detail::ix(x)] = {x};
  const auto comps = connected_components(g);
  if (comps.size() <= 1) {
    d.verdict = rec.decide(top);
  } else {
    for (const auto& c : comps)
      if (rec.decide(detail::track_subgraph(top, c)) == Verdict::not_t_perfect) {
        d.verdict = Verdict::not_t_perfect;
        break;
      }
    if (options.record_trace)
      rec.trace_.push_back({"components-conjoined", [&] {
                              std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
                              for (Vertex x = 0; x < g.order(); ++x) all[detail::ix(x)] = x;
                              return all;
                            }(),
                            std::nullopt, std::nullopt, d.verdict, 0});
  }
  d.trace = std::move(rec.trace_);
  d.stats = rec.stats_;
  d.theta_stats = rec.theta_stats_;
  return d;
}

}  // namespace tperf
