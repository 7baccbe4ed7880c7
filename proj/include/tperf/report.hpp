#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "tperf/graph.hpp"
#include "tperf/linegraph.hpp"
#include "tperf/parity.hpp"
#include "tperf/recognizer.hpp"
#include "tperf/theta.hpp"

namespace tperf {

// Records are flat JSON objects; "timing" is the only field that may differ
// between replays, so strip_timing makes them byte-comparable.
using Json = nlohmann::ordered_json;

struct InputIdentity {
  std::string name;
  int vertices = 0;
  int edges = 0;
};

inline InputIdentity identify(const std::string& name, const Graph& g) { return {name, g.order(), g.size()}; }

inline Json to_json(const InputIdentity& id) {
  return Json{{"name", id.name}, {"vertices", id.vertices}, {"edges", id.edges}};
}

inline Json to_json(const ParityConfig& cfg) {
  return Json{{"parity_backend", cfg.backend == ParityBackend::exhaustive ? "exhaustive" : "polynomial"},
              {"max_exhaustive_n", cfg.max_exhaustive_n},
              {"max_linkage_n", cfg.max_linkage_n}};
}

inline Json to_json(const RuleFiring& r) {
  Json j{{"rule", r.rule}, {"depth", r.depth}, {"vertices", r.vertices}};
  if (r.separator) j["separator"] = {r.separator->first, r.separator->second};
  if (r.separation_case) j["case"] = to_string(*r.separation_case);
  if (r.verdict) j["verdict"] = to_string(*r.verdict);
  return j;
}

inline Json to_json(const RecognizerStats& s) {
  return Json{{"recursions", s.recursions},         {"separations", s.separations},
              {"parity_queries", s.parity_queries}, {"line_graph_checks", s.line_graph_checks},
              {"theta_calls", s.theta_calls},       {"theta_steps", s.theta_steps},
              {"invariant_checks", s.invariant_checks}};
}

inline Json to_json(const ThetaStats& s) {
  return Json{{"triads_calls", s.triads_calls},
              {"flips", s.flips},
              {"one_odd_calls", s.one_odd_calls},
              {"two_odd_cut_calls", s.two_odd_cut_calls},
              {"two_odd_decide_calls", s.two_odd_decide_calls},
              {"reductions", s.reductions},
              {"branchings", s.branchings},
              {"invariant_checks", s.invariant_checks},
              {"max_depth", s.max_depth}};
}

inline Json to_json(const TraceEntry& t) {
  return Json{{"rule", t.rule}, {"order", t.order}, {"size", t.size}, {"depth", t.depth}};
}

inline Json recognize_report(const InputIdentity& id, const Decision& d, const ParityConfig& cfg, bool with_trace,
                             std::optional<double> seconds) {
  Json j{{"command", "recognize"}, {"input", to_json(id)}, {"verdict", to_string(d.verdict)},
         {"config", to_json(cfg)}, {"stats", to_json(d.stats)}, {"theta_stats", to_json(d.theta_stats)}};
  if (with_trace) {
    Json trace = Json::array();
    for (const auto& r : d.trace) trace.push_back(to_json(r));
    j["trace"] = std::move(trace);
  }
  if (seconds) j["timing"] = {{"seconds", *seconds}};
  return j;
}

inline Json theta_report(const InputIdentity& id, const ThetaVerdict& v, const ParityConfig& cfg, bool with_trace,
                         std::optional<double> seconds) {
  Json j{{"command", "skewed-theta"}, {"input", to_json(id)}, {"skewed_theta", v.contains_skewed_theta},
         {"config", to_json(cfg)}, {"stats", to_json(v.stats)}};
  if (with_trace) {
    Json trace = Json::array();
    for (const auto& t : v.trace) trace.push_back(to_json(t));
    j["trace"] = std::move(trace);
  }
  if (seconds) j["timing"] = {{"seconds", *seconds}};
  return j;
}

inline Json line_root_report(const InputIdentity& id, const std::optional<RootMapping>& root,
                             std::optional<double> seconds) {
  Json j{{"command", "line-root"}, {"input", to_json(id)}, {"line_graph", root.has_value()}};
  if (root) {
    Json edges = Json::array();
    for (const Edge& e : root->root.edges()) edges.push_back({e.u, e.v});
    Json map = Json::array();
    for (const Edge& e : root->vertex_to_edge) map.push_back({e.u, e.v});
    j["root"] = {{"vertices", root->root.order()}, {"edges", std::move(edges)}};
    j["vertex_to_root_edge"] = std::move(map);
  }
  if (seconds) j["timing"] = {{"seconds", *seconds}};
  return j;
}

inline Json oracle_report(const InputIdentity& id, const std::string& question, bool answer,
                          std::optional<double> seconds) {
  Json j{{"command", "oracle"}, {"input", to_json(id)}, {"question", question}, {"answer", answer}};
  if (seconds) j["timing"] = {{"seconds", *seconds}};
  return j;
}

inline Json error_report(const std::string& command, const std::string& kind, const std::string& message) {
  return Json{{"command", command}, {"error", kind}, {"message", message}};
}

inline Json strip_timing(Json j) {
  j.erase("timing");
  return j;
}

}  // namespace tperf
