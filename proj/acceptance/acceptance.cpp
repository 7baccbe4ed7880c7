// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tperf/tperf.hpp"

using namespace tperf;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Structural assertions are counted over every recognizer and theta run.
struct AssertionLedger {
  std::int64_t checks = 0;
  std::int64_t fired = 0;
  std::vector<std::string> messages;

  template <class F>
  bool guard(F&& f) {
    try {
      f();
      return true;
    } catch (const InvariantViolation& e) {
      ++fired;
      if (messages.size() < 3) messages.emplace_back(e.what());
      return false;
    }
  }
  void add(const Decision& d) { checks += d.stats.invariant_checks + d.theta_stats.invariant_checks; }
  void add(const ThetaVerdict& v) { checks += v.stats.invariant_checks; }
};

AssertionLedger ledger;

Decision recognize(const Graph& g, bool trace = false) {
  RecognizerOptions opt;
  opt.record_trace = trace;
  Decision d = is_t_perfect(g, opt);
  ledger.add(d);
  return d;
}

std::string fmt_seconds(double s) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(3) << s << " s";
  return o.str();
}

Outcome golden_set() {
  const std::vector<std::pair<Graph, bool>> cases = {
      {complete_graph(4), false},           {wheel5(), false},
      {cycle_square(7), false},             {cycle_square(10), false},
      {cycle_square6_minus_edge(), true},   {cycle_square_minus_vertex(7), true},
      {cycle_square_minus_vertex(10), true}};
  const auto t0 = Clock::now();
  int right = 0;
  for (const auto& [g, want] : cases) {
    ledger.guard([&] { right += recognize(g).t_perfect() == want; });
  }
  const double s = since(t0);
  return {right == 7 && s < 1.0, std::to_string(right) + "/7 correct in " + fmt_seconds(s)};
}

Outcome recognizer_vs_oracle() {
  auto oracle = TMinorSearch::forbidden();
  int total = 0, agree = 0;
  auto check = [&](const Graph& g) {
    ++total;
    ledger.guard([&] { agree += recognize(g).t_perfect() == is_t_perfect_bruteforce(g, oracle); });
  };
  const auto t0 = Clock::now();
  int exhaustive = 0;
  for (const auto& level : enumerate_connected(9, is_claw_free))
    for (const Graph& g : level) {
      check(g);
      ++exhaustive;
    }
  const auto random = generate_corpus(CorpusKind::random_clawfree, 10000, 20261016, 12, 1);
  for (const Graph& g : random) check(g);
  const auto lines = generate_corpus(CorpusKind::random_clawfree_via_linegraph, 2000, 20261017, 12, 1);
  for (const Graph& g : lines) check(g);
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree (" +
                              std::to_string(exhaustive) + " connected claw-free graphs on up to 9 vertices, " +
                              std::to_string(random.size() + lines.size()) + " random on up to 12) in " +
                              fmt_seconds(since(t0))};
}

Outcome theta_vs_oracle() {
  int total = 0, agree = 0;
  auto check = [&](const Graph& g) {
    ++total;
    ledger.guard([&] {
      const ThetaVerdict v = has_skewed_theta(g);
      ledger.add(v);
      agree += v.contains_skewed_theta == has_skewed_theta_bruteforce(g);
    });
  };
  const auto t0 = Clock::now();
  int exhaustive = 0;
  for (const auto& level : enumerate_connected(8, is_subcubic))
    for (const Graph& g : level) {
      check(g);
      ++exhaustive;
    }
  const auto random = generate_corpus(CorpusKind::random_subcubic, 5000, 4242, 14, 1);
  for (const Graph& g : random) check(g);
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " agree (" +
                              std::to_string(exhaustive) + " connected subcubic graphs on up to 8 vertices, " +
                              std::to_string(random.size()) + " random on up to 14) in " + fmt_seconds(since(t0))};
}

Outcome line_graph_bridge() {
  Rng rng(3131);
  int total = 0, agree = 0;
  const auto t0 = Clock::now();
  for (int i = 0; i < 1000; ++i) {
    Graph h = random_subcubic(rng.between(2, 10), rng);
    while (h.size() == 0) h = random_subcubic(rng.between(2, 10), rng);  // a line graph needs a root edge
    const Graph l = line_graph(h).graph;
    ++total;
    ledger.guard([&] { agree += recognize(l).t_perfect() == !has_skewed_theta_bruteforce(h); });
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " root graphs agree in " +
                              fmt_seconds(since(t0))};
}

Outcome prism_vs_k4() {
  auto k4 = TMinorSearch::k4_only();
  const auto corpus = generate_corpus(CorpusKind::random_clawfree, 1000, 5151, 10, 1);
  int agree = 0, with_k4 = 0;
  const auto t0 = Clock::now();
  for (const Graph& g : corpus) {
    const bool minor = k4.reaches_target(g);
    with_k4 += minor;
    agree += has_skewed_prism_bruteforce(g) == minor;
  }
  return {agree == static_cast<int>(corpus.size()),
          std::to_string(agree) + "/" + std::to_string(corpus.size()) + " agree (" + std::to_string(with_k4) +
              " contain K4 as a t-minor) in " + fmt_seconds(since(t0))};
}

Outcome assertions_quiet() {
  std::string detail = std::to_string(ledger.checks) + " structural checks evaluated, " +
                       std::to_string(ledger.fired) + " fired";
  for (const auto& m : ledger.messages) detail += "; " + m;
  return {ledger.fired == 0 && ledger.checks > 0, detail};
}

// Bipartite subcubic root: every cycle is even, so the whole decision runs
// to a t-perfect verdict instead of stopping at the first skewed theta.
Graph random_bipartite_subcubic(int n, Rng& rng) {
  GraphBuilder b(n);
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  auto bump = [&](Vertex a, Vertex c) {
    ++deg[static_cast<std::size_t>(a)];
    ++deg[static_cast<std::size_t>(c)];
  };
  for (Vertex i = 1; i < n; ++i) {
    std::vector<Vertex> open;
    for (Vertex j = 0; j < i; ++j)
      if (deg[static_cast<std::size_t>(j)] < 3 && j % 2 != i % 2) open.push_back(j);
    if (open.empty()) continue;
    const Vertex p = open[static_cast<std::size_t>(rng.below(static_cast<int>(open.size())))];
    b.add_edge(p, i);
    bump(p, i);
  }
  for (int t = 0; t < 3 * n; ++t) {
    const Vertex a = rng.below(n), c = rng.below(n);
    if (a % 2 == c % 2 || deg[static_cast<std::size_t>(a)] >= 3 || deg[static_cast<std::size_t>(c)] >= 3) continue;
    if (b.add_edge_if_absent(a, c)) bump(a, c);
  }
  return b.build();
}

// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (std::log(x[i]) - mx) * (std::log(y[i]) - my);
    den += (std::log(x[i]) - mx) * (std::log(x[i]) - mx);
  }
  return num / den;
}

Outcome scaling() {
  const std::vector<int> sizes = {50, 100, 200, 400};
  const int seeds = 3;
  struct Family {
    std::string name;
    std::function<Graph(int, Rng&)> root;
  };
  const std::vector<Family> families = {{"random", random_connected_subcubic},
                                        {"bipartite", random_bipartite_subcubic}};
  bool pass = true;
  std::ostringstream detail;
  detail << std::fixed << std::setprecision(2);
  for (const Family& f : families) {
    std::vector<double> xs, counts, times;
    for (int n : sizes) {
      double c = 0, t = 0;
      for (int s = 0; s < seeds; ++s) {
        Rng rng(static_cast<std::uint64_t>(90000 + 100 * n + s));
        const Graph l = line_graph(f.root(n, rng)).graph;
        const auto t0 = Clock::now();
        Decision d;
        pass &= ledger.guard([&] { d = recognize(l); });
        t += since(t0);
        c += static_cast<double>(d.stats.recursions + d.stats.theta_steps);
      }
      xs.push_back(n);
      counts.push_back(c / seeds);
      times.push_back(std::max(t / seeds, 1e-6));
    }
    double worst_500 = 0;
    for (int s = 0; s < seeds; ++s) {
      Rng rng(static_cast<std::uint64_t>(95000 + s));
      const Graph l = line_graph(f.root(500, rng)).graph;
      const auto t0 = Clock::now();
      pass &= ledger.guard([&] { (void)recognize(l); });
      worst_500 = std::max(worst_500, since(t0));
    }
    const double slope = loglog_slope(xs, counts);
    pass &= slope <= 2.5 && worst_500 < 60.0;
    detail << f.name << " roots: recursion exponent " << slope << ", time exponent " << loglog_slope(xs, times)
           << ", slowest 500-vertex root " << std::setprecision(3) << worst_500 << " s" << std::setprecision(2)
           << "; ";
  }
  std::string d = detail.str();
  d.erase(d.size() - 2);
  return {pass, d};
}

std::string determinism_workload() {
  std::string out;
  auto emit = [&](const std::string& name, const Graph& g) {
    const Decision d = recognize(g, true);
    out += strip_timing(recognize_report(identify(name, g), d, ParityConfig{}, true, 0.0)).dump() + "\n";
  };
  for (const auto& [name, g] : named_corpus())
    if (is_claw_free(g)) emit(name, g);
  const auto corpus = generate_corpus(CorpusKind::random_clawfree, 300, 777, 12, 1);
  for (std::size_t i = 0; i < corpus.size(); ++i) emit("random-" + std::to_string(i), corpus[i]);
  Rng rng(778);
  emit("line-500", line_graph(random_connected_subcubic(500, rng)).graph);
  return out;
}

std::string run_command(const std::string& cmd) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, k);
  pclose(pipe);
  return out;
}

Outcome determinism() {
  std::vector<std::string> runs;
  for (int i = 0; i < 3; ++i) runs.push_back(determinism_workload());
  const bool in_process = runs[0] == runs[1] && runs[1] == runs[2];

  // separate processes on files, timing removed from the records
  const auto dir = std::filesystem::temp_directory_path() / "tperf-acceptance";
  std::filesystem::create_directories(dir);
  Rng rng(779);
  const auto file = dir / "line-200.el";
  std::ofstream(file) << serialize(line_graph(random_connected_subcubic(200, rng)).graph, GraphFormat::edge_list);
  const auto sep = std::string(TPERF_SAMPLES_DIR) + "/separated.el";
  std::vector<std::string> proc;
  for (int i = 0; i < 3; ++i) {
    std::string all;
    for (const std::string& f : {file.string(), sep}) {
      const std::string raw = run_command(std::string(TPERF_CLI_PATH) + " recognize --trace " + f);
      try {
        all += strip_timing(Json::parse(raw)).dump() + "\n";
      } catch (const std::exception&) {
        all += "<unparsable>" + raw;
      }
    }
    proc.push_back(all);
  }
  const bool cross_process = proc[0] == proc[1] && proc[1] == proc[2] && proc[0].find("<unparsable>") == std::string::npos;
  std::filesystem::remove_all(dir);
  return {in_process && cross_process,
          std::string("3 in-process runs over ") + std::to_string(std::count(runs[0].begin(), runs[0].end(), '\n')) +
              " reports " + (in_process ? "identical" : "DIFFER") + " (" + std::to_string(runs[0].size()) +
              " bytes); 3 CLI process runs " + (cross_process ? "identical" : "DIFFER")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
  };
  // assertions_quiet reads the ledger filled by the others, so it runs last
  const std::vector<Criterion> criteria = {
      {1, "named-graph golden set", golden_set},
      {2, "recognizer agrees with the forbidden t-minor oracle", recognizer_vs_oracle},
      {3, "skewed-theta decider agrees with exhaustive search", theta_vs_oracle},
      {4, "line graph of H is t-perfect iff H has no skewed theta", line_graph_bridge},
      {5, "skewed prism iff K4 t-minor", prism_vs_k4},
      {7, "polynomial scaling on line graphs", scaling},
      {8, "byte-identical reports across runs", determinism},
      {6, "structural assertions never fire", assertions_quiet},
  };
  std::vector<std::pair<int, std::string>> lines;
  int passed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    passed += o.pass;
    lines.emplace_back(c.id, std::string(o.pass ? "PASS" : "FAIL") + " criterion " + std::to_string(c.id) + " (" +
                                 c.name + "): " + o.detail);
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [id, line] : lines) std::cout << line << '\n';
  std::cout << passed << "/" << criteria.size() << " criteria passed\n";
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
