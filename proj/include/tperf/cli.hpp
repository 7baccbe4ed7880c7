#pragma once

#include <chrono>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tperf/corpus.hpp"
#include "tperf/io.hpp"
#include "tperf/linegraph.hpp"
#include "tperf/oracle.hpp"
#include "tperf/recognizer.hpp"
#include "tperf/report.hpp"
#include "tperf/theta.hpp"

namespace tperf {

// Exit codes. 0 and 1 carry the answer of the query (0: property holds /
// no obstruction found), the rest are failures.
namespace exit_code {
inline constexpr int yes = 0;
inline constexpr int no = 1;
inline constexpr int input_error = 2;
inline constexpr int guard_or_config = 3;
inline constexpr int usage = 64;
inline constexpr int internal = 70;
}  // namespace exit_code

namespace detail {

struct CliSettings {
  std::string file;
  std::string format;  // empty: by extension
  std::string parity_backend = "exhaustive";
  int max_exhaustive_n = ParityConfig{}.max_exhaustive_n;
  bool trace = false;
  bool no_timing = false;
  std::string question = "tperfect";
  std::string kind = "random-clawfree-via-linegraph";
  int count = 10;
  std::uint64_t seed = 1;
  int max_n = 12;
  int exhaustive_max_n = 8;
  int samples = 1000;
  bool records = false;
};

inline ParityConfig parity_config(const CliSettings& s) {
  ParityConfig cfg;
  cfg.backend = s.parity_backend == "polynomial" ? ParityBackend::polynomial : ParityBackend::exhaustive;
  cfg.max_exhaustive_n = s.max_exhaustive_n;
  return cfg;
}

inline Graph load(const CliSettings& s) {
  std::optional<GraphFormat> f;
  if (!s.format.empty()) f = parse_format_name(s.format);
  return parse(read_document(s.file, f));
}

inline std::string input_name(const CliSettings& s) { return std::filesystem::path(s.file).filename().string(); }

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::optional<double> timing(const CliSettings& s, const Stopwatch& w) {
  if (s.no_timing) return std::nullopt;
  return w.seconds();
}

inline int cmd_recognize(const CliSettings& s, std::ostream& out) {
  const Graph g = load(s);
  Stopwatch w;
  RecognizerOptions opt;
  opt.parity = parity_config(s);
  opt.record_trace = s.trace;
  const Decision d = is_t_perfect(g, opt);
  out << recognize_report(identify(input_name(s), g), d, opt.parity, s.trace, timing(s, w)).dump() << '\n';
  return d.t_perfect() ? exit_code::yes : exit_code::no;
}

inline int cmd_theta(const CliSettings& s, std::ostream& out) {
  const Graph g = load(s);
  if (g.max_degree() > 3) throw InvalidInput("skewed-theta needs a subcubic graph, found degree " + std::to_string(g.max_degree()));
  Stopwatch w;
  ThetaOptions opt;
  opt.parity = parity_config(s);
  opt.record_trace = s.trace;
  const ThetaVerdict v = has_skewed_theta(g, opt);
  out << theta_report(identify(input_name(s), g), v, opt.parity, s.trace, timing(s, w)).dump() << '\n';
  return v.contains_skewed_theta ? exit_code::no : exit_code::yes;
}

inline int cmd_line_root(const CliSettings& s, std::ostream& out) {
  const Graph g = load(s);
  Stopwatch w;
  const auto root = recognize_line_graph(g);
  out << line_root_report(identify(input_name(s), g), root, timing(s, w)).dump() << '\n';
  return root ? exit_code::yes : exit_code::no;
}

// tperfect answers "is it t-perfect"; theta and prism answer "is the
// obstruction present", so a found obstruction exits 1.
inline int cmd_oracle(const CliSettings& s, std::ostream& out) {
  const Graph g = load(s);
  Stopwatch w;
  bool answer = false;
  int code = exit_code::yes;
  if (s.question == "tperfect") {
    answer = is_t_perfect_bruteforce(g);
    code = answer ? exit_code::yes : exit_code::no;
  } else if (s.question == "theta") {
    answer = has_skewed_theta_bruteforce(g);
    code = answer ? exit_code::no : exit_code::yes;
  } else {
    answer = has_skewed_prism_bruteforce(g);
    code = answer ? exit_code::no : exit_code::yes;
  }
  out << oracle_report(identify(input_name(s), g), s.question, answer, timing(s, w)).dump() << '\n';
  return code;
}

inline CorpusKind corpus_kind(const std::string& k) {
  if (k == "random-subcubic") return CorpusKind::random_subcubic;
  if (k == "random-clawfree") return CorpusKind::random_clawfree;
  if (k == "named") return CorpusKind::named;
  return CorpusKind::random_clawfree_via_linegraph;
}

inline int cmd_gen(const CliSettings& s, std::ostream& out) {
  const auto format = parse_format_name(s.format.empty() ? "graph6" : s.format).value();
  const auto graphs = generate_corpus(corpus_kind(s.kind), s.count, s.seed, s.max_n);
  bool first = true;
  for (const Graph& g : graphs) {
    if (format == GraphFormat::edge_list && !first) out << '\n';
    out << serialize(g, format);
    first = false;
  }
  return exit_code::yes;
}

// Recognizer against the brute-force oracle: every connected claw-free graph
// up to the exhaustive bound, then seeded random claw-free samples.
inline int cmd_corpus_check(const CliSettings& s, std::ostream& out) {
  struct Row {
    std::string source;
    int instances = 0, agree = 0, t_perfect = 0;
  };
  Row exhaustive{"exhaustive"}, random{"random"};
  auto oracle = TMinorSearch::forbidden();
  RecognizerOptions opt;
  opt.parity = parity_config(s);
  opt.record_trace = false;
  auto check = [&](const Graph& g, Row& row, int index) {
    const bool want = is_t_perfect_bruteforce(g, oracle);
    const bool got = is_t_perfect(g, opt).t_perfect();
    ++row.instances;
    row.agree += want == got;
    row.t_perfect += want;
    if (s.records)
      out << Json{{"source", row.source}, {"index", index}, {"graph6", serialize_graph6(g)},
                  {"recognizer", got}, {"oracle", want}, {"agree", want == got}}
                 .dump()
          << '\n';
  };
  const auto levels = enumerate_connected(s.exhaustive_max_n, is_claw_free);
  int index = 0;
  for (const auto& level : levels)
    for (const Graph& g : level) check(g, exhaustive, index++);
  const auto sample = generate_corpus(CorpusKind::random_clawfree, s.samples, s.seed, s.max_n, 1);
  index = 0;
  for (const Graph& g : sample) check(g, random, index++);

  out << std::left << std::setw(12) << "source" << std::right << std::setw(10) << "instances" << std::setw(10)
      << "agree" << std::setw(12) << "t-perfect" << '\n';
  for (const Row* r : {&exhaustive, &random})
    out << std::left << std::setw(12) << r->source << std::right << std::setw(10) << r->instances << std::setw(10)
        << r->agree << std::setw(12) << r->t_perfect << '\n';
  const bool ok = exhaustive.agree == exhaustive.instances && random.agree == random.instances;
  out << (ok ? "all verdicts agree" : "DISAGREEMENT") << '\n';
  return ok ? exit_code::yes : exit_code::no;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  using detail::CliSettings;
  CliSettings s;
  CLI::App app{"t-perfection of claw-free graphs"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool with_file) {
    if (with_file) sub->add_option("file", s.file, "graph file (.g6 is graph6, otherwise an edge list)")->required();
    sub->add_option("--format", s.format, "input format override")->check(CLI::IsMember({"graph6", "edge-list"}));
    sub->add_option("--parity-backend", s.parity_backend, "induced path parity backend")
        ->check(CLI::IsMember({"exhaustive", "polynomial"}));
    sub->add_option("--max-exhaustive-n", s.max_exhaustive_n, "largest graph handed to the exhaustive parity search")
        ->check(CLI::Range(2, 64));
    sub->add_flag("--trace", s.trace, "include the rule trace in the report");
    sub->add_flag("--no-timing", s.no_timing, "omit the timing field");
  };

  auto* recognize = app.add_subcommand("recognize", "decide t-perfection (exit 0 t-perfect, 1 not)");
  add_common(recognize, true);
  auto* theta = app.add_subcommand("skewed-theta", "search a subcubic graph for a skewed theta (exit 1 if found)");
  add_common(theta, true);
  auto* root = app.add_subcommand("line-root", "reconstruct the root of a line graph (exit 1 if none)");
  add_common(root, true);
  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth on small graphs");
  add_common(oracle, true);
  oracle->add_option("--question", s.question, "tperfect, theta or prism")
      ->check(CLI::IsMember({"tperfect", "theta", "prism"}));
  auto* gen = app.add_subcommand("gen", "print a seeded corpus");
  gen->add_option("--kind", s.kind)->check(
      CLI::IsMember({"random-subcubic", "random-clawfree-via-linegraph", "random-clawfree", "named"}));
  gen->add_option("--count", s.count)->check(CLI::PositiveNumber);
  gen->add_option("--seed", s.seed);
  gen->add_option("--max-n", s.max_n, "vertex bound")->check(CLI::Range(1, 200));
  gen->add_option("--format", s.format)->check(CLI::IsMember({"graph6", "edge-list"}));
  auto* cc = app.add_subcommand("corpus-check", "recognizer against the oracle, with a summary table");
  cc->add_option("--max-n", s.exhaustive_max_n, "exhaustive vertex bound")->check(CLI::Range(1, 9));
  cc->add_option("--samples", s.samples, "random claw-free samples")->check(CLI::NonNegativeNumber);
  cc->add_option("--sample-max-n", s.max_n, "vertex bound of the random samples")->check(CLI::Range(1, 12));
  cc->add_option("--seed", s.seed);
  cc->add_option("--parity-backend", s.parity_backend)->check(CLI::IsMember({"exhaustive", "polynomial"}));
  cc->add_flag("--records", s.records, "print one JSON record per instance before the table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return exit_code::usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (*recognize) return detail::cmd_recognize(s, out);
    if (*theta) return detail::cmd_theta(s, out);
    if (*root) return detail::cmd_line_root(s, out);
    if (*oracle) return detail::cmd_oracle(s, out);
    if (*gen) return detail::cmd_gen(s, out);
    return detail::cmd_corpus_check(s, out);
  } catch (const NotClawFree& e) {
    Json j = error_report(command, "not-claw-free", e.what());
    j["claw"] = {{"centre", e.witness().centre}, {"leaves", e.witness().leaves}};
    out << j.dump() << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code::input_error;
  } catch (const InvalidInput& e) {
    out << error_report(command, "invalid-input", e.what()).dump() << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code::input_error;
  } catch (const SizeGuardExceeded& e) {
    out << error_report(command, "size-guard", e.what()).dump() << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code::guard_or_config;
  } catch (const PreconditionViolation& e) {
    out << error_report(command, "precondition", e.what()).dump() << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code::guard_or_config;
  } catch (const InvariantViolation& e) {
    out << error_report(command, "internal", e.what()).dump() << '\n';
    err << "internal error: " << e.what() << '\n';
    return exit_code::internal;
  }
}

}  // namespace tperf
