#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tperf/graph.hpp"

namespace tperf {

enum class GraphFormat { graph6, edge_list };

inline const char* to_string(GraphFormat f) { return f == GraphFormat::graph6 ? "graph6" : "edge-list"; }

struct GraphDocument {
  GraphFormat format = GraphFormat::edge_list;
  std::string payload;
  std::optional<std::string> name;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.find('\n') != std::string_view::npos) throw InvalidInput("graph6: expected a single graph");
  if (text.empty()) throw InvalidInput("graph6: empty payload");
  for (char c : text)
    if (c < 63 || c > 126) throw InvalidInput("graph6: byte outside the printable range 63..126");
  std::size_t pos = 0;
  auto next6 = [&]() -> std::uint32_t {
    if (pos >= text.size()) throw InvalidInput("graph6: truncated size header");
    return static_cast<std::uint32_t>(text[pos++] - 63);
  };
  std::uint64_t n = next6();
  if (n == 63) {
    if (pos < text.size() && text[pos] == 126) throw InvalidInput("graph6: graphs above 258047 vertices are not supported");
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | next6();
    if (n < 63) throw InvalidInput("graph6: long size header used for a small graph");
  }
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos != bytes)
    throw InvalidInput("graph6: expected " + std::to_string(bytes) + " data bytes, found " + std::to_string(text.size() - pos));
  GraphBuilder b(static_cast<int>(n));
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j)
    for (Vertex i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<std::uint32_t>(text[pos + k / 6] - 63);
      if (byte >> (5 - k % 6) & 1u) b.add_edge(i, j);
    }
  // padding bits must be zero for an exact round trip
  for (; k < bytes * 6; ++k) {
    const auto byte = static_cast<std::uint32_t>(text[pos + k / 6] - 63);
    if (byte >> (5 - k % 6) & 1u) throw InvalidInput("graph6: nonzero padding bits");
  }
  return b.build();
}

inline std::string serialize_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n > 258047) throw InvalidInput("graph6: graphs above 258047 vertices are not supported");
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63u) + 63));
  }
  std::uint32_t acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < g.order(); ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

inline long parse_int(std::string_view tok, int line) {
  long v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw InvalidInput("edge list line " + std::to_string(line) + ": '" + std::string(tok) + "' is not an integer");
  return v;
}

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t b = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > b) out.push_back(s.substr(b, i - b));
  }
  return out;
}

// Header "n m" then m lines "u v"; blank lines and '#' comments are skipped.
inline Graph parse_edge_list(std::string_view text) {
  std::optional<std::pair<long, long>> header;
  GraphBuilder b(0);
  long seen = 0;
  int line = 0;
  std::size_t at = 0;
  while (at <= text.size()) {
    const std::size_t nl = std::min(text.find('\n', at), text.size());
    std::string_view raw = text.substr(at, nl - at);
    at = nl + 1;
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (raw.empty()) continue;
    const auto tok = tokens(raw);
    if (tok.size() != 2) throw InvalidInput("edge list line " + std::to_string(line) + ": expected two integers");
    const long a = parse_int(tok[0], line), c = parse_int(tok[1], line);
    if (!header) {
      if (a < 0 || c < 0) throw InvalidInput("edge list header: negative count");
      if (a > 10'000'000) throw InvalidInput("edge list header: vertex count too large");
      header = {a, c};
      b = GraphBuilder(static_cast<int>(a));
      continue;
    }
    if (a < 0 || c < 0 || a >= header->first || c >= header->first)
      throw InvalidInput("edge list line " + std::to_string(line) + ": vertex out of range 0.." +
                         std::to_string(header->first - 1));
    if (a == c) throw InvalidInput("edge list line " + std::to_string(line) + ": loop at vertex " + std::to_string(a));
    if (!b.add_edge_if_absent(static_cast<Vertex>(a), static_cast<Vertex>(c)))
      throw InvalidInput("edge list line " + std::to_string(line) + ": duplicate edge " +
                         to_string(Edge(static_cast<Vertex>(a), static_cast<Vertex>(c))));
    ++seen;
  }
  if (!header) throw InvalidInput("edge list: missing \"n m\" header");
  if (seen != header->second)
    throw InvalidInput("edge list: header announces " + std::to_string(header->second) + " edges, found " +
                       std::to_string(seen));
  return b.build();
}

inline std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace detail

inline Graph parse(const GraphDocument& doc) {
  if (detail::trim(doc.payload).empty()) throw InvalidInput("empty graph document");
  return doc.format == GraphFormat::graph6 ? detail::parse_graph6(doc.payload) : detail::parse_edge_list(doc.payload);
}

inline std::string serialize(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? detail::serialize_graph6(g) + "\n" : detail::serialize_edge_list(g);
}

// ".g6" is graph6, anything else an edge list.
inline GraphFormat format_for_path(const std::filesystem::path& p) {
  return p.extension() == ".g6" ? GraphFormat::graph6 : GraphFormat::edge_list;
}

inline std::optional<GraphFormat> parse_format_name(std::string_view s) {
  if (s == "graph6" || s == "g6") return GraphFormat::graph6;
  if (s == "edge-list" || s == "el") return GraphFormat::edge_list;
  return std::nullopt;
}

inline GraphDocument read_document(const std::filesystem::path& p, std::optional<GraphFormat> format = std::nullopt) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return {format.value_or(format_for_path(p)), buf.str(), p.filename().string()};
}

}  // namespace tperf
