#include <gtest/gtest.h>

#include "support.hpp"
#include "tperf/corpus.hpp"
#include "tperf/io.hpp"

using namespace tperf;

namespace {

Graph from_text(GraphFormat f, std::string text) { return parse(GraphDocument{f, std::move(text), std::nullopt}); }

bool same_labelled(const Graph& a, const Graph& b) {
  return a.order() == b.order() && std::ranges::equal(a.edges(), b.edges());
}

}  // namespace

TEST(EdgeList, ParsesTriangle) {
  const Graph g = from_text(GraphFormat::edge_list, "3 3\n0 1\n1 2\n2 0\n");
  EXPECT_EQ(g.order(), 3);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.adjacent(0, 2));
}

TEST(EdgeList, CommentsAndBlankLines) {
  const Graph g = from_text(GraphFormat::edge_list, "# a path\n\n3 2\n0 1   # first\n\n1 2\n");
  EXPECT_EQ(g.size(), 2);
}

TEST(EdgeList, RejectsMalformedInput) {
  EXPECT_THROW(from_text(GraphFormat::edge_list, "2 1\n0 0\n"), InvalidInput);          // loop
  EXPECT_THROW(from_text(GraphFormat::edge_list, "3 2\n0 1\n1 0\n"), InvalidInput);     // duplicate
  EXPECT_THROW(from_text(GraphFormat::edge_list, "3 1\n0 3\n"), InvalidInput);          // range
  EXPECT_THROW(from_text(GraphFormat::edge_list, "3 2\n0 1\n"), InvalidInput);          // count
  EXPECT_THROW(from_text(GraphFormat::edge_list, "3\n"), InvalidInput);                 // header
  EXPECT_THROW(from_text(GraphFormat::edge_list, "3 1\n0 x\n"), InvalidInput);          // token
  EXPECT_THROW(from_text(GraphFormat::edge_list, "-1 0\n"), InvalidInput);
  EXPECT_THROW(from_text(GraphFormat::edge_list, "   \n"), InvalidInput);
}

TEST(Graph6, KnownCodes) {
  const Graph empty5 = from_text(GraphFormat::graph6, "D??");
  EXPECT_EQ(empty5.order(), 5);
  EXPECT_EQ(empty5.size(), 0);
  EXPECT_TRUE(same_labelled(from_text(GraphFormat::graph6, "C~"), complete_graph(4)));
  // path 0-1-2: bits x(0,1)=1 x(0,2)=0 x(1,2)=1 -> 101000
  const Graph p3 = from_text(GraphFormat::graph6, "Bg");
  EXPECT_TRUE(same_labelled(p3, path_graph(3)));
  EXPECT_EQ(serialize(path_graph(3), GraphFormat::graph6), "Bg\n");
  EXPECT_EQ(from_text(GraphFormat::graph6, ">>graph6<<C~").size(), 6);
  EXPECT_EQ(from_text(GraphFormat::graph6, "?").order(), 0);
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(from_text(GraphFormat::graph6, "C"), InvalidInput);     // too few data bytes
  EXPECT_THROW(from_text(GraphFormat::graph6, "C~~"), InvalidInput);   // too many
  EXPECT_THROW(from_text(GraphFormat::graph6, "Bh"), InvalidInput);    // nonzero padding
  EXPECT_THROW(from_text(GraphFormat::graph6, "C \x7f"), InvalidInput);
  EXPECT_THROW(from_text(GraphFormat::graph6, "C~\nC~"), InvalidInput);
}

TEST(Graph6, LargeHeaderRoundTrip) {
  const Graph g = cycle_graph(100);
  const std::string code = serialize(g, GraphFormat::graph6);
  EXPECT_EQ(code[0], '~');
  EXPECT_TRUE(same_labelled(from_text(GraphFormat::graph6, code), g));
}

TEST(Serialization, RoundTripsOnCorpus) {
  std::vector<Graph> all;
  for (auto kind : {CorpusKind::random_subcubic, CorpusKind::random_clawfree, CorpusKind::random_clawfree_via_linegraph})
    for (const Graph& g : generate_corpus(kind, 300, 31, 14)) all.push_back(g);
  for (auto& [name, g] : named_corpus()) all.push_back(g);
  for (const Graph& g : all)
    for (auto f : {GraphFormat::graph6, GraphFormat::edge_list}) {
      const std::string text = serialize(g, f);
      EXPECT_TRUE(same_labelled(from_text(f, text), g)) << text;
      EXPECT_EQ(serialize(from_text(f, text), f), text);
    }
}

TEST(Serialization, FormatNames) {
  EXPECT_EQ(format_for_path("x/k4.g6"), GraphFormat::graph6);
  EXPECT_EQ(format_for_path("x/c5.el"), GraphFormat::edge_list);
  EXPECT_EQ(parse_format_name("edge-list"), GraphFormat::edge_list);
  EXPECT_FALSE(parse_format_name("dot").has_value());
  EXPECT_THROW(read_document("/nonexistent/file.el"), InvalidInput);
}

TEST(Corpus, SeededDeterminism) {
  const auto a = generate_corpus(CorpusKind::random_subcubic, 100, 7);
  const auto b = generate_corpus(CorpusKind::random_subcubic, 100, 7);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(same_labelled(a[i], b[i]));
  for (const Graph& g : generate_corpus(CorpusKind::random_clawfree_via_linegraph, 50, 1)) EXPECT_TRUE(is_claw_free(g));
  EXPECT_EQ(generate_corpus(CorpusKind::named, 1, 0).size(), 8u);
}
