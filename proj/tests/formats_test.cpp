#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gk/analysis.hpp"
#include "gk/formats.hpp"
#include "support/oracles.hpp"

namespace gk {
namespace {

using testing::EdgeList;

std::set<std::pair<Vertex, Vertex>> edge_set(const EdgeList& edges) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (auto [u, v] : edges) out.insert({std::min(u, v), std::max(u, v)});
  return out;
}

EdgeList edges_of(const SimpleGraph& g) {
  EdgeList out;
  for (auto [u, v] : g.edges()) out.emplace_back(u, v);
  return out;
}

EdgeList edges_of(const EmbeddedGraph& g) {
  EdgeList out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) out.push_back(g.edge(e));
  return out;
}

// Reference strings produced by networkx.to_graph6_bytes (header stripped).
TEST(Graph6, Goldens) {
  EXPECT_EQ(to_graph6(SimpleGraph(2, EdgeList{{0, 1}})), "A_");
  EXPECT_EQ(to_graph6(SimpleGraph(3, EdgeList{{0, 1}, {1, 2}, {0, 2}})), "Bw");
  const EdgeList petersen{{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                          {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  EXPECT_EQ(to_graph6(SimpleGraph(10, petersen)), "IheA@GUAo");
  EXPECT_EQ(to_graph6(build_gk(2).graph), "Ms?GOPCP@CcOCPCW?");
  EXPECT_EQ(to_graph6(SimpleGraph(0, EdgeList{})), "?");
}

TEST(Graph6, LongSizeField) {
  EdgeList path;
  for (Vertex i = 0; i + 1 < 70; ++i) path.emplace_back(i, i + 1);
  const auto text = to_graph6(SimpleGraph(70, path));
  EXPECT_EQ(text.substr(0, 10), "~?@EhCGGC@");
  const auto back = from_graph6(text);
  EXPECT_EQ(back.vertex_count(), 70U);
  EXPECT_EQ(edge_set(edges_of(back)), edge_set(path));
}

TEST(Graph6, RoundTripsGk) {
  for (int k = 2; k <= 8; ++k) {
    const auto g = build_gk(k);
    const auto back = from_graph6(to_graph6(g.graph));
    EXPECT_EQ(back.vertex_count(), g.graph.vertex_count());
    EXPECT_EQ(edge_set(edges_of(back)), edge_set(edges_of(g.graph))) << "k=" << k;
  }
}

TEST(Graph6, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng() % 130);
    const double p = static_cast<double>(rng() % 100) / 100.0;
    const auto edges = testing::random_simple_graph(n, p, rng);
    const auto text = to_graph6(SimpleGraph(n, edges));
    const auto back = from_graph6(text);
    EXPECT_EQ(back.vertex_count(), n);
    EXPECT_EQ(edge_set(edges_of(back)), edge_set(edges)) << "n=" << n;
    EXPECT_EQ(to_graph6(back), text);
  }
}

TEST(Graph6, AcceptsHeaderAndLineEnding) {
  EXPECT_EQ(from_graph6(">>graph6<<A_\n").vertex_count(), 2U);
  EXPECT_EQ(from_graph6("Bw\r\n").edges().size(), 3U);
}

TEST(Graph6, RejectsMalformedInput) {
  EXPECT_THROW(from_graph6(""), FormatError);
  EXPECT_THROW(from_graph6("B"), FormatError);            // truncated adjacency
  EXPECT_THROW(from_graph6("Bww"), FormatError);          // trailing data
  EXPECT_THROW(from_graph6("A "), FormatError);           // byte below 63
  EXPECT_THROW(from_graph6("A\x7f"), FormatError);        // byte above 126
  EXPECT_THROW(from_graph6("~?@E"), FormatError);         // truncated size field
  EXPECT_THROW(to_graph6(SimpleGraph(2, EdgeList{{0, 1}, {0, 1}})), FormatError);
}

TEST(RotationDoc, RoundTripIsByteIdentical) {
  for (int k = 2; k <= 7; ++k) {
    const auto g = build_gk(k);
    const auto text = to_rotation_doc(g);
    const auto doc = from_rotation_doc(text);
    ASSERT_TRUE(doc.labels.has_value());
    EXPECT_EQ(*doc.labels, g.labels);
    EXPECT_EQ(to_rotation_doc(doc.graph, *doc.labels), text);
    EXPECT_EQ(face_census(doc.graph), face_census(g.graph));
    EXPECT_EQ(euler_genus(doc.graph), 0);
  }
}

TEST(RotationDoc, KeyOrderAndLabelsOptional) {
  const auto g = build_gk(2);
  const auto text = to_rotation_doc(g.graph);
  EXPECT_EQ(text.rfind("{\"version\":1,\"n\":14,\"edges\":[[0,1],", 0), 0U);
  EXPECT_EQ(text.find("labels"), std::string::npos);
  EXPECT_EQ(text.back(), '\n');
  const auto doc = from_rotation_doc(text);
  EXPECT_FALSE(doc.labels.has_value());
  EXPECT_EQ(to_rotation_doc(doc.graph), text);
}

TEST(RotationDoc, PreservesNonPlanarRotations) {
  std::mt19937_64 rng(3);
  const auto edges = testing::random_connected_cubic(40, rng);
  const auto g = testing::embed_shuffled(40, edges, rng);
  const auto doc = from_rotation_doc(to_rotation_doc(g));
  EXPECT_EQ(euler_genus(doc.graph), euler_genus(g));
  EXPECT_EQ(face_census(doc.graph), face_census(g));
}

TEST(RotationDoc, RejectsInvalidDocuments) {
  const std::string good = R"({"version":1,"n":2,"edges":[[0,1]],"rotations":[[0],[1]]})";
  EXPECT_NO_THROW(from_rotation_doc(good));
  // missing dart at vertex 1
  EXPECT_THROW(from_rotation_doc(R"({"version":1,"n":2,"edges":[[0,1]],"rotations":[[0],[]]})"), FormatError);
  // dart placed at the wrong vertex
  EXPECT_THROW(from_rotation_doc(R"({"version":1,"n":2,"edges":[[0,1]],"rotations":[[1],[0]]})"), FormatError);
  EXPECT_THROW(from_rotation_doc(R"({"version":2,"n":2,"edges":[[0,1]],"rotations":[[0],[1]]})"), FormatError);
  EXPECT_THROW(from_rotation_doc(R"({"version":1,"n":2,"edges":[[0,1]],"rotations":[[0],[1]],"x":0})"),
               FormatError);
  EXPECT_THROW(from_rotation_doc(R"({"version":1,"n":2,"edges":[[0,5]],"rotations":[[0],[1]]})"), FormatError);
  EXPECT_THROW(from_rotation_doc(R"({"version":1,"n":2,"edges":[[0,1]],"rotations":[[7],[1]]})"), FormatError);
  EXPECT_THROW(from_rotation_doc(R"({"version":1,"n":2,"edges":[[0,1]]})"), FormatError);
  EXPECT_THROW(from_rotation_doc("{not json"), FormatError);
  EXPECT_THROW(from_rotation_doc("[]"), FormatError);
}

TEST(EdgeList, Format) {
  EXPECT_EQ(to_edge_list(SimpleGraph(2, EdgeList{{0, 1}})), "0 1\n");
  const auto text = to_edge_list(build_gk(2).graph);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 21);
  EXPECT_EQ(text.substr(0, 4), "0 1\n");
}

TEST(Dot, MarksSubdivisionVertices) {
  const auto count = [](const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto at = text.find(needle); at != std::string::npos; at = text.find(needle, at + 1)) ++n;
    return n;
  };
  const auto g2 = to_dot(build_gk(2));
  EXPECT_EQ(count(g2, "fillcolor=black"), 0U);
  EXPECT_EQ(count(g2, " -- "), 21U);
  EXPECT_EQ(g2.rfind("graph G {", 0), 0U);
  const auto g3 = to_dot(build_gk(3));
  EXPECT_EQ(count(g3, "fillcolor=black"), 12U);
  EXPECT_EQ(count(g3, "penwidth=2.5"), 2U * 21 + 12);
}

}  // namespace
}  // namespace gk
