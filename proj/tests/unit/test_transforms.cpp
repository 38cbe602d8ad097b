#include <gtest/gtest.h>

#include <variant>

#include "itg/corpus.hpp"
#include "itg/error.hpp"
#include "itg/families.hpp"
#include "itg/isomorphism.hpp"
#include "itg/pattern_search.hpp"
#include "itg/transforms.hpp"
#include "oracles.hpp"

using namespace itg;

namespace {

// Total graph straight from the definition: elements of V and E, adjacent
// when adjacent or incident.
Graph total_by_definition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  const auto& edges = g.edges();
  for (const auto& e : edges) pairs.emplace_back(e.u, e.v);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto ei = static_cast<Vertex>(n + i);
    pairs.emplace_back(edges[i].u, ei);
    pairs.emplace_back(edges[i].v, ei);
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const auto& a = edges[i];
      const auto& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) pairs.emplace_back(ei, static_cast<Vertex>(n + j));
    }
  }
  return Graph::from_edges(n + edges.size(), pairs);
}

}  // namespace

TEST(LineGraph, Examples) {
  EXPECT_TRUE(isomorphic(line_graph(build_complete(3)).graph, build_complete(3)));
  EXPECT_TRUE(isomorphic(line_graph(build_star(4)).graph, build_complete(3)));
  EXPECT_TRUE(isomorphic(line_graph(build_f1(3)).graph, build_f1(2)));
  EXPECT_EQ(line_graph(build_complete(1)).graph.order(), 0u);
}

TEST(LineGraph, EdgeCountAndProvenance) {
  for (const Graph& g : gen_connected_graphs(6)) {
    const auto l = line_graph(g);
    std::size_t expected = 0;
    for (Vertex v = 0; v < g.order(); ++v) expected += g.degree(v) * (g.degree(v) - 1) / 2;
    EXPECT_EQ(l.graph.size(), expected);
    ASSERT_EQ(l.provenance.size(), g.size());
    for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(std::get<EdgeOf>(l.provenance[i]).edge, g.edges()[i]);
  }
}

TEST(TotalGraph, Examples) {
  EXPECT_TRUE(isomorphic(total_graph(build_complete(2)).graph, build_complete(3)));
  const Graph oct = total_graph(build_complete(3)).graph;
  EXPECT_EQ(oct.order(), 6u);
  EXPECT_EQ(is_regular(oct), 4u);
  const Graph tp3 = total_graph(build_path(3)).graph;
  EXPECT_EQ(tp3.order(), 5u);
  EXPECT_EQ(tp3.size(), 7u);
  EXPECT_EQ(diameter(tp3), 2u);
}

TEST(TotalGraph, MatchesDefinitionExactly) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : gen_all_graphs(n)) EXPECT_EQ(total_graph(g).graph, total_by_definition(g));
  }
}

TEST(TotalGraph, InducedPiecesAndEdgeCount) {
  for (const Graph& g : gen_connected_graphs(6)) {
    const auto t = total_graph(g);
    std::vector<Vertex> vertex_part, edge_part;
    for (Vertex v = 0; v < t.graph.order(); ++v) {
      (std::holds_alternative<VertexOf>(t.provenance[v]) ? vertex_part : edge_part).push_back(v);
    }
    EXPECT_EQ(induced_subgraph(t.graph, vertex_part), g);
    EXPECT_EQ(induced_subgraph(t.graph, edge_part), line_graph(g).graph);
    const std::size_t line_edges = line_graph(g).graph.size();
    EXPECT_EQ(t.graph.size(), line_edges + 3 * g.size());
  }
}

TEST(TotalGraph, RegularDegreesDouble) {
  for (const Graph& g : gen_regular_corpus(3, 8)) {
    const auto r = is_regular(g);
    EXPECT_EQ(is_regular(total_graph(g).graph), 2 * *r);
  }
}

TEST(TotalGraph, DiameterValueSet) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : gen_connected_graphs(n)) {
      const Distance d = diameter(g);
      const Distance dt = diameter(total_graph(g).graph);
      const Distance dl = diameter(line_graph(g).graph);
      EXPECT_TRUE(dt == d || dt == dl || dt == d + 1);
    }
  }
}

TEST(Iterate, Examples) {
  const Graph t1 = iterate(build_complete(4), Operator::kTotal, 1);
  EXPECT_EQ(t1.order(), 10u);
  EXPECT_EQ(is_regular(t1), 6u);
  const Graph l2 = iterate(build_petersen(), Operator::kLine, 2);
  EXPECT_EQ(l2.order(), 30u);
  EXPECT_EQ(is_regular(l2), 6u);
  const Graph g = build_cycle(5);
  EXPECT_EQ(iterate(g, Operator::kTotal, 0), g);
}

TEST(Iterate, ResourceGuardReportsProjectedOrder) {
  try {
    iterate(build_complete(4), Operator::kTotal, 5);
    FAIL() << "expected a resource error";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.projected(), 91000u);
    EXPECT_EQ(e.cap(), kDefaultMaxVertices);
    EXPECT_NE(std::string(e.what()).find("91000"), std::string::npos);
  }
  EXPECT_EQ(iterate(build_complete(4), Operator::kTotal, 4).order(), 3640u);
  EXPECT_THROW(iterate(build_complete(4), Operator::kTotal, 2, 39), ResourceError);
  EXPECT_EQ(iterate(build_complete(4), Operator::kTotal, 2, 40).order(), 40u);
}

TEST(Iterate, ProvenanceOfLastStep) {
  const auto p = iterate_provenanced(build_complete(3), Operator::kTotal, 2);
  EXPECT_EQ(p.graph.order(), 18u);
  ASSERT_EQ(p.provenance.size(), 18u);
  EXPECT_TRUE(std::holds_alternative<VertexOf>(p.provenance[5]));
  EXPECT_TRUE(std::holds_alternative<EdgeOf>(p.provenance[6]));
  EXPECT_THROW(iterate_provenanced(build_complete(3), Operator::kTotal, 0), PreconditionError);
}
