#include <gtest/gtest.h>

#include "itg/corpus.hpp"
#include "itg/error.hpp"
#include "itg/families.hpp"
#include "itg/graph.hpp"
#include "oracles.hpp"

using namespace itg;

TEST(Graph, FromEdgesBuildsK2AndK3) {
  const Graph k2 = Graph::from_edges(2, {{0, 1}});
  EXPECT_EQ(k2.order(), 2u);
  EXPECT_EQ(k2.size(), 1u);
  const Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(k3.size(), 3u);
  EXPECT_TRUE(k3.has_edge(2, 0));
}

TEST(Graph, DuplicateEdgesCollapse) {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(2), 0u);
}

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph::from_edges(2, {{0, 2}}), GraphError);
  EXPECT_THROW(Graph::from_edges(2, {{1, 1}}), GraphError);
}

TEST(Graph, EdgesAreCanonicallyOrdered) {
  const Graph g = Graph::from_edges(4, {{3, 2}, {1, 0}, {2, 0}});
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{2, 3}));
  EXPECT_EQ(g.edge_index(3, 2), 2u);
  EXPECT_FALSE(g.edge_index(1, 3));
}

TEST(Graph, BfsDistances) {
  const Graph p3 = build_path(3);
  EXPECT_EQ(bfs_distances(p3, 0), (std::vector<Distance>{0, 1, 2}));
  const Graph k3 = build_complete(3);
  EXPECT_EQ(bfs_distances(k3, 1), (std::vector<Distance>{1, 0, 1}));
  EXPECT_THROW(bfs_distances(p3, 3), PreconditionError);

  const Graph two = Graph::from_edges(3, {{0, 1}});
  EXPECT_EQ(bfs_distances(two, 0)[2], kInfinity);
}

TEST(Graph, LollipopFarEndEccentricity) {
  const Graph lol = build_lollipop(8, 4);
  const auto d = bfs_distances(lol, 7);
  EXPECT_EQ(*std::max_element(d.begin(), d.end()), 6u);
  // Same value from an all-pairs shortest path computation.
  EXPECT_EQ(oracle::distances(lol)[7][2], 6);
}

TEST(Graph, Diameter) {
  for (long long n = 2; n <= 8; ++n) EXPECT_EQ(diameter(build_complete(n)), 1u);
  EXPECT_EQ(diameter(build_lollipop(8, 4)), 6u);
  EXPECT_EQ(diameter(build_cycle(5)), 2u);
  EXPECT_EQ(diameter(build_complete(1)), 0u);
  EXPECT_EQ(diameter(Graph::from_edges(4, {{0, 1}, {2, 3}})), kInfinity);
}

TEST(Graph, ConnectivityAndRegularity) {
  const Graph petersen = build_petersen();
  EXPECT_TRUE(is_connected(petersen));
  EXPECT_EQ(is_regular(petersen), 3u);

  const Graph s5 = build_star(5);
  EXPECT_TRUE(is_connected(s5));
  EXPECT_FALSE(is_regular(s5));

  const Graph two_k2 = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(is_connected(two_k2));
  EXPECT_EQ(is_regular(two_k2), 1u);
}

TEST(Graph, DegreeSequenceDescending) {
  EXPECT_EQ(build_star(5).degree_sequence(), (std::vector<std::size_t>{4, 1, 1, 1, 1}));
}

TEST(Graph, DistanceTableMatchesFloydWarshall) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : gen_all_graphs(n)) {
      const DistanceTable d(g);
      const auto ref = oracle::distances(g);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          const long expected = ref[u][v];
          EXPECT_EQ(d(u, v), expected < 0 ? kInfinity : static_cast<Distance>(expected));
        }
      }
    }
  }
}

TEST(Graph, DistanceTableSymmetryAndTriangleInequality) {
  for (const Graph& g : gen_connected_graphs(7)) {
    const DistanceTable d(g);
    const auto n = static_cast<Vertex>(g.order());
    for (Vertex u = 0; u < n; ++u) {
      ASSERT_EQ(d(u, u), 0u);
      for (Vertex v = 0; v < n; ++v) {
        ASSERT_EQ(d(u, v), d(v, u));
        for (Vertex w = 0; w < n; ++w) ASSERT_LE(d(u, w), d(u, v) + d(v, w));
      }
    }
  }
}

TEST(Graph, DiameterOneIffComplete) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : gen_connected_graphs(n)) {
      const bool complete = g.size() == n * (n - 1) / 2;
      EXPECT_EQ(diameter(g) == 1, complete);
    }
  }
}

TEST(Graph, ComplementAndInducedSubgraph) {
  const Graph c5 = build_cycle(5);
  EXPECT_TRUE(oracle::isomorphic(complement(c5), c5));
  const std::vector<Vertex> keep{0, 1, 2, 3};
  EXPECT_TRUE(oracle::isomorphic(induced_subgraph(c5, keep), build_path(4)));
}

TEST(Graph, RelabelPermutesVertices) {
  const Graph p3 = build_path(3);
  const std::vector<Vertex> perm{1, 0, 2};
  const Graph r = relabel(p3, perm);
  EXPECT_TRUE(r.has_edge(1, 0));
  EXPECT_TRUE(r.has_edge(0, 2));
  EXPECT_FALSE(r.has_edge(1, 2));
}
