#include <gtest/gtest.h>

#include "toric/graph.hpp"

using namespace toric;

TEST(VertexSet, Basics) {
  auto s = VertexSet::full(5);
  EXPECT_EQ(s.size(), 5);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(5));
  EXPECT_EQ(s.without(0).front(), 1);
  EXPECT_EQ((s - VertexSet::singleton(2)).to_vector(), (std::vector<int>{0, 1, 3, 4}));
  EXPECT_TRUE(VertexSet::singleton(3).is_subset_of(s));
  EXPECT_EQ(VertexSet::full(32).size(), 32);
}

TEST(Graph, RejectsSelfLoopsAndBadEndpoints) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
  EXPECT_THROW(Graph(-1, {}), std::invalid_argument);
}

TEST(Graph, DuplicateEdgesCollapse) {
  Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, NullGraph) {
  const Graph g = Graph::null();
  EXPECT_EQ(g.vertex_count(), 0);
  EXPECT_TRUE(connected_components(g, g.vertices()).empty());
  EXPECT_TRUE(is_connected(g));
}

TEST(Graph, ComponentsOrderedByLeastVertex) {
  Graph g(6, {{0, 3}, {1, 2}, {4, 5}});
  auto comps = connected_components(g, g.vertices());
  ASSERT_EQ(comps.size(), 3u);
  EXPECT_EQ(comps[0].to_vector(), (std::vector<int>{0, 3}));
  EXPECT_EQ(comps[1].to_vector(), (std::vector<int>{1, 2}));
  EXPECT_EQ(comps[2].to_vector(), (std::vector<int>{4, 5}));
  EXPECT_FALSE(is_connected(g));
}

TEST(Graph, InducedRenumbers) {
  const Graph c5 = build_family(Cycle{5});
  const Graph h = c5.induced(VertexSet(0b10111u));
  EXPECT_EQ(h.vertex_count(), 4);
  EXPECT_EQ(h.edge_count(), 3u);
  EXPECT_TRUE(is_connected(h));
}

TEST(Graph, PermutedPreservesEdgeCount) {
  const Graph p = build_family(Path{4});
  const std::vector<int> perm{2, 0, 3, 1};
  const Graph q = p.permuted(perm);
  EXPECT_EQ(q.edge_count(), 3u);
  EXPECT_TRUE(q.adjacent(2, 0));
  EXPECT_TRUE(q.adjacent(0, 3));
  EXPECT_TRUE(q.adjacent(3, 1));
}

TEST(Graph, DisjointUnion) {
  const Graph u = disjoint_union(build_family(Complete{3}), build_family(Path{2}));
  EXPECT_EQ(u.vertex_count(), 5);
  EXPECT_EQ(u.edge_count(), 4u);
  EXPECT_EQ(connected_components(u, u.vertices()).size(), 2u);
  EXPECT_THROW(disjoint_union(build_family(Path{15}), build_family(Path{10})), cap_exceeded);
}

TEST(Families, Shapes) {
  EXPECT_EQ(build_family(Path{5}).edge_count(), 4u);
  EXPECT_EQ(build_family(Cycle{6}).edge_count(), 6u);
  EXPECT_EQ(build_family(Complete{6}).edge_count(), 15u);
  EXPECT_EQ(build_family(Star{4}).vertex_count(), 5);
  EXPECT_EQ(build_family(Star{4}).edge_count(), 4u);
  EXPECT_EQ(build_family(CompleteMultipartite{{2, 3}}).edge_count(), 6u);
  EXPECT_EQ(build_family(CompleteMultipartite{{1, 1, 1, 1}}), build_family(Complete{4}));
  EXPECT_EQ(build_family(Path{0}).vertex_count(), 0);
}

TEST(Families, Validation) {
  EXPECT_THROW(build_family(Cycle{2}), std::invalid_argument);
  EXPECT_THROW(build_family(Cycle{1}), std::invalid_argument);
  EXPECT_THROW(build_family(Path{-1}), std::invalid_argument);
  EXPECT_THROW(build_family(Complete{21}), cap_exceeded);
  EXPECT_NO_THROW(build_family(Complete{21}, 21));
  EXPECT_THROW(build_family(Path{5}, 40), std::invalid_argument);
}

TEST(Cap, MessageNamesOverride) {
  try {
    check_cap(25, 20);
    FAIL();
  } catch (const cap_exceeded& e) {
    EXPECT_EQ(e.cap(), 20);
    EXPECT_NE(std::string(e.what()).find("--cap"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("TORIC_BETTI_CAP"), std::string::npos);
  }
}
