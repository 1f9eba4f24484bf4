#include <gtest/gtest.h>

#include "localcut/errors.hpp"
#include "localcut/graph.hpp"
#include "localcut/oracle.hpp"

using namespace localcut;

TEST(Graph, BuilderKeepsInsertionOrder) {
  GraphBuilder b(3);
  b.add_arc(0, 2);
  b.add_arc(0, 1);
  b.add_arc(2, 0);
  const Graph g = b.build();
  ASSERT_EQ(g.num_vertices(), 3u);
  ASSERT_EQ(g.num_arcs(), 3u);
  EXPECT_EQ(g.out_neighbors(0)[0], 2u);
  EXPECT_EQ(g.out_neighbors(0)[1], 1u);
  EXPECT_EQ(g.out_degree(1), 0u);
  EXPECT_EQ(g.tail(g.first_arc(2)), 2u);
}

TEST(Graph, UndirectedEdgesAreArcPairs) {
  GraphBuilder b(2, false);
  b.add_edge(0, 1);
  const Graph g = b.build();
  EXPECT_FALSE(g.directed());
  EXPECT_EQ(g.num_arcs(), 2u);
  EXPECT_EQ(g.out_neighbors(1)[0], 0u);
}

TEST(Graph, ArcOutsideRangeThrows) {
  GraphBuilder b(2);
  EXPECT_THROW(b.add_arc(0, 2), RangeError);
}

TEST(Graph, FromCsrFillsTails) {
  const Graph g = GraphBuilder::from_csr({0, 2, 2, 3}, {1, 2, 0}, true);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.tail(1), 0u);
  EXPECT_EQ(g.tail(2), 2u);
  EXPECT_EQ(g.head(2), 0u);
}

TEST(LoadGraph, HeaderAndComments) {
  const Graph g = load_graph("# comment\n3 2\n0 1\n\n% other\n1 2\n", true);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_arcs(), 2u);
}

TEST(LoadGraph, WithoutHeaderNIsLargestIdPlusOne) {
  // Three data lines: "4 5" is not a header since 5 lines do not follow.
  const Graph g = load_graph("4 5\n0 1\n1 2\n", true);
  EXPECT_EQ(g.num_vertices(), 6u);
  EXPECT_EQ(g.num_arcs(), 3u);
}

TEST(LoadGraph, UndirectedDoublesLines) {
  const Graph g = load_graph("0 1\n1 2\n2 0\n", false);
  EXPECT_EQ(g.num_arcs(), 6u);
}

TEST(LoadGraph, ErrorsCarryLineNumbers) {
  try {
    load_graph("0 1\n1 x\n", true);
    FAIL() << "no ParseError";
  } catch (const ParseError &e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(load_graph("0 1 2\n", true), ParseError);
  EXPECT_THROW(load_graph("2 1\n0 5\n", true), RangeError);
  EXPECT_THROW(load_graph_file("/nonexistent/graph.txt", true), Error);
}

TEST(LoadGraph, EdgeListRoundTrip) {
  GraphBuilder b(4, false);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  b.add_edge(2, 2);
  b.add_edge(3, 0);
  b.add_edge(3, 0);
  const Graph g = b.build();
  const Graph back = load_graph(to_edge_list(g), false);
  EXPECT_EQ(back.num_vertices(), g.num_vertices());
  EXPECT_EQ(back.num_arcs(), g.num_arcs());
  for (VertexId v = 0; v < 4; ++v) {
    std::vector<VertexId> a(g.out_neighbors(v).begin(), g.out_neighbors(v).end());
    std::vector<VertexId> c(back.out_neighbors(v).begin(), back.out_neighbors(v).end());
    std::sort(a.begin(), a.end());
    std::sort(c.begin(), c.end());
    EXPECT_EQ(a, c) << "vertex " << v;
  }
}

TEST(Graph, ReverseCountsMultiplicities) {
  GraphBuilder b(3);
  b.add_arc(0, 1);
  b.add_arc(0, 1);
  b.add_arc(1, 2);
  const Graph r = reverse_graph(b.build());
  EXPECT_EQ(r.out_degree(1), 2u);
  EXPECT_EQ(r.out_degree(2), 1u);
  EXPECT_EQ(r.out_degree(0), 0u);
}

TEST(Graph, CutStatsByHand) {
  // 0 -> 1 -> 2 -> 0 plus 0 -> 3.
  GraphBuilder b(4);
  b.add_arc(0, 1);
  b.add_arc(1, 2);
  b.add_arc(2, 0);
  b.add_arc(0, 3);
  const Graph g = b.build();
  const std::vector<VertexId> s{0, 1};
  const CutStats c = cut_stats(g, s);
  EXPECT_EQ(c.cut_size, 2u);
  EXPECT_EQ(c.vol_out, 3u);
  EXPECT_EQ(c.n_out, (std::vector<VertexId>{2, 3}));
}

TEST(QueryOracle, CountsOnlyEdgeQueries) {
  GraphBuilder b(3);
  b.add_arc(0, 1);
  b.add_arc(0, 2);
  const Graph g = b.build();
  GraphSource src(g);
  QueryOracle o(src);
  EXPECT_EQ(o.out_degree(0), 2u);
  EXPECT_EQ(o.queries(), 0u);
  EXPECT_EQ(o.query_edge(0, 2)->head, 2u);
  EXPECT_FALSE(o.query_edge(0, 3).has_value());
  EXPECT_EQ(o.queries(), 2u);
  EXPECT_THROW(o.query_edge(0, 0), RangeError);
  EXPECT_THROW(o.query_edge(7, 1), RangeError);
}

TEST(QueryOracle, BoundedModelPadsWithLoops) {
  GraphBuilder b(2);
  b.add_arc(0, 1);
  const Graph g = b.build();
  GraphSource src(g);
  QueryOracle o(src, BoundedRegular{3});
  EXPECT_EQ(o.out_degree(0), 3u);
  EXPECT_EQ(o.num_arcs(), 6u);
  const auto pad = o.query_edge(0, 3);
  ASSERT_TRUE(pad.has_value());
  EXPECT_TRUE(pad->is_loop());
  EXPECT_THROW(o.query_edge(0, 4), RangeError);
}

TEST(QueryOracle, CapThrowsBudgetExhausted) {
  GraphBuilder b(2);
  b.add_arc(0, 1);
  b.add_arc(1, 0);
  const Graph g = b.build();
  GraphSource src(g);
  QueryOracle o(src, 1);
  o.query_edge(0, 1);
  EXPECT_THROW(o.query_edge(1, 1), BudgetExhausted);
  EXPECT_EQ(o.queries(), 1u);
}

TEST(QueryOracle, RegularSamplingIsUniformOverSlots) {
  GraphBuilder b(2);
  b.add_arc(0, 1);
  const Graph g = b.build();
  GraphSource src(g);
  QueryOracle o(src, BoundedRegular{2});
  Rng rng(9);
  int real = 0;
  const int draws = 4000;
  for (int i = 0; i < draws; ++i)
    real += !sample_edge_regular(o, rng).is_loop();
  // One real arc out of four slots.
  EXPECT_NEAR(real / double(draws), 0.25, 0.03);
  QueryOracle unbounded(src);
  EXPECT_THROW(sample_edge_regular(unbounded, rng), ParameterError);
}

TEST(Rng, DerivedDrawsAreReproducible) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i)
    EXPECT_EQ(a.below(1000), b.below(1000));
  EXPECT_NE(derive_seed(1, 2), derive_seed(1, 3));
  Rng c(1);
  EXPECT_TRUE(c.bernoulli(5, 5));
  EXPECT_FALSE(c.bernoulli(0, 5));
}
