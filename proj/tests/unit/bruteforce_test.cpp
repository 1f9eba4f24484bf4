#include <gtest/gtest.h>

#include "localcut/bruteforce.hpp"
#include "localcut/errors.hpp"
#include "localcut/generators.hpp"

using namespace localcut;
using namespace localcut::oracle;

TEST(BfMinEdgeCut, KnownValues) {
  EXPECT_EQ(bf_min_edge_cut(gen_cycle(6).graph).value, 1u);
  EXPECT_EQ(bf_min_edge_cut(gen_cycle(6, false).graph).value, 2u);
  EXPECT_EQ(bf_min_edge_cut(gen_clique(6).graph).value, 5u);
  EXPECT_EQ(bf_min_edge_cut(gen_hypercube(4).graph).value, 4u);
  EXPECT_EQ(bf_min_edge_cut(gen_union_of_cycles(2, 4).graph).value, 0u);
}

TEST(BfMinEdgeCut, SideWitnessesTheValue) {
  const Graph g = gen_planted_edge_cut(6, 12, 2, true, 3).graph;
  const MinEdgeCut c = bf_min_edge_cut(g);
  EXPECT_EQ(c.value, 2u);
  EXPECT_EQ(cut_stats(g, c.side).cut_size, 2u);
}

TEST(BfMinEdgeCut, AugmentOrdersAgree) {
  for (Rng::Seed s = 1; s <= 20; ++s) {
    const Graph g = gen_gnp(12, 0.3, true, s).graph;
    EXPECT_EQ(bf_min_edge_cut(g, Augment::Bfs).value, bf_min_edge_cut(g, Augment::Dfs).value);
  }
}

TEST(BfMinVertexCut, KnownValues) {
  EXPECT_EQ(bf_min_vertex_cut(gen_hypercube(3).graph).kappa, 3u);
  EXPECT_EQ(bf_min_vertex_cut(gen_cycle(7, false).graph).kappa, 2u);
  EXPECT_EQ(bf_min_vertex_cut(gen_glued_cliques(5, 6, 2).graph).kappa, 2u);
  const MinVertexCut k = bf_min_vertex_cut(gen_clique(5).graph);
  EXPECT_TRUE(k.complete);
  EXPECT_EQ(k.kappa, 4u);
  EXPECT_FALSE(k.triple.has_value());
}

TEST(BfMinVertexCut, TripleValidates) {
  const Instance inst = gen_planted_vertex_cut(10, 12, 3, 5);
  const MinVertexCut k = bf_min_vertex_cut(inst.graph);
  EXPECT_EQ(k.kappa, 3u);
  ASSERT_TRUE(k.triple.has_value());
  EXPECT_TRUE(validate_witness(inst.graph, CutWitness{*k.triple}));
}

TEST(BfStVertexPaths, HypercubeAntipodes) {
  const Graph g = gen_hypercube(4).graph;
  EXPECT_EQ(bf_st_vertex_paths(g, 0, 15, 10), 4u);
  EXPECT_EQ(bf_st_vertex_paths(g, 0, 15, 2), 2u);
}

TEST(BfLocalWitness, EnumerationAndBranchingAgree) {
  OracleLimits enumerate;
  enumerate.max_n = 18;
  OracleLimits branch;
  branch.max_n = 0;
  for (Rng::Seed s = 1; s <= 30; ++s) {
    const Graph g = gen_gnp(11, 0.25, true, s).graph;
    for (std::size_t nu : {4u, 10u, 25u}) {
      const LocalWitness a = bf_local_witness(g, 0, nu, 2, enumerate);
      const LocalWitness b = bf_local_witness(g, 0, nu, 2, branch);
      ASSERT_EQ(b.status, Search::Exact);
      EXPECT_EQ(a.exists, b.exists) << "seed " << s << " nu " << nu;
      if (a.exists)
        EXPECT_EQ(a.cut, b.cut) << "seed " << s << " nu " << nu;
    }
  }
}

TEST(BfLocalWitness, FirstHitStillCertifiesExistence) {
  const Instance inst = gen_planted_edge_cut(8, 40, 2, false, 3);
  const VertexId x = inst.planted_side.front();
  OracleLimits limits;
  limits.first_hit = true;
  const LocalWitness w = bf_local_witness(inst.graph, x, 80, 2, limits);
  ASSERT_EQ(w.status, Search::Exact);
  ASSERT_TRUE(w.exists);
  EXPECT_LE(w.cut, 2u);
  EXPECT_LE(w.vol, 80u);
  EXPECT_EQ(cut_stats(inst.graph, w.side).cut_size, w.cut);
}

TEST(ValidateWitness, RejectsTamperedWitnesses) {
  const Graph g = gen_cycle(5).graph;
  EdgeCut ok;
  ok.side = {0, 1};
  ok.crossing = {g.out_arc(1, 0)};
  EXPECT_TRUE(validate_witness(g, CutWitness{ok}));
  EdgeCut missing = ok;
  missing.crossing.clear();
  EXPECT_FALSE(validate_witness(g, CutWitness{missing}));
  EdgeCut everything = ok;
  everything.side = {0, 1, 2, 3, 4};
  everything.crossing.clear();
  EXPECT_FALSE(validate_witness(g, CutWitness{everything}));

  const Graph u = gen_cycle(6, false).graph;
  VertexCut t{{0}, {1, 5}, {2, 3, 4}};
  EXPECT_TRUE(validate_witness(u, CutWitness{t}));
  VertexCut leaky{{0}, {1}, {2, 3, 4, 5}};
  EXPECT_FALSE(validate_witness(u, CutWitness{leaky}));
}

TEST(Limits, LargeInputsAreRefused) {
  OracleLimits tight;
  tight.max_nm = 10;
  EXPECT_THROW(bf_min_vertex_cut(gen_clique(8).graph, Augment::Bfs, tight), LimitExceeded);
}
