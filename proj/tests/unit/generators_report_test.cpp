#include <gtest/gtest.h>

#include <set>

#include "localcut/bruteforce.hpp"
#include "localcut/errors.hpp"
#include "localcut/generators.hpp"
#include "localcut/report.hpp"

using namespace localcut;

TEST(Generators, Shapes) {
  EXPECT_EQ(gen_cycle(10).graph.num_arcs(), 10u);
  EXPECT_EQ(gen_cycle(10, false).graph.num_arcs(), 20u);
  EXPECT_EQ(gen_clique(6).graph.num_arcs(), 30u);
  EXPECT_EQ(gen_hypercube(5).graph.num_arcs(), 5u * 32);
  EXPECT_EQ(gen_union_of_cliques(3, 4).graph.num_arcs(), 3u * 12);
  EXPECT_EQ(gen_circulant(20, {1, 3}, true).graph.num_arcs(), 40u);
  // t cliques plus one joining arc per clique.
  EXPECT_EQ(gen_ring_of_cliques(5, 4, true).graph.num_arcs(), 5u * 12 + 5);
}

TEST(Generators, RandomRegularIsSimpleAndRegular) {
  const Graph g = gen_random_regular(50, 5, 3).graph;
  for (VertexId v = 0; v < 50; ++v) {
    EXPECT_EQ(g.out_degree(v), 5u);
    std::set<VertexId> seen(g.out_neighbors(v).begin(), g.out_neighbors(v).end());
    EXPECT_EQ(seen.size(), 5u);
    EXPECT_FALSE(seen.count(v));
  }
  EXPECT_THROW(gen_random_regular(5, 3, 1), ConstructionError);
}

TEST(Generators, PlantedWitnessesAreReal) {
  for (Rng::Seed s = 1; s <= 5; ++s) {
    const Instance vc = gen_planted_vertex_cut(9, 11, 2, s);
    ASSERT_TRUE(vc.planted_triple.has_value());
    EXPECT_TRUE(oracle::validate_witness(vc.graph, CutWitness{*vc.planted_triple}));
    EXPECT_EQ(oracle::bf_min_vertex_cut(vc.graph).kappa, 2u);

    const Instance ec = gen_planted_edge_cut(5, 14, 2, s % 2 == 0, s);
    EXPECT_EQ(cut_stats(ec.graph, ec.planted_side).cut_size, 2u);
    EXPECT_EQ(oracle::bf_min_edge_cut(ec.graph).value, 2u);
  }
  EXPECT_THROW(gen_planted_vertex_cut(3, 10, 3, 1), ConstructionError);
}

TEST(Generators, PermutationKeepsStructure) {
  const Instance base = gen_glued_cliques(6, 7, 3);
  const Instance p = permute_labels(base, 12);
  EXPECT_EQ(p.graph.num_arcs(), base.graph.num_arcs());
  EXPECT_EQ(oracle::bf_min_vertex_cut(p.graph).kappa, 3u);
  ASSERT_TRUE(p.planted_triple.has_value());
  EXPECT_TRUE(oracle::validate_witness(p.graph, CutWitness{*p.planted_triple}));
}

TEST(Generators, SeedDeterminism) {
  EXPECT_EQ(gen_gnp(30, 0.2, true, 5).graph, gen_gnp(30, 0.2, true, 5).graph);
  EXPECT_NE(gen_gnp(30, 0.2, true, 5).graph, gen_gnp(30, 0.2, true, 6).graph);
  const Instance a = gen_planted_vertex_cut(20, 20, 2, 3);
  EXPECT_EQ(a.meta["kappa"], 2);
}

TEST(Report, PlotDataHeaderOnlyWhenEmpty) {
  EXPECT_EQ(emit_plot_data({}), "suite,n,k,eps,queries_p50,queries_p95,wall_ms_p50\n");
}

TEST(Report, PlotDataConcatenatesSuites) {
  RunReport a, b;
  a.suite = "one";
  a.curve.push_back({100, 2, 0.5, 10, 20, 1.5});
  b.suite = "two";
  b.curve.push_back({200, 3, 0.25, 11, 21, 2.5});
  b.curve.push_back({400, 3, 0.25, 12, 22, 3.5});
  const std::string csv = emit_plot_data({a, b});
  EXPECT_NE(csv.find("\none,100,2,0.5,10,20,1.5\n"), std::string::npos);
  EXPECT_NE(csv.find("\ntwo,400,3,0.25,12,22,3.5\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(Report, Quantile) {
  EXPECT_EQ(quantile({}, 0.5), 0.0);
  EXPECT_EQ(quantile({3, 1, 2}, 0.5), 2.0);
  EXPECT_DOUBLE_EQ(quantile({1, 2, 3, 4}, 0.5), 2.5);
  EXPECT_EQ(quantile({1, 9}, 1.0), 9.0);
}

TEST(Report, UnknownSuiteThrows) {
  EXPECT_THROW(run_suite("no-such-suite"), std::invalid_argument);
  EXPECT_EQ(suite_list().size(), 11u);
}

TEST(Report, TrialRecordsDependOnlyOnSeed) {
  SuiteOptions o;
  o.scale = 0.05;
  o.seed = 77;
  const RunReport a = run_suite("reversal-lemma", o);
  o.threads = 3;
  const RunReport b = run_suite("reversal-lemma", o);
  ASSERT_FALSE(a.trials.empty());
  EXPECT_EQ(a.trials, b.trials);
  EXPECT_TRUE(a.pass);
  const nlohmann::json j = to_json(a);
  EXPECT_EQ(j["rng_seed"], 77);
  EXPECT_EQ(j["suite"], "reversal-lemma");
}

TEST(Report, ParallelForCoversEveryIndexOnce) {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  EXPECT_EQ(std::count(hits.begin(), hits.end(), 1), 1000);
  EXPECT_THROW(parallel_for(10, 2, [](std::size_t i) {
                 if (i == 7)
                   throw std::runtime_error("boom");
               }),
               std::runtime_error);
}
