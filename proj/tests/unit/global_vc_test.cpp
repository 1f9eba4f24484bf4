#include <gtest/gtest.h>

#include <algorithm>

#include "localcut/bruteforce.hpp"
#include "localcut/errors.hpp"
#include "localcut/generators.hpp"
#include "localcut/global_vc.hpp"

using namespace localcut;

namespace {

std::vector<std::pair<VertexId, VertexId>> edges_of(const Graph &g,
                                                    const std::vector<VertexId> *labels) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    for (VertexId u : g.out_neighbors(v))
      if (u != v)
        out.emplace_back(labels ? (*labels)[v] : v, labels ? (*labels)[u] : u);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

TEST(Sparsify, KeepsSmallCutsExactly) {
  for (Rng::Seed s = 1; s <= 25; ++s) {
    const Graph g = gen_gnp(14, 0.45, false, s).graph;
    const std::size_t kappa = oracle::bf_min_vertex_cut(g).kappa;
    for (std::size_t k : {1u, 2u, 3u, 4u}) {
      const Graph h = sparsify_ni(g, k);
      EXPECT_LE(h.num_arcs(), 2 * k * (g.num_vertices() - 1));
      // Cuts below k survive; none appear below k.
      EXPECT_EQ(std::min(kappa, k), std::min(oracle::bf_min_vertex_cut(h).kappa, k))
          << "seed " << s << " k " << k;
    }
  }
}

TEST(Sparsify, ScanOrderCertificateIsTheSameEdgeSet) {
  for (Rng::Seed s = 1; s <= 200; ++s) {
    Rng rng(s);
    const std::size_t n = 2 + rng.below(14);
    GraphBuilder b(n, false);
    for (std::size_t i = rng.below(45); i > 0; --i)
      b.add_edge(VertexId(rng.below(n)), VertexId(rng.below(n)));
    const Graph g = b.build();
    const std::size_t k = 1 + rng.below(5);
    std::vector<VertexId> to_input;
    const Graph h = sparsify_ni_scan_order(g, k, to_input);
    EXPECT_EQ(edges_of(sparsify_ni(g, k), nullptr), edges_of(h, &to_input)) << "seed " << s;
  }
}

TEST(Sparsify, ForestIndicesAreScanFirst) {
  const Graph g = gen_clique(5, false).graph;
  const auto forests = ni_forests(g);
  EXPECT_EQ(forests.size(), 10u);
  std::vector<std::size_t> per(5, 0);
  for (const auto &e : forests)
    ++per[e.forest];
  // K_5 decomposes into forests of sizes 4, 3, 2, 1.
  EXPECT_EQ(per, (std::vector<std::size_t>{0, 4, 3, 2, 1}));
  EXPECT_THROW(sparsify_ni(gen_cycle(4).graph, 2), ParameterError);
}

TEST(StVertexFlow, MatchesReferencePathCounts) {
  for (Rng::Seed s = 1; s <= 40; ++s) {
    const bool directed = s % 2;
    const Graph g = gen_gnp(16, 0.3, directed, s).graph;
    StVertexFlow flow(g);
    for (VertexId t = 1; t < 16; t += 3) {
      if (flow.adjacent(0, t))
        continue;
      const StResult r = flow.run(0, t, 6);
      EXPECT_EQ(r.flow, oracle::bf_st_vertex_paths(g, 0, t, 6)) << "seed " << s << " t " << t;
      if (r.kind == StResult::Kind::Cut) {
        EXPECT_TRUE(oracle::validate_witness(g, CutWitness{*r.triple}));
        EXPECT_EQ(r.triple->size(), r.flow);
      }
    }
  }
}

TEST(StVertexFlow, MultigraphsWithLoops) {
  for (Rng::Seed s = 1; s <= 300; ++s) {
    Rng rng(s);
    const std::size_t n = 3 + rng.below(10);
    GraphBuilder b(n, s % 2 == 0);
    for (std::size_t i = rng.below(5 * n); i > 0; --i)
      b.add_edge(VertexId(rng.below(n)), VertexId(rng.below(n)));
    const Graph g = b.build();
    StVertexFlow flow(g);
    const auto x = VertexId(rng.below(n)), y = VertexId(rng.below(n));
    if (x == y || flow.adjacent(x, y))
      continue;
    const StResult r = flow.run(x, y, n);
    EXPECT_EQ(r.flow, oracle::bf_st_vertex_paths(g, x, y, n)) << "seed " << s;
    ASSERT_EQ(r.kind, StResult::Kind::Cut);
    EXPECT_TRUE(oracle::validate_witness(g, CutWitness{*r.triple})) << "seed " << s;
  }
}

TEST(VcCheck, CompleteGraphIsConnected) {
  FrameworkConfig cfg;
  cfg.seed = 4;
  const VcVerdict v = vc_check(gen_clique(50, false).graph, 10, 0.05, cfg);
  EXPECT_TRUE(v.connected);
}

TEST(VcCheck, HypercubeSeven) {
  const Graph g = gen_hypercube(7).graph;
  FrameworkConfig cfg;
  cfg.seed = 8;
  EXPECT_TRUE(vc_check(g, 7, 1.0 / 14, cfg).connected);
  const VcVerdict v = vc_check(g, 8, 1.0 / 16, cfg);
  ASSERT_FALSE(v.connected);
  EXPECT_EQ(v.cut->size(), 7u);
  EXPECT_TRUE(oracle::validate_witness(g, CutWitness{*v.cut}));
}

TEST(VcCheck, PlantedCutIsFound) {
  int found = 0;
  for (Rng::Seed s = 1; s <= 20; ++s) {
    const Instance inst = permute_labels(gen_planted_vertex_cut(200, 200, 3, s), s + 100);
    FrameworkConfig cfg;
    cfg.seed = s;
    const VcVerdict v = vc_check(inst.graph, 4, 0.2, cfg);
    if (!v.connected) {
      ++found;
      EXPECT_LT(v.cut->size(), 4u);
      EXPECT_TRUE(oracle::validate_witness(inst.graph, CutWitness{*v.cut}));
    }
  }
  EXPECT_GE(found, 19);
}

TEST(VcCheck, DirectedInputNeedsDirectedEntryPoint) {
  FrameworkConfig cfg;
  const Graph g = gen_cycle(8).graph;
  EXPECT_THROW(vc_check(g, 2, 0.5, cfg), ParameterError);
  const VcVerdict v = vc_check_directed(g, 2, 0.5, cfg);
  ASSERT_FALSE(v.connected);
  EXPECT_EQ(v.cut->size(), 1u);
}

TEST(MinVertexCut, MatchesReference) {
  int matches = 0, total = 0;
  for (Rng::Seed s = 1; s <= 20; ++s) {
    const Graph g = gen_gnp(18, 0.35, s % 3 == 0, s).graph;
    FrameworkConfig cfg;
    cfg.seed = s;
    cfg.boost = 3;
    const MinVertexCutResult r = min_vertex_cut(g, 0.5, cfg);
    const oracle::MinVertexCut ref = oracle::bf_min_vertex_cut(g);
    ++total;
    matches += r.kappa == ref.kappa;
    if (r.witness)
      EXPECT_TRUE(oracle::validate_witness(g, CutWitness{*r.witness}));
  }
  EXPECT_GE(matches, total - 1);
}

TEST(MinVertexCut, CompleteAndCycle) {
  FrameworkConfig cfg;
  const MinVertexCutResult k = min_vertex_cut(gen_clique(7, false).graph, 0.5, cfg);
  EXPECT_TRUE(k.complete);
  EXPECT_EQ(k.kappa, 6u);
  const MinVertexCutResult c = min_vertex_cut(gen_cycle(9).graph, 0.5, cfg);
  EXPECT_EQ(c.kappa, 1u);
  ASSERT_TRUE(c.witness.has_value());
  EXPECT_EQ(c.witness->size(), 1u);
}

TEST(FrameworkNuBar, StrictlyBelowBound) {
  // m (gap+1) / (8320 k) = 83200 / 8320 = 10 exactly, so 9.
  EXPECT_EQ(framework_nu_bar(83200, 1, 0), 9u);
  EXPECT_EQ(framework_nu_bar(83201, 1, 0), 10u);
  EXPECT_EQ(framework_nu_bar(100, 1, 0), 0u);
}
