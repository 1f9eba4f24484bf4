#include <gtest/gtest.h>

#include <set>

#include "localcut/bruteforce.hpp"
#include "localcut/errors.hpp"
#include "localcut/generators.hpp"
#include "localcut/local_ec.hpp"
#include "localcut/testing.hpp"

using namespace localcut;

namespace {

// Cut and volume counted from scratch.
std::pair<std::size_t, std::size_t> recount(const Graph &g, const std::vector<VertexId> &side) {
  std::set<VertexId> in(side.begin(), side.end());
  std::size_t cut = 0, vol = 0;
  for (VertexId v : in)
    for (VertexId u : g.out_neighbors(v)) {
      ++vol;
      cut += !in.count(u);
    }
  return {cut, vol};
}

LocalResult run(const Graph &g, VertexId x, std::size_t nu, std::size_t k, std::size_t gap,
                Rng::Seed seed, std::size_t *queries = nullptr) {
  GraphSource src(g);
  QueryOracle o(src);
  LocalEcParams p;
  p.seed = x;
  p.nu = nu;
  p.k = k;
  p.gap = gap;
  p.rng_seed = seed;
  LocalResult r = local_ec(o, p);
  if (queries)
    *queries = o.queries();
  return r;
}

} // namespace

TEST(MarkLimit, ClosedForm) {
  EXPECT_EQ(mark_limit(10, 2, 0), 2560u);
  EXPECT_EQ(mark_limit(10, 2, 2), 854u);
  EXPECT_EQ(mark_limit(1, 1, 0), 128u);
  EXPECT_EQ(floor_eps_k(0.5, 4), 2u);
  EXPECT_EQ(floor_eps_k(0.3, 10), 3u);
}

TEST(LocalEc, DirectedCycleIsCutAtOnce) {
  // The out-degree 1 < k = 2 shortcut fires on the seed.
  const Graph g = gen_cycle(50).graph;
  const LocalResult r = run(g, 7, 10, 2, 0, 1);
  ASSERT_TRUE(r.found());
  EXPECT_EQ(r.edge_cut().side, std::vector<VertexId>{7});
  EXPECT_EQ(r.edge_cut().size(), 1u);
}

TEST(LocalEc, WholeGraphReturnsBottom) {
  // Strongly connected and tiny: every BFS exhausts V, which is not a cut.
  const Graph g = gen_clique(4).graph;
  for (Rng::Seed s = 1; s <= 20; ++s)
    EXPECT_FALSE(run(g, 0, 5, 2, 0, s).found());
}

TEST(LocalEc, WitnessesHoldTheirGuarantee) {
  std::size_t found = 0;
  for (Rng::Seed s = 1; s <= 200; ++s) {
    const Graph g = gen_gnp(40, 0.08, true, s).graph;
    const std::size_t k = 1 + s % 4, gap = s % 3 == 0 ? 1 : 0, nu = k + 3 + s % 20;
    std::size_t queries = 0;
    const LocalResult r = run(g, s % 40, nu, k, gap, derive_seed(s, 1), &queries);
    EXPECT_EQ(r.stats.queries, queries);
    EXPECT_LE(queries, mark_limit(nu, k, gap) + k + gap);
    if (!r.found())
      continue;
    ++found;
    ASSERT_TRUE(oracle::validate_witness(g, *r.witness));
    const auto [cut, vol] = recount(g, r.edge_cut().side);
    EXPECT_EQ(cut, r.edge_cut().size());
    EXPECT_LT(cut, k + gap);
    EXPECT_LE(vol * (gap + 1), 130 * nu * k);
  }
  EXPECT_GT(found, 0u);
}

TEST(LocalEc, FindsPlantedSideOften) {
  // K_6 joined to a large circulant by one arc each way: the clique has
  // vol 32 and cut 1.
  const Instance inst = gen_planted_edge_cut(6, 600, 1, true, 11);
  const VertexId x = inst.planted_side.front();
  int hits = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t)
    hits += run(inst.graph, x, 40, 2, 0, derive_seed(5, t)).found();
  EXPECT_GE(hits, trials * 7 / 10);
}

TEST(LocalEc, ParameterChecks) {
  const Graph g = gen_clique(6).graph;
  EXPECT_THROW(run(g, 9, 10, 2, 0, 1), RangeError);
  EXPECT_THROW(run(g, 0, 10, 0, 0, 1), ParameterError);
  EXPECT_THROW(run(g, 0, 2, 2, 0, 1), ParameterError);
  EXPECT_THROW(run(g, 0, 10, 2, 3, 1), ParameterError);
  GraphSource src(g);
  QueryOracle o(src);
  LocalEcParams p;
  p.nu = 10;
  p.k = 2;
  p.check_volume_precondition = true;
  EXPECT_THROW(local_ec(o, p), ParameterError);
}

TEST(LocalEc, SameSeedSameRun) {
  const Graph g = gen_gnp(60, 0.05, true, 3).graph;
  const LocalResult a = run(g, 1, 30, 2, 1, 77), b = run(g, 1, 30, 2, 1, 77);
  EXPECT_EQ(a.found(), b.found());
  EXPECT_EQ(a.stats.queries, b.stats.queries);
  if (a.found())
    EXPECT_EQ(a.edge_cut().side, b.edge_cut().side);
}

TEST(LocalEcDfs, SoundWithinItsBounds) {
  for (Rng::Seed s = 1; s <= 100; ++s) {
    const Graph g = gen_gnp(30, 0.1, true, s).graph;
    const double eps = s % 2 ? 0.5 : 1.0;
    const std::size_t k = 2 + s % 3, nu = 8;
    GraphSource src(g);
    QueryOracle o(src);
    const LocalResult r = local_ec_dfs(o, 0, nu, k, eps, s);
    if (!r.found())
      continue;
    const auto [cut, vol] = recount(g, r.edge_cut().side);
    EXPECT_LT(cut, k + floor_eps_k(eps, k));
    EXPECT_LE(double(vol), 10.0 * nu / eps);
  }
}

TEST(ReverseTreePath, FlipsExactlyThePath) {
  const Graph g = gen_cycle(5).graph;
  GraphSource src(g);
  QueryOracle o(src);
  ReversalOverlay overlay(o);
  TreeParents parents;
  for (VertexId v = 1; v < 4; ++v)
    parents[v] = overlay.base_arc(v - 1, 0);
  reverse_tree_path(overlay, parents, 0, 3);
  EXPECT_EQ(overlay.num_reversed(), 3u);
  // 1 now points back at 0; 3 keeps its own arc to 4.
  const auto back = overlay.current_out(1, overlay.scan_length(1) - 1);
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(back->head, 0u);
  EXPECT_FALSE(overlay.is_reversed(overlay.base_arc(3, 0).id));
  EXPECT_THROW(reverse_tree_path(overlay, parents, 0, 4), std::logic_error);
}

TEST(GapLocalEc, CutsStayBelowK) {
  for (Rng::Seed s = 1; s <= 100; ++s) {
    const Graph g = gen_gnp(30, 0.12, true, s).graph;
    GraphSource src(g);
    QueryOracle o(src);
    const std::size_t k = 3;
    const LocalResult r = gap_local_ec(o, s % 30, 20, k, 1 + s % 2, s);
    if (r.found()) {
      EXPECT_LT(recount(g, r.edge_cut().side).first, k);
    }
  }
  const Graph g = gen_clique(5).graph;
  GraphSource src(g);
  QueryOracle o(src);
  EXPECT_THROW(gap_local_ec(o, 0, 10, 2, 2, 1), ParameterError);
}
