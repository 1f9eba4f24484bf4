#include <gtest/gtest.h>

#include <set>

#include "localcut/bruteforce.hpp"
#include "localcut/errors.hpp"
#include "localcut/generators.hpp"
#include "localcut/vc_local.hpp"

using namespace localcut;

namespace {

// Separation triple check written out independently of the library.
bool separates(const Graph &g, const SeparationTriple &t) {
  std::set<VertexId> l(t.left.begin(), t.left.end()), r(t.right.begin(), t.right.end());
  if (l.empty() || r.empty() || l.size() + t.separator.size() + r.size() != g.num_vertices())
    return false;
  for (VertexId v : l)
    for (VertexId u : g.out_neighbors(v))
      if (r.count(u))
        return false;
  return true;
}

} // namespace

TEST(SplitGraphView, IdsAndArcs) {
  // Path 0 -> 1 -> 2, split at root 0.
  GraphBuilder b(3);
  b.add_arc(0, 1);
  b.add_arc(1, 2);
  const Graph g = b.build();
  GraphSource src(g);
  QueryOracle o(src);
  SplitGraphView view(o, 0);
  EXPECT_EQ(view.in_copy(1), 2u);
  EXPECT_EQ(view.out_copy(1), 3u);
  EXPECT_EQ(view.out_copy(0), 0u);
  EXPECT_EQ(view.split_vertices(), 5u);
  EXPECT_EQ(view.split_arcs(), 4u);
  // In-copy: single split arc, which costs no base query.
  ASSERT_EQ(view.out_degree(2), 1u);
  EXPECT_EQ(view.arc(2, 0).head, 3u);
  EXPECT_EQ(o.queries(), 0u);
  // Out-copy of 1 reaches the in-copy of 2 with one base query.
  EXPECT_EQ(view.arc(3, 0).head, 4u);
  EXPECT_EQ(o.queries(), 1u);
  EXPECT_FALSE(view.degree_certifies_cut(2));
  EXPECT_TRUE(view.degree_certifies_cut(3));
}

TEST(LiftTriple, CutEqualsSeparatorSize) {
  const Instance inst = gen_glued_cliques(5, 6, 2);
  const SeparationTriple t = *inst.planted_triple;
  const Graph &g = inst.graph;
  const VertexId x = t.left.front();
  const std::vector<VertexId> lifted = lift_triple(g, x, t);
  const Graph split = materialize_split(g, x);
  std::set<VertexId> in(lifted.begin(), lifted.end());
  std::size_t cut = 0, vol = 0, base_vol = 0;
  for (VertexId v : in)
    for (VertexId u : split.out_neighbors(v)) {
      ++vol;
      cut += !in.count(u);
    }
  for (VertexId v : t.left)
    base_vol += g.out_degree(v);
  EXPECT_EQ(cut, t.separator.size());
  EXPECT_GE(vol, base_vol);
  EXPECT_LE(vol, 2 * base_vol);

  const SeparationTriple back = project_cut(g, x, lifted);
  EXPECT_TRUE(separates(g, back));
  EXPECT_LE(back.separator.size(), t.separator.size());
}

TEST(LiftTriple, RejectsBadInput) {
  const Instance inst = gen_glued_cliques(5, 6, 2);
  SeparationTriple t = *inst.planted_triple;
  EXPECT_THROW(lift_triple(inst.graph, t.right.front(), t), ParameterError);
  std::swap(t.left, t.separator);
  EXPECT_THROW(lift_triple(inst.graph, t.left.front(), t), ParameterError);
}

TEST(IsSeparationTriple, ByHand) {
  const Graph g = gen_cycle(6, false).graph;
  EXPECT_TRUE(is_separation_triple(g, {{0}, {1, 5}, {2, 3, 4}}));
  EXPECT_FALSE(is_separation_triple(g, {{0}, {1}, {2, 3, 4, 5}}));
  EXPECT_FALSE(is_separation_triple(g, {{}, {1, 5}, {0, 2, 3, 4}}));
  EXPECT_FALSE(is_separation_triple(g, {{0}, {1, 5}, {2, 3}}));
}

TEST(LocalVc, FindsGluedCliqueSeparator) {
  // Small side K_5 shares 2 vertices with a large circulant side.
  const Instance inst = gen_planted_vertex_cut(6, 400, 2, 4);
  const SeparationTriple &planted = *inst.planted_triple;
  const bool small_left = planted.left.size() < planted.right.size();
  const VertexId x = small_left ? planted.left.front() : planted.right.front();
  std::size_t vol = 0;
  for (VertexId v : small_left ? planted.left : planted.right)
    vol += inst.graph.out_degree(v);
  int hits = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    GraphSource src(inst.graph);
    QueryOracle o(src);
    const LocalResult r = local_vc(o, x, vol, 3, 0, derive_seed(3, t));
    if (!r.found())
      continue;
    ++hits;
    ASSERT_TRUE(separates(inst.graph, r.vertex_cut()));
    EXPECT_LT(r.vertex_cut().size(), 3u);
  }
  EXPECT_GE(hits, trials * 7 / 10);
}

TEST(LocalVc, NeverReportsALargeSeparator) {
  for (Rng::Seed s = 1; s <= 100; ++s) {
    const Graph g = gen_gnp(30, 0.15, false, s).graph;
    GraphSource src(g);
    QueryOracle o(src);
    const std::size_t k = 2 + s % 3, gap = s % 2;
    const LocalResult r = local_vc(o, s % 30, 12, k, gap, s);
    if (!r.found())
      continue;
    EXPECT_TRUE(separates(g, r.vertex_cut()));
    EXPECT_LT(r.vertex_cut().size(), k + gap);
  }
}

TEST(LocalVc, PreconditionsWhenAsked) {
  const Graph g = gen_clique(8, false).graph;
  GraphSource src(g);
  QueryOracle o(src);
  LocalVcOptions opts;
  opts.check_preconditions = true;
  EXPECT_THROW(local_vc(o, 0, 10, 3, 0, 1, opts), ParameterError);
  EXPECT_THROW(local_vc(o, 8, 10, 3, 0, 1), RangeError);
}
