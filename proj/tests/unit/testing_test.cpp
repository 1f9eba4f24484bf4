#include <gtest/gtest.h>

#include "localcut/bruteforce.hpp"
#include "localcut/errors.hpp"
#include "localcut/generators.hpp"
#include "localcut/testing.hpp"

using namespace localcut;

namespace {

enum class Which { KecUnbounded, KecBounded, KvcUnbounded, KvcBounded };

TestVerdict run(Which w, const Graph &g, TesterConfig cfg) {
  const Graph rev = reverse_graph(g);
  GraphSource fs(g), rs(rev);
  const std::size_t d = std::max(g.max_out_degree(), rev.max_out_degree());
  const bool bounded = w == Which::KecBounded || w == Which::KvcBounded;
  std::optional<QueryOracle> fwd, bwd;
  if (bounded) {
    fwd.emplace(fs, BoundedRegular{d});
    bwd.emplace(rs, BoundedRegular{d});
  } else {
    fwd.emplace(fs);
    bwd.emplace(rs);
  }
  TestOracles o{*fwd, g.directed() ? &*bwd : nullptr};
  switch (w) {
  case Which::KecUnbounded: return test_kec_unbounded(o, cfg);
  case Which::KecBounded: return test_kec_bounded(o, cfg);
  case Which::KvcUnbounded: return test_kvc_unbounded(o, cfg);
  default: return test_kvc_bounded(o, cfg);
  }
}

const Which kAll[] = {Which::KecUnbounded, Which::KecBounded, Which::KvcUnbounded,
                      Which::KvcBounded};

} // namespace

TEST(Testers, AcceptConnectedInputs) {
  const Graph g = gen_circulant(40, {1, 2, 3}, false).graph; // 6-regular, kappa 6
  for (Which w : kAll)
    for (Rng::Seed s = 1; s <= 5; ++s) {
      TesterConfig cfg;
      cfg.k = 4;
      cfg.eps = 0.5;
      cfg.seed = s;
      const TestVerdict v = run(w, g, cfg);
      EXPECT_EQ(v.outcome, Outcome::Accept) << int(w) << " seed " << s;
      EXPECT_LE(v.queries, v.cap);
    }
}

TEST(Testers, RejectFarInputsWithValidWitness) {
  // 100 disjoint triangles: every triangle has edge cut 0 and splits off
  // with a 0-vertex separator.
  const Graph g = gen_union_of_cycles(100, 3, false).graph;
  for (Which w : kAll) {
    int rejects = 0;
    for (Rng::Seed s = 1; s <= 10; ++s) {
      TesterConfig cfg;
      cfg.k = 2;
      cfg.eps = 0.1;
      cfg.seed = s;
      const TestVerdict v = run(w, g, cfg);
      if (v.outcome != Outcome::Reject)
        continue;
      ++rejects;
      ASSERT_TRUE(v.witness.has_value());
      EXPECT_TRUE(oracle::validate_witness(g, *v.witness));
      EXPECT_LT(witness_size(*v.witness), 2u);
    }
    EXPECT_GE(rejects, 8) << int(w);
  }
}

TEST(Testers, DegreeStageOnLowDegreeVertex) {
  // A directed cycle: every vertex has out-degree 1 < k.
  TesterConfig cfg;
  cfg.k = 2;
  cfg.eps = 0.2;
  const TestVerdict v = run(Which::KecUnbounded, gen_cycle(30).graph, cfg);
  EXPECT_EQ(v.outcome, Outcome::Reject);
  EXPECT_EQ(v.stage, "degree");
}

TEST(Testers, TinyCapEndsInBudgetExhausted) {
  TesterConfig cfg;
  cfg.k = 3;
  cfg.eps = 0.25;
  cfg.cap = 5;
  const TestVerdict v = run(Which::KecUnbounded, gen_hypercube(5).graph, cfg);
  EXPECT_EQ(v.outcome, Outcome::BudgetExhausted);
  EXPECT_LE(v.queries, 5u);
}

TEST(Testers, CapsFollowTheirFormulas) {
  TesterConfig cfg;
  cfg.k = 4;
  cfg.eps = 0.5;
  // L = 2; kec unbounded: (1028 * 13 + 1) * 4 * 9 * (ln 4 + 1) / 0.25.
  const double expect = (1028.0 * 13 + 1) * 4 * 9 * (std::log(4.0) + 1) / 0.25;
  EXPECT_NEAR(double(kec_unbounded_cap(cfg)), expect, expect * 1e-6 + 1);
  EXPECT_GT(kvc_unbounded_cap(cfg), kec_unbounded_cap(cfg));
  TesterConfig half = cfg;
  half.eps = 0.25;
  EXPECT_GT(kec_bounded_cap(half), kec_bounded_cap(cfg));
  EXPECT_GT(kvc_bounded_cap(cfg), kec_bounded_cap(cfg));
}

TEST(Testers, SimpleFastPathOnlyForLargeEps) {
  TesterConfig cfg;
  cfg.k = 10;
  cfg.eps = 0.5;
  cfg.simple_graph = true;
  EXPECT_TRUE(simple_fast_path(cfg));
  cfg.eps = 0.3;
  EXPECT_FALSE(simple_fast_path(cfg));
  cfg.eps = 0.5;
  cfg.simple_graph = false;
  EXPECT_FALSE(simple_fast_path(cfg));
}

TEST(Testers, ParameterErrors) {
  const Graph g = gen_clique(10).graph;
  TesterConfig cfg;
  cfg.k = 0;
  EXPECT_THROW(run(Which::KecUnbounded, g, cfg), ParameterError);
  cfg.k = 3;
  cfg.eps = 1.5;
  EXPECT_THROW(run(Which::KecUnbounded, g, cfg), ParameterError);
  cfg.eps = 0.5;
  // Vertex testers need 4k < n.
  EXPECT_THROW(run(Which::KvcUnbounded, g, cfg), ParameterError);
  GraphSource src(g);
  QueryOracle plain(src);
  EXPECT_THROW(test_kec_bounded(TestOracles{plain, nullptr}, cfg), ParameterError);
}
