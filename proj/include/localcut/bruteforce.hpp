#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "localcut/graph.hpp"
#include "localcut/witness.hpp"

// Reference implementations. Deliberately independent of the local and
// global algorithms: own flow network, own cut counting, own validation.
namespace localcut::oracle {

struct OracleLimits {
  std::size_t max_n = 18;          ///< subset enumeration
  std::size_t max_nm = 1000000;    ///< flow-based oracles, n * m
  std::size_t node_budget = 2000000; ///< branch-and-bound nodes
  /// Branch and bound stops at the first set with cut <= kmax. Existence
  /// is then exact but the reported set need not be a minimiser.
  bool first_hit = false;
};

enum class Augment { Bfs, Dfs };

struct MinEdgeCut {
  std::size_t value = 0;
  std::vector<VertexId> side; ///< source side of a minimum cut, sorted
};

/// Minimum directed edge cut: min over t of maxflow(0,t) and maxflow(t,0)
/// with unit capacities. Requires n >= 2. Throws LimitExceeded.
MinEdgeCut bf_min_edge_cut(const Graph &g, Augment order = Augment::Bfs,
                           const OracleLimits &limits = {});

struct MinVertexCut {
  std::size_t kappa = 0;
  bool complete = false;                 ///< no separable pair: kappa = n-1
  std::optional<SeparationTriple> triple;
};

/// Minimum vertex cut over ordered pairs (s,t) with no arc s->t, by
/// unit vertex capacities on the split network. Throws LimitExceeded.
MinVertexCut bf_min_vertex_cut(const Graph &g, Augment order = Augment::Bfs,
                               const OracleLimits &limits = {});

/// Maximum number of internally vertex-disjoint s->t paths, capped at
/// `cap`. Requires s != t and no arc s->t.
std::size_t bf_st_vertex_paths(const Graph &g, VertexId s, VertexId t, std::size_t cap,
                               Augment order = Augment::Bfs);

enum class Search { Exact, Unknown };

struct LocalWitness {
  Search status = Search::Exact;
  bool exists = false;   ///< some S with x in S, S != V, vol(S) <= nu, cut <= kmax
  std::size_t cut = 0;
  std::size_t vol = 0;
  std::vector<VertexId> side;
};

/// Smallest cut |E(S, V-S)| over S containing x, S != V, vol(S) <= nu.
/// Subset enumeration up to limits.max_n vertices, otherwise branch and
/// bound over sets reachable from x inside themselves (a minimiser of that
/// form always exists); Unknown once the node budget runs out.
LocalWitness bf_local_witness(const Graph &g, VertexId x, std::size_t nu, std::size_t kmax,
                              const OracleLimits &limits = {});

/// Full recount of a witness against g.
bool validate_witness(const Graph &g, const CutWitness &w);

} // namespace localcut::oracle
