#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "localcut/graph.hpp"
#include "localcut/oracle.hpp"
#include "localcut/overlay.hpp"
#include "localcut/rng.hpp"
#include "localcut/witness.hpp"

namespace localcut {

/// Constants of the BFS-with-random-stops procedure. Kept verbatim from its
/// analysis: stop probability (gap+1)/(8 nu), early-bottom once marks reach
/// 128 nu k/(gap+1), output volume at most 130 nu k/(gap+1).
struct LocalEcConstants {
  static constexpr std::size_t kStopDenominator = 8;
  static constexpr std::size_t kMarkLimit = 128;
  static constexpr std::size_t kVolumeBound = 130;
  /// Local runs on the split graph require nu < m (gap+1) / (8320 k).
  static constexpr std::size_t kVertexPrecondition = 8320;
};

struct LocalEcParams {
  VertexId seed = 0;
  std::size_t nu = 0;
  std::size_t k = 1;
  std::size_t gap = 0;
  Rng::Seed rng_seed = 0;

  /// Return Found({v}) when a newly visited vertex has out-degree < k.
  bool low_degree_shortcut = true;
  /// Require nu > k and gap <= k. Gap adapters relax this.
  bool strict = true;
  /// Enforce nu < m (gap+1) / (130 k) against the oracle's arc count.
  bool check_volume_precondition = false;
};

struct LocalStats {
  std::size_t queries = 0;
  std::size_t marks = 0;
  std::size_t iterations = 0;
  std::size_t reversals = 0;
  bool early_bottom = false;
  bool shortcut = false;
};

/// Found(witness) or Bottom (empty optional), with run statistics.
struct LocalResult {
  std::optional<CutWitness> witness;
  LocalStats stats;

  bool found() const { return witness.has_value(); }
  const EdgeCut &edge_cut() const { return std::get<EdgeCut>(*witness); }
  const VertexCut &vertex_cut() const { return std::get<VertexCut>(*witness); }
};

/// Base out-arcs, read during a run, of every vertex of the returned side.
using SideArcs = std::unordered_map<VertexId, std::vector<Arc>>;

/// ceil(128 nu k / (gap+1)).
std::size_t mark_limit(std::size_t nu, std::size_t k, std::size_t gap);
/// Volume bound the procedure proves for any returned side: marks stay
/// below the limit and at most k+gap-1 reversals happened.
std::size_t proven_volume_bound(std::size_t nu, std::size_t k, std::size_t gap);
/// floor(eps * k), tolerant of binary rounding in eps.
std::size_t floor_eps_k(double eps, std::size_t k);

/// Local edge-cut detection by repeated BFS with random stops and tree-path
/// reversal. Repeats k+gap times: grow a BFS tree from the seed over the
/// current orientation, stop at each newly marked arc (a,b) with probability
/// (gap+1)/(8 nu) and reverse the tree path from the seed to a. When a BFS
/// exhausts without stopping, its vertex set is returned.
///
/// Any returned side S satisfies |E(S,V-S)| < k+gap in the base graph and
/// vol(S) <= 130 nu k/(gap+1); both are checked before returning. If some
/// S containing the seed has vol <= nu and cut < k, the side is found with
/// probability at least 3/4. Throws ParameterError on bad parameters.
LocalResult local_ec(QueryOracle &oracle, const LocalEcParams &params);

/// Same as local_ec; additionally fills `side_arcs` with the base out-arcs
/// of the returned side (already fetched, so no extra queries).
LocalResult local_ec_traced(QueryOracle &oracle, const LocalEcParams &params,
                            SideArcs *side_arcs);

/// gap = 0: any returned cut has size < k.
LocalResult local_ec_exact(QueryOracle &oracle, VertexId x, std::size_t nu,
                           std::size_t k, Rng::Seed seed);

/// gap = floor(eps k): any returned cut has size < floor((1+eps) k).
LocalResult local_ec_approx(QueryOracle &oracle, VertexId x, std::size_t nu,
                            std::size_t k, double eps, Rng::Seed seed);

/// DFS-sampling variant. Repeats floor((1+eps)k) times: grow a DFS from x
/// until exactly ceil(8 nu/eps) arcs are visited; if fewer are reachable
/// return the tree's vertices, otherwise pick a visited arc uniformly and
/// reverse the tree path to its tail. Returned sides have cut
/// < floor((1+eps)k) and vol <= 10 nu/eps; false-bottom probability <= 1/2.
LocalResult local_ec_dfs(QueryOracle &oracle, VertexId x, std::size_t nu,
                         std::size_t k, double eps, Rng::Seed seed);

/// Parent arc (current orientation) of every non-root tree vertex.
using TreeParents = std::unordered_map<VertexId, Arc>;

/// Flips every arc of the tree path x -> y. Throws std::logic_error when y
/// is not connected to x through `parents`.
void reverse_tree_path(ReversalOverlay &overlay, const TreeParents &parents,
                       VertexId x, VertexId y);

} // namespace localcut
