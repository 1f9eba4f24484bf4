#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "localcut/graph.hpp"
#include "localcut/local_ec.hpp"
#include "localcut/oracle.hpp"
#include "localcut/witness.hpp"

namespace localcut {

/// Split graph of a base oracle with respect to a root x, built on the fly.
///
/// Ids: v_in = 2v, v_out = 2v+1, and x_in = x_out = 2x (id 2x+1 is unused,
/// so the id space has 2n entries while the graph has 2n-1 vertices).
/// v_in has the single arc (v_in, v_out) with id base_bound + v; v_out has
/// (v_out, u_in) for each base arc (v, u), keeping the base arc id.
/// Out-copy lists are read from the base oracle, one base query per view
/// arc; split arcs cost nothing.
class SplitGraphView final : public IncidenceSource {
public:
  /// With `require_min_degree`, scans every base degree (free in the
  /// incidence model, but O(n) time) and throws ParameterError on zero.
  SplitGraphView(QueryOracle &base, VertexId x, bool require_min_degree = false);

  VertexId root() const { return x_; }
  VertexId in_copy(VertexId v) const { return 2 * v; }
  VertexId out_copy(VertexId v) const { return v == x_ ? 2 * v : 2 * v + 1; }
  /// Base vertex of a split id.
  VertexId base_vertex(VertexId v) const { return v / 2; }
  bool is_in_copy(VertexId v) const { return v % 2 == 0 && v != 2 * x_; }

  std::size_t split_vertices() const { return 2 * base_->num_vertices() - 1; }
  std::size_t split_arcs() const { return base_->num_arcs() + base_->num_vertices() - 1; }

  std::size_t num_vertices() const override { return 2 * base_->num_vertices(); }
  std::size_t num_arcs() const override { return split_arcs(); }
  ArcId arc_id_bound() const override { return base_->arc_id_bound() + base_->num_vertices(); }
  std::size_t out_degree(VertexId v) override;
  Arc arc(VertexId v, std::size_t i) override;
  bool degree_certifies_cut(VertexId v) const override { return !is_in_copy(v); }

  QueryOracle &base() const { return *base_; }

private:
  QueryOracle *base_;
  VertexId x_;
};

/// The split graph materialised as a Graph on 2n ids (x's unused out id is
/// an isolated placeholder). Arc ids differ from the view's; heads agree.
Graph materialize_split(const Graph &g, VertexId x);

/// Out-arcs of a split-graph vertex, in split ids.
using SplitArcs = std::function<std::vector<Arc>(VertexId)>;

/// Back-projects a split-graph set Lp to a separation triple of the base
/// graph on n vertices. Returns ({v}, N(v), rest) when an out-copy in Lp
/// has out-degree at most the cut of Lp; otherwise closes Lp under the
/// in-copies hit by crossing arcs and keeps vertices with both copies.
/// The separator has at most |E(Lp, V'-Lp)| vertices. Throws
/// ProjectionDegenerate when the left or right side would be empty.
SeparationTriple project_cut(std::size_t n, VertexId x, std::span<const VertexId> lp,
                             const SplitArcs &out_arcs);
/// Same, on a materialised base graph.
SeparationTriple project_cut(const Graph &g, VertexId x, std::span<const VertexId> lp);

/// L' = {v_in, v_out : v in L} + {v_in : v in S} in split ids w.r.t. x.
/// Requires x in L and S = N(L); throws ParameterError otherwise.
std::vector<VertexId> lift_triple(const Graph &g, VertexId x, const SeparationTriple &t);

/// Checks partition, nonempty sides and E(L,R) empty by a full scan.
bool is_separation_triple(const Graph &g, const SeparationTriple &t);

struct LocalVcOptions {
  /// Enforce nu < m (gap+1) / (8320 k) and k < n/4.
  bool check_preconditions = false;
  /// Require nu > k and gap <= k (relaxed by the gap adapters).
  bool strict = true;
};

/// Local vertex-cut detection: runs local_ec(x, 2 nu, k, gap) on the split
/// graph and projects a found set back. A returned triple has L containing
/// x or a low-degree vertex, |S| < k+gap and S = N(L). If some triple with
/// x in L, |S| < k and vol(L) <= nu exists, it is found with probability
/// at least 3/4. stats.queries counts base-oracle queries.
LocalResult local_vc(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                     std::size_t gap, Rng::Seed seed, const LocalVcOptions &opts = {});

LocalResult local_vc_exact(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                           Rng::Seed seed);
LocalResult local_vc_approx(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                            double eps, Rng::Seed seed);

} // namespace localcut
