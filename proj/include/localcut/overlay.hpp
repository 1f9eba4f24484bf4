#pragma once

#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "localcut/graph.hpp"
#include "localcut/oracle.hpp"

namespace localcut {

/// Mutable view of the arcs a local run has touched: which are reversed and
/// which are marked. Base lists are fetched lazily through the oracle and
/// cached, so re-traversals in later iterations cost no further queries.
/// Storage is proportional to the arcs fetched, never to m.
class ReversalOverlay {
public:
  explicit ReversalOverlay(QueryOracle &oracle) : oracle_(&oracle) {}

  QueryOracle &oracle() const { return *oracle_; }

  /// Base (unreversed) i-th out-arc of v, 0-based; fetched on first use.
  const Arc &base_arc(VertexId v, std::size_t i);
  std::size_t base_degree(VertexId v) const { return oracle_->out_degree(v); }

  /// Number of slots to scan for the current out-list of v: base arcs
  /// (some possibly reversed away) followed by arcs flipped to leave v.
  std::size_t scan_length(VertexId v) const;
  /// Slot j of v's current out-list in current orientation, or nullopt if
  /// the slot holds a base arc that is reversed.
  std::optional<Arc> current_out(VertexId v, std::size_t j);

  bool is_reversed(ArcId a) const { return reversed_.contains(a); }
  /// Toggles the orientation of `base` (given in base orientation).
  void flip(const Arc &base);
  std::size_t num_reversed() const { return reversed_.size(); }

  /// Marks `a`; returns true when it was not marked before.
  bool mark(ArcId a) { return marked_.insert(a).second; }
  bool is_marked(ArcId a) const { return marked_.contains(a); }
  std::size_t num_marked() const { return marked_.size(); }

  /// Cached base out-arcs of v (all of them once v was fully scanned).
  const std::vector<Arc> &cached_arcs(VertexId v) const;
  bool fully_cached(VertexId v) const;

  /// Base arc for an id that this overlay has fetched.
  const Arc &fetched(ArcId a) const { return *by_id_.at(a); }

private:
  QueryOracle *oracle_;
  std::unordered_map<VertexId, std::vector<Arc>> cache_;
  std::unordered_map<ArcId, const Arc *> by_id_;
  std::unordered_set<ArcId> reversed_;
  std::unordered_set<ArcId> marked_;
  /// Reversed arcs, keyed by their base head (where they now start).
  std::unordered_map<VertexId, std::vector<Arc>> flipped_out_;
};

} // namespace localcut
