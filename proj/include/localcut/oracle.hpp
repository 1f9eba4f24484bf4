#pragma once

#include <cstddef>
#include <limits>
#include <optional>

#include "localcut/graph.hpp"
#include "localcut/rng.hpp"

namespace localcut {

/// Read access to per-vertex out-arc lists. Implemented by plain graphs and
/// by on-the-fly derived graphs such as the split graph.
class IncidenceSource {
public:
  virtual ~IncidenceSource() = default;

  virtual std::size_t num_vertices() const = 0;
  /// Arc count when known; derived sources may have to report an estimate.
  virtual std::size_t num_arcs() const = 0;
  /// Exclusive upper bound on arc ids produced by `arc`.
  virtual ArcId arc_id_bound() const = 0;
  virtual std::size_t out_degree(VertexId v) = 0;
  /// The i-th out-arc of v, 0-based, i < out_degree(v).
  virtual Arc arc(VertexId v, std::size_t i) = 0;

  /// Whether a low out-degree at v certifies a cut of the source itself.
  /// The split graph reports false for its in-copies.
  virtual bool degree_certifies_cut(VertexId) const { return true; }
};

class GraphSource final : public IncidenceSource {
public:
  explicit GraphSource(const Graph &g) : g_(&g) {}

  std::size_t num_vertices() const override { return g_->num_vertices(); }
  std::size_t num_arcs() const override { return g_->num_arcs(); }
  ArcId arc_id_bound() const override { return g_->num_arcs(); }
  std::size_t out_degree(VertexId v) override { return g_->out_degree(v); }
  Arc arc(VertexId v, std::size_t i) override { return g_->out_arc(v, i); }

  const Graph &graph() const { return *g_; }

private:
  const Graph *g_;
};

/// Incidence-list access model.
struct Unbounded {};
/// Every list is padded with self-loops to exactly `d` entries.
struct BoundedRegular {
  std::size_t d;
};

/// Query-counted access to an incidence source.
///
/// `query_edge(v, i)` (1-based) is the only counted operation. Degree and
/// list-length lookups are free, as in the incidence-list model. In the
/// bounded model, indices in (list length, d] answer the padding loop (v,v).
class QueryOracle {
public:
  static constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

  explicit QueryOracle(IncidenceSource &source, std::size_t cap = kNoCap)
      : source_(&source), cap_(cap) {}
  QueryOracle(IncidenceSource &source, BoundedRegular model, std::size_t cap = kNoCap);

  /// Returns nullopt for the end-of-list symbol (unbounded model only).
  /// Throws BudgetExhausted when the call would exceed the cap, RangeError
  /// for i = 0 or i > d in the bounded model.
  std::optional<Arc> query_edge(VertexId v, std::size_t i);

  /// Logical out-degree: the list length, or d in the bounded model.
  std::size_t out_degree(VertexId v) const;
  /// Length of the underlying list, without padding.
  std::size_t list_length(VertexId v) const { return source_->out_degree(v); }

  std::size_t num_vertices() const { return source_->num_vertices(); }
  /// Logical arc count (n*d in the bounded model).
  std::size_t num_arcs() const;
  ArcId arc_id_bound() const;
  bool bounded() const { return bounded_; }
  std::size_t degree_bound() const { return d_; }
  bool degree_certifies_cut(VertexId v) const { return source_->degree_certifies_cut(v); }

  std::size_t queries() const { return counter_; }
  std::size_t cap() const { return cap_; }
  void set_cap(std::size_t cap) { cap_ = cap; }

  IncidenceSource &source() const { return *source_; }

private:
  IncidenceSource *source_;
  bool bounded_ = false;
  std::size_t d_ = 0;
  std::size_t counter_ = 0;
  std::size_t cap_;
};

/// Samples a vertex uniformly, then an index uniformly in [1, d], and
/// queries it. On a d-regular (padded) graph every arc has probability
/// 1/(nd). Requires the bounded model.
Arc sample_edge_regular(QueryOracle &oracle, Rng &rng);

} // namespace localcut
