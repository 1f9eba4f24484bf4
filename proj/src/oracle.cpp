#include "localcut/oracle.hpp"

#include <string>

#include "localcut/errors.hpp"

namespace localcut {

QueryOracle::QueryOracle(IncidenceSource &source, BoundedRegular model, std::size_t cap)
    : source_(&source), bounded_(true), d_(model.d), cap_(cap) {
  if (model.d == 0)
    throw ParameterError("degree bound d must be positive");
}

std::optional<Arc> QueryOracle::query_edge(VertexId v, std::size_t i) {
  if (v >= source_->num_vertices())
    throw RangeError("vertex " + std::to_string(v) + " outside oracle");
  if (i == 0 || (bounded_ && i > d_))
    throw RangeError("query index " + std::to_string(i) + " outside model range");
  if (counter_ >= cap_)
    throw BudgetExhausted(cap_);
  ++counter_;

  const std::size_t len = source_->out_degree(v);
  if (i <= len) {
    if (bounded_ && len > d_)
      throw RangeError("list of vertex " + std::to_string(v) + " exceeds d=" +
                       std::to_string(d_));
    return source_->arc(v, i - 1);
  }
  if (!bounded_)
    return std::nullopt;
  // Padding loops get ids past every real arc: one slot per (v, index).
  const ArcId id = source_->arc_id_bound() + static_cast<ArcId>(v) * d_ + (i - 1);
  return Arc{id, v, v};
}

std::size_t QueryOracle::out_degree(VertexId v) const {
  return bounded_ ? d_ : source_->out_degree(v);
}

std::size_t QueryOracle::num_arcs() const {
  return bounded_ ? source_->num_vertices() * d_ : source_->num_arcs();
}

ArcId QueryOracle::arc_id_bound() const {
  return bounded_ ? source_->arc_id_bound() + source_->num_vertices() * d_
                  : source_->arc_id_bound();
}

Arc sample_edge_regular(QueryOracle &oracle, Rng &rng) {
  if (!oracle.bounded())
    throw ParameterError("edge sampling requires the bounded-degree model");
  const auto v = static_cast<VertexId>(rng.below(oracle.num_vertices()));
  const std::size_t i = 1 + rng.below(oracle.degree_bound());
  return *oracle.query_edge(v, i);
}

} // namespace localcut
