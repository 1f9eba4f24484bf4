#include "localcut/overlay.hpp"

#include <algorithm>
#include <stdexcept>

namespace localcut {

const Arc &ReversalOverlay::base_arc(VertexId v, std::size_t i) {
  auto [it, inserted] = cache_.try_emplace(v);
  auto &list = it->second;
  if (inserted)
    list.reserve(oracle_->out_degree(v)); // by_id_ points into this buffer
  while (list.size() <= i) {
    const auto arc = oracle_->query_edge(v, list.size() + 1);
    if (!arc)
      throw std::out_of_range("overlay scanned past the end of a list");
    list.push_back(*arc);
    by_id_.emplace(arc->id, &list.back());
  }
  return list[i];
}

std::size_t ReversalOverlay::scan_length(VertexId v) const {
  const auto it = flipped_out_.find(v);
  return base_degree(v) + (it == flipped_out_.end() ? 0 : it->second.size());
}

std::optional<Arc> ReversalOverlay::current_out(VertexId v, std::size_t j) {
  const std::size_t deg = base_degree(v);
  if (j < deg) {
    const Arc &a = base_arc(v, j);
    if (reversed_.contains(a.id))
      return std::nullopt;
    return a;
  }
  const Arc &a = flipped_out_.at(v)[j - deg];
  return Arc{a.id, a.head, a.tail};
}

void ReversalOverlay::flip(const Arc &base) {
  if (reversed_.erase(base.id)) {
    auto &list = flipped_out_.at(base.head);
    const auto pos = std::find_if(list.begin(), list.end(),
                                  [&](const Arc &a) { return a.id == base.id; });
    list.erase(pos);
    return;
  }
  reversed_.insert(base.id);
  flipped_out_[base.head].push_back(base);
}

const std::vector<Arc> &ReversalOverlay::cached_arcs(VertexId v) const {
  static const std::vector<Arc> empty;
  const auto it = cache_.find(v);
  return it == cache_.end() ? empty : it->second;
}

bool ReversalOverlay::fully_cached(VertexId v) const {
  return cached_arcs(v).size() == base_degree(v);
}

} // namespace localcut
