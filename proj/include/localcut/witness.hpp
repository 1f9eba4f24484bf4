#pragma once

#include <variant>
#include <vector>

#include "localcut/graph.hpp"

namespace localcut {

/// A vertex set S with its crossing arcs E(S, V-S) in the base graph.
struct EdgeCut {
  std::vector<VertexId> side;
  std::vector<Arc> crossing;

  std::size_t size() const { return crossing.size(); }
};

/// A separation triple (L, S, R): partition of V, L and R nonempty, and no
/// arc from L to R.
struct VertexCut {
  std::vector<VertexId> left;
  std::vector<VertexId> separator;
  std::vector<VertexId> right;

  std::size_t size() const { return separator.size(); }
};

using SeparationTriple = VertexCut;
using CutWitness = std::variant<EdgeCut, VertexCut>;

inline std::size_t witness_size(const CutWitness &w) {
  return std::visit([](const auto &c) { return c.size(); }, w);
}

} // namespace localcut
