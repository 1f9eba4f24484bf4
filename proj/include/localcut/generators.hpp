#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "localcut/graph.hpp"
#include "localcut/rng.hpp"
#include "localcut/witness.hpp"

namespace localcut {

/// A generated graph with its sidecar metadata (parameters, seed and the
/// planted witness when there is one).
struct Instance {
  Graph graph;
  nlohmann::json meta;
  std::optional<SeparationTriple> planted_triple;
  std::vector<VertexId> planted_side;  ///< planted edge-cut side, if any
};

Instance gen_cycle(std::size_t n, bool directed = true);
Instance gen_clique(std::size_t n, bool directed = true);
/// t disjoint cycles of length len.
Instance gen_union_of_cycles(std::size_t t, std::size_t len, bool directed = true);
/// t disjoint cliques K_size.
Instance gen_union_of_cliques(std::size_t t, std::size_t size, bool directed = false);
/// t cliques K_size on a ring: vertex 0 of clique i is joined to vertex 1
/// of clique i+1 (one arc forward when directed, one edge otherwise).
Instance gen_ring_of_cliques(std::size_t t, std::size_t size, bool directed);
/// Simple undirected d-regular graph; pairing model repaired by edge swaps.
Instance gen_random_regular(std::size_t n, std::size_t d, Rng::Seed seed);
Instance gen_hypercube(std::size_t dim);
/// v -> v+o mod n for every offset o (both ways when undirected).
Instance gen_circulant(std::size_t n, const std::vector<std::size_t> &offsets, bool directed);
Instance gen_gnp(std::size_t n, double p, bool directed, Rng::Seed seed);
/// K_a and K_b sharing s vertices; kappa = s.
Instance gen_glued_cliques(std::size_t a, std::size_t b, std::size_t s);

/// Undirected sides A and B (circulants, or cliques when small) joined only
/// through a clique separator of size s; every separator vertex links to
/// min(side, max(4, s)) random vertices of each side. kappa = s.
Instance gen_planted_vertex_cut(std::size_t a, std::size_t b, std::size_t s, Rng::Seed seed);

/// Side A is K_a, side B a circulant with offsets 1..b_degree (a clique when
/// small); c random arcs A -> B and c random arcs B -> A (c edges when
/// undirected). The planted side is A and the minimum cut is c.
Instance gen_planted_edge_cut(std::size_t a, std::size_t b, std::size_t c, bool directed,
                              Rng::Seed seed, std::size_t b_degree = 4);

/// Applies a seeded random relabelling to graph and witnesses.
Instance permute_labels(const Instance &in, Rng::Seed seed);

} // namespace localcut
