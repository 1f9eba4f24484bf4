#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace localcut {

using VertexId = std::uint32_t;
using ArcId = std::uint64_t;

/// One arc with its stable id. For a `Graph` the id is the arc's position
/// in the global arc array; other incidence sources extend the id space.
struct Arc {
  ArcId id;
  VertexId tail;
  VertexId head;

  bool is_loop() const { return tail == head; }
  friend bool operator==(const Arc &, const Arc &) = default;
};

/// Immutable directed multigraph in CSR form.
///
/// Undirected graphs are stored as symmetric arc pairs and flagged as such;
/// every algorithm works on the directed view. Parallel arcs and self-loops
/// are allowed. Arcs of a vertex keep their insertion order.
class Graph {
public:
  Graph() = default;

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_arcs() const { return heads_.size(); }
  bool directed() const { return directed_; }

  std::size_t out_degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  ArcId first_arc(VertexId v) const { return offsets_[v]; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {heads_.data() + offsets_[v], out_degree(v)};
  }

  VertexId head(ArcId a) const { return heads_[a]; }
  VertexId tail(ArcId a) const { return tails_[a]; }
  Arc arc(ArcId a) const { return {a, tails_[a], heads_[a]}; }

  /// The i-th out-arc of v, 0-based.
  Arc out_arc(VertexId v, std::size_t i) const { return arc(offsets_[v] + i); }

  /// Cache hints for scans in an order that ignores the labels: the offset
  /// entry of v, and (reading that entry) the start of its arc list.
  void prefetch_vertex(VertexId v) const { __builtin_prefetch(offsets_.data() + v); }
  void prefetch_arcs(VertexId v) const { __builtin_prefetch(heads_.data() + offsets_[v]); }

  std::vector<std::size_t> in_degrees() const;
  std::size_t max_out_degree() const;

  friend bool operator==(const Graph &, const Graph &) = default;

private:
  friend class GraphBuilder;

  std::vector<ArcId> offsets_;
  std::vector<VertexId> heads_;
  std::vector<VertexId> tails_;
  bool directed_ = true;
};

/// Accumulates arcs and produces a `Graph`.
class GraphBuilder {
public:
  explicit GraphBuilder(std::size_t n, bool directed = true)
      : n_(n), directed_(directed) {}

  std::size_t num_vertices() const { return n_; }

  /// Adds the single arc u -> v.
  void add_arc(VertexId u, VertexId v);
  /// Adds u -> v, plus v -> u when the builder is undirected.
  void add_edge(VertexId u, VertexId v);

  Graph build() const;

  /// Wraps ready CSR arrays; offsets has n + 1 entries.
  static Graph from_csr(std::vector<ArcId> offsets, std::vector<VertexId> heads, bool directed);

private:
  std::size_t n_;
  bool directed_;
  std::vector<std::pair<VertexId, VertexId>> arcs_;
};

/// Parses a whitespace-separated edge list.
///
/// Lines starting with '#' or '%' and blank lines are skipped. The first
/// data line is read as an "n m" header when exactly m data lines follow it;
/// otherwise every line is an arc and n = 1 + largest id. Undirected input
/// doubles each line into two arcs. Throws ParseError / RangeError.
Graph load_graph(std::string_view text, bool directed);
Graph load_graph_file(const std::string &path, bool directed);

/// Serialises a graph with an "n m" header. Undirected graphs emit one line
/// per arc pair.
std::string to_edge_list(const Graph &g);

/// Arc (u,v) appears in the result exactly as often as (v,u) in `g`.
Graph reverse_graph(const Graph &g);

struct CutStats {
  std::size_t cut_size = 0;          ///< |E(S, V-S)|
  std::size_t vol_out = 0;           ///< sum of out-degrees over S
  std::vector<VertexId> n_out;       ///< out-neighbours outside S, sorted
};

CutStats cut_stats(const Graph &g, std::span<const VertexId> s);

/// Membership bitmap of size n for a vertex subset.
std::vector<char> membership(std::size_t n, std::span<const VertexId> s);

} // namespace localcut
