#include "localcut/vc_local.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "localcut/errors.hpp"

namespace localcut {

SplitGraphView::SplitGraphView(QueryOracle &base, VertexId x, bool require_min_degree)
    : base_(&base), x_(x) {
  if (x >= base.num_vertices())
    throw RangeError("split root " + std::to_string(x) + " outside graph");
  if (require_min_degree)
    for (VertexId v = 0; v < base.num_vertices(); ++v)
      if (base.out_degree(v) == 0)
        throw ParameterError("vertex " + std::to_string(v) + " has out-degree 0");
}

std::size_t SplitGraphView::out_degree(VertexId v) {
  if (v == 2 * x_ + 1)
    return 0;
  return is_in_copy(v) ? 1 : base_->out_degree(v / 2);
}

Arc SplitGraphView::arc(VertexId v, std::size_t i) {
  const VertexId b = v / 2;
  if (v == 2 * x_ + 1)
    throw RangeError("unused split id");
  if (is_in_copy(v)) {
    if (i != 0)
      throw RangeError("in-copies have a single arc");
    return {base_->arc_id_bound() + b, v, v + 1};
  }
  const auto a = base_->query_edge(b, i + 1);
  if (!a)
    throw std::logic_error("base list shorter than its degree");
  return {a->id, v, in_copy(a->head)};
}

Graph materialize_split(const Graph &g, VertexId x) {
  const std::size_t n = g.num_vertices();
  GraphBuilder b(2 * n, true);
  for (VertexId u = 0; u < n; ++u) {
    const VertexId tail = u == x ? 2 * u : 2 * u + 1;
    if (u != x)
      b.add_arc(2 * u, 2 * u + 1);
    for (VertexId w : g.out_neighbors(u))
      b.add_arc(tail, 2 * w);
  }
  return b.build();
}

namespace {

std::vector<VertexId> complement(std::size_t n, const std::vector<char> &taken) {
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v)
    if (!taken[v])
      rest.push_back(v);
  return rest;
}

} // namespace

SeparationTriple project_cut(std::size_t n, VertexId x, std::span<const VertexId> lp,
                             const SplitArcs &out_arcs) {
  auto in_copy = [x](VertexId v) { return v % 2 == 0 && v != 2 * x; };
  std::vector<VertexId> sorted(lp.begin(), lp.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::unordered_set<VertexId> in_lp(sorted.begin(), sorted.end());

  std::unordered_map<VertexId, std::vector<Arc>> arcs;
  std::size_t cut = 0;
  for (VertexId v : sorted) {
    auto &list = arcs[v] = out_arcs(v);
    for (const Arc &a : list)
      cut += !in_lp.contains(a.head);
  }

  // Neighbourhood of a base vertex set given by its out-copies.
  auto triple_for = [&](std::vector<VertexId> left) -> SeparationTriple {
    std::sort(left.begin(), left.end());
    std::vector<char> taken(n, 0);
    for (VertexId v : left)
      taken[v] = 1;
    std::vector<VertexId> sep;
    for (VertexId v : left)
      for (const Arc &a : arcs.at(v == x ? 2 * v : 2 * v + 1)) {
        const VertexId u = a.head / 2;
        if (!taken[u]) {
          taken[u] = 1;
          sep.push_back(u);
        }
      }
    std::sort(sep.begin(), sep.end());
    return {std::move(left), std::move(sep), complement(n, taken)};
  };

  for (VertexId v : sorted) {
    if (in_copy(v) || arcs.at(v).size() > cut)
      continue;
    auto t = triple_for({v / 2});
    if (!t.right.empty())
      return t;
  }

  std::unordered_set<VertexId> closed(in_lp);
  for (VertexId v : sorted)
    for (const Arc &a : arcs.at(v))
      if (!in_lp.contains(a.head) && in_copy(a.head))
        closed.insert(a.head);
  std::vector<VertexId> left;
  for (VertexId v : sorted) {
    if (in_copy(v))
      continue;
    const VertexId b = v / 2;
    if (b == x || closed.contains(2 * b))
      left.push_back(b);
  }
  if (left.empty())
    throw ProjectionDegenerate("projection has an empty left side");
  auto t = triple_for(std::move(left));
  if (t.right.empty())
    throw ProjectionDegenerate("projection has an empty right side");
  return t;
}

SeparationTriple project_cut(const Graph &g, VertexId x, std::span<const VertexId> lp) {
  const ArcId m = g.num_arcs();
  auto out_arcs = [&](VertexId v) {
    const VertexId b = v / 2;
    std::vector<Arc> list;
    if (v % 2 == 0 && b != x) {
      list.push_back({m + b, v, v + 1});
      return list;
    }
    for (std::size_t i = 0; i < g.out_degree(b); ++i) {
      const Arc a = g.out_arc(b, i);
      list.push_back({a.id, v, 2 * a.head});
    }
    return list;
  };
  return project_cut(g.num_vertices(), x, lp, out_arcs);
}

bool is_separation_triple(const Graph &g, const SeparationTriple &t) {
  const std::size_t n = g.num_vertices();
  if (t.left.empty() || t.right.empty())
    return false;
  if (t.left.size() + t.separator.size() + t.right.size() != n)
    return false;
  std::vector<char> part(n, 0);
  for (const auto *set : {&t.left, &t.separator, &t.right}) {
    const char tag = set == &t.left ? 1 : set == &t.separator ? 2 : 3;
    for (VertexId v : *set) {
      if (v >= n || part[v])
        return false;
      part[v] = tag;
    }
  }
  for (VertexId v : t.left)
    for (VertexId u : g.out_neighbors(v))
      if (part[u] == 3)
        return false;
  return true;
}

std::vector<VertexId> lift_triple(const Graph &g, VertexId x, const SeparationTriple &t) {
  if (!is_separation_triple(g, t))
    throw ParameterError("not a separation triple");
  const auto in_left = membership(g.num_vertices(), t.left);
  if (x >= g.num_vertices() || !in_left[x])
    throw ParameterError("root must lie in the left side");
  std::vector<VertexId> nbrs = cut_stats(g, t.left).n_out;
  std::vector<VertexId> sep = t.separator;
  std::sort(sep.begin(), sep.end());
  if (nbrs != sep)
    throw ParameterError("separator is not the out-neighbourhood of the left side");

  std::vector<VertexId> lifted;
  for (VertexId v : t.left) {
    lifted.push_back(2 * v);
    if (v != x)
      lifted.push_back(2 * v + 1);
  }
  for (VertexId v : sep)
    lifted.push_back(2 * v);
  std::sort(lifted.begin(), lifted.end());
  return lifted;
}

LocalResult local_vc(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                     std::size_t gap, Rng::Seed seed, const LocalVcOptions &opts) {
  if (x >= oracle.num_vertices())
    throw RangeError("seed vertex " + std::to_string(x) + " outside graph");
  if (k < 1 || nu < 1)
    throw ParameterError("k and nu must be positive");
  if (opts.check_preconditions) {
    const auto lhs = static_cast<unsigned __int128>(nu) * LocalEcConstants::kVertexPrecondition * k;
    const auto rhs = static_cast<unsigned __int128>(oracle.num_arcs()) * (gap + 1);
    if (lhs >= rhs)
      throw ParameterError("nu violates nu < m (gap+1) / (8320 k)");
    if (4 * k >= oracle.num_vertices())
      throw ParameterError("k must be below n/4");
  }

  SplitGraphView view(oracle, x);
  QueryOracle split(view);
  LocalEcParams p;
  p.seed = view.out_copy(x);
  p.nu = 2 * nu;
  p.k = k;
  p.gap = gap;
  p.rng_seed = seed;
  p.strict = opts.strict;

  const std::size_t before = oracle.queries();
  SideArcs arcs;
  LocalResult r = local_ec_traced(split, p, &arcs);
  r.stats.queries = oracle.queries() - before;
  if (!r.found())
    return r;

  const auto lp = r.edge_cut().side;
  try {
    auto t = project_cut(oracle.num_vertices(), x, lp,
                         [&](VertexId v) { return arcs.at(v); });
    if (t.size() >= k + gap)
      throw std::logic_error("local_vc produced a separator outside its guarantee");
    r.witness = std::move(t);
  } catch (const ProjectionDegenerate &) {
    r.witness.reset();
  }
  return r;
}

LocalResult local_vc_exact(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                           Rng::Seed seed) {
  return local_vc(oracle, x, nu, k, 0, seed);
}

LocalResult local_vc_approx(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                            double eps, Rng::Seed seed) {
  if (!(eps > 0.0 && eps <= 1.0))
    throw ParameterError("eps must lie in (0, 1]");
  return local_vc(oracle, x, nu, k, floor_eps_k(eps, k), seed);
}

} // namespace localcut
