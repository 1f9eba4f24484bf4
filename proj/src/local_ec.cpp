#include "localcut/local_ec.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "localcut/errors.hpp"

namespace localcut {

std::size_t mark_limit(std::size_t nu, std::size_t k, std::size_t gap) {
  const unsigned __int128 num =
      static_cast<unsigned __int128>(LocalEcConstants::kMarkLimit) * nu * k;
  return static_cast<std::size_t>((num + gap) / (gap + 1));
}

std::size_t proven_volume_bound(std::size_t nu, std::size_t k, std::size_t gap) {
  // Current volume stays below the mark limit; each of the < k+gap
  // reversed paths restored at most one unit.
  return mark_limit(nu, k, gap) - 1 + (k + gap - 1);
}

std::size_t floor_eps_k(double eps, std::size_t k) {
  return static_cast<std::size_t>(std::floor(eps * static_cast<double>(k) + 1e-9));
}

void reverse_tree_path(ReversalOverlay &overlay, const TreeParents &parents,
                       VertexId x, VertexId y) {
  std::vector<ArcId> path;
  VertexId v = y;
  while (v != x) {
    const auto it = parents.find(v);
    if (it == parents.end() || path.size() > parents.size())
      throw std::logic_error("vertex " + std::to_string(y) + " is not in the tree");
    path.push_back(it->second.id);
    v = it->second.tail;
  }
  for (ArcId id : path)
    overlay.flip(overlay.fetched(id));
}

namespace {

void check_common(const QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k) {
  if (x >= oracle.num_vertices())
    throw RangeError("seed vertex " + std::to_string(x) + " outside graph");
  if (k < 1)
    throw ParameterError("k must be at least 1");
  if (nu < 1)
    throw ParameterError("nu must be positive");
}

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0))
    throw ParameterError("eps must lie in (0, 1]");
}

// Builds the edge-cut witness for `side` from cached base arcs. Every out-arc
// of the side was fetched during the run, so this costs no queries.
EdgeCut side_witness(const ReversalOverlay &overlay, std::vector<VertexId> side,
                     SideArcs *side_arcs) {
  std::sort(side.begin(), side.end());
  const std::unordered_set<VertexId> in_side(side.begin(), side.end());
  EdgeCut cut;
  for (VertexId v : side) {
    if (!overlay.fully_cached(v))
      throw std::logic_error("side vertex with unread out-arcs");
    const auto &arcs = overlay.cached_arcs(v);
    for (const Arc &a : arcs)
      if (!in_side.contains(a.head))
        cut.crossing.push_back(a);
    if (side_arcs)
      (*side_arcs)[v] = arcs;
  }
  cut.side = std::move(side);
  return cut;
}

std::size_t side_volume(const ReversalOverlay &overlay, const std::vector<VertexId> &side) {
  std::size_t vol = 0;
  for (VertexId v : side)
    vol += overlay.base_degree(v);
  return vol;
}

} // namespace

LocalResult local_ec_traced(QueryOracle &oracle, const LocalEcParams &p,
                            SideArcs *side_arcs) {
  check_common(oracle, p.seed, p.nu, p.k);
  if (p.strict && p.nu <= p.k)
    throw ParameterError("nu must exceed k");
  if (p.strict && p.gap > p.k)
    throw ParameterError("gap must not exceed k");
  if (p.check_volume_precondition) {
    const auto lhs = static_cast<unsigned __int128>(p.nu) * LocalEcConstants::kVolumeBound * p.k;
    const auto rhs = static_cast<unsigned __int128>(oracle.num_arcs()) * (p.gap + 1);
    if (lhs >= rhs)
      throw ParameterError("nu violates nu < m (gap+1) / (130 k)");
  }

  const std::size_t n = oracle.num_vertices();
  const std::size_t limit = mark_limit(p.nu, p.k, p.gap);
  const std::size_t rounds = p.k + p.gap;
  const std::uint64_t coin_num = p.gap + 1;
  const std::uint64_t coin_den = LocalEcConstants::kStopDenominator * p.nu;

  ReversalOverlay overlay(oracle);
  Rng rng(p.rng_seed);
  LocalResult result;
  auto &st = result.stats;
  const std::size_t queries_before = oracle.queries();
  auto finish = [&]() -> LocalResult & {
    st.queries = oracle.queries() - queries_before;
    st.marks = overlay.num_marked();
    return result;
  };

  auto shortcut = [&](VertexId v) -> bool {
    if (!p.low_degree_shortcut || n < 2 || !oracle.degree_certifies_cut(v))
      return false;
    const std::size_t deg = overlay.base_degree(v);
    if (deg >= p.k)
      return false;
    for (std::size_t i = 0; i < deg; ++i)
      overlay.base_arc(v, i);
    result.witness = side_witness(overlay, {v}, side_arcs);
    st.shortcut = true;
    return true;
  };

  for (std::size_t round = 0; round < rounds; ++round) {
    ++st.iterations;
    TreeParents parents;
    std::unordered_set<VertexId> seen{p.seed};
    std::vector<VertexId> order{p.seed};
    std::deque<VertexId> queue{p.seed};
    if (shortcut(p.seed))
      return finish();

    std::optional<VertexId> stop;
    while (!queue.empty() && !stop) {
      const VertexId v = queue.front();
      queue.pop_front();
      // scan_length may grow only through flips, which happen after the BFS.
      const std::size_t len = overlay.scan_length(v);
      for (std::size_t j = 0; j < len; ++j) {
        const auto arc = overlay.current_out(v, j);
        if (!arc)
          continue;
        if (overlay.mark(arc->id)) {
          if (overlay.num_marked() >= limit) {
            st.early_bottom = true;
            return finish();
          }
          if (rng.bernoulli(coin_num, coin_den)) {
            stop = arc->tail;
            break;
          }
        }
        if (seen.insert(arc->head).second) {
          parents.emplace(arc->head, *arc);
          order.push_back(arc->head);
          queue.push_back(arc->head);
          if (shortcut(arc->head))
            return finish();
        }
      }
    }

    if (!stop) {
      if (order.size() == n)
        return finish(); // the whole graph: no cut to report
      EdgeCut cut = side_witness(overlay, std::move(order), side_arcs);
      const std::size_t vol = side_volume(overlay, cut.side);
      const bool within_130 = !(p.nu > p.k && p.gap <= p.k) ||
                              static_cast<unsigned __int128>(vol) * (p.gap + 1) <=
                                  static_cast<unsigned __int128>(LocalEcConstants::kVolumeBound) *
                                      p.nu * p.k;
      if (cut.size() >= rounds || vol > proven_volume_bound(p.nu, p.k, p.gap) || !within_130)
        throw std::logic_error("local_ec produced a witness outside its guarantee");
      result.witness = std::move(cut);
      return finish();
    }
    reverse_tree_path(overlay, parents, p.seed, *stop);
    ++st.reversals;
  }
  return finish();
}

LocalResult local_ec(QueryOracle &oracle, const LocalEcParams &params) {
  return local_ec_traced(oracle, params, nullptr);
}

LocalResult local_ec_exact(QueryOracle &oracle, VertexId x, std::size_t nu,
                           std::size_t k, Rng::Seed seed) {
  LocalEcParams p;
  p.seed = x;
  p.nu = nu;
  p.k = k;
  p.gap = 0;
  p.rng_seed = seed;
  return local_ec(oracle, p);
}

LocalResult local_ec_approx(QueryOracle &oracle, VertexId x, std::size_t nu,
                            std::size_t k, double eps, Rng::Seed seed) {
  check_eps(eps);
  LocalEcParams p;
  p.seed = x;
  p.nu = nu;
  p.k = k;
  p.gap = floor_eps_k(eps, k);
  p.rng_seed = seed;
  return local_ec(oracle, p);
}

LocalResult local_ec_dfs(QueryOracle &oracle, VertexId x, std::size_t nu,
                         std::size_t k, double eps, Rng::Seed seed) {
  check_common(oracle, x, nu, k);
  check_eps(eps);
  const std::size_t n = oracle.num_vertices();
  const std::size_t rounds = k + floor_eps_k(eps, k);
  const auto budget = static_cast<std::size_t>(
      std::ceil(8.0 * static_cast<double>(nu) / eps - 1e-9));

  ReversalOverlay overlay(oracle);
  Rng rng(seed);
  LocalResult result;
  auto &st = result.stats;
  const std::size_t queries_before = oracle.queries();
  auto finish = [&]() -> LocalResult & {
    st.queries = oracle.queries() - queries_before;
    return result;
  };

  struct Frame {
    VertexId v;
    std::size_t next;
  };

  for (std::size_t round = 0; round < rounds; ++round) {
    ++st.iterations;
    TreeParents parents;
    std::unordered_set<VertexId> seen{x};
    std::vector<VertexId> order{x};
    std::vector<Frame> stack{{x, 0}};
    std::vector<Arc> visited;
    visited.reserve(budget);

    while (!stack.empty() && visited.size() < budget) {
      Frame &top = stack.back();
      if (top.next >= overlay.scan_length(top.v)) {
        stack.pop_back();
        continue;
      }
      const auto arc = overlay.current_out(top.v, top.next++);
      if (!arc)
        continue;
      visited.push_back(*arc);
      if (seen.insert(arc->head).second) {
        parents.emplace(arc->head, *arc);
        order.push_back(arc->head);
        stack.push_back({arc->head, 0});
      }
    }

    if (visited.size() < budget) {
      if (order.size() == n)
        return finish();
      EdgeCut cut = side_witness(overlay, std::move(order), nullptr);
      const std::size_t vol = side_volume(overlay, cut.side);
      const bool within_10 = nu < k || static_cast<double>(vol) <= 10.0 * nu / eps + 1e-9;
      if (cut.size() >= rounds || vol > budget - 1 + rounds - 1 || !within_10)
        throw std::logic_error("local_ec_dfs produced a witness outside its guarantee");
      result.witness = std::move(cut);
      return finish();
    }
    const Arc &pick = visited[rng.below(visited.size())];
    reverse_tree_path(overlay, parents, x, pick.tail);
    ++st.reversals;
  }
  return finish();
}

} // namespace localcut
