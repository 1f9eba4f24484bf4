#include "localcut/bruteforce.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "localcut/errors.hpp"

namespace localcut::oracle {

namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

// Residual network with paired edges.
class FlowNet {
public:
  explicit FlowNet(std::size_t n) : adj_(n) {}

  void add(std::size_t u, std::size_t v, std::size_t cap) {
    adj_[u].push_back(edges_.size());
    edges_.push_back({v, cap});
    adj_[v].push_back(edges_.size());
    edges_.push_back({u, 0});
  }

  // Augments until `limit` units flow or no path remains.
  std::size_t max_flow(std::size_t s, std::size_t t, std::size_t limit, Augment order) {
    std::size_t flow = 0;
    while (flow < limit) {
      const auto pred = order == Augment::Bfs ? bfs_path(s, t) : dfs_path(s, t);
      if (pred[t] == kNone)
        break;
      std::size_t push = limit - flow;
      for (std::size_t v = t; v != s; v = edges_[pred[v] ^ 1].to)
        push = std::min(push, edges_[pred[v]].cap);
      for (std::size_t v = t; v != s; v = edges_[pred[v] ^ 1].to) {
        edges_[pred[v]].cap -= push;
        edges_[pred[v] ^ 1].cap += push;
      }
      flow += push;
    }
    return flow;
  }

  std::vector<char> reachable(std::size_t s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : adj_[v])
        if (edges_[e].cap > 0 && !seen[edges_[e].to]) {
          seen[edges_[e].to] = 1;
          stack.push_back(edges_[e].to);
        }
    }
    return seen;
  }

private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  struct Edge {
    std::size_t to;
    std::size_t cap;
  };

  std::vector<std::size_t> bfs_path(std::size_t s, std::size_t t) const {
    std::vector<std::size_t> pred(adj_.size(), kNone);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<std::size_t> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t e : adj_[v]) {
        const std::size_t w = edges_[e].to;
        if (edges_[e].cap > 0 && !seen[w]) {
          seen[w] = 1;
          pred[w] = e;
          queue.push_back(w);
        }
      }
    }
    return pred;
  }

  // Depth-first: always extends the most recently discovered vertex, and
  // scans edges in reverse insertion order, so paths differ from BFS ones.
  std::vector<std::size_t> dfs_path(std::size_t s, std::size_t t) const {
    std::vector<std::size_t> pred(adj_.size(), kNone);
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty() && !seen[t]) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (auto it = adj_[v].rbegin(); it != adj_[v].rend(); ++it) {
        const std::size_t w = edges_[*it].to;
        if (edges_[*it].cap > 0 && !seen[w]) {
          seen[w] = 1;
          pred[w] = *it;
          stack.push_back(w);
        }
      }
    }
    return pred;
  }

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<Edge> edges_;
};

void check_flow_limit(const Graph &g, const OracleLimits &limits) {
  if (g.num_vertices() * std::max<std::size_t>(g.num_arcs(), 1) > limits.max_nm)
    throw LimitExceeded("graph too large for flow oracle");
}

FlowNet edge_network(const Graph &g) {
  FlowNet net(g.num_vertices());
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (VertexId v : g.out_neighbors(u))
      if (u != v)
        net.add(u, v, 1);
  return net;
}

// v_in = 2v, v_out = 2v+1; only s and t have uncapacitated split arcs.
FlowNet vertex_network(const Graph &g, VertexId s, VertexId t) {
  const std::size_t n = g.num_vertices();
  FlowNet net(2 * n);
  for (VertexId v = 0; v < n; ++v)
    net.add(2 * v, 2 * v + 1, v == s || v == t ? kInf : 1);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v : g.out_neighbors(u))
      if (u != v)
        net.add(2 * u + 1, 2 * v, kInf);
  return net;
}

bool has_arc(const Graph &g, VertexId s, VertexId t) {
  const auto nb = g.out_neighbors(s);
  return std::find(nb.begin(), nb.end(), t) != nb.end();
}

} // namespace

MinEdgeCut bf_min_edge_cut(const Graph &g, Augment order, const OracleLimits &limits) {
  const std::size_t n = g.num_vertices();
  if (n < 2)
    throw ParameterError("edge cut needs at least two vertices");
  check_flow_limit(g, limits);
  MinEdgeCut best;
  best.value = kInf;
  for (VertexId t = 1; t < n; ++t)
    for (const auto &[src, dst] : {std::pair<VertexId, VertexId>{0, t}, {t, 0}}) {
      FlowNet net = edge_network(g);
      const std::size_t f = net.max_flow(src, dst, best.value, order);
      if (f < best.value) {
        best.value = f;
        const auto seen = net.reachable(src);
        best.side.clear();
        for (VertexId v = 0; v < n; ++v)
          if (seen[v])
            best.side.push_back(v);
      }
    }
  return best;
}

std::size_t bf_st_vertex_paths(const Graph &g, VertexId s, VertexId t, std::size_t cap,
                               Augment order) {
  if (s == t || has_arc(g, s, t))
    throw ParameterError("pair is not separable");
  FlowNet net = vertex_network(g, s, t);
  return net.max_flow(2 * s + 1, 2 * t, cap, order);
}

MinVertexCut bf_min_vertex_cut(const Graph &g, Augment order, const OracleLimits &limits) {
  const std::size_t n = g.num_vertices();
  check_flow_limit(g, limits);
  MinVertexCut best;
  best.kappa = n == 0 ? 0 : n - 1;
  best.complete = true;
  for (VertexId s = 0; s < n; ++s)
    for (VertexId t = 0; t < n; ++t) {
      if (s == t || has_arc(g, s, t))
        continue;
      FlowNet net = vertex_network(g, s, t);
      const std::size_t limit = best.complete ? kInf : best.kappa;
      const std::size_t f = net.max_flow(2 * s + 1, 2 * t, limit, order);
      if (best.complete || f < best.kappa) {
        const auto seen = net.reachable(2 * s + 1);
        SeparationTriple tr;
        for (VertexId v = 0; v < n; ++v) {
          const bool in = v == s || seen[2 * v];
          const bool out = v == s || seen[2 * v + 1];
          (in && out ? tr.left : in ? tr.separator : tr.right).push_back(v);
        }
        best.kappa = f;
        best.complete = false;
        best.triple = std::move(tr);
      }
    }
  return best;
}

namespace {

struct Accum {
  std::size_t cut = 0;
  std::size_t vol = 0;
};

Accum measure(const Graph &g, const std::vector<char> &in) {
  Accum a;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (in[v]) {
      a.vol += g.out_degree(v);
      for (VertexId u : g.out_neighbors(v))
        a.cut += !in[u];
    }
  return a;
}

class Brancher {
public:
  Brancher(const Graph &g, VertexId x, std::size_t nu, std::size_t budget, std::size_t stop_at)
      : g_(g), nu_(nu), budget_(budget), stop_at_(stop_at), in_(g.num_vertices(), 0),
        excluded_(g.num_vertices(), 0) {
    in_[x] = 1;
    members_.push_back(x);
    vol_ = g.out_degree(x);
  }

  bool run() {
    if (vol_ <= nu_)
      visit();
    return !out_of_budget_;
  }

  bool found = false;
  std::size_t best_cut = kInf;
  std::size_t best_vol = 0;
  std::vector<VertexId> best_side;

private:
  void visit() {
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return;
    }
    std::size_t cut = 0;
    std::vector<VertexId> frontier;
    for (VertexId v : members_)
      for (VertexId u : g_.out_neighbors(v))
        if (!in_[u]) {
          ++cut;
          if (!excluded_[u])
            frontier.push_back(u);
        }
    if (members_.size() < g_.num_vertices() &&
        (!found || cut < best_cut || (cut == best_cut && vol_ < best_vol))) {
      found = true;
      best_cut = cut;
      best_vol = vol_;
      best_side = members_;
    }
    if (frontier.empty() || best_cut == 0 || (found && best_cut <= stop_at_))
      return;
    // Branch on the frontier vertex most tightly tied to the current set:
    // arcs into it plus arcs back from it.
    std::sort(frontier.begin(), frontier.end());
    VertexId c = frontier.front();
    std::size_t best_score = 0;
    for (std::size_t i = 0; i < frontier.size();) {
      std::size_t j = i;
      while (j < frontier.size() && frontier[j] == frontier[i])
        ++j;
      std::size_t score = j - i;
      for (VertexId u : g_.out_neighbors(frontier[i]))
        score += in_[u];
      if (score > best_score) {
        best_score = score;
        c = frontier[i];
      }
      i = j;
    }
    if (vol_ + g_.out_degree(c) <= nu_) {
      in_[c] = 1;
      members_.push_back(c);
      vol_ += g_.out_degree(c);
      visit();
      vol_ -= g_.out_degree(c);
      members_.pop_back();
      in_[c] = 0;
      if (out_of_budget_)
        return;
    }
    excluded_[c] = 1;
    visit();
    excluded_[c] = 0;
  }

  const Graph &g_;
  std::size_t nu_;
  std::size_t budget_;
  std::size_t stop_at_;
  std::size_t nodes_ = 0;
  bool out_of_budget_ = false;
  std::vector<char> in_;
  std::vector<char> excluded_;
  std::vector<VertexId> members_;
  std::size_t vol_ = 0;
};

} // namespace

LocalWitness bf_local_witness(const Graph &g, VertexId x, std::size_t nu, std::size_t kmax,
                              const OracleLimits &limits) {
  const std::size_t n = g.num_vertices();
  if (x >= n)
    throw RangeError("seed vertex outside graph");
  LocalWitness out;
  bool any = false;
  if (n <= limits.max_n) {
    std::vector<VertexId> others;
    for (VertexId v = 0; v < n; ++v)
      if (v != x)
        others.push_back(v);
    std::vector<char> in(n, 0);
    const std::uint64_t full = (std::uint64_t{1} << others.size()) - 1;
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      std::fill(in.begin(), in.end(), 0);
      in[x] = 1;
      for (std::size_t i = 0; i < others.size(); ++i)
        if (mask >> i & 1)
          in[others[i]] = 1;
      const Accum a = measure(g, in);
      if (a.vol > nu)
        continue;
      if (!any || a.cut < out.cut || (a.cut == out.cut && a.vol < out.vol)) {
        any = true;
        out.cut = a.cut;
        out.vol = a.vol;
        out.side.clear();
        for (VertexId v = 0; v < n; ++v)
          if (in[v])
            out.side.push_back(v);
      }
    }
  } else {
    // Without first_hit the stop threshold is 0, which already ends the search.
    Brancher b(g, x, nu, limits.node_budget, limits.first_hit ? kmax : 0);
    if (!b.run()) {
      out.status = Search::Unknown;
      return out;
    }
    any = b.found;
    out.cut = b.best_cut;
    out.vol = b.best_vol;
    out.side = b.best_side;
    std::sort(out.side.begin(), out.side.end());
  }
  out.exists = any && out.cut <= kmax;
  if (!any) {
    out.cut = 0;
    out.side.clear();
  }
  return out;
}

bool validate_witness(const Graph &g, const CutWitness &w) {
  const std::size_t n = g.num_vertices();
  if (const auto *ec = std::get_if<EdgeCut>(&w)) {
    if (ec->side.empty() || ec->side.size() >= n)
      return false;
    std::vector<char> in(n, 0);
    for (VertexId v : ec->side) {
      if (v >= n || in[v])
        return false;
      in[v] = 1;
    }
    std::vector<ArcId> expected;
    for (VertexId v : ec->side)
      for (std::size_t i = 0; i < g.out_degree(v); ++i) {
        const ArcId a = g.first_arc(v) + i;
        if (!in[g.head(a)])
          expected.push_back(a);
      }
    std::vector<ArcId> claimed;
    for (const Arc &a : ec->crossing) {
      if (a.id >= g.num_arcs() || g.tail(a.id) != a.tail || g.head(a.id) != a.head)
        return false;
      claimed.push_back(a.id);
    }
    std::sort(expected.begin(), expected.end());
    std::sort(claimed.begin(), claimed.end());
    return expected == claimed;
  }
  const auto &t = std::get<VertexCut>(w);
  if (t.left.empty() || t.right.empty())
    return false;
  std::vector<int> part(n, -1);
  int tag = 0;
  std::size_t total = 0;
  for (const auto *set : {&t.left, &t.separator, &t.right}) {
    for (VertexId v : *set) {
      if (v >= n || part[v] != -1)
        return false;
      part[v] = tag;
      ++total;
    }
    ++tag;
  }
  if (total != n)
    return false;
  for (VertexId v : t.left)
    for (VertexId u : g.out_neighbors(v))
      if (part[u] == 2)
        return false;
  return true;
}

} // namespace localcut::oracle
