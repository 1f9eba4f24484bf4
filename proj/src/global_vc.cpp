#include "localcut/global_vc.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "localcut/errors.hpp"
#include "localcut/local_ec.hpp"
#include "localcut/oracle.hpp"
#include "localcut/vc_local.hpp"

namespace localcut {

namespace {

// Scan-first search in maximum-adjacency order; emit(u, v, forest) for
// every edge when u is scanned and v is not; on_scan(v, arcs from scanned
// vertices) as v is taken.
template <class Emit, class Scan>
void scan_first(const Graph &g, Emit emit, Scan on_scan) {
  if (g.directed())
    throw ParameterError("sparsification needs an undirected graph");
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kScanned = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> r(n, 0);
  std::vector<std::vector<VertexId>> buckets(g.max_out_degree() + 1);
  buckets[0].reserve(n);
  for (VertexId v = static_cast<VertexId>(n); v-- > 0;)
    buckets[0].push_back(v);
  std::size_t top = 0;
  for (std::size_t done = 0; done < n; ++done) {
    VertexId v;
    while (true) {
      while (buckets[top].empty())
        --top;
      v = buckets[top].back();
      buckets[top].pop_back();
      if (r[v] == top)
        break;
    }
    on_scan(v, r[v]);
    r[v] = kScanned;
    for (VertexId y : g.out_neighbors(v)) {
      if (r[y] == kScanned)
        continue;
      const std::uint32_t f = ++r[y];
      g.prefetch_vertex(y);
      emit(v, y, f);
      buckets[f].push_back(y);
      top = std::max<std::size_t>(top, f);
    }
  }
}

} // namespace

std::vector<ForestEdge> ni_forests(const Graph &g) {
  std::vector<ForestEdge> edges;
  scan_first(
      g, [&](VertexId u, VertexId v, std::size_t f) { edges.push_back({u, v, f}); },
      [](VertexId, std::uint32_t) {});
  return edges;
}

Graph sparsify_ni(const Graph &g, std::size_t k) {
  GraphBuilder b(g.num_vertices(), false);
  scan_first(
      g,
      [&](VertexId u, VertexId v, std::size_t f) {
        if (f <= k)
          b.add_edge(u, v);
      },
      [](VertexId, std::uint32_t) {});
  return b.build();
}

// An arc from a scanned vertex to y lands in forest ++r[y], so the edges
// kept at y are the first f of those arcs. The scan records, per y, the
// scanner that handed out forest f (thr) and how many of its arcs made it
// (allow); the CSR is then written directly in the new order. The scan is
// the one of scan_first, fused so that each vertex's state shares a cache
// line.
Graph sparsify_ni_scan_order(const Graph &g, std::size_t f, std::vector<VertexId> &to_input) {
  if (g.directed())
    throw ParameterError("sparsification needs an undirected graph");
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kScanned = std::numeric_limits<std::uint32_t>::max();
  constexpr std::uint32_t kAll = std::numeric_limits<std::uint32_t>::max();
  struct State {
    std::uint32_t r = 0;      // arcs from scanned vertices, kScanned once scanned
    std::uint32_t thr = kAll; // label of the scanner that handed out forest f
    std::uint32_t allow = 0;  // its arcs within the first f
    std::uint32_t label = 0;
  };
  std::vector<State> st(n);
  to_input.clear();
  to_input.reserve(n);
  std::vector<std::vector<VertexId>> buckets(g.max_out_degree() + 1);
  buckets[0].reserve(n);
  for (VertexId v = static_cast<VertexId>(n); v-- > 0;)
    buckets[0].push_back(v);
  std::size_t top = 0;
  for (std::uint32_t done = 0; done < n; ++done) {
    VertexId v;
    while (true) {
      while (buckets[top].empty())
        --top;
      v = buckets[top].back();
      buckets[top].pop_back();
      if (st[v].r == top)
        break;
    }
    // Fewer than f arcs from earlier vertices: all of them stay.
    if (st[v].r <= f)
      st[v].thr = kAll;
    st[v].r = kScanned;
    st[v].label = done;
    to_input.push_back(v);
    for (VertexId y : g.out_neighbors(v)) {
      State &sy = st[y];
      if (sy.r == kScanned)
        continue;
      const std::uint32_t forest = ++sy.r;
      g.prefetch_vertex(y);
      if (forest <= f) {
        if (sy.thr != done) {
          sy.thr = done;
          sy.allow = 0;
        }
        ++sy.allow;
      }
      buckets[forest].push_back(y);
      top = std::max<std::size_t>(top, forest);
    }
  }
  // From here on allow counts the threshold scanner's arcs still to keep
  // on the scanner's side; allow_in does the same at the receiving vertex.
  std::vector<ArcId> offsets(n + 1, 0);
  std::vector<VertexId> heads;
  heads.reserve(std::min<std::size_t>(g.num_arcs(), 2 * f * n));
  std::vector<std::uint32_t> allow_in(n);
  for (VertexId v = 0; v < n; ++v)
    allow_in[st[v].label] = st[v].allow;
  constexpr std::uint32_t kAhead = 16;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i + kAhead < n)
      g.prefetch_vertex(to_input[i + kAhead]);
    if (i + kAhead / 2 < n)
      g.prefetch_arcs(to_input[i + kAhead / 2]);
    const VertexId v = to_input[i];
    const std::uint32_t thr_v = st[v].thr;
    for (VertexId w : g.out_neighbors(v)) {
      if (w == v)
        continue;
      State &sw = st[w];
      bool keep;
      if (sw.label < i) // w scanned first: the arc counts at v
        keep = thr_v == kAll || sw.label < thr_v ||
               (sw.label == thr_v && allow_in[i] > 0 && allow_in[i]--);
      else // v scanned first: the arc counts at w
        keep = sw.thr == kAll || i < sw.thr || (i == sw.thr && sw.allow > 0 && sw.allow--);
      if (keep)
        heads.push_back(sw.label);
    }
    offsets[i + 1] = heads.size();
  }
  return GraphBuilder::from_csr(std::move(offsets), std::move(heads), false);
}

namespace {
constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();
// Residual step kinds, stored in the top bits of pred entries.
constexpr std::uint64_t kArcFwd = 0, kArcBwd = 1, kSplitFwd = 2, kSplitBwd = 3;
constexpr int kShift = 62;
constexpr std::uint64_t kMask = (std::uint64_t{1} << kShift) - 1;
} // namespace

StVertexFlow::StVertexFlow(const Graph &g)
    : g_(&g), in_flow_(g.num_vertices(), kNoArc), split_flow_(g.num_vertices(), 0),
      seen_(2 * g.num_vertices(), 0), pred_(2 * g.num_vertices(), 0) {
  queue_.reserve(2 * g.num_vertices());
}

bool StVertexFlow::adjacent(VertexId s, VertexId t) const {
  const auto nb = g_->out_neighbors(s);
  return std::find(nb.begin(), nb.end(), t) != nb.end();
}

// One BFS over the residual split network, nodes v_in = 2v, v_out = 2v+1.
bool StVertexFlow::augment(VertexId s, VertexId t) {
  const Graph &g = *g_;
  if (++stamp_ == 0) {
    std::fill(seen_.begin(), seen_.end(), 0);
    stamp_ = 1;
  }
  const std::uint64_t src = 2 * std::uint64_t{s} + 1, sink = 2 * std::uint64_t{t};
  queue_.clear();
  queue_.push_back(src);
  seen_[src] = stamp_;
  auto visit = [&](std::uint64_t node, std::uint64_t kind, std::uint64_t value) {
    if (seen_[node] == stamp_)
      return;
    seen_[node] = stamp_;
    pred_[node] = kind << kShift | value;
    queue_.push_back(node);
  };
  for (std::size_t head = 0; head < queue_.size() && seen_[sink] != stamp_; ++head) {
    const std::uint64_t u = queue_[head];
    const auto v = static_cast<VertexId>(u / 2);
    if (u % 2 == 0) {
      if (v != s && !split_flow_[v])
        visit(u + 1, kSplitFwd, v);
      if (in_flow_[v] != kNoArc)
        visit(2 * std::uint64_t{g.tail(in_flow_[v])} + 1, kArcBwd, in_flow_[v]);
    } else {
      const ArcId first = g.first_arc(v), last = first + g.out_degree(v);
      // Arcs are uncapacitated: an arc carrying flow still reaches its head's
      // in-copy, whose only exits are then the saturated split arc and the
      // arc back. Only the source has several loaded out-arcs.
      for (ArcId a = first; a < last; ++a) {
        const VertexId h = g.head(a);
        if (h != v)
          visit(2 * std::uint64_t{h}, kArcFwd, a);
      }
      if (v != s && split_flow_[v])
        visit(u - 1, kSplitBwd, v);
    }
  }
  if (seen_[sink] != stamp_)
    return false;
  for (std::uint64_t node = sink; node != src;) {
    const std::uint64_t kind = pred_[node] >> kShift, value = pred_[node] & kMask;
    switch (kind) {
    case kArcFwd:
      if (g.head(value) != t)
        in_flow_[g.head(value)] = value;
      node = 2 * std::uint64_t{g.tail(value)} + 1;
      break;
    case kArcBwd:
      if (in_flow_[g.head(value)] == value)
        in_flow_[g.head(value)] = kNoArc;
      node = 2 * std::uint64_t{g.head(value)};
      break;
    case kSplitFwd:
      split_flow_[value] = 1;
      node = 2 * value;
      break;
    default:
      split_flow_[value] = 0;
      node = 2 * value + 1;
      break;
    }
  }
  return true;
}

StResult StVertexFlow::run(VertexId s, VertexId t, std::size_t target) {
  const std::size_t n = g_->num_vertices();
  if (s >= n || t >= n)
    throw RangeError("flow endpoint outside graph");
  if (s == t)
    throw ParameterError("flow endpoints must differ");
  StResult res;
  if (adjacent(s, t)) {
    res.kind = StResult::Kind::Adjacent;
    return res;
  }
  std::fill(in_flow_.begin(), in_flow_.end(), kNoArc);
  std::fill(split_flow_.begin(), split_flow_.end(), 0);
  while (res.flow < target && augment(s, t))
    ++res.flow;
  if (res.flow >= target)
    return res;

  // The last search failed; its visited set is the residual source side.
  SeparationTriple tr;
  for (VertexId v = 0; v < n; ++v) {
    const bool in = v == s || seen_[2 * v] == stamp_;
    const bool out = v == s || seen_[2 * v + 1] == stamp_;
    (in && out ? tr.left : in ? tr.separator : tr.right).push_back(v);
  }
  if (tr.separator.size() != res.flow)
    throw std::logic_error("separator size differs from flow value");
  res.kind = StResult::Kind::Cut;
  res.triple = std::move(tr);
  return res;
}

StResult st_vertex_connectivity(const Graph &g, VertexId s, VertexId t, std::size_t k,
                                double eps) {
  if (k < 1)
    throw ParameterError("k must be at least 1");
  if (!(eps > 0.0 && eps <= 1.0))
    throw ParameterError("eps must lie in (0, 1]");
  StVertexFlow flow(g);
  return flow.run(s, t, k + floor_eps_k(eps, k));
}

std::size_t framework_nu_bar(std::size_t m, std::size_t k, std::size_t gap) {
  const unsigned __int128 num = static_cast<unsigned __int128>(m) * (gap + 1);
  const unsigned __int128 den = static_cast<unsigned __int128>(LocalEcConstants::kVertexPrecondition) * k;
  const unsigned __int128 ceil = (num + den - 1) / den;
  return ceil == 0 ? 0 : static_cast<std::size_t>(ceil - 1);
}

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

std::size_t sample_count(double c, std::size_t boost, double ratio, std::size_t n) {
  const double value = std::ceil(c * static_cast<double>(boost) * ratio *
                                 std::log(static_cast<double>(std::max<std::size_t>(n, 2))));
  return value >= 1e18 ? kUnbounded : static_cast<std::size_t>(value);
}

std::vector<VertexId> distinct_neighbors(std::span<const VertexId> heads, VertexId self) {
  std::vector<VertexId> nb;
  for (VertexId u : heads)
    if (u != self)
      nb.push_back(u);
  std::sort(nb.begin(), nb.end());
  nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  return nb;
}

SeparationTriple around(std::size_t n, std::vector<VertexId> side, std::vector<VertexId> sep,
                        bool side_is_left) {
  std::vector<char> taken(n, 0);
  for (VertexId v : side)
    taken[v] = 1;
  for (VertexId v : sep)
    taken[v] = 1;
  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v)
    if (!taken[v])
      rest.push_back(v);
  if (side_is_left)
    return {std::move(side), std::move(sep), std::move(rest)};
  return {std::move(rest), std::move(sep), std::move(side)};
}

class Framework {
public:
  Framework(const Graph &g, const Graph &work, const Graph *work_rev, std::size_t k, double eps,
            const FrameworkConfig &cfg, const std::vector<VertexId> *to_input = nullptr)
      : g_(g), work_(work), work_rev_(work_rev), to_input_(to_input), k_(k), gap_(floor_eps_k(eps, k)),
        target_(k + gap_), cfg_(cfg), rng_(derive_seed(cfg.seed, k)), work_flow_(work) {}

  VcVerdict run() {
    verdict_.k = k_;
    const std::size_t n = g_.num_vertices();
    if (n < 2) {
      verdict_.stats.phase = "trivial";
      return verdict_;
    }
    if (screen())
      return verdict_;
    if (pairs())
      return verdict_;
    if (verdict_.stats.exhaustive) {
      verdict_.stats.phase = "pairs";
      return verdict_;
    }
    local();
    return verdict_;
  }

private:
  bool found(SeparationTriple t, const char *phase) {
    verdict_.connected = false;
    verdict_.cut = std::move(t);
    verdict_.stats.phase = phase;
    return true;
  }

  // Neighbourhoods of low-degree vertices, read on the input graph.
  bool screen() {
    const std::size_t n = g_.num_vertices();
    std::vector<VertexId> mark(n, 0);
    // Fewer than k distinct neighbours, with a stamp per vertex scanned.
    auto low = [&](std::span<const VertexId> heads, VertexId v) {
      std::size_t count = 0;
      for (VertexId u : heads)
        if (u != v && mark[u] != v + 1) {
          mark[u] = v + 1;
          if (++count >= k_)
            return false;
        }
      return count + 1 < n;
    };
    for (VertexId v = 0; v < n; ++v)
      if (low(g_.out_neighbors(v), v))
        return found(around(n, {v}, distinct_neighbors(g_.out_neighbors(v), v), true), "degree");
    if (!g_.directed())
      return false;
    const Graph rev = reverse_graph(g_);
    std::fill(mark.begin(), mark.end(), 0);
    for (VertexId v = 0; v < n; ++v)
      if (low(rev.out_neighbors(v), v))
        return found(around(n, {v}, distinct_neighbors(rev.out_neighbors(v), v), false), "degree");
    return false;
  }

  bool valid_on_input(const SeparationTriple &t) const {
    return t.size() < target_ && is_separation_triple(g_, t);
  }

  // A cut of the certificate separates l from r in the input too; when the
  // triple itself does not carry over, recompute it by flow on the input.
  std::optional<SeparationTriple> accept(SeparationTriple t, VertexId l, VertexId r) {
    if (valid_on_input(t))
      return t;
    ++verdict_.stats.repairs;
    if (!input_flow_)
      input_flow_.emplace(g_);
    std::vector<VertexId> ls{l}, rs{r};
    for (std::size_t i = 0; i < std::min<std::size_t>(t.left.size(), 4); ++i)
      ls.push_back(t.left[i]);
    for (std::size_t i = 0; i < std::min<std::size_t>(t.right.size(), 4); ++i)
      rs.push_back(t.right[i]);
    for (VertexId a : ls)
      for (VertexId b : rs) {
        if (a == b || input_flow_->adjacent(a, b))
          continue;
        auto res = input_flow_->run(a, b, target_);
        if (res.kind == StResult::Kind::Cut && valid_on_input(*res.triple))
          return std::move(res.triple);
      }
    return std::nullopt;
  }

  VertexId input_id(VertexId v) const { return to_input_ ? (*to_input_)[v] : v; }

  // Relabels a triple of the work graph; one sweep keeps the sets sorted.
  SeparationTriple to_input(SeparationTriple t) const {
    if (!to_input_)
      return t;
    std::vector<char> part(g_.num_vertices(), 0);
    for (VertexId v : t.separator)
      part[(*to_input_)[v]] = 1;
    for (VertexId v : t.right)
      part[(*to_input_)[v]] = 2;
    SeparationTriple out;
    out.separator.reserve(t.separator.size());
    out.right.reserve(t.right.size());
    out.left.reserve(t.left.size());
    for (VertexId v = 0; v < part.size(); ++v)
      (part[v] == 1 ? out.separator : part[v] == 2 ? out.right : out.left).push_back(v);
    return out;
  }

  bool check_pair(VertexId x, VertexId y) {
    if (x == y || work_flow_.adjacent(x, y))
      return false;
    ++verdict_.stats.pairs;
    auto res = work_flow_.run(x, y, target_);
    if (res.kind != StResult::Kind::Cut)
      return false;
    if (auto t = accept(to_input(std::move(*res.triple)), input_id(x), input_id(y)))
      return found(std::move(*t), "pairs");
    return false;
  }

  VertexId uniform_tail() { return work_.tail(rng_.below(work_.num_arcs())); }
  VertexId uniform_vertex() { return static_cast<VertexId>(rng_.below(work_.num_vertices())); }

  std::vector<VertexId> shuffled_vertices() {
    std::vector<VertexId> order(work_.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng_.below(i)]);
    return order;
  }

  // With s seeds of which one avoids the separator, checking every target
  // in both directions is exact once s >= k.
  bool seed_pairs(std::size_t seeds) {
    verdict_.stats.exhaustive = true;
    const auto seed_order = shuffled_vertices();
    const auto targets = shuffled_vertices();
    for (std::size_t i = 0; i < seeds; ++i) {
      const VertexId x = seed_order[i];
      for (VertexId y : targets) {
        if (check_pair(x, y))
          return true;
        if (g_.directed() && check_pair(y, x))
          return true;
      }
    }
    return false;
  }

  std::size_t node_scale(std::size_t nu) const {
    std::size_t nbar = 0;
    while ((nbar + 1) * (nbar + 1) + (nbar + 1) * k_ <= nu)
      ++nbar;
    return nbar;
  }

  bool pairs() {
    const std::size_t n = work_.num_vertices();
    const std::size_t m = work_.num_arcs();
    const double c = cfg_.sample_factor;
    if (4 * k_ > n) {
      const std::size_t seeds = std::max(k_, sample_count(c, cfg_.boost, 1.0, n));
      return seed_pairs(std::min(seeds, n));
    }
    nu_bar_ = framework_nu_bar(m, k_, gap_);
    std::size_t count;
    if (cfg_.scheme == Scheme::EdgeSampling)
      count = nu_bar_ == 0 ? kUnbounded
                           : sample_count(c, cfg_.boost, double(m) / double(nu_bar_), n);
    else {
      const std::size_t nbar = node_scale(nu_bar_);
      count = nbar == 0 ? kUnbounded : sample_count(c, cfg_.boost, double(n) / double(nbar), n);
    }
    if (count == kUnbounded || count >= 2 * k_ * n)
      return seed_pairs(k_);
    for (std::size_t i = 0; i < count; ++i) {
      const bool edges = cfg_.scheme == Scheme::EdgeSampling;
      const VertexId x = edges ? uniform_tail() : uniform_vertex();
      const VertexId y = edges ? uniform_tail() : uniform_vertex();
      if (check_pair(x, y))
        return true;
    }
    return false;
  }

  bool local_run(QueryOracle &oracle, VertexId x, std::size_t nu, bool reversed) {
    ++verdict_.stats.local_runs;
    LocalVcOptions opts;
    opts.strict = false;
    const auto r = local_vc(oracle, x, nu, k_, gap_, rng_.next_u64(), opts);
    verdict_.stats.queries += r.stats.queries;
    if (!r.found())
      return false;
    SeparationTriple t = to_input(r.vertex_cut());
    if (reversed)
      std::swap(t.left, t.right);
    const VertexId l = t.left.front(), rr = t.right.front();
    if (auto ok = accept(std::move(t), l, rr))
      return found(std::move(*ok), "local");
    return false;
  }

  void local() {
    const std::size_t n = work_.num_vertices();
    const std::size_t m = work_.num_arcs();
    GraphSource src(work_);
    QueryOracle oracle(src);
    std::optional<GraphSource> rev_src;
    std::optional<QueryOracle> rev_oracle;
    if (work_rev_) {
      rev_src.emplace(*work_rev_);
      rev_oracle.emplace(*rev_src);
    }
    const bool edges = cfg_.scheme == Scheme::EdgeSampling;
    for (std::size_t scale = 1;; scale *= 2) {
      const std::size_t nu = edges ? scale : scale * scale + scale * k_;
      if (nu > nu_bar_)
        break;
      const double ratio = edges ? double(m) / double(scale) : double(n) / double(scale);
      const std::size_t count = sample_count(cfg_.sample_factor, cfg_.boost, ratio, n);
      std::vector<VertexId> seeds;
      if (count >= n) {
        const std::size_t reps = std::min(
            (count + n - 1) / n, sample_count(2.0, cfg_.boost, 1.0, n));
        for (std::size_t rep = 0; rep < reps; ++rep)
          for (VertexId v : shuffled_vertices())
            seeds.push_back(v);
      } else {
        for (std::size_t i = 0; i < count; ++i)
          seeds.push_back(edges ? uniform_tail() : uniform_vertex());
      }
      for (VertexId x : seeds) {
        if (local_run(oracle, x, nu, false))
          return;
        if (rev_oracle && local_run(*rev_oracle, x, nu, true))
          return;
      }
    }
    verdict_.stats.phase = "local";
  }

  const Graph &g_;
  const Graph &work_;
  const Graph *work_rev_;
  const std::vector<VertexId> *to_input_;
  std::size_t k_;
  std::size_t gap_;
  std::size_t target_;
  FrameworkConfig cfg_;
  Rng rng_;
  StVertexFlow work_flow_;
  std::optional<StVertexFlow> input_flow_;
  std::size_t nu_bar_ = 0;
  VcVerdict verdict_;
};

void check_framework_args(std::size_t k, double eps, const FrameworkConfig &cfg) {
  if (k < 1)
    throw ParameterError("k must be at least 1");
  if (!(eps > 0.0 && eps <= 1.0))
    throw ParameterError("eps must lie in (0, 1]");
  if (cfg.sample_factor < 1.0 || cfg.boost < 1)
    throw ParameterError("sample_factor and boost must be at least 1");
}

} // namespace

VcVerdict vc_check(const Graph &g, std::size_t k, double eps, const FrameworkConfig &cfg) {
  check_framework_args(k, eps, cfg);
  if (g.directed())
    throw ParameterError("vc_check expects an undirected graph; use vc_check_directed");
  if (cfg.sparsify) {
    std::vector<VertexId> to_input;
    const Graph h = sparsify_ni_scan_order(g, k + floor_eps_k(eps, k), to_input);
    return Framework(g, h, nullptr, k, eps, cfg, &to_input).run();
  }
  return Framework(g, g, nullptr, k, eps, cfg).run();
}

VcVerdict vc_check_directed(const Graph &g, std::size_t k, double eps,
                            const FrameworkConfig &cfg) {
  check_framework_args(k, eps, cfg);
  const Graph rev = reverse_graph(g);
  return Framework(g, g, &rev, k, eps, cfg).run();
}

MinVertexCutResult min_vertex_cut(const Graph &g, double eps, const FrameworkConfig &cfg,
                                  const MinCutOptions &opts) {
  MinVertexCutResult out;
  const std::size_t n = g.num_vertices();
  bool complete = true;
  for (VertexId v = 0; v < n && complete; ++v)
    complete = distinct_neighbors(g.out_neighbors(v), v).size() + 1 == n;
  if (complete) {
    out.complete = true;
    out.kappa = n == 0 ? 0 : n - 1;
    return out;
  }
  const std::size_t max_k = opts.max_k ? std::min(opts.max_k, n - 1) : n - 1;

  auto check = [&](std::size_t k) {
    ++out.checks;
    const double e = opts.exact ? 1.0 / (2.0 * static_cast<double>(k)) : eps;
    FrameworkConfig c = cfg;
    c.seed = derive_seed(cfg.seed, 1000 + out.checks);
    return g.directed() ? vc_check_directed(g, k, e, c) : vc_check(g, k, e, c);
  };

  std::size_t lo = 0, hi = 0;
  for (std::size_t k = 1;; k = std::min(2 * k, max_k)) {
    auto v = check(k);
    if (!v.connected) {
      hi = v.cut->size();
      out.witness = std::move(v.cut);
      break;
    }
    lo = k;
    if (k >= max_k) {
      out.kappa = lo;
      out.cap_reached = true;
      return out;
    }
  }
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    auto v = check(mid);
    if (v.connected) {
      lo = mid;
      continue;
    }
    if (v.cut->size() >= hi)
      break; // approximate mode: no progress possible at this scale
    hi = v.cut->size();
    out.witness = std::move(v.cut);
  }
  out.kappa = hi;
  return out;
}

} // namespace localcut
