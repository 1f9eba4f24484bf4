#include "localcut/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "localcut/errors.hpp"

namespace localcut {

namespace {

using Json = nlohmann::json;

Instance finish(GraphBuilder &b, Json meta) {
  Instance out;
  out.graph = b.build();
  meta["n"] = out.graph.num_vertices();
  meta["m"] = out.graph.num_arcs();
  meta["directed"] = out.graph.directed();
  out.meta = std::move(meta);
  return out;
}

void add_clique(GraphBuilder &b, const std::vector<VertexId> &vs, bool directed) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = directed ? 0 : i + 1; j < vs.size(); ++j)
      if (i != j)
        b.add_edge(vs[i], vs[j]);
}

// Circulant on the listed vertices; offsets must stay below half the size
// so undirected edges are not doubled.
void add_circulant(GraphBuilder &b, const std::vector<VertexId> &vs, std::size_t r) {
  const std::size_t n = vs.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t o = 1; o <= r; ++o)
      b.add_edge(vs[i], vs[(i + o) % n]);
}

void add_dense_side(GraphBuilder &b, const std::vector<VertexId> &vs, std::size_t r, bool directed) {
  // Undirected C(1..r) needs n > 2r to be simple; directed needs n > r.
  const std::size_t need = directed ? r + 1 : 2 * r + 1;
  if (vs.size() <= need)
    add_clique(b, vs, directed);
  else
    add_circulant(b, vs, r);
}

std::vector<VertexId> range(VertexId from, std::size_t count) {
  std::vector<VertexId> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

std::vector<VertexId> sample_distinct(const std::vector<VertexId> &pool, std::size_t count, Rng &rng) {
  std::vector<VertexId> p = pool;
  count = std::min(count, p.size());
  for (std::size_t i = 0; i < count; ++i)
    std::swap(p[i], p[i + rng.below(p.size() - i)]);
  p.resize(count);
  return p;
}

std::vector<VertexId> relabel(const std::vector<VertexId> &vs, const std::vector<VertexId> &perm) {
  std::vector<VertexId> out;
  out.reserve(vs.size());
  for (VertexId v : vs)
    out.push_back(perm[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Json ids(const std::vector<VertexId> &vs) { return Json(vs); }

} // namespace

Instance gen_cycle(std::size_t n, bool directed) {
  if (n < 2)
    throw ConstructionError("cycle needs n >= 2");
  GraphBuilder b(n, directed);
  if (n == 2 && !directed) {
    b.add_edge(0, 1);
  } else {
    for (std::size_t v = 0; v < n; ++v)
      b.add_edge(static_cast<VertexId>(v), static_cast<VertexId>((v + 1) % n));
  }
  return finish(b, {{"generator", "cycle"}});
}

Instance gen_clique(std::size_t n, bool directed) {
  if (n < 1)
    throw ConstructionError("clique needs n >= 1");
  GraphBuilder b(n, directed);
  add_clique(b, range(0, n), directed);
  return finish(b, {{"generator", "clique"}});
}

Instance gen_union_of_cycles(std::size_t t, std::size_t len, bool directed) {
  if (t < 1 || len < 2)
    throw ConstructionError("union of cycles needs t >= 1 and len >= 2");
  GraphBuilder b(t * len, directed);
  for (std::size_t c = 0; c < t; ++c) {
    const auto base = static_cast<VertexId>(c * len);
    if (len == 2 && !directed) {
      b.add_edge(base, base + 1);
      continue;
    }
    for (std::size_t i = 0; i < len; ++i)
      b.add_edge(base + static_cast<VertexId>(i), base + static_cast<VertexId>((i + 1) % len));
  }
  return finish(b, {{"generator", "union_of_cycles"}, {"t", t}, {"len", len}});
}

Instance gen_union_of_cliques(std::size_t t, std::size_t size, bool directed) {
  if (t < 1 || size < 1)
    throw ConstructionError("union of cliques needs t, size >= 1");
  GraphBuilder b(t * size, directed);
  for (std::size_t c = 0; c < t; ++c)
    add_clique(b, range(static_cast<VertexId>(c * size), size), directed);
  return finish(b, {{"generator", "union_of_cliques"}, {"t", t}, {"size", size}});
}

Instance gen_ring_of_cliques(std::size_t t, std::size_t size, bool directed) {
  if (t < 2 || size < 2)
    throw ConstructionError("ring of cliques needs t >= 2 and size >= 2");
  GraphBuilder b(t * size, directed);
  for (std::size_t c = 0; c < t; ++c) {
    const auto base = static_cast<VertexId>(c * size);
    add_clique(b, range(base, size), directed);
    b.add_edge(base, static_cast<VertexId>(((c + 1) % t) * size + 1));
  }
  return finish(b, {{"generator", "ring_of_cliques"}, {"t", t}, {"size", size}});
}

Instance gen_random_regular(std::size_t n, std::size_t d, Rng::Seed seed) {
  if (d >= n || (n * d) % 2 != 0)
    throw ConstructionError("random regular graph needs d < n and n*d even");
  Rng rng(seed);
  using Edge = std::pair<VertexId, VertexId>;
  auto key = [](VertexId u, VertexId v) { return u < v ? Edge{u, v} : Edge{v, u}; };

  std::vector<VertexId> stubs;
  stubs.reserve(n * d);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t i = 0; i < d; ++i)
      stubs.push_back(static_cast<VertexId>(v));
  for (std::size_t i = stubs.size(); i > 1; --i)
    std::swap(stubs[i - 1], stubs[rng.below(i)]);

  std::vector<Edge> edges;
  std::multiset<Edge> present;
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
    edges.push_back({stubs[i], stubs[i + 1]});
    present.insert(key(stubs[i], stubs[i + 1]));
  }
  auto bad = [&](const Edge &e) { return e.first == e.second || present.count(key(e.first, e.second)) > 1; };

  // Double-edge swaps until no loop or parallel edge remains.
  const std::size_t limit = 200 * edges.size() + 1000;
  std::size_t steps = 0;
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!bad(edges[i]))
        continue;
      dirty = true;
      if (++steps > limit)
        throw ConstructionError("random regular graph: swap repair did not converge");
      const std::size_t j = rng.below(edges.size());
      if (j == i)
        continue;
      auto [a, b] = edges[i];
      auto [c, e] = edges[j];
      if (rng.bernoulli(1, 2))
        std::swap(c, e);
      const Edge x{a, c}, y{b, e};
      if (a == c || b == e || present.count(key(a, c)) || present.count(key(b, e)) || key(a, c) == key(b, e))
        continue;
      present.erase(present.find(key(edges[i].first, edges[i].second)));
      present.erase(present.find(key(edges[j].first, edges[j].second)));
      edges[i] = x;
      edges[j] = y;
      present.insert(key(a, c));
      present.insert(key(b, e));
    }
  }
  GraphBuilder b(n, false);
  for (auto [u, v] : edges)
    b.add_edge(u, v);
  return finish(b, {{"generator", "random_regular"}, {"d", d}, {"seed", seed}});
}

Instance gen_hypercube(std::size_t dim) {
  if (dim < 1 || dim > 24)
    throw ConstructionError("hypercube dimension must lie in [1, 24]");
  const std::size_t n = std::size_t{1} << dim;
  GraphBuilder b(n, false);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t bit = 0; bit < dim; ++bit) {
      const std::size_t u = v ^ (std::size_t{1} << bit);
      if (v < u)
        b.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(u));
    }
  return finish(b, {{"generator", "hypercube"}, {"dim", dim}});
}

Instance gen_circulant(std::size_t n, const std::vector<std::size_t> &offsets, bool directed) {
  if (n < 2)
    throw ConstructionError("circulant needs n >= 2");
  std::set<std::size_t> seen;
  for (std::size_t o : offsets) {
    const std::size_t r = o % n;
    if (r == 0 || !seen.insert(r).second || (!directed && (seen.count(n - r) && n - r != r)))
      throw ConstructionError("circulant offsets must be distinct and nonzero mod n");
    if (!directed && 2 * r == n)
      throw ConstructionError("undirected circulant offset n/2 would double edges");
  }
  GraphBuilder b(n, directed);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t o : offsets)
      b.add_edge(static_cast<VertexId>(v), static_cast<VertexId>((v + o) % n));
  return finish(b, {{"generator", "circulant"}, {"offsets", offsets}});
}

Instance gen_gnp(std::size_t n, double p, bool directed, Rng::Seed seed) {
  if (n < 1 || !(p >= 0.0 && p <= 1.0))
    throw ConstructionError("gnp needs n >= 1 and p in [0, 1]");
  Rng rng(seed);
  GraphBuilder b(n, directed);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = directed ? 0 : u + 1; v < n; ++v)
      if (u != v && rng.uniform01() < p)
        b.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  return finish(b, {{"generator", "gnp"}, {"p", p}, {"seed", seed}});
}

Instance gen_glued_cliques(std::size_t a, std::size_t b, std::size_t s) {
  if (s >= a || s >= b)
    throw ConstructionError("glued cliques need s < a and s < b");
  const std::size_t n = a + b - s;
  GraphBuilder g(n, false);
  add_clique(g, range(0, a), false);
  // The second clique reuses the last s vertices of the first.
  add_clique(g, range(static_cast<VertexId>(a - s), b), false);
  Instance out = finish(g, {{"generator", "glued_cliques"}, {"a", a}, {"b", b}, {"s", s}});
  out.planted_triple = SeparationTriple{range(0, a - s), range(static_cast<VertexId>(a - s), s),
                                        range(static_cast<VertexId>(a), b - s)};
  out.meta["kappa"] = s;
  return out;
}

Instance gen_planted_vertex_cut(std::size_t a, std::size_t b, std::size_t s, Rng::Seed seed) {
  if (s < 1 || a <= s || b <= s)
    throw ConstructionError("planted vertex cut needs 1 <= s < min(a, b)");
  Rng rng(derive_seed(seed, 0));
  const std::size_t r = std::max<std::size_t>(4, s);
  const auto A = range(0, a);
  const auto S = range(static_cast<VertexId>(a), s);
  const auto B = range(static_cast<VertexId>(a + s), b);
  GraphBuilder g(a + b + s, false);
  add_dense_side(g, A, r, false);
  add_dense_side(g, B, r, false);
  add_clique(g, S, false);
  for (VertexId z : S) {
    for (VertexId u : sample_distinct(A, std::min(a, r), rng))
      g.add_edge(z, u);
    for (VertexId u : sample_distinct(B, std::min(b, r), rng))
      g.add_edge(z, u);
  }
  Instance out = finish(g, {{"generator", "planted_vertex_cut"}, {"a", a}, {"b", b}, {"s", s}, {"seed", seed}});
  out.planted_triple = SeparationTriple{A, S, B};
  out.meta["kappa"] = s;
  return permute_labels(out, derive_seed(seed, 1));
}

Instance gen_planted_edge_cut(std::size_t a, std::size_t b, std::size_t c, bool directed,
                              Rng::Seed seed, std::size_t b_degree) {
  if (a < 2 || b < 2 || c < 1)
    throw ConstructionError("planted edge cut needs a, b >= 2 and c >= 1");
  if (b_degree < 1)
    throw ConstructionError("b_degree must be positive");
  const std::size_t a_conn = a - 1;
  const std::size_t need_b = directed ? b_degree + 1 : 2 * b_degree + 1;
  const std::size_t b_conn = b <= need_b ? b - 1 : (directed ? b_degree : 2 * b_degree);
  if (a_conn < c || b_conn < c)
    throw ConstructionError("sides must be at least c-edge-connected");
  Rng rng(derive_seed(seed, 0));
  const auto A = range(0, a);
  const auto B = range(static_cast<VertexId>(a), b);
  GraphBuilder g(a + b, directed);
  add_clique(g, A, directed);
  add_dense_side(g, B, b_degree, directed);
  for (std::size_t i = 0; i < c; ++i) {
    const VertexId u = A[rng.below(a)], v = B[rng.below(b)];
    g.add_edge(u, v);
    if (directed)
      g.add_arc(B[rng.below(b)], A[rng.below(a)]);
  }
  Instance out = finish(g, {{"generator", "planted_edge_cut"}, {"a", a}, {"b", b}, {"c", c},
                            {"b_degree", b_degree}, {"seed", seed}});
  out.planted_side = A;
  out.meta["min_cut"] = c;
  return permute_labels(out, derive_seed(seed, 1));
}

Instance permute_labels(const Instance &in, Rng::Seed seed) {
  const Graph &g = in.graph;
  const std::size_t n = g.num_vertices();
  Rng rng(seed);
  std::vector<VertexId> perm = range(0, n);
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);

  GraphBuilder b(n, g.directed());
  for (std::size_t v = 0; v < n; ++v) {
    bool loop_pending = false;
    for (std::size_t i = 0; i < g.out_degree(static_cast<VertexId>(v)); ++i) {
      const Arc a = g.out_arc(static_cast<VertexId>(v), i);
      // Undirected graphs re-add each pair once; a loop edge is two arcs.
      if (g.directed())
        b.add_arc(perm[a.tail], perm[a.head]);
      else if (a.tail < a.head)
        b.add_edge(perm[a.tail], perm[a.head]);
      else if (a.is_loop() && !(loop_pending = !loop_pending))
        b.add_edge(perm[a.tail], perm[a.head]);
    }
  }
  Instance out;
  out.graph = b.build();
  out.meta = in.meta;
  out.meta["relabel_seed"] = seed;
  if (in.planted_triple) {
    const auto &t = *in.planted_triple;
    out.planted_triple = SeparationTriple{relabel(t.left, perm), relabel(t.separator, perm),
                                          relabel(t.right, perm)};
    out.meta["planted_triple"] = {{"L", ids(out.planted_triple->left)},
                                  {"S", ids(out.planted_triple->separator)},
                                  {"R", ids(out.planted_triple->right)}};
  }
  if (!in.planted_side.empty()) {
    out.planted_side = relabel(in.planted_side, perm);
    out.meta["planted_side"] = ids(out.planted_side);
  }
  return out;
}

} // namespace localcut
