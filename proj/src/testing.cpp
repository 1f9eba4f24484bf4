#include "localcut/testing.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "localcut/errors.hpp"
#include "localcut/vc_local.hpp"

namespace localcut {

LocalResult gap_local_ec(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                         std::size_t gap, Rng::Seed seed) {
  if (gap >= k)
    throw ParameterError("gap must lie in [0, k)");
  LocalEcParams p;
  p.seed = x;
  p.nu = nu;
  p.k = k - gap;
  p.gap = std::min(gap, k - gap);
  p.rng_seed = seed;
  p.strict = false;
  return local_ec(oracle, p);
}

LocalResult gap_local_vc(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                         std::size_t gap, Rng::Seed seed) {
  if (gap >= k)
    throw ParameterError("gap must lie in [0, k)");
  LocalVcOptions opts;
  opts.strict = false;
  return local_vc(oracle, x, nu, k - gap, std::min(gap, k - gap), seed, opts);
}

namespace {

std::size_t log2_floor(std::size_t v) { return std::bit_width(v) - 1; }

double ln_k1(std::size_t k) { return std::log(static_cast<double>(k)) + 1.0; }

std::size_t ceil_count(double v) {
  return static_cast<std::size_t>(std::ceil(v - 1e-9));
}

double degree_factor(const TesterConfig &cfg) {
  return cfg.dbar ? std::max(1.0, static_cast<double>(cfg.k) / *cfg.dbar) : 1.0;
}

// eta_i = 2^{i+2} (L+1) / eps.
double eta(std::size_t i, std::size_t levels, double eps) {
  return std::ldexp(static_cast<double>(levels), static_cast<int>(i) + 2) / eps;
}

std::size_t eta_levels(std::size_t i, std::size_t levels, double eps) {
  return log2_floor(static_cast<std::size_t>(std::floor(eta(i, levels, eps))));
}

std::size_t cap_value(double v) {
  return v >= 1e18 ? static_cast<std::size_t>(1e18) : static_cast<std::size_t>(std::ceil(v));
}

void check_config(const TesterConfig &cfg) {
  if (cfg.k < 1)
    throw ParameterError("k must be at least 1");
  if (!(cfg.eps > 0.0 && cfg.eps < 1.0))
    throw ParameterError("eps must lie in (0, 1)");
  if (cfg.c1 <= 0.0 || cfg.c2 <= 0.0)
    throw ParameterError("sample constants must be positive");
  if (cfg.dbar && !(*cfg.dbar > 0.0))
    throw ParameterError("dbar must be positive");
}

std::size_t unbounded_shape_cap(const TesterConfig &cfg, double constant) {
  const double levels = static_cast<double>(log2_floor(cfg.k) + 1);
  return cap_value(constant * static_cast<double>(cfg.k) * levels * levels * ln_k1(cfg.k) *
                   degree_factor(cfg) / (cfg.eps * cfg.eps));
}

std::size_t bounded_shape_cap(const TesterConfig &cfg, double constant) {
  const std::size_t L = log2_floor(cfg.k);
  const double levels = static_cast<double>(L + 1);
  const double j = static_cast<double>(eta_levels(L, L + 1, cfg.eps) + 1);
  return cap_value(constant * static_cast<double>(cfg.k) * levels * levels * j * j / cfg.eps);
}

// Shared driver: query accounting across both oracles under one cap.
class Tester {
public:
  Tester(TestOracles oracles, const TesterConfig &cfg, std::size_t cap)
      : fwd_(oracles.forward), rev_(oracles.reverse), cfg_(cfg), cap_(cap), rng_(cfg.seed),
        fwd_start_(fwd_.queries()), rev_start_(rev_ ? rev_->queries() : 0),
        fwd_cap_(fwd_.cap()), rev_cap_(rev_ ? rev_->cap() : 0) {
    verdict_.cap = cap;
  }

  ~Tester() {
    fwd_.set_cap(fwd_cap_);
    if (rev_)
      rev_->set_cap(rev_cap_);
  }

  std::size_t used() const {
    return fwd_.queries() - fwd_start_ + (rev_ ? rev_->queries() - rev_start_ : 0);
  }

  // Grants `o` whatever is left of the shared budget.
  QueryOracle &arm(QueryOracle &o) {
    const std::size_t left = cap_ > used() ? cap_ - used() : 0;
    o.set_cap(o.queries() + left);
    return o;
  }

  template <class Body> TestVerdict run(Body body) {
    try {
      body();
    } catch (const BudgetExhausted &) {
      verdict_.outcome = Outcome::BudgetExhausted;
      verdict_.witness.reset();
    }
    verdict_.queries = used();
    return verdict_;
  }

  VertexId uniform_vertex() { return static_cast<VertexId>(rng_.below(fwd_.num_vertices())); }

  void reject(CutWitness w, bool on_reverse, const char *stage) {
    verdict_.outcome = Outcome::Reject;
    verdict_.witness = std::move(w);
    verdict_.on_reverse = on_reverse;
    verdict_.stage = stage;
  }

  bool rejected() const { return verdict_.outcome != Outcome::Accept; }

  // Singleton edge cut of a vertex whose list is shorter than k.
  bool edge_degree_check(VertexId v) {
    const std::size_t n = fwd_.num_vertices();
    for (QueryOracle *o : {&fwd_, rev_}) {
      if (!o || n < 2 || o->list_length(v) >= cfg_.k)
        continue;
      QueryOracle &q = arm(*o);
      EdgeCut cut;
      cut.side = {v};
      for (std::size_t i = 1; i <= q.list_length(v); ++i) {
        const auto a = q.query_edge(v, i);
        if (a && a->head != v)
          cut.crossing.push_back(*a);
      }
      reject(std::move(cut), o == rev_, "degree");
      return true;
    }
    return false;
  }

  // ({v}, N(v), rest) for a vertex with fewer than k listed arcs.
  bool vertex_degree_check(VertexId v) {
    const std::size_t n = fwd_.num_vertices();
    for (QueryOracle *o : {&fwd_, rev_}) {
      if (!o || o->list_length(v) >= cfg_.k)
        continue;
      QueryOracle &q = arm(*o);
      std::vector<VertexId> nb;
      for (std::size_t i = 1; i <= q.list_length(v); ++i) {
        const auto a = q.query_edge(v, i);
        if (a && a->head != v)
          nb.push_back(a->head);
      }
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      if (nb.size() + 1 >= n)
        continue;
      std::vector<char> taken(n, 0);
      taken[v] = 1;
      for (VertexId u : nb)
        taken[u] = 1;
      std::vector<VertexId> rest;
      for (VertexId u = 0; u < n; ++u)
        if (!taken[u])
          rest.push_back(u);
      SeparationTriple t;
      if (o == &fwd_)
        t = {{v}, std::move(nb), std::move(rest)};
      else
        t = {std::move(rest), std::move(nb), {v}};
      reject(std::move(t), false, "degree");
      return true;
    }
    return false;
  }

  // One local run per orientation; true once a cut is found.
  template <class Local> bool local_both(VertexId x, std::size_t nu, std::size_t gap, Local local) {
    for (QueryOracle *o : {&fwd_, rev_}) {
      if (!o)
        continue;
      ++verdict_.local_runs;
      LocalResult r = local(arm(*o), x, nu, cfg_.k, gap, rng_.next_u64());
      if (!r.found())
        continue;
      if (o == rev_ && std::holds_alternative<VertexCut>(*r.witness)) {
        auto t = std::get<VertexCut>(*r.witness);
        std::swap(t.left, t.right);
        reject(std::move(t), false, "local");
      } else {
        reject(std::move(*r.witness), o == rev_, "local");
      }
      return true;
    }
    return false;
  }

  Arc sample_edge() { return sample_edge_regular(arm(fwd_), rng_); }

  QueryOracle &forward() { return fwd_; }

private:
  QueryOracle &fwd_;
  QueryOracle *rev_;
  const TesterConfig &cfg_;
  std::size_t cap_;
  Rng rng_;
  std::size_t fwd_start_;
  std::size_t rev_start_;
  std::size_t fwd_cap_;
  std::size_t rev_cap_;
  TestVerdict verdict_;
};

template <class Local, class DegreeCheck>
TestVerdict unbounded(TestOracles oracles, const TesterConfig &cfg, std::size_t cap,
                      std::size_t degree_samples, std::size_t seeds, std::size_t nu_shift,
                      bool degree_only, DegreeCheck check, Local local) {
  Tester t(oracles, cfg, cap);
  return t.run([&] {
    for (std::size_t s = 0; s < degree_samples; ++s)
      if ((t.*check)(t.uniform_vertex()))
        return;
    if (degree_only)
      return;
    const std::size_t L = log2_floor(cfg.k);
    for (std::size_t s = 0; s < seeds; ++s) {
      const VertexId x = t.uniform_vertex();
      for (std::size_t i = 0; i <= L; ++i) {
        const double nu = std::ldexp(static_cast<double>(L + 1), static_cast<int>(i + nu_shift)) / cfg.eps;
        if (t.local_both(x, ceil_count(nu), (std::size_t{1} << i) - 1, local))
          return;
      }
    }
  });
}

template <class Local, class DegreeCheck>
TestVerdict bounded(TestOracles oracles, const TesterConfig &cfg, std::size_t cap,
                    std::size_t degree_samples, DegreeCheck check, Local local) {
  if (!oracles.forward.bounded() || (oracles.reverse && !oracles.reverse->bounded()))
    throw ParameterError("bounded testers need the bounded-degree model");
  Tester t(oracles, cfg, cap);
  return t.run([&] {
    for (std::size_t s = 0; s < degree_samples; ++s)
      if ((t.*check)(t.uniform_vertex()))
        return;
    const std::size_t L = log2_floor(cfg.k);
    for (std::size_t i = 0; i <= L; ++i) {
      const std::size_t J = eta_levels(i, L + 1, cfg.eps);
      for (std::size_t j = 0; j <= J; ++j) {
        const double samples = cfg.c2 * static_cast<double>((L + 1) * (J + 1)) /
                               (cfg.eps * std::ldexp(1.0, static_cast<int>(j) - static_cast<int>(i)));
        const std::size_t count = ceil_count(samples);
        for (std::size_t s = 0; s < count; ++s) {
          const VertexId x = t.sample_edge().tail;
          if (t.local_both(x, std::size_t{2} << j, (std::size_t{1} << i) - 1, local))
            return;
        }
      }
    }
  });
}

std::size_t unbounded_seeds(const TesterConfig &cfg) {
  return ceil_count(cfg.c2 * ln_k1(cfg.k) * (cfg.dbar ? cfg.k / *cfg.dbar : 1.0) / cfg.eps);
}

void check_vertex_k(const QueryOracle &o, const TesterConfig &cfg) {
  if (4 * cfg.k >= o.num_vertices())
    throw ParameterError("vertex testers need k < n/4");
}

} // namespace

bool simple_fast_path(const TesterConfig &cfg) {
  return cfg.simple_graph && cfg.eps > 4.0 / static_cast<double>(cfg.k);
}

std::size_t kec_unbounded_cap(const TesterConfig &cfg) {
  check_config(cfg);
  if (cfg.cap)
    return cfg.cap;
  if (simple_fast_path(cfg))
    return simple_degree_cap(cfg);
  return unbounded_shape_cap(cfg, 1028.0 * (cfg.c2 + 1.0) + 1.0);
}

std::size_t kvc_unbounded_cap(const TesterConfig &cfg) {
  check_config(cfg);
  return cfg.cap ? cfg.cap : unbounded_shape_cap(cfg, 4100.0 * (cfg.c2 + 1.0) + 1.0);
}

std::size_t kec_bounded_cap(const TesterConfig &cfg) {
  check_config(cfg);
  return cfg.cap ? cfg.cap : bounded_shape_cap(cfg, 515.0 * cfg.c2 + 2052.0);
}

std::size_t kvc_bounded_cap(const TesterConfig &cfg) {
  check_config(cfg);
  return cfg.cap ? cfg.cap : bounded_shape_cap(cfg, 1027.0 * cfg.c2 + 4100.0);
}

std::size_t simple_degree_cap(const TesterConfig &cfg) {
  const double e3 = cfg.eps * cfg.eps * cfg.eps;
  return cap_value((cfg.c1 + 1.0) * ln_k1(cfg.k) / e3) + cfg.k - 1;
}

TestVerdict test_kec_unbounded(TestOracles oracles, const TesterConfig &cfg) {
  const std::size_t cap = kec_unbounded_cap(cfg);
  const bool fast = simple_fast_path(cfg);
  std::size_t degree_samples = ceil_count(cfg.c1 / cfg.eps);
  if (fast && cfg.dbar)
    degree_samples = std::max(degree_samples, ceil_count(cfg.c1 * cfg.k / (cfg.eps * *cfg.dbar)));
  return unbounded(oracles, cfg, cap, degree_samples, unbounded_seeds(cfg), 2, fast,
                   &Tester::edge_degree_check, gap_local_ec);
}

TestVerdict test_kvc_unbounded(TestOracles oracles, const TesterConfig &cfg) {
  const std::size_t cap = kvc_unbounded_cap(cfg);
  check_vertex_k(oracles.forward, cfg);
  return unbounded(oracles, cfg, cap, ceil_count(cfg.c1), unbounded_seeds(cfg), 3, false,
                   &Tester::vertex_degree_check, gap_local_vc);
}

TestVerdict test_kec_bounded(TestOracles oracles, const TesterConfig &cfg) {
  const std::size_t cap = kec_bounded_cap(cfg);
  return bounded(oracles, cfg, cap, ceil_count(cfg.c1 / cfg.eps), &Tester::edge_degree_check,
                 gap_local_ec);
}

TestVerdict test_kvc_bounded(TestOracles oracles, const TesterConfig &cfg) {
  const std::size_t cap = kvc_bounded_cap(cfg);
  check_vertex_k(oracles.forward, cfg);
  return bounded(oracles, cfg, cap, ceil_count(cfg.c1), &Tester::vertex_degree_check,
                 gap_local_vc);
}

} // namespace localcut
