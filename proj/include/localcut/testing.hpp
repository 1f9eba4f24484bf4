#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "localcut/local_ec.hpp"
#include "localcut/oracle.hpp"
#include "localcut/rng.hpp"
#include "localcut/witness.hpp"

namespace localcut {

/// Local edge cut with a gap: runs the engine with cut target k-gap and
/// slack min(gap, k-gap). A returned cut always has size < k; a set with
/// vol <= nu and cut < k-gap is found with probability >= 3/4.
LocalResult gap_local_ec(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                         std::size_t gap, Rng::Seed seed);

/// Vertex version over the split graph; returned separators have < k
/// vertices.
LocalResult gap_local_vc(QueryOracle &oracle, VertexId x, std::size_t nu, std::size_t k,
                         std::size_t gap, Rng::Seed seed);

struct TesterConfig {
  std::size_t k = 1;
  double eps = 0.1;
  std::optional<double> dbar;  ///< average degree m/n, when known
  bool simple_graph = false;
  double c1 = 8.0;             ///< degree-check samples
  double c2 = 12.0;            ///< seed samples
  Rng::Seed seed = 1;
  std::size_t cap = 0;         ///< 0: the tester's default cap
};

enum class Outcome { Accept, Reject, BudgetExhausted };

struct TestVerdict {
  Outcome outcome = Outcome::Accept;
  /// Edge cuts found on the reverse graph stay in its orientation and set
  /// `on_reverse`; separation triples are always given for the input graph.
  std::optional<CutWitness> witness;
  bool on_reverse = false;
  std::string stage;           ///< "degree" or "local"
  std::size_t queries = 0;
  std::size_t cap = 0;
  std::size_t local_runs = 0;
};

/// The forward oracle and, for directed graphs, an oracle over the reverse
/// graph. Undirected inputs pass no reverse oracle.
struct TestOracles {
  QueryOracle &forward;
  QueryOracle *reverse = nullptr;
};

TestVerdict test_kec_unbounded(TestOracles oracles, const TesterConfig &cfg);
TestVerdict test_kec_bounded(TestOracles oracles, const TesterConfig &cfg);
TestVerdict test_kvc_unbounded(TestOracles oracles, const TesterConfig &cfg);
TestVerdict test_kvc_bounded(TestOracles oracles, const TesterConfig &cfg);

/// Default caps, fixed from the configuration before any query:
///   kec unbounded  C k (L+1)^2 (ln k + 1) f / eps^2,  C = 1028 (c2+1) + 1
///   kvc unbounded  C k (L+1)^2 (ln k + 1) f / eps^2,  C = 4100 (c2+1) + 1
///   kec bounded    C k (L+1)^2 (J+1)^2 / eps,         C = 515 c2 + 2052
///   kvc bounded    C k (L+1)^2 (J+1)^2 / eps,         C = 1027 c2 + 4100
/// with L = floor(log2 k), J = floor(log2 eta_L), f = max(1, k/dbar) when
/// dbar is known. The simple-graph degree path is capped by
/// C (ln k + 1) / eps^3 + k - 1 with C = c1 + 1.
std::size_t kec_unbounded_cap(const TesterConfig &cfg);
std::size_t kvc_unbounded_cap(const TesterConfig &cfg);
std::size_t kec_bounded_cap(const TesterConfig &cfg);
std::size_t kvc_bounded_cap(const TesterConfig &cfg);
std::size_t simple_degree_cap(const TesterConfig &cfg);

/// True when test_kec_unbounded stops after its degree checks.
bool simple_fast_path(const TesterConfig &cfg);

} // namespace localcut
