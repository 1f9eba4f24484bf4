// Command-line front end: local cut runs, global connectivity, testers,
// reference oracles, generators and the acceptance suites.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "localcut/bruteforce.hpp"
#include "localcut/errors.hpp"
#include "localcut/generators.hpp"
#include "localcut/global_vc.hpp"
#include "localcut/local_ec.hpp"
#include "localcut/report.hpp"
#include "localcut/testing.hpp"
#include "localcut/vc_local.hpp"

using namespace localcut;
using Json = nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

struct Globals {
  std::size_t threads = 1;
  std::optional<Rng::Seed> seed;
  std::string json_out;
  std::string command;

  // An explicit seed, or a fresh one that is printed so the run can be
  // repeated.
  Rng::Seed resolve_seed() {
    if (!seed) {
      seed = std::random_device{}() * 0x100000000ULL + std::random_device{}();
      std::cerr << "rng-seed: " << *seed << '\n';
    }
    return *seed;
  }
};

void emit(const Globals &g, const Json &j) {
  if (g.json_out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(g.json_out);
  if (!out)
    throw std::runtime_error("cannot write " + g.json_out);
  out << j.dump(2) << '\n';
}

Json pairs_json(const std::vector<Arc> &arcs) {
  Json out = Json::array();
  for (const Arc &a : arcs)
    out.push_back({a.tail, a.head});
  return out;
}

Json witness_json(const CutWitness &w) {
  if (const auto *e = std::get_if<EdgeCut>(&w))
    return {{"type", "edge"}, {"side", e->side}, {"crossing", pairs_json(e->crossing)}};
  const auto &t = std::get<VertexCut>(w);
  return {{"type", "vertex"},
          {"left_size", t.left.size()},
          {"separator", t.separator},
          {"right_size", t.right.size()}};
}

std::size_t volume(const Graph &g, const std::vector<VertexId> &side) {
  std::size_t vol = 0;
  for (VertexId v : side)
    vol += g.out_degree(v);
  return vol;
}

// ---------------------------------------------------------------------------
// localec / localvc

struct LocalArgs {
  std::string graph;
  bool directed = false;
  VertexId seed_vertex = 0;
  std::size_t nu = 0;
  std::size_t k = 1;
  std::optional<std::size_t> gap;
  std::optional<double> eps;
  std::size_t trials = 1;
  std::string variant = "bfs";
};

void add_local_options(CLI::App *cmd, LocalArgs &a, bool edge) {
  cmd->add_option("--graph", a.graph, "edge list file")->required();
  cmd->add_flag("--directed", a.directed, "read arcs instead of edges");
  cmd->add_option("--seed-vertex", a.seed_vertex, "start vertex x")->required();
  cmd->add_option("--nu", a.nu, "volume parameter")->required();
  cmd->add_option("--k", a.k, "cut threshold")->required();
  auto *gap = cmd->add_option("--gap", a.gap, "slack added to k");
  auto *eps = cmd->add_option("--eps", a.eps, "gap = floor(eps k)");
  gap->excludes(eps);
  cmd->add_option("--trials", a.trials, "independent runs");
  if (edge)
    cmd->add_option("--variant", a.variant, "bfs or dfs (dfs needs --eps)")
        ->check(CLI::IsMember({"bfs", "dfs"}));
}

void run_local(Globals &gl, const LocalArgs &a, bool edge) {
  const Graph g = load_graph_file(a.graph, a.directed);
  const Rng::Seed master = gl.resolve_seed();
  const std::size_t gap = a.gap ? *a.gap : a.eps ? floor_eps_k(*a.eps, a.k) : 0;
  if (a.variant == "dfs" && !a.eps)
    throw ParameterError("the dfs variant needs --eps");

  std::vector<Json> trials(a.trials);
  parallel_for(a.trials, gl.threads, [&](std::size_t i) {
    GraphSource source(g);
    QueryOracle oracle(source);
    const Rng::Seed seed = derive_seed(master, i);
    const auto t0 = Clock::now();
    LocalResult r;
    if (!edge) {
      r = local_vc(oracle, a.seed_vertex, a.nu, a.k, gap, seed);
    } else if (a.variant == "dfs") {
      r = local_ec_dfs(oracle, a.seed_vertex, a.nu, a.k, *a.eps, seed);
    } else {
      LocalEcParams p;
      p.seed = a.seed_vertex;
      p.nu = a.nu;
      p.k = a.k;
      p.gap = gap;
      p.rng_seed = seed;
      r = local_ec(oracle, p);
    }
    const double ms = ms_since(t0);
    Json j = {{"trial", i}, {"result", r.found() ? "found" : "bottom"},
              {"queries", r.stats.queries}, {"time", ms}};
    if (r.found()) {
      j["cut_size"] = witness_size(*r.witness);
      if (edge) {
        j["volume"] = volume(g, r.edge_cut().side);
        j["side_size"] = r.edge_cut().side.size();
      } else {
        const auto &t = r.vertex_cut();
        j["volume"] = volume(g, t.left);
        j["L"] = t.left.size();
        j["S"] = t.separator.size();
        j["R"] = t.right.size();
      }
      j["witness"] = witness_json(*r.witness);
    }
    trials[i] = std::move(j);
  });

  std::size_t found = 0;
  for (const auto &t : trials)
    found += t["result"] == "found";
  emit(gl, {{"command", gl.command},
            {"rng_seed", master},
            {"params", {{"x", a.seed_vertex}, {"nu", a.nu}, {"k", a.k}, {"gap", gap}}},
            {"trials", trials},
            {"found_rate", double(found) / double(std::max<std::size_t>(1, a.trials))}});
}

// ---------------------------------------------------------------------------
// vc

struct VcArgs {
  std::string graph;
  std::optional<std::size_t> k;
  double eps = 0.5;
  bool exact = false;
  bool directed = false;
  std::string scheme = "edge";
  double sample_factor = 2.0;
  std::size_t boost = 1;
};

void run_vc(Globals &gl, const VcArgs &a) {
  const Graph g = load_graph_file(a.graph, a.directed);
  FrameworkConfig cfg;
  cfg.seed = gl.resolve_seed();
  cfg.scheme = a.scheme == "node" ? Scheme::NodeSampling : Scheme::EdgeSampling;
  cfg.sample_factor = a.sample_factor;
  cfg.boost = a.boost;
  cfg.eps = a.eps;
  Json out = {{"command", gl.command}, {"rng_seed", cfg.seed}};
  const auto t0 = Clock::now();
  if (a.k) {
    const double eps = a.exact ? 1.0 / (2.0 * double(*a.k)) : a.eps;
    const VcVerdict v = a.directed ? vc_check_directed(g, *a.k, eps, cfg)
                                   : vc_check(g, *a.k, eps, cfg);
    out["verdict"] = v.connected ? "connected" : "cut";
    out["k"] = *a.k;
    out["eps"] = eps;
    out["kappa"] = v.connected ? Json() : Json(v.cut->size());
    out["cut"] = v.connected ? Json() : witness_json(*v.cut);
    out["samples_used"] = v.stats.pairs + v.stats.local_runs;
    out["pairs"] = v.stats.pairs;
    out["local_runs"] = v.stats.local_runs;
    out["queries"] = v.stats.queries;
    out["phase"] = v.stats.phase;
  } else {
    MinCutOptions opts;
    opts.exact = a.exact;
    const MinVertexCutResult r = min_vertex_cut(g, a.eps, cfg, opts);
    out["verdict"] = r.witness ? "cut" : "connected";
    out["kappa"] = r.kappa;
    out["complete"] = r.complete;
    out["cap_reached"] = r.cap_reached;
    out["cut"] = r.witness ? witness_json(*r.witness) : Json();
    out["checks"] = r.checks;
  }
  out["wall_ms"] = ms_since(t0);
  emit(gl, out);
}

// ---------------------------------------------------------------------------
// test

struct TestArgs {
  std::string property = "kec";
  std::string model = "unbounded";
  std::string graph;
  bool directed = false;
  std::size_t k = 1;
  double eps = 0.1;
  std::optional<double> dbar;
  std::optional<std::size_t> d;
  bool simple = false;
  std::size_t trials = 1;
};

void run_test(Globals &gl, const TestArgs &a) {
  const Graph g = load_graph_file(a.graph, a.directed);
  const Graph rev = reverse_graph(g);
  const Rng::Seed master = gl.resolve_seed();
  const bool bounded = a.model == "bounded";
  std::size_t d = 0;
  if (bounded)
    d = a.d ? *a.d : std::max(g.max_out_degree(), rev.max_out_degree());

  std::vector<Json> trials(a.trials);
  std::vector<Outcome> outcomes(a.trials);
  parallel_for(a.trials, gl.threads, [&](std::size_t i) {
    GraphSource fs(g), rs(rev);
    std::optional<QueryOracle> fwd, bwd;
    if (bounded) {
      fwd.emplace(fs, BoundedRegular{d});
      bwd.emplace(rs, BoundedRegular{d});
    } else {
      fwd.emplace(fs);
      bwd.emplace(rs);
    }
    TesterConfig cfg;
    cfg.k = a.k;
    cfg.eps = a.eps;
    cfg.dbar = a.dbar;
    cfg.simple_graph = a.simple;
    cfg.seed = derive_seed(master, i);
    TestOracles oracles{*fwd, a.directed ? &*bwd : nullptr};
    const auto t0 = Clock::now();
    TestVerdict v;
    if (a.property == "kec")
      v = bounded ? test_kec_bounded(oracles, cfg) : test_kec_unbounded(oracles, cfg);
    else
      v = bounded ? test_kvc_bounded(oracles, cfg) : test_kvc_unbounded(oracles, cfg);
    const char *names[] = {"accept", "reject", "budget_exhausted"};
    Json j = {{"trial", i},
              {"verdict", names[static_cast<int>(v.outcome)]},
              {"queries", v.queries},
              {"cap", v.cap},
              {"stage", v.stage},
              {"time", ms_since(t0)}};
    if (v.witness) {
      j["witness"] = witness_json(*v.witness);
      j["on_reverse"] = v.on_reverse;
    }
    outcomes[i] = v.outcome;
    trials[i] = std::move(j);
  });

  std::size_t counts[3] = {0, 0, 0};
  for (Outcome o : outcomes)
    ++counts[static_cast<int>(o)];
  const double total = double(std::max<std::size_t>(1, a.trials));
  Json out = {{"command", gl.command},
              {"rng_seed", master},
              {"trials", trials},
              {"aggregate",
               {{"accept_rate", counts[0] / total},
                {"reject_rate", counts[1] / total},
                {"budget_exhausted_rate", counts[2] / total}}}};
  if (bounded)
    out["d"] = d;
  emit(gl, out);
}

// ---------------------------------------------------------------------------
// oracle

struct OracleArgs {
  std::string graph;
  bool directed = false;
  VertexId x = 0;
  std::size_t nu = 0;
  std::size_t kmax = 0;
  std::string augment = "bfs";
  oracle::OracleLimits limits;
};

void run_oracle(Globals &gl, const std::string &which, const OracleArgs &a) {
  const Graph g = load_graph_file(a.graph, a.directed);
  const auto order = a.augment == "dfs" ? oracle::Augment::Dfs : oracle::Augment::Bfs;
  Json out = {{"command", gl.command}};
  const auto t0 = Clock::now();
  if (which == "edgecut") {
    const auto r = oracle::bf_min_edge_cut(g, order, a.limits);
    out["value"] = r.value;
    out["side"] = r.side;
  } else if (which == "vertexcut") {
    const auto r = oracle::bf_min_vertex_cut(g, order, a.limits);
    out["kappa"] = r.kappa;
    out["complete"] = r.complete;
    out["cut"] = r.triple ? witness_json(*r.triple) : Json();
  } else {
    const auto r = oracle::bf_local_witness(g, a.x, a.nu, a.kmax, a.limits);
    out["status"] = r.status == oracle::Search::Exact ? "exact" : "unknown";
    out["exists"] = r.exists;
    out["cut"] = r.cut;
    out["vol"] = r.vol;
    out["side"] = r.side;
  }
  out["wall_ms"] = ms_since(t0);
  emit(gl, out);
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string family;
  std::size_t n = 0, t = 0, size = 0, d = 0, dim = 0, a = 0, b = 0, s = 0, c = 0;
  std::vector<std::size_t> offsets;
  double p = 0.0;
  bool directed = false;
  bool permute = false;
  std::string out;
};

Instance generate(const GenArgs &a, Rng::Seed seed) {
  const std::string &f = a.family;
  if (f == "cycle") return gen_cycle(a.n, a.directed);
  if (f == "clique") return gen_clique(a.n, a.directed);
  if (f == "cycles") return gen_union_of_cycles(a.t, a.size, a.directed);
  if (f == "cliques") return gen_union_of_cliques(a.t, a.size, a.directed);
  if (f == "ring-of-cliques") return gen_ring_of_cliques(a.t, a.size, a.directed);
  if (f == "regular") return gen_random_regular(a.n, a.d, seed);
  if (f == "hypercube") return gen_hypercube(a.dim);
  if (f == "circulant") return gen_circulant(a.n, a.offsets, a.directed);
  if (f == "gnp") return gen_gnp(a.n, a.p, a.directed, seed);
  if (f == "glued-cliques") return gen_glued_cliques(a.a, a.b, a.s);
  if (f == "planted-vertex-cut") return gen_planted_vertex_cut(a.a, a.b, a.s, seed);
  return gen_planted_edge_cut(a.a, a.b, a.c, a.directed, seed, a.d ? a.d : 4);
}

void run_gen(Globals &gl, const GenArgs &a) {
  const Rng::Seed seed = gl.resolve_seed();
  Instance inst = generate(a, seed);
  if (a.permute)
    inst = permute_labels(inst, derive_seed(seed, 1));
  if (!a.out.empty()) {
    std::ofstream file(a.out);
    if (!file)
      throw std::runtime_error("cannot write " + a.out);
    file << to_edge_list(inst.graph);
  } else if (gl.json_out.empty()) {
    std::cout << to_edge_list(inst.graph);
    std::cerr << inst.meta.dump() << '\n';
    return;
  }
  Json meta = inst.meta;
  meta["command"] = gl.command;
  meta["rng_seed"] = seed;
  emit(gl, meta);
}

// ---------------------------------------------------------------------------
// suite

void run_suites(Globals &gl, const std::vector<std::string> &names, double scale,
                const std::string &plot_out) {
  SuiteOptions opts;
  opts.seed = gl.resolve_seed();
  opts.threads = gl.threads;
  opts.scale = scale;
  std::vector<RunReport> reports;
  bool all_pass = true;
  for (const auto &s : suite_list()) {
    if (std::find(names.begin(), names.end(), "all") == names.end() &&
        std::find(names.begin(), names.end(), s.name) == names.end())
      continue;
    reports.push_back(run_suite(s.name, opts));
    const RunReport &r = reports.back();
    all_pass = all_pass && (r.pass || s.soft);
    std::cerr << (r.pass ? "PASS" : "FAIL") << "  [" << s.criterion << "] " << s.name << ": "
              << r.measured << '\n';
  }
  if (reports.empty())
    throw std::invalid_argument("no suite matches the given names");
  if (!plot_out.empty()) {
    std::ofstream file(plot_out);
    if (!file)
      throw std::runtime_error("cannot write " + plot_out);
    file << emit_plot_data(reports);
  }
  Json out = Json::array();
  for (const auto &r : reports)
    out.push_back(to_json(r));
  emit(gl, reports.size() == 1 ? out[0] : out);
  if (!all_pass)
    throw std::runtime_error("suite failed");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"local cut detection, vertex connectivity and connectivity testers"};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();
  Globals gl;
  app.add_option("--threads", gl.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--rng-seed", gl.seed, "master seed; printed when omitted");
  app.add_option("--json-out", gl.json_out, "write JSON here instead of stdout");
  for (int i = 0; i < argc; ++i)
    gl.command += (i ? " " : "") + std::string(argv[i]);

  LocalArgs ec_args, vc_local_args;
  auto *localec = app.add_subcommand("localec", "local edge-cut detection from a seed");
  add_local_options(localec, ec_args, true);
  auto *localvc = app.add_subcommand("localvc", "local vertex-cut detection from a seed");
  add_local_options(localvc, vc_local_args, false);

  VcArgs vc_args;
  auto *vc = app.add_subcommand("vc", "k-vertex-connectivity, or kappa without --k");
  vc->add_option("--graph", vc_args.graph, "edge list file")->required();
  vc->add_option("--k", vc_args.k, "connectivity to decide");
  vc->add_option("--eps", vc_args.eps, "approximation slack");
  vc->add_flag("--exact", vc_args.exact, "use eps = 1/(2k) so cuts are below k");
  vc->add_flag("--directed", vc_args.directed, "read arcs instead of edges");
  vc->add_option("--scheme", vc_args.scheme, "edge or node sampling")
      ->check(CLI::IsMember({"edge", "node"}));
  vc->add_option("--sample-factor", vc_args.sample_factor, "sample count multiplier");
  vc->add_option("--boost", vc_args.boost, "repetitions");

  TestArgs test_args;
  auto *test = app.add_subcommand("test", "property testers for k-edge/k-vertex connectivity");
  test->add_option("--property", test_args.property)->check(CLI::IsMember({"kec", "kvc"}));
  test->add_option("--model", test_args.model)->check(CLI::IsMember({"unbounded", "bounded"}));
  test->add_option("--graph", test_args.graph, "edge list file")->required();
  test->add_flag("--directed", test_args.directed, "read arcs instead of edges");
  test->add_option("--k", test_args.k)->required();
  test->add_option("--eps", test_args.eps)->required();
  auto *dbar = test->add_option("--dbar", test_args.dbar, "known average degree");
  auto *dopt = test->add_option("--d", test_args.d, "degree bound (bounded model)");
  dbar->excludes(dopt);
  test->add_flag("--simple", test_args.simple, "the input is a simple graph");
  test->add_option("--trials", test_args.trials);

  OracleArgs oracle_args;
  std::string oracle_kind;
  auto *orc = app.add_subcommand("oracle", "exact reference answers on small graphs");
  orc->add_option("kind", oracle_kind, "edgecut, vertexcut or localwitness")
      ->required()
      ->check(CLI::IsMember({"edgecut", "vertexcut", "localwitness"}));
  orc->add_option("--graph", oracle_args.graph, "edge list file")->required();
  orc->add_flag("--directed", oracle_args.directed, "read arcs instead of edges");
  orc->add_option("--seed-vertex", oracle_args.x, "localwitness: vertex x");
  orc->add_option("--nu", oracle_args.nu, "localwitness: volume bound");
  orc->add_option("--kmax", oracle_args.kmax, "localwitness: cut bound for exists");
  orc->add_option("--augment", oracle_args.augment)->check(CLI::IsMember({"bfs", "dfs"}));
  orc->add_option("--max-n", oracle_args.limits.max_n, "subset enumeration limit");
  orc->add_option("--node-budget", oracle_args.limits.node_budget, "branch and bound limit");
  orc->add_flag("--first-hit", oracle_args.limits.first_hit,
                "localwitness: stop at the first set with cut <= kmax");

  GenArgs gen_args;
  auto *gen = app.add_subcommand("gen", "instance generators; edge list plus metadata");
  gen->add_option("family", gen_args.family)
      ->required()
      ->check(CLI::IsMember({"cycle", "clique", "cycles", "cliques", "ring-of-cliques", "regular",
                             "hypercube", "circulant", "gnp", "glued-cliques",
                             "planted-vertex-cut", "planted-edge-cut"}));
  gen->add_option("--n", gen_args.n);
  gen->add_option("--t", gen_args.t, "number of components");
  gen->add_option("--size", gen_args.size, "component size");
  gen->add_option("--d", gen_args.d, "degree");
  gen->add_option("--dim", gen_args.dim);
  gen->add_option("--offsets", gen_args.offsets)->delimiter(',');
  gen->add_option("--p", gen_args.p);
  gen->add_option("--a", gen_args.a, "side A size");
  gen->add_option("--b", gen_args.b, "side B size");
  gen->add_option("--s", gen_args.s, "separator size");
  gen->add_option("--c", gen_args.c, "planted edge cut size");
  gen->add_flag("--directed", gen_args.directed);
  gen->add_flag("--permute", gen_args.permute, "relabel vertices at random");
  gen->add_option("--out", gen_args.out, "edge list file (stdout otherwise)");

  std::vector<std::string> suite_names;
  double scale = 1.0;
  std::string plot_out;
  auto *suite = app.add_subcommand("suite", "acceptance suites");
  suite->add_option("names", suite_names, "suite names or 'all'")->required();
  suite->add_option("--scale", scale, "trial count multiplier");
  suite->add_option("--plot-out", plot_out, "CSV of query and runtime curves");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*localec)
      run_local(gl, ec_args, true);
    else if (*localvc)
      run_local(gl, vc_local_args, false);
    else if (*vc)
      run_vc(gl, vc_args);
    else if (*test)
      run_test(gl, test_args);
    else if (*orc)
      run_oracle(gl, oracle_kind, oracle_args);
    else if (*gen)
      run_gen(gl, gen_args);
    else if (*suite)
      run_suites(gl, suite_names, scale, plot_out);
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
