#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "localcut/rng.hpp"

namespace localcut {

/// One row of a query/runtime curve.
struct CurvePoint {
  std::size_t n = 0;
  std::size_t k = 0;
  double eps = 0.0;
  double queries_p50 = 0.0;
  double queries_p95 = 0.0;
  double wall_ms_p50 = 0.0;
};

/// Self-contained record of one suite run. Trial records depend only on
/// the command and the seed; timings live in `aggregate` and `curve`.
struct RunReport {
  std::string suite;
  std::string command;
  Rng::Seed seed = 0;
  std::vector<nlohmann::json> trials;
  nlohmann::json aggregate = nlohmann::json::object();
  nlohmann::json constants = nlohmann::json::object();
  std::vector<CurvePoint> curve;
  double wall_ms = 0.0;
  bool pass = false;
  std::string measured;   ///< one-line summary of the measured values
  std::string threshold;  ///< the pass condition in words
};

nlohmann::json to_json(const RunReport &r);

/// CSV with columns suite,n,k,eps,queries_p50,queries_p95,wall_ms_p50.
/// No reports (or no curve rows) gives the header alone.
std::string emit_plot_data(const std::vector<RunReport> &reports);

struct SuiteOptions {
  Rng::Seed seed = 20240601;
  std::size_t threads = 1;
  /// Multiplies trial counts; values below 1 give quick smoke runs.
  double scale = 1.0;
  bool keep_trials = true;
};

struct SuiteInfo {
  int criterion;
  std::string name;
  std::string title;
  /// Wall-clock criteria depend on the host; they are reported but do not
  /// set the acceptance exit status.
  bool soft = false;
};

const std::vector<SuiteInfo> &suite_list();

/// Runs one acceptance suite. Throws std::invalid_argument for an unknown
/// name.
RunReport run_suite(const std::string &name, const SuiteOptions &opts = {});

/// Calls fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)> &fn);

/// Quantile by linear interpolation; 0 for an empty sample.
double quantile(std::vector<double> values, double q);

} // namespace localcut
