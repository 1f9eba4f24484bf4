#include "localcut/report.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace localcut {

nlohmann::json to_json(const RunReport &r) {
  nlohmann::json curve = nlohmann::json::array();
  for (const auto &p : r.curve)
    curve.push_back({{"n", p.n}, {"k", p.k}, {"eps", p.eps}, {"queries_p50", p.queries_p50},
                     {"queries_p95", p.queries_p95}, {"wall_ms_p50", p.wall_ms_p50}});
  return {{"suite", r.suite},       {"command", r.command},     {"rng_seed", r.seed},
          {"pass", r.pass},         {"measured", r.measured},   {"threshold", r.threshold},
          {"wall_ms", r.wall_ms},   {"constants", r.constants}, {"aggregate", r.aggregate},
          {"curve", curve},         {"trials", r.trials}};
}

std::string emit_plot_data(const std::vector<RunReport> &reports) {
  std::ostringstream out;
  out << "suite,n,k,eps,queries_p50,queries_p95,wall_ms_p50\n";
  for (const auto &r : reports)
    for (const auto &p : r.curve)
      out << r.suite << ',' << p.n << ',' << p.k << ',' << p.eps << ',' << p.queries_p50 << ','
          << p.queries_p95 << ',' << p.wall_ms_p50 << '\n';
  return out.str();
}

void parallel_for(std::size_t count, std::size_t threads,
                  const std::function<void(std::size_t)> &fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back(worker);
  for (auto &t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

double quantile(std::vector<double> values, double q) {
  if (values.empty())
    return 0.0;
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

} // namespace localcut
