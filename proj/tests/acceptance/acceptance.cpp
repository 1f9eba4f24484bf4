// Runs every acceptance suite and prints one PASS/FAIL line per criterion.
#include <algorithm>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "localcut/report.hpp"

int main(int argc, char **argv) {
  CLI::App app{"acceptance suites"};
  localcut::SuiteOptions opts;
  std::vector<std::string> only;
  std::string json_out;
  app.add_option("--rng-seed", opts.seed, "master seed");
  app.add_option("--threads", opts.threads, "worker threads for trials");
  app.add_option("--scale", opts.scale, "trial count multiplier");
  app.add_option("--only", only, "suite names to run");
  app.add_option("--json-out", json_out, "write all reports as JSON");
  CLI11_PARSE(app, argc, argv);
  opts.keep_trials = !json_out.empty();

  nlohmann::json all = nlohmann::json::array();
  int failures = 0, soft_failures = 0;
  for (const auto &s : localcut::suite_list()) {
    if (!only.empty() && std::find(only.begin(), only.end(), s.name) == only.end())
      continue;
    localcut::RunReport r;
    try {
      r = localcut::run_suite(s.name, opts);
    } catch (const std::exception &e) {
      r.suite = s.name;
      r.measured = std::string("error: ") + e.what();
    }
    (s.soft ? soft_failures : failures) += !r.pass;
    std::cout << (r.pass ? "PASS" : s.soft ? "FAIL (soft, not gating)" : "FAIL") << "  [" << s.criterion << "] " << s.title << " ("
              << s.name << "): " << r.measured << "  | required: " << r.threshold << std::endl;
    if (!json_out.empty())
      all.push_back(localcut::to_json(r));
  }
  if (!json_out.empty())
    std::ofstream(json_out) << all.dump(2) << '\n';
  if (failures == 0 && soft_failures == 0)
    std::cout << "all criteria passed" << std::endl;
  else
    std::cout << failures << " gating and " << soft_failures << " soft criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
