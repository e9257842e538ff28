#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "fitres/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"fitres: minimal graded free resolutions and ideals of minors"};
  app.require_subcommand(1);

  std::string scenario_path;
  uint64_t seed = 1;
  int cap = 0;
  std::string report_mode = "text";

  auto* run = app.add_subcommand("run", "run one scenario file");
  run->add_option("scenario", scenario_path, "scenario file")->required();
  run->add_option("--seed", seed, "seed for randomized suites");
  run->add_option("--cap", cap, "extra degree slack for every resolution");
  run->add_option("--report", report_mode, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  std::string dir = "scenarios";
  auto* check_all = app.add_subcommand("check-all", "run every bundled scenario");
  check_all->add_option("--dir", dir, "directory of .scn files");
  check_all->add_option("--seed", seed, "seed for randomized suites");

  CLI11_PARSE(app, argc, argv);

  fitres::ScenarioOptions opts;
  opts.seed = seed;
  opts.cap_override = cap;
  opts.structured = report_mode == "structured";

  if (run->parsed()) {
    auto result = fitres::run_scenario_file(scenario_path, opts);
    std::cout << result.report;
    return result.exit_code;
  }

  // check-all: deterministic order; 1 beats 2 beats 0
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.path().extension() == ".scn") files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    std::cerr << "no .scn files under " << dir << "\n";
    return 1;
  }
  int rc = 0;
  for (const auto& f : files) {
    auto result = fitres::run_scenario_file(f, opts);
    std::cout << result.report << "\n";
    if (result.exit_code == 1) rc = 1;
    else if (result.exit_code == 2 && rc != 1) rc = 2;
  }
  return rc;
}
