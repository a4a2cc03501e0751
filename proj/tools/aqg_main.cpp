// Command-line front end: run | sweep | check-lemmas | twin | galerkin, each
// driven by one config file. Exit codes: 0 success / invariants hold, 1 a
// monitored invariant failed, 2 blow-up, 3 usage or config error.

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "aqg/config.hpp"
#include "aqg/runner.hpp"

namespace {

int with_config(const std::string& path, int (*command)(const aqg::RunConfig&)) {
  const aqg::ConfigParse parsed = aqg::parse_config_file(path);
  if (!parsed.ok()) {
    std::fprintf(stderr, "invalid config '%s':\n", path.c_str());
    for (const std::string& e : parsed.errors)
      std::fprintf(stderr, "  %s\n", e.c_str());
    return 3;
  }
  try {
    return command(*parsed.config);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anisotropic quasi-geostrophic simulator and estimate checker"};
  app.require_subcommand(1);

  std::string config_path;
  int (*command)(const aqg::RunConfig&) = nullptr;

  auto add = [&](const char* name, const char* help, int (*fn)(const aqg::RunConfig&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("config", config_path, "config file")->required();
    sub->callback([&command, fn] { command = fn; });
  };

  add("run", "simulate one configuration and apply the monitors", aqg::run_experiment);
  add("sweep", "run the same data across an alpha x beta grid", aqg::run_sweep);
  add("check-lemmas", "evaluate the inequality corpus", aqg::run_lemma_checks);
  add("twin", "perturbation growth and linear-response study", aqg::run_twin);
  add("galerkin", "cutoff-pair convergence study", aqg::run_galerkin);

  CLI11_PARSE(app, argc, argv);
  return with_config(config_path, command);
}
