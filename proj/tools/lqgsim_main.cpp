#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "lqg/errors.hpp"
#include "lqg/experiments.hpp"

int main(int argc, char** argv) {
  CLI::App app{"spectral toolkit for measures and dynamics on the flat torus"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int replicas = 0;
  bool replicas_set = false;
  bool override_seiberg = false;

  const char* names[] = {"spectrum",  "gff-cov",  "gmc-moments", "green",
                         "partition", "simulate", "invariance",  "blowup"};
  for (const char* name : names) {
    auto* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "INI config file")->required();
    sub->add_option("--seed", seed, "base RNG seed")->each([&](const std::string&) {
      seed_set = true;
    });
    sub->add_option("--replicas", replicas, "Monte Carlo replicas")
        ->each([&](const std::string&) { replicas_set = true; });
    sub->add_option("--out", out_dir, "output directory");
    sub->add_flag("--override-seiberg", override_seiberg,
                  "run despite failed admissibility bounds");
  }

  CLI11_PARSE(app, argc, argv);

  lqg::ExperimentConfig run;
  run.experiment = app.get_subcommands().front()->get_name();
  run.out_dir = out_dir;
  run.override_seiberg = override_seiberg;
  if (seed_set) run.seed = seed;
  if (replicas_set) run.replicas = replicas;

  try {
    run.config = lqg::Config::from_file(config_path);
    const int code = lqg::run_experiment(run);
    if (code == lqg::exit_ok)
      std::printf("%s: pass\n", run.experiment.c_str());
    else
      std::printf("%s: FAIL (see %s/report.json)\n", run.experiment.c_str(),
                  out_dir.c_str());
    return code;
  } catch (const lqg::config_error& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return lqg::exit_config;
  } catch (const lqg::resource_error& e) {
    std::fprintf(stderr, "resource error: %s\n", e.what());
    return lqg::exit_resource;
  } catch (const lqg::check_error& e) {
    std::fprintf(stderr, "check failed: %s\n", e.what());
    return lqg::exit_assert;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return lqg::exit_assert;
  }
}
