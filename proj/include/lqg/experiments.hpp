#pragma once
#include <optional>
#include <string>

#include "lqg/config.hpp"

namespace lqg {

// CLI-facing run description: a named experiment, its config, and the
// command-line overrides
struct ExperimentConfig {
  std::string experiment;
  Config config;
  std::optional<std::uint64_t> seed;
  std::optional<int> replicas;
  std::string out_dir = ".";
  bool override_seiberg = false;
};

// dispatches to one of: spectrum, gff-cov, gmc-moments, green, partition,
// simulate, invariance, blowup.  returns an exit_code value; config and
// resource problems surface as exceptions for the caller to map
int run_experiment(const ExperimentConfig& run);

}  // namespace lqg
