#ifndef SENET_TOOLS_EXPERIMENTS_HPP
#define SENET_TOOLS_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace senet::tools {

struct ExperimentSpec {
  std::string family;      // tree | grid | complete | bounded-degree |
                           // security | spectral
  std::vector<int> sizes;  // family-specific size parameter per row group
  int trials = 1;
  uint64_t rng_seed = 0;
  double a = 1.5;  // security exponent
  int d = 3;       // regular-graph / security degree parameter
};

/// Runs the experiment and returns the CSV text (header included). Trials
/// run concurrently (SENET_WORKERS, default 1); output is deterministic.
std::string run_experiment(const ExperimentSpec& spec);

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
};

/// Property suites for `verify`: resistance-law, merge-split, cheeger,
/// volume-invariance. Empty name runs all.
std::vector<SuiteResult> run_verify_suites(const std::string& suite);

}  // namespace senet::tools

#endif
