// Experiment drivers: each reproduces one phenomenon at desk scale, emits
// CSV data plus a summary.json with pass/fail per check, and is
// deterministic given its configuration.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bo {

struct ExperimentConfig {
  std::string experiment;
  std::string out_dir = ".";
  std::map<std::string, std::string> params;

  static ExperimentConfig load(const std::string& path);

  bool has(const std::string& key) const { return params.count(key) > 0; }
  double num(const std::string& key, double fallback) const;
  int integer(const std::string& key, int fallback) const;
  std::uint64_t seed(const std::string& key, std::uint64_t fallback) const;
  std::string str(const std::string& key, const std::string& fallback) const;

  // s in [0, 1/2) everywhere except illposedness, which needs s > 1/2.
  void validate() const;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double threshold = 0.0;
};

struct Report {
  std::string experiment;
  std::vector<CheckResult> checks;
  std::map<std::string, double> metadata;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

Report run_phase_validation(const ExperimentConfig& cfg);
Report run_traveling_wave(const ExperimentConfig& cfg);
Report run_orbital_stability(const ExperimentConfig& cfg);
Report run_illposedness(const ExperimentConfig& cfg);
Report run_recurrence(const ExperimentConfig& cfg);
Report run_isospectrality(const ExperimentConfig& cfg);
Report run_apriori_bound(const ExperimentConfig& cfg);

// Dispatch on cfg.experiment and write summary.json into cfg.out_dir.
Report run_experiment(const ExperimentConfig& cfg);

void write_summary(const Report& report, const std::string& out_dir);

}  // namespace bo
