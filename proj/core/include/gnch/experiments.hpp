#ifndef GNCH_EXPERIMENTS_HPP
#define GNCH_EXPERIMENTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "gnch/config.hpp"

namespace gnch {

struct ExperimentInfo {
    std::string name;
    std::string summary;
    std::vector<std::string> thresholds;  // required threshold.<name> keys
};

const std::vector<ExperimentInfo>& experiment_registry();
bool experiment_exists(const std::string& name);

// One named measurement compared against its configured threshold.
struct Verdict {
    std::string name;
    double measured = 0.0;
    double threshold = 0.0;
    std::string relation;  // "<=", ">=", "in" (for interval checks)
    bool pass = false;
};

struct ExperimentOutcome {
    std::string experiment;
    bool pass = true;
    std::vector<Verdict> verdicts;
    std::vector<std::pair<std::string, double>> measurements;  // extra reported numbers
};

// Runs the configured experiment, writes CSV/JSONL/SVG artifacts under
// run.out_dir (unless empty), and returns the verdicts.
ExperimentOutcome run_experiment(const ExperimentConfig& cfg);

}  // namespace gnch

#endif
