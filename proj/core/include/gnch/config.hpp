#ifndef GNCH_CONFIG_HPP
#define GNCH_CONFIG_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gnch/cl_model.hpp"
#include "gnch/integrator.hpp"
#include "gnch/params.hpp"

namespace gnch {

struct InitConfig {
    std::string profile = "gaussian";  // gaussian | sech2 | cosine-mode
    double amplitude = 0.1;
    double width = -1.0;   // < 0 means L/10
    double center = -1.0;  // < 0 means L/2
    int mode = 1;          // cosine-mode wavenumber index
};

struct SweepConfig {
    std::vector<double> mu;
    std::vector<double> eps;
    std::vector<double> dt;
    bool eps_from_mu = false;  // eps = sqrt(mu) at every sweep point
};

struct OutputConfig {
    std::string out_dir = "out";  // empty string disables file output
    bool dealias = true;
    bool force = false;  // run outside the validated regime anyway
    bool plots = false;
    std::uint32_t seed = 12345;
    double s = 2.0;  // Sobolev index for diagnostics
};

struct SolverConfig {
    double tol = 1e-11;
    int max_iter = 500;
};

// Flat dotted key-value configuration for one experiment invocation.
struct ExperimentConfig {
    std::string experiment;
    RegimeParams params;
    RegimeBounds bounds;
    CLParams cl;
    double L = 6.283185307179586;
    std::size_t n = 256;
    StepConfig step;
    InitConfig init;
    SweepConfig sweep;
    OutputConfig run;
    SolverConfig solver;
    double twin_pert_amplitude = 1e-6;  // stability-twin seed perturbation
    int twin_pert_mode = 3;
    std::map<std::string, double> thresholds;  // threshold.<name> entries

    // Normalized key=value lines in input order, echoed into reports so a
    // run can be reproduced from its own output.
    std::vector<std::pair<std::string, std::string>> echo;
};

ExperimentConfig parse_config(const std::string& path);
ExperimentConfig parse_config_text(const std::string& text, const std::string& origin);

// Full pre-run validation: experiment exists, grid and stepping are
// sane, required thresholds are present, and every sweep point sits in
// the modeled regime (unless run.force). Throws CONFIG_INVALID or
// REGIME_VIOLATION.
void validate_config(const ExperimentConfig& cfg);

// The regime parameter sets the experiment will visit, in sweep order
// (the base parameters when no sweep list applies).
std::vector<RegimeParams> sweep_points(const ExperimentConfig& cfg);

}  // namespace gnch

#endif
