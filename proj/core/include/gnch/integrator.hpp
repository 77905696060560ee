#ifndef GNCH_INTEGRATOR_HPP
#define GNCH_INTEGRATOR_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "gnch/cl_model.hpp"
#include "gnch/diagnostics.hpp"
#include "gnch/gn_model.hpp"
#include "gnch/grid.hpp"
#include "gnch/params.hpp"

namespace gnch {

struct StepConfig {
    double dt = 1e-2;       // requested step; may be reduced by the CFL rule
    double t_end = 1.0;
    double cfl = 0.5;       // Courant factor against the advective speed bound
    int sample_every = 1;   // record every k-th step (t=0 and t_end always)
};

using GNRhs = std::function<State(const State&)>;

// Classical four-stage Runge-Kutta update.
State rk4_step(const State& U, double dt, const GNRhs& rhs);

struct Trajectory {
    std::vector<double> times;
    std::vector<State> states;
    std::vector<DiagRecord> records;
    double dt_used = 0.0;
    std::size_t steps = 0;
};

struct RunOptions {
    GNOptions gn;
    double s = 2.0;               // Sobolev index for the recorded norms
    double blowup_factor = 100.0; // abort when |U|_{X^s} exceeds this multiple of its start value
    bool record_states = true;    // false keeps only the diagnostics rows and the final state
};

// Integrate the interface system from U0 to t_end. The step is
//   dt_eff = min(cfg.dt, cfg.cfl*dx/c_max),
//   c_max  = 1 + eps*max|v|*max(|varsigma|, sup|f'|),
// then rounded so an integer number of steps lands exactly on t_end.
// Aborts with CONDITION_LOST when a depth or ellipticity condition fails
// mid-run and with BLOWUP when the X^s ceiling is crossed.
Trajectory run_gn(const Grid& g, const State& U0, const RegimeParams& p,
                  const ModelConstants& c, const StepConfig& cfg, const RunOptions& opt = {});

struct CLTrajectory {
    std::vector<double> times;
    std::vector<CLState> states;
    std::vector<double> mean_plus;   // mean of v+^lambda (conserved)
    std::vector<double> mean_minus;  // mean of v-^lambda (conserved)
    double dt_used = 0.0;
    std::size_t steps = 0;
};

// Integrate both unidirectional components. They are uncoupled, so each
// advances independently with the same step.
CLTrajectory run_cl(const Grid& g, const CLState& s0, const RegimeParams& p,
                    const CLConstants& clc, const StepConfig& cfg, bool dealias = true,
                    double blowup_factor = 100.0);

}  // namespace gnch

#endif
