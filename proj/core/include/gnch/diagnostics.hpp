#ifndef GNCH_DIAGNOSTICS_HPP
#define GNCH_DIAGNOSTICS_HPP

#include <vector>

#include "gnch/field.hpp"
#include "gnch/grid.hpp"
#include "gnch/params.hpp"

namespace gnch {

// One sampled row of a run: energy, norm, conservation and condition
// monitors, and the elliptic solver effort at that time.
struct DiagRecord {
    double t = 0.0;
    double E_s = 0.0;
    double X_s = 0.0;
    double mass = 0.0;  // mean(zeta)
    double h1_min = 0.0;
    double h2_min = 0.0;
    double q1_min = 0.0;
    double q2_min = 0.0;
    int solver_iters = 0;
};

struct EnergyOptions {
    // The quadratic form can carry the velocity block either as
    // T/(gamma+delta) (default) or as plain T; both define equivalent
    // norms and the switch selects the convention.
    bool s_form = false;
};

// E_s(U)^2 = (L^s zeta, (Q0(eps zr)/f(eps zr)) L^s zeta)
//          + (L^s v, T[eps zr] L^s v)/(gamma+delta),
// with L^s the Bessel potential of order s and zr = Uref.zeta the
// reference interface the quadratic form is frozen at.
double energy_Es(const Grid& g, const State& U, const State& Uref, double s,
                 const RegimeParams& p, const ModelConstants& c,
                 const EnergyOptions& opt = {});

// E_s(U) / |U|_{X^s} for one state; the norm-equivalence experiments
// sweep this over random states and report the observed range.
double equivalence_ratio(const Grid& g, const State& U, const State& Uref, double s,
                         const RegimeParams& p, const ModelConstants& c,
                         const EnergyOptions& opt = {});

// Least-squares slope of log E over t, divided by eps: the growth
// exponent lambda-hat in E(t) ~ E(0) exp(eps lambda t).
double fit_growth_rate(const std::vector<double>& t, const std::vector<double>& E, double eps);

struct TwinSeries {
    std::vector<double> t;
    std::vector<double> diff;  // |U1 - U2|_{X^s} at each sample
    double rate_abs = 0.0;     // slope of log diff over t
    double rate_per_eps = 0.0;
};

TwinSeries twin_divergence(const Grid& g, const std::vector<double>& t1,
                           const std::vector<State>& s1, const std::vector<double>& t2,
                           const std::vector<State>& s2, double s, double mu, double eps);

}  // namespace gnch

#endif
