#include "gnch/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gnch/elliptic.hpp"
#include "gnch/errors.hpp"

namespace gnch {

namespace {

State add_scaled(const State& a, double c, const State& b) {
    State r;
    r.zeta = a.zeta;
    r.v = a.v;
    axpy(r.zeta, c, b.zeta);
    axpy(r.v, c, b.v);
    return r;
}

// dt_eff = min(dt, cfl*dx/c_max) rounded down so steps*dt_eff = t_end.
std::pair<double, std::size_t> effective_step(const StepConfig& cfg, double dx, double c_max) {
    if (!(cfg.dt > 0.0)) fail(ErrorCode::CONFIG_INVALID, "time step must be positive");
    if (cfg.t_end < 0.0) fail(ErrorCode::CONFIG_INVALID, "t_end must be nonnegative");
    if (cfg.t_end == 0.0) return {0.0, 0};
    double dt = cfg.dt;
    if (c_max > 0.0) dt = std::min(dt, cfg.cfl * dx / c_max);
    const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_end / dt - 1e-12));
    return {cfg.t_end / static_cast<double>(std::max<std::size_t>(steps, 1)),
            std::max<std::size_t>(steps, 1)};
}

}  // namespace

State rk4_step(const State& U, double dt, const GNRhs& rhs) {
    const State k1 = rhs(U);
    const State k2 = rhs(add_scaled(U, 0.5 * dt, k1));
    const State k3 = rhs(add_scaled(U, 0.5 * dt, k2));
    const State k4 = rhs(add_scaled(U, dt, k3));

    State out;
    out.zeta = U.zeta;
    out.v = U.v;
    const double w = dt / 6.0;
    for (std::size_t i = 0; i < U.zeta.size(); ++i) {
        out.zeta[i] += w * (k1.zeta[i] + 2.0 * k2.zeta[i] + 2.0 * k3.zeta[i] + k4.zeta[i]);
        out.v[i] += w * (k1.v[i] + 2.0 * k2.v[i] + 2.0 * k3.v[i] + k4.v[i]);
    }
    return out;
}

Trajectory run_gn(const Grid& g, const State& U0, const RegimeParams& p,
                  const ModelConstants& c, const StepConfig& cfg, const RunOptions& opt) {
    {
        const DepthMargins dm = check_H1(U0.zeta, p);
        if (!dm.ok) fail(ErrorCode::H1_VIOLATED, "initial data violates the depth condition");
        const EllipticityMargins em = check_H2(U0.zeta, p, c);
        if (!em.ok)
            fail(ErrorCode::H2_VIOLATED, "initial data violates the ellipticity condition");
    }

    const GNCoeffs co0 = gn_coeffs(p, c, U0.zeta);
    const double c_max =
        1.0 + p.eps * field_max_abs(U0.v) *
                  std::max(std::fabs(c.varsigma), field_max_abs(co0.fp));
    const auto [dt, steps] = effective_step(cfg, g.dx(), c_max);

    Trajectory traj;
    traj.dt_used = dt;
    traj.steps = steps;

    int last_iters = 0;
    SolveStats stats;
    const GNRhs rhs = [&](const State& U) {
        State dU = gn_rhs(g, U, p, c, opt.gn, &stats);
        last_iters = std::max(last_iters, stats.iterations);
        return dU;
    };

    const double xs0 = g.xs_norm(U0, opt.s, p.mu);
    const double ceiling = opt.blowup_factor * std::max(xs0, 1e-300);

    auto record = [&](double t, const State& U, int iters) {
        DiagRecord rec;
        rec.t = t;
        rec.E_s = energy_Es(g, U, U, opt.s, p, c);
        rec.X_s = g.xs_norm(U, opt.s, p.mu);
        rec.mass = g.mean(U.zeta);
        const DepthMargins dm = check_H1(U.zeta, p);
        rec.h1_min = dm.h1_min;
        rec.h2_min = dm.h2_min;
        const EllipticityMargins em = check_H2(U.zeta, p, c);
        rec.q1_min = em.q1_min;
        rec.q2_min = em.q2_min;
        rec.solver_iters = iters;
        traj.times.push_back(t);
        traj.records.push_back(rec);
        if (opt.record_states) traj.states.push_back(U);
        if (xs0 > 0.0 && rec.X_s > ceiling)
            fail(ErrorCode::BLOWUP, "norm exceeded " + std::to_string(opt.blowup_factor) +
                                        "x its initial value at t = " + std::to_string(t));
    };

    State U = U0;
    record(0.0, U, 0);

    const int cadence = std::max(cfg.sample_every, 1);
    for (std::size_t step = 1; step <= steps; ++step) {
        const DepthMargins dm = check_H1(U.zeta, p);
        const EllipticityMargins em = check_H2(U.zeta, p, c);
        if (!dm.ok || !em.ok)
            fail(ErrorCode::CONDITION_LOST,
                 "depth or ellipticity condition failed at t = " +
                     std::to_string(static_cast<double>(step - 1) * dt));

        last_iters = 0;
        U = rk4_step(U, dt, rhs);
        const double t = static_cast<double>(step) * dt;
        if (step % static_cast<std::size_t>(cadence) == 0 || step == steps)
            record(t, U, last_iters);
    }
    if (!opt.record_states && !traj.times.empty()) traj.states.push_back(U);
    return traj;
}

CLTrajectory run_cl(const Grid& g, const CLState& s0, const RegimeParams& p,
                    const CLConstants& clc, const StepConfig& cfg, bool dealias,
                    double blowup_factor) {
    const double vmax =
        std::max(field_max_abs(s0.vplus_lambda), field_max_abs(s0.vminus_lambda));
    const double ev = p.eps * vmax;
    // Advective bound for the flux-form nonlinearity plus the bounded
    // dispersive group speed of the regularized linear part.
    const double kmax = g.k(g.n() / 2);
    const double disp = p.mu * std::fabs(clc.nu_x) * kmax * kmax /
                        (1.0 + p.mu * clc.nu_t * kmax * kmax);
    const double c_max = ev * (std::fabs(clc.alpha1) + ev * std::fabs(clc.alpha2) +
                               ev * ev * std::fabs(clc.alpha3)) +
                         ev * (std::fabs(clc.kappa1_cl) + 2.0 * std::fabs(clc.kappa2_cl)) /
                             std::max(clc.nu_t, 1e-300) +
                         disp;
    const auto [dt, steps] = effective_step(cfg, g.dx(), c_max);

    CLTrajectory traj;
    traj.dt_used = dt;
    traj.steps = steps;

    auto rhs_plus = [&](const Field& v) { return cl_rhs(g, v, +1, p, clc, dealias); };
    auto rhs_minus = [&](const Field& v) { return cl_rhs(g, v, -1, p, clc, dealias); };

    auto rk4_field = [&](const Field& v, auto&& rhs) {
        const Field k1 = rhs(v);
        Field tmp = v;
        axpy(tmp, 0.5 * dt, k1);
        const Field k2 = rhs(tmp);
        tmp = v;
        axpy(tmp, 0.5 * dt, k2);
        const Field k3 = rhs(tmp);
        tmp = v;
        axpy(tmp, dt, k3);
        const Field k4 = rhs(tmp);
        Field out = v;
        const double w = dt / 6.0;
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] += w * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        return out;
    };

    const double l0 = std::max(g.l2_norm(s0.vplus_lambda), g.l2_norm(s0.vminus_lambda));
    const double ceiling = blowup_factor * std::max(l0, 1e-300);

    CLState s = s0;
    s.t = 0.0;
    auto record = [&](const CLState& cur) {
        traj.times.push_back(cur.t);
        traj.states.push_back(cur);
        traj.mean_plus.push_back(g.mean(cur.vplus_lambda));
        traj.mean_minus.push_back(g.mean(cur.vminus_lambda));
        if (l0 > 0.0 && std::max(g.l2_norm(cur.vplus_lambda), g.l2_norm(cur.vminus_lambda)) >
                            ceiling)
            fail(ErrorCode::BLOWUP, "component norm exceeded its ceiling at t = " +
                                        std::to_string(cur.t));
    };
    record(s);

    const int cadence = std::max(cfg.sample_every, 1);
    for (std::size_t step = 1; step <= steps; ++step) {
        s.vplus_lambda = rk4_field(s.vplus_lambda, rhs_plus);
        s.vminus_lambda = rk4_field(s.vminus_lambda, rhs_minus);
        s.t = static_cast<double>(step) * dt;
        if (step % static_cast<std::size_t>(cadence) == 0 || step == steps) record(s);
    }
    return traj;
}

}  // namespace gnch
