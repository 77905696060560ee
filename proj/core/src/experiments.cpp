#include "gnch/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>
#include <thread>

#include "gnch/diagnostics.hpp"
#include "gnch/elliptic.hpp"
#include "gnch/errors.hpp"
#include "gnch/gn_model.hpp"
#include "gnch/integrator.hpp"
#include "gnch/profiles.hpp"
#include "gnch/report.hpp"

namespace gnch {

namespace {

// ---------------------------------------------------------------- helpers

double threshold_of(const ExperimentConfig& cfg, const std::string& name) {
    const auto it = cfg.thresholds.find(name);
    if (it == cfg.thresholds.end())
        fail(ErrorCode::CONFIG_INVALID,
             "experiment '" + cfg.experiment + "' requires threshold." + name);
    return it->second;
}

Verdict check_le(const std::string& name, double measured, double thr) {
    return {name, measured, thr, "<=", measured <= thr};
}

Verdict check_ge(const std::string& name, double measured, double thr) {
    return {name, measured, thr, ">=", measured >= thr};
}

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (x[i] - mx) * (y[i] - my);
        den += (x[i] - mx) * (x[i] - mx);
    }
    if (den == 0.0) fail(ErrorCode::DEGENERATE, "slope of a single abscissa");
    return num / den;
}

// Sweep points are dispatched to a small pool capped by GNCH_THREADS;
// task i writes only its own slot, so the merged result is identical for
// any pool size.
void parallel_for_indexed(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("GNCH_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end && *end == '\0' && cap >= 1) workers = static_cast<std::size_t>(cap);
    }
    workers = std::min(workers, count);

    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }

    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto body = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

State initial_state(const Grid& g, const ExperimentConfig& cfg, const RegimeParams& p) {
    Field zeta;
    if (cfg.init.profile == "gaussian")
        zeta = gaussian_profile(g, cfg.init.amplitude, cfg.init.width, cfg.init.center);
    else if (cfg.init.profile == "sech2")
        zeta = sech2_profile(g, cfg.init.amplitude, cfg.init.width, cfg.init.center);
    else
        zeta = cosine_mode(g, cfg.init.amplitude, cfg.init.mode);

    State U;
    U.v = scaled(zeta, p.gamma + p.delta);  // right-moving bias
    U.zeta = std::move(zeta);
    return U;
}

double mass_drift_rate(const Trajectory& traj) {
    if (traj.records.empty()) return 0.0;
    const double m0 = traj.records.front().mass;
    double rate = 0.0;
    for (const DiagRecord& r : traj.records)
        if (r.t > 0.0) rate = std::max(rate, std::fabs(r.mass - m0) / r.t);
    return rate;
}

double cl_mean_drift_rate(const CLTrajectory& traj) {
    if (traj.times.empty()) return 0.0;
    const double p0 = traj.mean_plus.front();
    const double m0 = traj.mean_minus.front();
    double rate = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        if (traj.times[i] <= 0.0) continue;
        rate = std::max(rate, std::fabs(traj.mean_plus[i] - p0) / traj.times[i]);
        rate = std::max(rate, std::fabs(traj.mean_minus[i] - m0) / traj.times[i]);
    }
    return rate;
}

std::vector<double> unwrap_phase(const std::vector<double>& phi) {
    std::vector<double> out(phi.size());
    if (phi.empty()) return out;
    out[0] = phi[0];
    for (std::size_t i = 1; i < phi.size(); ++i) {
        double d = phi[i] - phi[i - 1];
        while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
        while (d < -std::numbers::pi) d += 2.0 * std::numbers::pi;
        out[i] = out[i - 1] + d;
    }
    return out;
}

GNOptions gn_options(const ExperimentConfig& cfg) {
    GNOptions o;
    o.dealias = cfg.run.dealias;
    o.solver_tol = cfg.solver.tol;
    o.solver_max_iter = cfg.solver.max_iter;
    return o;
}

RunOptions run_options(const ExperimentConfig& cfg) {
    RunOptions o;
    o.gn = gn_options(cfg);
    o.s = cfg.run.s;
    return o;
}

// ------------------------------------------------------ operator-props

ExperimentOutcome run_operator_props(const ExperimentConfig& cfg) {
    ExperimentOutcome out;
    out.experiment = cfg.experiment;
    const Grid g(cfg.n, cfg.L);
    const RegimeParams p = cfg.params;
    const ModelConstants c = derive_constants(p);
    const std::uint32_t seed = cfg.run.seed;

    const int n_ops = 50;
    double sym_max = 0.0, coer_min = 1e300, cont_max = -1e300, round_max = 0.0;
    std::vector<std::vector<double>> csv_rows;

    for (int i = 0; i < n_ops; ++i) {
        const Field zeta = random_smooth_field(g, seed + 3 * i, 8, 0.5);
        const Field u = random_smooth_field(g, seed + 3 * i + 1, 10, 1.0);
        const Field w = random_smooth_field(g, seed + 3 * i + 2, 10, 1.0);
        const TContext ctx = make_t_context(g, c, p.mu, p.eps, zeta);

        const Field Tu = apply_T(ctx, u);
        const Field Tw = apply_T(ctx, w);

        const double sym = std::fabs(g.inner(Tu, w) - g.inner(u, Tw)) /
                           (g.l2_norm(u) * g.l2_norm(w));
        sym_max = std::max(sym_max, sym);

        const double h02 = std::min(field_min(ctx.q1_field), field_min(ctx.q2_field));
        const double hu = g.h1mu_norm(u, p.mu);
        const double coer = g.inner(Tu, u) - h02 * std::min(1.0, c.nu) * hu * hu;
        coer_min = std::min(coer_min, coer);

        const double c0 = std::max(field_max_abs(ctx.q1_field),
                                   c.nu * field_max_abs(ctx.q2_field));
        const double cont = g.inner(Tu, w) - c0 * hu * g.h1mu_norm(w, p.mu);
        cont_max = std::max(cont_max, cont);

        const Field back = invert_T(ctx, Tu, cfg.solver.tol, cfg.solver.max_iter);
        const double rt = field_max_abs(sub(back, u));
        round_max = std::max(round_max, rt);

        csv_rows.push_back({static_cast<double>(i), sym, coer, cont, rt, 0.0});
    }

    // Energy / X^s norm equivalence sweep at a fixed reference interface.
    const Field zref = random_smooth_field(g, seed + 1000, 8, 0.5);
    State Uref;
    Uref.zeta = zref;
    Uref.v = Field(g.n(), 0.0);
    double ratio_lo = 1e300, ratio_hi = 0.0;
    for (int j = 0; j < 100; ++j) {
        State U;
        U.zeta = random_smooth_field(g, seed + 2000 + 2 * j, 8, 0.6);
        U.v = random_smooth_field(g, seed + 2001 + 2 * j, 8, 0.6);
        const double r = equivalence_ratio(g, U, Uref, cfg.run.s, p, c);
        ratio_lo = std::min(ratio_lo, r);
        ratio_hi = std::max(ratio_hi, r);
        if (j < n_ops) csv_rows[static_cast<std::size_t>(j)][5] = r;
    }

    // The two right-hand-side assemblies must agree on well-resolved
    // states; the filter stays off so both see identical products.
    GNOptions opt = gn_options(cfg);
    opt.dealias = false;
    double form_max = 0.0;
    for (int j = 0; j < 20; ++j) {
        State U;
        U.zeta = random_smooth_field(g, seed + 5000 + 2 * j, 6, 0.4);
        U.v = random_smooth_field(g, seed + 5001 + 2 * j, 6, 0.4);
        const State a = gn_rhs(g, U, p, c, opt);
        const State b = gn_rhs_condensed(g, U, p, c, opt);
        form_max = std::max({form_max, field_max_abs(sub(a.zeta, b.zeta)),
                             field_max_abs(sub(a.v, b.v))});
    }

    out.verdicts.push_back(check_le("symmetry_defect", sym_max, threshold_of(cfg, "symmetry")));
    out.verdicts.push_back(
        check_ge("coercivity_slack", coer_min, -threshold_of(cfg, "coercivity_slack")));
    out.verdicts.push_back(
        check_le("continuity_excess", cont_max, threshold_of(cfg, "continuity_slack")));
    out.verdicts.push_back(check_le("roundtrip_err", round_max, threshold_of(cfg, "roundtrip")));
    out.verdicts.push_back(
        check_le("formulation_gap", form_max, threshold_of(cfg, "equivalence")));
    out.verdicts.push_back(
        check_ge("equivalence_ratio_lo", ratio_lo, threshold_of(cfg, "ratio_lo_min")));
    out.verdicts.push_back(
        check_le("equivalence_ratio_hi", ratio_hi, threshold_of(cfg, "ratio_hi_max")));
    out.measurements = {{"symmetry_defect", sym_max}, {"coercivity_slack_min", coer_min},
                        {"continuity_excess", cont_max}, {"roundtrip_err", round_max},
                        {"formulation_gap", form_max},   {"ratio_lo", ratio_lo},
                        {"ratio_hi", ratio_hi}};

    if (!cfg.run.out_dir.empty())
        write_csv(cfg.run.out_dir + "/operator_checks.csv",
                  {"sample", "symmetry_defect", "coercivity_slack", "continuity_slack",
                   "roundtrip_err", "equivalence_ratio"},
                  csv_rows);
    return out;
}

// ---------------------------------------------------------- dispersion

ExperimentOutcome run_dispersion(const ExperimentConfig& cfg) {
    ExperimentOutcome out;
    out.experiment = cfg.experiment;
    const Grid g(cfg.n, cfg.L);
    const RegimeParams p = cfg.params;
    const ModelConstants c = derive_constants(p);

    const int mode = cfg.init.mode;
    const double k = 2.0 * std::numbers::pi * mode / cfg.L;
    const double c_pred = linear_dispersion(k, p, c);

    // Right-moving eigenvector of the linearization: v = (gamma+delta) c(k) zeta.
    State U0;
    U0.zeta = cosine_mode(g, cfg.init.amplitude, mode);
    U0.v = scaled(U0.zeta, (p.gamma + p.delta) * c_pred);

    const Trajectory traj = run_gn(g, U0, p, c, cfg.step, run_options(cfg));

    std::vector<double> phase(traj.states.size());
    for (std::size_t i = 0; i < traj.states.size(); ++i) {
        const auto spec = g.spectrum(traj.states[i].zeta);
        phase[i] = std::atan2(spec[static_cast<std::size_t>(mode)].imag(),
                              spec[static_cast<std::size_t>(mode)].real());
    }
    const std::vector<double> unwrapped = unwrap_phase(phase);
    const double c_meas = -lsq_slope(traj.times, unwrapped) / k;
    const double rel_err = std::fabs(c_meas - c_pred) / c_pred;

    out.verdicts.push_back(check_le("phase_speed_rel_err", rel_err, threshold_of(cfg, "rel_err")));
    out.verdicts.push_back(
        check_le("mass_drift", mass_drift_rate(traj), threshold_of(cfg, "mass_drift")));
    out.measurements = {{"c_measured", c_meas},
                        {"c_predicted", c_pred},
                        {"k", k},
                        {"dt_used", traj.dt_used}};

    if (!cfg.run.out_dir.empty()) {
        write_run_csv(cfg.run.out_dir + "/dispersion_run1.csv", traj);
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < unwrapped.size(); ++i)
            rows.push_back({traj.times[i], unwrapped[i]});
        write_csv(cfg.run.out_dir + "/dispersion_phase.csv", {"t", "phase"}, rows);
        if (cfg.run.plots)
            write_svg_plot(cfg.run.out_dir + "/dispersion_phase.svg", "tracked mode phase",
                           {{"phase", traj.times, unwrapped}});
    }
    return out;
}

// -------------------------------------------------- expansion-residual

ExperimentOutcome run_expansion_residual(const ExperimentConfig& cfg) {
    ExperimentOutcome out;
    out.experiment = cfg.experiment;
    if (cfg.sweep.eps.size() < 2)
        fail(ErrorCode::CONFIG_INVALID, "expansion-residual needs sweep.eps with >= 2 entries");

    const Grid g(cfg.n, cfg.L);

    // Fixed generic profile shapes; only the nonlinearity scale varies.
    Field zeta(g.n()), v(g.n());
    const double b = 2.0 * std::numbers::pi / cfg.L;
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double x = g.node(i);
        zeta[i] = 0.9 * std::cos(b * x) + 0.4 * std::sin(2.0 * b * x);
        v[i] = 0.7 * std::sin(b * x) - 0.3 * std::cos(3.0 * b * x);
    }

    std::vector<double> log_eps, log_rq, log_rr;
    std::vector<std::vector<double>> rows;
    for (double eps : cfg.sweep.eps) {
        RegimeParams p = cfg.params;
        p.eps = eps;
        const ModelConstants c = derive_constants(p);
        const double rq = expansion_residual_Q(g, zeta, v, p, c, cfg.run.s);
        const double rr = expansion_residual_R(g, zeta, v, p, c, cfg.run.s);
        log_eps.push_back(std::log(eps));
        log_rq.push_back(std::log(rq));
        log_rr.push_back(std::log(rr));
        rows.push_back({eps, rq, rr});
    }

    const double slope_q = lsq_slope(log_eps, log_rq);
    const double slope_r = lsq_slope(log_eps, log_rr);
    out.verdicts.push_back(check_ge("slope_q", slope_q, threshold_of(cfg, "slope_q_min")));
    out.verdicts.push_back(check_ge("slope_r", slope_r, threshold_of(cfg, "slope_r_min")));
    out.measurements = {{"slope_q", slope_q}, {"slope_r", slope_r}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out.measurements.emplace_back("residual_q_" + std::to_string(i), rows[i][1]);
        out.measurements.emplace_back("residual_r_" + std::to_string(i), rows[i][2]);
    }

    if (!cfg.run.out_dir.empty()) {
        write_csv(cfg.run.out_dir + "/expansion_residuals.csv",
                  {"eps", "residual_q", "residual_r"}, rows);
        if (cfg.run.plots) {
            std::vector<double> es, qs, rs;
            for (const auto& r : rows) {
                es.push_back(r[0]);
                qs.push_back(r[1]);
                rs.push_back(r[2]);
            }
            write_svg_plot(cfg.run.out_dir + "/expansion_residuals.svg",
                           "expansion residuals vs eps",
                           {{"residual_q", es, qs}, {"residual_r", es, rs}}, true, true);
        }
    }
    return out;
}

// ------------------------------------------------------- energy-growth

ExperimentOutcome run_energy_growth(const ExperimentConfig& cfg) {
    ExperimentOutcome out;
    out.experiment = cfg.experiment;
    if (cfg.sweep.eps.size() != 2)
        fail(ErrorCode::CONFIG_INVALID,
             "energy-growth needs sweep.eps with exactly 2 entries (eps and eps/2)");

    const std::vector<RegimeParams> pts = sweep_points(cfg);
    std::vector<Trajectory> trajs(pts.size());
    parallel_for_indexed(pts.size(), [&](std::size_t i) {
        const Grid g(cfg.n, cfg.L);
        const RegimeParams p = pts[i];
        const ModelConstants c = derive_constants(p);
        StepConfig step = cfg.step;
        step.t_end = cfg.step.t_end / p.eps;  // slow-time horizon
        trajs[i] = run_gn(g, initial_state(g, cfg, p), p, c, step, run_options(cfg));
    });

    std::vector<double> rates_abs;
    std::vector<std::vector<double>> rate_rows;
    double mass_rate = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<double> Es;
        for (const DiagRecord& r : trajs[i].records) Es.push_back(r.E_s);
        const double lam = fit_growth_rate(trajs[i].times, Es, pts[i].eps);
        rates_abs.push_back(lam * pts[i].eps);
        rate_rows.push_back({pts[i].eps, lam * pts[i].eps, lam});
        mass_rate = std::max(mass_rate, mass_drift_rate(trajs[i]));
    }

    const double ratio = rates_abs[1] / rates_abs[0];
    out.verdicts.push_back(check_ge("rate_ratio_lo", ratio, threshold_of(cfg, "ratio_lo")));
    out.verdicts.push_back(check_le("rate_ratio_hi", ratio, threshold_of(cfg, "ratio_hi")));
    out.verdicts.push_back(check_le("mass_drift", mass_rate, threshold_of(cfg, "mass_drift")));
    out.measurements = {{"rate_abs_full", rates_abs[0]},
                        {"rate_abs_half", rates_abs[1]},
                        {"rate_ratio", ratio}};

    if (!cfg.run.out_dir.empty()) {
        write_csv(cfg.run.out_dir + "/energy_rates.csv", {"eps", "rate_abs", "rate_per_eps"},
                  rate_rows);
        std::vector<PlotSeries> series;
        for (std::size_t i = 0; i < trajs.size(); ++i) {
            write_run_csv(cfg.run.out_dir + "/energy-growth_run" + std::to_string(i + 1) + ".csv",
                          trajs[i]);
            PlotSeries s;
            s.label = "eps=" + format_double(pts[i].eps);
            s.x = trajs[i].times;
            for (const DiagRecord& r : trajs[i].records) s.y.push_back(r.E_s);
            series.push_back(std::move(s));
        }
        if (cfg.run.plots)
            write_svg_plot(cfg.run.out_dir + "/energy_growth.svg", "energy history", series,
                           false, true);
    }
    return out;
}

// ------------------------------------------------------ stability-twin

ExperimentOutcome run_stability_twin(const ExperimentConfig& cfg) {
    ExperimentOutcome out;
    out.experiment = cfg.experiment;
    const RegimeParams p = cfg.params;

    std::vector<Trajectory> trajs(3);
    parallel_for_indexed(3, [&](std::size_t i) {
        const Grid g(cfg.n, cfg.L);
        const ModelConstants c = derive_constants(p);
        State U0 = initial_state(g, cfg, p);
        if (i > 0) {
            const Field pert =
                cosine_mode(g, cfg.twin_pert_amplitude * static_cast<double>(i), cfg.twin_pert_mode);
            axpy(U0.zeta, 1.0, pert);
        }
        trajs[i] = run_gn(g, U0, p, c, cfg.step, run_options(cfg));
    });

    const Grid g(cfg.n, cfg.L);
    const TwinSeries d1 = twin_divergence(g, trajs[0].times, trajs[0].states, trajs[1].times,
                                          trajs[1].states, cfg.run.s, p.mu, p.eps);
    const TwinSeries d2 = twin_divergence(g, trajs[0].times, trajs[0].states, trajs[2].times,
                                          trajs[2].states, cfg.run.s, p.mu, p.eps);

    const double d10 = d1.diff.front();
    double growth = 0.0;
    for (double d : d1.diff) growth = std::max(growth, d / d10);

    const double linear_ceiling = threshold_of(cfg, "linear_ceiling");
    double scaling_dev = 0.0;
    for (std::size_t i = 0; i < d1.diff.size(); ++i) {
        if (d2.diff[i] >= linear_ceiling || d1.diff[i] == 0.0) continue;
        scaling_dev = std::max(scaling_dev, std::fabs(d2.diff[i] / d1.diff[i] - 2.0) / 2.0);
    }

    double mass_rate = 0.0;
    for (const Trajectory& t : trajs) mass_rate = std::max(mass_rate, mass_drift_rate(t));

    out.verdicts.push_back(check_le("perturbation_growth", growth, threshold_of(cfg, "growth_max")));
    out.verdicts.push_back(check_le("scaling_deviation", scaling_dev,
                                    threshold_of(cfg, "scaling_tol")));
    out.verdicts.push_back(check_le("mass_drift", mass_rate, threshold_of(cfg, "mass_drift")));
    out.measurements = {{"growth_factor", growth},
                        {"scaling_deviation", scaling_dev},
                        {"divergence_rate_abs", d1.rate_abs},
                        {"divergence_rate_per_eps", d1.rate_per_eps}};

    if (!cfg.run.out_dir.empty()) {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < d1.t.size(); ++i)
            rows.push_back({d1.t[i], d1.diff[i], d2.diff[i]});
        write_csv(cfg.run.out_dir + "/twin_divergence.csv", {"t", "diff1", "diff2"}, rows);
        write_run_csv(cfg.run.out_dir + "/stability-twin_run1.csv", trajs[0]);
        if (cfg.run.plots)
            write_svg_plot(cfg.run.out_dir + "/twin_divergence.svg", "twin separation",
                           {{"diff1", d1.t, d1.diff}, {"diff2", d2.t, d2.diff}}, false, true);
    }
    return out;
}

// ----------------------------------------------------------- gn-vs-cl

ExperimentOutcome run_gn_vs_cl(const ExperimentConfig& cfg) {
    ExperimentOutcome out;
    out.experiment = cfg.experiment;
    if (cfg.sweep.mu.size() < 2)
        fail(ErrorCode::CONFIG_INVALID, "gn-vs-cl needs sweep.mu with >= 2 entries");

    const std::vector<RegimeParams> pts = sweep_points(cfg);
    std::vector<double> errors(pts.size());
    std::vector<double> mass_rates(pts.size());
    std::vector<double> mean_rates(pts.size());
    std::vector<Trajectory> gn_trajs(pts.size());

    parallel_for_indexed(pts.size(), [&](std::size_t i) {
        const Grid g(cfg.n, cfg.L);
        const RegimeParams p = pts[i];
        const ModelConstants c = derive_constants(p);
        const CLConstants clc = derive_cl_constants(p, cfg.cl);

        const State U0 = initial_state(g, cfg, p);
        const Trajectory gn = run_gn(g, U0, p, c, cfg.step, run_options(cfg));

        const CLState s0 = cl_init_split(g, U0.zeta, U0.v, p, cfg.cl);
        const CLTrajectory cl = run_cl(g, s0, p, clc, cfg.step, cfg.run.dealias);
        const State Ucl = cl_reconstruct(g, cl.states.back(), p, cfg.cl);

        State diff;
        diff.zeta = sub(gn.states.back().zeta, Ucl.zeta);
        diff.v = sub(gn.states.back().v, Ucl.v);
        errors[i] = g.xs_norm(diff, cfg.run.s, p.mu);
        mass_rates[i] = mass_drift_rate(gn);
        mean_rates[i] = cl_mean_drift_rate(cl);
        gn_trajs[i] = gn;
    });

    std::vector<double> log_mu, log_err;
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        log_mu.push_back(std::log(pts[i].mu));
        log_err.push_back(std::log(errors[i]));
        rows.push_back({pts[i].mu, pts[i].eps, errors[i]});
    }
    const double slope = lsq_slope(log_mu, log_err);

    double mass_rate = 0.0, mean_rate = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        mass_rate = std::max(mass_rate, mass_rates[i]);
        mean_rate = std::max(mean_rate, mean_rates[i]);
    }

    out.verdicts.push_back(check_ge("error_slope", slope, threshold_of(cfg, "slope_min")));
    out.verdicts.push_back(check_le("mass_drift", mass_rate, threshold_of(cfg, "mass_drift")));
    out.verdicts.push_back(
        check_le("cl_mean_drift", mean_rate, threshold_of(cfg, "cl_mean_drift")));
    out.measurements = {{"error_slope", slope}};
    for (std::size_t i = 0; i < errors.size(); ++i)
        out.measurements.emplace_back("xs_error_" + std::to_string(i), errors[i]);

    if (!cfg.run.out_dir.empty()) {
        write_csv(cfg.run.out_dir + "/model_comparison.csv", {"mu", "eps", "xs_error"}, rows);
        for (std::size_t i = 0; i < gn_trajs.size(); ++i)
            write_run_csv(cfg.run.out_dir + "/gn-vs-cl_run" + std::to_string(i + 1) + ".csv",
                          gn_trajs[i]);
        if (cfg.run.plots) {
            std::vector<double> mus, errs;
            for (const auto& r : rows) {
                mus.push_back(r[0]);
                errs.push_back(r[2]);
            }
            write_svg_plot(cfg.run.out_dir + "/model_comparison.svg",
                           "decoupled-approximation error", {{"xs_error", mus, errs}}, true,
                           true);
        }
    }
    return out;
}

// ---------------------------------------------------------- time-order

ExperimentOutcome run_time_order(const ExperimentConfig& cfg) {
    ExperimentOutcome out;
    out.experiment = cfg.experiment;
    if (cfg.sweep.dt.size() < 3)
        fail(ErrorCode::CONFIG_INVALID, "time-order needs sweep.dt with >= 3 entries");
    for (std::size_t i = 0; i + 1 < cfg.sweep.dt.size(); ++i)
        if (std::fabs(cfg.sweep.dt[i + 1] * 2.0 - cfg.sweep.dt[i]) > 1e-12 * cfg.sweep.dt[i])
            fail(ErrorCode::CONFIG_INVALID, "sweep.dt entries must halve successively");

    const RegimeParams p = cfg.params;
    std::vector<State> finals(cfg.sweep.dt.size());
    parallel_for_indexed(cfg.sweep.dt.size(), [&](std::size_t i) {
        const Grid g(cfg.n, cfg.L);
        const ModelConstants c = derive_constants(p);
        StepConfig step = cfg.step;
        step.dt = cfg.sweep.dt[i];
        RunOptions opt = run_options(cfg);
        opt.record_states = false;
        const Trajectory traj = run_gn(g, initial_state(g, cfg, p), p, c, step, opt);
        finals[i] = traj.states.back();
    });

    const Grid g(cfg.n, cfg.L);
    std::vector<double> diffs;
    for (std::size_t i = 0; i + 1 < finals.size(); ++i) {
        State d;
        d.zeta = sub(finals[i].zeta, finals[i + 1].zeta);
        d.v = sub(finals[i].v, finals[i + 1].v);
        diffs.push_back(g.xs_norm(d, cfg.run.s, p.mu));
    }

    double order_measured = 1e300;
    std::vector<double> orders;
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i) {
        const double order = std::log2(diffs[i] / diffs[i + 1]);
        orders.push_back(order);
        order_measured = std::min(order_measured, order);
    }

    out.verdicts.push_back(check_ge("order", order_measured, threshold_of(cfg, "order_min")));
    out.measurements = {{"order", order_measured}};
    for (std::size_t i = 0; i < diffs.size(); ++i)
        out.measurements.emplace_back("xs_diff_" + std::to_string(i), diffs[i]);
    for (std::size_t i = 0; i < orders.size(); ++i)
        out.measurements.emplace_back("order_" + std::to_string(i), orders[i]);

    if (!cfg.run.out_dir.empty()) {
        std::vector<std::vector<double>> rows;
        for (std::size_t i = 0; i < diffs.size(); ++i)
            rows.push_back({cfg.sweep.dt[i], diffs[i]});
        write_csv(cfg.run.out_dir + "/time_order.csv", {"dt", "xs_diff_next"}, rows);
        if (cfg.run.plots) {
            std::vector<double> dts(cfg.sweep.dt.begin(), cfg.sweep.dt.end() - 1);
            write_svg_plot(cfg.run.out_dir + "/time_order.svg", "step-halving differences",
                           {{"xs_diff", dts, diffs}}, true, true);
        }
    }
    return out;
}

}  // namespace

const std::vector<ExperimentInfo>& experiment_registry() {
    static const std::vector<ExperimentInfo> registry = {
        {"operator-props",
         "symmetry, coercivity, continuity and invertibility of the velocity operator; "
         "energy/X^s norm equivalence; agreement of the two RHS assemblies",
         {"symmetry", "coercivity_slack", "continuity_slack", "roundtrip", "equivalence",
          "ratio_lo_min", "ratio_hi_max"}},
        {"dispersion",
         "phase speed of a small-amplitude mode against the model dispersion relation",
         {"rel_err", "mass_drift"}},
        {"expansion-residual",
         "decay order in eps of the classical-operator expansion defects",
         {"slope_q_min", "slope_r_min"}},
        {"energy-growth",
         "eps-scaling of the fitted exponential energy growth rate over a slow-time horizon "
         "(step.t_end is the slow-time horizon tau; each run integrates to tau/eps)",
         {"ratio_lo", "ratio_hi", "mass_drift"}},
        {"stability-twin",
         "growth and linearity of the separation between a run and its perturbed twins",
         {"growth_max", "scaling_tol", "linear_ceiling", "mass_drift"}},
        {"gn-vs-cl",
         "convergence of the decoupled approximation to the two-way model as mu -> 0 "
         "with eps = sqrt(mu)",
         {"slope_min", "mass_drift", "cl_mean_drift"}},
        {"time-order",
         "Runge-Kutta self-convergence order from successive step halvings",
         {"order_min"}},
    };
    return registry;
}

bool experiment_exists(const std::string& name) {
    for (const auto& e : experiment_registry())
        if (e.name == name) return true;
    return false;
}

ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
    validate_config(cfg);
    if (!cfg.run.out_dir.empty()) {
        ensure_dir(cfg.run.out_dir);
        write_schema_doc(cfg.run.out_dir);
    }

    ExperimentOutcome out;
    if (cfg.experiment == "operator-props")
        out = run_operator_props(cfg);
    else if (cfg.experiment == "dispersion")
        out = run_dispersion(cfg);
    else if (cfg.experiment == "expansion-residual")
        out = run_expansion_residual(cfg);
    else if (cfg.experiment == "energy-growth")
        out = run_energy_growth(cfg);
    else if (cfg.experiment == "stability-twin")
        out = run_stability_twin(cfg);
    else if (cfg.experiment == "gn-vs-cl")
        out = run_gn_vs_cl(cfg);
    else if (cfg.experiment == "time-order")
        out = run_time_order(cfg);
    else
        fail(ErrorCode::CONFIG_INVALID, "unknown experiment '" + cfg.experiment + "'");

    out.pass = true;
    for (const Verdict& v : out.verdicts) out.pass = out.pass && v.pass;
    if (!cfg.run.out_dir.empty()) append_report_line(cfg.run.out_dir, cfg, out);
    return out;
}

}  // namespace gnch
