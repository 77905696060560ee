#include "gnch/diagnostics.hpp"

#include <cmath>
#include <string>

#include "gnch/elliptic.hpp"
#include "gnch/errors.hpp"

namespace gnch {

double energy_Es(const Grid& g, const State& U, const State& Uref, double s,
                 const RegimeParams& p, const ModelConstants& c, const EnergyOptions& opt) {
    const DepthMargins dm = check_H1(Uref.zeta, p);
    if (!dm.ok) fail(ErrorCode::H1_VIOLATED, "reference state violates the depth condition");
    const EllipticityMargins em = check_H2(Uref.zeta, p, c);
    if (!em.ok) fail(ErrorCode::H2_VIOLATED, "reference state violates the ellipticity condition");

    const double gd = p.gamma + p.delta;
    const std::size_t n = U.zeta.size();

    // Q0/f = (gamma+delta) q1 (h1+gamma h2) / (h1 h2), all at the
    // reference interface.
    Field weight(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = Uref.zeta[i];
        const double h1 = 1.0 - p.eps * z;
        const double h2 = 1.0 / p.delta + p.eps * z;
        const double q1 = 1.0 + p.eps * c.kappa1 * z;
        weight[i] = gd * q1 * (h1 + p.gamma * h2) / (h1 * h2);
    }

    const Field lz = g.lambda_s(U.zeta, s);
    const Field lv = g.lambda_s(U.v, s);

    const TContext ctx = make_t_context(g, c, p.mu, p.eps, Uref.zeta);
    const Field Tlv = apply_T(ctx, lv);

    const double zeta_block = g.inner(lz, mul(weight, lz));
    double v_block = g.inner(lv, Tlv);
    if (!opt.s_form) v_block /= gd;

    return std::sqrt(zeta_block + v_block);
}

double equivalence_ratio(const Grid& g, const State& U, const State& Uref, double s,
                         const RegimeParams& p, const ModelConstants& c,
                         const EnergyOptions& opt) {
    const double xs = g.xs_norm(U, s, p.mu);
    if (xs == 0.0) fail(ErrorCode::ZERO_STATE, "norm equivalence undefined for the zero state");
    return energy_Es(g, U, Uref, s, p, c, opt) / xs;
}

namespace {
// Slope of y over t by ordinary least squares.
double lsq_slope(const std::vector<double>& t, const std::vector<double>& y) {
    const std::size_t n = t.size();
    double mt = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mt += t[i];
        my += y[i];
    }
    mt /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        num += (t[i] - mt) * (y[i] - my);
        den += (t[i] - mt) * (t[i] - mt);
    }
    if (den == 0.0) fail(ErrorCode::DEGENERATE, "all sample times coincide");
    return num / den;
}
}  // namespace

double fit_growth_rate(const std::vector<double>& t, const std::vector<double>& E, double eps) {
    if (t.size() != E.size()) fail(ErrorCode::MISMATCH, "time and energy series lengths differ");
    if (t.size() < 3) fail(ErrorCode::DEGENERATE, "need at least 3 samples to fit a rate");
    if (eps == 0.0) fail(ErrorCode::DEGENERATE, "eps = 0 leaves the growth exponent undefined");
    std::vector<double> logE(E.size());
    for (std::size_t i = 0; i < E.size(); ++i) {
        if (!(E[i] > 0.0))
            fail(ErrorCode::DEGENERATE, "non-positive energy at sample " + std::to_string(i));
        logE[i] = std::log(E[i]);
    }
    return lsq_slope(t, logE) / eps;
}

TwinSeries twin_divergence(const Grid& g, const std::vector<double>& t1,
                           const std::vector<State>& s1, const std::vector<double>& t2,
                           const std::vector<State>& s2, double s, double mu, double eps) {
    if (t1.size() != s1.size() || t2.size() != s2.size() || t1.size() != t2.size())
        fail(ErrorCode::MISMATCH, "trajectories have different sample counts");
    for (std::size_t i = 0; i < t1.size(); ++i)
        if (t1[i] != t2[i]) fail(ErrorCode::MISMATCH, "trajectories sampled at different times");

    TwinSeries out;
    out.t = t1;
    out.diff.resize(t1.size());
    for (std::size_t i = 0; i < t1.size(); ++i) {
        State d;
        d.zeta = sub(s1[i].zeta, s2[i].zeta);
        d.v = sub(s1[i].v, s2[i].v);
        out.diff[i] = g.xs_norm(d, s, mu);
    }

    // Exponential rate from the samples with positive separation.
    std::vector<double> tf, lf;
    for (std::size_t i = 0; i < out.diff.size(); ++i) {
        if (out.diff[i] > 0.0) {
            tf.push_back(out.t[i]);
            lf.push_back(std::log(out.diff[i]));
        }
    }
    if (tf.size() >= 2) {
        out.rate_abs = lsq_slope(tf, lf);
        out.rate_per_eps = (eps != 0.0) ? out.rate_abs / eps : 0.0;
    }
    return out;
}

}  // namespace gnch
