#include "gnch/cl_model.hpp"

#include <cmath>
#include <string>

#include "gnch/elliptic.hpp"
#include "gnch/errors.hpp"

namespace gnch {

CLConstants derive_cl_constants(const RegimeParams& p, const CLParams& clp) {
    const double g = p.gamma;
    const double d = p.delta;
    const double gd = g + d;
    const double th = clp.theta;
    const double la = clp.lambda;

    const double dp1 = d + 1.0;
    const double common = (1.0 + g * d) * (d * d - g) / (3.0 * d * gd * gd) * (1.0 + (1.0 - th) / 4.0);

    CLConstants c;
    c.alpha1 = 1.5 * (d * d - g) / gd;
    c.alpha2 = -3.0 * g * d * dp1 * dp1 / (gd * gd);
    c.alpha3 = -5.0 * d * d * dp1 * dp1 * g * (1.0 - g) / (gd * gd * gd);
    c.nu_t = th / 6.0 * (1.0 + g * d) / (d * gd) + la;
    c.nu_x = (1.0 - th) / 6.0 * (1.0 + g * d) / (d * gd) - 0.5 * p.bo_inv - la;
    c.kappa1_cl = common - (1.0 - g) / (6.0 * gd) + la * 1.5 * (d * d - g) / gd;
    c.kappa2_cl = common - (1.0 - g) / (12.0 * gd);

    if (!(c.nu_t > 0.0))
        fail(ErrorCode::NUT_NONPOSITIVE,
             "nu_t = " + std::to_string(c.nu_t) + " (theta/lambda make the evolution ill-posed)");
    return c;
}

Field cl_rhs(const Grid& g, const Field& vlam, int direction, const RegimeParams& p,
             const CLConstants& clc, bool dealias) {
    const double eps = p.eps;
    const std::size_t n = vlam.size();

    const Field vxx = g.ddx2(vlam);
    const Field vx = g.ddx(vlam);

    Field flux(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double v = vlam[i];
        flux[i] = eps * clc.alpha1 * v * v / 2.0 + eps * eps * clc.alpha2 * v * v * v / 3.0 +
                  eps * eps * eps * clc.alpha3 * v * v * v * v / 4.0 +
                  p.mu * eps * (clc.kappa1_cl * v * vxx[i] + clc.kappa2_cl * vx[i] * vx[i]);
    }
    if (dealias) flux = g.dealias(flux);
    axpy(flux, p.mu * clc.nu_x, vxx);

    Field rhs = invert_helmholtz(g, p.mu * clc.nu_t, g.ddx(flux));
    const double sign = (direction >= 0) ? -1.0 : 1.0;
    for (double& x : rhs) x *= sign;
    return rhs;
}

namespace {
void check_lambda_symbols(const Grid& g, double mu_lambda) {
    for (std::size_t j = 0; j <= g.n() / 2; ++j) {
        const double k2 = g.k(j) * g.k(j);
        if (1.0 - mu_lambda * k2 <= 0.0 || 1.0 + mu_lambda * k2 <= 0.0)
            fail(ErrorCode::SINGULAR_SYMBOL,
                 "lambda regularization degenerates at k = " + std::to_string(g.k(j)));
    }
}
}  // namespace

CLState cl_init_split(const Grid& g, const Field& zeta0, const Field& v0,
                      const RegimeParams& p, const CLParams& clp) {
    const double mu_lambda = p.mu * clp.lambda;
    if (clp.lambda != 0.0) check_lambda_symbols(g, mu_lambda);

    const double inv_gd = 1.0 / (p.gamma + p.delta);
    const std::size_t n = zeta0.size();
    Field vplus(n), vminus(n);
    for (std::size_t i = 0; i < n; ++i) {
        vplus[i] = 0.5 * (zeta0[i] + v0[i] * inv_gd);
        vminus[i] = 0.5 * (zeta0[i] - v0[i] * inv_gd);
    }

    CLState s;
    s.t = 0.0;
    if (clp.lambda == 0.0) {
        s.vplus_lambda = std::move(vplus);
        s.vminus_lambda = std::move(vminus);
    } else {
        s.vplus_lambda = add(vplus, scaled(g.ddx2(vplus), mu_lambda));
        s.vminus_lambda = sub(vminus, scaled(g.ddx2(vminus), mu_lambda));
    }
    return s;
}

State cl_reconstruct(const Grid& g, const CLState& s, const RegimeParams& p,
                     const CLParams& clp) {
    const double mu_lambda = p.mu * clp.lambda;
    Field vplus = (clp.lambda == 0.0) ? s.vplus_lambda
                                      : invert_helmholtz(g, -mu_lambda, s.vplus_lambda);
    Field vminus = (clp.lambda == 0.0) ? s.vminus_lambda
                                       : invert_helmholtz(g, mu_lambda, s.vminus_lambda);

    vplus = g.translate(vplus, s.t);
    vminus = g.translate(vminus, -s.t);

    const double gd = p.gamma + p.delta;
    State U;
    U.zeta = add(vplus, vminus);
    U.v.resize(vplus.size());
    for (std::size_t i = 0; i < vplus.size(); ++i) U.v[i] = gd * (vplus[i] - vminus[i]);
    return U;
}

}  // namespace gnch
