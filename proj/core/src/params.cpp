#include "gnch/params.hpp"

#include "gnch/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace gnch {

ModelConstants derive_constants(const RegimeParams& p) {
    const double g = p.gamma;
    const double d = p.delta;
    const double gd = g + d;

    ModelConstants c{};
    c.nu_bar = (1.0 + g * d) / (3.0 * d * gd);
    c.nu = c.nu_bar - p.bo_inv;
    if (!(c.nu > 0.0)) {
        fail(ErrorCode::NU_NONPOSITIVE,
             "nu = " + std::to_string(c.nu) + " (bo_inv too close to nu_bar)");
    }
    c.alpha = (1.0 - g) / (gd * gd);
    c.beta = (1.0 + g * d) * (d * d - g) / (d * gd * gd * gd);
    c.kappa1 = gd * (2.0 * c.beta - c.alpha) / 3.0 / c.nu;
    c.kappa2 = gd * c.beta / c.nu;
    c.varsigma =
        ((2.0 * c.alpha - c.beta) / 3.0 - p.bo_inv * (d * d - g) / (gd * gd)) / c.nu;
    c.kappa = (2.0 / 3.0) * (1.0 - g) / (gd * gd);
    return c;
}

RegimeReport check_regime(const RegimeParams& p, const RegimeBounds& b) {
    RegimeReport r{};
    r.in_SW = p.mu > 0.0 && p.mu <= b.mu_max && p.eps >= 0.0 && p.eps <= 1.0 &&
              p.delta > b.delta_min && p.delta < b.delta_max && p.gamma >= 0.0 &&
              p.gamma < 1.0 && p.bo_inv >= 0.0 && p.bo_inv <= b.bo_min_inv;

    const double nu = (1.0 + p.gamma * p.delta) / (3.0 * p.delta * (p.gamma + p.delta)) -
                      p.bo_inv;
    r.nu_margin = nu - b.nu0;
    r.in_CH = r.in_SW && p.eps <= b.M * std::sqrt(p.mu) && nu >= b.nu0;

    r.M_SW = std::max({b.mu_max, 1.0 / b.delta_min, b.delta_max, b.bo_min_inv});
    r.M_CH = std::max({r.M_SW, b.M, 1.0 / b.nu0});
    return r;
}

DepthMargins check_H1(const Field& zeta, const RegimeParams& p) {
    const double zmin = field_min(zeta);
    const double zmax = field_max(zeta);
    DepthMargins m{};
    m.h1_min = 1.0 - p.eps * zmax;
    m.h2_min = 1.0 / p.delta + p.eps * zmin;
    m.ok = m.h1_min > 0.0 && m.h2_min > 0.0;
    return m;
}

EllipticityMargins check_H2(const Field& zeta, const RegimeParams& p,
                            const ModelConstants& c) {
    const double zmin = field_min(zeta);
    const double zmax = field_max(zeta);
    auto coeff_min = [&](double kap) {
        return 1.0 + p.eps * kap * (kap >= 0.0 ? zmin : zmax);
    };
    EllipticityMargins m{};
    m.q1_min = coeff_min(c.kappa1);
    m.q2_min = coeff_min(c.kappa2);
    m.ok = m.q1_min > 0.0 && m.q2_min > 0.0;
    return m;
}

}  // namespace gnch
