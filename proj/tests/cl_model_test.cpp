#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gnch/cl_model.hpp"
#include "gnch/integrator.hpp"
#include "gnch/profiles.hpp"
#include "test_util.hpp"

using namespace gnch;
using gnch_test::sup_diff;
using gnch_test::thrown_code;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_SUITE("cl_model") {

TEST_CASE("constants at gamma=0, delta=1, theta=1, lambda=0") {
    RegimeParams p;
    p.gamma = 0.0;
    p.delta = 1.0;
    const CLConstants c = derive_cl_constants(p, CLParams{});
    CHECK(std::fabs(c.alpha1 - 1.5) <= 1e-14);
    CHECK(std::fabs(c.alpha2) <= 1e-14);
    CHECK(std::fabs(c.alpha3) <= 1e-14);
    CHECK(std::fabs(c.nu_t - 1.0 / 6.0) <= 1e-14);
    CHECK(std::fabs(c.nu_x) <= 1e-14);
    CHECK(std::fabs(c.kappa1_cl - 1.0 / 6.0) <= 1e-14);
    CHECK(std::fabs(c.kappa2_cl - 1.0 / 4.0) <= 1e-14);
}

TEST_CASE("constants at the critical ratio gamma=0.25, delta=0.5") {
    RegimeParams p;
    p.gamma = 0.25;
    p.delta = 0.5;
    const CLConstants c = derive_cl_constants(p, CLParams{});
    CHECK(std::fabs(c.alpha1) <= 1e-14);
    CHECK(std::fabs(c.alpha2 + 1.5) <= 1e-14);
    CHECK(std::fabs(c.alpha3 + 1.25) <= 1e-14);
    CHECK(std::fabs(c.nu_t - 0.5) <= 1e-14);
    CHECK(std::fabs(c.nu_x) <= 1e-14);
    CHECK(std::fabs(c.kappa1_cl + 1.0 / 6.0) <= 1e-14);
    CHECK(std::fabs(c.kappa2_cl + 1.0 / 12.0) <= 1e-14);
}

TEST_CASE("the free parameters redistribute but conserve the dispersion") {
    RegimeParams p;
    p.gamma = 0.2;
    p.delta = 1.4;
    p.bo_inv = 0.1;
    const ModelConstants mc = derive_constants(p);
    for (double theta : {0.25, 1.0}) {
        for (double lambda : {0.0, 0.05}) {
            CLParams clp;
            clp.theta = theta;
            clp.lambda = lambda;
            const CLConstants c = derive_cl_constants(p, clp);
            // nu_t + nu_x = nu/2 holds for every admissible (theta, lambda).
            CHECK(std::fabs(c.nu_t + c.nu_x - mc.nu / 2.0) <= 1e-14);
        }
    }
}

TEST_CASE("ill-posed regularization choices are rejected") {
    RegimeParams p;  // gamma=0, delta=1: nu_t = theta/6 + lambda
    CLParams clp;
    clp.theta = 1.0;
    clp.lambda = -0.2;
    CHECK(thrown_code([&] { derive_cl_constants(p, clp); }) == ErrorCode::NUT_NONPOSITIVE);
}

TEST_CASE("splitting and reconstruction invert each other at t=0") {
    const Grid g(128, two_pi);
    RegimeParams p;
    p.mu = 0.1;
    p.gamma = 0.25;
    p.delta = 0.5;
    const Field zeta0 = random_smooth_field(g, 81, 10, 0.6);
    const Field v0 = random_smooth_field(g, 82, 10, 0.4);

    SUBCASE("lambda = 0") {
        const CLParams clp{};
        const CLState s = cl_init_split(g, zeta0, v0, p, clp);
        const State U = cl_reconstruct(g, s, p, clp);
        CHECK(sup_diff(U.zeta, zeta0) <= 1e-12);
        CHECK(sup_diff(U.v, v0) <= 1e-12);
    }
    SUBCASE("small positive lambda") {
        // mu*lambda*k^2 must stay below 1 on every resolved mode for the
        // regularization to be invertible; 0.002 leaves the top symbol at 0.18.
        CLParams clp;
        clp.lambda = 0.002;
        const CLState s = cl_init_split(g, zeta0, v0, p, clp);
        const State U = cl_reconstruct(g, s, p, clp);
        CHECK(sup_diff(U.zeta, zeta0) <= 1e-10);
        CHECK(sup_diff(U.v, v0) <= 1e-10);
    }
}

TEST_CASE("lambda values that degenerate a symbol are rejected") {
    const Grid g(64, two_pi);
    RegimeParams p;
    p.mu = 1.0;
    CLParams clp;
    clp.lambda = -1.0;  // 1 - mu*lambda*k^2 crosses zero at k = 1
    const Field zeta0 = cosine_mode(g, 0.1, 1);
    const Field v0(g.n(), 0.0);
    CHECK(thrown_code([&] { cl_init_split(g, zeta0, v0, p, clp); }) ==
          ErrorCode::SINGULAR_SYMBOL);
}

TEST_CASE("the advective flux is an exact divergence") {
    const Grid g(64, two_pi);
    RegimeParams p;
    p.mu = 0.1;
    p.eps = 0.3;
    p.gamma = 0.25;
    p.delta = 0.5;
    const CLConstants c = derive_cl_constants(p, CLParams{});
    const Field v = random_smooth_field(g, 91, 10, 0.8);
    const Field rhs = cl_rhs(g, v, +1, p, c);
    CHECK(std::fabs(g.mean(rhs)) <= 1e-15);
}

TEST_CASE("with no forcing the components ride their characteristics") {
    const Grid g(128, two_pi);
    RegimeParams p;
    p.mu = 0.1;
    p.eps = 0.0;  // only the unit transport remains (theta=1 has nu_x=0)
    p.gamma = 0.0;
    p.delta = 1.0;
    const CLParams clp{};
    const CLConstants c = derive_cl_constants(p, clp);

    const Field zeta0 = random_smooth_field(g, 71, 8, 0.5);
    const Field v0 = random_smooth_field(g, 72, 8, 0.5);
    const CLState s0 = cl_init_split(g, zeta0, v0, p, clp);

    StepConfig cfg;
    cfg.dt = 0.1;
    cfg.t_end = 1.0;
    const CLTrajectory traj = run_cl(g, s0, p, c, cfg);

    // The lambda variables are steady; the physical state is a pair of
    // counter-propagating translates.
    CHECK(sup_diff(traj.states.back().vplus_lambda, s0.vplus_lambda) <= 1e-13);
    const State U1 = cl_reconstruct(g, traj.states.back(), p, clp);

    Field vplus(g.n()), vminus(g.n());
    const double inv_gd = 1.0 / (p.gamma + p.delta);
    for (std::size_t i = 0; i < g.n(); ++i) {
        vplus[i] = 0.5 * (zeta0[i] + v0[i] * inv_gd);
        vminus[i] = 0.5 * (zeta0[i] - v0[i] * inv_gd);
    }
    const Field zp = g.translate(vplus, 1.0);
    const Field zm = g.translate(vminus, -1.0);
    Field zeta_expected(g.n()), v_expected(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        zeta_expected[i] = zp[i] + zm[i];
        v_expected[i] = (p.gamma + p.delta) * (zp[i] - zm[i]);
    }
    CHECK(sup_diff(U1.zeta, zeta_expected) <= 1e-11);
    CHECK(sup_diff(U1.v, v_expected) <= 1e-11);
}

TEST_CASE("nonlinear evolution conserves both means") {
    const Grid g(128, two_pi);
    RegimeParams p;
    p.mu = 0.1;
    p.eps = 0.3;
    p.gamma = 0.25;
    p.delta = 0.5;
    const CLParams clp{};
    const CLConstants c = derive_cl_constants(p, clp);

    const Field zeta0 = random_smooth_field(g, 61, 8, 0.5);
    const Field v0 = random_smooth_field(g, 62, 8, 0.5);
    const CLState s0 = cl_init_split(g, zeta0, v0, p, clp);

    StepConfig cfg;
    cfg.dt = 0.05;
    cfg.t_end = 1.0;
    const CLTrajectory traj = run_cl(g, s0, p, c, cfg);
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        CHECK(std::fabs(traj.mean_plus[i] - traj.mean_plus[0]) <= 1e-12);
        CHECK(std::fabs(traj.mean_minus[i] - traj.mean_minus[0]) <= 1e-12);
    }
}

}  // TEST_SUITE
