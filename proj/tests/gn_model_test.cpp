#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gnch/gn_model.hpp"
#include "gnch/profiles.hpp"
#include "test_util.hpp"

using namespace gnch;
using gnch_test::sup_diff;
using gnch_test::thrown_code;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

TEST_SUITE("gn_model") {

TEST_CASE("coefficient fields at a flat interface") {
    const Grid g(32, two_pi);
    const Field zero(g.n(), 0.0);

    SUBCASE("gamma=0, delta=1") {
        RegimeParams p;
        const ModelConstants c = derive_constants(p);
        const GNCoeffs gc = gn_coeffs(p, c, zero);
        CHECK(std::fabs(gc.h1[0] - 1.0) <= 1e-15);
        CHECK(std::fabs(gc.h2[0] - 1.0) <= 1e-15);
        CHECK(std::fabs(gc.f[0] - 1.0) <= 1e-15);
        CHECK(std::fabs(gc.fp[0] - 1.0) <= 1e-15);
        CHECK(std::fabs(gc.q1[0] - 1.0) <= 1e-15);
        CHECK(std::fabs(gc.q3[0]) <= 1e-15);   // (fp - varsigma)/2 = 0
        CHECK(std::fabs(gc.q3p[0]) <= 1e-15);  // vanishes with gamma
    }
    SUBCASE("critical ratio gamma=0.25, delta=0.5") {
        RegimeParams p;
        p.gamma = 0.25;
        p.delta = 0.5;
        const ModelConstants c = derive_constants(p);
        const GNCoeffs gc = gn_coeffs(p, c, zero);
        CHECK(std::fabs(gc.h2[0] - 2.0) <= 1e-15);
        CHECK(std::fabs(gc.f[0] - 4.0 / 3.0) <= 1e-14);
        CHECK(std::fabs(gc.fp[0]) <= 1e-14);  // quadratic coupling dies
    }
}

TEST_CASE("analytic derivatives match difference quotients") {
    const Grid g(64, two_pi);
    RegimeParams p;
    p.gamma = 0.4;
    p.delta = 1.7;
    p.eps = 0.2;
    const ModelConstants c = derive_constants(p);

    const Field zeta = random_smooth_field(g, 7, 6, 0.5);
    const double h = 1e-6;
    Field up(g.n()), dn(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        up[i] = zeta[i] + h / p.eps;  // shift X = eps*zeta by exactly h
        dn[i] = zeta[i] - h / p.eps;
    }
    const GNCoeffs mid = gn_coeffs(p, c, zeta);
    const GNCoeffs plus = gn_coeffs(p, c, up);
    const GNCoeffs minus = gn_coeffs(p, c, dn);

    for (std::size_t i = 0; i < g.n(); i += 7) {
        const double fp_fd = (plus.f[i] - minus.f[i]) / (2.0 * h);
        CHECK(std::fabs(fp_fd - mid.fp[i]) <= 1e-7);
        const double q3p_fd = (plus.q3[i] - minus.q3[i]) / (2.0 * h);
        CHECK(std::fabs(q3p_fd - mid.q3p[i]) <= 1e-7);
    }
}

TEST_CASE("rest state is an equilibrium") {
    const Grid g(64, two_pi);
    RegimeParams p;
    const ModelConstants c = derive_constants(p);
    State U;
    U.zeta = Field(g.n(), 0.0);
    U.v = Field(g.n(), 0.0);
    const State dU = gn_rhs(g, U, p, c);
    CHECK(sup_diff(dU.zeta, Field(g.n(), 0.0)) <= 1e-15);
    CHECK(sup_diff(dU.v, Field(g.n(), 0.0)) <= 1e-15);
}

TEST_CASE("linearization transports the right-moving eigenvector") {
    const Grid g(128, two_pi);
    RegimeParams p;
    p.mu = 0.1;
    p.eps = 1e-8;
    const ModelConstants c = derive_constants(p);
    const double k = 2.0;
    const double ck = linear_dispersion(k, p, c);
    CHECK(std::fabs(ck - 1.0 / std::sqrt(1.0 + p.mu * c.nu * k * k)) <= 1e-15);

    State U;
    U.zeta = cosine_mode(g, 1.0, 2);
    U.v = scaled(U.zeta, (p.gamma + p.delta) * ck);
    GNOptions opt;
    opt.solver_tol = 1e-13;
    const State dU = gn_rhs(g, U, p, c, opt);

    // For the eigenmode, d/dt U = -c(k) d/dx U up to O(eps) corrections.
    CHECK(sup_diff(dU.zeta, scaled(g.ddx(U.zeta), -ck)) <= 1e-6);
    CHECK(sup_diff(dU.v, scaled(g.ddx(U.v), -ck)) <= 1e-6);
}

TEST_CASE("both right-hand-side assemblies agree") {
    const Grid g(128, two_pi);
    RegimeParams p;
    p.mu = 0.2;
    p.eps = 0.15;
    p.gamma = 0.35;
    p.delta = 1.2;
    const ModelConstants c = derive_constants(p);

    GNOptions opt;
    opt.dealias = false;  // both assemblies must see identical products
    opt.solver_tol = 1e-12;
    for (int trial = 0; trial < 5; ++trial) {
        State U;
        U.zeta = random_smooth_field(g, 100 + 2 * trial, 6, 0.4);
        U.v = random_smooth_field(g, 101 + 2 * trial, 6, 0.4);
        const State a = gn_rhs(g, U, p, c, opt);
        const State b = gn_rhs_condensed(g, U, p, c, opt);
        CHECK(sup_diff(a.zeta, b.zeta) <= 1e-9);
        CHECK(sup_diff(a.v, b.v) <= 1e-9);
    }
}

TEST_CASE("classical operators at constant depths") {
    const Grid g(128, two_pi);
    const double gamma = 0.5;
    const double delta = 0.8;
    const Field h1(g.n(), 1.0);
    const Field h2(g.n(), 1.0 / delta);
    const Field V = random_smooth_field(g, 60, 8, 1.0);

    RegimeParams p;
    p.gamma = gamma;
    p.delta = delta;
    const ModelConstants c = derive_constants(p);

    // With flat depths the dispersive operator is -nu_bar d_xx and the
    // quadratic one collapses to alpha ((V')^2/2 + V V''/3).
    const Field q = classical_Q(g, h1, h2, V, gamma);
    CHECK(sup_diff(q, scaled(g.ddx2(V), -c.nu_bar)) <= 1e-9);

    const Field vx = g.ddx(V);
    const Field vxx = g.ddx2(V);
    Field r_expected(g.n());
    for (std::size_t i = 0; i < g.n(); ++i)
        r_expected[i] = c.alpha * (0.5 * vx[i] * vx[i] + V[i] * vxx[i] / 3.0);
    const Field r = classical_R(g, h1, h2, V, gamma);
    CHECK(sup_diff(r, r_expected) <= 1e-9);
}

TEST_CASE("expansion residuals decay at their stated orders") {
    const Grid g(256, two_pi);
    RegimeParams p;
    p.mu = 0.1;
    p.gamma = 0.5;
    p.delta = 1.3;
    const ModelConstants c = derive_constants(p);

    Field zeta(g.n()), v(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double x = g.node(i);
        zeta[i] = 0.9 * std::cos(x) + 0.4 * std::sin(2.0 * x);
        v[i] = 0.7 * std::sin(x) - 0.3 * std::cos(3.0 * x);
    }

    RegimeParams pa = p, pb = p;
    pa.eps = 0.1;
    pb.eps = 0.05;
    const double qa = expansion_residual_Q(g, zeta, v, pa, c);
    const double qb = expansion_residual_Q(g, zeta, v, pb, c);
    const double ra = expansion_residual_R(g, zeta, v, pa, c);
    const double rb = expansion_residual_R(g, zeta, v, pb, c);
    CHECK(qb < qa / 3.5);  // second order: halving eps divides by ~4
    CHECK(rb < ra / 1.8);  // first order: halving eps divides by ~2
}

TEST_CASE("drained layer raises the depth error") {
    const Grid g(32, two_pi);
    RegimeParams p;
    p.eps = 1.0;
    const ModelConstants c = derive_constants(p);
    State U;
    U.zeta = Field(g.n(), 1.2);  // h1 = 1 - 1.2 < 0
    U.v = Field(g.n(), 0.0);
    CHECK(thrown_code([&] { gn_rhs(g, U, p, c); }) == ErrorCode::H1_VIOLATED);
}

}  // TEST_SUITE
