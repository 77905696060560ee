#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gnch/elliptic.hpp"
#include "gnch/profiles.hpp"
#include "test_util.hpp"

using namespace gnch;
using gnch_test::sup_diff;
using gnch_test::thrown_code;

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;

RegimeParams base_params() {
    RegimeParams p;
    p.mu = 0.1;
    p.eps = 0.1;
    p.delta = 0.9;
    p.gamma = 0.3;
    return p;
}
}  // namespace

TEST_SUITE("elliptic") {

TEST_CASE("flat interface reduces to a constant-coefficient operator") {
    const Grid g(64, two_pi);
    const RegimeParams p = base_params();
    const ModelConstants c = derive_constants(p);
    const TContext ctx = make_t_context(g, c, p.mu, p.eps, Field(g.n(), 0.0));

    const double k = 4.0;
    Field v(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) v[i] = std::sin(k * g.node(i));
    const double symbol = 1.0 + p.mu * c.nu * k * k;
    CHECK(sup_diff(apply_T(ctx, v), scaled(v, symbol)) <= 1e-12 * symbol);
}

TEST_CASE("preconditioner solves the flat problem in at most one iteration") {
    const Grid g(64, two_pi);
    const RegimeParams p = base_params();
    const ModelConstants c = derive_constants(p);
    const TContext ctx = make_t_context(g, c, p.mu, p.eps, Field(g.n(), 0.0));

    const Field f = random_smooth_field(g, 21, 10, 1.0);
    SolveStats stats;
    const Field v = invert_T(ctx, f, 1e-11, 500, &stats);
    CHECK(stats.iterations <= 1);
    CHECK(sup_diff(apply_T(ctx, v), f) <= 1e-10);
}

TEST_CASE("symmetry, coercivity and round trip on an uneven interface") {
    const Grid g(128, two_pi);
    const RegimeParams p = base_params();
    const ModelConstants c = derive_constants(p);
    const Field zeta = random_smooth_field(g, 31, 8, 0.5);
    const TContext ctx = make_t_context(g, c, p.mu, p.eps, zeta);

    const Field u = random_smooth_field(g, 32, 12, 1.0);
    const Field w = random_smooth_field(g, 33, 12, 1.0);
    const Field Tu = apply_T(ctx, u);
    const Field Tw = apply_T(ctx, w);

    const double defect = std::fabs(g.inner(Tu, w) - g.inner(u, Tw));
    CHECK(defect <= 1e-10 * g.l2_norm(u) * g.l2_norm(w));

    const double h02 = std::min(field_min(ctx.q1_field), field_min(ctx.q2_field));
    const double hu = g.h1mu_norm(u, p.mu);
    CHECK(g.inner(Tu, u) >= h02 * std::min(1.0, c.nu) * hu * hu - 1e-9);

    SolveStats stats;
    const Field back = invert_T(ctx, Tu, 1e-12, 500, &stats);
    CHECK(sup_diff(back, u) <= 1e-9);
    CHECK(stats.iterations <= 500);
    CHECK(stats.residual <= 1e-12 * g.l2_norm(Tu));
}

TEST_CASE("zero right-hand side short-circuits") {
    const Grid g(64, two_pi);
    const RegimeParams p = base_params();
    const ModelConstants c = derive_constants(p);
    const TContext ctx = make_t_context(g, c, p.mu, p.eps, Field(g.n(), 0.0));
    SolveStats stats{99, 99.0};
    const Field v = invert_T(ctx, Field(g.n(), 0.0), 1e-11, 500, &stats);
    CHECK(sup_diff(v, Field(g.n(), 0.0)) == 0.0);
    CHECK(stats.iterations == 0);
    CHECK(stats.residual == 0.0);
}

TEST_CASE("solver contract violations raise typed errors") {
    const Grid g(64, two_pi);
    RegimeParams p;  // gamma=0, delta=1: kappa2 = 3
    p.eps = 0.5;
    const ModelConstants c = derive_constants(p);

    SUBCASE("lost ellipticity") {
        const TContext ctx = make_t_context(g, c, p.mu, p.eps, Field(g.n(), -0.7));
        CHECK(thrown_code([&] { invert_T(ctx, Field(g.n(), 1.0)); }) ==
              ErrorCode::H2_VIOLATED);
    }
    SUBCASE("nonpositive tolerance") {
        const TContext ctx = make_t_context(g, c, p.mu, p.eps, Field(g.n(), 0.0));
        CHECK(thrown_code([&] { invert_T(ctx, Field(g.n(), 1.0), 0.0); }) ==
              ErrorCode::CONFIG_INVALID);
    }
    SUBCASE("iteration budget exhausted") {
        const Field zeta = random_smooth_field(g, 55, 8, 0.5);
        const TContext ctx = make_t_context(g, c, p.mu, p.eps, zeta);
        const Field f = random_smooth_field(g, 56, 10, 1.0);
        CHECK(thrown_code([&] { invert_T(ctx, f, 1e-15, 1); }) ==
              ErrorCode::NO_CONVERGENCE);
    }
}

TEST_CASE("helmholtz inverse by modal division") {
    const Grid g(64, two_pi);
    const double cpos = 0.2;
    const double k = 5.0;
    Field f(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) f[i] = std::cos(k * g.node(i));
    const Field v = invert_helmholtz(g, cpos, scaled(f, 1.0 + cpos * k * k));
    CHECK(sup_diff(v, f) <= 1e-12);

    // A slightly negative coefficient is fine while the symbol stays positive.
    const double cneg = -5e-4;  // 1 + c k^2 = 0.488 at the top wavenumber
    const Field w = invert_helmholtz(g, cneg, scaled(f, 1.0 + cneg * k * k));
    CHECK(sup_diff(w, f) <= 1e-12);

    CHECK(thrown_code([&] { invert_helmholtz(g, -0.5, f); }) == ErrorCode::SINGULAR_SYMBOL);
}

}  // TEST_SUITE
