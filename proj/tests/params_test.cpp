#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gnch/params.hpp"
#include "test_util.hpp"

using namespace gnch;
using gnch_test::thrown_code;

TEST_SUITE("params") {

TEST_CASE("constants at gamma=0, delta=1, bo=inf") {
    RegimeParams p;
    p.gamma = 0.0;
    p.delta = 1.0;
    p.bo_inv = 0.0;
    const ModelConstants c = derive_constants(p);
    CHECK(std::fabs(c.nu_bar - 1.0 / 3.0) <= 1e-14);
    CHECK(std::fabs(c.nu - 1.0 / 3.0) <= 1e-14);
    CHECK(std::fabs(c.alpha - 1.0) <= 1e-14);
    CHECK(std::fabs(c.beta - 1.0) <= 1e-14);
    CHECK(std::fabs(c.kappa1 - 1.0) <= 1e-14);
    CHECK(std::fabs(c.kappa2 - 3.0) <= 1e-14);
    CHECK(std::fabs(c.varsigma - 1.0) <= 1e-14);
    CHECK(std::fabs(c.kappa - 2.0 / 3.0) <= 1e-14);
}

TEST_CASE("constants at gamma=0.25, delta=0.5, bo=inf") {
    RegimeParams p;
    p.gamma = 0.25;
    p.delta = 0.5;
    p.bo_inv = 0.0;
    const ModelConstants c = derive_constants(p);
    CHECK(std::fabs(c.nu_bar - 1.0) <= 1e-14);
    CHECK(std::fabs(c.nu - 1.0) <= 1e-14);
    CHECK(std::fabs(c.alpha - 4.0 / 3.0) <= 1e-14);
    CHECK(std::fabs(c.beta) <= 1e-14);
    CHECK(std::fabs(c.kappa1 + 1.0 / 3.0) <= 1e-14);
    CHECK(std::fabs(c.kappa2) <= 1e-14);
    CHECK(std::fabs(c.varsigma - 8.0 / 9.0) <= 1e-14);
    CHECK(std::fabs(c.kappa - 8.0 / 9.0) <= 1e-14);
}

TEST_CASE("capillarity can cancel the dispersive coefficient") {
    RegimeParams p;
    p.gamma = 0.0;
    p.delta = 1.0;
    p.bo_inv = 1.0 / 3.0;  // equals nu_bar, so nu = 0
    CHECK(thrown_code([&] { derive_constants(p); }) == ErrorCode::NU_NONPOSITIVE);
    p.bo_inv = 0.4;
    CHECK(thrown_code([&] { derive_constants(p); }) == ErrorCode::NU_NONPOSITIVE);
}

TEST_CASE("defining relations hold across parameter tuples") {
    const double gammas[] = {0.0, 0.1, 0.5, 0.9};
    const double deltas[] = {0.3, 0.8, 1.0, 2.5};
    const double bos[] = {0.0, 0.05};
    for (double gamma : gammas)
        for (double delta : deltas)
            for (double bo_inv : bos) {
                RegimeParams p;
                p.gamma = gamma;
                p.delta = delta;
                p.bo_inv = bo_inv;
                const double nb =
                    (1.0 + gamma * delta) / (3.0 * delta * (gamma + delta));
                if (nb - bo_inv <= 0.0) continue;
                const ModelConstants c = derive_constants(p);
                const double gd = gamma + delta;
                CHECK(std::fabs(c.nu - (c.nu_bar - bo_inv)) <= 1e-14);
                CHECK(std::fabs(c.nu * c.kappa1 - gd * (2.0 * c.beta - c.alpha) / 3.0) <= 1e-13);
                CHECK(std::fabs(c.nu * c.kappa2 - gd * c.beta) <= 1e-13);
                const double rhs = (2.0 * c.alpha - c.beta) / 3.0 -
                                   bo_inv * (delta * delta - gamma) / (gd * gd);
                CHECK(std::fabs(c.nu * c.varsigma - rhs) <= 1e-13);
                CHECK(std::fabs(c.kappa - 2.0 / 3.0 * (1.0 - gamma) / (gd * gd)) <= 1e-14);
            }
}

TEST_CASE("critical depth ratio kills the quadratic coefficients") {
    for (double delta : {0.5, 0.3, 0.9}) {
        RegimeParams p;
        p.delta = delta;
        p.gamma = delta * delta;
        const ModelConstants c = derive_constants(p);
        CHECK(std::fabs(c.beta) <= 1e-14);
        CHECK(std::fabs(c.kappa2) <= 1e-14);
    }
}

TEST_CASE("regime classification") {
    RegimeParams p;  // mu=0.1, eps=0.1, delta=1, gamma=0
    RegimeReport r = check_regime(p);
    CHECK(r.in_SW);
    CHECK(r.in_CH);
    CHECK(std::fabs(r.nu_margin - (1.0 / 3.0 - 1e-3)) <= 1e-14);
    CHECK(std::fabs(r.M_SW - 10.0) <= 1e-14);
    CHECK(std::fabs(r.M_CH - 1000.0) <= 1e-14);

    SUBCASE("eps beyond the Camassa-Holm line") {
        p.eps = 0.9;  // > sqrt(0.1)
        r = check_regime(p);
        CHECK(r.in_SW);
        CHECK(!r.in_CH);
    }
    SUBCASE("mu beyond the shallow-water cap") {
        p.mu = 1.5;
        r = check_regime(p);
        CHECK(!r.in_SW);
        CHECK(!r.in_CH);
    }
    SUBCASE("too much surface tension") {
        p.bo_inv = 1.2;  // beyond bo_min_inv = 1
        r = check_regime(p);
        CHECK(!r.in_SW);
    }
    SUBCASE("depth ratio outside the band") {
        p.delta = 0.05;
        r = check_regime(p);
        CHECK(!r.in_SW);
    }
}

TEST_CASE("small data keeps every condition margin") {
    RegimeParams p;
    p.gamma = 0.3;
    p.delta = 0.9;
    p.eps = 0.2;
    const ModelConstants c = derive_constants(p);
    const RegimeBounds b;

    const double h0 = 0.5;
    const double cap = std::max({std::fabs(c.kappa1), std::fabs(c.kappa2), 1.0, b.delta_max});
    const double zmax = (1.0 - h0) / (cap * p.eps);

    Field zeta(64);
    for (std::size_t i = 0; i < zeta.size(); ++i)
        zeta[i] = zmax * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / 64.0);

    const DepthMargins dm = check_H1(zeta, p);
    const EllipticityMargins em = check_H2(zeta, p, c);
    CHECK(dm.ok);
    CHECK(em.ok);
    CHECK(dm.h1_min >= h0 - 1e-12);
    CHECK(dm.h2_min >= h0 / b.delta_max - 1e-12);
    CHECK(em.q1_min >= h0 - 1e-12);
    CHECK(em.q2_min >= h0 - 1e-12);
}

TEST_CASE("violated depth and ellipticity conditions are flagged") {
    RegimeParams p;  // gamma=0, delta=1: kappa1=1, kappa2=3
    p.eps = 1.0;
    const ModelConstants c = derive_constants(p);

    const Field deep(8, -1.5);  // h2 = 1 - 1.5 < 0
    CHECK(!check_H1(deep, p).ok);
    CHECK(check_H1(Field(8, 0.0), p).ok);

    const Field steep(8, -0.4);  // q2 = 1 - 1.2 < 0
    CHECK(!check_H2(steep, p, c).ok);
    CHECK(check_H2(Field(8, 0.1), p, c).ok);
}

}  // TEST_SUITE
