#include "gnch/gn_model.hpp"

#include <cmath>
#include <string>

#include "gnch/errors.hpp"

namespace gnch {

namespace {

Field nl(const Grid& g, const GNOptions& opt, const Field& f) {
    return opt.dealias ? g.dealias(f) : f;
}

void require_h1(const RegimeParams& p, const Field& zeta) {
    const DepthMargins m = check_H1(zeta, p);
    if (!m.ok)
        fail(ErrorCode::H1_VIOLATED, "layer depth vanishes: h1_min = " + std::to_string(m.h1_min) +
                                         ", h2_min = " + std::to_string(m.h2_min));
}

}  // namespace

GNCoeffs gn_coeffs(const RegimeParams& p, const ModelConstants& c, const Field& zeta) {
    const double eps = p.eps;
    const double g = p.gamma;
    const double inv_d = 1.0 / p.delta;
    const std::size_t n = zeta.size();

    GNCoeffs co;
    co.h1.resize(n);
    co.h2.resize(n);
    co.f.resize(n);
    co.fp.resize(n);
    co.q1.resize(n);
    co.q3.resize(n);
    co.q3p.resize(n);

    const double one_plus_invd = 1.0 + inv_d;
    for (std::size_t i = 0; i < n; ++i) {
        const double h1 = 1.0 - eps * zeta[i];
        const double h2 = inv_d + eps * zeta[i];
        const double denom = h1 + g * h2;
        co.h1[i] = h1;
        co.h2[i] = h2;
        co.f[i] = h1 * h2 / denom;
        co.fp[i] = (h1 * h1 - g * h2 * h2) / (denom * denom);
        co.q1[i] = 1.0 + eps * c.kappa1 * zeta[i];
        co.q3[i] = 0.5 * (co.fp[i] - c.varsigma);
        // f''(X) with X = eps*zeta; q3' = f''/2
        co.q3p[i] = -g * one_plus_invd * one_plus_invd / (denom * denom * denom);
    }
    return co;
}

State gn_rhs(const Grid& g, const State& U, const RegimeParams& p, const ModelConstants& c,
             const GNOptions& opt, SolveStats* stats) {
    require_h1(p, U.zeta);
    const GNCoeffs co = gn_coeffs(p, c, U.zeta);
    const TContext ctx = make_t_context(g, c, p.mu, p.eps, U.zeta);
    const double gd = p.gamma + p.delta;

    State dU;
    dU.zeta = scaled(g.ddx(nl(g, opt, mul(co.f, U.v))), -1.0);

    const Field zx = g.ddx(U.zeta);
    const Field vx = g.ddx(U.v);

    Field rhs = mul(co.q1, zx);
    for (double& x : rhs) x *= gd;
    axpy(rhs, p.eps, mul(co.q1, g.ddx(nl(g, opt, mul(co.q3, mul(U.v, U.v))))));
    axpy(rhs, p.mu * p.eps * c.kappa, g.ddx(nl(g, opt, mul(vx, vx))));

    dU.v = invert_T(ctx, rhs, opt.solver_tol, opt.solver_max_iter, stats);
    axpy(dU.v, p.eps * c.varsigma, nl(g, opt, mul(U.v, vx)));
    for (double& x : dU.v) x = -x;
    return dU;
}

State gn_rhs_condensed(const Grid& g, const State& U, const RegimeParams& p,
                       const ModelConstants& c, const GNOptions& opt, SolveStats* stats) {
    require_h1(p, U.zeta);
    const GNCoeffs co = gn_coeffs(p, c, U.zeta);
    const TContext ctx = make_t_context(g, c, p.mu, p.eps, U.zeta);
    const double gd = p.gamma + p.delta;

    const Field zx = g.ddx(U.zeta);
    const Field vx = g.ddx(U.v);

    State dU;
    dU.zeta = nl(g, opt, mul(co.fp, mul(U.v, zx)));
    for (double& x : dU.zeta) x *= p.eps;
    axpy(dU.zeta, 1.0, nl(g, opt, mul(co.f, vx)));
    for (double& x : dU.zeta) x = -x;

    Field rhs = mul(co.q1, zx);
    for (double& x : rhs) x *= gd;
    axpy(rhs, 2.0 * p.eps, nl(g, opt, mul(co.q1, mul(co.q3, mul(U.v, vx)))));
    axpy(rhs, p.mu * p.eps * c.kappa, g.ddx(nl(g, opt, mul(vx, vx))));
    axpy(rhs, p.eps * p.eps, nl(g, opt, mul(co.q1, mul(co.q3p, mul(U.v, mul(U.v, zx))))));

    dU.v = invert_T(ctx, rhs, opt.solver_tol, opt.solver_max_iter, stats);
    axpy(dU.v, p.eps * c.varsigma, nl(g, opt, mul(U.v, vx)));
    for (double& x : dU.v) x = -x;
    return dU;
}

double linear_dispersion(double k, const RegimeParams& p, const ModelConstants& c) {
    return 1.0 / std::sqrt(1.0 + p.mu * c.nu * k * k);
}

namespace {
// h1 V / (h1 + gamma h2) and the symmetric partner, shared by Q and R.
struct ClassicalParts {
    Field inner1;  // d/dx ( h2^3 d/dx ( h1 V / (h1+gamma h2) ) )
    Field inner2;  // d/dx ( h1^3 d/dx ( h2 V / (h1+gamma h2) ) )
    Field grad1;   // d/dx ( h1 V / (h1+gamma h2) )
    Field grad2;   // d/dx ( h2 V / (h1+gamma h2) )
};

ClassicalParts classical_parts(const Grid& g, const Field& h1, const Field& h2, const Field& V,
                               double gamma) {
    const std::size_t n = V.size();
    Field a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double denom = h1[i] + gamma * h2[i];
        a[i] = h1[i] * V[i] / denom;
        b[i] = h2[i] * V[i] / denom;
    }
    ClassicalParts parts;
    parts.grad1 = g.ddx(a);
    parts.grad2 = g.ddx(b);
    Field t1(n), t2(n);
    for (std::size_t i = 0; i < n; ++i) {
        t1[i] = h2[i] * h2[i] * h2[i] * parts.grad1[i];
        t2[i] = h1[i] * h1[i] * h1[i] * parts.grad2[i];
    }
    parts.inner1 = g.ddx(t1);
    parts.inner2 = g.ddx(t2);
    return parts;
}
}  // namespace

Field classical_Q(const Grid& g, const Field& h1, const Field& h2, const Field& V,
                  double gamma) {
    const ClassicalParts parts = classical_parts(g, h1, h2, V, gamma);
    Field out(V.size());
    for (std::size_t i = 0; i < V.size(); ++i)
        out[i] = -(h1[i] * parts.inner1[i] + gamma * h2[i] * parts.inner2[i]) /
                 (3.0 * h1[i] * h2[i]);
    return out;
}

Field classical_R(const Grid& g, const Field& h1, const Field& h2, const Field& V,
                  double gamma) {
    const ClassicalParts parts = classical_parts(g, h1, h2, V, gamma);
    Field out(V.size());
    for (std::size_t i = 0; i < V.size(); ++i) {
        const double s1 = h2[i] * parts.grad1[i];
        const double s2 = h1[i] * parts.grad2[i];
        const double denom = h1[i] + gamma * h2[i];
        out[i] = 0.5 * (s1 * s1 - gamma * s2 * s2) +
                 V[i] / (3.0 * denom) *
                     (h1[i] / h2[i] * parts.inner1[i] - gamma * h2[i] / h1[i] * parts.inner2[i]);
    }
    return out;
}

double expansion_residual_Q(const Grid& g, const Field& zeta, const Field& v,
                            const RegimeParams& p, const ModelConstants& c, double s) {
    const GNCoeffs co = gn_coeffs(p, c, zeta);
    const Field qv = classical_Q(g, co.h1, co.h2, v, p.gamma);

    const Field vxx = g.ddx2(v);
    const Field zxx = g.ddx2(zeta);
    const Field zvx = g.ddx(mul(zeta, g.ddx(v)));
    const double gd3 = (p.gamma + p.delta) / 3.0;

    Field resid(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double expansion =
            -c.nu_bar * vxx[i] -
            p.eps * gd3 *
                ((c.beta - c.alpha) * v[i] * zxx[i] + (c.alpha + 2.0 * c.beta) * zvx[i] -
                 c.beta * zeta[i] * vxx[i]);
        resid[i] = qv[i] - expansion;
    }
    return g.sobolev_norm(resid, s);
}

double expansion_residual_R(const Grid& g, const Field& zeta, const Field& v,
                            const RegimeParams& p, const ModelConstants& c, double s) {
    const GNCoeffs co = gn_coeffs(p, c, zeta);
    const Field rv = classical_R(g, co.h1, co.h2, v, p.gamma);

    const Field vx = g.ddx(v);
    const Field vxx = g.ddx2(v);
    Field resid(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        resid[i] = rv[i] - c.alpha * (0.5 * vx[i] * vx[i] + v[i] * vxx[i] / 3.0);
    return g.sobolev_norm(resid, s);
}

}  // namespace gnch
