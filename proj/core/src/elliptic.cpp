#include "gnch/elliptic.hpp"

#include <cmath>
#include <string>

#include "gnch/errors.hpp"

namespace gnch {

TContext make_t_context(const Grid& g, const ModelConstants& c, double mu, double eps,
                        const Field& zeta) {
    TContext ctx;
    ctx.grid = &g;
    ctx.q1_field.resize(zeta.size());
    ctx.q2_field.resize(zeta.size());
    for (std::size_t i = 0; i < zeta.size(); ++i) {
        ctx.q1_field[i] = 1.0 + eps * c.kappa1 * zeta[i];
        ctx.q2_field[i] = 1.0 + eps * c.kappa2 * zeta[i];
    }
    ctx.mu_nu = mu * c.nu;
    return ctx;
}

Field apply_T(const TContext& ctx, const Field& v) {
    const Grid& g = *ctx.grid;
    Field dv = g.ddx(v);
    for (std::size_t i = 0; i < dv.size(); ++i) dv[i] *= ctx.q2_field[i];
    Field flux = g.ddx(dv);
    Field out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = ctx.q1_field[i] * v[i] - ctx.mu_nu * flux[i];
    return out;
}

Field invert_T(const TContext& ctx, const Field& f, double tol, int max_iter,
               SolveStats* stats) {
    const Grid& g = *ctx.grid;
    if (field_min(ctx.q1_field) <= 0.0 || field_min(ctx.q2_field) <= 0.0)
        fail(ErrorCode::H2_VIOLATED, "q1 or q2 not positive, operator may lose coercivity");
    if (!(tol > 0.0)) fail(ErrorCode::CONFIG_INVALID, "solver tolerance must be positive");

    const double fnorm = g.l2_norm(f);
    if (fnorm == 0.0) {
        if (stats) *stats = {0, 0.0};
        return Field(f.size(), 0.0);
    }

    const double mu_nu = ctx.mu_nu;
    std::vector<double> minv(g.n() / 2 + 1);
    for (std::size_t j = 0; j < minv.size(); ++j) {
        const double kj = g.k(j);
        minv[j] = 1.0 / (1.0 + mu_nu * kj * kj);
    }

    Field x = g.apply_symbol_table(f, minv);
    Field r = sub(f, apply_T(ctx, x));
    double rnorm = g.l2_norm(r);
    const double target = tol * fnorm;

    int it = 0;
    if (rnorm > target) {
        Field z = g.apply_symbol_table(r, minv);
        Field p = z;
        double rz = g.inner(r, z);
        for (; it < max_iter; ) {
            Field Ap = apply_T(ctx, p);
            const double alpha = rz / g.inner(p, Ap);
            axpy(x, alpha, p);
            axpy(r, -alpha, Ap);
            ++it;
            rnorm = g.l2_norm(r);
            if (rnorm <= target) break;
            z = g.apply_symbol_table(r, minv);
            const double rz_new = g.inner(r, z);
            const double beta = rz_new / rz;
            rz = rz_new;
            for (std::size_t i = 0; i < p.size(); ++i) p[i] = z[i] + beta * p[i];
        }
    }

    if (rnorm > target)
        fail(ErrorCode::NO_CONVERGENCE,
             "elliptic solve stalled at residual " + std::to_string(rnorm / fnorm) + " after " +
                 std::to_string(it) + " iterations");
    if (stats) *stats = {it, rnorm};
    return x;
}

Field invert_helmholtz(const Grid& g, double c, const Field& f) {
    std::vector<double> sym(g.n() / 2 + 1);
    for (std::size_t j = 0; j < sym.size(); ++j) {
        const double kj = g.k(j);
        const double denom = 1.0 + c * kj * kj;
        if (denom <= 0.0)
            fail(ErrorCode::SINGULAR_SYMBOL,
                 "1 + c k^2 = " + std::to_string(denom) + " at k = " + std::to_string(kj));
        sym[j] = 1.0 / denom;
    }
    return g.apply_symbol_table(f, sym);
}

}  // namespace gnch
