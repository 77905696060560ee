#ifndef GNCH_ELLIPTIC_HPP
#define GNCH_ELLIPTIC_HPP

#include "gnch/field.hpp"
#include "gnch/grid.hpp"
#include "gnch/params.hpp"

namespace gnch {

// Frozen coefficients of the velocity-equation operator
//   T v = q1 v - mu*nu d/dx (q2 dv/dx),   q_i = 1 + eps*kappa_i*zeta.
// Immutable once built; safe to share across threads as long as the
// referenced Grid is used by one thread at a time.
struct TContext {
    const Grid* grid = nullptr;
    Field q1_field;
    Field q2_field;
    double mu_nu = 0.0;
};

TContext make_t_context(const Grid& g, const ModelConstants& c, double mu, double eps,
                        const Field& zeta);

Field apply_T(const TContext& ctx, const Field& v);

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;  // final |T v - f|_L2
};

// Conjugate gradients preconditioned by the constant-coefficient symbol
// (1 + mu*nu k^2)^{-1}; initial guess is the preconditioned right-hand
// side. Converges when |T v - f|_L2 <= tol * |f|_L2.
Field invert_T(const TContext& ctx, const Field& f, double tol = 1e-11, int max_iter = 500,
               SolveStats* stats = nullptr);

// (1 - c d_xx)^{-1} by exact modal division with symbol 1 + c k^2.
// c may be negative as long as the symbol stays positive on every
// resolved wavenumber.
Field invert_helmholtz(const Grid& g, double c, const Field& f);

}  // namespace gnch

#endif
