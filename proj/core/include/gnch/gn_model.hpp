#ifndef GNCH_GN_MODEL_HPP
#define GNCH_GN_MODEL_HPP

#include "gnch/elliptic.hpp"
#include "gnch/field.hpp"
#include "gnch/grid.hpp"
#include "gnch/params.hpp"

namespace gnch {

// Composite coefficient fields of the interface system evaluated on the
// grid for a given zeta. h1, h2 are the dimensionless layer depths,
// f = h1 h2 / (h1 + gamma h2) is the flux coefficient of the mass
// equation, fp its derivative with respect to X = eps*zeta, q1 the first
// ellipticity weight and q3 = (fp - varsigma)/2 the quadratic velocity
// coefficient; q3p is the analytic derivative of q3.
struct GNCoeffs {
    Field h1, h2, f, fp, q1, q3, q3p;
};

GNCoeffs gn_coeffs(const RegimeParams& p, const ModelConstants& c, const Field& zeta);

struct GNOptions {
    bool dealias = true;  // 2/3-rule filter on nonlinear products
    double solver_tol = 1e-11;
    int solver_max_iter = 500;
};

// Time derivative of (zeta, v):
//   d zeta/dt = -d/dx ( f(eps zeta) v )
//   d v/dt    = -eps*varsigma v v_x
//               - T^{-1}[ (gamma+delta) q1 zeta_x
//                         + eps q1 d/dx ( q3 v^2 )
//                         + mu eps kappa d/dx ( (v_x)^2 ) ]
State gn_rhs(const Grid& g, const State& U, const RegimeParams& p, const ModelConstants& c,
             const GNOptions& opt = {}, SolveStats* stats = nullptr);

// Same vector field assembled in the quasilinear form
//   d zeta/dt = -( eps f' v zeta_x + f v_x )
//   d v/dt    = -eps*varsigma v v_x
//               - T^{-1}[ (gamma+delta) q1 zeta_x
//                         + eps ( 2 q1 q3 v v_x + mu kappa d/dx((v_x)^2) )
//                         + eps^2 q1 q3' v^2 zeta_x ]
// used as an independent cross-check of gn_rhs.
State gn_rhs_condensed(const Grid& g, const State& U, const RegimeParams& p,
                       const ModelConstants& c, const GNOptions& opt = {},
                       SolveStats* stats = nullptr);

// Phase speed of the linearization about rest: c(k) = 1/sqrt(1 + mu nu k^2).
double linear_dispersion(double k, const RegimeParams& p, const ModelConstants& c);

// Dispersive operators of the classical two-layer Green-Naghdi system,
// evaluated spectrally. Used for consistency residuals only; the
// classical system itself is never time-stepped.
Field classical_Q(const Grid& g, const Field& h1, const Field& h2, const Field& V,
                  double gamma);
Field classical_R(const Grid& g, const Field& h1, const Field& h2, const Field& V,
                  double gamma);

// H^s norm of classical_Q minus its first-order expansion
//   -nu_bar v_xx - eps ((gamma+delta)/3) ( (beta-alpha) v zeta_xx
//       + (alpha+2 beta) d/dx(zeta v_x) - beta zeta v_xx )
// (expected O(eps^2)), and of classical_R minus
//   alpha ( (v_x)^2/2 + v v_xx / 3 )   (expected O(eps)).
double expansion_residual_Q(const Grid& g, const Field& zeta, const Field& v,
                            const RegimeParams& p, const ModelConstants& c, double s = 2.0);
double expansion_residual_R(const Grid& g, const Field& zeta, const Field& v,
                            const RegimeParams& p, const ModelConstants& c, double s = 2.0);

}  // namespace gnch

#endif
