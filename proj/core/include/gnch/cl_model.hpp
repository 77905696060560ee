#ifndef GNCH_CL_MODEL_HPP
#define GNCH_CL_MODEL_HPP

#include "gnch/field.hpp"
#include "gnch/grid.hpp"
#include "gnch/params.hpp"

namespace gnch {

// Free parameters (theta, lambda) of the unidirectional model family.
struct CLParams {
    double theta = 1.0;
    double lambda = 0.0;
};

struct CLConstants {
    double alpha1 = 0.0;     // quadratic advection, vanishes at delta^2 = gamma
    double alpha2 = 0.0;     // cubic advection
    double alpha3 = 0.0;     // quartic advection
    double nu_t = 0.0;       // BBM-type regularization, must stay positive
    double nu_x = 0.0;       // linear dispersion
    double kappa1_cl = 0.0;  // v v_xx flux coefficient
    double kappa2_cl = 0.0;  // (v_x)^2 flux coefficient
};

CLConstants derive_cl_constants(const RegimeParams& p, const CLParams& clp);

// Counter-propagating unknowns in the regularized variable
// v_pm^lambda = (1 +- mu lambda d_xx) v_pm.
struct CLState {
    Field vplus_lambda;
    Field vminus_lambda;
    double t = 0.0;
};

// Time derivative of one unidirectional component (direction = +1 for the
// right-moving one). The whole advective/dispersive part is one exact x
// derivative, inverted through (1 - mu nu_t d_xx)^{-1}:
//   dv/dt = -dir * (1 - mu nu_t d_xx)^{-1} d/dx F(v),
//   F = eps a1 v^2/2 + eps^2 a2 v^3/3 + eps^3 a3 v^4/4
//       + mu nu_x v_xx + mu eps (k1 v v_xx + k2 (v_x)^2).
Field cl_rhs(const Grid& g, const Field& vlam, int direction, const RegimeParams& p,
             const CLConstants& clc, bool dealias = true);

// v_pm(0) = (zeta0 +- v0/(gamma+delta))/2, then the forward operator
// (1 +- mu lambda d_xx) produces the evolved unknowns.
CLState cl_init_split(const Grid& g, const Field& zeta0, const Field& v0,
                      const RegimeParams& p, const CLParams& clp);

// Undo the lambda regularization and recombine the components along
// their unit-speed characteristics:
//   (zeta, v) = (v_+(x-t) + v_-(x+t), (gamma+delta)(v_+(x-t) - v_-(x+t))).
State cl_reconstruct(const Grid& g, const CLState& s, const RegimeParams& p,
                     const CLParams& clp);

}  // namespace gnch

#endif
