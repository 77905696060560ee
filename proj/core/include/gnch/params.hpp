#ifndef GNCH_PARAMS_HPP
#define GNCH_PARAMS_HPP

#include "gnch/field.hpp"

namespace gnch {

// Dimensionless parameter set of the two-layer model.
//   mu     shallowness (depth over wavelength, squared)
//   eps    nonlinearity (interface amplitude over upper depth)
//   delta  depth ratio d1/d2
//   gamma  density ratio rho1/rho2, in [0,1)
//   bo_inv inverse Bond-type number; 0 encodes absent surface tension (bo = infinity)
struct RegimeParams {
    double mu = 0.1;
    double eps = 0.1;
    double delta = 1.0;
    double gamma = 0.0;
    double bo_inv = 0.0;
};

// Admissible ranges for the parameter regimes. The defaults are a concrete
// choice; the theory only requires that such bounds exist.
struct RegimeBounds {
    double mu_max = 1.0;
    double M = 1.0;           // Camassa-Holm constraint eps <= M*sqrt(mu)
    double delta_min = 0.1;
    double delta_max = 10.0;
    double bo_min_inv = 1.0;  // bo >= bo_min, i.e. bo_inv <= bo_min_inv
    double nu0 = 1e-3;        // lower bound required of nu in the CH regime
};

// The eight derived constants of the model. nu multiplies the second-order
// part of the operator T; kappa1/kappa2 build its coefficient fields;
// varsigma and kappa enter the velocity equation's nonlinear terms.
struct ModelConstants {
    double nu_bar;    // (1+gamma*delta) / (3*delta*(gamma+delta))
    double nu;        // nu_bar - bo_inv
    double alpha;     // (1-gamma) / (gamma+delta)^2
    double beta;      // (1+gamma*delta)*(delta^2-gamma) / (delta*(gamma+delta)^3)
    double kappa1;    // from nu*kappa1 = (gamma+delta)*(2*beta-alpha)/3
    double kappa2;    // from nu*kappa2 = (gamma+delta)*beta
    double varsigma;  // from nu*varsigma = (2*alpha-beta)/3 - bo_inv*(delta^2-gamma)/(delta+gamma)^2
    double kappa;     // (2/3)*(1-gamma)/(gamma+delta)^2
};

struct RegimeReport {
    bool in_SW;
    bool in_CH;
    double nu_margin;  // nu - nu0
    // Aggregates that bound the constants of the underlying estimates.
    // Metadata only; nothing numerical depends on them.
    double M_SW;
    double M_CH;
};

struct DepthMargins {
    double h1_min;  // min over grid of 1 - eps*zeta
    double h2_min;  // min over grid of 1/delta + eps*zeta
    bool ok;
};

struct EllipticityMargins {
    double q1_min;  // min over grid of 1 + eps*kappa1*zeta
    double q2_min;  // min over grid of 1 + eps*kappa2*zeta
    bool ok;
};

// Throws NU_NONPOSITIVE when nu <= 0 (kappa1, kappa2, varsigma involve 1/nu).
ModelConstants derive_constants(const RegimeParams& p);

RegimeReport check_regime(const RegimeParams& p, const RegimeBounds& b = {});

DepthMargins check_H1(const Field& zeta, const RegimeParams& p);
EllipticityMargins check_H2(const Field& zeta, const RegimeParams& p,
                            const ModelConstants& c);

}  // namespace gnch

#endif
