#pragma once

#include <array>

#include "supermatrix/super_matrix.hpp"

namespace sgeo {

// eta_AB = ((1,0,0),(0,0,-1),(0,1,0))
SuperMatrix3 flat_metric();

struct Metric {
    SuperMatrix3 upper;  // g^{MN}
    SuperMatrix3 lower;  // g_{MN}
};

// g^{LP} = sum_{A,B} E(A,L) eta(A,B) (-1)^{g(B)g(P)} E(B,P), rows of E are flat indices.
// throws GradingViolation
SuperMatrix3 metric_from_vierbein(const SuperMatrix3& e);
// g_{LP} = sum_{A,B} E(A,L) eta(A,B) (-1)^{(1+g(B))g(P)} E(B,P); used by the transformation laws
SuperMatrix3 lower_metric_from_vierbein(const SuperMatrix3& e);
SuperMatrix3 metric_lower(const SuperMatrix3& upper);
Metric make_metric(const SuperMatrix3& upper);

enum class Side { Left, Right };

// comma derivative of f along index k: t-derivative for t, Grassmann derivative otherwise
SuperFunction comma(const SuperFunction& f, int k, Side side = Side::Left);

struct DerivConvention {
    std::array<Side, 3> slot{Side::Left, Side::Left, Side::Left};
};

struct ChristoffelSet {
    std::array<SuperFunction, 27> g;
    // Gamma^c_{ab}
    const SuperFunction& operator()(int c, int a, int b) const { return g[static_cast<std::size_t>(9 * c + 3 * a + b)]; }
    SuperFunction& operator()(int c, int a, int b) { return g[static_cast<std::size_t>(9 * c + 3 * a + b)]; }
};

ChristoffelSet christoffel(const Metric& m, const DerivConvention& conv = {});

// Calibrated flips the sign of the last quadratic term relative to Printed
enum class RiemannForm { Calibrated, Printed };

struct CurvatureSet {
    std::array<SuperFunction, 81> riemann;  // R^d_{abc} at 27d + 9a + 3b + c
    std::array<SuperFunction, 9> ricci;     // R_{ab} at 3a + b
    SuperFunction scalar;

    const SuperFunction& r(int d, int a, int b, int c) const { return riemann[static_cast<std::size_t>(27 * d + 9 * a + 3 * b + c)]; }
    const SuperFunction& ric(int a, int b) const { return ricci[static_cast<std::size_t>(3 * a + b)]; }
};

CurvatureSet riemann(const ChristoffelSet& gamma, RiemannForm form = RiemannForm::Calibrated);
void ricci_tensor(CurvatureSet& cs);
// Ricci written directly in Christoffel symbols
std::array<SuperFunction, 9> ricci_expanded(const ChristoffelSet& gamma, RiemannForm form = RiemannForm::Calibrated);
SuperFunction ricci_scalar(const Metric& m, const CurvatureSet& cs);

struct Curvature {
    Metric metric;
    ChristoffelSet gamma;
    CurvatureSet curv;
};
Curvature full_curvature(const SuperMatrix3& upper, RiemannForm form = RiemannForm::Calibrated);

Curvature substitute(const Curvature& c, const Bindings& b);

// Twelve-parameter infinitesimal diffeomorphism
//   xi^t        = A + at*theta + bt*thetabar + beta*theta*thetabar
//   xi^theta    = gt + C*theta + D*thetabar + eps*theta*thetabar
//   xi^thetabar = dt + F*theta + G*thetabar + xi*theta*thetabar
// The tilde parameters and eps, xi are odd; an odd function of t is carried as u*theta + v*thetabar.
struct Diffeo {
    ScalarExpr A, beta, C, D, F, G;
    SuperFunction at, bt, gt, dt, eps, xi;
};
std::array<SuperFunction, 3> diffeo_vector(const Diffeo& x);

// g'_{AB} = g_AB + (d->_A xi^C) g_CB + g_AC (xi^C <-d_B) + (g_AB <-d_C) xi^C, on the lower metric
SuperMatrix3 metric_transform(const SuperMatrix3& lower, const Diffeo& x);
// E'(M,A) = E(M,A) + (d->_A xi^B) E(M,B) + (E(M,A) <-d_C) xi^C, columns are curved indices
SuperMatrix3 vierbein_transform(const SuperMatrix3& e, const Diffeo& x);

}  // namespace sgeo
