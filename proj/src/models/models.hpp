#pragma once

#include <optional>
#include <string>
#include <vector>

#include "geometry/geometry.hpp"

namespace sgeo {

ScalarExpr pi_sym(int k, int order = 0);   // pi1..pi5
ScalarExpr qpi_sym(int k, int order = 0);  // qpi1..qpi7
// bare symbol test: coefficient 1, degree 1, denominator 1
std::optional<SymId> as_symbol(const ScalarExpr& e);

// c1*theta + c2*thetabar
SuperFunction odd_pair(const ScalarExpr& c1, const ScalarExpr& c2);

// ---------------------------------------------------------------- classical

struct CpiRaw {
    int a = 1;
    ScalarExpr gamma_t, gamma_tb, delta_t, delta_tb;
    SuperFunction b, c, d, e;  // even

    // every parameter a fresh symbol; constraints not imposed
    static CpiRaw symbolic(int a);
};

struct CpiPis {
    ScalarExpr a = 1;  // +1, -1, or the branch symbol "a"
    ScalarExpr pi1, pi2, pi3, pi4, pi5;

    // pi1..pi4 symbols, pi5 = a (pi2 pi3 - pi1 pi4)
    static CpiPis symbolic(ScalarExpr a = ScalarExpr::sym("a"));
};

// Which transcription of a solution family to use. Printed keeps the
// displayed formulas verbatim, errors included.
enum class FamilyText { Corrected, Printed };

// throws ConstraintViolated naming the failing equation
void cpi_check(const CpiRaw& raw);
SuperMatrix3 cpi_vierbein(const CpiRaw& raw);
// the same frame without the constraint check
SuperMatrix3 general_frame(const CpiRaw& raw);
CpiPis cpi_pis(const CpiRaw& raw);
Metric cpi_metric(const CpiPis& p);
// family 1: eB = 0, cB and cS solved; family 2: bB and bS solved. Other fields come from seed.
CpiRaw cpi_family(int which, const CpiRaw& seed, FamilyText text = FamilyText::Corrected);

// ---------------------------------------------------------------- quantum

enum class Pi6Form { Regularized, Interpolating };

struct QpiRaw {
    int aB = 1;
    ScalarExpr aS, eps, hbar;
    ScalarExpr alpha_t, alpha_tb, beta_t, beta_tb;
    ScalarExpr gamma_t, gamma_tb, delta_t, delta_tb;
    SuperFunction b, c, d, e;
    // selects the determinant the constraints target:
    // Regularized -> eps - i thetabar theta / hbar, Interpolating -> eps - i (1 - eps) thetabar theta / hbar
    Pi6Form form = Pi6Form::Regularized;

    static QpiRaw symbolic(int aB);
};

struct Pqr {
    ScalarExpr p, q, r;
};

struct QpiPis {
    ScalarExpr pi[8];  // pi[1]..pi[7]
    ScalarExpr sigma1, phi;

    static QpiPis symbolic();
    static QpiPis from(ScalarExpr p1, ScalarExpr p2, ScalarExpr p3, ScalarExpr p4, ScalarExpr p5,
                       ScalarExpr p6, ScalarExpr p7);
};

// soul value the second constraint must take
ScalarExpr qpi_target_soul(const QpiRaw& raw);
void qpi_check(const QpiRaw& raw);  // EpsilonZero, ConstraintViolated
SuperMatrix3 qpi_vierbein(const QpiRaw& raw);
SuperMatrix3 general_frame(const QpiRaw& raw);
Pqr qpi_pqr(const QpiRaw& raw);
QpiPis qpi_pis(const QpiRaw& raw);
Metric qpi_metric(const QpiPis& p);  // SingularBlockB when pi7 = 0
SuperMatrix3 qpi_upper(const QpiPis& p);
QpiRaw qpi_family(int which, const QpiRaw& seed, FamilyText text = FamilyText::Corrected);

// eps - i (1 - eps) thetabar theta / hbar
SuperFunction interpolating_determinant(const ScalarExpr& eps, const ScalarExpr& hbar = ScalarExpr::sym("hbar"));
// eps - i thetabar theta / hbar
SuperFunction regularized_determinant(const ScalarExpr& eps, const ScalarExpr& hbar = ScalarExpr::sym("hbar"));

// ---------------------------------------------------------------- curvature

// Substitutions applied after the connection and after the curvature stage.
// Static runs zero every derivative symbol, since the derivation always
// produces primed symbols.
Bindings static_freeze(bool quantum);
// pi7 is a_B eps, a constant
Bindings evolving_freeze_quantum();

Curvature staged_curvature(const SuperMatrix3& upper, const Bindings& freeze);
Curvature cpi_curvature(const CpiPis& p, bool time_dependent);
Curvature qpi_curvature(const QpiPis& p, bool time_dependent);

// ---------------------------------------------------------------- zeros of the curvature

struct Residual {
    std::string component;  // "R", "R_t_theta", ...
    SuperFunction value;
};

struct FlatnessReport {
    ScalarExpr a;
    bool time_dependent = false;
    bool primes_zeroed = false;
    std::vector<std::string> constraints;
    std::vector<Residual> residuals;  // every Ricci component and the scalar
    bool flat = false;
};

// pi1 -> pi2 pi3 / pi4, pi2 -> pi3. In the time-dependent case primes follow the
// constraint (pi1' = d/dt(pi3^2/pi4), ...) unless zero_primes, which sets every
// primed symbol to zero. Throws DivisionByZeroExpr when pi4 is zero.
FlatnessReport cpi_flatness(const CpiPis& p, bool time_dependent, bool zero_primes = false);

struct Evidence {
    std::string label;
    std::string value;
    bool holds = false;
};

struct ObstructionReport {
    std::vector<std::string> constraints;
    std::vector<Residual> residuals;  // under the vanishing constraints
    bool curvature_vanishes = false;
    std::vector<Evidence> evidence;   // quantum-limit values of pi6, a_S growth, body argument
    bool obstructed = false;
};

ObstructionReport qpi_obstruction(const QpiPis& p);

// pi6 as a function of the raw parameters
ScalarExpr qpi_pi6(const QpiRaw& raw);
// a_S solving eps a_S - (i/hbar) a_B (1 - eps) = 0
ScalarExpr divergent_soul(int aB, const ScalarExpr& eps, const ScalarExpr& hbar = ScalarExpr::sym("hbar"));

std::string ricci_name(int a, int b);

}  // namespace sgeo
