#pragma once

#include "rkn/tableau.hpp"

namespace rkn {

enum class MethodKind { Classical, PhaseFitted };

/// Returns the stable CLI/report name of a method kind: "classical" or
/// "fitted".
const char* method_name(MethodKind kind);

/// Recipe for building the tableau of a run: either the classical 4-stage
/// tableau unchanged, or the phase-fitted variant whose a[3][2] coefficient
/// is recomputed from z = nu*h. Below z_switch the closed-form solve loses
/// accuracy to cancellation and the Taylor series of the coefficient is
/// used instead.
struct MethodSpec {
    MethodKind kind = MethodKind::Classical;
    NystromTableau base;      ///< the 4-stage base tableau (dprkn4_tableau())
    double z_switch = 1e-2;   ///< small-z threshold for the Taylor path, in (0, 0.1]

    static MethodSpec classical();
    static MethodSpec phase_fitted(double z_switch = 1e-2);
};

/// The classical 4-stage tableau: c = (0, 1/4, 7/10, 1),
/// a21 = 1/32, a31 = 7/1000, a32 = 119/500, a41 = 1/14, a42 = 8/27,
/// a43 = 25/189, b = (1/14, 8/27, 25/189, 0),
/// b_hat = (1/14, 32/81, 250/567, 5/54).
NystromTableau dprkn4_tableau();

/// The a[3][2] coefficient that makes the 4-stage method's phase lag vanish
/// at frequency z, all other coefficients fixed at their classical values.
///
/// Since b[3] = 0, both R and Q are affine in a[3][2]; the affine
/// coefficients are recovered from trial evaluations at a[3][2] in
/// {0, 1, 2}, and the quadratic R(a)^2 = 4 cos^2(z) Q(a) is solved keeping
/// the root that satisfies the unsquared condition
/// R(a) = 2 cos(z) sqrt(Q(a)) and lies closest to the Taylor estimate.
/// Internals run in extended precision: the root's sensitivity to rounding
/// in R and Q grows like z^-4, and plain double evaluation would limit
/// small-z accuracy to ~1e-8.
///
/// Valid for 0 < z < pi/2; throws FittingError outside that range, when
/// the discriminant is negative, or when no root meets the sign condition.
double fitted_a43(double z);

/// Degree-8 Taylor series of fitted_a43 about z = 0:
/// 25/189 - (43/2400) z^2 - (1531/30240000) z^4
///        - (3273029/36288000000) z^6 + (59772887431/9699782400000000) z^8.
/// Even in z; accurate to ~1e-20 for |z| <= 0.1 and ~3e-10 at |z| = 0.5.
double fitted_a43_taylor(double z);

/// Tableau for one run: Classical returns the base unchanged; PhaseFitted
/// replaces a[3][2] with fitted_a43(nu*h), or fitted_a43_taylor(nu*h) when
/// nu*h < z_switch. Requires nu > 0, h > 0, nu*h < pi/2 (PhaseFitted).
NystromTableau build_tableau(const MethodSpec& spec, double nu, double h);

}  // namespace rkn
