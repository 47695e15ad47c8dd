#pragma once

#include <optional>
#include <vector>

#include "rkn/tableau.hpp"

namespace rkn {

/// Entries of the one-step propagator on the test equation u'' = -z^2 u
/// with unit step size: (u+, v+) = (A*u + B*v, A'*u + B'*v). With h = 1 the
/// conventional h-scaling of the derivative row is the identity, so the
/// matrix can be read directly off two basis propagations.
struct StabilityMatrix {
    double z = 0.0;
    double A = 0.0;
    double B = 0.0;
    double A_prime = 0.0;
    double B_prime = 0.0;
};

/// Propagates the basis states (u,v) = (1,0) and (0,1) one unit step on the
/// test equation and reads off the matrix entries. z must be finite; the
/// entries are polynomials in z^2.
StabilityMatrix stability_matrix(const NystromTableau& tab, double z);

/// Trace A + B' of the stability matrix. R(0) = 2.
double trace_R(const NystromTableau& tab, double z);

/// Determinant A*B' - A'*B of the stability matrix. Q(0) = 1; a polynomial
/// in z^2, so evaluating at -z gives bit-identical results.
double det_Q(const NystromTableau& tab, double z);

/// Relative slack allowed on |R/(2 sqrt Q)| before the phase lag is
/// declared undefined (the argument is clamped to [-1, 1] within it).
inline constexpr double kArccosSlack = 1e-12;

/// Phase lag z - arccos(R/(2 sqrt Q)) for z in (0, pi). Throws
/// AnalysisRangeError when Q <= 0 or the arccos argument exceeds 1 beyond
/// kArccosSlack; throws Error for z outside (0, pi).
double phase_lag(const NystromTableau& tab, double z);

/// Amplification error 1 - sqrt(Q). Throws AnalysisRangeError when Q < 0.
double amplification_error(const NystromTableau& tab, double z);

/// |phase lag| below this is indistinguishable from zero in double
/// precision (arccos rounding noise); the order estimator treats such
/// samples as exact zeros.
inline constexpr double kPhaseLagFloor = 1e-13;

/// Result of the empirical phase-lag order fit. `order` is empty when every
/// grid sample sits below kPhaseLagFloor — the lag is zero to machine
/// precision, i.e. the order is infinite as far as measurement can tell.
struct PhaseLagOrder {
    std::optional<int> order;  ///< q with |phase lag| ~ z^(q+1); empty = infinite (below floor)
    double slope = 0.0;        ///< least-squares slope of log|phase lag| vs log z
    double residual = 0.0;     ///< RMS residual of that fit

    bool infinite() const { return !order.has_value(); }
};

/// Fits log|phase lag| against log z on `grid` (empty = the default
/// geometric grid z = 2^-3 ... 2^-10) and returns q = round(slope) - 1.
/// Samples below kPhaseLagFloor are excluded from the fit; when all samples
/// are below, the result reports infinite order. Throws NoPowerLawError
/// when fewer than two usable samples remain or the RMS residual exceeds
/// 10% of |slope|.
PhaseLagOrder estimate_phase_lag_order(const NystromTableau& tab,
                                       const std::vector<double>& grid = {});

}  // namespace rkn
