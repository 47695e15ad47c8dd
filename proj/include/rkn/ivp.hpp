#pragma once

#include <functional>
#include <span>
#include <vector>

namespace rkn {

/// Acceleration field f(t, u) of a second-order system u'' = f(t, u).
/// Writes the acceleration for position u into `out` (same length as u).
using AccelFn = std::function<void(double t, std::span<const double> u, std::span<double> out)>;

/// Analytic position solution; writes u(t) into `out`.
using ExactFn = std::function<void(double t, std::span<double> out)>;

/// Second-order initial value problem u'' = f(t, u), u(t0) = u0, u'(t0) = v0.
struct SecondOrderIVP {
    int dim = 0;             ///< state dimension (>= 1)
    AccelFn accel;           ///< right-hand side f(t, u)
    double t0 = 0.0;         ///< initial time
    std::vector<double> u0;  ///< initial position, length dim
    std::vector<double> v0;  ///< initial velocity u'(t0), length dim
    double nu = 1.0;         ///< dominant oscillation frequency (> 0), drives phase fitting via z = nu*h
    ExactFn exact;           ///< analytic solution for error measurement; empty when unknown

    bool has_exact() const { return static_cast<bool>(exact); }
};

/// Position/velocity pair on the integration grid. The velocity is the
/// plain derivative u' (any derivative scaling by h is internal to `step`).
struct StepState {
    double t = 0.0;
    std::vector<double> u;
    std::vector<double> v;
};

}  // namespace rkn
