#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rkn/ivp.hpp"
#include "rkn/tableau.hpp"

namespace rkn {

/// Slack used when counting whole steps on a uniform grid, so that end
/// times commensurate with h are not lost to representation error.
inline constexpr double kGridSlack = 1e-9;

/// Number of whole steps of size h in [t0, t_end]:
/// floor((t_end - t0)/h + kGridSlack). Throws Error for h <= 0,
/// t_end <= t0, or a step count beyond exact integer range.
long long grid_steps(double t0, double t_end, double h);

/// One explicit Nystrom step of size h (h != 0; negative h steps backward)
/// from state s. Evaluates `accel` exactly tab.m times. Throws BlowupError
/// when a stage value or the updated state goes non-finite; inputs are
/// never mutated.
StepState step(const NystromTableau& tab, const AccelFn& accel, const StepState& s, double h);

/// Fixed-step integration from ivp.t0 to the last grid node <= t_end.
/// Returned states sit at t0 + n*h exactly (times are recomputed from n,
/// not accumulated); a final partial step is never taken. BlowupError from
/// `step` is rethrown annotated with the failing step index.
std::vector<StepState> integrate(const NystromTableau& tab, const SecondOrderIVP& ivp,
                                 double h, double t_end);

/// Grid visitor for the streaming driver: node index n, time t0 + n*h, and
/// views of the current position and velocity (valid only during the call).
using GridVisitor =
    std::function<void(long long n, double t, std::span<const double> u, std::span<const double> v)>;

/// Same grid and bit-identical values as `integrate`, delivered node by
/// node without storing the trajectory. Visits n = 0 (the initial state)
/// first.
void integrate_stream(const NystromTableau& tab, const SecondOrderIVP& ivp, double h,
                      double t_end, const GridVisitor& visit);

}  // namespace rkn
