#include "rkn/phase.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>

#include "rkn/errors.hpp"
#include "rkn/stepper.hpp"

namespace rkn {

StabilityMatrix stability_matrix(const NystromTableau& tab, double z) {
    if (!std::isfinite(z)) throw Error("stability_matrix: z must be finite");
    const double z2 = z * z;
    const AccelFn accel = [z2](double, std::span<const double> u, std::span<double> out) {
        out[0] = -z2 * u[0];
    };
    // Unit step size: the propagator of (u, h*v) coincides with that of
    // (u, v), so the two basis propagations give the columns directly.
    const StepState from_u = step(tab, accel, StepState{0.0, {1.0}, {0.0}}, 1.0);
    const StepState from_v = step(tab, accel, StepState{0.0, {0.0}, {1.0}}, 1.0);
    return StabilityMatrix{z, from_u.u[0], from_v.u[0], from_u.v[0], from_v.v[0]};
}

double trace_R(const NystromTableau& tab, double z) {
    const StabilityMatrix d = stability_matrix(tab, z);
    return d.A + d.B_prime;
}

double det_Q(const NystromTableau& tab, double z) {
    const StabilityMatrix d = stability_matrix(tab, z);
    return d.A * d.B_prime - d.A_prime * d.B;
}

double phase_lag(const NystromTableau& tab, double z) {
    if (!(z > 0.0) || !(z < std::numbers::pi))
        throw Error("phase_lag: z must lie in (0, pi)");
    const StabilityMatrix d = stability_matrix(tab, z);
    const double q = d.A * d.B_prime - d.A_prime * d.B;
    if (!(q > 0.0))
        throw AnalysisRangeError("outside stability analysis range: Q(z^2) <= 0 at z = " +
                                 std::to_string(z));
    const double ratio = (d.A + d.B_prime) / (2.0 * std::sqrt(q));
    if (std::abs(ratio) > 1.0 + kArccosSlack)
        throw AnalysisRangeError(
            "outside stability analysis range: |R| > 2 sqrt(Q) at z = " + std::to_string(z));
    return z - std::acos(std::clamp(ratio, -1.0, 1.0));
}

double amplification_error(const NystromTableau& tab, double z) {
    const double q = det_Q(tab, z);
    if (q < 0.0)
        throw AnalysisRangeError("outside stability analysis range: Q(z^2) < 0 at z = " +
                                 std::to_string(z));
    return 1.0 - std::sqrt(q);
}

PhaseLagOrder estimate_phase_lag_order(const NystromTableau& tab,
                                       const std::vector<double>& grid) {
    std::vector<double> zs = grid;
    if (zs.empty())
        for (int k = 3; k <= 10; ++k) zs.push_back(std::ldexp(1.0, -k));

    // Collect log-log samples, dropping lags that are zero at machine
    // precision (they carry arccos rounding noise, not signal).
    std::vector<double> lx;
    std::vector<double> ly;
    for (const double z : zs) {
        const double phi = std::abs(phase_lag(tab, z));
        if (phi < kPhaseLagFloor) continue;
        lx.push_back(std::log(z));
        ly.push_back(std::log(phi));
    }

    PhaseLagOrder out;
    if (lx.empty()) return out;  // infinite (below floor)
    const std::size_t n = lx.size();
    if (n < 2)
        throw NoPowerLawError("phase-lag order fit needs at least two samples above the floor");

    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += lx[i];
        my += ly[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = ly[i] - (slope * lx[i] + intercept);
        ss += r * r;
    }
    const double rms = std::sqrt(ss / static_cast<double>(n));

    out.slope = slope;
    out.residual = rms;
    if (rms > 0.1 * std::abs(slope))
        throw NoPowerLawError("log|phase lag| vs log z is not a power law (RMS residual " +
                              std::to_string(rms) + " exceeds 10% of slope " +
                              std::to_string(slope) + ")");
    out.order = static_cast<int>(std::lround(slope)) - 1;
    return out;
}

}  // namespace rkn
