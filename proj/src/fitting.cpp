#include "rkn/fitting.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "rkn/errors.hpp"

namespace rkn {

const char* method_name(MethodKind kind) {
    return kind == MethodKind::Classical ? "classical" : "fitted";
}

MethodSpec MethodSpec::classical() {
    return MethodSpec{MethodKind::Classical, dprkn4_tableau(), 1e-2};
}

MethodSpec MethodSpec::phase_fitted(double z_switch) {
    return MethodSpec{MethodKind::PhaseFitted, dprkn4_tableau(), z_switch};
}

NystromTableau dprkn4_tableau() {
    NystromTableau t;
    t.m = 4;
    t.c = {0.0, 1.0 / 4.0, 7.0 / 10.0, 1.0};
    t.a.assign(16, 0.0);
    t.a_at(1, 0) = 1.0 / 32.0;
    t.a_at(2, 0) = 7.0 / 1000.0;
    t.a_at(2, 1) = 119.0 / 500.0;
    t.a_at(3, 0) = 1.0 / 14.0;
    t.a_at(3, 1) = 8.0 / 27.0;
    t.a_at(3, 2) = 25.0 / 189.0;
    t.b = {1.0 / 14.0, 8.0 / 27.0, 25.0 / 189.0, 0.0};
    t.b_hat = {1.0 / 14.0, 32.0 / 81.0, 250.0 / 567.0, 5.0 / 54.0};
    return t;
}

namespace {

// R and Q of the 4-stage test-equation propagator with the a[3][2] slot
// replaced by `a43`, evaluated in extended precision. The fitted root's
// sensitivity to rounding in R and Q grows like z^-4, so binary64
// evaluation here would cap the solve near 1e-8 absolute accuracy at
// z ~ 0.01; 80-bit arithmetic keeps it near 1e-12.
void trial_rq(const NystromTableau& tab, long double a43, long double z, long double& r,
              long double& q) {
    long double c[4];
    long double bw[4];
    long double bh[4];
    long double a[4][4];
    for (int i = 0; i < 4; ++i) {
        c[i] = tab.c[static_cast<std::size_t>(i)];
        bw[i] = tab.b[static_cast<std::size_t>(i)];
        bh[i] = tab.b_hat[static_cast<std::size_t>(i)];
        for (int j = 0; j < 4; ++j) a[i][j] = tab.a_at(i, j);
    }
    a[3][2] = a43;

    long double entries[2][2];  // [basis][0]=position, [basis][1]=velocity
    for (int basis = 0; basis < 2; ++basis) {
        const long double u = basis == 0 ? 1.0L : 0.0L;
        const long double v = basis == 0 ? 0.0L : 1.0L;
        long double f[4];
        for (int i = 0; i < 4; ++i) {
            long double s = 0.0L;
            for (int j = 0; j < i; ++j) s += a[i][j] * f[j];
            f[i] = -z * z * (u + c[i] * v + s);
        }
        long double up = u + v;
        long double vp = v;
        for (int i = 0; i < 4; ++i) {
            up += bw[i] * f[i];
            vp += bh[i] * f[i];
        }
        entries[basis][0] = up;
        entries[basis][1] = vp;
    }
    r = entries[0][0] + entries[1][1];
    q = entries[0][0] * entries[1][1] - entries[0][1] * entries[1][0];
}

}  // namespace

double fitted_a43(double z) {
    if (!(z > 0.0) || !(z < std::numbers::pi / 2.0))
        throw FittingError("fitting degenerate: z = " + std::to_string(z) +
                           " outside (0, pi/2)");
    const NystromTableau base = dprkn4_tableau();
    const long double zl = z;

    // Affine coefficients of R(a) and Q(a) from trials a in {0, 1, 2}; the
    // third trial only confirms affinity (b[3] = 0 kills the quadratic
    // terms).
    long double r0;
    long double q0;
    long double r1;
    long double q1;
    long double r2;
    long double q2;
    trial_rq(base, 0.0L, zl, r0, q0);
    trial_rq(base, 1.0L, zl, r1, q1);
    trial_rq(base, 2.0L, zl, r2, q2);
    if (std::abs(static_cast<double>(r2 - 2.0L * r1 + r0)) > 1e-12 ||
        std::abs(static_cast<double>(q2 - 2.0L * q1 + q0)) > 1e-12)
        throw FittingError("fitting degenerate: R or Q is not affine in the fitted coefficient");
    const long double rs = r1 - r0;
    const long double qs = q1 - q0;

    // (r0 + rs*a)^2 = 4 cos^2(z) (q0 + qs*a), solved with the numerically
    // stable root pair (copysign to avoid cancellation, Vieta for the
    // mate).
    const long double cz = std::cos(zl);
    const long double k = 4.0L * cz * cz;
    const long double qa = rs * rs;
    const long double qb = 2.0L * r0 * rs - k * qs;
    const long double qc = r0 * r0 - k * q0;
    const long double disc = qb * qb - 4.0L * qa * qc;
    if (disc < 0.0L)
        throw FittingError("fitting degenerate: negative discriminant at z = " +
                           std::to_string(z));
    const long double sd = std::sqrt(disc);
    const long double far_root = (-qb - std::copysign(sd, qb)) / (2.0L * qa);
    const std::array<long double, 2> roots = {far_root, qc / (qa * far_root)};

    const long double taylor = fitted_a43_taylor(z);
    bool found = false;
    long double best = 0.0L;
    for (const long double x : roots) {
        if (!std::isfinite(static_cast<double>(x))) continue;
        const long double qx = q0 + qs * x;
        if (qx < 0.0L) continue;
        const long double lhs = r0 + rs * x;
        // Unsquared condition with matching sign; squaring admits the
        // spurious R = -2 cos(z) sqrt(Q) branch.
        if (std::abs(static_cast<double>(lhs - 2.0L * cz * std::sqrt(qx))) >
            1e-9 * std::max(1.0, std::abs(static_cast<double>(lhs))))
            continue;
        if (!found || std::abs(static_cast<double>(x - taylor)) <
                          std::abs(static_cast<double>(best - taylor))) {
            best = x;
            found = true;
        }
    }
    if (!found)
        throw FittingError("fitting degenerate: no root satisfies the phase condition at z = " +
                           std::to_string(z));
    return static_cast<double>(best);
}

double fitted_a43_taylor(double z) {
    const long double s = static_cast<long double>(z) * static_cast<long double>(z);
    const long double c0 = 25.0L / 189.0L;
    const long double c2 = -43.0L / 2400.0L;
    const long double c4 = -1531.0L / 30240000.0L;
    const long double c6 = -3273029.0L / 36288000000.0L;
    const long double c8 = 59772887431.0L / 9699782400000000.0L;
    return static_cast<double>(c0 + s * (c2 + s * (c4 + s * (c6 + s * c8))));
}

NystromTableau build_tableau(const MethodSpec& spec, double nu, double h) {
    if (!(nu > 0.0) || !(h > 0.0))
        throw Error("build_tableau: nu and h must be positive");
    if (!(spec.z_switch > 0.0) || !(spec.z_switch <= 0.1))
        throw Error("build_tableau: z_switch must lie in (0, 0.1]");
    NystromTableau tab = spec.base;
    tab.validate();
    if (spec.kind == MethodKind::Classical) return tab;
    const double z = nu * h;
    if (!(z < std::numbers::pi / 2.0))
        throw FittingError("fitting degenerate: z = nu*h = " + std::to_string(z) +
                           " outside (0, pi/2)");
    tab.a_at(3, 2) = z >= spec.z_switch ? fitted_a43(z) : fitted_a43_taylor(z);
    return tab;
}

}  // namespace rkn
