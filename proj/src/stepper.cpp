#include "rkn/stepper.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "rkn/errors.hpp"

namespace rkn {

namespace {

// One in-place step from (t; u, v) to (t + h; u, v). `f` holds m*dim stage
// accelerations and `g` one stage position; both are caller-provided
// scratch so a long run allocates nothing per step.
void advance(const NystromTableau& tab, const AccelFn& accel, double t, double h,
             std::vector<double>& u, std::vector<double>& v, std::vector<double>& f,
             std::vector<double>& g) {
    const int m = tab.m;
    const int dim = static_cast<int>(u.size());
    const double h2 = h * h;
    for (int i = 0; i < m; ++i) {
        const double ci = tab.c[i];
        for (int k = 0; k < dim; ++k) {
            double s = 0.0;
            for (int j = 0; j < i; ++j)
                s += tab.a_at(i, j) * f[static_cast<std::size_t>(j) * dim + k];
            g[static_cast<std::size_t>(k)] = u[k] + ci * h * v[k] + h2 * s;
        }
        double* fi = f.data() + static_cast<std::size_t>(i) * dim;
        accel(t + ci * h, std::span<const double>(g.data(), dim), std::span<double>(fi, dim));
        for (int k = 0; k < dim; ++k)
            if (!std::isfinite(fi[k]))
                throw BlowupError(
                    "numerical blow-up: non-finite acceleration in stage " + std::to_string(i),
                    i);
    }
    for (int k = 0; k < dim; ++k) {
        double su = 0.0;
        double sv = 0.0;
        for (int i = 0; i < m; ++i) {
            const double fik = f[static_cast<std::size_t>(i) * dim + k];
            su += tab.b[i] * fik;
            sv += tab.b_hat[i] * fik;
        }
        const double uk = u[k] + h * v[k] + h2 * su;
        const double vk = v[k] + h * sv;
        if (!std::isfinite(uk) || !std::isfinite(vk))
            throw BlowupError("numerical blow-up: non-finite state update", m);
        u[k] = uk;
        v[k] = vk;
    }
}

}  // namespace

long long grid_steps(double t0, double t_end, double h) {
    if (!(h > 0.0) || !std::isfinite(h)) throw Error("grid: h must be positive and finite");
    if (!(t_end > t0)) throw Error("grid: t_end must exceed t0");
    const double ratio = (t_end - t0) / h;
    if (!(ratio < 9.0e15)) throw Error("grid: step count exceeds exact integer range");
    return static_cast<long long>(std::floor(ratio + kGridSlack));
}

StepState step(const NystromTableau& tab, const AccelFn& accel, const StepState& s, double h) {
    tab.validate();
    if (h == 0.0 || !std::isfinite(h)) throw Error("step: h must be nonzero and finite");
    if (!accel) throw Error("step: missing acceleration function");
    if (s.u.empty() || s.u.size() != s.v.size())
        throw Error("step: position and velocity dimensions disagree");
    StepState out = s;
    std::vector<double> f(static_cast<std::size_t>(tab.m) * s.u.size());
    std::vector<double> g(s.u.size());
    advance(tab, accel, s.t, h, out.u, out.v, f, g);
    out.t = s.t + h;
    return out;
}

void integrate_stream(const NystromTableau& tab, const SecondOrderIVP& ivp, double h,
                      double t_end, const GridVisitor& visit) {
    tab.validate();
    if (ivp.dim < 1) throw Error("integrate: problem dimension must be at least 1");
    if (ivp.u0.size() != static_cast<std::size_t>(ivp.dim) ||
        ivp.v0.size() != static_cast<std::size_t>(ivp.dim))
        throw Error("integrate: initial state does not match the problem dimension");
    if (!ivp.accel) throw Error("integrate: missing acceleration function");
    const long long n_steps = grid_steps(ivp.t0, t_end, h);

    std::vector<double> u = ivp.u0;
    std::vector<double> v = ivp.v0;
    std::vector<double> f(static_cast<std::size_t>(tab.m) * ivp.dim);
    std::vector<double> g(static_cast<std::size_t>(ivp.dim));

    visit(0, ivp.t0, u, v);
    for (long long n = 1; n <= n_steps; ++n) {
        const double t_prev = ivp.t0 + static_cast<double>(n - 1) * h;
        try {
            advance(tab, ivp.accel, t_prev, h, u, v, f, g);
        } catch (const BlowupError& e) {
            throw BlowupError(std::string(e.what()) + " at step " + std::to_string(n), e.stage(),
                              n);
        }
        visit(n, ivp.t0 + static_cast<double>(n) * h, u, v);
    }
}

std::vector<StepState> integrate(const NystromTableau& tab, const SecondOrderIVP& ivp, double h,
                                 double t_end) {
    std::vector<StepState> traj;
    traj.reserve(static_cast<std::size_t>(grid_steps(ivp.t0, t_end, h)) + 1);
    integrate_stream(tab, ivp, h, t_end,
                     [&traj](long long, double t, std::span<const double> u,
                             std::span<const double> v) {
                         traj.push_back(StepState{t, std::vector<double>(u.begin(), u.end()),
                                                  std::vector<double>(v.begin(), v.end())});
                     });
    return traj;
}

}  // namespace rkn
