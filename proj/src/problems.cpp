#include "rkn/problems.hpp"

#include <cmath>

#include "rkn/errors.hpp"

namespace rkn {

namespace {

SecondOrderIVP inhomogeneous_problem() {
    static constexpr double nu = 10.0;
    SecondOrderIVP ivp;
    ivp.dim = 1;
    ivp.t0 = 0.0;
    ivp.u0 = {1.0};
    ivp.v0 = {nu + 1.0};
    ivp.nu = nu;
    ivp.accel = [](double t, std::span<const double> u, std::span<double> out) {
        out[0] = -nu * nu * u[0] + (nu * nu - 1.0) * std::sin(t);
    };
    ivp.exact = [](double t, std::span<double> out) {
        out[0] = std::cos(nu * t) + std::sin(nu * t) + std::sin(t);
    };
    return ivp;
}

SecondOrderIVP two_body_problem() {
    SecondOrderIVP ivp;
    ivp.dim = 2;
    ivp.t0 = 0.0;
    ivp.u0 = {1.0, 0.0};
    ivp.v0 = {0.0, 1.0};
    ivp.nu = 1.0;
    ivp.accel = [](double, std::span<const double> u, std::span<double> out) {
        const double r2 = u[0] * u[0] + u[1] * u[1];
        if (r2 < 1e-12)
            throw BlowupError("numerical blow-up: two-body separation below safe radius", -1);
        const double d = r2 * std::sqrt(r2);
        out[0] = -u[0] / d;
        out[1] = -u[1] / d;
    };
    ivp.exact = [](double t, std::span<double> out) {
        out[0] = std::cos(t);
        out[1] = std::sin(t);
    };
    return ivp;
}

SecondOrderIVP duffing_problem() {
    static constexpr double nu = 1.01;
    static constexpr double force = 0.002;
    // Odd-harmonic amplitudes of the reference solution
    // u(t) = sum_k amp[k] * cos((2k+1) * nu * t); the highest printed
    // amplitude is exactly zero.
    static constexpr double amp[5] = {0.200179477536, 0.000246946143, 0.000000304014, 0.000000000374,
                               0.0};
    SecondOrderIVP ivp;
    ivp.dim = 1;
    ivp.t0 = 0.0;
    ivp.u0 = {amp[0] + amp[1] + amp[2] + amp[3] + amp[4]};
    ivp.v0 = {0.0};  // all-cosine series
    ivp.nu = nu;
    ivp.accel = [](double t, std::span<const double> u, std::span<double> out) {
        out[0] = -u[0] - u[0] * u[0] * u[0] + force * std::cos(nu * t);
    };
    ivp.exact = [](double t, std::span<double> out) {
        double s = 0.0;
        for (int k = 0; k < 5; ++k)
            s += amp[k] * std::cos(static_cast<double>(2 * k + 1) * nu * t);
        out[0] = s;
    };
    return ivp;
}

SecondOrderIVP franco_palacios_problem() {
    static constexpr double eps = 0.001;
    // Complex equation u'' = -u + eps*e^{it} realified to two components;
    // the exact solution carries the secular t-terms.
    SecondOrderIVP ivp;
    ivp.dim = 2;
    ivp.t0 = 0.0;
    ivp.u0 = {1.0, 0.0};
    ivp.v0 = {0.0, 1.0 - eps / 2.0};
    ivp.nu = 1.0;
    ivp.accel = [](double t, std::span<const double> u, std::span<double> out) {
        out[0] = -u[0] + eps * std::cos(t);
        out[1] = -u[1] + eps * std::sin(t);
    };
    ivp.exact = [](double t, std::span<double> out) {
        out[0] = std::cos(t) + 0.5 * eps * t * std::sin(t);
        out[1] = std::sin(t) - 0.5 * eps * t * std::cos(t);
    };
    return ivp;
}

}  // namespace

const char* problem_name(ProblemId id) {
    switch (id) {
        case ProblemId::Inhomogeneous: return "inhomogeneous";
        case ProblemId::TwoBody: return "twobody";
        case ProblemId::Duffing: return "duffing";
        case ProblemId::FrancoPalacios: return "francopalacios";
    }
    throw Error("problem_name: unknown problem id");
}

std::optional<ProblemId> parse_problem(std::string_view name) {
    for (const ProblemId id : kAllProblems)
        if (name == problem_name(id)) return id;
    return std::nullopt;
}

SecondOrderIVP make_problem(ProblemId id) {
    switch (id) {
        case ProblemId::Inhomogeneous: return inhomogeneous_problem();
        case ProblemId::TwoBody: return two_body_problem();
        case ProblemId::Duffing: return duffing_problem();
        case ProblemId::FrancoPalacios: return franco_palacios_problem();
    }
    throw Error("make_problem: unknown problem id");
}

}  // namespace rkn
