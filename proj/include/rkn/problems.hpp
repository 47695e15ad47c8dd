#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "rkn/ivp.hpp"

namespace rkn {

/// The four oscillatory benchmark problems.
enum class ProblemId {
    Inhomogeneous,   ///< u'' = -nu^2 u + (nu^2 - 1) sin t, nu = 10
    TwoBody,         ///< planar Kepler orbit |u| = 1, u'' = -u/|u|^3
    Duffing,         ///< u'' = -u - u^3 + B cos(nu t), B = 0.002, nu = 1.01
    FrancoPalacios,  ///< u'' = -u + eps e^{it} realified to 2 components, eps = 0.001
};

inline constexpr std::array<ProblemId, 4> kAllProblems = {
    ProblemId::Inhomogeneous,
    ProblemId::TwoBody,
    ProblemId::Duffing,
    ProblemId::FrancoPalacios,
};

/// Stable CLI/report name: "inhomogeneous", "twobody", "duffing",
/// "francopalacios".
const char* problem_name(ProblemId id);

/// Inverse of problem_name; empty for unknown names.
std::optional<ProblemId> parse_problem(std::string_view name);

/// Constructs the problem with its initial conditions, analytic solution,
/// and fitting frequency nu. The two-body acceleration guards against
/// |u|^2 < 1e-12 with a BlowupError (unreachable on benchmark
/// trajectories).
SecondOrderIVP make_problem(ProblemId id);

}  // namespace rkn
