#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "rkn/fitting.hpp"
#include "rkn/ivp.hpp"
#include "rkn/problems.hpp"
#include "rkn/stepper.hpp"
#include "rkn/tableau.hpp"

namespace rkn {

/// Start of the accuracy window: grid nodes with t < kDefaultSkip are
/// excluded from the error maximum (the metric convention measures from
/// t = 1 while integration starts at t = 0).
inline constexpr double kDefaultSkip = 1.0;

/// Max-norm position error and its digit count acc = -log10(max_error).
struct ErrorSummary {
    double max_error = 0.0;
    double acc = 0.0;
};

/// One cell of the benchmark grid. `acc` stores -log10(max_error) at full
/// precision (rounded only at display time). A failed cell (integration
/// blow-up before T) carries NaN in both error fields.
struct AccuracyReport {
    ProblemId problem = ProblemId::Inhomogeneous;
    MethodKind method = MethodKind::Classical;
    double h = 0.0;
    double T = 0.0;
    double max_error = 0.0;
    double acc = 0.0;
    bool failed = false;
};

/// Error of a stored trajectory against the analytic solution: the maximum
/// over grid nodes with t >= t_skip and over position components of
/// |u_exact(t_n) - u_n|. Exactly-zero error reports acc = +infinity
/// (never expected on real runs). Throws MissingSolutionError when `exact`
/// is empty and Error when the trajectory is empty.
ErrorSummary accuracy(const std::vector<StepState>& traj, const ExactFn& exact,
                      double t_skip = kDefaultSkip);

/// Streaming equivalent of accuracy(integrate(...)): same grid, same
/// arithmetic order, bit-identical result, no trajectory storage.
ErrorSummary measure_stream(const NystromTableau& tab, const SecondOrderIVP& ivp, double h,
                            double t_end, double t_skip = kDefaultSkip);

enum class Exec { Serial, Parallel };

/// The full benchmark grid: problems 1-2 at h in {0.025, 0.05}, problems
/// 3-4 at h in {0.25, 0.5}, classical and phase-fitted methods, measured
/// at T in {100, 1000, 5000} — 48 reports sorted by (problem, h, method, T).
/// Each (problem, method, h) triple is integrated once to T = 5000 with
/// running maxima captured at the three checkpoints. Parallel execution
/// distributes the 16 independent integrations across OpenMP threads; both
/// modes produce bit-identical reports. A cell whose integration blows up
/// is marked failed, never dropped.
std::vector<AccuracyReport> run_table2(Exec exec = Exec::Parallel);

/// CSV serialization: header `problem,method,h,T,max_error,acc`, acc with
/// 1 decimal, max_error in scientific notation with 6 significant digits,
/// one row per report in the given order.
void write_csv(const std::vector<AccuracyReport>& reports, std::ostream& out);

/// Same, to a file; I/O failures surface as Error.
void write_csv(const std::vector<AccuracyReport>& reports, const std::string& path);

}  // namespace rkn
