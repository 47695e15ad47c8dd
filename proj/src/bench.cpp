#include "rkn/bench.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <tuple>
#include <vector>

#include "rkn/errors.hpp"

namespace rkn {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double digits(double max_error) {
    if (max_error == 0.0) return std::numeric_limits<double>::infinity();
    return -std::log10(max_error);
}

// Running max-norm position error accumulator shared by the stored and
// streamed accuracy paths so both produce bit-identical results.
class ErrorAccumulator {
  public:
    ErrorAccumulator(const ExactFn& exact, int dim, double t_skip)
        : exact_(exact), t_skip_(t_skip), buf_(static_cast<std::size_t>(dim)) {}

    void visit(double t, std::span<const double> u) {
        if (t < t_skip_ - kGridSlack) return;
        exact_(t, std::span<double>(buf_.data(), buf_.size()));
        double node_err = 0.0;
        for (std::size_t k = 0; k < buf_.size(); ++k)
            node_err = std::max(node_err, std::abs(u[k] - buf_[k]));
        max_error_ = std::max(max_error_, node_err);
    }

    ErrorSummary summary() const { return ErrorSummary{max_error_, digits(max_error_)}; }

  private:
    const ExactFn& exact_;
    double t_skip_;
    std::vector<double> buf_;
    double max_error_ = 0.0;
};

struct GridTask {
    ProblemId problem;
    MethodKind method;
    double h;
};

constexpr std::array<double, 3> kCheckpoints = {100.0, 1000.0, 5000.0};

// Integrates one (problem, method, h) cell to the last checkpoint,
// capturing the running error maximum at each intermediate checkpoint.
// A blow-up marks the unreached checkpoints failed instead of aborting.
std::array<AccuracyReport, 3> run_cell(const GridTask& task) {
    std::array<AccuracyReport, 3> out;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = AccuracyReport{task.problem, task.method, task.h, kCheckpoints[i],
                                kNaN,         kNaN,        true};

    const SecondOrderIVP ivp = make_problem(task.problem);
    const MethodSpec spec = task.method == MethodKind::Classical ? MethodSpec::classical()
                                                                 : MethodSpec::phase_fitted();
    const NystromTableau tab = build_tableau(spec, ivp.nu, task.h);

    std::array<long long, 3> checkpoint_nodes;
    for (std::size_t i = 0; i < kCheckpoints.size(); ++i)
        checkpoint_nodes[i] = grid_steps(ivp.t0, kCheckpoints[i], task.h);

    ErrorAccumulator acc(ivp.exact, ivp.dim, kDefaultSkip);
    std::size_t next = 0;
    try {
        integrate_stream(tab, ivp, task.h, kCheckpoints.back(),
                         [&](long long n, double t, std::span<const double> u,
                             std::span<const double>) {
                             acc.visit(t, u);
                             while (next < checkpoint_nodes.size() &&
                                    n == checkpoint_nodes[next]) {
                                 const ErrorSummary s = acc.summary();
                                 out[next].max_error = s.max_error;
                                 out[next].acc = s.acc;
                                 out[next].failed = false;
                                 ++next;
                             }
                         });
    } catch (const BlowupError&) {
        // Checkpoints recorded before the blow-up stand; the rest stay
        // marked failed.
    }
    return out;
}

const char* csv_header() { return "problem,method,h,T,max_error,acc"; }

std::string csv_row(const AccuracyReport& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%s,%g,%g,%.5e,%.1f", problem_name(r.problem),
                  method_name(r.method), r.h, r.T, r.max_error, r.acc);
    return buf;
}

}  // namespace

ErrorSummary accuracy(const std::vector<StepState>& traj, const ExactFn& exact, double t_skip) {
    if (!exact) throw MissingSolutionError("accuracy: no analytic solution to compare against");
    if (traj.empty()) throw Error("accuracy: empty trajectory");
    ErrorAccumulator acc(exact, static_cast<int>(traj.front().u.size()), t_skip);
    for (const StepState& s : traj) acc.visit(s.t, s.u);
    return acc.summary();
}

ErrorSummary measure_stream(const NystromTableau& tab, const SecondOrderIVP& ivp, double h,
                            double t_end, double t_skip) {
    if (!ivp.has_exact())
        throw MissingSolutionError("accuracy: no analytic solution to compare against");
    ErrorAccumulator acc(ivp.exact, ivp.dim, t_skip);
    integrate_stream(tab, ivp, h, t_end,
                     [&acc](long long, double t, std::span<const double> u,
                            std::span<const double>) { acc.visit(t, u); });
    return acc.summary();
}

std::vector<AccuracyReport> run_table2(Exec exec) {
    // Problems 1-2 resolve their fast oscillation with h in {0.025, 0.05};
    // problems 3-4 use {0.25, 0.5}.
    std::vector<GridTask> tasks;
    for (const ProblemId pid : kAllProblems) {
        const bool fine = pid == ProblemId::Inhomogeneous || pid == ProblemId::TwoBody;
        for (const double h : fine ? std::array<double, 2>{0.025, 0.05}
                                   : std::array<double, 2>{0.25, 0.5})
            for (const MethodKind mk : {MethodKind::Classical, MethodKind::PhaseFitted})
                tasks.push_back(GridTask{pid, mk, h});
    }

    std::vector<AccuracyReport> reports(tasks.size() * kCheckpoints.size());
    const bool parallel = exec == Exec::Parallel;
    const int n_tasks = static_cast<int>(tasks.size());
    // Each independent integration fills only its own report slots, so the
    // parallel and serial paths are bit-identical.
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#else
    (void)parallel;
#endif
    for (int i = 0; i < n_tasks; ++i) {
        const std::array<AccuracyReport, 3> cell = run_cell(tasks[static_cast<std::size_t>(i)]);
        for (std::size_t j = 0; j < cell.size(); ++j)
            reports[static_cast<std::size_t>(i) * cell.size() + j] = cell[j];
    }

    std::sort(reports.begin(), reports.end(),
              [](const AccuracyReport& x, const AccuracyReport& y) {
                  return std::make_tuple(static_cast<int>(x.problem), x.h,
                                         static_cast<int>(x.method), x.T) <
                         std::make_tuple(static_cast<int>(y.problem), y.h,
                                         static_cast<int>(y.method), y.T);
              });
    return reports;
}

void write_csv(const std::vector<AccuracyReport>& reports, std::ostream& out) {
    out << csv_header() << '\n';
    for (const AccuracyReport& r : reports) out << csv_row(r) << '\n';
    if (!out) throw Error("write_csv: stream write failed");
}

void write_csv(const std::vector<AccuracyReport>& reports, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error("write_csv: cannot open " + path);
    write_csv(reports, f);
    f.flush();
    if (!f) throw Error("write_csv: write to " + path + " failed");
}

}  // namespace rkn
