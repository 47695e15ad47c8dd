// Command-line front end: single benchmark runs, phase-lag analysis, and
// the full accuracy-table grid.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rkn/bench.hpp"
#include "rkn/errors.hpp"
#include "rkn/fitting.hpp"
#include "rkn/phase.hpp"
#include "rkn/problems.hpp"
#include "rkn/stepper.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

std::optional<rkn::MethodKind> parse_method(const std::string& name) {
    if (name == "classical") return rkn::MethodKind::Classical;
    if (name == "fitted") return rkn::MethodKind::PhaseFitted;
    return std::nullopt;
}

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return kExitUsage;
}

int run_single(const std::string& problem_name, const std::string& method_name, double h,
               double t_end, const std::optional<double>& nu_override,
               const std::string& out_path) {
    const auto pid = rkn::parse_problem(problem_name);
    if (!pid)
        return usage_error("unknown problem '" + problem_name +
                           "' (expected inhomogeneous|twobody|duffing|francopalacios)");
    const auto mk = parse_method(method_name);
    if (!mk) return usage_error("unknown method '" + method_name + "' (expected classical|fitted)");
    if (t_end <= rkn::kDefaultSkip)
        return usage_error("--t-end must exceed 1 (the accuracy window starts at t = 1)");

    rkn::SecondOrderIVP ivp = rkn::make_problem(*pid);
    if (nu_override) ivp.nu = *nu_override;  // fitting frequency only; the ODE is unchanged

    try {
        const rkn::MethodSpec spec = *mk == rkn::MethodKind::Classical
                                         ? rkn::MethodSpec::classical()
                                         : rkn::MethodSpec::phase_fitted();
        const rkn::NystromTableau tab = rkn::build_tableau(spec, ivp.nu, h);
        const rkn::ErrorSummary s = rkn::measure_stream(tab, ivp, h, t_end);
        const std::vector<rkn::AccuracyReport> row = {
            rkn::AccuracyReport{*pid, *mk, h, t_end, s.max_error, s.acc, false}};
        if (out_path.empty())
            rkn::write_csv(row, std::cout);
        else
            rkn::write_csv(row, out_path);
        return kExitOk;
    } catch (const rkn::Error& e) {
        std::cerr << "numerical failure in run (problem=" << problem_name
                  << ", method=" << method_name << ", h=" << h << "): " << e.what() << "\n";
        return kExitNumerical;
    }
}

int run_analyze(const std::string& method_name, const std::vector<double>& zs) {
    const auto mk = parse_method(method_name);
    if (!mk) return usage_error("unknown method '" + method_name + "' (expected classical|fitted)");
    if (zs.empty()) return usage_error("--z needs at least one value");
    for (const double z : zs)
        if (!(z > 0.0) || !(z < std::numbers::pi / 2.0))
            return usage_error("z values must lie in (0, pi/2)");

    try {
        const rkn::MethodSpec spec = *mk == rkn::MethodKind::Classical
                                         ? rkn::MethodSpec::classical()
                                         : rkn::MethodSpec::phase_fitted();
        for (const double z : zs) {
            // nu = z with unit step makes the fitted tableau target exactly
            // this frequency.
            const rkn::NystromTableau tab = rkn::build_tableau(spec, z, 1.0);
            const double a43 =
                z >= spec.z_switch ? rkn::fitted_a43(z) : rkn::fitted_a43_taylor(z);
            char line[256];
            std::snprintf(line, sizeof line,
                          "z=%-8g R=%-20.15g Q=%-20.15g phase_lag=%-13.6e "
                          "amplification=%-13.6e fitted_a43=%.15g",
                          z, rkn::trace_R(tab, z), rkn::det_Q(tab, z), rkn::phase_lag(tab, z),
                          rkn::amplification_error(tab, z), a43);
            std::cout << line << "\n";
        }
        return kExitOk;
    } catch (const rkn::Error& e) {
        std::cerr << "numerical failure in analyze: " << e.what() << "\n";
        return kExitNumerical;
    }
}

int run_table2(const std::string& out_path) {
    const std::vector<rkn::AccuracyReport> reports = rkn::run_table2();
    if (out_path.empty())
        rkn::write_csv(reports, std::cout);
    else
        rkn::write_csv(reports, out_path);

    std::cout << "\nAccuracy digits acc(T) = -log10(max |error|), measured for t in [1, T]\n";
    std::cout << "problem          h      method     acc(100)  acc(1000)  acc(5000)\n";
    for (std::size_t i = 0; i < reports.size(); i += 3) {
        const rkn::AccuracyReport& r = reports[i];
        char line[160];
        std::snprintf(line, sizeof line, "%-16s %-6g %-9s %8.1f %10.1f %10.1f",
                      rkn::problem_name(r.problem), r.h, rkn::method_name(r.method),
                      reports[i].acc, reports[i + 1].acc, reports[i + 2].acc);
        std::cout << line << "\n";
    }

    int failed = 0;
    for (const rkn::AccuracyReport& r : reports)
        if (r.failed) {
            std::cerr << "cell failed: problem=" << rkn::problem_name(r.problem)
                      << " method=" << rkn::method_name(r.method) << " h=" << r.h << " T=" << r.T
                      << "\n";
            ++failed;
        }
    return failed == 0 ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explicit Nystrom integration of oscillatory second-order IVPs with "
                 "phase-lag analysis and a phase-fitted 4-stage method"};
    app.require_subcommand(1);

    std::string problem;
    std::string method;
    double h = 0.0;
    double t_end = 0.0;
    std::optional<double> nu_override;
    std::string out_path;
    std::vector<double> zs;

    CLI::App* run = app.add_subcommand("run", "Integrate one problem and report its accuracy");
    run->set_help_flag("--help", "print this help message");  // frees -h for the --h option
    run->add_option("--problem", problem, "inhomogeneous|twobody|duffing|francopalacios")
        ->required();
    run->add_option("--method", method, "classical|fitted")->required();
    run->add_option("--h", h, "step size")->required()->check(CLI::PositiveNumber);
    run->add_option("--t-end", t_end, "end time (> 1)")->required()->check(CLI::PositiveNumber);
    run->add_option("--nu", nu_override, "override the fitting frequency (default: the problem's)")
        ->check(CLI::PositiveNumber);
    run->add_option("--out", out_path, "CSV destination (default: standard output)");

    CLI::App* analyze =
        app.add_subcommand("analyze", "Print R, Q, phase lag, amplification, fitted a43 per z");
    analyze->add_option("--method", method, "classical|fitted")->required();
    analyze->add_option("--z", zs, "comma-separated z values in (0, pi/2)")
        ->required()
        ->delimiter(',');

    CLI::App* table2 =
        app.add_subcommand("table2", "Run the full accuracy grid and write the 48-row CSV");
    table2->add_option("--out", out_path, "CSV destination (default: standard output)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(run)) return run_single(problem, method, h, t_end, nu_override, out_path);
        if (app.got_subcommand(analyze)) return run_analyze(method, zs);
        if (app.got_subcommand(table2)) return run_table2(out_path);
    } catch (const rkn::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitUsage;
}
