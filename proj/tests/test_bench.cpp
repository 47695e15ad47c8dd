#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>
#include <vector>

#include "rkn/bench.hpp"
#include "rkn/errors.hpp"

using namespace rkn;

namespace {

std::vector<StepState> fabricated_trajectory(const std::vector<double>& ts,
                                             const std::vector<double>& us) {
    std::vector<StepState> traj;
    for (std::size_t i = 0; i < ts.size(); ++i)
        traj.push_back(StepState{ts[i], {us[i]}, {0.0}});
    return traj;
}

const ExactFn zero_exact = [](double, std::span<double> out) { out[0] = 0.0; };

const AccuracyReport& find_report(const std::vector<AccuracyReport>& reports, ProblemId pid,
                                  MethodKind mk, double h, double T) {
    for (const AccuracyReport& r : reports)
        if (r.problem == pid && r.method == mk && r.h == h && r.T == T) return r;
    REQUIRE_MESSAGE(false, "report not found");
    return reports.front();  // unreachable
}

// The grid runs are the expensive part of this suite; doctest re-enters a
// TEST_CASE once per SUBCASE, so they are computed once and shared.
const std::vector<AccuracyReport>& grid_serial() {
    static const std::vector<AccuracyReport> reports = run_table2(Exec::Serial);
    return reports;
}

const std::vector<AccuracyReport>& grid_parallel() {
    static const std::vector<AccuracyReport> reports = run_table2(Exec::Parallel);
    return reports;
}

}  // namespace

TEST_CASE("accuracy: max-norm error over the windowed grid") {
    const auto traj =
        fabricated_trajectory({0.0, 0.5, 1.0, 1.5, 2.0}, {0.0, 0.0, 0.0, 1e-3, 0.0});
    const ErrorSummary s = accuracy(traj, zero_exact);
    CHECK(s.max_error == 1e-3);
    CHECK(s.acc == doctest::Approx(3.0).epsilon(1e-12));

    SUBCASE("nodes before the window start are ignored") {
        const auto spiked =
            fabricated_trajectory({0.0, 0.5, 1.0, 1.5, 2.0}, {9.0, 5.0, 0.0, 1e-3, 0.0});
        const ErrorSummary w = accuracy(spiked, zero_exact);
        CHECK(w.max_error == 1e-3);

        // ...unless the window is widened explicitly.
        const ErrorSummary all = accuracy(spiked, zero_exact, 0.0);
        CHECK(all.max_error == 9.0);
    }
    SUBCASE("an exactly zero error reports infinite digits") {
        const auto perfect = fabricated_trajectory({0.0, 1.0, 2.0}, {0.0, 0.0, 0.0});
        const ErrorSummary z = accuracy(perfect, zero_exact);
        CHECK(z.max_error == 0.0);
        CHECK(std::isinf(z.acc));
    }
    SUBCASE("argument errors") {
        CHECK_THROWS_AS((void)accuracy({}, zero_exact), Error);
        CHECK_THROWS_AS((void)accuracy(traj, ExactFn{}), MissingSolutionError);
    }
}

TEST_CASE("streamed accuracy equals stored accuracy bit for bit") {
    const SecondOrderIVP ivp = make_problem(ProblemId::Inhomogeneous);
    const NystromTableau tab = build_tableau(MethodSpec::classical(), ivp.nu, 0.05);
    const ErrorSummary streamed = measure_stream(tab, ivp, 0.05, 100.0);
    const ErrorSummary stored = accuracy(integrate(tab, ivp, 0.05, 100.0), ivp.exact);
    CHECK(streamed.max_error == stored.max_error);
    CHECK(streamed.acc == stored.acc);

    SecondOrderIVP blind = ivp;
    blind.exact = ExactFn{};
    CHECK_THROWS_AS((void)measure_stream(tab, blind, 0.05, 100.0), MissingSolutionError);
}

TEST_CASE("benchmark grid: shape, determinism, and known landmarks") {
    const std::vector<AccuracyReport>& serial = grid_serial();
    const std::vector<AccuracyReport>& parallel = grid_parallel();

    REQUIRE(serial.size() == 48);
    REQUIRE(parallel.size() == 48);

    SUBCASE("sorted by (problem, h, method, T) and fully populated") {
        const auto key = [](const AccuracyReport& r) {
            return std::make_tuple(static_cast<int>(r.problem), r.h,
                                   static_cast<int>(r.method), r.T);
        };
        CHECK(std::is_sorted(serial.begin(), serial.end(),
                             [&](const AccuracyReport& x, const AccuracyReport& y) {
                                 return key(x) < key(y);
                             }));
        for (const AccuracyReport& r : serial) {
            CAPTURE(problem_name(r.problem));
            CAPTURE(r.h);
            CAPTURE(r.T);
            CHECK(!r.failed);
            CHECK(std::isfinite(r.max_error));
            CHECK(std::isfinite(r.acc));
        }
    }

    SUBCASE("serial and parallel execution produce identical bytes") {
        std::ostringstream so;
        std::ostringstream po;
        write_csv(serial, so);
        write_csv(parallel, po);
        CHECK(so.str() == po.str());
    }

    SUBCASE("halving h never loses digits") {
        for (const ProblemId pid : kAllProblems) {
            const bool fine = pid == ProblemId::Inhomogeneous || pid == ProblemId::TwoBody;
            const double h_small = fine ? 0.025 : 0.25;
            const double h_big = fine ? 0.05 : 0.5;
            for (const MethodKind mk : {MethodKind::Classical, MethodKind::PhaseFitted})
                for (const double T : {100.0, 1000.0, 5000.0}) {
                    CAPTURE(problem_name(pid));
                    CAPTURE(method_name(mk));
                    CAPTURE(T);
                    CHECK(find_report(serial, pid, mk, h_small, T).acc >
                          find_report(serial, pid, mk, h_big, T).acc);
                }
        }
    }

    SUBCASE("the fitted variant dominates everywhere on this grid") {
        for (const AccuracyReport& r : serial) {
            if (r.method != MethodKind::Classical) continue;
            const AccuracyReport& f =
                find_report(serial, r.problem, MethodKind::PhaseFitted, r.h, r.T);
            CAPTURE(problem_name(r.problem));
            CAPTURE(r.h);
            CAPTURE(r.T);
            CHECK(f.acc >= r.acc + 0.5);
        }
    }

    SUBCASE("landmark digit counts") {
        const auto acc_of = [&](ProblemId pid, MethodKind mk, double h, double T) {
            return find_report(serial, pid, mk, h, T).acc;
        };
        CHECK(std::abs(acc_of(ProblemId::Duffing, MethodKind::PhaseFitted, 0.25, 100.0) -
                       5.7) <= 0.5);
        CHECK(std::abs(acc_of(ProblemId::Inhomogeneous, MethodKind::Classical, 0.05, 5000.0) -
                       (-0.3)) <= 0.5);
        CHECK(std::abs(acc_of(ProblemId::FrancoPalacios, MethodKind::Classical, 0.5, 5000.0) -
                       0.4) <= 0.5);
        CHECK(std::abs(acc_of(ProblemId::TwoBody, MethodKind::PhaseFitted, 0.025, 100.0) -
                       7.3) <= 0.5);
    }
}

TEST_CASE("CSV serialization") {
    SUBCASE("header only for an empty report list") {
        std::ostringstream out;
        write_csv({}, out);
        CHECK(out.str() == "problem,method,h,T,max_error,acc\n");
    }

    SUBCASE("one fully specified row") {
        AccuracyReport r;
        r.problem = ProblemId::Duffing;
        r.method = MethodKind::PhaseFitted;
        r.h = 0.25;
        r.T = 100.0;
        r.max_error = 2e-6;
        r.acc = -std::log10(2e-6);
        std::ostringstream out;
        write_csv({r}, out);
        CHECK(out.str() ==
              "problem,method,h,T,max_error,acc\n"
              "duffing,fitted,0.25,100,2.00000e-06,5.7\n");
    }

    SUBCASE("failed cells are serialized, not dropped") {
        AccuracyReport r;
        r.problem = ProblemId::TwoBody;
        r.method = MethodKind::Classical;
        r.h = 0.5;
        r.T = 5000.0;
        r.max_error = std::numeric_limits<double>::quiet_NaN();
        r.acc = std::numeric_limits<double>::quiet_NaN();
        r.failed = true;
        std::ostringstream out;
        write_csv({r}, out);
        const std::string text = out.str();
        CHECK(text.find("twobody,classical,0.5,5000,") != std::string::npos);
        CHECK(text.find("nan") != std::string::npos);
    }

    SUBCASE("a full grid serializes to 49 lines") {
        std::ostringstream out;
        write_csv(grid_serial(), out);
        const std::string text = out.str();
        CHECK(std::count(text.begin(), text.end(), '\n') == 49);
    }

    SUBCASE("unwritable paths surface as errors") {
        CHECK_THROWS_AS(write_csv({}, std::string("/nonexistent_dir_zzz/out.csv")), Error);
    }
}
