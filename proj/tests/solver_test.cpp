#include "cpgate/solver.hpp"

#include "cpgate/catalog.hpp"
#include "cpgate/fidelity.hpp"
#include "testutil.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace cpgate;

namespace {

std::string format_report(const SolveReport& report) {
    std::ostringstream out;
    out.precision(12);
    out << std::fixed;
    for (const Solution& sol : report.solutions) {
        for (const Pulse& p : sol.sequence.pulses)
            out << p.area << ' ' << p.phase << ' ';
        out << '\n';
    }
    for (const SeedDiagnostic& diag : report.seeds)
        out << diag.seed_id << ' ' << diag.converged << ' ' << diag.iterations
            << '\n';
    return out.str();
}

} // namespace

TEST_CASE("residual vector layout and exact roots") {
    DesignProblem x3{Family::SymmetricX, 1, pi, 0};
    const std::vector<double> exact = {pi / 6.0, 5.0 * pi / 6.0};
    std::vector<double> res = residual_vector(exact, x3);
    REQUIRE(res.size() == 8);
    for (double r : res) CHECK(std::fabs(r) < 1e-14);

    // all-zero phases: b(0) = i, so the b residual components are (-1, +1)
    const std::vector<double> zero_phases = {0.0, 0.0};
    std::vector<double> zero = residual_vector(zero_phases, x3);
    CHECK(zero[2] == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(zero[3] == doctest::Approx(1.0).epsilon(1e-14));

    const std::vector<double> short_params = {0.1};
    CHECK_THROWS_AS(residual_vector(short_params, x3), std::domain_error);
}

TEST_CASE("tabulated SCROFULOUS values sit near the root") {
    // canonical-gauge tabulated parameters: residual small at 4-decimal
    // precision, machine-small after polish
    const auto& rec = catalog::get("H3s");
    DesignProblem problem{Family::SymmetricRot, 1, 0.5 * pi, 3};
    std::vector<double> params = {rec.sequence.pulses[0].area,
                                  rec.sequence.pulses[0].phase,
                                  rec.sequence.pulses[1].phase};
    double norm = 0.0;
    for (double r : residual_vector(params, problem)) norm += r * r;
    CHECK(std::sqrt(norm) < 2e-3);

    PolishResult refined = polish(rec.sequence, 1);
    CHECK(refined.solution.residual_norm <= 1e-12);
    CHECK_FALSE(refined.basin_escape);
}

TEST_CASE("zeroth-order phase relation of palindromic X sequences") {
    // X3: phi2 = pi/2 + 2 phi1 and the first-order constraint holds
    PhaseRelation x3 = symmetric_x_phase_relations(std::vector{pi / 6.0});
    CHECK(x3.next_phase == doctest::Approx(5.0 * pi / 6.0).epsilon(1e-14));
    CHECK(std::fabs(x3.constraint_residual) < 1e-14);

    // X5 closed forms: phi3 = 2 phi2 - 2 phi1 + pi/2, constraint exact
    const double p1 = std::asin(1.0 - std::sqrt(5.0 / 8.0));
    const double p2 = std::asin((3.0 * std::sqrt(10.0) - 2.0) / 8.0);
    PhaseRelation x5 = symmetric_x_phase_relations(std::vector{p1, p2});
    CHECK(std::fabs(x5.next_phase - (2.0 * p2 - 2.0 * p1 + 0.5 * pi)) < 1e-13);
    CHECK(std::fabs(x5.constraint_residual) < 1e-12);

    // X7 tabulated values satisfy the constraint at table precision
    PhaseRelation x7 = symmetric_x_phase_relations(
        std::vector{0.2560 * pi, 1.6839 * pi, 0.5933 * pi});
    CHECK(std::fabs(x7.constraint_residual) < 5e-3);
    CHECK(std::fabs(x7.next_phase - 0.8306 * pi) < 2e-3);

    CHECK_THROWS_AS(symmetric_x_phase_relations(std::vector<double>{}),
                    std::domain_error);
}

TEST_CASE("inverse sinc") {
    CHECK(inverse_sinc(std::sqrt(2.0)) == doctest::Approx(0.6399).epsilon(1e-4));
    CHECK(inverse_sinc(2.0 * std::cos(0.05 * pi)) ==
          doctest::Approx(0.5061).epsilon(1e-4));
    CHECK(inverse_sinc(0.0) == 1.0);
    CHECK(inverse_sinc(2.0) == doctest::Approx(0.5).epsilon(1e-11));
    for (double v : {0.3, 1.0, 2.7}) {
        const double u = inverse_sinc(v);
        CHECK(std::fabs(std::sin(pi * u) / u - v) < 1e-10);
    }
    CHECK_THROWS_AS(inverse_sinc(-0.1), std::domain_error);
    CHECK_THROWS_AS(inverse_sinc(pi), std::domain_error);
}

TEST_CASE("three-pulse closed form against the rotation table") {
    struct Row {
        double theta_pi, alpha, phi1, phi2;
    };
    // tabulated values (canonical gauge differs by the class symmetries)
    const Row rows[] = {
        {0.5, 0.6399, 1.8442, 1.0587},
        {0.25, 0.5375, 1.0921, 1.9726},
        {0.9, 0.9083, 1.1795, 1.8650},
        {0.1, 0.5061, 1.0389, 1.9892},
    };
    for (const Row& row : rows) {
        Solution sol = scrofulous_solve(row.theta_pi * pi);
        CHECK(sol.residual_norm <= 1e-12);
        CHECK(sol.achieved_order >= 1);
        CompositeSequence printed = make_sequence(
            {make_pulse(row.alpha * pi, row.phi1 * pi),
             make_pulse(pi, row.phi2 * pi),
             make_pulse(row.alpha * pi, row.phi1 * pi)},
            row.theta_pi * pi, Family::SymmetricRot);
        CHECK(sequence_class_distance(sol.sequence, printed) < 1e-3 * pi);
    }

    // theta = pi degenerates to the three-pulse X gate
    Solution x3 = scrofulous_solve(pi);
    CHECK(x3.sequence.pulses[0].area == doctest::Approx(pi).epsilon(1e-9));
    CHECK(sequence_class_distance(x3.sequence,
                                  catalog::get("X3").sequence) < 1e-9);

    CHECK_THROWS_AS(scrofulous_solve(0.0), std::domain_error);
    CHECK_THROWS_AS(scrofulous_solve(1.2 * pi), std::domain_error);
}

TEST_CASE("closed form agrees with the generic solver over a theta grid") {
    const double grid[] = {0.1, 0.125, 1.0 / 6.0, 0.2, 0.25, 1.0 / 3.0, 0.5,
                           2.0 / 3.0, 0.75, 0.8, 5.0 / 6.0, 0.875, 0.9};
    for (double theta_pi : grid) {
        Solution closed = scrofulous_solve(theta_pi * pi);
        SolveReport numeric =
            solve({Family::SymmetricRot, 1, theta_pi * pi, 0}, 12, 77);
        REQUIRE(!numeric.solutions.empty());
        double best = 1e99;
        for (const Solution& sol : numeric.solutions)
            best = std::min(best, sequence_class_distance(sol.sequence,
                                                          closed.sequence));
        CHECK(best < 1e-9);
    }
}

TEST_CASE("multi-start solve finds both X3 branches and nothing else") {
    SolveReport report = solve({Family::SymmetricX, 1, pi, 0}, 64, 1);
    REQUIRE(report.solutions.size() == 2);
    REQUIRE(report.seeds.size() == 64);

    const CompositeSequence b1 = cpgate::testing::x_pulses(
        {1.0 / 6.0, 5.0 / 6.0, 1.0 / 6.0});
    const CompositeSequence b2 = cpgate::testing::x_pulses(
        {5.0 / 6.0, 1.0 / 6.0, 5.0 / 6.0});
    double d1 = 1e99, d2 = 1e99;
    for (const Solution& sol : report.solutions) {
        d1 = std::min(d1, sequence_distance(sol.sequence, b1));
        d2 = std::min(d2, sequence_distance(sol.sequence, b2));
        CHECK(sol.residual_norm <= 1e-12);
        CHECK(sol.achieved_order >= 1);
    }
    CHECK(d1 < 1e-9);
    CHECK(d2 < 1e-9);

    // both branches produce identical Frobenius profiles
    for (double eps = -0.3; eps <= 0.3; eps += 0.05) {
        CHECK(std::fabs(frobenius_fidelity(report.solutions[0].sequence, pi,
                                           eps) -
                        frobenius_fidelity(report.solutions[1].sequence, pi,
                                           eps)) < 1e-12);
    }
}

TEST_CASE("solve is deterministic for a fixed seed") {
    SolveReport a = solve({Family::SymmetricX, 2, pi, 0}, 24, 9);
    SolveReport b = solve({Family::SymmetricX, 2, pi, 0}, 24, 9);
    CHECK(format_report(a) == format_report(b));
}

TEST_CASE("solutions satisfy the claimed order") {
    SolveReport report = solve({Family::SymmetricRot, 2, 0.5 * pi, 0}, 24, 4);
    CHECK(!report.solutions.empty());
    for (const Solution& sol : report.solutions) {
        CHECK(sol.residual_norm <= 1e-12);
        CHECK(sol.achieved_order >= 2);
    }
    // the H5s branch appears among the solutions
    double best = 1e99;
    for (const Solution& sol : report.solutions)
        best = std::min(best, sequence_class_distance(
                                  sol.sequence, catalog::get("H5s").sequence));
    CHECK(best < 2e-4 * pi);
}

TEST_CASE("alpha/beta solve reaches the fast four-pulse branch") {
    SolveReport report =
        solve({Family::AsymAlphaBeta, 2, 0.5 * pi, 0}, 32, 1);
    REQUIRE(!report.solutions.empty());
    CHECK(total_area_pi(report.solutions.front().sequence) <= 4.2);
}

TEST_CASE("theta-capped solve recovers the BB1 class") {
    // the five-pulse second-order Hadamard of this family is BB1 itself:
    // the tabulated H5w row equals the BB1 phases to its rounding
    SolveReport report = solve({Family::AsymTheta, 2, 0.5 * pi, 0}, 24, 3);
    REQUIRE(!report.solutions.empty());
    double to_bb15 = 1e99, to_h5w = 1e99;
    for (const Solution& sol : report.solutions) {
        CHECK(sol.sequence.pulses[0].phase ==
              doctest::Approx(0.5 * pi).epsilon(1e-12));
        to_bb15 = std::min(to_bb15,
                           sequence_class_distance(
                               sol.sequence, catalog::get("BB1-5").sequence));
        to_h5w = std::min(to_h5w,
                          sequence_class_distance(
                              sol.sequence, catalog::get("H5w").sequence));
    }
    CHECK(to_bb15 < 1e-9);
    CHECK(to_h5w < 1e-4 * pi);
}

TEST_CASE("fourth-order X rediscovery") {
    SolveReport report = solve({Family::SymmetricX, 4, pi, 0}, 64, 2);
    REQUIRE(!report.solutions.empty());
    double best = 1e99;
    for (const Solution& sol : report.solutions) {
        CHECK(sol.achieved_order >= 4);
        best = std::min(best, sequence_class_distance(
                                  sol.sequence, catalog::get("X9").sequence));
        HighFidelityRange range = high_fidelity_range(sol.sequence, pi, 1e-4);
        // every fourth-order branch reproduces the tabulated X9 range
        CHECK(std::fabs(range.area_hi_pi() - 1.117) <= 1e-3);
    }
    CHECK(best <= 5e-4 * pi);  // the tabulated branch itself is among them
}

TEST_CASE("no convergent start yields diagnostics, not an exception") {
    // an order-2 palindromic X problem with a single pi pulse cannot exist
    SolveReport report = solve({Family::SymmetricX, 2, pi, 5}, 4, 123, 1e-30);
    CHECK(report.solutions.empty());
    CHECK(report.seeds.size() == 4);
    for (const SeedDiagnostic& diag : report.seeds) {
        CHECK_FALSE(diag.converged);
        CHECK(diag.iterations >= 1);
    }
}

TEST_CASE("problem layout validation") {
    CHECK(problem_pulse_count({Family::SymmetricX, 3, pi, 0}) == 7);
    CHECK(problem_pulse_count({Family::AsymAlphaBeta, 3, 0.5 * pi, 0}) == 6);
    CHECK(parameter_count({Family::SymmetricX, 3, pi, 0}) == 4);
    CHECK(parameter_count({Family::SymmetricRot, 2, 0.5 * pi, 0}) == 4);
    CHECK(parameter_count({Family::AsymTheta, 2, 0.5 * pi, 0}) == 5);
    CHECK(parameter_count({Family::AsymAlphaBeta, 2, 0.5 * pi, 0}) == 6);
    CHECK_THROWS_AS(problem_pulse_count({Family::SymmetricX, 1, 0.3 * pi, 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(problem_pulse_count({Family::SymmetricX, 2, pi, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(problem_pulse_count({Family::SymmetricX, 3, pi, 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parameter_count({Family::Custom, 1, pi, 3}),
                    std::invalid_argument);
}

TEST_CASE("polish refines tabulated rows inside their basin") {
    const auto& x7 = catalog::get("X7");
    PolishResult refined = polish(x7.sequence, 3);
    CHECK(refined.solution.residual_norm <= 1e-12);
    CHECK(refined.max_param_shift <= 5e-4 * pi);
    CHECK_FALSE(refined.basin_escape);
    CHECK(refined.solution.achieved_order == 3);

    // an exact root does not move
    PolishResult x3 = polish(catalog::get("X3").sequence, 1);
    CHECK(x3.max_param_shift < 1e-12);
    CHECK(x3.solution.residual_norm < 1e-13);
}

TEST_CASE("polish disambiguates the corrupted H9w phase") {
    // reading 04124 as 0.4124 keeps every parameter within the rounding
    // budget; reading it as 0.04124 escapes the basin
    const auto& h9w = catalog::get("H9w");
    PolishResult good = polish(h9w.sequence, 4);
    CHECK_FALSE(good.basin_escape);
    CHECK(good.max_param_shift <= 5e-4 * pi);

    std::vector<Pulse> bad = h9w.sequence.pulses;
    bad[7] = make_pulse(pi, 0.04124 * pi);
    CompositeSequence wrong =
        make_sequence(std::move(bad), 0.5 * pi, Family::AsymTheta);
    bool flagged = false;
    try {
        PolishResult result = polish(wrong, 4);
        flagged = result.basin_escape;
    } catch (const PolishDivergence&) {
        flagged = true;
    }
    CHECK(flagged);
}

TEST_CASE("polish divergence carries the last iterate") {
    // two arbitrary pulses cannot satisfy third-order conditions
    CompositeSequence hopeless = make_sequence(
        {make_pulse(0.33 * pi, 0.21), make_pulse(0.71 * pi, 2.9)}, pi,
        Family::Custom);
    try {
        polish(hopeless, 3);
        // reaching here would mean an unexpected root; fail loudly
        CHECK(false);
    } catch (const PolishDivergence& err) {
        CHECK(err.last_iterate.size() == 2);
    }
}

TEST_CASE("sequence class distance folds the published symmetries") {
    const CompositeSequence x3 = catalog::get("X3").sequence;
    // conjugate branch
    CHECK(sequence_class_distance(
              x3, cpgate::testing::x_pulses({5.0 / 6.0, 1.0 / 6.0, 5.0 / 6.0})) <
          1e-12);
    // global pi shift
    CHECK(sequence_class_distance(
              x3, cpgate::testing::x_pulses(
                      {7.0 / 6.0, 11.0 / 6.0, 7.0 / 6.0})) < 1e-12);
    // plain distance does not fold
    CHECK(sequence_distance(
              x3, cpgate::testing::x_pulses({5.0 / 6.0, 1.0 / 6.0, 5.0 / 6.0})) >
          1.0);
}
