#include <cmath>
#include <future>

#include "doctest.h"
#include "fixtures.hpp"
#include "gcs/gcs.hpp"

using namespace gcs;

TEST_CASE("reconstruct_solution satisfies the consistency identity") {
    const ProblemParams params{1, 3.0, 0.5, 2.0};
    const RadialProfile& base = fixtures::ground_state(1, 3.0);
    const double alpha = fixtures::alpha(1, 3.0);
    const auto roots = solve_consistency(1, 3.0, params.k * alpha);
    REQUIRE(roots.size() == 1);

    const SolutionBranch branch = reconstruct_solution(params, roots[0], base);
    // k int A^2 = omega - 1 pins the mass: (5.828... - 1)/0.5
    CHECK(branch.l2_mass == doctest::Approx(9.656854249492380).epsilon(1e-6));
    CHECK(branch.coupling_mass == branch.l2_mass);
    CHECK(std::abs(1.0 + params.k * branch.l2_mass - branch.omega) <= 1e-6 * branch.omega);
}

TEST_CASE("branch mass tends to alpha as k -> 0") {
    const RadialProfile& base = fixtures::ground_state(1, 3.0);
    const double alpha = fixtures::alpha(1, 3.0);
    double prev_gap = 1e300;
    for (double k : {1e-2, 1e-4, 1e-6}) {
        const auto roots = solve_consistency(1, 3.0, k * alpha);
        const SolutionBranch b = reconstruct_solution({1, 3.0, k, 2.0}, roots[0], base);
        // mass = omega^{1/2} alpha for p = 3, n = 1
        CHECK(b.l2_mass == doctest::Approx(std::sqrt(b.omega) * alpha).epsilon(1e-6));
        const double gap = std::abs(b.l2_mass - alpha);
        CHECK(gap < prev_gap);
        prev_gap = gap;
    }
    CHECK(prev_gap < 1e-4);
}

TEST_CASE("omega = 1 with k > 0 violates consistency") {
    CHECK_THROWS_AS(
        reconstruct_solution({1, 3.0, 0.5, 2.0}, 1.0, fixtures::ground_state(1, 3.0)),
        ConsistencyViolation);
}

TEST_CASE("a perturbed omega blows up the nonlocal residual") {
    const ProblemParams params{1, 3.0, 0.5, 2.0};
    const RadialProfile& base = fixtures::ground_state(1, 3.0);
    const double alpha = fixtures::alpha(1, 3.0);
    const double omega = solve_consistency(1, 3.0, params.k * alpha)[0];
    const SolutionBranch good = reconstruct_solution(params, omega, base);

    SolutionBranch bad;
    bad.omega = omega * 1.01;
    bad.profile = scale_profile(base, bad.omega, 3.0);
    bad.l2_mass = radial_integral(bad.profile, 2.0, 1).value;
    bad.coupling_mass = bad.l2_mass;
    bad.residual_sup = nonlocal_residual(bad, params);
    CHECK(bad.residual_sup >= 10.0 * good.residual_sup);
}

TEST_CASE("pohozaev identity on closed-form and shot profiles") {
    // n = 1, p = 3 closed form: LHS = -1/2 * 4/3 = -2/3 matches
    // n (P/(p+1) - M/2) = 16/12 - 2 = -2/3
    CHECK(pohozaev_check(fixtures::synthetic_sech_profile(3.0, 4001), 1, 3.0) <= 1e-6);
    CHECK(pohozaev_check(fixtures::ground_state(1, 3.0), 1, 3.0) <= 1e-6);
    for (double p : {2.0, 3.0, 4.0}) {
        CAPTURE(p);
        CHECK(pohozaev_check(fixtures::ground_state(3, p), 3, p) <= 1e-4);
    }
}

TEST_CASE("pohozaev in two dimensions degenerates to int u^2 = 2 int u^{p+1}/(p+1)") {
    const RadialProfile& pr = fixtures::ground_state(2, 2.0);
    const auto t = pohozaev_terms(pr, 2, 2.0);
    CHECK(t.lhs == 0.0); // the gradient coefficient (n-2)/2 vanishes
    const double M = radial_integral(pr, 2.0, 2).value;
    const double P = radial_integral(pr, 3.0, 2).value;
    CHECK(std::abs(M - 2.0 * P / 3.0) / (M + 2.0 * P / 3.0) <= 1e-4);
}

TEST_CASE("nehari identity for all computed ground states") {
    for (auto [n, p] :
         {std::pair{1, 1.5}, {1, 2.0}, {1, 3.0}, {1, 4.0}, {2, 2.0}, {3, 2.0}, {3, 3.0}, {3, 4.0}}) {
        CAPTURE(n);
        CAPTURE(p);
        CHECK(nehari_check(fixtures::ground_state(n, p), n, p) <= 1e-4);
    }
}

TEST_CASE("residual-consistency triangle inequality on certified branches") {
    // |Lap A - A + A^p - k A m| <= |Lap A - omega A + A^p| + |1 + k m - omega| A(0)
    for (auto [k, p] : {std::pair{0.5, 3.0}, {0.03, 2.0}}) {
        const ProblemParams params{1, p, k, 2.0};
        const auto sol = solve_problem(params);
        for (const auto& b : sol.branches) {
            const double ode = ode_residual(b.profile, b.omega);
            const double defect = std::abs(1.0 + k * b.coupling_mass - b.omega);
            // the 1e-12 absolute slack covers rounding in the residual
            // evaluation itself (~eps |Lap A|)
            CHECK(nonlocal_residual(b, params) <=
                  ode + defect * b.profile.values.front() + 1e-12);
        }
    }
}

TEST_CASE("certify_branch stays below the default thresholds") {
    for (auto [k, p] : {std::pair{0.5, 3.0}, {0.03, 2.0}}) {
        const ProblemParams params{1, p, k, 2.0};
        const auto sol = solve_problem(params);
        REQUIRE(!sol.branches.empty());
        for (const auto& b : sol.branches) {
            const auto rep = certify_branch(b, params);
            const double a0 = b.profile.values.front();
            CAPTURE(p);
            CAPTURE(rep.omega);
            CHECK(rep.consistency_defect <= 1e-6);
            CHECK(rep.ode_residual <= 1e-5 * a0);
            CHECK(rep.nonlocal_residual <= 1e-5 * a0);
            CHECK(rep.pohozaev_defect <= 1e-4);
            CHECK(rep.nehari_defect <= 1e-4);
        }
    }
}

TEST_CASE("generalized coupling branch: r_exp = 4") {
    const ProblemParams params{1, 3.0, 0.05, 4.0};
    const auto sol = solve_problem(params);
    // alpha_r = int A_0^4 = 16/3 for the sech ground state
    CHECK(sol.alpha_r == doctest::Approx(16.0 / 3.0).epsilon(1e-6));
    REQUIRE(sol.omegas.size() == 2);
    CHECK(!sol.classification.has_value());
    for (const auto& b : sol.branches)
        CHECK(std::abs(1.0 + params.k * b.coupling_mass - b.omega) <= 1e-6 * b.omega);
}

TEST_CASE("zero profile has zero residual but fails the positivity invariants") {
    SolutionBranch zero;
    zero.omega = 2.0;
    zero.profile.n = 1;
    zero.profile.p = 3.0;
    for (int i = 0; i <= 100; ++i) {
        zero.profile.grid.push_back(0.2 * i);
        zero.profile.values.push_back(0.0);
        zero.profile.derivs.push_back(0.0);
    }
    CHECK(nonlocal_residual(zero, {1, 3.0, 0.5, 2.0}) == 0.0);
    bool positive = true;
    for (double v : zero.profile.values) positive = positive && v > 0.0;
    CHECK(!positive); // upstream construction would reject this object
}

TEST_CASE("pure functions are safe to run concurrently") {
    auto worker = [] {
        const RadialProfile pr = shoot_ground_state(1, 3.0);
        return radial_integral(pr, 2.0, 1).value;
    };
    auto f1 = std::async(std::launch::async, worker);
    auto f2 = std::async(std::launch::async, worker);
    const double a = f1.get(), b = f2.get();
    CHECK(a == b); // identical deterministic results, no shared state
}

TEST_CASE("supercritical solve_problem reports item 4-1 and no branches") {
    const auto sol = solve_problem({3, 5.0, 1.0, 2.0});
    CHECK(!sol.base.has_value());
    REQUIRE(sol.classification.has_value());
    CHECK(sol.classification->theorem_item == TheoremItem::I4_1);
    CHECK(sol.branches.empty());
}
