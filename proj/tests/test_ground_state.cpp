#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "gcs/gcs.hpp"

using namespace gcs;

TEST_CASE("radial_rhs basic values") {
    // zero is an equilibrium
    auto d = radial_rhs(1.0, 0.0, 0.0, 3, 3.0, 1.0);
    CHECK(d.first == 0.0);
    CHECK(d.second == 0.0);
    // n = 1 regular limit at the origin: u'' = (u - u^3)/1
    d = radial_rhs(0.0, 2.0, 0.0, 1, 3.0, 1.0);
    CHECK(d.second == doctest::Approx(2.0 - 8.0));
    // regularized limit (omega u - u^p)/n
    d = radial_rhs(0.0, 2.0, 0.0, 3, 2.0, 1.0);
    CHECK(d.first == 0.0);
    CHECK(d.second == doctest::Approx(-2.0 / 3.0));
}

TEST_CASE("closed-form oracle solves the ODE") {
    // sanity of the oracle itself: plug the sech form into the equation
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
        const double h = 1e-4;
        for (double r : {0.5, 1.0, 3.0, 7.0}) {
            const double u = fixtures::sech_ground_state(r, p);
            const double upp = (fixtures::sech_ground_state(r + h, p) - 2.0 * u +
                                fixtures::sech_ground_state(r - h, p)) /
                               (h * h);
            CHECK(std::abs(upp - u + std::pow(u, p)) < 1e-5);
        }
    }
}

TEST_CASE("n=1 ground states match the sech closed form to 1e-6") {
    for (double p : {1.5, 2.0, 3.0, 4.0}) {
        const RadialProfile& pr = fixtures::ground_state(1, p);
        double sup = 0.0;
        for (std::size_t i = 0; i < pr.grid.size(); ++i)
            sup = std::max(sup, std::abs(pr.values[i] - fixtures::sech_ground_state(pr.grid[i], p)));
        CAPTURE(p);
        CHECK(sup <= 1e-6);
    }
}

TEST_CASE("central amplitudes") {
    CHECK(fixtures::ground_state(1, 3.0).values.front() ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(fixtures::ground_state(1, 2.0).values.front() == doctest::Approx(1.5).epsilon(1e-9));
}

TEST_CASE("n=3 p=3 amplitude regression") {
    const RadialProfile& pr = fixtures::ground_state(3, 3.0);
    CHECK(std::abs(pr.values.front() - 4.3374) < 5e-4);
    // two grid resolutions agree well beyond the regression tolerance
    ShootConfig fine;
    fine.grid_points = 32000;
    const RadialProfile pr2 = shoot_ground_state(3, 3.0, fine);
    CHECK(std::abs(pr.values.front() - pr2.values.front()) < 1e-6);
}

TEST_CASE("supercritical exponents are rejected") {
    CHECK_THROWS_AS(shoot_ground_state(3, 5.0), SupercriticalExponent);
    CHECK_THROWS_AS(shoot_ground_state(3, 7.0), SupercriticalExponent);
    CHECK_THROWS_AS(shoot_ground_state(4, 3.0), SupercriticalExponent); // p*(4) = 3 exactly
    CHECK_NOTHROW(shoot_ground_state(4, Exponent::parse("2.9"), ShootConfig{}));
}

TEST_CASE("bisection cap raises MaxIterations") {
    ShootConfig cfg;
    cfg.max_bisect = 3;
    cfg.amp_tol = 1e-15;
    CHECK_THROWS_AS(shoot_ground_state(1, 3.0, cfg), MaxIterations);
}

TEST_CASE("profile invariants: positive, decreasing, flat at the origin") {
    for (auto [n, p] : {std::pair{1, 3.0}, {2, 2.0}, {3, 3.0}}) {
        const RadialProfile& pr = fixtures::ground_state(n, p);
        CHECK(pr.derivs.front() == 0.0);
        CHECK(pr.grid.front() == 0.0);
        bool ok = true;
        for (std::size_t i = 1; i < pr.grid.size(); ++i)
            ok = ok && pr.values[i] > 0.0 && pr.values[i] < pr.values[i - 1] &&
                 pr.grid[i] > pr.grid[i - 1];
        CAPTURE(n);
        CHECK(ok);
    }
}

TEST_CASE("decay bound holds on the tail third") {
    for (auto [n, p] : {std::pair{1, 3.0}, {2, 2.0}, {3, 3.0}}) {
        const RadialProfile& pr = fixtures::ground_state(n, p);
        REQUIRE(pr.decay_C.has_value());
        REQUIRE(pr.decay_delta.has_value());
        CHECK(*pr.decay_delta > 0.0);
        bool ok = true;
        for (std::size_t i = 2 * pr.grid.size() / 3; i < pr.grid.size(); ++i)
            ok = ok && pr.values[i] <=
                           *pr.decay_C * std::exp(-*pr.decay_delta * pr.grid[i]) * (1.0 + 1e-9);
        CAPTURE(n);
        CHECK(ok);
    }
}

TEST_CASE("fit_decay recovers the sech tail") {
    const auto [C, delta] = fit_decay(fixtures::ground_state(1, 3.0), 0.3);
    CHECK(delta == doctest::Approx(1.0).epsilon(1e-4));
    CHECK(C == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-3));
}

TEST_CASE("fit_decay on a scaled profile sees the scaled rate") {
    const RadialProfile scaled = scale_profile(fixtures::ground_state(1, 3.0), 4.0, 3.0);
    const auto [C, delta] = fit_decay(scaled, 0.3);
    (void)C;
    CHECK(delta == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("fit_decay error paths") {
    RadialProfile tiny;
    tiny.n = 1;
    tiny.p = 3.0;
    for (int i = 0; i < 20; ++i) {
        tiny.grid.push_back(i * 0.1);
        tiny.values.push_back(std::exp(-i * 0.1));
        tiny.derivs.push_back(-std::exp(-i * 0.1));
    }
    CHECK_THROWS_AS(fit_decay(tiny, 0.1), DegenerateTail); // 2 samples only
    CHECK_THROWS_AS(fit_decay(tiny, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(fit_decay(tiny, 1.0), std::invalid_argument);

    RadialProfile flat = tiny;
    for (auto& v : flat.values) v = 0.0; // all-zero tail
    CHECK_THROWS_AS(fit_decay(flat, 0.5), DegenerateTail);

    RadialProfile rising = tiny;
    for (std::size_t i = 0; i < rising.values.size(); ++i) rising.values[i] = std::exp(0.1 * i);
    CHECK_THROWS_AS(fit_decay(rising, 0.5), DegenerateTail); // non-decaying
}

TEST_CASE("fitted rate approaches the linearization rate as r_max grows") {
    ShootConfig near_cfg, far_cfg;
    near_cfg.r_max = 15.0;
    far_cfg.r_max = 25.0;
    const auto d_near = fit_decay(shoot_profile(3, 3.0, 1.0, near_cfg), 1.0 / 3.0).second;
    const auto d_far = fit_decay(shoot_profile(3, 3.0, 1.0, far_cfg), 1.0 / 3.0).second;
    CHECK(std::abs(d_far - 1.0) < std::abs(d_near - 1.0));
    CHECK(std::abs(d_far - 1.0) < 0.08);
}

TEST_CASE("scale_profile: identity at omega = 1") {
    const RadialProfile& base = fixtures::ground_state(1, 3.0);
    const RadialProfile same = scale_profile(base, 1.0, 3.0);
    CHECK(same.grid == base.grid);
    CHECK(same.values == base.values);
    CHECK(same.derivs == base.derivs);
}

TEST_CASE("scale_profile: omega = 4 doubles amplitude and halves the grid") {
    const RadialProfile& base = fixtures::ground_state(1, 3.0);
    const RadialProfile scaled = scale_profile(base, 4.0, 3.0);
    CHECK(scaled.values.front() == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-9));
    CHECK(scaled.grid.back() == doctest::Approx(base.grid.back() / 2.0));
}

TEST_CASE("scale_profile rejects nonpositive omega") {
    CHECK_THROWS_AS(scale_profile(fixtures::ground_state(1, 3.0), 0.0, 3.0), NonpositiveOmega);
    CHECK_THROWS_AS(scale_profile(fixtures::ground_state(1, 3.0), -2.0, 3.0), NonpositiveOmega);
}

TEST_CASE("scaling representation agrees with direct shooting") {
    // the testable content of the representation formula: shooting the
    // omega-shifted equation directly reproduces the scaled ground state
    for (int n : {1, 3}) {
        const RadialProfile& base = fixtures::ground_state(n, 3.0);
        for (double omega : {0.5, 2.0, 4.0}) {
            const RadialProfile direct = shoot_profile(n, 3.0, omega);
            const RadialProfile scaled = scale_profile(base, omega, 3.0);
            REQUIRE(direct.grid.size() == scaled.grid.size());
            double sup = 0.0;
            for (std::size_t i = 0; i < direct.grid.size(); ++i) {
                CHECK(std::abs(direct.grid[i] - scaled.grid[i]) <= 1e-12 * (1.0 + direct.grid[i]));
                sup = std::max(sup, std::abs(direct.values[i] - scaled.values[i]));
            }
            CAPTURE(n);
            CAPTURE(omega);
            CHECK(sup <= 1e-5);
        }
    }
}

TEST_CASE("finite-difference residual tracks the configured amplitude tolerance") {
    // The FD floor is h^2 u'''' / 12 plus rounding noise ~ eps u / h^2, so the
    // bound 10 * amp_tol is checkable once amp_tol sits above that floor.
    struct Case {
        int n;
        double p;
        double amp_tol;
    };
    for (const Case c : {Case{1, 3.0, 1e-7}, Case{2, 2.0, 5e-7}, Case{3, 3.0, 2e-6}}) {
        ShootConfig cfg;
        cfg.amp_tol = c.amp_tol;
        cfg.grid_points = 160000;
        const RadialProfile pr = shoot_profile(c.n, c.p, 1.0, cfg);
        CAPTURE(c.n);
        CHECK(ode_residual(pr, 1.0) <= 10.0 * c.amp_tol);
    }
}

TEST_CASE("config validation") {
    ShootConfig bad;
    bad.step = 30.0; // step >= r_max
    CHECK_THROWS_AS(shoot_ground_state(1, 3.0, bad), std::invalid_argument);
    bad = ShootConfig{};
    bad.amp_tol = 0.0;
    CHECK_THROWS_AS(shoot_ground_state(1, 3.0, bad), std::invalid_argument);
    CHECK_THROWS_AS(shoot_ground_state(0, 3.0), std::invalid_argument);
    CHECK_THROWS_AS(shoot_ground_state(1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(shoot_profile(1, 3.0, -1.0), NonpositiveOmega);
}
