#include "doctest.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "oracles.hpp"
#include "radial/classification.hpp"
#include "radial/errors.hpp"
#include "radial/radial_ivp.hpp"

using namespace radial;
using std::numbers::pi;

namespace {

// -u'' - (2/t) u' = -6 has u = s + t^2
RadialProblem quadratic_case(int n = 3) {
    return {n, 2.0 * n, SourceTerm::zero(), Nonlinearity::zero()};
}

// g(u) = u, n = 1: -u'' = u - lambda gives u = lambda + (s - lambda) cos t
RadialProblem linear_case(double lambda = 3.0) {
    return {1, lambda, SourceTerm::zero(),
            Nonlinearity::custom([](double u) { return u; }, [](double) { return 1.0; }, 1.0, "linear")};
}

RadialProblem default_case(double lambda) {
    return {1, lambda, SourceTerm::zero(), Nonlinearity::piecewise_power(2.0, 5.0)};
}

// Reference blow-up time for s0 = -3, lambda = 100, n = 1: RKF78 and Dormand-Prince 5
// (Boost.Odeint, tolerance 1e-13) agree on the guard crossing to 1e-14.
constexpr double kBlowUpTime = 0.1548531360534;

}  // namespace

TEST_CASE("rhs examples") {
    const auto nl = Nonlinearity::piecewise_power(2.0, 5.0);
    const RadialProblem p3(3, 6.0, SourceTerm::zero(), nl);
    CHECK(rhs(1.0, 0.0, 0.0, p3) == doctest::Approx(6.0));
    CHECK(rhs(0.0, 0.0, 0.0, p3) == doctest::Approx(2.0));
    const RadialProblem p1(1, 1.0, SourceTerm::zero(), nl);
    CHECK(rhs(0.5, 2.0, 0.0, p1) == doctest::Approx(-3.0));
    CHECK(rhs(0.5, 2.0, 1.0, p3.with_lambda(1.0)) == doctest::Approx(-4.0 - 3.0));
}

TEST_CASE("quadratic case is reproduced") {
    for (int n : {1, 3}) {
        const auto p = quadratic_case(n);
        const auto prof = integrate(1.0, p);
        CHECK(prof.grid().front() == 0.0);
        CHECK(prof.grid().back() == 1.0);
        CHECK(prof.size() >= 257);
        CHECK(prof.du().front() == 0.0);
        CHECK(std::abs(prof.terminal() - 2.0) <= 1e-9);
        double err = 0.0;
        for (std::size_t i = 0; i < prof.size(); ++i) {
            const double t = prof.grid()[i];
            err = std::max(err, std::abs(prof.u()[i] - (1.0 + t * t)));
            err = std::max(err, std::abs(prof.du()[i] - 2.0 * t));
        }
        CHECK(err <= 1e-9);
        for (int i = 0; i <= 1000; ++i) {
            const double t = i / 1000.0;
            CHECK(std::abs(prof.value(t) - (1.0 + t * t)) <= 1e-9);
        }
    }
}

TEST_CASE("grid is strictly increasing") {
    const auto prof = integrate(0.0, default_case(100.0));
    for (std::size_t i = 1; i < prof.size(); ++i) CHECK(prof.grid()[i] > prof.grid()[i - 1]);
    CHECK(prof.stats().steps > 0);
    CHECK(prof.stats().rtol == 1e-10);
}

TEST_CASE("terminal error never grows when tolerances tighten") {
    SUBCASE("quadratic case, error at round-off level") {
        const auto p = quadratic_case();
        double prev = INFINITY;
        for (double tol : {1e-6, 1e-8, 1e-10, 1e-12}) {
            IntegratorSettings s;
            s.atol = s.rtol = tol;
            const double err = std::abs(integrate(1.0, p, s).terminal() - 2.0);
            CHECK(err <= 1e-8);
            CHECK(err <= std::max(prev, 8 * std::numeric_limits<double>::epsilon()));
            prev = err;
        }
    }
    SUBCASE("linear case with a non-polynomial solution") {
        const auto p = linear_case(3.0);
        const double exact = 3.0 + (0.5 - 3.0) * std::cos(1.0);
        double prev = INFINITY;
        for (double tol : {1e-5, 1e-7, 1e-9, 1e-11}) {
            IntegratorSettings s;
            s.atol = s.rtol = tol;
            s.max_step = 0.5;
            const double err = std::abs(integrate(0.5, p, s).terminal() - exact);
            CHECK(err <= prev);
            prev = err;
        }
        CHECK(std::abs(integrate(0.5, p).terminal() - exact) <= 1e-8);
    }
}

TEST_CASE("dense output tracks the exact solution between nodes") {
    const auto p = linear_case(3.0);
    const auto prof = integrate(0.5, p);
    for (std::size_t i = 0; i + 1 < prof.size(); ++i) {
        const double t = 0.5 * (prof.grid()[i] + prof.grid()[i + 1]);
        CHECK(std::abs(prof.value(t) - (3.0 - 2.5 * std::cos(t))) <= 1e-9);
        CHECK(std::abs(prof.slope(t) - 2.5 * std::sin(t)) <= 1e-9);
    }
}

TEST_CASE("Taylor start point barely matters") {
    auto check = [](const RadialProblem& p, double s0) {
        IntegratorSettings a, b;
        b.t_start = 1e-7;
        CHECK(std::abs(integrate(s0, p, a).terminal() - integrate(s0, p, b).terminal()) <= 1e-8);
    };
    check(quadratic_case(), 1.0);
    check(linear_case(), 0.5);
    for (double s0 : {-2.0, 0.0, 5.0}) check(default_case(100.0), s0);

    IntegratorSettings b;
    b.t_start = 1e-7;
    const auto r6 = shoot(-3.0, default_case(100.0));
    const auto r7 = shoot(-3.0, default_case(100.0), b);
    CHECK(std::abs(r6.t_stop - r7.t_stop) <= 1e-8);
}

TEST_CASE("s0 = -3 at lambda = 100 escapes before t = 1") {
    const auto p = default_case(100.0);
    const auto r = shoot(-3.0, p);
    CHECK(r.status == IvpStatus::BlowUp);
    CHECK(r.blowup_sign == -1);
    CHECK(r.t_stop == doctest::Approx(kBlowUpTime).epsilon(1e-9));
    CHECK(r.u.back() < -1e6);  // last accepted node before the escaping step

    // the frozen value against the oracle computed afresh
    int sign = 0;
    oracle::Model m;
    m.lambda = 100.0;
    CHECK_FALSE(oracle::terminal(m, -3.0, 1e-12, &sign).has_value());
    CHECK(sign == -1);

    try {
        integrate(-3.0, p);
        FAIL("expected BlowUpError");
    } catch (const BlowUpError& e) {
        CHECK(e.sign == -1);
        CHECK(e.t == doctest::Approx(kBlowUpTime).epsilon(1e-9));
    }
}

TEST_CASE("finite trajectories agree with the Runge-Kutta-Fehlberg oracle") {
    oracle::Model m;
    for (double lambda : {50.0, 100.0}) {
        m.lambda = lambda;
        for (double s0 : {-2.0, 0.0, 3.0, 6.0}) {
            const auto ref = oracle::terminal(m, s0, 1e-13);
            REQUIRE(ref.has_value());
            CHECK(integrate(s0, default_case(lambda)).terminal() == doctest::Approx(*ref).epsilon(1e-8));
        }
    }
}

TEST_CASE("trajectory is even about an interior extremum") {
    const auto prof = integrate(0.0, default_case(100.0));
    const auto [maxima, minima] = critical_points(prof);
    REQUIRE(maxima.size() == 1);
    const double beta = maxima.front().t;
    CHECK(beta > 0.5);
    for (double h = 0.01; h < 1.0 - beta; h += 0.01)
        CHECK(std::abs(prof.value(beta + h) - prof.value(beta - h)) <= 1e-7);
}

TEST_CASE("residual_norm") {
    const auto p = quadratic_case();
    std::vector<double> grid, u, du, ddu, up, dup, ddup;
    for (int i = 0; i <= 512; ++i) {
        const double t = i / 512.0;
        grid.push_back(t);
        u.push_back(1.0 + t * t);
        du.push_back(2.0 * t);
        ddu.push_back(2.0);
        up.push_back(u.back() + 0.01 * std::sin(pi * t));
        dup.push_back(du.back() + 0.01 * pi * std::cos(pi * t));
        ddup.push_back(2.0 - 0.01 * pi * pi * std::sin(pi * t));
    }
    const auto exact = SolutionProfile::from_samples(p, grid, u, du, ddu);
    CHECK(residual_norm(exact) <= 1e-6);
    const auto perturbed = SolutionProfile::from_samples(p, grid, up, dup, ddup);
    CHECK(residual_norm(perturbed) >= 0.01 * pi * pi / (1.0 + p.lambda()) * 0.9);

    CHECK(residual_norm(integrate(1.0, p)) <= 1e-6);
}

TEST_CASE("profile construction rejects malformed data") {
    const auto p = quadratic_case();
    CHECK_THROWS_AS(SolutionProfile::from_samples(p, {0.0}, {1.0}, {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(SolutionProfile::from_samples(p, {0.0, 0.0, 1.0}, {1, 1, 1}, {0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(SolutionProfile::from_samples(p, {0.0, 1.0}, {1, 1, 1}, {0, 0}), std::invalid_argument);
    IntegratorSettings bad;
    bad.rtol = 0.0;
    CHECK_THROWS_AS(integrate(1.0, p, bad), std::invalid_argument);
}

TEST_CASE("step failure is reported") {
    IntegratorSettings s;
    s.max_steps = 10;
    const auto r = shoot(0.0, default_case(100.0), s);
    CHECK(r.status == IvpStatus::StepFailure);
    CHECK_THROWS_AS(integrate(0.0, default_case(100.0), s), StepFailureError);
}
