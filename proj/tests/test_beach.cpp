#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "sloshing/beach.hpp"
#include "sloshing/config.hpp"

using namespace sloshing;

TEST_CASE("recursion structure") {
    BeachSolution sol = build_beach_solution(3, 0.4);
    REQUIRE(sol.terms.size() == 6);
    CHECK(sol.terms[0].a == Catch::Approx(kPi / 2.0));
    CHECK(sol.terms[0].b == Catch::Approx(kPi));
    CHECK(sol.terms[0].amp == std::complex<double>(1.0, 0.0));
    for (const BeachTerm& t : sol.terms)
        CHECK(std::fabs(std::fabs(t.a - t.b) - kPi / 2.0) < 1e-12);
    // Last term reduces to gamma * e^y e^{+i sqrt(1-mu^2) x}.
    CHECK(std::sin(sol.terms.back().a) == Catch::Approx(1.0));
    CHECK(std::cos(sol.terms.back().a) == Catch::Approx(0.0).margin(1e-12));
    CHECK(std::cos(sol.terms.back().b) == Catch::Approx(1.0));
}

TEST_CASE("gamma against the closed form") {
    for (int q = 1; q <= 12; ++q) {
        for (int i = 0; i <= 100; ++i) {
            const double mu = i / 100.0;
            BeachSolution sol = build_beach_solution(q, mu);
            CHECK(std::fabs(std::abs(sol.gamma) - 1.0) < 1e-12);
            const std::complex<double> closed = gamma_closed_form(q, mu);
            CHECK(std::abs(sol.gamma - closed) < 1e-10);
        }
    }
}

TEST_CASE("gamma special values") {
    CHECK(std::abs(build_beach_solution(1, 0.5).gamma - std::complex<double>(1.0, 0.0)) < 1e-14);
    CHECK(std::abs(build_beach_solution(2, 0.0).gamma - std::complex<double>(0.0, 1.0)) < 1e-12);
    for (int q = 2; q <= 6; ++q) {
        const double expected = (q % 2 == 1) ? 1.0 : -1.0;
        CHECK(std::abs(build_beach_solution(q, 1.0).gamma -
                       std::complex<double>(expected, 0.0)) < 1e-12);
    }
}

TEST_CASE("Steklov defect vanishes on the surface") {
    for (int q : {1, 2, 3, 5}) {
        BeachSolution sol = build_beach_solution(q, 0.35);
        for (int i = 1; i <= 100; ++i) {
            const double x = 0.2 * i;
            const double scale = std::abs(beach_value(sol, x, 0.0)) + 1.0;
            CHECK(std::abs(beach_steklov_defect(sol, x)) < 1e-8 * scale);
        }
    }
}

TEST_CASE("principal plus decaying reconstructs the solution on the surface") {
    BeachSolution sol = build_beach_solution(4, 0.2);
    for (double x : {0.5, 2.0, 7.0}) {
        const std::complex<double> whole = beach_value(sol, x, 0.0);
        const std::complex<double> split =
            beach_principal(sol, x, 0.0) + beach_decaying(sol, x, 0.0);
        CHECK(std::abs(whole - split) < 1e-12 * (1.0 + std::abs(whole)));
    }
}

TEST_CASE("q = 1 has no decaying part") {
    BeachSolution sol = build_beach_solution(1, 0.7);
    for (double x : {0.1, 1.0, 4.0}) CHECK(std::abs(beach_decaying(sol, x, 0.0)) == 0.0);
}

TEST_CASE("decaying part dies off along the surface") {
    // The middle terms carry oscillatory phases, so |decaying| is not a clean
    // single exponential; compare window envelopes instead of a log fit.
    BeachSolution sol = build_beach_solution(3, 0.3);
    auto envelope = [&](double lo, double hi) {
        double worst = 0.0;
        for (double x = lo; x <= hi; x += 0.1)
            worst = std::max(worst, std::abs(beach_decaying(sol, x, 0.0)));
        return worst;
    };
    CHECK(envelope(10.0, 12.0) < 0.05 * envelope(2.0, 4.0));
}

TEST_CASE("beach gradient matches finite differences") {
    BeachSolution sol = build_beach_solution(3, 0.45);
    const double h = 1e-6, x = 1.1, y = -0.3;
    auto grad = beach_gradient(sol, x, y);
    const std::complex<double> fdx =
        (beach_value(sol, x + h, y) - beach_value(sol, x - h, y)) / (2.0 * h);
    const std::complex<double> fdy =
        (beach_value(sol, x, y + h) - beach_value(sol, x, y - h)) / (2.0 * h);
    CHECK(std::abs(grad[0] - fdx) < 1e-6);
    CHECK(std::abs(grad[1] - fdy) < 1e-6);
}

TEST_CASE("Helmholtz residual is O(h^2)") {
    BeachSolution sol = build_beach_solution(4, 0.6);
    const double mu = sol.mu, x = 1.5, y = -0.4;
    auto residual = [&](double h) {
        const std::complex<double> lap =
            (beach_value(sol, x + h, y) + beach_value(sol, x - h, y) +
             beach_value(sol, x, y + h) + beach_value(sol, x, y - h) -
             4.0 * beach_value(sol, x, y)) /
            (h * h);
        return std::abs(lap - mu * mu * beach_value(sol, x, y));
    };
    const double r1 = residual(1e-2);
    const double r2 = residual(5e-3);
    CHECK(r1 / r2 > 3.0);
    CHECK(r1 / r2 < 5.0);
}

TEST_CASE("theta phase endpoints and monotonicity") {
    for (int q = 1; q <= 12; ++q) {
        CHECK(theta_phase(q, 1.0) == 0.0);
        CHECK(std::fabs(theta_phase(q, 0.0) + (q - 1) * kPi / 4.0) < 1e-12);
    }
    for (int q : {2, 5, 9}) {
        double prev = theta_phase(q, 0.0);
        for (int i = 1; i <= 50; ++i) {
            const double t = i / 50.0;
            const double cur = theta_phase(q, t);
            CHECK(cur > prev);
            prev = cur;
        }
    }
    CHECK_THROWS_AS(theta_phase(3, 1.5), Error);
    CHECK_THROWS_AS(theta_phase(3, -0.1), Error);
}

TEST_CASE("theta derivative matches finite differences") {
    const double h = 1e-7;
    for (int q : {2, 6}) {
        for (double t : {0.2, 0.5, 0.8}) {
            const double fd = (theta_phase(q, t + h) - theta_phase(q, t - h)) / (2.0 * h);
            CHECK(theta_phase_deriv(q, t) == Catch::Approx(fd).margin(1e-5));
        }
    }
}

TEST_CASE("invalid arguments are rejected") {
    CHECK_THROWS_AS(build_beach_solution(0, 0.5), Error);
    CHECK_THROWS_AS(build_beach_solution(2, 1.5), Error);
    BeachSolution sol = build_beach_solution(2, 0.5);
    CHECK_THROWS_AS(beach_value(sol, 1.0, 0.5), Error);
    CHECK_THROWS_AS(beach_value(sol, 1.0, -1.5), Error);
}
