#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "sloshing/pi4.hpp"
#include "sloshing/spectrum.hpp"

using namespace sloshing;

TEST_CASE("corner branch closed forms") {
    auto roots = pi4_corner_branches(kPi, kPi, 3.0);
    double cosh1 = -1.0, sinh1 = -1.0, xy = -1.0;
    int zeros = 0;
    for (const Pi4Root& r : roots) {
        if (r.sigma == 0.0) ++zeros;
        if (r.branch == Pi4Branch::CoshCosh && r.n == 1) cosh1 = r.sigma;
        if (r.branch == Pi4Branch::SinhSinh && r.n == 1) sinh1 = r.sigma;
        if (r.branch == Pi4Branch::XY) xy = r.sigma;
    }
    CHECK(zeros == 1);
    CHECK(cosh1 == Catch::Approx(std::tanh(kPi / (2.0 * std::sqrt(2.0))) / std::sqrt(2.0))
                       .epsilon(1e-12));
    CHECK(cosh1 == Catch::Approx(0.5688).margin(1e-4));
    CHECK(xy == Catch::Approx(2.0 / kPi).epsilon(1e-12));
    CHECK(sinh1 > 1.0 / std::sqrt(2.0));
}

TEST_CASE("tanh and coth branches straddle the free value") {
    auto roots = pi4_corner_branches(kPi, kPi, 20.0);
    for (const Pi4Root& r : roots) {
        if (r.n == 0 || r.branch == Pi4Branch::XY) continue;
        // Both branches collapse onto n/sqrt2 to machine precision for large
        // n; the strict straddle is only resolvable at small n.
        if (r.n > 8) continue;
        const double free_value = r.n / std::sqrt(2.0);
        if (r.branch == Pi4Branch::CoshCosh) CHECK(r.sigma < free_value);
        if (r.branch == Pi4Branch::SinhSinh) CHECK(r.sigma > free_value);
    }
}

TEST_CASE("corner branch gap closes exponentially") {
    std::vector<double> ns, logs;
    auto roots = pi4_corner_branches(kPi, kPi, 15.0);
    for (int n = 2; n <= 12; ++n) {
        double a = 0.0, b = 0.0;
        for (const Pi4Root& r : roots) {
            if (r.n != n) continue;
            if (r.branch == Pi4Branch::CoshCosh) a = r.sigma;
            if (r.branch == Pi4Branch::SinhSinh) b = r.sigma;
        }
        if (a == 0.0 || b == 0.0) continue;
        ns.push_back(n);
        logs.push_back(std::log(b - a));
    }
    LinearFit fit = fit_line(ns, logs);
    CHECK(fit.slope < -1.0);
    CHECK(fit.r2 > 0.99);
}

TEST_CASE("oscillatory roots satisfy the secular equations") {
    auto roots = pi4_oscillatory_roots(kPi, kPi, 8.0);
    REQUIRE_FALSE(roots.empty());
    for (const Pi4Root& r : roots) {
        CHECK(r.sigma > 0.0);
        const double lambda = static_cast<double>(r.n);
        const double rho = std::sqrt(r.chi * r.chi + lambda * lambda);
        if (r.branch == Pi4Branch::CosCosh) {
            CHECK(r.m >= 1);
            const double lhs = -r.chi * std::tan(r.chi * kPi / 2.0);
            const double rhs = rho * std::tanh(rho * kPi / 2.0);
            CHECK(lhs == Catch::Approx(rhs).margin(1e-6 * (1.0 + rhs)));
        } else {
            REQUIRE(r.branch == Pi4Branch::SinSinh);
            const double lhs = r.chi / std::tan(r.chi * kPi / 2.0);
            const double rhs = rho / std::tanh(rho * kPi / 2.0);
            CHECK(lhs == Catch::Approx(rhs).margin(1e-6 * (1.0 + rhs)));
        }
    }
}

TEST_CASE("exact roots are exponentially close to the quasi-eigenvalues") {
    PrismConfig cfg = validate_config(kPi, kPi, 2, 2);
    std::vector<double> exact = {};
    for (const Pi4Root& r : pi4_spectrum(kPi, kPi, 25.0)) exact.push_back(r.sigma);
    std::vector<double> quasi = flatten_sigmas(merged_quasi_spectrum(cfg, 25.0));
    std::vector<double> sigmas, logs;
    for (double s : quasi) {
        if (s < 6.0 || s > 20.0) continue;
        double best = 1e9;
        for (double e : exact) best = std::min(best, std::fabs(e - s));
        if (best > 1e-14) {
            sigmas.push_back(s);
            logs.push_back(std::log(best));
        }
    }
    REQUIRE(sigmas.size() > 10);
    LinearFit fit = fit_line(sigmas, logs);
    CHECK(fit.slope < -0.5);
}

TEST_CASE("counting check approaches the two-term coefficient") {
    Pi4CountingCheck check = pi4_counting_check(kPi, kPi, 60.0);
    CHECK(check.target == Catch::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::fabs(check.normalized - check.target) < 0.5);
}

TEST_CASE("cuboid reference") {
    auto sigmas = cuboid_reference(kPi, kPi, 1.0, 5.0);
    REQUIRE_FALSE(sigmas.empty());
    CHECK(sigmas.front() == 0.0);
    CHECK(sigmas[1] == Catch::Approx(std::tanh(1.0)).epsilon(1e-12));
    CHECK(sigmas[2] == Catch::Approx(std::tanh(1.0)).epsilon(1e-12));
    for (std::size_t i = 1; i < sigmas.size(); ++i) CHECK(sigmas[i - 1] <= sigmas[i]);
}
