#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "sloshing/surface_waves.hpp"

using namespace sloshing;

TEST_CASE("quantization function values") {
    PrismConfig mixed = validate_config(kPi, kPi, 2, 3);
    CHECK(quantization_value(mixed, 0, 1.25) == Catch::Approx(1.0).margin(1e-12));

    // For q = r = 2 the n = 0 branch is linear: f = sigma - 1/2.
    PrismConfig sym = validate_config(kPi, kPi, 2, 2);
    CHECK(quantization_value(sym, 0, 0.5) == Catch::Approx(0.0).margin(1e-12));
    CHECK(quantization_value(sym, 0, 2.5) == Catch::Approx(2.0).margin(1e-12));

    // f_n -> kappa as sigma approaches the cutoff from above, n >= 1.
    for (auto [q, r] : {std::pair{2, 3}, std::pair{3, 3}}) {
        PrismConfig cfg = validate_config(kPi, kPi, q, r);
        CHECK(quantization_value(cfg, 1, cfg.lambda(1) * (1.0 + 1e-12)) ==
              Catch::Approx(cfg.kappa()).margin(1e-5));
        CHECK_THROWS_AS(quantization_value(cfg, 1, cfg.lambda(1)), Error);
    }
}

TEST_CASE("quantization derivative matches finite differences") {
    PrismConfig cfg = validate_config(kPi, kPi, 3, 5);
    const double h = 1e-6;
    for (int n : {0, 2}) {
        for (double sigma : {2.5, 4.0, 9.0}) {
            const double fd = (quantization_value(cfg, n, sigma + h) -
                               quantization_value(cfg, n, sigma - h)) /
                              (2.0 * h);
            CHECK(quantization_deriv(cfg, n, sigma) == Catch::Approx(fd).margin(1e-6));
        }
    }
}

TEST_CASE("solve_quasi reproduces published roots") {
    PrismConfig mixed = validate_config(kPi, kPi, 2, 3);
    CHECK(solve_quasi(mixed, 1, 0).sigma == Catch::Approx(1.25).margin(1e-10));
    CHECK(solve_quasi(mixed, 1, 1).sigma == Catch::Approx(1.50486).margin(1e-5));
    CHECK(solve_quasi(mixed, 1, 1).residual < 1e-12);

    PrismConfig sym = validate_config(kPi, kPi, 2, 2);
    CHECK(solve_quasi(sym, 3, 0).sigma == Catch::Approx(3.5).margin(1e-10));
    CHECK_THROWS_AS(solve_quasi(sym, 0, 0), Error);
}

TEST_CASE("f is strictly increasing where positive") {
    for (auto [q, r] : {std::pair{2, 2}, std::pair{3, 9}, std::pair{5, 5}}) {
        PrismConfig cfg = validate_config(kPi, kPi, q, r);
        for (int n : {0, 1, 3}) {
            const double lo = cfg.lambda(n) + 1e-6;
            for (int i = 0; i < 200; ++i) {
                const double sigma = lo + (20.0 - lo) * i / 200.0;
                if (quantization_value(cfg, n, sigma) > 0.0)
                    CHECK(quantization_deriv(cfg, n, sigma) > 0.0);
            }
        }
    }
}

TEST_CASE("enumeration finds positive and negative branches") {
    PrismConfig mixed = validate_config(kPi, kPi, 2, 3);
    auto near = [](const std::vector<SurfaceMode>& modes, double sigma) {
        for (const SurfaceMode& m : modes)
            if (std::fabs(m.sigma - sigma) < 1e-9) return true;
        return false;
    };
    auto low = enumerate_surface_quasi(mixed, 1.3);
    CHECK(near(low, 0.25));
    CHECK(near(low, 1.25));

    PrismConfig five = validate_config(kPi, kPi, 5, 5);
    CHECK(near(enumerate_surface_quasi(five, 1.05), 1.0));

    PrismConfig sym = validate_config(kPi, kPi, 2, 2);
    auto roots = enumerate_surface_quasi(sym, 2.0);
    std::vector<double> n0;
    for (const SurfaceMode& m : roots)
        if (m.n == 0) n0.push_back(m.sigma);
    REQUIRE(n0.size() == 2);
    CHECK(n0[0] == Catch::Approx(0.5).margin(1e-10));
    CHECK(n0[1] == Catch::Approx(1.5).margin(1e-10));
}

TEST_CASE("approximate root stability in sigma") {
    // max over n of |f(n/sigma_{m,n}) - f(n/sigma)| shrinks as sigma grows,
    // for lattice points near the ellipse boundary.
    PrismConfig cfg = validate_config(kPi, kPi, 2, 2);
    auto profile = [&](double t) {
        return -cfg.kappa() - (theta_phase(cfg.q, t) + theta_phase(cfg.r, t)) / kPi;
    };
    auto worst = [&](double sigma) {
        double w = 0.0;
        for (int n = 0; n < sigma - 1.0; n += 5) {
            const double xn = sigma * std::sqrt(1.0 - (n / sigma) * (n / sigma));
            const int m = std::max(1, static_cast<int>(std::floor(xn)));
            const double root = solve_quasi(cfg, m, n).sigma;
            w = std::max(w, std::fabs(profile(n / root) - profile(n / sigma)));
        }
        return w;
    };
    const double w50 = worst(50.0);
    const double w200 = worst(200.0);
    CHECK(w200 < w50);
    CHECK(w200 < 0.05);
}

TEST_CASE("quasimode matching constant and defects") {
    PrismConfig cfg = validate_config(kPi, kPi, 2, 3);
    SurfaceMode mode = solve_quasi(cfg, 6, 1);
    SurfaceQuasimode qm = make_quasimode(cfg, mode);
    CHECK(std::fabs(std::abs(qm.Q) - 1.0) < 1e-8);

    DefectReport report = quasimode_defects(cfg, qm);
    const double scale = std::abs(quasimode_eval(cfg, qm, cfg.L / 2.0, 0.0)) + 1.0;
    CHECK(report.max_steklov < 1e-6 * scale);
    CHECK(report.max_wall < 1e-2);

    CHECK_THROWS_AS(quasimode_eval(cfg, qm, cfg.L / 2.0, 0.5), Error);
}

TEST_CASE("wall defect decays exponentially along a mode family") {
    PrismConfig cfg = validate_config(kPi, kPi, 2, 3);
    std::vector<double> sigmas, logs;
    for (int m = 2; m <= 9; ++m) {
        SurfaceMode mode = solve_quasi(cfg, m, 0);
        DefectReport report = quasimode_defects(cfg, make_quasimode(cfg, mode), 40);
        sigmas.push_back(mode.sigma);
        logs.push_back(std::log(report.max_wall));
    }
    LinearFit fit = fit_line(sigmas, logs);
    CHECK(fit.slope < 0.0);
    CHECK(fit.r2 > 0.95);
}
