#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "sloshing/beach.hpp"
#include "sloshing/common.hpp"
#include "sloshing/config.hpp"

namespace sloshing {

/// One surface-wave quasi-eigenvalue: the root sigma of the quantization
/// condition f_n(sigma) = m.
struct SurfaceMode {
    int m = 1;
    int n = 0;
    double sigma = 0.0;
    double theta_alpha = 0.0;
    double theta_beta = 0.0;
    double residual = 0.0;  // |f_n(sigma) - m|
};

/// f_n(sigma) = (1/pi)[sqrt(1 - (lambda_n/sigma)^2) sigma L
///              + theta_alpha + theta_beta] + kappa, for sigma > lambda_n.
inline double quantization_value(const PrismConfig& cfg, int n, double sigma) {
    const double lambda = cfg.lambda(n);
    if (!(sigma > lambda))
        fail(ErrorCode::BelowCutoff, "quantization_value: sigma must exceed lambda_n");
    const double t = lambda / sigma;
    const double root = std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
    return (root * sigma * cfg.L + theta_phase(cfg.q, t) + theta_phase(cfg.r, t)) / kPi +
           cfg.kappa();
}

/// d f_n / d sigma, analytic.
inline double quantization_deriv(const PrismConfig& cfg, int n, double sigma) {
    const double lambda = cfg.lambda(n);
    if (!(sigma > lambda))
        fail(ErrorCode::BelowCutoff, "quantization_deriv: sigma must exceed lambda_n");
    if (n == 0) return cfg.L / kPi;
    const double t = lambda / sigma;
    const double dtheta = theta_phase_deriv(cfg.q, t) + theta_phase_deriv(cfg.r, t);
    return cfg.L * sigma / (kPi * std::sqrt(sigma * sigma - lambda * lambda)) -
           dtheta * lambda / (kPi * sigma * sigma);
}

namespace detail {

inline SurfaceMode make_surface_mode(const PrismConfig& cfg, int m, int n, double sigma) {
    SurfaceMode mode;
    mode.m = m;
    mode.n = n;
    mode.sigma = sigma;
    const double t = cfg.lambda(n) / sigma;
    mode.theta_alpha = theta_phase(cfg.q, t);
    mode.theta_beta = theta_phase(cfg.r, t);
    mode.residual = std::fabs(quantization_value(cfg, n, sigma) - m);
    return mode;
}

/// Root of f_n(sigma) = target on (lo, hi), bisection plus Newton polish.
inline double solve_on_bracket(const PrismConfig& cfg, int n, double target, double lo,
                               double hi) {
    auto f = [&](double s) { return quantization_value(cfg, n, s) - target; };
    auto df = [&](double s) { return quantization_deriv(cfg, n, s); };
    double x = bisect(f, lo, hi);
    return newton_polish(f, df, x, lo, hi);
}

}  // namespace detail

/// The unique sigma_{m,n} > lambda_n with f_n(sigma) = m, for m >= 1.
inline SurfaceMode solve_quasi(const PrismConfig& cfg, int m, int n) {
    if (m < 1) fail(ErrorCode::DomainError, "solve_quasi: quantization integer must be >= 1");
    const double lambda = cfg.lambda(n);
    double lo = (n == 0) ? 1e-9 : lambda * (1.0 + 1e-9);
    double hi = std::max(lambda + 1.0, 2.0 * lambda);
    while (quantization_value(cfg, n, hi) < m) hi *= 2.0;
    const double sigma = detail::solve_on_bracket(cfg, n, m, lo, hi);
    return detail::make_surface_mode(cfg, m, n, sigma);
}

/// All surface quasi-eigenvalues below sigma_max: for every n the m >= 1
/// branch, plus a sampled scan for the finitely many m <= 0 roots.  The
/// trivial root sigma = lambda_n (f = kappa = 0) is excluded.  Sorted by
/// sigma with (n, m) tie-break.
inline std::vector<SurfaceMode> enumerate_surface_quasi(const PrismConfig& cfg, double sigma_max,
                                                        int scan_samples = 10000) {
    if (!(sigma_max > 0.0))
        fail(ErrorCode::DomainError, "enumerate_surface_quasi: sigma_max <= 0");
    std::vector<SurfaceMode> modes;

    for (int n = 0; cfg.lambda(n) < sigma_max; ++n) {
        for (int m = 1;; ++m) {
            SurfaceMode mode = solve_quasi(cfg, m, n);
            if (mode.sigma >= sigma_max) break;
            modes.push_back(mode);
        }
    }

    // m <= 0 roots.  For n >= 1, f_n starts at kappa >= 0, so negative values
    // require the derivative to dip below zero; once f_n is monotone for some
    // n, it stays monotone for larger n and the scan stops.  n = 0 is always
    // scanned because f_0 is linear yet may start negative.
    const double lambda1 = cfg.lambda(1);
    for (int n = 0; cfg.lambda(n) < sigma_max; ++n) {
        const double lambda = cfg.lambda(n);
        const double lo = (n == 0) ? sigma_max * 1e-9 : lambda * (1.0 + 1e-9);
        if (n >= 1) {
            bool dips = false;
            for (int i = 0; i <= 200; ++i) {
                const double s = lo + (sigma_max - lo) * i / 200.0;
                if (quantization_deriv(cfg, n, s) < 0.0) {
                    dips = true;
                    break;
                }
            }
            if (!dips) break;
        }
        double prev_s = lo;
        double prev_f = quantization_value(cfg, n, prev_s);
        for (int i = 1; i <= scan_samples; ++i) {
            const double s = lo + (sigma_max - lo) * i / scan_samples;
            const double fs = quantization_value(cfg, n, s);
            const int k_lo = static_cast<int>(std::ceil(std::min(prev_f, fs)));
            const int k_hi = static_cast<int>(std::floor(std::max(prev_f, fs)));
            for (int k = k_lo; k <= k_hi && k <= 0; ++k) {
                auto g = [&](double x) { return quantization_value(cfg, n, x) - k; };
                if (g(prev_s) == 0.0 || (g(prev_s) > 0.0) != (g(s) > 0.0)) {
                    const double sigma = detail::solve_on_bracket(cfg, n, k, prev_s, s);
                    const bool trivial = (k == 0 && cfg.kappa() == 0.0 &&
                                          sigma - lambda < 1e-6 * std::max(1.0, lambda1));
                    const bool duplicate =
                        !modes.empty() && modes.back().n == n && modes.back().m == k &&
                        std::fabs(modes.back().sigma - sigma) < 1e-9 * (1.0 + sigma);
                    if (!trivial && !duplicate && sigma < sigma_max)
                        modes.push_back(detail::make_surface_mode(cfg, k, n, sigma));
                }
            }
            prev_s = s;
            prev_f = fs;
        }
    }

    std::sort(modes.begin(), modes.end(), [](const SurfaceMode& a, const SurfaceMode& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        if (a.n != b.n) return a.n < b.n;
        return a.m < b.m;
    });
    return modes;
}

/// Glued quasimode g_sigma(x,y) = v_alpha(sigma x, sigma y)
/// + Q v_beta^d(sigma(L-x), sigma y) with Q matching the principal parts.
struct SurfaceQuasimode {
    SurfaceMode mode;
    BeachSolution valpha;
    BeachSolution vbeta;
    std::complex<double> Q{1.0, 0.0};
};

inline SurfaceQuasimode make_quasimode(const PrismConfig& cfg, const SurfaceMode& mode) {
    if (mode.residual > 1e-10)
        fail(ErrorCode::QUndefined, "make_quasimode: quantization residual too large");
    SurfaceQuasimode qm;
    qm.mode = mode;
    const double mu = cfg.lambda(mode.n) / mode.sigma;
    qm.valpha = build_beach_solution(cfg.q, mu);
    qm.vbeta = build_beach_solution(cfg.r, mu);
    // Match principal parts at a surface point where the denominator is not
    // close to a node.
    std::complex<double> best_num = 0.0, best_den = 0.0;
    for (int k = 0; k < 8; ++k) {
        const double x = cfg.L * (0.5 + 0.03 * k);
        const std::complex<double> num = beach_principal(qm.valpha, mode.sigma * x, 0.0);
        const std::complex<double> den =
            beach_principal(qm.vbeta, mode.sigma * (cfg.L - x), 0.0);
        if (std::abs(den) > std::abs(best_den)) {
            best_num = num;
            best_den = den;
        }
    }
    if (std::abs(best_den) < 1e-8)
        fail(ErrorCode::QUndefined, "make_quasimode: principal part vanishes at sample points");
    qm.Q = best_num / best_den;
    if (std::fabs(std::abs(qm.Q) - 1.0) > 1e-8)
        fail(ErrorCode::QUndefined, "make_quasimode: matching constant is not unimodular");
    return qm;
}

inline std::complex<double> quasimode_eval(const PrismConfig& cfg, const SurfaceQuasimode& qm,
                                           double x, double y) {
    if (!point_in_triangle(cfg, x, y))
        fail(ErrorCode::OutsideTriangle, "quasimode_eval: point outside the cross-section");
    const double s = qm.mode.sigma;
    return beach_value(qm.valpha, s * x, s * y) +
           qm.Q * beach_decaying(qm.vbeta, s * (cfg.L - x), s * y);
}

/// Gradient of the quasimode in physical coordinates.
inline std::array<std::complex<double>, 2> quasimode_gradient(const PrismConfig& cfg,
                                                              const SurfaceQuasimode& qm,
                                                              double x, double y) {
    if (!point_in_triangle(cfg, x, y))
        fail(ErrorCode::OutsideTriangle, "quasimode_gradient: point outside the cross-section");
    const double s = qm.mode.sigma;
    const auto ga = beach_gradient(qm.valpha, s * x, s * y);
    const auto gb = beach_decaying_gradient(qm.vbeta, s * (cfg.L - x), s * y);
    return {s * (ga[0] - qm.Q * gb[0]), s * (ga[1] + qm.Q * gb[1])};
}

struct DefectReport {
    double max_steklov = 0.0;  // max over surface samples of |d_nu g - sigma g|
    double max_wall = 0.0;     // max over wall samples of |d_nu g|
};

/// Samples the boundary defects of the quasimode.  The Steklov defect is zero
/// up to roundoff; the wall defect decays exponentially in sigma.
inline DefectReport quasimode_defects(const PrismConfig& cfg, const SurfaceQuasimode& qm,
                                      int samples = 100) {
    DefectReport report;
    const double s = qm.mode.sigma;
    const auto apex = triangle_apex(cfg);
    for (int i = 1; i < samples; ++i) {
        const double x = cfg.L * i / samples;
        const auto grad = quasimode_gradient(cfg, qm, x, 0.0);
        const std::complex<double> g = quasimode_eval(cfg, qm, x, 0.0);
        report.max_steklov = std::max(report.max_steklov, std::abs(grad[1] - s * g));
    }
    const double ca = std::cos(cfg.alpha()), sa = std::sin(cfg.alpha());
    const double cb = std::cos(cfg.beta()), sb = std::sin(cfg.beta());
    const double len_a = apex[0] / ca;
    const double len_b = (cfg.L - apex[0]) / cb;
    for (int i = 1; i < samples; ++i) {
        const double ta = len_a * i / samples;
        const auto grad_a = quasimode_gradient(cfg, qm, ta * ca, -ta * sa);
        report.max_wall =
            std::max(report.max_wall, std::abs(-sa * grad_a[0] - ca * grad_a[1]));
        const double tb = len_b * i / samples;
        const auto grad_b = quasimode_gradient(cfg, qm, cfg.L - tb * cb, -tb * sb);
        report.max_wall =
            std::max(report.max_wall, std::abs(sb * grad_b[0] - cb * grad_b[1]));
    }
    return report;
}

}  // namespace sloshing
