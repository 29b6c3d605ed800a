#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "sloshing/common.hpp"
#include "sloshing/config.hpp"
#include "sloshing/edge_waves.hpp"
#include "sloshing/surface_waves.hpp"

namespace sloshing {

/// The ellipse E_sigma = {(x,y) : (x pi/(sigma L))^2 + (y pi/(sigma M))^2 < 1}.
struct EllipseSpec {
    double sigma = 1.0;
    double L = kPi;
    double M = kPi;
};

/// Positive x with (x pi/(sigma L))^2 + (n pi/(sigma M))^2 = 1.
inline double ellipse_row_bound(const EllipseSpec& spec, int n) {
    const double t = n * kPi / (spec.sigma * spec.M);
    if (t >= 1.0) return 0.0;
    return spec.sigma * spec.L / kPi * std::sqrt((1.0 - t) * (1.0 + t));
}

/// Exact count of (m, n) in N x N_0 strictly inside E_sigma.
inline long lattice_count(const EllipseSpec& spec) {
    if (!(spec.sigma > 0.0)) fail(ErrorCode::DomainError, "lattice_count: sigma <= 0");
    long total = 0;
    for (int n = 0; n * kPi < spec.sigma * spec.M; ++n) {
        const double a = n * kPi / (spec.sigma * spec.M);
        for (int m = 1;; ++m) {
            const double b = m * kPi / (spec.sigma * spec.L);
            if (!(a * a + b * b < 1.0)) break;
            ++total;
        }
    }
    return total;
}

/// Horizontal boundary-strip width f(t) = -kappa - (theta_alpha + theta_beta)/pi,
/// with t = n/sigma scaled so that t = mu.  Decreasing; f(1) = -kappa.
inline double perturbation_profile(const PrismConfig& cfg, double t) {
    if (!(t >= 0.0 && t <= 1.0))
        fail(ErrorCode::DomainError, "perturbation_profile: t must lie in [0, 1]");
    return -cfg.kappa() - (theta_phase(cfg.q, t) + theta_phase(cfg.r, t)) / kPi;
}

/// Integral over [0,1] of theta_alpha + theta_beta.  The integrand has a
/// square-root derivative singularity at t = 1, removed by t = sin u.
inline double theta_integral(const PrismConfig& cfg) {
    auto integrand = [&](double u) {
        const double t = std::min(1.0, std::sin(u));
        return (theta_phase(cfg.q, t) + theta_phase(cfg.r, t)) * std::cos(u);
    };
    return adaptive_simpson(integrand, 0.0, kPi / 2.0, 1e-13);
}

/// Integral over [0,1] of the strip width f.
inline double perturbation_profile_integral(const PrismConfig& cfg) {
    return -cfg.kappa() - theta_integral(cfg) / kPi;
}

/// Number of lattice points (m,n) inside E_sigma whose quantization root
/// sigma_{m,n} lies at or above sigma.  Only a band of width f(0) + 1 next to
/// the ellipse boundary can qualify, so only those points are root-solved.
inline long deficit_exact(const PrismConfig& cfg, double sigma) {
    if (!(sigma > 0.0)) fail(ErrorCode::DomainError, "deficit_exact: sigma <= 0");
    const EllipseSpec spec{sigma, cfg.L, cfg.M};
    const double band = std::max(0.0, perturbation_profile(cfg, 0.0)) + 1.0;
    long total = 0;
    for (int n = 0; n * kPi < sigma * cfg.M; ++n) {
        const double xn = ellipse_row_bound(spec, n);
        const int m_lo = std::max(1, static_cast<int>(std::ceil(xn - band)));
        for (int m = m_lo; m < xn; ++m) {
            if (solve_quasi(cfg, m, n).sigma >= sigma) ++total;
        }
    }
    return total;
}

/// Two-term asymptotic of the surface counting function:
/// LM sigma^2/(4 pi) + (L-M) sigma/(2 pi) + kappa M sigma/pi
/// + (M sigma/pi^2) * integral(theta_alpha + theta_beta).
inline double surface_counting_asymptotic(const PrismConfig& cfg, double sigma) {
    if (!(sigma > 0.0))
        fail(ErrorCode::DomainError, "surface_counting_asymptotic: sigma <= 0");
    return cfg.L * cfg.M * sigma * sigma / (4.0 * kPi) +
           (cfg.L - cfg.M) * sigma / (2.0 * kPi) + cfg.kappa() * cfg.M * sigma / kPi +
           cfg.M * sigma / (kPi * kPi) * theta_integral(cfg);
}

/// Conjectured limit of S(sigma) = (N(sigma) - LM sigma^2/(4 pi))/sigma:
/// the linear coefficients of the edge and surface asymptotics.
inline double s_limit(const PrismConfig& cfg) {
    return edge_counting_asymptotic(cfg, 1.0) + surface_counting_asymptotic(cfg, 1.0) -
           cfg.L * cfg.M / (4.0 * kPi);
}

struct CountReport {
    std::vector<double> sigma_grid;
    std::vector<long> exact_Ne;
    std::vector<long> exact_Ns;
    std::vector<long> exact_total;  // includes the sigma = 0 constant mode
    std::vector<double> asym_Ne;
    std::vector<double> asym_Ns;
    std::vector<long> deficit;
    std::vector<double> deficit_asym;  // sigma * integral of f
    std::vector<double> S_values;
    double s_limit = 0.0;
};

/// Exact and asymptotic counting series over an ascending sigma grid.
/// Deficits are solved only when requested; they dominate the runtime.
inline CountReport total_counts_and_S(const PrismConfig& cfg,
                                      const std::vector<double>& sigma_grid,
                                      bool with_deficit = false) {
    if (sigma_grid.empty() || !std::is_sorted(sigma_grid.begin(), sigma_grid.end()) ||
        !(sigma_grid.front() > 0.0))
        fail(ErrorCode::DomainError, "total_counts_and_S: need an ascending positive grid");
    CountReport report;
    report.sigma_grid = sigma_grid;
    const double sigma_max = sigma_grid.back();

    std::vector<double> edge_sigmas;
    for (const EdgeMode& mode : enumerate_edge_quasi(cfg, sigma_max))
        for (int k = 0; k < mode.multiplicity; ++k) edge_sigmas.push_back(mode.sigma);
    std::sort(edge_sigmas.begin(), edge_sigmas.end());

    std::vector<double> surface_sigmas;
    for (const SurfaceMode& mode : enumerate_surface_quasi(cfg, sigma_max))
        surface_sigmas.push_back(mode.sigma);

    const double fint = perturbation_profile_integral(cfg);
    for (double sigma : sigma_grid) {
        const long ne = static_cast<long>(
            std::lower_bound(edge_sigmas.begin(), edge_sigmas.end(), sigma) -
            edge_sigmas.begin());
        const long ns = static_cast<long>(
            std::lower_bound(surface_sigmas.begin(), surface_sigmas.end(), sigma) -
            surface_sigmas.begin());
        report.exact_Ne.push_back(ne);
        report.exact_Ns.push_back(ns);
        report.exact_total.push_back(ne + ns + 1);
        report.asym_Ne.push_back(edge_counting_asymptotic(cfg, sigma));
        report.asym_Ns.push_back(surface_counting_asymptotic(cfg, sigma));
        if (with_deficit) {
            report.deficit.push_back(deficit_exact(cfg, sigma));
            report.deficit_asym.push_back(sigma * fint);
        }
        report.S_values.push_back(
            (ne + ns + 1 - cfg.L * cfg.M * sigma * sigma / (4.0 * kPi)) / sigma);
    }
    report.s_limit = s_limit(cfg);
    return report;
}

}  // namespace sloshing
