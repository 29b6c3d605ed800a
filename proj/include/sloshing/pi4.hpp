#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sloshing/common.hpp"
#include "sloshing/config.hpp"

namespace sloshing {

/// Separated eigenfunction families for the prism with both surface angles
/// pi/4 (reflected cuboid).  The oscillatory families carry a transcendental
/// parameter chi; the corner families are closed forms in n alone.
enum class Pi4Branch { CoshCosh, SinhSinh, CosCosh, SinSinh, XY };

inline std::string pi4_branch_name(Pi4Branch b) {
    switch (b) {
        case Pi4Branch::CoshCosh: return "coshcosh";
        case Pi4Branch::SinhSinh: return "sinhsinh";
        case Pi4Branch::CosCosh: return "coscosh";
        case Pi4Branch::SinSinh: return "sinsinh";
        case Pi4Branch::XY: return "xy";
    }
    return "?";
}

struct Pi4Root {
    Pi4Branch branch = Pi4Branch::CoshCosh;
    int n = 0;
    int m = 0;
    double chi = 0.0;  // oscillatory branches only
    double sigma = 0.0;
};

namespace detail {

inline double coth(double x) { return 1.0 / std::tanh(x); }

}  // namespace detail

/// Closed-form corner families plus the single xy eigenfunction:
///   CoshCosh (n >= 0): sigma = (lambda_n/sqrt2) tanh(lambda_n L/(2 sqrt2)),
///   SinhSinh (n >= 1): same with coth,
///   XY: sigma = 2/L once.
/// The n = 0 CoshCosh entry is the constant mode sigma = 0.
inline std::vector<Pi4Root> pi4_corner_branches(double L, double M, double sigma_max) {
    if (!(L > 0.0 && M > 0.0 && sigma_max > 0.0))
        fail(ErrorCode::DomainError, "pi4_corner_branches: need positive L, M, sigma_max");
    std::vector<Pi4Root> roots;
    const double s2 = std::sqrt(2.0);
    for (int n = 0;; ++n) {
        const double lambda = n * kPi / M;
        const double sigma = (n == 0) ? 0.0 : lambda / s2 * std::tanh(lambda * L / (2.0 * s2));
        if (sigma >= sigma_max) break;
        roots.push_back(Pi4Root{Pi4Branch::CoshCosh, n, 0, 0.0, sigma});
    }
    for (int n = 1;; ++n) {
        const double lambda = n * kPi / M;
        const double sigma = lambda / s2 * detail::coth(lambda * L / (2.0 * s2));
        if (sigma >= sigma_max) break;
        roots.push_back(Pi4Root{Pi4Branch::SinhSinh, n, 0, 0.0, sigma});
    }
    if (2.0 / L < sigma_max) roots.push_back(Pi4Root{Pi4Branch::XY, 0, 0, 0.0, 2.0 / L});
    return roots;
}

namespace detail {

/// chi L/pi + (2/pi) arctan[sqrt(1 + (lambda/chi)^2) tanh_or_coth(...)] - k.
inline double pi4_secular(double L, double lambda, bool use_coth, int k, double chi) {
    const double rho = std::sqrt(chi * chi + lambda * lambda);
    const double h = use_coth ? coth(rho * L / 2.0) : std::tanh(rho * L / 2.0);
    return chi * L / kPi + 2.0 / kPi * std::atan(std::sqrt(1.0 + (lambda / chi) * (lambda / chi)) * h) -
           k;
}

inline double pi4_sigma_from_chi(double L, double lambda, bool use_coth, double chi) {
    const double rho = std::sqrt(chi * chi + lambda * lambda);
    return use_coth ? rho * coth(rho * L / 2.0) : rho * std::tanh(rho * L / 2.0);
}

}  // namespace detail

/// Oscillatory families: for each n, the roots chi of the secular equations.
/// CosCosh uses the tanh form with target 2m, m >= 1 (m = 0 has no root);
/// SinSinh uses the coth form with target 2m+1, m >= 0.  The m = 0 SinSinh
/// bracket may contain no root for small L; it is then skipped.
inline std::vector<Pi4Root> pi4_oscillatory_roots(double L, double M, double sigma_max) {
    if (!(L > 0.0 && M > 0.0 && sigma_max > 0.0))
        fail(ErrorCode::DomainError, "pi4_oscillatory_roots: need positive L, M, sigma_max");
    std::vector<Pi4Root> roots;
    for (int pass = 0; pass < 2; ++pass) {
        const bool use_coth = (pass == 1);
        const Pi4Branch branch = use_coth ? Pi4Branch::SinSinh : Pi4Branch::CosCosh;
        for (int n = 0; n * kPi / M < sigma_max; ++n) {
            const double lambda = n * kPi / M;
            for (int m = use_coth ? 0 : 1;; ++m) {
                // The coth equation at m = n = 0 degenerates at chi = 0 into
                // the xy eigenvalue 2/L, which is listed separately.
                if (use_coth && m == 0 && n == 0) continue;
                const int k = use_coth ? 2 * m + 1 : 2 * m;
                const double lo = std::max((k - 1) * kPi / L, 0.0);
                const double hi = k * kPi / L;
                auto g = [&](double chi) {
                    return detail::pi4_secular(L, lambda, use_coth, k, chi);
                };
                // Inset the endpoints; sample for a sign change since the
                // lowest bracket can be rootless.
                const double width = hi - lo;
                const double a = lo + std::max(width * 1e-12, hi * 1e-12);
                const double b = hi - width * 1e-12;
                double ga = g(a);
                bool found = false;
                double chi = 0.0;
                const int samples = 64;
                for (int i = 1; i <= samples; ++i) {
                    const double c = a + (b - a) * i / samples;
                    const double gc = g(c);
                    if (ga == 0.0 || (ga > 0.0) != (gc > 0.0)) {
                        chi = bisect(g, a + (b - a) * (i - 1) / samples, c);
                        found = true;
                        break;
                    }
                    ga = gc;
                }
                if (found) {
                    const double sigma = detail::pi4_sigma_from_chi(L, lambda, use_coth, chi);
                    if (sigma >= sigma_max) break;  // sigma increases with m
                    roots.push_back(Pi4Root{branch, n, m, chi, sigma});
                } else if (detail::pi4_sigma_from_chi(L, lambda, use_coth, hi) >= sigma_max) {
                    // Only the lowest bracket can be empty; later targets have
                    // a guaranteed sign change.
                    break;
                }
            }
        }
    }
    return roots;
}

/// All pi/4 eigenvalues below sigma_max, sorted ascending (the constant mode
/// sigma = 0 appears once, from CoshCosh n = 0).
inline std::vector<Pi4Root> pi4_spectrum(double L, double M, double sigma_max) {
    std::vector<Pi4Root> roots = pi4_corner_branches(L, M, sigma_max);
    std::vector<Pi4Root> osc = pi4_oscillatory_roots(L, M, sigma_max);
    roots.insert(roots.end(), osc.begin(), osc.end());
    std::sort(roots.begin(), roots.end(), [](const Pi4Root& a, const Pi4Root& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        if (a.branch != b.branch) return static_cast<int>(a.branch) < static_cast<int>(b.branch);
        if (a.n != b.n) return a.n < b.n;
        return a.m < b.m;
    });
    return roots;
}

struct Pi4CountingCheck {
    long count = 0;
    double normalized = 0.0;  // (N(sigma) - LM sigma^2/(4 pi))/sigma
    double target = 0.0;      // (L + M(2 sqrt2 + 1))/(2 pi)
};

inline Pi4CountingCheck pi4_counting_check(double L, double M, double sigma) {
    if (!(sigma >= 20.0)) fail(ErrorCode::DomainError, "pi4_counting_check: sigma must be >= 20");
    Pi4CountingCheck check;
    check.count = static_cast<long>(pi4_spectrum(L, M, sigma).size());
    check.normalized = (check.count - L * M * sigma * sigma / (4.0 * kPi)) / sigma;
    check.target = (L + M * (2.0 * std::sqrt(2.0) + 1.0)) / (2.0 * kPi);
    return check;
}

/// Eigenvalues sigma = mu tanh(mu R) of the cuboid with sloshing top of sides
/// L, M and depth R, with mu^2 = (m pi/L)^2 + (n pi/M)^2 over m, n >= 0.
inline std::vector<double> cuboid_reference(double L, double M, double R, double sigma_max) {
    if (!(L > 0.0 && M > 0.0 && R > 0.0 && sigma_max > 0.0))
        fail(ErrorCode::DomainError, "cuboid_reference: need positive L, M, R, sigma_max");
    std::vector<double> sigmas;
    for (int m = 0;; ++m) {
        for (int n = 0;; ++n) {
            const double mu = std::hypot(m * kPi / L, n * kPi / M);
            const double sigma = mu * std::tanh(mu * R);
            if (sigma >= sigma_max) {
                if (n == 0 && m > 0) {
                    std::sort(sigmas.begin(), sigmas.end());
                    return sigmas;
                }
                break;
            }
            sigmas.push_back(sigma);
        }
    }
}

}  // namespace sloshing
