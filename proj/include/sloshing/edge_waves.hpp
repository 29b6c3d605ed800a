#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "sloshing/common.hpp"
#include "sloshing/config.hpp"

namespace sloshing {

enum class Corner { alpha, beta, both };

inline std::string corner_name(Corner c) {
    switch (c) {
        case Corner::alpha: return "alpha";
        case Corner::beta: return "beta";
        case Corner::both: return "both";
    }
    return "?";
}

/// One Ursell edge-wave quasimode.  corner == both denotes the glued mode that
/// exists when q and r are both odd; it carries sigma = lambda_n.
struct EdgeMode {
    Corner corner = Corner::alpha;
    int n = 1;
    int m = 0;
    double sigma = 0.0;
    std::vector<double> coeffs;  // A_{1m}..A_{mm}; empty when m = 0
    int multiplicity = 1;
};

/// Coefficients A_{jm} = (-1)^j prod_{s=1}^{j} tan((m-s+1)a)/tan((m+s)a) with
/// a = pi/(2q).  Returns {A_{1m}, ..., A_{mm}}; the empty product for m = 0
/// gives an empty list.
inline std::vector<double> edge_coefficients(int q, int m) {
    if (q < 1) fail(ErrorCode::InvalidAngleInteger, "edge_coefficients: q must be >= 1");
    if (m < 0 || 2 * m > q - 1)
        fail(ErrorCode::IndexOutOfRange,
             "edge_coefficients: need 0 <= m <= (q-1)/2, got m = " + std::to_string(m));
    const double a = kPi / (2.0 * q);
    std::vector<double> coeffs;
    coeffs.reserve(static_cast<std::size_t>(m));
    double prod = 1.0;
    for (int s = 1; s <= m; ++s) {
        if (std::fabs(std::cos((m + s) * a)) < 1e-12)
            fail(ErrorCode::TangentPole, "edge_coefficients: tan((m+s)*alpha) at a pole");
        prod *= -std::tan((m - s + 1) * a) / std::tan((m + s) * a);
        coeffs.push_back(prod);
    }
    return coeffs;
}

inline double edge_sigma(const PrismConfig& cfg, Corner corner, int n, int m) {
    const double angle = (corner == Corner::beta) ? cfg.beta() : cfg.alpha();
    if (corner == Corner::both) return cfg.lambda(n);
    return cfg.lambda(n) * std::sin((2 * m + 1) * angle);
}

namespace detail {

inline void check_sector(double angle, double x, double y) {
    const double slack = 1e-9 * (1.0 + std::fabs(x));
    if (x < -slack || y > slack || y < -x * std::tan(angle) - slack)
        fail(ErrorCode::OutsideSector, "edge wave evaluated outside its angular sector");
}

struct ValueGrad {
    double v = 0.0;
    double dx = 0.0;
    double dy = 0.0;
};

/// Single-corner edge wave in sector-local coordinates (corner at the origin,
/// sloshing surface along y = 0, wall along theta = -angle).
inline ValueGrad edge_wave_local(double angle, double lambda, const std::vector<double>& coeffs,
                                 double x, double y) {
    check_sector(angle, x, y);
    ValueGrad out;
    auto add = [&](double amp, double cx, double cy) {
        // amp * exp(-lambda*(cx*x + cy*y))
        double e = amp * std::exp(-lambda * (cx * x + cy * y));
        out.v += e;
        out.dx += -lambda * cx * e;
        out.dy += -lambda * cy * e;
    };
    add(1.0, std::cos(angle), -std::sin(angle));
    for (std::size_t j = 1; j <= coeffs.size(); ++j) {
        double a = coeffs[j - 1];
        add(a, std::cos((2.0 * j - 1.0) * angle), std::sin((2.0 * j - 1.0) * angle));
        add(a, std::cos((2.0 * j + 1.0) * angle), -std::sin((2.0 * j + 1.0) * angle));
    }
    return out;
}

}  // namespace detail

/// Last coefficient A_{mm} (1 for m = 0, by the empty product).
inline double edge_last_coefficient(int q, int m) {
    if (m == 0) return 1.0;
    return edge_coefficients(q, m).back();
}

/// Evaluates an edge-wave quasimode at a point of the triangle Sigma.
/// Coordinates are global: corner alpha at (0,0), corner beta at (L,0).
inline double edge_wave_value(const PrismConfig& cfg, const EdgeMode& mode, double x, double y) {
    const double lambda = cfg.lambda(mode.n);
    if (mode.corner == Corner::alpha)
        return detail::edge_wave_local(cfg.alpha(), lambda, mode.coeffs, x, y).v;
    if (mode.corner == Corner::beta)
        return detail::edge_wave_local(cfg.beta(), lambda, mode.coeffs, cfg.L - x, y).v;
    // Glued corner-pair mode psi_n, q and r both odd.
    const int m = (cfg.q - 1) / 2;
    const int l = (cfg.r - 1) / 2;
    const double Amm = edge_last_coefficient(cfg.q, m);
    const double All = edge_last_coefficient(cfg.r, l);
    const auto va =
        detail::edge_wave_local(cfg.alpha(), lambda, edge_coefficients(cfg.q, m), x, y);
    const auto vb =
        detail::edge_wave_local(cfg.beta(), lambda, edge_coefficients(cfg.r, l), cfg.L - x, y);
    return All * va.v + Amm * vb.v - Amm * All * std::exp(lambda * y);
}

/// Gradient (d/dx, d/dy) in global coordinates.
inline std::array<double, 2> edge_wave_gradient(const PrismConfig& cfg, const EdgeMode& mode,
                                                double x, double y) {
    const double lambda = cfg.lambda(mode.n);
    if (mode.corner == Corner::alpha) {
        auto g = detail::edge_wave_local(cfg.alpha(), lambda, mode.coeffs, x, y);
        return {g.dx, g.dy};
    }
    if (mode.corner == Corner::beta) {
        auto g = detail::edge_wave_local(cfg.beta(), lambda, mode.coeffs, cfg.L - x, y);
        return {-g.dx, g.dy};
    }
    const int m = (cfg.q - 1) / 2;
    const int l = (cfg.r - 1) / 2;
    const double Amm = edge_last_coefficient(cfg.q, m);
    const double All = edge_last_coefficient(cfg.r, l);
    const auto va =
        detail::edge_wave_local(cfg.alpha(), lambda, edge_coefficients(cfg.q, m), x, y);
    const auto vb =
        detail::edge_wave_local(cfg.beta(), lambda, edge_coefficients(cfg.r, l), cfg.L - x, y);
    const double ec = Amm * All * std::exp(lambda * y);
    return {All * va.dx - Amm * vb.dx, All * va.dy + Amm * vb.dy - lambda * ec};
}

/// All edge quasi-eigenvalues below sigma_max, sorted ascending with a
/// deterministic tie-break (corner, n, m).  When the integer coincidence
/// (2m+1)r = (2l+1)q holds, the alpha- and beta-corner modes share their
/// quasi-eigenvalue exactly; the pair is recorded once with multiplicity 2.
inline std::vector<EdgeMode> enumerate_edge_quasi(const PrismConfig& cfg, double sigma_max) {
    if (!(sigma_max > 0.0)) fail(ErrorCode::DomainError, "enumerate_edge_quasi: sigma_max <= 0");
    std::vector<EdgeMode> modes;

    auto has_partner = [&](Corner corner, int m) {
        // Does the other corner carry a mode with the same sin((2m+1)angle)?
        const int q = (corner == Corner::alpha) ? cfg.q : cfg.r;
        const int r = (corner == Corner::alpha) ? cfg.r : cfg.q;
        const long lhs = static_cast<long>(2 * m + 1) * r;
        if (lhs % q != 0) return false;
        const long twol1 = lhs / q;
        if (twol1 % 2 == 0) return false;
        const long l = (twol1 - 1) / 2;
        return l >= 0 && l < r / 2;
    };

    for (Corner corner : {Corner::alpha, Corner::beta}) {
        const int q = (corner == Corner::alpha) ? cfg.q : cfg.r;
        for (int m = 0; m < q / 2; ++m) {
            const bool paired = has_partner(corner, m);
            if (paired && corner == Corner::beta) continue;  // recorded from the alpha side
            const auto coeffs = edge_coefficients(q, m);
            for (int n = 1;; ++n) {
                const double sigma = edge_sigma(cfg, corner, n, m);
                if (sigma >= sigma_max) break;
                modes.push_back(EdgeMode{corner, n, m, sigma, coeffs, paired ? 2 : 1});
            }
        }
    }
    if (cfg.nu() == 1) {
        for (int n = 1;; ++n) {
            const double sigma = cfg.lambda(n);
            if (sigma >= sigma_max) break;
            modes.push_back(EdgeMode{Corner::both, n, (cfg.q - 1) / 2, sigma, {}, 1});
        }
    }
    std::sort(modes.begin(), modes.end(), [](const EdgeMode& a, const EdgeMode& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        if (a.corner != b.corner) return static_cast<int>(a.corner) < static_cast<int>(b.corner);
        if (a.n != b.n) return a.n < b.n;
        return a.m < b.m;
    });
    return modes;
}

/// Leading term of the edge counting function:
/// nu*M*sigma/pi + sum_m M*sigma/(pi*sin((2m+1)alpha)) + sum_l ... (beta).
inline double edge_counting_asymptotic(const PrismConfig& cfg, double sigma) {
    if (!(sigma > 0.0)) fail(ErrorCode::DomainError, "edge_counting_asymptotic: sigma <= 0");
    double total = cfg.nu() * cfg.M * sigma / kPi;
    for (int m = 0; m < cfg.q / 2; ++m)
        total += cfg.M * sigma / (kPi * std::sin((2 * m + 1) * cfg.alpha()));
    for (int l = 0; l < cfg.r / 2; ++l)
        total += cfg.M * sigma / (kPi * std::sin((2 * l + 1) * cfg.beta()));
    return total;
}

}  // namespace sloshing
