#pragma once

#include <array>
#include <cmath>
#include <string>

#include "sloshing/common.hpp"

namespace sloshing {

/// Geometry of the triangular prism.  The sloshing side has length L, the
/// prism depth is M, and the two angles at the sloshing surface are
/// alpha = pi/(2q) at x = 0 and beta = pi/(2r) at x = L.  The integers q and r
/// are the canonical representation of the angles; alpha and beta are always
/// recomputed from them.
struct PrismConfig {
    double L = kPi;
    double M = kPi;
    int q = 2;
    int r = 2;

    double alpha() const { return kPi / (2.0 * q); }
    double beta() const { return kPi / (2.0 * r); }

    /// 0 when q and r share parity, 1/2 otherwise.
    double kappa() const { return (q % 2 == r % 2) ? 0.0 : 0.5; }

    /// 1 when q*r is odd, 0 otherwise.
    int nu() const { return (q % 2 == 1 && r % 2 == 1) ? 1 : 0; }

    /// Transverse wavenumber lambda_n = n*pi/M.
    double lambda(int n) const {
        if (n < 0) fail(ErrorCode::NegativeIndex, "lambda: mode index must be >= 0");
        return n * kPi / M;
    }
};

inline PrismConfig validate_config(double L, double M, int q, int r) {
    if (!(L > 0.0) || !(M > 0.0))
        fail(ErrorCode::NonPositiveLength, "prism lengths L and M must be positive");
    if (q < 1 || r < 1)
        fail(ErrorCode::InvalidAngleInteger, "angle integers q and r must be >= 1");
    if (q == 1 && r == 1)
        fail(ErrorCode::DegenerateBothHalfPi,
             "q = r = 1 gives two right angles and no triangular prism");
    return PrismConfig{L, M, q, r};
}

inline double mode_wavenumber(const PrismConfig& cfg, int n) { return cfg.lambda(n); }

/// Apex of the cross-section triangle: the walls y = -x tan(alpha) and
/// y = -(L-x) tan(beta) meet below the sloshing surface.
inline std::array<double, 2> triangle_apex(const PrismConfig& cfg) {
    const double ta = std::tan(cfg.alpha());
    const double tb = std::tan(cfg.beta());
    const double x = cfg.L * tb / (ta + tb);
    return {x, -x * ta};
}

inline bool point_in_triangle(const PrismConfig& cfg, double x, double y, double slack = 1e-9) {
    const double s = slack * (1.0 + cfg.L);
    return y <= s && y >= -x * std::tan(cfg.alpha()) - s &&
           y >= -(cfg.L - x) * std::tan(cfg.beta()) - s;
}

}  // namespace sloshing
