#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "sloshing/common.hpp"
#include "sloshing/config.hpp"

namespace sloshing {

/// One term amp * g_{a,b} with
/// g_{a,b}(x,y) = exp(x cos a + y sin a) * exp(i sqrt(1-mu^2)(x cos b + y sin b)).
struct BeachTerm {
    double a = 0.0;
    double b = 0.0;
    std::complex<double> amp{1.0, 0.0};
};

/// Sloping-beach surface-wave solution on the sector of angle pi/(2q):
/// 2q terms produced by alternately applying the reflection operators to
/// f0 = g_{pi/2, pi}.  The last amplitude is the reflection coefficient gamma.
struct BeachSolution {
    int q = 2;
    double mu = 0.0;
    std::vector<BeachTerm> terms;
    std::complex<double> gamma{1.0, 0.0};
};

namespace detail {

inline std::complex<double> reflection_factor(double a, double b, double mu) {
    const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    const std::complex<double> z(std::sin(a), s * std::sin(b));
    return (z - 1.0) / (z + 1.0);
}

}  // namespace detail

/// Builds the 2q-term solution for sector integer q and mu = lambda_n/sigma.
inline BeachSolution build_beach_solution(int q, double mu) {
    if (q < 1) fail(ErrorCode::InvalidAngleInteger, "build_beach_solution: q must be >= 1");
    if (!(mu >= 0.0 && mu <= 1.0))
        fail(ErrorCode::DomainError, "build_beach_solution: mu must lie in [0, 1]");
    const double xi = -kPi / q;
    BeachSolution sol;
    sol.q = q;
    sol.mu = mu;
    sol.terms.reserve(static_cast<std::size_t>(2 * q));
    sol.terms.push_back(BeachTerm{kPi / 2.0, kPi, {1.0, 0.0}});
    for (int m = 1; m < 2 * q; ++m) {
        const BeachTerm& prev = sol.terms.back();
        BeachTerm next;
        if (m % 2 == 1) {
            next = BeachTerm{-prev.a + xi, -prev.b + xi, prev.amp};
        } else {
            next = BeachTerm{-prev.a, -prev.b,
                             prev.amp * detail::reflection_factor(prev.a, prev.b, mu)};
        }
        sol.terms.push_back(next);
    }
    sol.gamma = sol.terms.back().amp;
    return sol;
}

/// Closed form gamma = (-1)^{q-1} exp[2i sum_j arctan(sqrt(1-mu^2) sin(j pi/q)
/// / (cos(j pi/q) - 1))].
inline std::complex<double> gamma_closed_form(int q, double mu) {
    if (q < 1) fail(ErrorCode::InvalidAngleInteger, "gamma_closed_form: q must be >= 1");
    if (!(mu >= 0.0 && mu <= 1.0))
        fail(ErrorCode::DomainError, "gamma_closed_form: mu must lie in [0, 1]");
    const double s = std::sqrt(std::max(0.0, 1.0 - mu * mu));
    double phase = 0.0;
    for (int j = 1; j < q; ++j)
        phase += std::atan(s * std::sin(j * kPi / q) / (std::cos(j * kPi / q) - 1.0));
    std::complex<double> g = std::polar(1.0, 2.0 * phase);
    return (q % 2 == 0) ? -g : g;
}

namespace detail {

inline void check_beach_sector(int q, double x, double y) {
    const double angle = kPi / (2.0 * q);
    const double slack = 1e-9 * (1.0 + std::fabs(x));
    if (x < -slack || y > slack || y < -x * std::tan(angle) - slack)
        fail(ErrorCode::OutsideSector, "beach solution evaluated outside its sector");
}

inline std::complex<double> term_value(const BeachTerm& t, double s, double x, double y) {
    const std::complex<double> ex(x * std::cos(t.a) + y * std::sin(t.a),
                                  s * (x * std::cos(t.b) + y * std::sin(t.b)));
    return t.amp * std::exp(ex);
}

}  // namespace detail

/// Full solution value; the coordinates live in the unit-eigenvalue scaling
/// (multiply physical coordinates by sigma before calling).
inline std::complex<double> beach_value(const BeachSolution& sol, double x, double y) {
    detail::check_beach_sector(sol.q, x, y);
    const double s = std::sqrt(std::max(0.0, 1.0 - sol.mu * sol.mu));
    std::complex<double> total = 0.0;
    for (const BeachTerm& t : sol.terms) total += detail::term_value(t, s, x, y);
    return total;
}

/// Principal part: e^y e^{-i sqrt(1-mu^2) x} + gamma e^y e^{+i sqrt(1-mu^2) x}.
inline std::complex<double> beach_principal(const BeachSolution& sol, double x, double y) {
    const double s = std::sqrt(std::max(0.0, 1.0 - sol.mu * sol.mu));
    const std::complex<double> osc(0.0, s * x);
    return std::exp(y) * (std::exp(-osc) + sol.gamma * std::exp(osc));
}

/// Decaying remainder: the 2q - 2 middle terms.  Identically zero for q = 1.
inline std::complex<double> beach_decaying(const BeachSolution& sol, double x, double y) {
    detail::check_beach_sector(sol.q, x, y);
    const double s = std::sqrt(std::max(0.0, 1.0 - sol.mu * sol.mu));
    std::complex<double> total = 0.0;
    for (std::size_t m = 1; m + 1 < sol.terms.size(); ++m)
        total += detail::term_value(sol.terms[m], s, x, y);
    return total;
}

/// Gradient of the full solution (d/dx, d/dy), same scaling as beach_value.
inline std::array<std::complex<double>, 2> beach_gradient(const BeachSolution& sol, double x,
                                                          double y) {
    detail::check_beach_sector(sol.q, x, y);
    const double s = std::sqrt(std::max(0.0, 1.0 - sol.mu * sol.mu));
    std::array<std::complex<double>, 2> grad{std::complex<double>{0.0, 0.0},
                                             std::complex<double>{0.0, 0.0}};
    for (const BeachTerm& t : sol.terms) {
        const std::complex<double> v = detail::term_value(t, s, x, y);
        grad[0] += v * std::complex<double>(std::cos(t.a), s * std::cos(t.b));
        grad[1] += v * std::complex<double>(std::sin(t.a), s * std::sin(t.b));
    }
    return grad;
}

/// Gradient of the decaying part only.
inline std::array<std::complex<double>, 2> beach_decaying_gradient(const BeachSolution& sol,
                                                                   double x, double y) {
    detail::check_beach_sector(sol.q, x, y);
    const double s = std::sqrt(std::max(0.0, 1.0 - sol.mu * sol.mu));
    std::array<std::complex<double>, 2> grad{std::complex<double>{0.0, 0.0},
                                             std::complex<double>{0.0, 0.0}};
    for (std::size_t m = 1; m + 1 < sol.terms.size(); ++m) {
        const BeachTerm& t = sol.terms[m];
        const std::complex<double> v = detail::term_value(t, s, x, y);
        grad[0] += v * std::complex<double>(std::cos(t.a), s * std::cos(t.b));
        grad[1] += v * std::complex<double>(std::sin(t.a), s * std::sin(t.b));
    }
    return grad;
}

/// Steklov defect (d/dy - 1) of the full solution at a surface point (x, 0).
/// Zero in exact arithmetic.
inline std::complex<double> beach_steklov_defect(const BeachSolution& sol, double x) {
    return beach_gradient(sol, x, 0.0)[1] - beach_value(sol, x, 0.0);
}

/// Phase theta(t) = -sum_{j=1}^{q-1} arctan(sqrt(1-t^2) sin(j pi/q)
/// / (1 - cos(j pi/q))); equals arg of the reflection coefficient up to a
/// constant.  Increasing in t, theta(1) = 0, theta(0) = -(q-1) pi/4.
inline double theta_phase(int q, double t) {
    if (q < 1) fail(ErrorCode::InvalidAngleInteger, "theta_phase: q must be >= 1");
    if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::DomainError, "theta_phase: t must lie in [0, 1]");
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    double total = 0.0;
    for (int j = 1; j < q; ++j)
        total -= std::atan(s * std::sin(j * kPi / q) / (1.0 - std::cos(j * kPi / q)));
    return total;
}

/// d theta / dt.  Diverges like (1-t)^{-1/2} at t = 1; callers must stay inside.
inline double theta_phase_deriv(int q, double t) {
    if (q < 1) fail(ErrorCode::InvalidAngleInteger, "theta_phase_deriv: q must be >= 1");
    if (!(t >= 0.0 && t < 1.0))
        fail(ErrorCode::DomainError, "theta_phase_deriv: t must lie in [0, 1)");
    const double s2 = 1.0 - t * t;
    const double s = std::sqrt(s2);
    double total = 0.0;
    for (int j = 1; j < q; ++j) {
        const double aj = std::sin(j * kPi / q) / (1.0 - std::cos(j * kPi / q));
        total += aj * t / (s * (1.0 + aj * aj * s2));
    }
    return total;
}

}  // namespace sloshing
