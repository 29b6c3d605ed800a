#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sloshing {

inline constexpr double kPi = 3.14159265358979323846;

/// Error category used across the library.  The code identifies the exact
/// contract violation so callers (and the CLI) can map it to an exit status.
enum class ErrorCode {
    NonPositiveLength,
    InvalidAngleInteger,
    DegenerateBothHalfPi,
    NegativeIndex,
    IndexOutOfRange,
    TangentPole,
    OutsideSector,
    OutsideTriangle,
    DomainError,
    BelowCutoff,
    RootNotBracketed,
    QUndefined,
    DegenerateTriangle,
    SingularElement,
    FactorizationFailure,
    InsufficientModes,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

// ---------------------------------------------------------------------------
// Root finding

/// Bisection on [lo, hi] assuming f(lo) and f(hi) have opposite signs.
/// Throws RootNotBracketed otherwise.
inline double bisect(const std::function<double(double)>& f, double lo, double hi,
                     int iterations = 80) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        fail(ErrorCode::RootNotBracketed,
             "bisect: no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    for (int i = 0; i < iterations; ++i) {
        double mid = 0.5 * (lo + hi);
        double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// A few Newton steps from x0, falling back to x0 if an iterate leaves [lo, hi].
inline double newton_polish(const std::function<double(double)>& f,
                            const std::function<double(double)>& df, double x0, double lo,
                            double hi, int steps = 3) {
    double x = x0;
    for (int i = 0; i < steps; ++i) {
        double d = df(x);
        if (d == 0.0) break;
        double next = x - f(x) / d;
        if (!(next > lo && next < hi)) return x;
        x = next;
    }
    return x;
}

// ---------------------------------------------------------------------------
// Quadrature

namespace detail {
inline double adaptive_simpson_step(const std::function<double(double)>& f, double a, double b,
                                    double fa, double fm, double fb, double whole, double tol,
                                    int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = f(lm);
    double frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}
}  // namespace detail

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol = 1e-12, int max_depth = 40) {
    double fa = f(a);
    double fb = f(b);
    double fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::adaptive_simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

// ---------------------------------------------------------------------------
// Least squares

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
};

inline LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) fail(ErrorCode::DomainError, "fit_line: need matching samples");
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    double mx = sx / static_cast<double>(n);
    double my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r2 = (syy > 0.0) ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

}  // namespace sloshing
