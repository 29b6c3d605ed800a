#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "sloshing/common.hpp"

namespace sloshing {

/// Window [r sigma/K, (r+1) sigma/K) of integers n, with harmonic h.
struct ExpSumSpec {
    double sigma = 0.0;
    int K = 2;
    int r = 0;
    int h = 1;
};

inline void validate_exp_sum_spec(const ExpSumSpec& spec) {
    if (!(spec.sigma > 0.0)) fail(ErrorCode::DomainError, "exp sum: sigma must be positive");
    if (spec.K < 2) fail(ErrorCode::DomainError, "exp sum: K must be >= 2");
    if (spec.r < 0 || spec.r > spec.K - 2)
        fail(ErrorCode::DomainError, "exp sum: need 0 <= r <= K-2");
    if (spec.h == 0) fail(ErrorCode::DomainError, "exp sum: h must be nonzero");
}

namespace detail {

/// frac-safe phase sqrt(sigma^2 - n^2) via the product form (sigma-n)(sigma+n).
inline double circle_height(double sigma, double n) {
    return std::sqrt((sigma - n) * (sigma + n));
}

inline std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v, std::size_t lo,
                                         std::size_t hi) {
    if (hi - lo == 0) return {0.0, 0.0};
    if (hi - lo == 1) return v[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace detail

/// (K/sigma) sum over integers n in the window of e(h sqrt(sigma^2 - n^2)),
/// with e(x) = exp(2 pi i x).  An empty window gives 0.
inline std::complex<double> exponential_sum(const ExpSumSpec& spec) {
    validate_exp_sum_spec(spec);
    const long n_lo = static_cast<long>(std::ceil(spec.r * spec.sigma / spec.K));
    const long n_hi = static_cast<long>(std::ceil((spec.r + 1) * spec.sigma / spec.K));
    std::vector<std::complex<double>> terms;
    terms.reserve(static_cast<std::size_t>(std::max(0L, n_hi - n_lo)));
    for (long n = n_lo; n < n_hi; ++n) {
        const double phase =
            2.0 * kPi * spec.h * detail::circle_height(spec.sigma, static_cast<double>(n));
        terms.emplace_back(std::cos(phase), std::sin(phase));
    }
    if (terms.empty()) return {0.0, 0.0};
    return spec.K / spec.sigma * detail::pairwise_sum(terms, 0, terms.size());
}

struct VdcReport {
    double sum_modulus = 0.0;  // raw (unnormalized) sum modulus
    double bound = 0.0;        // K^{3/2} |I| lambda^{1/2} + lambda^{-1/2}
    double c0 = 0.0;           // fitted constant sum_modulus/bound
};

/// Second-derivative test bound with lambda = |h|/sigma and |I| = sigma/K.
inline VdcReport vdcorput_bound_check(const ExpSumSpec& spec) {
    validate_exp_sum_spec(spec);
    VdcReport report;
    const double lambda = std::fabs(static_cast<double>(spec.h)) / spec.sigma;
    const double window = spec.sigma / spec.K;
    report.bound = std::pow(static_cast<double>(spec.K), 1.5) * window * std::sqrt(lambda) +
                   1.0 / std::sqrt(lambda);
    report.sum_modulus = std::abs(exponential_sum(spec)) * spec.sigma / spec.K;
    report.c0 = report.sum_modulus / report.bound;
    return report;
}

struct FractionalPartSample {
    double sigma = 0.0;
    std::vector<double> values;  // d_n = frac(sqrt(sigma^2 - n^2)) on the window
};

inline FractionalPartSample fractional_parts(double sigma, int K, int r) {
    validate_exp_sum_spec(ExpSumSpec{sigma, K, r, 1});
    FractionalPartSample sample;
    sample.sigma = sigma;
    const long n_lo = static_cast<long>(std::ceil(r * sigma / K));
    const long n_hi = static_cast<long>(std::ceil((r + 1) * sigma / K));
    for (long n = n_lo; n < n_hi; ++n) {
        const double height = detail::circle_height(sigma, static_cast<double>(n));
        sample.values.push_back(height - std::floor(height));
    }
    return sample;
}

struct EquidistReport {
    std::vector<long> histogram;
    double ks = 1.0;  // Kolmogorov-Smirnov distance to the uniform law on [0,1)
};

inline EquidistReport fractional_part_histogram(double sigma, int K, int r, int bins = 20) {
    if (bins < 1) fail(ErrorCode::DomainError, "fractional_part_histogram: bins must be >= 1");
    EquidistReport report;
    report.histogram.assign(static_cast<std::size_t>(bins), 0);
    std::vector<double> values = fractional_parts(sigma, K, r).values;
    if (values.empty()) return report;
    for (double v : values) {
        auto b = static_cast<std::size_t>(std::min<double>(bins - 1, v * bins));
        ++report.histogram[b];
    }
    std::sort(values.begin(), values.end());
    const double count = static_cast<double>(values.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        ks = std::max(ks, std::fabs((i + 1) / count - values[i]));
        ks = std::max(ks, std::fabs(values[i] - i / count));
    }
    report.ks = ks;
    return report;
}

}  // namespace sloshing
