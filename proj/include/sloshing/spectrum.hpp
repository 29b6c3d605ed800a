#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "sloshing/config.hpp"
#include "sloshing/edge_waves.hpp"
#include "sloshing/surface_waves.hpp"

namespace sloshing {

/// One row of a merged spectrum: the constant mode, an edge or surface
/// quasi-eigenvalue, or (from other producers) an exact or FEM eigenvalue.
struct SpectrumEntry {
    double sigma = 0.0;
    std::string kind;    // constant, edge, surface, pi4exact, fem
    std::string corner;  // edge rows only
    int m = 0;
    int n = 0;
    int multiplicity = 1;
    double residual = 0.0;  // surface rows only
};

/// The full quasi-eigenvalue list below sigma_max: the constant mode at 0,
/// all edge modes (paired coincidences carried as multiplicity 2), and all
/// surface modes including the negative-branch roots.
inline std::vector<SpectrumEntry> merged_quasi_spectrum(const PrismConfig& cfg,
                                                        double sigma_max) {
    std::vector<SpectrumEntry> entries;
    entries.push_back(SpectrumEntry{0.0, "constant", "", 0, 0, 1, 0.0});
    for (const EdgeMode& mode : enumerate_edge_quasi(cfg, sigma_max))
        entries.push_back(SpectrumEntry{mode.sigma, "edge", corner_name(mode.corner), mode.m,
                                        mode.n, mode.multiplicity, 0.0});
    for (const SurfaceMode& mode : enumerate_surface_quasi(cfg, sigma_max))
        entries.push_back(
            SpectrumEntry{mode.sigma, "surface", "", mode.m, mode.n, 1, mode.residual});
    std::sort(entries.begin(), entries.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.sigma != b.sigma) return a.sigma < b.sigma;
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.n != b.n) return a.n < b.n;
        return a.m < b.m;
    });
    return entries;
}

/// Ascending sigma list with multiplicities expanded.
inline std::vector<double> flatten_sigmas(const std::vector<SpectrumEntry>& entries) {
    std::vector<double> sigmas;
    for (const SpectrumEntry& e : entries)
        for (int k = 0; k < e.multiplicity; ++k) sigmas.push_back(e.sigma);
    std::sort(sigmas.begin(), sigmas.end());
    return sigmas;
}

}  // namespace sloshing
