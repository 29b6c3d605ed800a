#pragma once

#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <string>
#include <vector>

#include "sloshing/common.hpp"
#include "sloshing/spectrum.hpp"

namespace sloshing {

/// Fixed 9-significant-digit formatting so reruns are byte-identical.
inline std::string format_number(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", value);
    return buffer;
}

/// UTC timestamp; honors SOURCE_DATE_EPOCH for reproducible output.
inline std::string run_timestamp() {
    std::time_t t = std::time(nullptr);
    if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"))
        t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
    char buffer[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

inline void write_spectrum_csv(std::ostream& out, const std::vector<SpectrumEntry>& entries,
                               const std::string& manifest_path) {
    out << "sigma,kind,corner,m,n,multiplicity,residual\n";
    for (const SpectrumEntry& e : entries) {
        out << format_number(e.sigma) << "," << e.kind << "," << e.corner << "," << e.m << ","
            << e.n << "," << e.multiplicity << "," << format_number(e.residual) << "\n";
    }
    out << "# manifest: " << manifest_path << "\n";
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::DomainError, "cannot open output file " + path);
    out << contents;
}

}  // namespace sloshing
