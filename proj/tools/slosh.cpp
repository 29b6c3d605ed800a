// Single-binary CLI: computes merged quasi-eigenvalue spectra, counting
// reports, equidistribution experiments, FEM cross-validation, and the
// pi/4 exact-spectrum check.  Every command writes its data file(s) plus a
// JSON manifest; reruns with identical flags are byte-identical.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "sloshing/counting.hpp"
#include "sloshing/equidistribution.hpp"
#include "sloshing/fem.hpp"
#include "sloshing/io.hpp"
#include "sloshing/pi4.hpp"
#include "sloshing/spectrum.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using json = nlohmann::ordered_json;

// Round every float going into a report to the shared 9-significant-digit
// format so JSON and CSV artifacts agree and reruns diff clean.
json num(double value) { return json::parse(sloshing::format_number(value)); }

std::string manifest_path_for(const std::string& out) {
    return std::filesystem::path(out).replace_extension(".manifest.json").string();
}

void write_manifest(const std::string& command, const json& params,
                    const std::vector<std::string>& outputs, const std::string& path) {
    json manifest;
    manifest["command"] = command;
    manifest["parameters"] = params;
    manifest["version"] = kVersion;
    manifest["timestamp"] = sloshing::run_timestamp();
    manifest["outputs"] = outputs;
    sloshing::write_file(path, manifest.dump(2) + "\n");
}

struct PrismFlags {
    double L = sloshing::kPi;
    double M = sloshing::kPi;
    int q = 0;
    int r = 0;
    double sigma_max = 10.0;
    std::string out;
    std::string config_path;
};

// --h is a real flag (FEM mesh size, harmonic), so help is --help only.
void use_long_help(CLI::App* cmd) { cmd->set_help_flag("--help", "Print this help message"); }

void add_prism_flags(CLI::App* cmd, PrismFlags& flags, const std::string& default_out) {
    use_long_help(cmd);
    cmd->add_option("--q", flags.q, "Surface angle integer q (alpha = pi/2q)");
    cmd->add_option("--r", flags.r, "Surface angle integer r (beta = pi/2r)");
    cmd->add_option("--L", flags.L, "Sloshing side length")->capture_default_str();
    cmd->add_option("--M", flags.M, "Prism depth")->capture_default_str();
    cmd->add_option("--sigma-max,--sigma_max", flags.sigma_max, "Upper spectral cutoff")
        ->capture_default_str();
    flags.out = default_out;
    cmd->add_option("--out", flags.out, "Output file")->capture_default_str();
    cmd->add_option("--config", flags.config_path,
                    "Key-value configuration file (keys: L, M, q, r, sigma_max, out)");
}

// Flat key=value configuration; explicit command-line flags win over the file.
void apply_config_file(CLI::App* cmd, PrismFlags& flags) {
    if (flags.config_path.empty()) return;
    std::ifstream in(flags.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + flags.config_path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError(
                "--config", "line " + std::to_string(lineno) + " is not of the form key=value");
        auto trim = [](std::string s) {
            const std::size_t a = s.find_first_not_of(" \t");
            const std::size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            if (key == "q") {
                if (cmd->count("--q") == 0) flags.q = std::stoi(value);
            } else if (key == "r") {
                if (cmd->count("--r") == 0) flags.r = std::stoi(value);
            } else if (key == "L") {
                if (cmd->count("--L") == 0) flags.L = std::stod(value);
            } else if (key == "M") {
                if (cmd->count("--M") == 0) flags.M = std::stod(value);
            } else if (key == "sigma_max" || key == "sigma-max") {
                if (cmd->count("--sigma-max") == 0) flags.sigma_max = std::stod(value);
            } else if (key == "out") {
                if (cmd->count("--out") == 0) flags.out = value;
            } else {
                throw CLI::ValidationError("--config", "unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("--config", "cannot parse value for '" + key + "'");
        }
    }
}

void require_angles(const PrismFlags& flags) {
    if (flags.q <= 0) throw CLI::RequiredError("--q");
    if (flags.r <= 0) throw CLI::RequiredError("--r");
}

json prism_params(const PrismFlags& flags) {
    json params;
    params["q"] = flags.q;
    params["r"] = flags.r;
    params["L"] = num(flags.L);
    params["M"] = num(flags.M);
    params["sigma_max"] = num(flags.sigma_max);
    params["out"] = flags.out;
    return params;
}

int run_spectrum(const PrismFlags& flags, const std::string& kinds_csv, double h, double grading) {
    const sloshing::PrismConfig cfg =
        sloshing::validate_config(flags.L, flags.M, flags.q, flags.r);

    std::vector<std::string> kinds;
    {
        std::stringstream ss(kinds_csv);
        std::string item;
        while (std::getline(ss, item, ',')) kinds.push_back(item);
    }
    auto wants = [&kinds](const std::string& kind) {
        return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
    };
    for (const std::string& k : kinds)
        if (k != "edge" && k != "surface" && k != "pi4exact" && k != "fem")
            throw CLI::ValidationError("--kinds", "unknown kind '" + k + "'");

    std::vector<sloshing::SpectrumEntry> entries;
    if (wants("edge") || wants("surface")) {
        for (sloshing::SpectrumEntry e : sloshing::merged_quasi_spectrum(cfg, flags.sigma_max))
            if (e.kind == "constant" || wants(e.kind)) entries.push_back(std::move(e));
    }
    if (wants("pi4exact")) {
        for (const sloshing::Pi4Root& root :
             sloshing::pi4_spectrum(flags.L, flags.M, flags.sigma_max))
            entries.push_back({root.sigma, "pi4exact", sloshing::pi4_branch_name(root.branch),
                               root.m, root.n, 1, 0.0});
    }
    if (wants("fem")) {
        const sloshing::FemSpectrum fem =
            sloshing::compute_fem_spectrum(cfg, flags.sigma_max, h, grading);
        for (const auto& entry : fem.merged)
            entries.push_back({entry.sigma, "fem", "", entry.k, entry.n, 1, 0.0});
    }
    std::stable_sort(entries.begin(), entries.end(),
                     [](const sloshing::SpectrumEntry& a, const sloshing::SpectrumEntry& b) {
                         return a.sigma < b.sigma;
                     });

    const std::string manifest = manifest_path_for(flags.out);
    std::ostringstream csv;
    sloshing::write_spectrum_csv(csv, entries, manifest);
    sloshing::write_file(flags.out, csv.str());

    json params = prism_params(flags);
    params["kinds"] = kinds_csv;
    if (wants("fem")) {
        params["h"] = num(h);
        params["grading"] = num(grading);
    }
    write_manifest("spectrum", params, {flags.out}, manifest);
    std::cout << entries.size() << " rows -> " << flags.out << "\n";
    return 0;
}

int run_count(const PrismFlags& flags, int grid_points, bool with_deficit) {
    const sloshing::PrismConfig cfg =
        sloshing::validate_config(flags.L, flags.M, flags.q, flags.r);
    std::vector<double> grid;
    for (int i = 1; i <= grid_points; ++i)
        grid.push_back(flags.sigma_max * i / static_cast<double>(grid_points));
    const sloshing::CountReport report = sloshing::total_counts_and_S(cfg, grid, with_deficit);

    const std::string manifest = manifest_path_for(flags.out);
    const std::string plot_path =
        std::filesystem::path(flags.out).replace_extension("").string() + "_S.csv";

    json body;
    body["s_limit"] = num(report.s_limit);
    json rows = json::array();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        json row;
        row["sigma"] = num(report.sigma_grid[i]);
        row["exact_Ne"] = report.exact_Ne[i];
        row["exact_Ns"] = report.exact_Ns[i];
        row["exact_total"] = report.exact_total[i];
        row["asym_Ne"] = num(report.asym_Ne[i]);
        row["asym_Ns"] = num(report.asym_Ns[i]);
        if (with_deficit) {
            row["deficit"] = report.deficit[i];
            row["deficit_asym"] = num(report.deficit_asym[i]);
        }
        row["S"] = num(report.S_values[i]);
        rows.push_back(row);
    }
    body["rows"] = rows;
    sloshing::write_file(flags.out, body.dump(2) + "\n");

    std::ostringstream plot;
    plot << "sigma,S\n";
    for (std::size_t i = 0; i < grid.size(); ++i)
        plot << sloshing::format_number(report.sigma_grid[i]) << ","
             << sloshing::format_number(report.S_values[i]) << "\n";
    plot << "# manifest: " << manifest << "\n";
    sloshing::write_file(plot_path, plot.str());

    json params = prism_params(flags);
    params["grid_points"] = grid_points;
    params["with_deficit"] = with_deficit;
    write_manifest("count", params, {flags.out, plot_path}, manifest);
    std::cout << "s_limit = " << sloshing::format_number(report.s_limit) << " -> " << flags.out
              << "\n";
    return 0;
}

int run_equidist(double sigma, int K, int window, int h, const std::string& out) {
    const sloshing::ExpSumSpec spec{sigma, K, window, h};
    const std::complex<double> sum = sloshing::exponential_sum(spec);
    const sloshing::VdcReport vdc = sloshing::vdcorput_bound_check(spec);
    const sloshing::EquidistReport hist = sloshing::fractional_part_histogram(sigma, K, window);

    json body;
    body["sigma"] = num(sigma);
    body["K"] = K;
    body["r"] = window;
    body["h"] = h;
    body["sum_real"] = num(sum.real());
    body["sum_imag"] = num(sum.imag());
    body["sum_modulus"] = num(std::abs(sum));
    body["raw_sum_modulus"] = num(vdc.sum_modulus);
    body["vdcorput_bound"] = num(vdc.bound);
    body["c0"] = num(vdc.c0);
    body["ks"] = num(hist.ks);
    body["histogram"] = hist.histogram;
    sloshing::write_file(out, body.dump(2) + "\n");

    const std::string manifest = manifest_path_for(out);
    json params;
    params["sigma"] = num(sigma);
    params["K"] = K;
    params["r"] = window;
    params["h"] = h;
    params["out"] = out;
    write_manifest("equidist", params, {out}, manifest);
    std::cout << "sum_modulus = " << sloshing::format_number(std::abs(sum)) << " -> " << out
              << "\n";
    return 0;
}

int run_fem_validate(const PrismFlags& flags, double h, double grading) {
    const sloshing::PrismConfig cfg =
        sloshing::validate_config(flags.L, flags.M, flags.q, flags.r);
    const sloshing::FemSpectrum fem =
        sloshing::compute_fem_spectrum(cfg, flags.sigma_max, h, grading);
    std::vector<double> fem_sigmas;
    for (const auto& entry : fem.merged) fem_sigmas.push_back(entry.sigma);
    const std::vector<double> quasi =
        sloshing::flatten_sigmas(sloshing::merged_quasi_spectrum(cfg, flags.sigma_max));
    const sloshing::AlignmentReport report = sloshing::match_spectra(fem_sigmas, quasi);

    json body;
    body["h"] = num(h);
    body["grading"] = num(grading);
    body["offset"] = report.offset;
    body["stable"] = report.stable;
    body["median_gap"] = num(report.median_gap);
    body["first_matched"] = report.first_matched;
    json pairs = json::array();
    for (std::size_t j = 0; j < quasi.size(); ++j) {
        const long rj = static_cast<long>(j) + report.offset;
        if (rj < 0 || rj >= static_cast<long>(fem_sigmas.size())) continue;
        json pair;
        pair["quasi"] = num(quasi[j]);
        pair["fem"] = num(fem_sigmas[static_cast<std::size_t>(rj)]);
        pair["gap"] = num(std::fabs(quasi[j] - fem_sigmas[static_cast<std::size_t>(rj)]));
        pairs.push_back(pair);
    }
    body["pairs"] = pairs;
    sloshing::write_file(flags.out, body.dump(2) + "\n");

    const std::string manifest = manifest_path_for(flags.out);
    json params = prism_params(flags);
    params["h"] = num(h);
    params["grading"] = num(grading);
    write_manifest("fem-validate", params, {flags.out}, manifest);
    std::cout << "offset = " << report.offset << ", median_gap = "
              << sloshing::format_number(report.median_gap) << " -> " << flags.out << "\n";
    return 0;
}

int run_pi4_check(double L, double M, double sigma, const std::string& out) {
    const sloshing::Pi4CountingCheck check = sloshing::pi4_counting_check(L, M, sigma);
    json body;
    body["L"] = num(L);
    body["M"] = num(M);
    body["sigma"] = num(sigma);
    body["count"] = check.count;
    body["normalized"] = num(check.normalized);
    body["target"] = num(check.target);
    body["gap"] = num(std::fabs(check.normalized - check.target));
    sloshing::write_file(out, body.dump(2) + "\n");

    const std::string manifest = manifest_path_for(out);
    json params;
    params["L"] = num(L);
    params["M"] = num(M);
    params["sigma"] = num(sigma);
    params["out"] = out;
    write_manifest("pi4-check", params, {out}, manifest);
    std::cout << "normalized = " << sloshing::format_number(check.normalized) << " vs target "
              << sloshing::format_number(check.target) << " -> " << out << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sloshing quasi-eigenvalues for triangular prisms with surface angles "
                 "pi/2q and pi/2r.  Lengths L and M share one (arbitrary) unit."};
    app.require_subcommand(1);
    use_long_help(&app);

    PrismFlags spectrum_flags;
    std::string kinds = "edge,surface";
    double spectrum_h = sloshing::kPi / 100.0, spectrum_grading = 4.0;
    CLI::App* spectrum = app.add_subcommand("spectrum", "Merged quasi-eigenvalue spectrum CSV");
    add_prism_flags(spectrum, spectrum_flags, "spectrum.csv");
    spectrum->add_option("--kinds", kinds, "Comma list of edge,surface,pi4exact,fem")
        ->capture_default_str();
    spectrum->add_option("--h", spectrum_h, "FEM mesh size (kind fem)")->capture_default_str();
    spectrum->add_option("--grading", spectrum_grading, "FEM corner grading (kind fem)")
        ->capture_default_str();

    PrismFlags count_flags;
    int grid_points = 20;
    bool with_deficit = false;
    CLI::App* count = app.add_subcommand("count", "Counting-function report and S(sigma) plot data");
    add_prism_flags(count, count_flags, "count.json");
    count->add_option("--grid-points", grid_points, "Number of sigma grid points")
        ->capture_default_str();
    count->add_flag("--with-deficit", with_deficit, "Also solve the negative-perturbation deficit");

    double eq_sigma = 10000.0;
    int eq_K = 4, eq_r = 0, eq_h = 1;
    std::string eq_out = "equidist.json";
    CLI::App* equidist = app.add_subcommand("equidist", "Exponential-sum and equidistribution report");
    use_long_help(equidist);
    equidist->add_option("--sigma", eq_sigma, "Spectral parameter")->capture_default_str();
    equidist->add_option("--K", eq_K, "Number of windows (>= 2)")->capture_default_str();
    equidist->add_option("--r", eq_r, "Window index in [0, K-2]")->capture_default_str();
    equidist->add_option("--h", eq_h, "Nonzero harmonic")->capture_default_str();
    equidist->add_option("--out", eq_out, "Output file")->capture_default_str();

    PrismFlags fem_flags;
    double fem_h = sloshing::kPi / 100.0, fem_grading = 4.0;
    CLI::App* femv = app.add_subcommand("fem-validate", "Align FEM eigenvalues with the quasi list");
    add_prism_flags(femv, fem_flags, "fem_validate.json");
    femv->add_option("--h", fem_h, "FEM mesh size")->capture_default_str();
    femv->add_option("--grading", fem_grading, "FEM corner grading")->capture_default_str();

    double p4_L = sloshing::kPi, p4_M = sloshing::kPi, p4_sigma = 200.0;
    std::string p4_out = "pi4_check.json";
    CLI::App* p4 = app.add_subcommand("pi4-check", "Two-term counting check on the exact pi/4 spectrum");
    use_long_help(p4);
    p4->add_option("--L", p4_L, "Sloshing side length")->capture_default_str();
    p4->add_option("--M", p4_M, "Prism depth")->capture_default_str();
    p4->add_option("--sigma,--sigma-max,--sigma_max", p4_sigma, "Counting cutoff")
        ->capture_default_str();
    p4->add_option("--out", p4_out, "Output file")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (spectrum->parsed()) {
            apply_config_file(spectrum, spectrum_flags);
            require_angles(spectrum_flags);
            return run_spectrum(spectrum_flags, kinds, spectrum_h, spectrum_grading);
        }
        if (count->parsed()) {
            apply_config_file(count, count_flags);
            require_angles(count_flags);
            return run_count(count_flags, grid_points, with_deficit);
        }
        if (equidist->parsed()) return run_equidist(eq_sigma, eq_K, eq_r, eq_h, eq_out);
        if (femv->parsed()) {
            apply_config_file(femv, fem_flags);
            require_angles(fem_flags);
            return run_fem_validate(fem_flags, fem_h, fem_grading);
        }
        if (p4->parsed()) return run_pi4_check(p4_L, p4_M, p4_sigma, p4_out);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const sloshing::Error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
