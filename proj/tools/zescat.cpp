// zescat: zero-energy phase shifts and S(0) eigenvalues for -Laplacian - alpha |x|^(-mu).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zescat/cli.hpp"

namespace {

struct Flags {
    std::vector<int> dims;
    std::vector<double> mus;
    std::vector<double> alphas;
    std::optional<int> l_max;
    std::optional<bool> numeric;
    std::optional<double> tol_phase;
    std::optional<double> tol_amplitude;
    std::optional<double> tol_identity;
    std::optional<double> rtol;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::string> config;
    bool degrees = false;
};

void add_flags(CLI::App& sub, Flags& f) {
    sub.add_option("-d,--dim", f.dims, "Dimension(s) d >= 2, comma separated")->delimiter(',');
    sub.add_option("--mu", f.mus, "Exponent(s) 0 < mu < 2, comma separated")->delimiter(',');
    sub.add_option("--alpha", f.alphas, "Coupling(s) alpha > 0, comma separated")->delimiter(',');
    sub.add_option("--lmax", f.l_max, "Largest angular momentum l");
    sub.add_flag("--numeric,!--no-numeric", f.numeric, "Run the numerical ODE pipeline");
    sub.add_option("--tol-phase", f.tol_phase, "Phase tolerance in radians");
    sub.add_option("--tol-amplitude", f.tol_amplitude, "Relative amplitude tolerance");
    sub.add_option("--tol-identity", f.tol_identity, "Tolerance on the eigenvalue identity");
    sub.add_option("--rtol", f.rtol, "Integrator relative tolerance");
    sub.add_option("--format", f.format, "Output format: json, csv or human");
    sub.add_option("--out", f.out, "Write output to PATH instead of stdout");
    sub.add_option("--config", f.config, "Key-value config file applied before flags");
    sub.add_flag("--degrees", f.degrees, "Print angles in degrees (human format only)");
}

zescat::cli::RunConfig resolve(zescat::cli::Command cmd, const Flags& f) {
    using namespace zescat::cli;
    RunConfig cfg = default_config(cmd);
    if (f.config) apply_config_file(cfg, *f.config);
    if (!f.dims.empty()) cfg.dims = f.dims;
    if (!f.mus.empty()) cfg.mus = f.mus;
    if (!f.alphas.empty()) cfg.alphas = f.alphas;
    if (f.l_max) cfg.l_max = *f.l_max;
    if (f.numeric) cfg.numeric = *f.numeric;
    if (f.tol_phase) cfg.tol_phase = *f.tol_phase;
    if (f.tol_amplitude) cfg.tol_amplitude = *f.tol_amplitude;
    if (f.tol_identity) cfg.tol_identity = *f.tol_identity;
    if (f.rtol) cfg.rtol = *f.rtol;
    if (f.format) cfg.format = parse_format(*f.format);
    if (f.out) cfg.out_path = *f.out;
    if (f.degrees) cfg.degrees = true;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    using zescat::cli::Command;
    CLI::App app{"Zero-energy scattering for -Laplacian - alpha |x|^(-mu)"};
    app.require_subcommand(1);

    Flags flags;
    std::optional<Command> chosen;
    const std::pair<const char*, Command> commands[] = {
        {"phase-table", Command::phase_table},
        {"verify", Command::verify},
        {"eigenvalues", Command::eigenvalues},
    };
    const char* help[] = {
        "Closed-form (and optionally numeric) phase D_l and amplitude C_l per channel",
        "Check the eigenvalue identity and the closed form against the ODE pipeline",
        "S(0) eigenvalue per angular momentum",
    };
    for (std::size_t i = 0; i < 3; ++i) {
        auto* sub = app.add_subcommand(commands[i].first, help[i]);
        add_flags(*sub, flags);
        sub->callback([&chosen, cmd = commands[i].second] { chosen = cmd; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return zescat::cli::exit_invalid_input;
    }

    try {
        const auto cfg = resolve(*chosen, flags);
        return zescat::cli::run_to_destination(*chosen, cfg, std::cerr);
    } catch (const zescat::cli::ConfigError& e) {
        std::cerr << "zescat: " << e.what() << '\n';
        return zescat::cli::exit_invalid_input;
    }
}
