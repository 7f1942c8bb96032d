#pragma once

// Command implementations behind the zescat executable. Kept out of main() so
// the exit-code and output contracts can be tested in-process.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "zescat/sweep.hpp"

namespace zescat::cli {

enum class Command { phase_table, verify, eigenvalues };
enum class OutputFormat { json, csv, human };

// Exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_tolerance_failure = 1;
inline constexpr int exit_invalid_input = 2;

struct RunConfig {
    std::vector<int> dims{3};
    std::vector<double> mus{1.0};
    std::vector<double> alphas{1.0};
    int l_max = 10;
    bool numeric = false;
    double tol_phase = 1e-4;
    double tol_amplitude = 1e-4;
    double tol_identity = 1e-12;
    double rtol = 1e-12;
    OutputFormat format = OutputFormat::human;
    std::string out_path;  // empty: standard output
    bool degrees = false;  // human format only
};

// Built-in defaults. verify defaults to the full lemma sweep grid with the numeric
// pipeline on; the other commands to a single (d, mu, alpha) = (3, 1, 1).
RunConfig default_config(Command command);

// Thrown for unreadable or malformed config files and bad option values.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Applies "key = value" lines. Lists are comma separated; '#' starts a comment.
// Keys: d, mu, alpha, lmax, numeric, tol_phase, tol_amplitude, tol_identity, rtol,
// format, out, degrees.
void apply_config_text(RunConfig& cfg, const std::string& text);
void apply_config_file(RunConfig& cfg, const std::string& path);

OutputFormat parse_format(const std::string& name);
const char* format_name(OutputFormat format);
const char* command_name(Command command);

// Every violated constraint, in a stable order; empty when the config is usable.
std::vector<std::string> config_violations(Command command, const RunConfig& cfg);

// Runs a command, writing the payload to `out` and diagnostics to `err`.
// Returns one of the exit codes above. Does not open cfg.out_path; see run_to_destination.
int run(Command command, const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Like run(), but honours cfg.out_path.
int run_to_destination(Command command, const RunConfig& cfg, std::ostream& err);

// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

numeric::PipelineOptions pipeline_options(const RunConfig& cfg);

}  // namespace zescat::cli
