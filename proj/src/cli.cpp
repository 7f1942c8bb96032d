#include "zescat/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "zescat/errors.hpp"
#include "zescat/phase.hpp"

namespace zescat::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Config parsing

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_real(const std::string& key, const std::string& v) {
    double x = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError("config key '" + key + "': '" + v + "' is not a number");
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    int x = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size())
        throw ConfigError("config key '" + key + "': '" + v + "' is not an integer");
    return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
    if (v == "false" || v == "0" || v == "no" || v == "off") return false;
    throw ConfigError("config key '" + key + "': '" + v + "' is not a boolean");
}

template <class T, class Parse>
std::vector<T> parse_list(const std::string& key, const std::string& v, Parse parse) {
    std::vector<T> out;
    for (const auto& item : split_list(v)) out.push_back(parse(key, item));
    if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
    return out;
}

// ---------------------------------------------------------------------------
// Tables

struct Null {};
using Cell = std::variant<Null, long long, double, bool, std::string>;

struct Column {
    std::string name;
    bool angle = false;  // converted by --degrees in human output
};

struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<Cell>> rows;
};

struct Report {
    json config;
    Table table;
    json summary;
    std::vector<std::string> summary_lines;  // human format only
};

Cell opt(std::optional<double> v) { return v ? Cell{*v} : Cell{Null{}}; }

std::string cell_text(const Cell& c, bool degrees) {
    return std::visit(
        [degrees](const auto& v) -> std::string {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Null>)
                return "";
            else if constexpr (std::is_same_v<V, long long>)
                return std::to_string(v);
            else if constexpr (std::is_same_v<V, double>)
                return format_double(degrees ? v * 180.0 / std::numbers::pi : v);
            else if constexpr (std::is_same_v<V, bool>)
                return v ? "true" : "false";
            else
                return v;
        },
        c);
}

json cell_json(const Cell& c) {
    return std::visit(
        [](const auto& v) -> json {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, Null>)
                return nullptr;
            else if constexpr (std::is_same_v<V, double>)
                return std::isfinite(v) ? json(v == 0.0 ? 0.0 : v) : json(nullptr);
            else
                return json(v);
        },
        c);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

void render(const Report& report, const RunConfig& cfg, Command command, std::ostream& out) {
    const Table& t = report.table;
    switch (cfg.format) {
        case OutputFormat::json: {
            json doc;
            doc["config"] = report.config;
            json rows = json::array();
            for (const auto& row : t.rows) {
                json obj = json::object();
                for (std::size_t j = 0; j < t.columns.size(); ++j)
                    obj[t.columns[j].name] = cell_json(row[j]);
                rows.push_back(std::move(obj));
            }
            doc["rows"] = std::move(rows);
            doc["summary"] = report.summary;
            out << doc.dump(2) << '\n';
            break;
        }
        case OutputFormat::csv: {
            for (std::size_t j = 0; j < t.columns.size(); ++j)
                out << (j ? "," : "") << t.columns[j].name;
            out << '\n';
            for (const auto& row : t.rows) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    out << (j ? "," : "") << csv_escape(cell_text(row[j], false));
                out << '\n';
            }
            break;
        }
        case OutputFormat::human: {
            out << "# zescat " << command_name(command) << '\n';
            std::vector<std::vector<std::string>> text;
            std::vector<std::size_t> width(t.columns.size());
            for (std::size_t j = 0; j < t.columns.size(); ++j) width[j] = t.columns[j].name.size();
            for (const auto& row : t.rows) {
                auto& line = text.emplace_back();
                for (std::size_t j = 0; j < row.size(); ++j) {
                    line.push_back(cell_text(row[j], cfg.degrees && t.columns[j].angle));
                    if (line.back().empty()) line.back() = "-";
                    width[j] = std::max(width[j], line.back().size());
                }
            }
            for (std::size_t j = 0; j < t.columns.size(); ++j)
                out << (j ? "  " : "") << std::setw(int(width[j])) << t.columns[j].name;
            out << '\n';
            for (const auto& line : text) {
                for (std::size_t j = 0; j < line.size(); ++j)
                    out << (j ? "  " : "") << std::setw(int(width[j])) << line[j];
                out << '\n';
            }
            for (const auto& s : report.summary_lines) out << "# " << s << '\n';
            if (cfg.degrees) out << "# angles in degrees\n";
            break;
        }
    }
}

json config_json(Command command, const RunConfig& cfg) {
    json c;
    c["command"] = command_name(command);
    c["d"] = cfg.dims;
    c["mu"] = cfg.mus;
    c["alpha"] = cfg.alphas;
    c["lmax"] = cfg.l_max;
    c["numeric"] = cfg.numeric;
    c["tol_phase"] = cfg.tol_phase;
    c["tol_amplitude"] = cfg.tol_amplitude;
    if (command == Command::verify) c["tol_identity"] = cfg.tol_identity;
    if (cfg.numeric) c["rtol"] = cfg.rtol;
    return c;
}

std::optional<double> try_value(double (*fn)(const Channel&), const Channel& ch) {
    try {
        return fn(ch);
    } catch (const OverflowError&) {
        return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Commands

int phase_table(const RunConfig& cfg, Report& report) {
    const PotentialParams params{cfg.dims.front(), cfg.mus.front(), cfg.alphas.front()};
    auto& t = report.table;
    t.columns = {{"l"}, {"nu"}, {"nu_tilde"}, {"D_closed", true}, {"C_closed"}};
    if (cfg.numeric)
        t.columns.insert(t.columns.end(), {{"D_numeric", true},
                                           {"C_numeric"},
                                           {"abs_dD", true},
                                           {"rel_dC"},
                                           {"residual_rms"},
                                           {"pass"},
                                           {"error"}});

    SweepGrid grid{{params.d}, {params.mu}, {params.alpha}, cfg.l_max};
    std::vector<LemmaCheck> checks;
    if (cfg.numeric) checks = lemma_sweep_parallel(grid, pipeline_options(cfg));

    const LemmaTolerances tol{cfg.tol_phase, cfg.tol_amplitude};
    double max_dd = 0.0;
    double max_dc = 0.0;
    bool all_pass = true;
    for (int l = 0; l <= cfg.l_max; ++l) {
        const Channel ch = make_channel(params, l);
        std::vector<Cell> row{static_cast<long long>(l), ch.nu, ch.nu_tilde, closed_form_phase(ch),
                              opt(try_value(closed_form_amplitude, ch))};
        if (cfg.numeric) {
            const LemmaCheck& c = checks[static_cast<std::size_t>(l)];
            const bool pass = passes(c, tol);
            all_pass = all_pass && pass;
            if (c.ok()) {
                max_dd = std::max(max_dd, c.phase_error);
                max_dc = std::max(max_dc, c.amplitude_rel_error);
                row.insert(row.end(), {c.numeric.phase_D, c.numeric.amplitude_C, c.phase_error,
                                       c.amplitude_rel_error, c.residual_rms, pass, Null{}});
            } else {
                row.insert(row.end(), {Null{}, Null{}, Null{}, Null{}, Null{}, false, c.error});
            }
        }
        t.rows.push_back(std::move(row));
    }

    report.summary["rows"] = cfg.l_max + 1;
    if (cfg.numeric) {
        report.summary["max_abs_dD"] = max_dd;
        report.summary["max_rel_dC"] = max_dc;
        report.summary_lines.push_back("max |dD| = " + format_double(max_dd) +
                                       ", max |dC|/C = " + format_double(max_dc));
    }
    report.summary["pass"] = all_pass;
    report.summary_lines.push_back(all_pass ? "PASS" : "FAIL");
    return all_pass ? exit_pass : exit_tolerance_failure;
}

int verify(const RunConfig& cfg, Report& report) {
    SweepGrid grid{cfg.dims, cfg.mus, cfg.alphas, cfg.l_max};
    const auto identities = identity_sweep_parallel(grid);
    std::vector<LemmaCheck> checks;
    if (cfg.numeric) checks = lemma_sweep_parallel(grid, pipeline_options(cfg));

    auto& t = report.table;
    t.columns = {{"d"},       {"mu"},         {"alpha"},           {"l"},
                 {"nu"},      {"nu_tilde"},   {"eig_re"},          {"eig_im"},
                 {"eig_phase_route_re"},      {"eig_phase_route_im"},
                 {"route_difference"},        {"D_closed", true},  {"C_closed"}};
    if (cfg.numeric)
        t.columns.insert(t.columns.end(), {{"D_numeric", true},
                                           {"C_numeric"},
                                           {"abs_dD", true},
                                           {"rel_dC"},
                                           {"residual_rms"},
                                           {"literal_C_ratio"}});
    t.columns.insert(t.columns.end(), {{"pass"}, {"error"}});

    const LemmaTolerances tol{cfg.tol_phase, cfg.tol_amplitude};
    double max_route = 0.0;
    double max_modulus = 0.0;
    double max_dd = 0.0;
    double max_dc = 0.0;
    std::size_t failures = 0;
    std::size_t index = 0;
    for (const auto& rep : identities) {
        for (const auto& id : rep.rows) {
            const Channel ch = make_channel(rep.params, id.l);
            bool pass = id.difference <= cfg.tol_identity && id.modulus_error <= cfg.tol_identity;
            max_route = std::max(max_route, id.difference);
            max_modulus = std::max(max_modulus, id.modulus_error);
            std::vector<Cell> row{static_cast<long long>(rep.params.d),
                                  rep.params.mu,
                                  rep.params.alpha,
                                  static_cast<long long>(id.l),
                                  ch.nu,
                                  ch.nu_tilde,
                                  id.via_multiplier.real(),
                                  id.via_multiplier.imag(),
                                  id.via_phase.real(),
                                  id.via_phase.imag(),
                                  id.difference,
                                  closed_form_phase(ch),
                                  opt(try_value(closed_form_amplitude, ch))};
            Cell error = Null{};
            if (cfg.numeric) {
                const LemmaCheck& c = checks[index];
                pass = pass && passes(c, tol);
                if (c.ok()) {
                    max_dd = std::max(max_dd, c.phase_error);
                    max_dc = std::max(max_dc, c.amplitude_rel_error);
                    row.insert(row.end(), {c.numeric.phase_D, c.numeric.amplitude_C, c.phase_error,
                                           c.amplitude_rel_error, c.residual_rms,
                                           std::isfinite(c.literal_ratio) ? Cell{c.literal_ratio}
                                                                          : Cell{Null{}}});
                } else {
                    row.insert(row.end(), {Null{}, Null{}, Null{}, Null{}, Null{}, Null{}});
                    error = c.error;
                }
            }
            ++index;
            if (!pass) ++failures;
            row.push_back(pass);
            row.push_back(error);
            t.rows.push_back(std::move(row));
        }
    }

    const bool all_pass = failures == 0;
    auto& s = report.summary;
    s["channels"] = t.rows.size();
    s["failures"] = failures;
    s["max_route_difference"] = max_route;
    s["max_modulus_error"] = max_modulus;
    report.summary_lines.push_back("channels = " + std::to_string(t.rows.size()) +
                                   ", failures = " + std::to_string(failures));
    report.summary_lines.push_back("max route difference = " + format_double(max_route) +
                                   ", max ||S| - 1| = " + format_double(max_modulus));
    if (cfg.numeric) {
        s["max_abs_dD"] = max_dd;
        s["max_rel_dC"] = max_dc;
        report.summary_lines.push_back("max |dD| = " + format_double(max_dd) +
                                       ", max |dC|/C = " + format_double(max_dc));
    }
    s["pass"] = all_pass;
    report.summary_lines.push_back(all_pass ? "PASS" : "FAIL");
    return all_pass ? exit_pass : exit_tolerance_failure;
}

int eigenvalues(const RunConfig& cfg, Report& report) {
    const PotentialParams params{cfg.dims.front(), cfg.mus.front(), cfg.alphas.front()};
    auto& t = report.table;
    t.columns = {{"l"}, {"re"}, {"im"}, {"arg", true}};
    double max_modulus = 0.0;
    for (int l = 0; l <= cfg.l_max; ++l) {
        const SMatrixEigenvalue ev = smatrix_eigenvalue(params, l);
        max_modulus = std::max(max_modulus, std::abs(std::abs(ev.value) - 1.0));
        t.rows.push_back({static_cast<long long>(l), ev.value.real(), ev.value.imag(), ev.arg});
    }
    const bool pass = max_modulus <= cfg.tol_identity;
    report.summary["rows"] = cfg.l_max + 1;
    report.summary["max_modulus_error"] = max_modulus;
    report.summary["pass"] = pass;
    report.summary_lines.push_back("max ||S| - 1| = " + format_double(max_modulus));
    return pass ? exit_pass : exit_tolerance_failure;
}

}  // namespace

RunConfig default_config(Command command) {
    RunConfig cfg;
    if (command == Command::verify) {
        const auto grid = SweepGrid::lemma_default();
        cfg.dims = grid.dims;
        cfg.mus = grid.mus;
        cfg.alphas = grid.alphas;
        cfg.l_max = grid.max_l;
        cfg.numeric = true;
    }
    return cfg;
}

void apply_config_text(RunConfig& cfg, const std::string& text) {
    std::stringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "d")
            cfg.dims = parse_list<int>(key, value, parse_int);
        else if (key == "mu")
            cfg.mus = parse_list<double>(key, value, parse_real);
        else if (key == "alpha")
            cfg.alphas = parse_list<double>(key, value, parse_real);
        else if (key == "lmax")
            cfg.l_max = parse_int(key, value);
        else if (key == "numeric")
            cfg.numeric = parse_bool(key, value);
        else if (key == "tol_phase")
            cfg.tol_phase = parse_real(key, value);
        else if (key == "tol_amplitude")
            cfg.tol_amplitude = parse_real(key, value);
        else if (key == "tol_identity")
            cfg.tol_identity = parse_real(key, value);
        else if (key == "rtol")
            cfg.rtol = parse_real(key, value);
        else if (key == "format")
            cfg.format = parse_format(value);
        else if (key == "out")
            cfg.out_path = value;
        else if (key == "degrees")
            cfg.degrees = parse_bool(key, value);
        else
            throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    apply_config_text(cfg, buf.str());
}

OutputFormat parse_format(const std::string& name) {
    if (name == "json") return OutputFormat::json;
    if (name == "csv") return OutputFormat::csv;
    if (name == "human") return OutputFormat::human;
    throw ConfigError("unknown output format '" + name + "' (expected json, csv or human)");
}

const char* format_name(OutputFormat format) {
    switch (format) {
        case OutputFormat::json: return "json";
        case OutputFormat::csv: return "csv";
        case OutputFormat::human: return "human";
    }
    return "?";
}

const char* command_name(Command command) {
    switch (command) {
        case Command::phase_table: return "phase-table";
        case Command::verify: return "verify";
        case Command::eigenvalues: return "eigenvalues";
    }
    return "?";
}

std::vector<std::string> config_violations(Command command, const RunConfig& cfg) {
    std::vector<std::string> out;
    if (cfg.dims.empty() || cfg.mus.empty() || cfg.alphas.empty())
        out.push_back("d, mu and alpha need at least one value each");
    if (command != Command::verify &&
        (cfg.dims.size() > 1 || cfg.mus.size() > 1 || cfg.alphas.size() > 1))
        out.push_back(std::string(command_name(command)) + " takes a single d, mu and alpha");
    for (int d : cfg.dims) {
        for (double mu : cfg.mus) {
            for (double alpha : cfg.alphas) {
                try {
                    validate(PotentialParams{d, mu, alpha});
                } catch (const ValidationError& e) {
                    for (const auto& v : e.violations())
                        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
                }
            }
        }
    }
    if (cfg.l_max < 0) out.push_back("lmax must satisfy lmax >= 0");
    if (!(cfg.tol_phase > 0.0)) out.push_back("tol_phase must be positive");
    if (!(cfg.tol_amplitude > 0.0)) out.push_back("tol_amplitude must be positive");
    if (!(cfg.tol_identity > 0.0)) out.push_back("tol_identity must be positive");
    if (!(cfg.rtol > 0.0)) out.push_back("rtol must be positive");
    return out;
}

numeric::PipelineOptions pipeline_options(const RunConfig& cfg) {
    numeric::PipelineOptions options;
    options.integrator.rtol = cfg.rtol;
    options.integrator.atol = 1e-2 * cfg.rtol;
    return options;
}

int run(Command command, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (const auto violations = config_violations(command, cfg); !violations.empty()) {
        err << "zescat " << command_name(command) << ": invalid input\n";
        for (const auto& v : violations) err << "  - " << v << '\n';
        return exit_invalid_input;
    }
    Report report;
    report.config = config_json(command, cfg);
    int code = exit_pass;
    try {
        switch (command) {
            case Command::phase_table: code = phase_table(cfg, report); break;
            case Command::verify: code = verify(cfg, report); break;
            case Command::eigenvalues: code = eigenvalues(cfg, report); break;
        }
    } catch (const ValidationError& e) {
        err << "zescat: " << e.what() << '\n';
        return exit_invalid_input;
    } catch (const DomainError& e) {
        err << "zescat: " << e.what() << '\n';
        return exit_invalid_input;
    }
    render(report, cfg, command, out);
    return code;
}

int run_to_destination(Command command, const RunConfig& cfg, std::ostream& err) {
    if (cfg.out_path.empty()) return run(command, cfg, std::cout, err);
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        err << "zescat: cannot open output file '" << cfg.out_path << "'\n";
        return exit_invalid_input;
    }
    return run(command, cfg, file, err);
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (x == 0.0) return "0";  // no "-0"
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace zescat::cli
