#include "mgpe_cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "mgpe_cli/csv.hpp"

namespace mgpe::cli {

namespace {

const std::vector<std::string> kKnownKeys{
    "mode", "r_inner", "r_outer", "eps",  "pi",     "grid_points",    "tol",       "cross_check", "out",
    "g",    "omega",   "n_atoms", "box_half_width", "max_iters", "dt", "hbar", "mass", "allow_negative_eps"};

bool is_known(const std::string& key) {
    return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

std::string trim(std::string_view s) {
    auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

[[noreturn]] void invalid(const std::string& key, const std::string& why) {
    throw ConfigError(ExitCode::invalid_value, key, "invalid value for '" + key + "': " + why);
}

double to_double(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
        invalid(key, "'" + text + "' is not a number");
    if (!std::isfinite(value)) invalid(key, "must be finite");
    return value;
}

std::size_t to_count(const std::string& key, const std::string& text) {
    const std::string t = trim(text);
    std::size_t value = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size())
        invalid(key, "'" + text + "' is not a non-negative integer");
    return value;
}

bool to_bool(const std::string& key, const std::string& text) {
    std::string t = trim(text);
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
    if (t == "false" || t == "0" || t == "no" || t == "off") return false;
    invalid(key, "'" + text + "' is not a boolean");
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_double(key, item));
    if (out.empty()) invalid(key, "empty list");
    return out;
}

class Resolver {
public:
    explicit Resolver(const KeyValues& values) : values_(values) {}

    const std::string* find(const std::string& key) const {
        auto it = values_.find(key);
        return it == values_.end() ? nullptr : &it->second;
    }

    const std::string& require(const std::string& key, Mode mode) const {
        if (const auto* v = find(key)) return *v;
        throw ConfigError(ExitCode::missing_key, key,
                          "missing required key '" + key + "' for mode " + to_string(mode));
    }

    double number(const std::string& key, double fallback, RunConfig& cfg) const {
        if (const auto* v = find(key)) return to_double(key, *v);
        cfg.defaulted.push_back(key);
        return fallback;
    }

private:
    const KeyValues& values_;
};

Mode parse_mode(const std::string& text) {
    const std::string t = trim(text);
    if (t == "analytic") return Mode::analytic;
    if (t == "bvp") return Mode::bvp;
    if (t == "energy") return Mode::energy;
    if (t == "gpe") return Mode::gpe;
    if (t == "sweep") return Mode::sweep;
    throw ConfigError(ExitCode::unknown_mode, "mode",
                      "unknown mode '" + t + "' (expected analytic, bvp, energy, gpe or sweep)");
}

void resolve_zero_energy(const Resolver& in, RunConfig& cfg) {
    ZeroEnergyConfig ze;
    const bool sweep = cfg.mode == Mode::sweep;
    ze.boundary_amplitude = to_double("pi", in.require("pi", cfg.mode));
    if (sweep) {
        ze.inner_radius = in.number("r_inner", kDefaultSweepInnerRadius, cfg);
        ze.outer_radius = in.number("r_outer", kDefaultSweepOuterRadius, cfg);
        if (const auto* v = in.find("eps")) {
            cfg.sources = to_list("eps", *v);
        } else {
            cfg.sources = kDefaultSweepSources;
            cfg.defaulted.push_back("eps");
        }
    } else {
        ze.inner_radius = to_double("r_inner", in.require("r_inner", cfg.mode));
        ze.outer_radius = to_double("r_outer", in.require("r_outer", cfg.mode));
        cfg.sources = to_list("eps", in.require("eps", cfg.mode));
        if (cfg.sources.size() != 1)
            invalid("eps", std::string("mode ") + to_string(cfg.mode) + " takes exactly one value");
    }
    if (const auto* v = in.find("allow_negative_eps")) ze.allow_negative_source = to_bool("allow_negative_eps", *v);

    if (!(ze.inner_radius > 0.0)) invalid("r_inner", "must be positive");
    if (!(ze.outer_radius > ze.inner_radius)) invalid("r_outer", "must exceed r_inner");
    for (double eps : cfg.sources)
        if (eps < 0.0 && !ze.allow_negative_source)
            invalid("eps", "negative source rejected (set allow_negative_eps = true to explore)");
    ze.source = cfg.sources.front();
    ze.validate();
    cfg.zero_energy = ze;

    std::string list;
    for (double eps : cfg.sources) list += (list.empty() ? "" : ",") + format_shortest(eps);
    cfg.resolved.emplace_back("r_inner", format_shortest(ze.inner_radius));
    cfg.resolved.emplace_back("r_outer", format_shortest(ze.outer_radius));
    cfg.resolved.emplace_back("eps", list);
    cfg.resolved.emplace_back("pi", format_shortest(ze.boundary_amplitude));
}

void resolve_gpe(const Resolver& in, RunConfig& cfg) {
    GpeSettings gpe;
    gpe.coupling = to_double("g", in.require("g", cfg.mode));
    gpe.particle_number = to_double("n_atoms", in.require("n_atoms", cfg.mode));
    gpe.trap_frequency = in.number("omega", 1.0, cfg);
    if (const auto* v = in.find("box_half_width")) gpe.box_half_width = to_double("box_half_width", *v);
    if (const auto* v = in.find("max_iters")) gpe.max_iters = to_count("max_iters", *v);
    gpe.dt = in.number("dt", gpe.dt, cfg);

    if (!(gpe.coupling >= 0.0)) invalid("g", "must be non-negative (attractive gases are not supported)");
    if (!(gpe.particle_number > 0.0)) invalid("n_atoms", "must be positive");
    if (!(gpe.trap_frequency > 0.0)) invalid("omega", "must be positive");
    if (gpe.box_half_width && !(*gpe.box_half_width > 0.0)) invalid("box_half_width", "must be positive");
    if (gpe.max_iters < 1) invalid("max_iters", "must be at least 1");
    if (!(gpe.dt > 0.0)) invalid("dt", "must be positive");
    cfg.params.trap_frequency = gpe.trap_frequency;
    cfg.gpe = gpe;

    cfg.resolved.emplace_back("g", format_shortest(gpe.coupling));
    cfg.resolved.emplace_back("omega", format_shortest(gpe.trap_frequency));
    cfg.resolved.emplace_back("n_atoms", format_shortest(gpe.particle_number));
    cfg.resolved.emplace_back("box_half_width",
                              gpe.box_half_width ? format_shortest(*gpe.box_half_width) : "auto");
    cfg.resolved.emplace_back("max_iters", std::to_string(gpe.max_iters));
    cfg.resolved.emplace_back("dt", format_shortest(gpe.dt));
}

} // namespace

const char* to_string(Mode mode) {
    switch (mode) {
    case Mode::analytic: return "analytic";
    case Mode::bvp: return "bvp";
    case Mode::energy: return "energy";
    case Mode::gpe: return "gpe";
    case Mode::sweep: return "sweep";
    }
    return "?";
}

KeyValues parse_key_values(const std::string& text) {
    KeyValues out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#' || t.front() == ';') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ConfigError(ExitCode::invalid_value, "",
                              "config line " + std::to_string(number) + ": expected 'key = value'");
        std::string key = trim(std::string_view(t).substr(0, eq));
        std::string value = trim(std::string_view(t).substr(eq + 1));
        // Trailing comment after the value.
        if (auto hash = value.find(" #"); hash != std::string::npos) value = trim(value.substr(0, hash));
        std::replace(key.begin(), key.end(), '-', '_');
        if (!is_known(key)) throw ConfigError(ExitCode::invalid_value, key, "unknown config key '" + key + "'");
        if (out.contains(key)) throw ConfigError(ExitCode::invalid_value, key, "duplicate config key '" + key + "'");
        out.emplace(std::move(key), std::move(value));
    }
    return out;
}

KeyValues read_config_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ConfigError(ExitCode::io_error, "config", "cannot read config file '" + path + "'");
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_key_values(buffer.str());
}

RunConfig resolve_config(const KeyValues& file_values, const KeyValues& overrides) {
    KeyValues merged = file_values;
    for (const auto& [key, value] : overrides) merged[key] = value;
    const Resolver in(merged);

    RunConfig cfg;
    if (!in.find("mode")) throw ConfigError(ExitCode::missing_key, "mode", "missing required key 'mode'");
    cfg.mode = parse_mode(*in.find("mode"));
    cfg.resolved.emplace_back("mode", to_string(cfg.mode));

    cfg.params.hbar = in.number("hbar", 1.0, cfg);
    cfg.params.mass = in.number("mass", 1.0, cfg);
    if (!(cfg.params.hbar > 0.0)) invalid("hbar", "must be positive");
    if (!(cfg.params.mass > 0.0)) invalid("mass", "must be positive");
    cfg.resolved.emplace_back("hbar", format_shortest(cfg.params.hbar));
    cfg.resolved.emplace_back("mass", format_shortest(cfg.params.mass));

    if (cfg.mode == Mode::gpe) {
        resolve_gpe(in, cfg);
    } else {
        resolve_zero_energy(in, cfg);
    }

    if (const auto* v = in.find("grid_points")) {
        cfg.grid_points = to_count("grid_points", *v);
        if (cfg.grid_points < 3) invalid("grid_points", "need at least 3 points");
    } else {
        cfg.defaulted.push_back("grid_points");
    }
    cfg.tolerance =
        in.number("tol", cfg.mode == Mode::gpe ? kDefaultGpeTolerance : kDefaultEnergyTolerance, cfg);
    if (!(cfg.tolerance > 0.0)) invalid("tol", "must be positive");
    if (const auto* v = in.find("cross_check")) cfg.cross_check = to_bool("cross_check", *v);
    if (const auto* v = in.find("out")) cfg.output_path = *v;

    cfg.resolved.emplace_back("grid_points", std::to_string(cfg.grid_points));
    cfg.resolved.emplace_back("tol", format_shortest(cfg.tolerance));
    if (cfg.mode == Mode::sweep) cfg.resolved.emplace_back("cross_check", cfg.cross_check ? "true" : "false");
    return cfg;
}

namespace {

struct FlagValues {
    std::string config_path;
    std::vector<std::string> eps;
    bool cross_check = false;
    bool allow_negative = false;
    std::map<std::string, std::string> scalars;
};

void build_app(CLI::App& app, FlagValues& flags) {
    app.add_option("--config", flags.config_path, "Flat key = value config file");
    const std::vector<std::pair<std::string, std::string>> scalar_flags{
        {"mode", "analytic | bvp | energy | gpe | sweep"},
        {"r-inner", "Inner (hard-core) radius R_a"},
        {"r-outer", "Outer (box) radius R"},
        {"pi", "Boundary amplitude at R"},
        {"grid-points", "Grid points including boundaries (default 2001)"},
        {"tol", "Quadrature or ground-state tolerance"},
        {"out", "Output CSV path (default: standard output)"},
        {"g", "1D coupling constant"},
        {"omega", "Trap angular frequency (default 1)"},
        {"n-atoms", "Particle number"},
        {"box-half-width", "Half-width L of the GPE box (default 8 max(l_t, R_TF))"},
        {"max-iters", "Maximum ground-state iterations"},
        {"dt", "Initial imaginary-time step (default 0.01)"},
        {"hbar", "Reduced Planck constant (default 1)"},
        {"mass", "Particle mass (default 1)"},
    };
    for (const auto& [name, help] : scalar_flags) {
        std::string key = name;
        std::replace(key.begin(), key.end(), '-', '_');
        app.add_option("--" + name, flags.scalars[key], help);
    }
    app.add_option("--eps", flags.eps, "Source strength; repeat or comma-separate for a sweep")->delimiter(',');
    app.add_flag("--cross-check", flags.cross_check, "Add BVP columns to a sweep and check agreement");
    app.add_flag("--allow-negative-eps", flags.allow_negative, "Accept negative source strengths");
}

} // namespace

std::string usage() {
    CLI::App app{"Zero-energy modified Gross-Pitaevskii toolkit", "mgpe"};
    FlagValues flags;
    build_app(app, flags);
    return app.help();
}

RunConfig parse_config(const std::vector<std::string>& args) {
    CLI::App app{"Zero-energy modified Gross-Pitaevskii toolkit", "mgpe"};
    FlagValues flags;
    build_app(app, flags);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::ParseError& e) {
        throw ConfigError(ExitCode::invalid_value, "", std::string("command line: ") + e.what());
    }

    KeyValues overrides;
    for (const auto& [key, value] : flags.scalars) {
        std::string flag = "--" + key;
        std::replace(flag.begin(), flag.end(), '_', '-');
        if (app.count(flag) > 0) overrides[key] = value;
    }
    if (!flags.eps.empty()) {
        std::string joined;
        for (const auto& e : flags.eps) joined += (joined.empty() ? "" : ",") + e;
        overrides["eps"] = joined;
    }
    if (flags.cross_check) overrides["cross_check"] = "true";
    if (flags.allow_negative) overrides["allow_negative_eps"] = "true";

    const KeyValues file = flags.config_path.empty() ? KeyValues{} : read_config_file(flags.config_path);
    return resolve_config(file, overrides);
}

} // namespace mgpe::cli
