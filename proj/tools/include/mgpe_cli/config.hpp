#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mgpe/params.hpp"
#include "mgpe/zero_energy.hpp"
#include "mgpe_cli/exit_codes.hpp"

namespace mgpe::cli {

enum class Mode { analytic, bvp, energy, gpe, sweep };

const char* to_string(Mode mode);

/// Source strengths plotted by default in sweep mode.
inline const std::vector<double> kDefaultSweepSources{0.0005, 0.001, 0.005, 0.01};
inline constexpr double kDefaultSweepInnerRadius = 0.1;  // units of l_t
inline constexpr double kDefaultSweepOuterRadius = 1.0;
inline constexpr std::size_t kDefaultGridPoints = 2001;
inline constexpr double kDefaultEnergyTolerance = 1e-10;
inline constexpr double kDefaultGpeTolerance = 1e-8;

struct GpeSettings {
    double coupling = 0.0;
    double trap_frequency = 1.0;
    double particle_number = 1.0;
    std::optional<double> box_half_width;  // empty: 8 max(l_t, R_TF)
    std::size_t max_iters = 100'000;
    double dt = 1e-2;
};

struct RunConfig {
    Mode mode = Mode::sweep;
    std::optional<ZeroEnergyConfig> zero_energy;  // source holds the first entry of sources
    std::vector<double> sources;
    std::optional<GpeSettings> gpe;
    PhysicalParams params;
    std::size_t grid_points = kDefaultGridPoints;
    std::string output_path;  // empty: standard output
    double tolerance = kDefaultEnergyTolerance;
    bool cross_check = false;
    // Resolved key/value pairs in a fixed order, echoed as CSV header comments.
    std::vector<std::pair<std::string, std::string>> resolved;
    // Keys that took built-in defaults rather than user input.
    std::vector<std::string> defaulted;
};

/// Rejected configuration. key names the offending entry (file-style spelling).
class ConfigError : public std::runtime_error {
public:
    ConfigError(ExitCode code, std::string key, const std::string& message)
        : std::runtime_error(message), code_(code), key_(std::move(key)) {}

    ExitCode code() const noexcept { return code_; }
    const std::string& key() const noexcept { return key_; }

private:
    ExitCode code_;
    std::string key_;
};

/// --help was requested; what() is the usage text.
class HelpRequested : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using KeyValues = std::map<std::string, std::string>;

/// Flat `key = value` text. '#' or ';' start comments; blank lines are skipped.
/// Throws ConfigError (invalid_value) on malformed lines, unknown or duplicate keys.
KeyValues parse_key_values(const std::string& text);

/// Reads and parses a config file; unreadable files raise ConfigError(io_error).
KeyValues read_config_file(const std::string& path);

/// Merges file values with overrides (overrides win), validates and fills defaults.
RunConfig resolve_config(const KeyValues& file_values, const KeyValues& overrides);

/// Full command-line handling: flags, optional --config file, defaults.
/// args excludes the program name.
RunConfig parse_config(const std::vector<std::string>& args);

/// Usage text for --help.
std::string usage();

} // namespace mgpe::cli
