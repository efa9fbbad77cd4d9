// Declarative scenario runner behind the CLI: parse a JSON config, dispatch
// to the engines, and emit a schema-versioned JSON report plus, for sweeps,
// a CSV table.
//
// Exit-code contract: 0 = all checks satisfied, 1 = violation found
// (expected for mixed demos). Invalid input never comes back as a code from
// run_scenario; it throws, and the CLI maps any Error to exit 2.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "leggett/numeric.hpp"
#include "leggett/quantum.hpp"
#include "leggett/types.hpp"

namespace leggett::cli {

enum class Scenario { check, trace, quantum, sweep, mixed, mc };

std::string_view scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

enum class SweepParam { a, b, ab }; // ab moves both analyzers together

struct SweepSpec {
    SweepParam param = SweepParam::b;
    double from = 0.0;
    double to = 0.0;
    std::uint64_t steps = 0;
};

struct MarginalModelSpec {
    double u = 0.0;
    double v = 0.0;
};

struct OutputSpec {
    std::optional<std::string> report;
    std::optional<std::string> table;
};

using FloatEntries = std::array<double, 4>;
using ExactEntries = std::array<Rational, 4>;
// JSON numbers select float mode, strings ("2/5", "0.4") exact mode.
using DistributionEntries = std::variant<FloatEntries, ExactEntries>;

struct ScenarioConfig {
    std::optional<Scenario> scenario;
    std::optional<DistributionEntries> distribution;
    std::optional<quantum::StateSpec> state;
    Kind kind = Kind::photon;
    std::optional<SettingPair> settings;
    std::optional<SweepSpec> sweep;
    std::optional<MarginalModelSpec> marginal_model;
    std::optional<std::uint64_t> samples;
    std::optional<std::uint64_t> seed;
    double z = 5.0;
    OutputSpec output;
};

// Throws ConfigError on malformed input; angles must be JSON numbers in
// radians (a "deg:" string is rejected, never converted).
ScenarioConfig parse_config(const nlohmann::json& j);
ScenarioConfig load_config_file(const std::string& path);

// Normalized echo; parse_config(config_to_json(c)) reproduces c.
nlohmann::json config_to_json(const ScenarioConfig& c);

struct RunResult {
    int exit_code = 0;
    nlohmann::json report;
};

// Validates scenario-specific requirements, runs the engines, writes the
// report (and sweep table) when output paths are configured.
RunResult run_scenario(const ScenarioConfig& config);

// Locale-independent float formatting, 17 significant digits.
std::string format_double(double value);

} // namespace leggett::cli
