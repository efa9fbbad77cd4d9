// leggett-cli: scenario runner for the basic Leggett inequality toolkit.
//
//   leggett-cli <check|trace|quantum|sweep|mixed|mc> --config cfg.json
//               [--seed N] [--output report.json] [--table table.csv]
//
// Exit codes: 0 all checks satisfied, 1 violation found (the expected result
// of mixed demos), 2 invalid input or config.
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "leggett/errors.hpp"
#include "leggett/scenario.hpp"

namespace {

constexpr int kInvalidInput = 2;

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for the basic Leggett inequalities"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed_override;
    std::optional<std::string> report_override;
    std::optional<std::string> table_override;

    const struct {
        const char* name;
        const char* description;
    } subcommands[] = {
        {"check", "validate a distribution and check the inequalities"},
        {"trace", "replay the full derivation with per-step slacks"},
        {"quantum", "Born-rule distribution for a state and settings"},
        {"sweep", "evaluate a scenario over a swept analyzer angle"},
        {"mixed", "mix Malus marginals with a Born correlator"},
        {"mc", "finite-sample simulation with statistical verdict"},
    };
    for (const auto& sub : subcommands) {
        auto* cmd = app.add_subcommand(sub.name, sub.description);
        cmd->add_option("--config", config_path, "scenario config (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--seed", seed_override, "override the config seed");
        cmd->add_option("--output", report_override, "report file path");
        cmd->add_option("--table", table_override, "sweep table file path");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        leggett::cli::ScenarioConfig config = leggett::cli::load_config_file(config_path);
        const auto chosen =
            leggett::cli::scenario_from_name(app.get_subcommands().front()->get_name());
        if (config.scenario && *config.scenario != chosen)
            throw leggett::ConfigError(
                "config selects scenario \"" +
                std::string(leggett::cli::scenario_name(*config.scenario)) +
                "\" but the subcommand is \"" +
                std::string(leggett::cli::scenario_name(chosen)) + "\"");
        config.scenario = chosen;
        if (seed_override) config.seed = *seed_override;
        if (report_override) config.output.report = *report_override;
        if (table_override) config.output.table = *table_override;

        const auto result = leggett::cli::run_scenario(config);
        if (!config.output.report) std::cout << result.report.dump(2) << '\n';
        return result.exit_code;
    } catch (const leggett::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}
