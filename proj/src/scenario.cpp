#include "leggett/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "leggett/hv.hpp"
#include "leggett/inequality.hpp"
#include "leggett/montecarlo.hpp"
#include "leggett/trace.hpp"

namespace leggett::cli {

using nlohmann::json;

std::string_view scenario_name(Scenario s) {
    switch (s) {
        case Scenario::check: return "check";
        case Scenario::trace: return "trace";
        case Scenario::quantum: return "quantum";
        case Scenario::sweep: return "sweep";
        case Scenario::mixed: return "mixed";
        case Scenario::mc: return "mc";
    }
    return "?";
}

Scenario scenario_from_name(const std::string& name) {
    if (name == "check") return Scenario::check;
    if (name == "trace") return Scenario::trace;
    if (name == "quantum") return Scenario::quantum;
    if (name == "sweep") return Scenario::sweep;
    if (name == "mixed") return Scenario::mixed;
    if (name == "mc") return Scenario::mc;
    throw ConfigError("unknown scenario \"" + name + "\"");
}

std::string format_double(double value) {
    std::array<char, 64> buf{};
    const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                      std::chars_format::general, 17);
    return std::string(buf.data(), result.ptr);
}

namespace {

// ---------------------------------------------------------------------------
// parsing

void require_keys(const json& j, const std::string& where,
                  const std::set<std::string>& allowed) {
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            throw ConfigError("unknown key \"" + item.key() + "\" in " + where);
}

// Accepts both signed-typed and unsigned-typed JSON integers >= 0.
std::uint64_t parse_u64(const json& j, const std::string& field) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<std::int64_t>() >= 0)
        return static_cast<std::uint64_t>(j.get<std::int64_t>());
    throw ConfigError(field + " must be a non-negative integer");
}

double parse_angle(const json& j, const std::string& field) {
    if (j.is_string())
        throw ConfigError(field + ": angles are plain numbers in radians; got string \"" +
                          j.get<std::string>() + "\" (no deg: or unit suffixes)");
    if (!j.is_number())
        throw ConfigError(field + " must be a number (radians)");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(field + " must be finite");
    return v;
}

DistributionEntries parse_distribution(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw ConfigError("distribution must be an array of 4 entries");
    bool all_numbers = true;
    bool all_strings = true;
    for (const auto& e : j) {
        all_numbers = all_numbers && e.is_number();
        all_strings = all_strings && e.is_string();
    }
    if (all_numbers) {
        FloatEntries entries{};
        for (std::size_t i = 0; i < 4; ++i) entries[i] = j[i].get<double>();
        return entries;
    }
    if (all_strings) {
        ExactEntries entries;
        for (std::size_t i = 0; i < 4; ++i) {
            try {
                entries[i] = parse_rational(j[i].get<std::string>());
            } catch (const Error& e) {
                throw ConfigError("distribution entry " + std::to_string(i) + ": " + e.what());
            }
        }
        return entries;
    }
    throw ConfigError("distribution entries must be all numbers (float mode) or all "
                      "strings (exact mode)");
}

quantum::StateSpec parse_state(const json& j, Kind kind) {
    quantum::StateSpec spec;
    spec.kind = kind;
    if (j.is_string()) {
        spec.name = j.get<std::string>();
        return spec;
    }
    if (!j.is_object()) throw ConfigError("state must be a string or an object");
    require_keys(j, "state", {"name", "product", "amplitudes"});
    if (j.size() != 1)
        throw ConfigError("state object must carry exactly one of name, product, amplitudes");
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ConfigError("state.name must be a string");
        spec.name = j["name"].get<std::string>();
    } else if (j.contains("product")) {
        const auto& p = j["product"];
        if (!p.is_array() || p.size() != 2)
            throw ConfigError("state.product must be an array of 2 angles");
        spec.product_angles = {{parse_angle(p[0], "state.product[0]"),
                                parse_angle(p[1], "state.product[1]")}};
    } else {
        const auto& amps = j["amplitudes"];
        if (!amps.is_array() || amps.size() != 4)
            throw ConfigError("state.amplitudes must be an array of 4 [re, im] pairs");
        quantum::Amplitudes a;
        for (std::size_t i = 0; i < 4; ++i) {
            const auto& pair = amps[i];
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
                !pair[1].is_number())
                throw ConfigError("state.amplitudes[" + std::to_string(i) +
                                  "] must be [re, im]");
            a[i] = {pair[0].get<double>(), pair[1].get<double>()};
        }
        spec.amplitudes = a;
    }
    return spec;
}

SettingPair parse_settings(const json& j) {
    if (!j.is_object()) throw ConfigError("settings must be an object {a, b}");
    require_keys(j, "settings", {"a", "b"});
    if (!j.contains("a") || !j.contains("b"))
        throw ConfigError("settings requires both a and b");
    return SettingPair{Setting{parse_angle(j["a"], "settings.a")},
                       Setting{parse_angle(j["b"], "settings.b")}};
}

SweepSpec parse_sweep(const json& j) {
    if (!j.is_object()) throw ConfigError("sweep must be an object {param, from, to, steps}");
    require_keys(j, "sweep", {"param", "from", "to", "steps"});
    for (const char* key : {"param", "from", "to", "steps"})
        if (!j.contains(key))
            throw ConfigError(std::string("sweep requires ") + key);
    SweepSpec spec;
    const std::string param = j["param"].is_string() ? j["param"].get<std::string>() : "";
    if (param == "a") spec.param = SweepParam::a;
    else if (param == "b") spec.param = SweepParam::b;
    else if (param == "ab") spec.param = SweepParam::ab;
    else throw ConfigError("sweep.param must be \"a\", \"b\" or \"ab\"");
    spec.from = parse_angle(j["from"], "sweep.from");
    spec.to = parse_angle(j["to"], "sweep.to");
    spec.steps = parse_u64(j["steps"], "sweep.steps");
    return spec;
}

MarginalModelSpec parse_marginal_model(const json& j) {
    if (!j.is_object()) throw ConfigError("marginal_model must be an object {u, v}");
    require_keys(j, "marginal_model", {"u", "v"});
    if (!j.contains("u") || !j.contains("v"))
        throw ConfigError("marginal_model requires both u and v");
    return MarginalModelSpec{parse_angle(j["u"], "marginal_model.u"),
                             parse_angle(j["v"], "marginal_model.v")};
}

OutputSpec parse_output(const json& j) {
    if (!j.is_object()) throw ConfigError("output must be an object {report, table}");
    require_keys(j, "output", {"report", "table"});
    OutputSpec spec;
    if (j.contains("report")) {
        if (!j["report"].is_string()) throw ConfigError("output.report must be a path string");
        spec.report = j["report"].get<std::string>();
    }
    if (j.contains("table")) {
        if (!j["table"].is_string()) throw ConfigError("output.table must be a path string");
        spec.table = j["table"].get<std::string>();
    }
    return spec;
}

// ---------------------------------------------------------------------------
// json building

json value_to_json(double v) { return v; }
json value_to_json(const Rational& v) { return v.str(); }

template <typename T>
json distribution_json(const JointDistribution<T>& d) {
    json out = json::array();
    for (const auto& e : d.entries()) out.push_back(value_to_json(e));
    return out;
}

template <typename T>
json summary_json(const CorrelatorSummary<T>& s) {
    return {{"mean_a", value_to_json(s.mean_a)},
            {"mean_b", value_to_json(s.mean_b)},
            {"corr", value_to_json(s.corr)},
            {"provenance", provenance_name(s.provenance)}};
}

template <typename T>
json witness_json(const std::optional<SlackWitness<T>>& w) {
    if (!w) return nullptr;
    return {{"cell", cell_name(w->cell)}, {"four_p", value_to_json(w->four_p)}};
}

template <typename T>
void append_report_blocks(json& out, const InequalityReport<T>& rep) {
    out["bounds"] = {{"upper", value_to_json(rep.upper_bound)},
                     {"lower", value_to_json(rep.lower_bound)}};
    out["slacks"] = {{"upper", value_to_json(rep.upper_slack)},
                     {"lower", value_to_json(rep.lower_slack)}};
    if (rep.witness_upper || rep.witness_lower)
        out["witnesses"] = {{"upper", witness_json(rep.witness_upper)},
                            {"lower", witness_json(rep.witness_lower)}};
    else
        out["witnesses"] = nullptr;
    out["verdict"] = rep.satisfied ? "satisfied" : "violated";
}

template <typename T>
json trace_json(const DerivationTrace<T>& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) {
        json step = {{"label", step_label_name(s.label)},
                     {"lhs", value_to_json(s.lhs)},
                     {"rhs", value_to_json(s.rhs)},
                     {"slack", value_to_json(s.slack)},
                     {"equality", s.equality}};
        step["witness"] = s.slack_witness ? json(*s.slack_witness) : json(nullptr);
        steps.push_back(std::move(step));
    }
    return steps;
}

// ---------------------------------------------------------------------------
// scenario execution

struct ScenarioOutcome {
    bool satisfied = true;
    json result;
};

template <typename T>
ScenarioOutcome run_check_or_trace(const std::array<T, 4>& entries, bool with_trace) {
    const auto dist = validate_distribution<T>(entries);
    const auto rep = check_distribution(dist);
    ScenarioOutcome outcome;
    outcome.result["mode"] = NumericPolicy<T>::exact ? "exact" : "float";
    outcome.result["distribution"] = distribution_json(dist);
    outcome.result["summary"] = summary_json(summarize(dist));
    append_report_blocks(outcome.result, rep);
    if (with_trace) outcome.result["trace"] = trace_json(derivation_trace(dist));
    outcome.satisfied = rep.satisfied;
    return outcome;
}

template <typename T>
const T& require_field(const std::optional<T>& field, const char* what, Scenario sc) {
    if (!field)
        throw ConfigError(std::string(scenario_name(sc)) + " scenario requires " + what);
    return *field;
}

ScenarioOutcome run_quantum(const quantum::TwoQubitState& state, const SettingPair& pair) {
    const auto dist = quantum::born_joint(state, pair);
    const auto rep = check_distribution(dist);
    ScenarioOutcome outcome;
    outcome.result["mode"] = "float";
    outcome.result["distribution"] = distribution_json(dist);
    outcome.result["summary"] = summary_json(summarize(dist));
    append_report_blocks(outcome.result, rep);
    outcome.satisfied = rep.satisfied;
    return outcome;
}

ScenarioOutcome run_mixed(const hv::MalusProductModel& model,
                          const quantum::TwoQubitState& state, const SettingPair& pair) {
    const auto marginal_dist = hv::malus_product_joint(model, pair);
    const auto correlation_dist = quantum::born_joint(state, pair);
    const auto mixed = hv::mixed_triple(model, pair, state, pair);
    const auto rep = check_summary(mixed.summary);
    ScenarioOutcome outcome;
    outcome.result["mode"] = "float";
    outcome.result["marginal_source"] = {{"description", mixed.marginal_source},
                                         {"distribution", distribution_json(marginal_dist)}};
    outcome.result["correlation_source"] = {
        {"description", mixed.correlation_source},
        {"distribution", distribution_json(correlation_dist)}};
    outcome.result["summary"] = summary_json(mixed.summary);
    append_report_blocks(outcome.result, rep);
    outcome.satisfied = rep.satisfied;
    return outcome;
}

ScenarioOutcome run_mc(const JointDistribution<double>& dist, std::uint64_t samples,
                       std::uint64_t seed, double z) {
    const auto counts = mc::sample_counts(dist, samples, seed);
    const auto est = mc::estimate(counts);
    const auto emp = mc::empirical_check(counts, z);
    ScenarioOutcome outcome;
    outcome.result["mode"] = "float";
    outcome.result["counts"] = {{"pp", counts.n_pp}, {"pm", counts.n_pm},
                                {"mp", counts.n_mp}, {"mm", counts.n_mm},
                                {"total", counts.n_total}, {"seed", counts.seed}};
    outcome.result["frequencies"] = distribution_json(est.frequencies);
    outcome.result["summary"] = summary_json(est.summary);
    append_report_blocks(outcome.result, emp.inequality);
    outcome.result["se"] = {{"mean_a", emp.se_a}, {"mean_b", emp.se_b},
                            {"corr", emp.se_corr}, {"slack", emp.slack_se}};
    outcome.result["z"] = emp.z;
    outcome.result["verdict"] = std::string(mc::stat_verdict_name(emp.verdict));
    outcome.satisfied = emp.verdict == mc::StatVerdict::satisfied;
    return outcome;
}

struct SweepRow {
    double param;
    CorrelatorSummary<double> summary;
    InequalityReport<double> report;
};

ScenarioOutcome run_sweep_scenario(const ScenarioConfig& config, const SweepSpec& sweep,
                                   const quantum::TwoQubitState& state,
                                   const SettingPair& base) {
    if (sweep.steps < 2) throw ConfigError("sweep.steps must be >= 2");
    if (!(sweep.from < sweep.to)) throw ConfigError("sweep requires from < to");
    const std::string table_path =
        require_field(config.output.table, "an output.table path", Scenario::sweep);

    std::optional<hv::MalusProductModel> model;
    if (config.marginal_model)
        model = hv::MalusProductModel{Setting{config.marginal_model->u},
                                      Setting{config.marginal_model->v}, config.kind};

    std::vector<SweepRow> rows;
    rows.reserve(sweep.steps);
    for (std::uint64_t i = 0; i < sweep.steps; ++i) {
        const double t = sweep.from + (sweep.to - sweep.from) *
                                          static_cast<double>(i) /
                                          static_cast<double>(sweep.steps - 1);
        SettingPair point = base;
        switch (sweep.param) {
            case SweepParam::a: point.a.angle = t; break;
            case SweepParam::b: point.b.angle = t; break;
            case SweepParam::ab: point.a.angle = t; point.b.angle = t; break;
        }
        SweepRow row{t, {}, {}};
        if (model) {
            const auto mixed = hv::mixed_triple(*model, point, state, point);
            row.summary = mixed.summary;
            row.report = check_summary(mixed.summary);
        } else {
            const auto dist = quantum::born_joint(state, point);
            row.summary = summarize(dist);
            row.report = check_distribution(dist);
        }
        rows.push_back(std::move(row));
    }

    std::ofstream table(table_path);
    if (!table) throw ConfigError("cannot write table file " + table_path);
    table << "param_rad,mean_a,mean_b,corr,upper_slack,lower_slack\n";
    double min_upper = rows.front().report.upper_slack;
    double min_lower = rows.front().report.lower_slack;
    std::uint64_t violations = 0;
    for (const auto& row : rows) {
        table << format_double(row.param) << ',' << format_double(row.summary.mean_a)
              << ',' << format_double(row.summary.mean_b) << ','
              << format_double(row.summary.corr) << ','
              << format_double(row.report.upper_slack) << ','
              << format_double(row.report.lower_slack) << '\n';
        min_upper = std::min(min_upper, row.report.upper_slack);
        min_lower = std::min(min_lower, row.report.lower_slack);
        if (!row.report.satisfied) ++violations;
    }
    table.close();

    ScenarioOutcome outcome;
    outcome.result["mode"] = "float";
    outcome.result["sweep"] = {{"param", sweep.param == SweepParam::a   ? "a"
                                         : sweep.param == SweepParam::b ? "b"
                                                                        : "ab"},
                               {"from", sweep.from},
                               {"to", sweep.to},
                               {"steps", sweep.steps},
                               {"kind", model ? "mixed" : "quantum"},
                               {"min_upper_slack", min_upper},
                               {"min_lower_slack", min_lower},
                               {"violations", violations},
                               {"table", table_path}};
    outcome.result["verdict"] = violations == 0 ? "satisfied" : "violated";
    outcome.satisfied = violations == 0;
    return outcome;
}

} // namespace

ScenarioConfig parse_config(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    require_keys(j, "config",
                 {"schema", "scenario", "distribution", "state", "kind", "settings",
                  "sweep", "marginal_model", "samples", "seed", "z", "output"});
    if (j.contains("schema") &&
        (!j["schema"].is_number_integer() || j["schema"].get<int>() != 1))
        throw ConfigError("unsupported config schema (expected 1)");

    ScenarioConfig config;
    if (j.contains("scenario")) {
        if (!j["scenario"].is_string()) throw ConfigError("scenario must be a string");
        config.scenario = scenario_from_name(j["scenario"].get<std::string>());
    }
    if (j.contains("kind")) {
        const std::string kind = j["kind"].is_string() ? j["kind"].get<std::string>() : "";
        if (kind == "photon") config.kind = Kind::photon;
        else if (kind == "spin") config.kind = Kind::spin;
        else throw ConfigError("kind must be \"photon\" or \"spin\"");
    }
    if (j.contains("distribution")) config.distribution = parse_distribution(j["distribution"]);
    if (j.contains("state")) config.state = parse_state(j["state"], config.kind);
    if (j.contains("settings")) config.settings = parse_settings(j["settings"]);
    if (j.contains("sweep")) config.sweep = parse_sweep(j["sweep"]);
    if (j.contains("marginal_model"))
        config.marginal_model = parse_marginal_model(j["marginal_model"]);
    if (j.contains("samples")) {
        const std::uint64_t samples = parse_u64(j["samples"], "samples");
        if (samples < 1) throw ConfigError("samples must be a positive integer");
        config.samples = samples;
    }
    if (j.contains("seed")) config.seed = parse_u64(j["seed"], "seed");
    if (j.contains("z")) {
        if (!j["z"].is_number() || !(j["z"].get<double>() > 0.0))
            throw ConfigError("z must be a positive number");
        config.z = j["z"].get<double>();
    }
    if (j.contains("output")) config.output = parse_output(j["output"]);
    return config;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
    }
    return parse_config(j);
}

json config_to_json(const ScenarioConfig& c) {
    json out;
    out["schema"] = 1;
    if (c.scenario) out["scenario"] = std::string(scenario_name(*c.scenario));
    out["kind"] = std::string(kind_name(c.kind));
    if (c.distribution) {
        json entries = json::array();
        if (const auto* floats = std::get_if<FloatEntries>(&*c.distribution)) {
            for (double e : *floats) entries.push_back(e);
        } else {
            for (const auto& e : std::get<ExactEntries>(*c.distribution))
                entries.push_back(e.str());
        }
        out["distribution"] = std::move(entries);
    }
    if (c.state) {
        json state;
        if (!c.state->name.empty()) state["name"] = c.state->name;
        else if (c.state->product_angles)
            state["product"] = {(*c.state->product_angles)[0], (*c.state->product_angles)[1]};
        else if (c.state->amplitudes) {
            json amps = json::array();
            for (const auto& a : *c.state->amplitudes)
                amps.push_back({a.real(), a.imag()});
            state["amplitudes"] = std::move(amps);
        }
        out["state"] = std::move(state);
    }
    if (c.settings)
        out["settings"] = {{"a", c.settings->a.angle}, {"b", c.settings->b.angle}};
    if (c.sweep)
        out["sweep"] = {{"param", c.sweep->param == SweepParam::a   ? "a"
                                  : c.sweep->param == SweepParam::b ? "b"
                                                                    : "ab"},
                        {"from", c.sweep->from},
                        {"to", c.sweep->to},
                        {"steps", c.sweep->steps}};
    if (c.marginal_model)
        out["marginal_model"] = {{"u", c.marginal_model->u}, {"v", c.marginal_model->v}};
    if (c.samples) out["samples"] = *c.samples;
    if (c.seed) out["seed"] = *c.seed;
    out["z"] = c.z;
    if (c.output.report || c.output.table) {
        json output;
        if (c.output.report) output["report"] = *c.output.report;
        if (c.output.table) output["table"] = *c.output.table;
        out["output"] = std::move(output);
    }
    return out;
}

RunResult run_scenario(const ScenarioConfig& config) {
    if (!config.scenario) throw ConfigError("no scenario selected");
    const Scenario sc = *config.scenario;

    ScenarioOutcome outcome;
    switch (sc) {
        case Scenario::check:
        case Scenario::trace: {
            const auto& dist = require_field(config.distribution, "a distribution", sc);
            const bool with_trace = sc == Scenario::trace;
            if (const auto* floats = std::get_if<FloatEntries>(&dist))
                outcome = run_check_or_trace(*floats, with_trace);
            else
                outcome = run_check_or_trace(std::get<ExactEntries>(dist), with_trace);
            break;
        }
        case Scenario::quantum: {
            const auto& spec = require_field(config.state, "a state", sc);
            const auto& pair = require_field(config.settings, "settings", sc);
            outcome = run_quantum(quantum::state_from_spec(spec), pair);
            break;
        }
        case Scenario::sweep: {
            const auto& spec = require_field(config.state, "a state", sc);
            const auto& pair = require_field(config.settings, "settings", sc);
            const auto& sweep = require_field(config.sweep, "a sweep block", sc);
            outcome = run_sweep_scenario(config, sweep, quantum::state_from_spec(spec), pair);
            break;
        }
        case Scenario::mixed: {
            const auto& spec = require_field(config.state, "a state", sc);
            const auto& pair = require_field(config.settings, "settings", sc);
            const auto& marginal =
                require_field(config.marginal_model, "a marginal_model", sc);
            const hv::MalusProductModel model{Setting{marginal.u}, Setting{marginal.v},
                                              config.kind};
            outcome = run_mixed(model, quantum::state_from_spec(spec), pair);
            break;
        }
        case Scenario::mc: {
            const auto& dist = require_field(config.distribution, "a distribution", sc);
            const auto samples = require_field(config.samples, "a samples count", sc);
            JointDistribution<double> sampled =
                std::holds_alternative<FloatEntries>(dist)
                    ? validate_distribution<double>(std::get<FloatEntries>(dist))
                    : to_float_distribution(
                          validate_distribution<Rational>(std::get<ExactEntries>(dist)));
            outcome = run_mc(sampled, samples, config.seed.value_or(0), config.z);
            break;
        }
    }

    RunResult result;
    result.report["schema"] = 1;
    result.report["scenario"] = std::string(scenario_name(sc));
    result.report["config"] = config_to_json(config);
    result.report["result"] = std::move(outcome.result);
    result.exit_code = outcome.satisfied ? 0 : 1;

    if (config.output.report) {
        std::ofstream out(*config.output.report);
        if (!out) throw ConfigError("cannot write report file " + *config.output.report);
        out << result.report.dump(2) << '\n';
    }
    return result;
}

} // namespace leggett::cli
