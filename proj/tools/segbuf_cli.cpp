// segbuf command line: simulate, opt, ratio, adversary, gen, sweep, check, bounds.
//
// Exit codes: 0 success, 1 a check failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "segbuf/adversary.hpp"
#include "segbuf/errors.hpp"
#include "segbuf/harness.hpp"
#include "segbuf/model.hpp"
#include "segbuf/oracle.hpp"
#include "segbuf/policies.hpp"
#include "segbuf/sweep.hpp"

namespace {

using nlohmann::ordered_json;
using namespace segbuf;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read \"" + path + "\"");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write \"" + path + "\"");
    out << text;
}

ordered_json decisions_json(const DecisionLog& log) {
    ordered_json arr = ordered_json::array();
    for (const auto& d : log) {
        if (d) {
            arr.push_back(*d);
        } else {
            arr.push_back("idle");
        }
    }
    return arr;
}

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"num", r.num()}, {"den", r.den()}, {"text", r.to_string()}, {"decimal", r.to_decimal(6)}};
}

ordered_json record_json(const RatioRecord& r) {
    ordered_json doc;
    doc["policy"] = r.policy;
    doc["alg_benefit"] = r.alg_benefit;
    doc["opt_benefit"] = r.opt_benefit;
    doc["ratio"] = rational_json(r.ratio);
    doc["bound"] = r.bound ? rational_json(*r.bound) : ordered_json();
    doc["bound_satisfied"] = r.bound_satisfied;
    doc["slack"] = r.slack ? rational_json(*r.slack) : ordered_json();
    doc["states_explored"] = r.states_explored;
    return doc;
}

struct CommonOptions {
    std::string config_path;
    std::string trace_path;
    std::string policy = "greedy";
    std::uint64_t seed = 1;
    std::uint64_t max_states = OracleOptions{}.max_states;
    std::string out;
};

OracleOptions oracle_options(const CommonOptions& o) {
    OracleOptions opts;
    opts.max_states = o.max_states;
    return opts;
}

SwitchConfig load_config(const CommonOptions& o) {
    if (o.config_path.empty()) throw ValidationError("--config is required");
    return parse_config(read_file(o.config_path));
}

Trace load_trace(const SwitchConfig& config, const CommonOptions& o) {
    if (o.trace_path.empty()) throw ValidationError("--trace is required");
    Trace trace = parse_trace(read_file(o.trace_path));
    const auto validation = validate_trace(config, trace);
    if (!validation.ok()) throw ValidationError("trace: " + validation.violations.front());
    return trace;
}

int cmd_simulate(const CommonOptions& o) {
    const SwitchConfig config = load_config(o);
    const Trace trace = load_trace(config, o);
    auto policy = make_policy(o.policy);
    const SimulationResult result = simulate(config, trace, *policy);

    ordered_json doc;
    doc["policy"] = policy->name();
    doc["benefit"] = result.benefit;
    doc["accepted_per_value"] = result.accepted_per_value;
    doc["sent_per_value"] = result.sent_per_value;
    doc["rejected"] = result.rejected_count;
    doc["drained"] = trace.is_drained();
    std::cout << doc.dump(2) << "\n";
    if (!o.out.empty()) write_output(o.out, serialize_decision_log(result.decision_log));
    return 0;
}

int cmd_opt(const CommonOptions& o) {
    const SwitchConfig config = load_config(o);
    const Trace trace = load_trace(config, o);
    const OracleResult result = optimal_benefit(config, trace, oracle_options(o));

    ordered_json doc;
    doc["optimal_benefit"] = result.optimal_benefit;
    doc["accepted_per_value"] = result.accepted_per_value;
    doc["state_count"] = result.state_count;
    std::cout << doc.dump(2) << "\n";
    if (!o.out.empty()) write_output(o.out, serialize_decision_log(result.schedule));
    return 0;
}

int cmd_ratio(const CommonOptions& o) {
    const SwitchConfig config = load_config(o);
    const Trace trace = load_trace(config, o);
    auto policy = make_policy(o.policy);
    const RatioRecord record = competitive_ratio(config, trace, *policy, oracle_options(o));
    write_output(o.out, record_json(record).dump(2) + "\n");
    return record.bound_satisfied ? 0 : kExitCheckFailed;
}

int cmd_adversary(const CommonOptions& o, const std::vector<Value>& values_flag, const std::string& trace_out) {
    std::vector<Value> values = values_flag;
    if (values.empty()) {
        const SwitchConfig config = load_config(o);
        values.assign(config.values().begin(), config.values().end());
    }
    auto policy = make_policy(o.policy);
    const AdversaryTranscript tx = build_lower_bound_instance(values, *policy);
    const BoundReport bounds = compute_bounds(tx.config);

    ordered_json doc;
    doc["policy"] = policy->name();
    doc["config"] = ordered_json::parse(serialize_config(tx.config));
    doc["observed_sends"] = tx.observed_sends;
    doc["value_sets"] = tx.value_sets;
    ordered_json events = ordered_json::array();
    for (const auto& e : tx.trace.events) {
        ordered_json ev;
        ev["event"] = e.is_arrive() ? "arrive" : "send";
        if (e.is_arrive()) ev["queue"] = e.queue;
        events.push_back(std::move(ev));
    }
    doc["trace"] = std::move(events);
    doc["alg_schedule"] = decisions_json(tx.alg_schedule);
    doc["adv_schedule"] = decisions_json(tx.adv_schedule);
    doc["alg_benefit"] = tx.alg_benefit;
    doc["adv_benefit"] = tx.adv_benefit;
    doc["ratio"] = rational_json(tx.ratio());
    doc["lower_bound"] = rational_json(bounds.lower_bound);
    write_output(o.out, doc.dump(2) + "\n");
    if (!trace_out.empty()) write_output(trace_out, serialize_trace(tx.trace));
    return 0;
}

struct GenOptions {
    std::string kind = "random";
    std::size_t steps = 20;
    std::size_t arrivals_max = 3;
    std::size_t burst_len = 2;
    std::size_t burst_size = 2;
};

int cmd_gen(const CommonOptions& o, const GenOptions& g) {
    const SwitchConfig config = load_config(o);
    Trace trace;
    if (g.kind == "random") {
        trace = gen_random(config, g.steps, g.arrivals_max, o.seed);
    } else if (g.kind == "bursty") {
        trace = gen_bursty(config, g.steps, g.burst_len, g.burst_size, o.seed);
    } else {
        throw ValidationError("--generator must be random or bursty");
    }
    write_output(o.out, serialize_trace(trace));
    return 0;
}

int cmd_sweep(const CommonOptions& o, const std::string& spec_path, bool timing) {
    if (spec_path.empty()) throw ValidationError("--spec is required");
    const SweepSpec spec = parse_sweep_spec(read_file(spec_path));
    SweepOptions options;
    options.oracle = oracle_options(o);
    options.record_runtime = timing;
    const SweepResult result = run_sweep(spec, options);
    write_output(o.out, sweep_to_csv(result));
    if (result.skipped > 0) std::cerr << "skipped " << result.skipped << " instance(s) over the state cap\n";
    bool ok = true;
    for (const auto& row : result.rows) ok = ok && row.record.bound_satisfied;
    return ok ? 0 : kExitCheckFailed;
}

int cmd_check(const CommonOptions& o, const std::string& suite, std::size_t trials) {
    SuiteParams params;
    params.trials = trials;
    params.oracle = oracle_options(o);

    std::vector<std::string> suites;
    if (suite == "all") {
        for (const auto name : kSuiteNames) suites.emplace_back(name);
    } else {
        suites.push_back(suite);
    }
    bool ok = true;
    std::string json_out;
    for (const auto& name : suites) {
        const CheckReport report = run_suite(name, params, o.seed);
        std::cerr << (report.passed() ? "PASS " : "FAIL ") << report.suite << ": " << report.instances_tested
                  << " tested, " << report.instances_skipped << " skipped, " << report.failures.size()
                  << " failure(s)\n";
        json_out += report_to_json(report) + "\n";
        ok = ok && report.passed();
    }
    write_output(o.out, json_out);
    return ok ? 0 : kExitCheckFailed;
}

int cmd_bounds(const CommonOptions& o) {
    const SwitchConfig config = load_config(o);
    const BoundReport b = compute_bounds(config);
    ordered_json doc;
    doc["restricted"] = config.is_restricted();
    doc["r"] = rational_json(b.r);
    doc["alpha"] = b.alpha ? rational_json(*b.alpha) : ordered_json();
    doc["general_bound"] = rational_json(b.general_bound);
    doc["restricted_bound"] = rational_json(b.restricted_bound);
    doc["lower_bound"] = rational_json(b.lower_bound);
    doc["applicable_bound"] = rational_json(applicable_bound(config));
    write_output(o.out, doc.dump(2) + "\n");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Buffer management with class segregation: simulation, exact optimum, bounds"};
    app.require_subcommand(1);

    CommonOptions common;
    auto add_common = [&](CLI::App* cmd, bool needs_trace) {
        cmd->add_option("--config", common.config_path, "Switch config (JSON)");
        if (needs_trace) cmd->add_option("--trace", common.trace_path, "Event trace (JSON Lines)");
        cmd->add_option("--policy", common.policy,
                        "greedy | round-robin | lowest-first | random:<seed> | replay:<logfile>");
        cmd->add_option("--seed", common.seed, "Seed");
        cmd->add_option("--max-states", common.max_states, "Oracle state-event cap");
        cmd->add_option("--out", common.out, "Output path (default stdout)");
    };

    auto* simulate_cmd = app.add_subcommand("simulate", "Run a policy; --out writes its decision log");
    add_common(simulate_cmd, true);
    auto* opt_cmd = app.add_subcommand("opt", "Exact offline optimum; --out writes the schedule");
    add_common(opt_cmd, true);
    auto* ratio_cmd = app.add_subcommand("ratio", "OPT/ALG against the applicable bound");
    add_common(ratio_cmd, true);

    auto* adversary_cmd = app.add_subcommand("adversary", "Build the lower-bound instance against a policy");
    add_common(adversary_cmd, false);
    std::vector<Value> values;
    std::string trace_out;
    adversary_cmd->add_option("--values", values, "Packet values (instead of --config)")->delimiter(',');
    adversary_cmd->add_option("--trace-out", trace_out, "Also write the constructed trace (JSON Lines)");

    auto* gen_cmd = app.add_subcommand("gen", "Generate a drained trace");
    add_common(gen_cmd, false);
    GenOptions gen;
    gen_cmd->add_option("--generator", gen.kind, "random | bursty");
    gen_cmd->add_option("--steps", gen.steps, "Steps");
    gen_cmd->add_option("--arrivals-max", gen.arrivals_max, "Max arrivals per step (random)");
    gen_cmd->add_option("--burst-len", gen.burst_len, "Phase length in steps (bursty)");
    gen_cmd->add_option("--burst-size", gen.burst_size, "Arrivals per targeted queue per burst step (bursty)");

    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep to CSV");
    add_common(sweep_cmd, false);
    std::string spec_path;
    bool timing = false;
    sweep_cmd->add_option("--spec", spec_path, "Sweep spec (JSON)");
    sweep_cmd->add_flag("--timing", timing, "Fill runtime_ms (output no longer reproducible)");

    auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
    add_common(check_cmd, false);
    std::string suite = "all";
    std::size_t trials = 1000;
    check_cmd->add_option("--suite", suite, "Suite name or all");
    check_cmd->add_option("--trials", trials, "Seeded instances per suite");

    auto* bounds_cmd = app.add_subcommand("bounds", "Print r, alpha and the bounds for a config");
    add_common(bounds_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*simulate_cmd) return cmd_simulate(common);
        if (*opt_cmd) return cmd_opt(common);
        if (*ratio_cmd) return cmd_ratio(common);
        if (*adversary_cmd) return cmd_adversary(common, values, trace_out);
        if (*gen_cmd) return cmd_gen(common, gen);
        if (*sweep_cmd) return cmd_sweep(common, spec_path, timing);
        if (*check_cmd) return cmd_check(common, suite, trials);
        if (*bounds_cmd) return cmd_bounds(common);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DiligenceError& e) {
        std::cerr << "diligence violation: " << e.what() << "\n";
        return kExitUsage;
    } catch (const OracleLimitError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
