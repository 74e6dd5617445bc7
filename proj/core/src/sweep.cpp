#include "segbuf/sweep.hpp"

#include <json.hpp>

#include "segbuf/adversary.hpp"
#include "segbuf/errors.hpp"
#include "segbuf/policies.hpp"

namespace segbuf {
namespace {

using nlohmann::json;

std::int64_t int_field(const json& obj, const char* key, const std::string& where, std::int64_t fallback,
                       std::int64_t min_value) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer()) throw ValidationError(where + "." + key + ": expected an integer");
    const auto v = obj[key].get<std::int64_t>();
    if (v < min_value) {
        throw ValidationError(where + "." + key + ": must be >= " + std::to_string(min_value));
    }
    return v;
}

SweepCell parse_cell(const json& c, std::size_t index) {
    const std::string where = "cells[" + std::to_string(index) + "]";
    if (!c.is_object()) throw ValidationError(where + ": expected an object");

    json config_doc;
    config_doc["values"] = c.value("values", json::array());
    if (c.contains("queues")) {
        config_doc["queues"] = c["queues"];
    } else {
        const auto capacity = int_field(c, "capacity", where, 1, 1);
        config_doc["queues"] = json::array();
        for (std::size_t i = 0; i < config_doc["values"].size(); ++i) {
            config_doc["queues"].push_back({{"value_index", i}, {"capacity", capacity}});
        }
    }
    SwitchConfig config = [&] {
        try {
            return parse_config(config_doc.dump());
        } catch (const std::runtime_error& e) {
            throw ValidationError(where + "." + e.what());
        }
    }();

    SweepCell cell{c.value("id", "cell" + std::to_string(index)), std::move(config), {}, {}, 10, 1, false, false};
    if (c.contains("generator")) {
        const json& g = c["generator"];
        const std::string gw = where + ".generator";
        const std::string kind = g.value("kind", "random");
        if (kind == "random") {
            cell.generator.kind = GeneratorSpec::Kind::Random;
        } else if (kind == "bursty") {
            cell.generator.kind = GeneratorSpec::Kind::Bursty;
        } else {
            throw ValidationError(gw + ".kind: unknown generator \"" + kind + "\"");
        }
        cell.generator.steps = static_cast<std::size_t>(int_field(g, "steps", gw, 20, 0));
        cell.generator.arrivals_max = static_cast<std::size_t>(int_field(g, "arrivals_max", gw, 3, 0));
        cell.generator.burst_len = static_cast<std::size_t>(int_field(g, "burst_len", gw, 2, 0));
        cell.generator.burst_size = static_cast<std::size_t>(int_field(g, "burst_size", gw, 2, 0));
    }
    if (c.contains("policies")) {
        for (const auto& p : c["policies"]) {
            if (!p.is_string()) throw ValidationError(where + ".policies: expected strings");
            const auto name = p.get<std::string>();
            make_policy(name);  // validates the name
            cell.policies.push_back(name);
        }
    } else {
        cell.policies.push_back("greedy");
    }
    cell.trials = static_cast<std::size_t>(int_field(c, "trials", where, 10, 0));
    cell.seed = static_cast<std::uint64_t>(int_field(c, "seed", where, 1, 0));
    for (const auto& f : c.value("fixtures", json::array())) {
        const auto name = f.is_string() ? f.get<std::string>() : std::string();
        if (name == "tight") {
            if (!cell.config.is_restricted() || cell.config.num_values() != 2) {
                throw ValidationError(where + ".fixtures: \"tight\" needs a restricted two-valued cell");
            }
            cell.tight_fixture = true;
        } else if (name == "adversary") {
            if (cell.config.common_capacity() != Count{1}) {
                throw ValidationError(where + ".fixtures: \"adversary\" needs a restricted unit-capacity cell");
            }
            cell.adversary_fixture = true;
        } else {
            throw ValidationError(where + ".fixtures: unknown fixture \"" + name + "\"");
        }
    }
    return cell;
}

Trace generate(const SweepCell& cell, std::uint64_t seed) {
    const auto& g = cell.generator;
    if (g.kind == GeneratorSpec::Kind::Bursty) {
        return gen_bursty(cell.config, g.steps, g.burst_len, g.burst_size, seed);
    }
    return gen_random(cell.config, g.steps, g.arrivals_max, seed);
}

SweepRow summarize(const SweepCell& cell, const std::string& policy, const std::vector<SweepRow>& rows) {
    SweepRow summary{{}, "max"};
    summary.record.instance_id = cell.id + "/max";
    summary.record.policy = policy;
    bool first = true;
    for (const auto& row : rows) {
        const RatioRecord& r = row.record;
        if (r.policy != policy) continue;
        if (first || r.ratio > summary.record.ratio) {
            summary.record.ratio = r.ratio;
            summary.record.alg_benefit = r.alg_benefit;
            summary.record.opt_benefit = r.opt_benefit;
        }
        summary.record.bound = r.bound;
        summary.record.bound_satisfied = (first || summary.record.bound_satisfied) && r.bound_satisfied;
        summary.record.states_explored += r.states_explored;
        summary.record.runtime_ms += r.runtime_ms;
        first = false;
    }
    if (summary.record.bound) summary.record.slack = *summary.record.bound - summary.record.ratio;
    return summary;
}

}  // namespace

SweepSpec parse_sweep_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("sweep spec: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("cells") || !doc["cells"].is_array()) {
        throw ValidationError("cells: missing or not an array");
    }
    SweepSpec spec;
    for (std::size_t i = 0; i < doc["cells"].size(); ++i) spec.cells.push_back(parse_cell(doc["cells"][i], i));
    return spec;
}

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options) {
    SweepResult result;
    for (const auto& cell : spec.cells) {
        std::vector<SweepRow> rows;
        auto add = [&](const SwitchConfig& config, const Trace& trace, Policy& policy, std::string id,
                       std::uint64_t seed, std::string label) {
            try {
                RatioRecord record = competitive_ratio(config, trace, policy, options.oracle);
                record.instance_id = std::move(id);
                record.seed = seed;
                if (!options.record_runtime) record.runtime_ms = 0.0;
                rows.push_back({std::move(record), std::move(label)});
            } catch (const OracleLimitError&) {
                ++result.skipped;
            }
        };

        for (std::size_t i = 0; i < cell.trials; ++i) {
            const std::uint64_t seed = cell.seed + i;
            const Trace trace = generate(cell, seed);
            for (const auto& name : cell.policies) {
                auto policy = make_policy(name);
                add(cell.config, trace, *policy, cell.id, seed, std::to_string(seed));
            }
        }
        if (cell.tight_fixture) {
            const Trace trace = tight_two_valued_trace(cell.config);
            for (const auto& name : cell.policies) {
                auto policy = make_policy(name);
                add(cell.config, trace, *policy, cell.id + "/tight", 0, "fixture");
            }
        }
        if (cell.adversary_fixture) {
            for (const auto& name : cell.policies) {
                auto policy = make_policy(name);
                if (!policy->is_deterministic()) continue;
                const auto tx = build_lower_bound_instance(cell.config.values(), *policy);
                add(tx.config, tx.trace, *policy, cell.id + "/adversary", 0, "fixture");
            }
        }

        std::vector<SweepRow> summaries;
        for (const auto& name : cell.policies) summaries.push_back(summarize(cell, make_policy(name)->name(), rows));
        for (auto& row : rows) result.rows.push_back(std::move(row));
        for (auto& row : summaries) result.rows.push_back(std::move(row));
    }
    return result;
}

std::string sweep_to_csv(const SweepResult& result) {
    std::string out =
        "spec_id,seed,policy,alg_benefit,opt_benefit,ratio_num,ratio_den,ratio_dec,bound_num,bound_den,"
        "satisfied,slack_num,slack_den,states_explored,runtime_ms\n";
    for (const auto& row : result.rows) {
        const RatioRecord& r = row.record;
        out += r.instance_id + "," + row.seed_label + "," + r.policy + "," + std::to_string(r.alg_benefit) + "," +
               std::to_string(r.opt_benefit) + "," + std::to_string(r.ratio.num()) + "," +
               std::to_string(r.ratio.den()) + "," + r.ratio.to_decimal(6) + ",";
        out += r.bound ? std::to_string(r.bound->num()) + "," + std::to_string(r.bound->den()) : std::string(",");
        out += std::string(",") + (r.bound_satisfied ? "true" : "false") + ",";
        out += r.slack ? std::to_string(r.slack->num()) + "," + std::to_string(r.slack->den()) : std::string(",");
        out += "," + std::to_string(r.states_explored) + "," + std::to_string(static_cast<long long>(r.runtime_ms)) +
               "\n";
    }
    return out;
}

}  // namespace segbuf
