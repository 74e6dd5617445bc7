#include "segbuf/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>

#include <json.hpp>

#include "segbuf/adversary.hpp"
#include "segbuf/errors.hpp"
#include "segbuf/policies.hpp"
#include "segbuf/rng.hpp"

namespace segbuf {

bool one_queue_per_value(const SwitchConfig& config) {
    std::vector<int> per_value(config.num_values(), 0);
    for (const auto& q : config.queues()) {
        if (++per_value[q.value_index] > 1) return false;
    }
    return true;
}

Rational applicable_bound(const SwitchConfig& config) {
    const BoundReport bounds = compute_bounds(config);
    if (config.is_restricted()) return bounds.restricted_bound;
    // With two queues of one value, GREEDY and OPT can serve different queues
    // of that value in the same step; only 2 survives that case.
    if (bounds.alpha && one_queue_per_value(config)) return bounds.general_bound;
    return Rational(2);
}

RatioRecord competitive_ratio(const SwitchConfig& config, const Trace& trace, Policy& policy,
                              const OracleOptions& oracle, std::optional<Rational> bound_override) {
    const auto start = std::chrono::steady_clock::now();
    const SimulationResult alg = simulate(config, trace, policy);
    const OracleResult opt = optimal_benefit(config, trace, oracle);

    RatioRecord record;
    record.policy = policy.name();
    record.alg_benefit = alg.benefit;
    record.opt_benefit = opt.optimal_benefit;
    record.states_explored = opt.state_count;
    if (alg.benefit > 0) {
        record.ratio = Rational(opt.optimal_benefit, alg.benefit);
    } else if (opt.optimal_benefit > 0) {
        throw std::logic_error("competitive_ratio: diligent policy earned 0 where OPT earned " +
                               std::to_string(opt.optimal_benefit));
    }
    if (bound_override) {
        record.bound = bound_override;
    } else if (record.policy == "greedy") {
        record.bound = applicable_bound(config);
    }
    if (record.bound) {
        record.bound_satisfied = record.ratio <= *record.bound;
        record.slack = *record.bound - record.ratio;
    }
    record.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return record;
}

Trace tight_two_valued_trace(const SwitchConfig& config) {
    const auto capacity = config.common_capacity();
    if (!capacity || config.num_values() != 2) {
        throw ValidationError("tight instance: needs a restricted two-valued config");
    }
    const std::size_t low = config.queues()[0].value_index == 0 ? 0 : 1;
    const std::size_t high = 1 - low;
    const auto b = static_cast<std::size_t>(*capacity);

    Trace trace;
    for (std::size_t i = 0; i < b; ++i) trace.arrive(low);
    for (std::size_t i = 0; i < b; ++i) trace.arrive(high);
    trace.send();
    for (std::size_t step = 0; step < b; ++step) trace.arrive(low).send();
    return drain_extend(config, std::move(trace));
}

std::vector<Trace> split_phases(const SwitchConfig& config, const Trace& trace) {
    std::vector<std::size_t> arrivals_after(trace.size() + 1, 0);
    for (std::size_t t = trace.size(); t-- > 0;) {
        arrivals_after[t] = arrivals_after[t + 1] + (trace.events[t].is_arrive() ? 1 : 0);
    }

    std::vector<Trace> phases;
    GreedyPolicy greedy;
    SimulationCursor cursor(config);
    std::size_t start = 0;
    bool seen_arrival = false;
    for (std::size_t t = 0; t < trace.size(); ++t) {
        const Event& e = trace.events[t];
        cursor.apply(e, greedy);
        seen_arrival = seen_arrival || e.is_arrive();
        if (e.is_send() && seen_arrival && cursor.state().total() == 0 && arrivals_after[t + 1] > 0) {
            Trace phase;
            phase.events.assign(trace.events.begin() + static_cast<std::ptrdiff_t>(start),
                                trace.events.begin() + static_cast<std::ptrdiff_t>(t + 1));
            phases.push_back(drain_extend(config, std::move(phase)));
            start = t + 1;
            seen_arrival = false;
        }
    }
    if (start < trace.size()) {
        Trace phase;
        phase.events.assign(trace.events.begin() + static_cast<std::ptrdiff_t>(start), trace.events.end());
        phases.push_back(drain_extend(config, std::move(phase)));
    }
    return phases;
}

namespace {

struct Instance {
    std::string id;
    SwitchConfig config;
    Trace trace;
};

std::uint64_t instance_seed(std::uint64_t seed, std::size_t trial) {
    return seed * 1'000'003ULL + trial;
}

std::vector<Value> random_values(Xorshift64Star& rng, std::size_t m) {
    std::vector<Value> values;
    switch (rng.below(3)) {
        case 0: {
            Value v = rng.between(1, 3);
            for (std::size_t i = 0; i < m; ++i, v += rng.between(1, 5)) values.push_back(v);
            break;
        }
        case 1: {
            const Value factor = rng.between(2, 4);
            Value v = rng.between(1, 2);
            for (std::size_t i = 0; i < m; ++i, v *= factor) values.push_back(v);
            break;
        }
        default: {
            // consecutive integers: r close to 1
            const Value base = rng.between(3, 20);
            for (std::size_t i = 0; i < m; ++i) values.push_back(base + static_cast<Value>(i));
            break;
        }
    }
    return values;
}

SwitchConfig random_config(Xorshift64Star& rng, InstanceClass cls, const SuiteParams& p, std::size_t trial,
                           std::size_t min_values) {
    switch (cls) {
        case InstanceClass::TwoValued: {
            const Value alpha = p.alphas.at(trial % p.alphas.size());
            return SwitchConfig::restricted({1, alpha}, rng.between(1, p.max_capacity));
        }
        case InstanceClass::General: {
            const auto n = static_cast<std::size_t>(rng.between(2, 4));
            const auto m = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(min_values), 3));
            std::vector<QueueSpec> queues;
            for (std::size_t k = 0; k < n; ++k) {
                queues.push_back({static_cast<std::size_t>(rng.below(m)), rng.between(1, p.max_capacity)});
            }
            return SwitchConfig::create(random_values(rng, m), std::move(queues));
        }
        case InstanceClass::Restricted:
        case InstanceClass::Mixed:
            break;
    }
    const auto m = static_cast<std::size_t>(
        rng.between(static_cast<std::int64_t>(min_values), static_cast<std::int64_t>(p.max_values)));
    return SwitchConfig::restricted(random_values(rng, m), rng.between(1, p.max_capacity));
}

Trace random_trace(Xorshift64Star& rng, const SwitchConfig& config, const SuiteParams& p) {
    const auto steps = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.max_steps)));
    const std::uint64_t trace_seed = rng();
    if (rng.below(4) == 0) {
        const auto burst_len = static_cast<std::size_t>(rng.between(1, 4));
        const auto burst_size = static_cast<std::size_t>(
            rng.between(1, std::min<std::int64_t>(p.max_capacity + 1, static_cast<std::int64_t>(p.max_arrivals_per_step))));
        return gen_bursty(config, steps, burst_len, burst_size, trace_seed);
    }
    const auto arrivals =
        static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(p.max_arrivals_per_step)));
    return gen_random(config, steps, arrivals, trace_seed);
}

/// `allowed` lists the classes a suite applies to; Mixed cycles through them.
Instance make_instance(const SuiteParams& p, std::uint64_t seed, std::size_t trial,
                       std::initializer_list<InstanceClass> allowed, std::size_t min_values = 1) {
    const std::uint64_t s = instance_seed(seed, trial);
    Xorshift64Star rng(s);
    InstanceClass cls = p.instance_class;
    if (cls == InstanceClass::Mixed) cls = *(allowed.begin() + static_cast<std::ptrdiff_t>(trial % allowed.size()));
    SwitchConfig config = random_config(rng, cls, p, trial, min_values);
    Trace trace = random_trace(rng, config, p);
    return {"seed:" + std::to_string(s), std::move(config), std::move(trace)};
}

std::vector<std::unique_ptr<Policy>> comparison_policies(std::uint64_t seed) {
    std::vector<std::unique_ptr<Policy>> out;
    out.push_back(std::make_unique<RoundRobinPolicy>());
    out.push_back(std::make_unique<LowestValueFirstPolicy>());
    out.push_back(std::make_unique<SeededRandomPolicy>(seed));
    return out;
}

Failure make_failure(const Instance& inst, std::string inequality, std::string witness,
                     std::vector<std::pair<std::string, DecisionLog>> schedules = {}) {
    return {inst.id,
            std::move(inequality),
            std::move(witness),
            serialize_config(inst.config),
            serialize_trace(inst.trace),
            std::move(schedules)};
}

std::string counts_to_string(const std::vector<Count>& counts) {
    std::string out = "[";
    for (std::size_t i = 0; i < counts.size(); ++i) out += (i ? "," : "") + std::to_string(counts[i]);
    return out + "]";
}

/// Runs `body` on the instance, counting oracle refusals as skips.
template <typename Body>
void run_instance(CheckReport& report, Body&& body) {
    try {
        body();
        ++report.instances_tested;
    } catch (const OracleLimitError&) {
        ++report.instances_skipped;
    }
}

// --- suites ----------------------------------------------------------------

void check_upper_bound(CheckReport& report, const Instance& inst, const SuiteParams& p) {
    run_instance(report, [&] {
        GreedyPolicy greedy;
        const SimulationResult alg = simulate(inst.config, inst.trace, greedy);
        const OracleResult opt = optimal_benefit(inst.config, inst.trace, p.oracle);
        const Rational bound = p.bound_override.value_or(applicable_bound(inst.config));
        const Rational ratio = alg.benefit > 0 ? Rational(opt.optimal_benefit, alg.benefit) : Rational(1);
        if (!(ratio <= bound)) {
            report.failures.push_back(make_failure(
                inst, "OPT/GREEDY <= " + bound.to_string(),
                "OPT=" + std::to_string(opt.optimal_benefit) + " GREEDY=" + std::to_string(alg.benefit) +
                    " ratio=" + ratio.to_string(),
                {{"greedy", alg.decision_log}, {"opt", opt.schedule}}));
        }
    });
}

CheckReport suite_upper_bounds(const SuiteParams& p, std::uint64_t seed) {
    CheckReport report{"upper-bounds", 0, 0, {}};
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
        check_upper_bound(report,
                          make_instance(p, seed, trial,
                                        {InstanceClass::Restricted, InstanceClass::TwoValued, InstanceClass::General}),
                          p);
    }
    // equality cases
    for (const Value alpha : p.alphas) {
        for (Count b = 1; b <= p.max_capacity; ++b) {
            const auto config = SwitchConfig::restricted({1, alpha}, b);
            check_upper_bound(report,
                              {"tight:alpha=" + std::to_string(alpha) + ",B=" + std::to_string(b), config,
                               tight_two_valued_trace(config)},
                              p);
        }
    }
    for (const auto& values : {std::vector<Value>{1, 2}, {1, 2, 4}, {1, 3, 9, 27}}) {
        GreedyPolicy greedy;
        const auto tx = build_lower_bound_instance(values, greedy);
        check_upper_bound(report, {"adversary:greedy", tx.config, tx.trace}, p);
    }
    return report;
}

CheckReport suite_lower_bound(const SuiteParams& p, std::uint64_t seed) {
    CheckReport report{"lower-bound", 0, 0, {}};
    std::vector<std::vector<Value>> value_sets{{1, 2}, {1, 2, 4}, {1, 3, 9, 27}};
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
        Xorshift64Star rng(instance_seed(seed, trial));
        value_sets.push_back(random_values(rng, static_cast<std::size_t>(rng.between(1, 6))));
    }

    for (const auto& values : value_sets) {
        const Rational lower = compute_bounds(values).lower_bound;
        std::vector<std::unique_ptr<Policy>> policies;
        policies.push_back(std::make_unique<GreedyPolicy>());
        policies.push_back(std::make_unique<RoundRobinPolicy>());
        policies.push_back(std::make_unique<LowestValueFirstPolicy>());
        for (auto& policy : policies) {
            const std::string id = "adversary:" + policy->name() + ":" + serialize_config(SwitchConfig::restricted(values, 1));
            try {
                const AdversaryTranscript tx = build_lower_bound_instance(values, *policy);
                const Instance inst{id, tx.config, tx.trace};
                run_instance(report, [&] {
                    const std::vector<std::pair<std::string, DecisionLog>> logs{
                        {policy->name(), tx.alg_schedule}, {"adv", tx.adv_schedule}};
                    if (!(tx.ratio() >= lower)) {
                        report.failures.push_back(make_failure(inst, "ADV/ALG >= " + lower.to_string(),
                                                               "ratio=" + tx.ratio().to_string(), logs));
                    }
                    const OracleResult opt = optimal_benefit(tx.config, tx.trace, p.oracle);
                    if (opt.optimal_benefit < tx.adv_benefit) {
                        report.failures.push_back(make_failure(inst, "OPT >= ADV",
                                                               "OPT=" + std::to_string(opt.optimal_benefit) +
                                                                   " ADV=" + std::to_string(tx.adv_benefit),
                                                               logs));
                    }
                });
            } catch (const std::logic_error& e) {
                ++report.instances_tested;
                report.failures.push_back(
                    {id, "transcript invariants", e.what(), serialize_config(SwitchConfig::restricted(values, 1)), "", {}});
            }
        }
    }
    return report;
}

CheckReport suite_lemma_vm(const SuiteParams& p, std::uint64_t seed) {
    CheckReport report{"lemma-vm", 0, 0, {}};
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
        const Instance inst = make_instance(p, seed, trial, {InstanceClass::Restricted, InstanceClass::TwoValued});
        run_instance(report, [&] {
            const std::size_t top = inst.config.num_values() - 1;
            GreedyPolicy greedy;
            const SimulationResult alg = simulate(inst.config, inst.trace, greedy);
            const Count best = max_count_for_value(inst.config, inst.trace, top, p.oracle);
            if (best != alg.sent_per_value[top]) {
                report.failures.push_back(make_failure(inst, "max v_m count = GREEDY v_m count",
                                                       "max=" + std::to_string(best) +
                                                           " GREEDY=" + std::to_string(alg.sent_per_value[top]),
                                                       {{"greedy", alg.decision_log}}));
            }
            const OracleResult opt = optimal_benefit(inst.config, inst.trace, p.oracle);
            if (opt.accepted_per_value[top] != alg.accepted_per_value[top]) {
                report.failures.push_back(make_failure(
                    inst, "A*_m = A_m", "A*=" + counts_to_string(opt.accepted_per_value) +
                                            " A=" + counts_to_string(alg.accepted_per_value),
                    {{"greedy", alg.decision_log}, {"opt", opt.schedule}}));
            }
        });
    }
    return report;
}

CheckReport suite_lemma_central(const SuiteParams& p, std::uint64_t seed) {
    CheckReport report{"lemma-central", 0, 0, {}};
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
        const Instance inst =
            make_instance(p, seed, trial, {InstanceClass::Restricted, InstanceClass::TwoValued}, /*min_values=*/2);
        run_instance(report, [&] {
            const auto values = inst.config.values();
            const std::size_t m = values.size();
            GreedyPolicy greedy;
            const SimulationResult alg = simulate(inst.config, inst.trace, greedy);
            const auto& a = alg.accepted_per_value;

            std::vector<std::pair<std::string, SimulationResult>> subjects;
            const OracleResult opt = optimal_benefit(inst.config, inst.trace, p.oracle);
            subjects.emplace_back("opt", replay(inst.config, inst.trace, opt.schedule));
            for (auto& policy : comparison_policies(instance_seed(seed, trial))) {
                subjects.emplace_back(policy->name(), simulate(inst.config, inst.trace, *policy));
            }

            for (const auto& [name, other] : subjects) {
                const auto& as = other.accepted_per_value;
                const std::vector<std::pair<std::string, DecisionLog>> logs{{"greedy", alg.decision_log},
                                                                            {name, other.decision_log}};
                const std::string counts = "A=" + counts_to_string(a) + " A^S=" + counts_to_string(as);
                for (std::size_t i = 0; i + 1 < m; ++i) {
                    Count lhs = 0;
                    Count rhs = 0;
                    for (std::size_t j = i; j + 1 < m; ++j) lhs += as[j] - a[j];
                    for (std::size_t j = i + 1; j < m; ++j) rhs += a[j];
                    if (lhs > rhs) {
                        report.failures.push_back(make_failure(
                            inst, "sum_{j>=i}^{m-1}(A^S_j - A_j) <= sum_{j>i} A_j (i=" + std::to_string(i + 1) + ", S=" + name + ")",
                            counts, logs));
                    }
                }
                Benefit lhs = 0;
                Benefit rhs = 0;
                for (std::size_t j = 0; j + 1 < m; ++j) {
                    lhs += values[j] * (as[j] - a[j]);
                    rhs += values[j] * a[j + 1];
                }
                if (lhs > rhs) {
                    report.failures.push_back(make_failure(
                        inst, "sum v_j (A^S_j - A_j) <= sum v_j A_{j+1} (S=" + name + ")",
                        counts + " lhs=" + std::to_string(lhs) + " rhs=" + std::to_string(rhs), logs));
                }
            }

            Benefit num = 0;
            Benefit den = 0;
            for (std::size_t j = 0; j + 1 < m; ++j) {
                num += values[j] * a[j + 1];
                den += values[j + 1] * a[j + 1];
            }
            const Rational r = compute_bounds(values).r;
            if (den > 0 && !(Rational(num, den) <= r)) {
                report.failures.push_back(make_failure(inst, "sum v_j A_{j+1} / sum v_{j+1} A_{j+1} <= r",
                                                       "ratio=" + Rational(num, den).to_string() +
                                                           " r=" + r.to_string(),
                                                       {{"greedy", alg.decision_log}}));
            }
        });
    }
    return report;
}

CheckReport suite_lemma_queuesize(const SuiteParams& p, std::uint64_t seed) {
    CheckReport report{"lemma-queuesize", 0, 0, {}};
    SuiteParams two = p;
    two.instance_class = InstanceClass::TwoValued;
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
        const Instance inst = make_instance(two, seed, trial, {InstanceClass::TwoValued});
        run_instance(report, [&] {
            const Count b = *inst.config.common_capacity();
            GreedyPolicy greedy;
            const SimulationResult alg = simulate(inst.config, inst.trace, greedy);

            std::vector<std::pair<std::string, SimulationResult>> subjects;
            const OracleResult opt = optimal_benefit(inst.config, inst.trace, p.oracle);
            subjects.emplace_back("opt", replay(inst.config, inst.trace, opt.schedule));
            for (auto& policy : comparison_policies(instance_seed(seed, trial))) {
                subjects.emplace_back(policy->name(), simulate(inst.config, inst.trace, *policy));
            }
            for (const auto& [name, other] : subjects) {
                for (std::size_t t = 0; t < alg.occupancy_timeline.size(); ++t) {
                    if (other.occupancy_timeline[t] > alg.occupancy_timeline[t] + b) {
                        report.failures.push_back(make_failure(
                            inst, "b^S(t) <= b(t) + B (S=" + name + ")",
                            "t=" + std::to_string(t) + " b^S=" + std::to_string(other.occupancy_timeline[t]) +
                                " b=" + std::to_string(alg.occupancy_timeline[t]) + " B=" + std::to_string(b),
                            {{"greedy", alg.decision_log}, {name, other.decision_log}}));
                        break;
                    }
                }
            }
        });
    }
    return report;
}

CheckReport suite_lemma_two_valued(const SuiteParams& p, std::uint64_t seed) {
    CheckReport report{"lemma-two-valued", 0, 0, {}};
    SuiteParams two = p;
    two.instance_class = InstanceClass::TwoValued;
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
        const Instance whole = make_instance(two, seed, trial, {InstanceClass::TwoValued});
        run_instance(report, [&] {
            const auto phases = split_phases(whole.config, whole.trace);
            for (std::size_t ph = 0; ph < phases.size(); ++ph) {
                const Instance inst{whole.id + ":phase" + std::to_string(ph), whole.config, phases[ph]};
                GreedyPolicy greedy;
                const SimulationResult alg = simulate(inst.config, inst.trace, greedy);
                const OracleResult opt = optimal_benefit(inst.config, inst.trace, p.oracle);
                const Count a1 = alg.accepted_per_value[0];
                const Count o1 = opt.accepted_per_value[0];
                if (o1 - a1 > a1) {
                    report.failures.push_back(make_failure(inst, "A*_1 - A_1 <= A_1",
                                                           "A*_1=" + std::to_string(o1) + " A_1=" + std::to_string(a1),
                                                           {{"greedy", alg.decision_log}, {"opt", opt.schedule}}));
                }
            }
        });
    }
    return report;
}

Instance tiny_instance(std::uint64_t seed, std::size_t trial) {
    const std::uint64_t s = instance_seed(seed, trial);
    Xorshift64Star rng(s);
    std::optional<SwitchConfig> config;
    if (rng.below(2) == 0) {
        const auto m = static_cast<std::size_t>(rng.between(1, 4));
        config = SwitchConfig::restricted(random_values(rng, m), rng.between(1, 2));
    } else {
        const auto n = static_cast<std::size_t>(rng.between(1, 4));
        const auto m = static_cast<std::size_t>(rng.between(1, 3));
        std::vector<QueueSpec> queues;
        for (std::size_t k = 0; k < n; ++k) {
            queues.push_back({static_cast<std::size_t>(rng.below(m)), rng.between(1, 3)});
        }
        config = SwitchConfig::create(random_values(rng, m), std::move(queues));
    }
    // at most 4 steps with at most 2 arrivals keeps the drained trace within 12 sends
    Trace trace = gen_random(*config, static_cast<std::size_t>(rng.between(1, 4)), 2, rng());
    return {"seed:" + std::to_string(s), std::move(*config), std::move(trace)};
}

CheckReport suite_oracle_cross(const SuiteParams& p, std::uint64_t seed) {
    CheckReport report{"oracle-cross", 0, 0, {}};
    for (std::size_t trial = 0; trial < p.trials; ++trial) {
        const Instance inst = tiny_instance(seed, trial);
        run_instance(report, [&] {
            const OracleResult opt = optimal_benefit(inst.config, inst.trace, p.oracle);
            const Benefit brute = brute_force_benefit(inst.config, inst.trace);
            if (brute != opt.optimal_benefit) {
                report.failures.push_back(make_failure(inst, "DP = brute force",
                                                       "DP=" + std::to_string(opt.optimal_benefit) +
                                                           " brute=" + std::to_string(brute),
                                                       {{"opt", opt.schedule}}));
            }
            const Benefit replayed = replay(inst.config, inst.trace, opt.schedule).benefit;
            if (replayed != opt.optimal_benefit) {
                report.failures.push_back(make_failure(inst, "replay(schedule) = optimal_benefit",
                                                       "replay=" + std::to_string(replayed), {{"opt", opt.schedule}}));
            }
            GreedyPolicy greedy;
            const Benefit alg = simulate(inst.config, inst.trace, greedy).benefit;
            if (opt.optimal_benefit < alg) {
                report.failures.push_back(make_failure(inst, "OPT >= GREEDY",
                                                       "OPT=" + std::to_string(opt.optimal_benefit) +
                                                           " GREEDY=" + std::to_string(alg)));
            }

            Trace more_sends = inst.trace;
            more_sends.send();
            const Benefit with_send = optimal_benefit(inst.config, more_sends, p.oracle).optimal_benefit;
            Xorshift64Star rng(instance_seed(seed, trial) ^ 0xA5A5A5A5ULL);
            Trace more_arrivals = inst.trace;
            more_arrivals.arrive(rng.below(inst.config.num_queues()));
            more_arrivals = drain_extend(inst.config, std::move(more_arrivals));
            const Benefit with_arrival = optimal_benefit(inst.config, more_arrivals, p.oracle).optimal_benefit;
            if (with_send < opt.optimal_benefit || with_arrival < opt.optimal_benefit) {
                report.failures.push_back(make_failure(inst, "OPT monotone under appended events",
                                                       "OPT=" + std::to_string(opt.optimal_benefit) +
                                                           " +send=" + std::to_string(with_send) +
                                                           " +arrive=" + std::to_string(with_arrival)));
            }
        });
    }
    return report;
}

}  // namespace

CheckReport run_suite(std::string_view suite_name, const SuiteParams& params, std::uint64_t seed) {
    using SuiteFn = CheckReport (*)(const SuiteParams&, std::uint64_t);
    static constexpr std::pair<std::string_view, SuiteFn> kSuites[] = {
        {"upper-bounds", suite_upper_bounds},
        {"lower-bound", suite_lower_bound},
        {"lemma-vm", suite_lemma_vm},
        {"lemma-central", suite_lemma_central},
        {"lemma-queuesize", suite_lemma_queuesize},
        {"lemma-two-valued", suite_lemma_two_valued},
        {"oracle-cross", suite_oracle_cross},
    };
    for (const auto& [name, fn] : kSuites) {
        if (name == suite_name) return fn(params, seed);
    }
    throw ValidationError("suite: unknown suite \"" + std::string(suite_name) + "\"");
}

std::string report_to_json(const CheckReport& report) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["suite"] = report.suite;
    doc["instances_tested"] = report.instances_tested;
    doc["instances_skipped"] = report.instances_skipped;
    doc["passed"] = report.passed();
    doc["failures"] = ordered_json::array();
    for (const auto& f : report.failures) {
        ordered_json entry;
        entry["instance"] = f.instance_id;
        entry["inequality"] = f.inequality;
        entry["witness"] = f.witness;
        entry["config"] = f.config_json.empty() ? ordered_json() : ordered_json::parse(f.config_json);
        entry["trace"] = f.trace_jsonl;
        entry["schedules"] = ordered_json::object();
        for (const auto& [name, log] : f.schedules) entry["schedules"][name] = serialize_decision_log(log);
        doc["failures"].push_back(std::move(entry));
    }
    return doc.dump(2);
}

}  // namespace segbuf
