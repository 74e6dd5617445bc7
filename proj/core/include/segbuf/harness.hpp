#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "segbuf/engine.hpp"
#include "segbuf/model.hpp"
#include "segbuf/oracle.hpp"

namespace segbuf {

/// OPT/ALG on one instance, with the guarantee that applies to it.
struct RatioRecord {
    std::string instance_id;
    std::uint64_t seed = 0;
    std::string policy;
    Benefit alg_benefit = 0;
    Benefit opt_benefit = 0;
    Rational ratio{1};
    std::optional<Rational> bound;  // GREEDY only
    bool bound_satisfied = true;
    std::optional<Rational> slack;  // bound - ratio
    std::uint64_t states_explored = 0;
    double runtime_ms = 0.0;
};

/// True when no value is served by more than one queue.
bool one_queue_per_value(const SwitchConfig& config);

/// The upper bound proven for GREEDY on this config shape:
/// restricted two-valued (a+2)/(a+1), restricted 1+r, two-valued with one
/// queue per value (a+1)/a, otherwise 2.
///
/// Two-valued configs that give one value several queues get 2: they embed
/// the unit-value multi-queue problem, where any deterministic policy can be
/// forced above (a+1)/a.
Rational applicable_bound(const SwitchConfig& config);

/// Runs the policy and the oracle. When both benefits are zero the ratio is 1.
/// Bounds are attached for the greedy policy only; `bound_override`
/// substitutes a different bound (harness self-tests).
RatioRecord competitive_ratio(const SwitchConfig& config, const Trace& trace, Policy& policy,
                              const OracleOptions& oracle = {},
                              std::optional<Rational> bound_override = std::nullopt);

/// The equality case of the two-valued restricted bound: a full batch of
/// both values, then one low-value packet per step while GREEDY drains the
/// high queue. OPT/GREEDY = (a+2)/(a+1) for every capacity B.
Trace tight_two_valued_trace(const SwitchConfig& config);

/// Splits a trace at every send after which GREEDY's queues are empty and
/// more arrivals follow. Each piece starts from empty queues and is drained.
std::vector<Trace> split_phases(const SwitchConfig& config, const Trace& trace);

struct Failure {
    std::string instance_id;
    std::string inequality;
    std::string witness;
    std::string config_json;
    std::string trace_jsonl;
    std::vector<std::pair<std::string, DecisionLog>> schedules;
};

struct CheckReport {
    std::string suite;
    std::size_t instances_tested = 0;
    std::size_t instances_skipped = 0;  // over the oracle's state cap
    std::vector<Failure> failures;

    bool passed() const noexcept { return failures.empty(); }
};

enum class InstanceClass { Mixed, Restricted, TwoValued, General };

struct SuiteParams {
    std::size_t trials = 1000;
    /// Restricts generated configs. Mixed lets each suite cycle through the
    /// classes it applies to.
    InstanceClass instance_class = InstanceClass::Mixed;
    /// Two-valued configs use values {1, alpha} for these alphas.
    std::vector<Value> alphas{2, 3, 10};
    std::size_t max_values = 5;
    Count max_capacity = 3;
    std::size_t max_steps = 30;
    std::size_t max_arrivals_per_step = 4;
    std::optional<Rational> bound_override;
    OracleOptions oracle;
};

inline constexpr std::string_view kSuiteNames[] = {
    "upper-bounds",  "lower-bound",      "lemma-vm",    "lemma-central",
    "lemma-queuesize", "lemma-two-valued", "oracle-cross",
};

/// Throws ValidationError for an unknown suite name.
CheckReport run_suite(std::string_view suite_name, const SuiteParams& params, std::uint64_t seed);

/// JSON document with the counts and every failure's witness.
std::string report_to_json(const CheckReport& report);

}  // namespace segbuf
