#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "segbuf/engine.hpp"
#include "segbuf/model.hpp"

namespace segbuf {

/// Result of running the lower-bound construction against one online policy.
///
/// The config has one unit-capacity queue per value, so queue k holds value
/// index k. In step t the arriving set V_t is all values the policy has not
/// yet sent; V_{t+1} = V_t minus s_t, where s_t is the value the policy sent
/// in step t. The offline schedule sends s_{t+1} in step t (t < m) and drains
/// everything in descending value order during steps m..2m-1.
struct AdversaryTranscript {
    SwitchConfig config;
    Trace trace;
    std::vector<std::size_t> observed_sends;          // s_1..s_m as value indices
    std::vector<std::vector<std::size_t>> value_sets; // V_1..V_m, ascending value indices
    DecisionLog alg_schedule;
    DecisionLog adv_schedule;
    Benefit alg_benefit = 0;
    Benefit adv_benefit = 0;
    Count alg_rejected = 0;

    Rational ratio() const { return Rational(adv_benefit, alg_benefit); }
};

/// Builds the instance step by step inside the engine, so any deterministic
/// policy can be attacked. Randomized policies are refused with
/// ValidationError. Transcript invariants are verified before returning.
AdversaryTranscript build_lower_bound_instance(std::span<const Value> values, Policy& policy);

/// Each step draws 0..arrivals_per_step_max arrivals at uniform queues, then
/// one send. The result is drained.
Trace gen_random(const SwitchConfig& config, std::size_t steps, std::size_t arrivals_per_step_max,
                 std::uint64_t seed);

/// Alternating burst and quiet phases of burst_len steps each, starting with
/// a burst. A burst phase picks a random non-empty subset of queues; every
/// step of the phase delivers burst_size packets to each of them, then sends
/// once. Quiet steps only send. The result is drained.
Trace gen_bursty(const SwitchConfig& config, std::size_t steps, std::size_t burst_len, std::size_t burst_size,
                 std::uint64_t seed);

}  // namespace segbuf
