#pragma once

#include <cstdint>
#include <vector>

#include "segbuf/engine.hpp"
#include "segbuf/model.hpp"

namespace segbuf {

struct OracleOptions {
    /// Refuse when (#events + 1) * prod(B_k + 1) exceeds this.
    std::uint64_t max_states = 100'000'000;
    /// Layers with at most this many potential states use a dense index.
    std::uint64_t dense_threshold = std::uint64_t{1} << 20;
};

struct OracleResult {
    Benefit optimal_benefit = 0;
    DecisionLog schedule;                 // canonical optimal schedule
    std::vector<Count> accepted_per_value;
    std::uint64_t state_count = 0;        // reachable (event, occupancy) pairs
};

/// Exact offline optimum over all diligent send schedules.
///
/// Dynamic program over (event index, occupancy vector) with occupancies
/// packed as mixed-radix integers (radix B_k + 1). Arrivals are forced
/// transitions; sends branch over the non-empty queues. Among optimal
/// schedules the one that picks the lowest queue index at the earliest
/// differing send is returned. The schedule is replayed through the engine
/// before returning and must reproduce optimal_benefit.
///
/// Throws OracleLimitError when the state space exceeds options.max_states.
OracleResult optimal_benefit(const SwitchConfig& config, const Trace& trace, const OracleOptions& options = {});

/// Maximum number of sent packets of one value over all diligent schedules.
Count max_count_for_value(const SwitchConfig& config, const Trace& trace, std::size_t value_index,
                          const OracleOptions& options = {});

/// Exhaustive enumeration of every diligent schedule. Independent of the DP;
/// limited to 12 send events and 4 queues.
Benefit brute_force_benefit(const SwitchConfig& config, const Trace& trace);

inline constexpr std::size_t kBruteForceMaxSends = 12;
inline constexpr std::size_t kBruteForceMaxQueues = 4;

}  // namespace segbuf
