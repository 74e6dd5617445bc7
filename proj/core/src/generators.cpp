#include "segbuf/adversary.hpp"
#include "segbuf/rng.hpp"

namespace segbuf {

Trace gen_random(const SwitchConfig& config, std::size_t steps, std::size_t arrivals_per_step_max,
                 std::uint64_t seed) {
    Xorshift64Star rng(seed);
    Trace trace;
    for (std::size_t s = 0; s < steps; ++s) {
        const auto arrivals = rng.below(arrivals_per_step_max + 1);
        for (std::uint64_t a = 0; a < arrivals; ++a) trace.arrive(rng.below(config.num_queues()));
        trace.send();
    }
    return drain_extend(config, std::move(trace));
}

Trace gen_bursty(const SwitchConfig& config, std::size_t steps, std::size_t burst_len, std::size_t burst_size,
                 std::uint64_t seed) {
    Xorshift64Star rng(seed);
    const std::size_t n = config.num_queues();
    Trace trace;
    std::vector<std::size_t> targets;
    for (std::size_t s = 0; s < steps; ++s) {
        const bool bursting = burst_len > 0 && (s / burst_len) % 2 == 0;
        if (bursting && s % burst_len == 0) {
            targets.clear();
            for (std::size_t k = 0; k < n; ++k) {
                if (rng.below(2) == 1) targets.push_back(k);
            }
            if (targets.empty()) targets.push_back(rng.below(n));
        }
        if (bursting) {
            for (const std::size_t k : targets) {
                for (std::size_t i = 0; i < burst_size; ++i) trace.arrive(k);
            }
        }
        trace.send();
    }
    return drain_extend(config, std::move(trace));
}

}  // namespace segbuf
