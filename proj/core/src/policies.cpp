#include "segbuf/policies.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "segbuf/errors.hpp"

namespace segbuf {

std::size_t greedy_choose(const SwitchConfig& config, const QueueState& state) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < state.occupancy.size(); ++k) {
        if (state.occupancy[k] == 0) continue;
        if (!best || config.queue_value(k) > config.queue_value(*best)) best = k;
    }
    return best.value();
}

std::size_t lowest_value_choose(const SwitchConfig& config, const QueueState& state) {
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < state.occupancy.size(); ++k) {
        if (state.occupancy[k] == 0) continue;
        if (!best || config.queue_value(k) < config.queue_value(*best)) best = k;
    }
    return best.value();
}

SendDecision GreedyPolicy::choose(const SwitchConfig& config, const QueueState& state) {
    if (!state.any_nonempty()) return std::nullopt;
    return greedy_choose(config, state);
}

SendDecision LowestValueFirstPolicy::choose(const SwitchConfig& config, const QueueState& state) {
    if (!state.any_nonempty()) return std::nullopt;
    return lowest_value_choose(config, state);
}

SendDecision RoundRobinPolicy::choose(const SwitchConfig&, const QueueState& state) {
    const std::size_t n = state.occupancy.size();
    const std::size_t start = last_ ? (*last_ + 1) % n : 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = (start + i) % n;
        if (state.occupancy[k] > 0) {
            last_ = k;
            return k;
        }
    }
    return std::nullopt;
}

SendDecision SeededRandomPolicy::choose(const SwitchConfig&, const QueueState& state) {
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < state.occupancy.size(); ++k) {
        if (state.occupancy[k] > 0) candidates.push_back(k);
    }
    if (candidates.empty()) return std::nullopt;
    return candidates[rng_.below(candidates.size())];
}

SendDecision ReplayPolicy::choose(const SwitchConfig&, const QueueState& state) {
    if (next_ >= log_.size()) {
        throw DiligenceError(state.sends_done, "decision log exhausted");
    }
    return log_[next_++];
}

std::unique_ptr<Policy> make_policy(std::string_view name) {
    if (name == "greedy") return std::make_unique<GreedyPolicy>();
    if (name == "round-robin") return std::make_unique<RoundRobinPolicy>();
    if (name == "lowest-first") return std::make_unique<LowestValueFirstPolicy>();
    if (name.starts_with("random:")) {
        const auto digits = name.substr(7);
        std::uint64_t seed = 0;
        const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), seed);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw ValidationError("policy: bad seed in \"" + std::string(name) + "\"");
        }
        return std::make_unique<SeededRandomPolicy>(seed);
    }
    if (name.starts_with("replay:")) {
        const std::string path(name.substr(7));
        std::ifstream in(path, std::ios::binary);
        if (!in) throw ValidationError("policy: cannot read decision log \"" + path + "\"");
        std::ostringstream text;
        text << in.rdbuf();
        return std::make_unique<ReplayPolicy>(parse_decision_log(text.str()), path);
    }
    throw ValidationError("policy: unknown policy \"" + std::string(name) + "\"");
}

}  // namespace segbuf
