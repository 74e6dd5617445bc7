#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "segbuf/engine.hpp"
#include "segbuf/rng.hpp"

namespace segbuf {

/// Highest-valued non-empty queue, lowest index among equal values.
/// Precondition: some queue is non-empty.
std::size_t greedy_choose(const SwitchConfig& config, const QueueState& state);

/// Mirror of greedy_choose: lowest-valued non-empty queue, lowest index on ties.
std::size_t lowest_value_choose(const SwitchConfig& config, const QueueState& state);

class GreedyPolicy final : public Policy {
public:
    std::string name() const override { return "greedy"; }
    SendDecision choose(const SwitchConfig& config, const QueueState& state) override;
};

class LowestValueFirstPolicy final : public Policy {
public:
    std::string name() const override { return "lowest-first"; }
    SendDecision choose(const SwitchConfig& config, const QueueState& state) override;
};

/// Serves the first non-empty queue after the one served last, wrapping around.
class RoundRobinPolicy final : public Policy {
public:
    std::string name() const override { return "round-robin"; }
    SendDecision choose(const SwitchConfig& config, const QueueState& state) override;
    void reset() override { last_.reset(); }

private:
    std::optional<std::size_t> last_;
};

/// Uniform over the non-empty queues, driven by a seeded xorshift64*.
class SeededRandomPolicy final : public Policy {
public:
    explicit SeededRandomPolicy(std::uint64_t seed) : seed_(seed), rng_(seed) {}

    std::string name() const override { return "random:" + std::to_string(seed_); }
    SendDecision choose(const SwitchConfig& config, const QueueState& state) override;
    void reset() override { rng_.reseed(seed_); }
    bool is_deterministic() const override { return false; }

private:
    std::uint64_t seed_;
    Xorshift64Star rng_;
};

/// Plays back a recorded decision log. Decisions are validated by the engine.
class ReplayPolicy final : public Policy {
public:
    ReplayPolicy(DecisionLog log, std::string source = "log")
        : log_(std::move(log)), source_(std::move(source)) {}

    std::string name() const override { return "replay:" + source_; }
    SendDecision choose(const SwitchConfig& config, const QueueState& state) override;
    void reset() override { next_ = 0; }

private:
    DecisionLog log_;
    std::string source_;
    std::size_t next_ = 0;
};

/// greedy | round-robin | lowest-first | random:<seed> | replay:<logfile>.
/// Throws ValidationError for unknown names; replay reads the log file.
std::unique_ptr<Policy> make_policy(std::string_view name);

}  // namespace segbuf
