#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segbuf/model.hpp"

namespace segbuf {

/// Queue served at one send event; nullopt records an idle send (all queues empty).
using SendDecision = std::optional<std::size_t>;
using DecisionLog = std::vector<SendDecision>;

struct QueueState {
    std::vector<Count> occupancy;  // one entry per queue, 0..B_k
    std::size_t step = 1;          // step whose send event comes next (1-based)
    std::size_t sends_done = 0;

    bool any_nonempty() const noexcept;
    Count total() const noexcept;
};

/// Chooses which queue serves a send event. Acceptance is not a policy
/// decision: the engine accepts every arrival that fits.
///
/// choose() is called at every send event and must return a non-empty queue
/// whenever one exists, and nullopt otherwise. The engine rejects anything else.
class Policy {
public:
    virtual ~Policy() = default;

    virtual std::string name() const = 0;
    virtual SendDecision choose(const SwitchConfig& config, const QueueState& state) = 0;
    /// Restores the initial internal state; called at the start of each simulation.
    virtual void reset() {}
    virtual bool is_deterministic() const { return true; }
};

struct SimulationResult {
    Benefit benefit = 0;
    std::vector<Count> accepted_per_value;
    std::vector<Count> sent_per_value;
    std::vector<Count> occupancy_timeline;  // total occupancy after each event
    DecisionLog decision_log;               // one entry per send event
    Count rejected_count = 0;

    friend bool operator==(const SimulationResult&, const SimulationResult&) = default;
};

/// Resumable simulation: callers feed events one at a time and may inspect
/// the state in between. simulate() and the lower-bound adversary are both
/// built on this.
class SimulationCursor {
public:
    explicit SimulationCursor(SwitchConfig config);

    /// Returns true if the packet was accepted.
    bool arrive(std::size_t queue);
    /// Asks the policy, validates its answer and applies it.
    SendDecision send(Policy& policy);
    /// Applies a fixed decision. Throws DiligenceError if a diligent
    /// algorithm could not have made it.
    void send(SendDecision decision);
    void apply(const Event& event, Policy& policy);

    const SwitchConfig& config() const noexcept { return config_; }
    const QueueState& state() const noexcept { return state_; }
    const SimulationResult& result() const noexcept { return result_; }
    SimulationResult take_result() && { return std::move(result_); }

private:
    SwitchConfig config_;
    QueueState state_;
    SimulationResult result_;
};

SimulationResult simulate(const SwitchConfig& config, const Trace& trace, Policy& policy);

/// Re-executes a fixed schedule. The log must hold one entry per send event.
SimulationResult replay(const SwitchConfig& config, const Trace& trace, const DecisionLog& log);

/// JSON Lines: {"send":<queue>} or {"send":"idle"}.
std::string serialize_decision_log(const DecisionLog& log);
DecisionLog parse_decision_log(std::string_view text);

}  // namespace segbuf
