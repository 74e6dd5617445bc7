#include "segbuf/engine.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "segbuf/errors.hpp"

namespace segbuf {

bool QueueState::any_nonempty() const noexcept {
    return std::any_of(occupancy.begin(), occupancy.end(), [](Count c) { return c > 0; });
}

Count QueueState::total() const noexcept {
    return std::accumulate(occupancy.begin(), occupancy.end(), Count{0});
}

SimulationCursor::SimulationCursor(SwitchConfig config) : config_(std::move(config)) {
    state_.occupancy.assign(config_.num_queues(), 0);
    result_.accepted_per_value.assign(config_.num_values(), 0);
    result_.sent_per_value.assign(config_.num_values(), 0);
}

bool SimulationCursor::arrive(std::size_t queue) {
    if (queue >= config_.num_queues()) {
        throw ValidationError("arrival at queue " + std::to_string(queue) + ": queue index out of range");
    }
    const bool accepted = state_.occupancy[queue] < config_.capacity(queue);
    if (accepted) {
        ++state_.occupancy[queue];
        ++result_.accepted_per_value[config_.queue_value_index(queue)];
    } else {
        ++result_.rejected_count;
    }
    result_.occupancy_timeline.push_back(state_.total());
    return accepted;
}

void SimulationCursor::send(SendDecision decision) {
    const std::size_t index = state_.sends_done;
    if (decision) {
        const std::size_t q = *decision;
        if (q >= config_.num_queues()) {
            throw DiligenceError(index, "step " + std::to_string(state_.step) + ": queue " + std::to_string(q) +
                                            " out of range");
        }
        if (state_.occupancy[q] == 0) {
            throw DiligenceError(index, "step " + std::to_string(state_.step) + ": queue " + std::to_string(q) +
                                            " is empty");
        }
        --state_.occupancy[q];
        const auto vi = config_.queue_value_index(q);
        ++result_.sent_per_value[vi];
        result_.benefit += config_.value(vi);
    } else if (state_.any_nonempty()) {
        throw DiligenceError(index, "step " + std::to_string(state_.step) + ": idle while a queue is non-empty");
    }
    result_.decision_log.push_back(decision);
    result_.occupancy_timeline.push_back(state_.total());
    ++state_.sends_done;
    ++state_.step;
}

SendDecision SimulationCursor::send(Policy& policy) {
    const SendDecision decision = policy.choose(config_, state_);
    send(decision);
    return decision;
}

void SimulationCursor::apply(const Event& event, Policy& policy) {
    if (event.is_arrive()) {
        arrive(event.queue);
    } else {
        send(policy);
    }
}

SimulationResult simulate(const SwitchConfig& config, const Trace& trace, Policy& policy) {
    policy.reset();
    SimulationCursor cursor(config);
    for (const auto& e : trace.events) cursor.apply(e, policy);
    return std::move(cursor).take_result();
}

SimulationResult replay(const SwitchConfig& config, const Trace& trace, const DecisionLog& log) {
    if (log.size() != trace.send_count()) {
        throw ValidationError("decision log has " + std::to_string(log.size()) + " entries but the trace has " +
                              std::to_string(trace.send_count()) + " send events");
    }
    SimulationCursor cursor(config);
    std::size_t next = 0;
    for (const auto& e : trace.events) {
        if (e.is_arrive()) {
            cursor.arrive(e.queue);
        } else {
            cursor.send(log[next++]);
        }
    }
    return std::move(cursor).take_result();
}

std::string serialize_decision_log(const DecisionLog& log) {
    std::string out;
    for (const auto& d : log) {
        out += d ? R"({"send":)" + std::to_string(*d) + "}\n" : std::string(R"({"send":"idle"})") + "\n";
    }
    return out;
}

DecisionLog parse_decision_log(std::string_view text) {
    using nlohmann::json;
    DecisionLog log;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

        const std::string where = "line " + std::to_string(line_no) + ": ";
        json doc;
        try {
            doc = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError(where + "syntax error: " + e.what());
        }
        if (!doc.is_object() || !doc.contains("send")) throw ParseError(where + "expected {\"send\":...}");
        const json& v = doc["send"];
        if (v.is_string() && v.get<std::string>() == "idle") {
            log.emplace_back(std::nullopt);
        } else if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
            log.emplace_back(static_cast<std::size_t>(v.get<std::int64_t>()));
        } else {
            throw ParseError(where + "\"send\" must be a non-negative integer or \"idle\"");
        }
    }
    return log;
}

}  // namespace segbuf
