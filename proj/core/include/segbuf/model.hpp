#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "segbuf/rational.hpp"

namespace segbuf {

using Value = std::int64_t;
using Count = std::int64_t;
using Benefit = std::int64_t;

struct QueueSpec {
    std::size_t value_index = 0;
    Count capacity = 1;

    friend bool operator==(const QueueSpec&, const QueueSpec&) = default;
};

/// Switch layout: a strictly increasing set of packet values and a list of
/// queues, each holding packets of exactly one of those values.
///
/// Instances are only obtainable through create() or parse_config(), so every
/// SwitchConfig in circulation satisfies its invariants.
class SwitchConfig {
public:
    /// Throws ValidationError naming the offending field.
    static SwitchConfig create(std::vector<Value> values, std::vector<QueueSpec> queues);

    /// One queue per value, every capacity equal to `capacity`.
    static SwitchConfig restricted(std::vector<Value> values, Count capacity);

    std::span<const Value> values() const noexcept { return values_; }
    std::span<const QueueSpec> queues() const noexcept { return queues_; }

    std::size_t num_values() const noexcept { return values_.size(); }
    std::size_t num_queues() const noexcept { return queues_.size(); }

    Value value(std::size_t value_index) const { return values_.at(value_index); }
    Value queue_value(std::size_t queue) const { return values_.at(queues_.at(queue).value_index); }
    std::size_t queue_value_index(std::size_t queue) const { return queues_.at(queue).value_index; }
    Count capacity(std::size_t queue) const { return queues_.at(queue).capacity; }
    Count total_capacity() const noexcept;

    /// Exactly one queue per value index and all capacities equal.
    bool is_restricted() const noexcept;
    /// The shared capacity B of a restricted config.
    std::optional<Count> common_capacity() const noexcept;

    friend bool operator==(const SwitchConfig&, const SwitchConfig&) = default;

private:
    SwitchConfig(std::vector<Value> values, std::vector<QueueSpec> queues)
        : values_(std::move(values)), queues_(std::move(queues)) {}

    std::vector<Value> values_;
    std::vector<QueueSpec> queues_;
};

enum class EventKind : std::uint8_t { Arrive, Send };

struct Event {
    EventKind kind = EventKind::Send;
    std::size_t queue = 0;  // meaningful for arrivals only

    static constexpr Event arrive(std::size_t queue) noexcept { return {EventKind::Arrive, queue}; }
    static constexpr Event send() noexcept { return {EventKind::Send, 0}; }

    bool is_arrive() const noexcept { return kind == EventKind::Arrive; }
    bool is_send() const noexcept { return kind == EventKind::Send; }

    friend bool operator==(const Event& a, const Event& b) noexcept {
        return a.kind == b.kind && (a.kind == EventKind::Send || a.queue == b.queue);
    }
};

/// Ordered arrive/send events. The k-th send closes step k; arrivals before
/// it (and after the previous send) belong to step k, in file order.
struct Trace {
    std::vector<Event> events;

    std::size_t size() const noexcept { return events.size(); }
    bool empty() const noexcept { return events.empty(); }
    std::size_t arrival_count() const noexcept;
    std::size_t send_count() const noexcept;
    /// Sends strictly after the last arrival (all sends if there are no arrivals).
    std::size_t trailing_send_count() const noexcept;
    bool is_drained() const noexcept { return trailing_send_count() >= arrival_count(); }

    Trace& arrive(std::size_t queue) {
        events.push_back(Event::arrive(queue));
        return *this;
    }
    Trace& send(std::size_t times = 1) {
        events.insert(events.end(), times, Event::send());
        return *this;
    }

    friend bool operator==(const Trace&, const Trace&) = default;
};

struct TraceValidation {
    std::vector<std::string> violations;
    bool drained = true;

    bool ok() const noexcept { return violations.empty(); }
};

/// Guaranteed-bound summary of a value set.
struct BoundReport {
    Rational r;                    // max v_i / v_{i+1}; 0 when there is a single value
    std::optional<Rational> alpha; // v_2 / v_1, two-valued configs only
    Rational general_bound;        // 2, or (alpha+1)/alpha
    Rational restricted_bound;     // 1+r, or (alpha+2)/(alpha+1)
    Rational lower_bound;          // 2 - v_m / sum(v)
};

SwitchConfig parse_config(std::string_view text);
std::string serialize_config(const SwitchConfig& config);

/// JSON Lines, one event per line. Errors carry the 1-based line number.
Trace parse_trace(std::string_view text);
std::string serialize_trace(const Trace& trace);

TraceValidation validate_trace(const SwitchConfig& config, const Trace& trace);

BoundReport compute_bounds(std::span<const Value> values);
inline BoundReport compute_bounds(const SwitchConfig& config) { return compute_bounds(config.values()); }

/// Appends sends until the trailing send count reaches the total arrival count.
Trace drain_extend(const SwitchConfig& config, Trace trace);

}  // namespace segbuf
