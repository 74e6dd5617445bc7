#include "segbuf/model.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "segbuf/errors.hpp"

namespace segbuf {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::int64_t require_int(const json& node, const std::string& field) {
    if (!node.is_number_integer()) throw ValidationError(field + ": expected an integer");
    return node.get<std::int64_t>();
}

}  // namespace

SwitchConfig SwitchConfig::create(std::vector<Value> values, std::vector<QueueSpec> queues) {
    if (values.empty()) throw ValidationError("values: must be non-empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 1) {
            throw ValidationError("values[" + std::to_string(i) + "]: must be >= 1");
        }
        if (i > 0 && values[i] <= values[i - 1]) {
            throw ValidationError("values: not strictly increasing at index " + std::to_string(i));
        }
    }
    if (queues.empty()) throw ValidationError("queues: must be non-empty");
    for (std::size_t k = 0; k < queues.size(); ++k) {
        const std::string prefix = "queues[" + std::to_string(k) + "]";
        if (queues[k].value_index >= values.size()) {
            throw ValidationError(prefix + ".value_index: out of range (" +
                                  std::to_string(queues[k].value_index) + " >= " +
                                  std::to_string(values.size()) + ")");
        }
        if (queues[k].capacity < 1) throw ValidationError(prefix + ".capacity: must be >= 1");
    }
    return SwitchConfig(std::move(values), std::move(queues));
}

SwitchConfig SwitchConfig::restricted(std::vector<Value> values, Count capacity) {
    std::vector<QueueSpec> queues;
    queues.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) queues.push_back({i, capacity});
    return create(std::move(values), std::move(queues));
}

Count SwitchConfig::total_capacity() const noexcept {
    Count total = 0;
    for (const auto& q : queues_) total += q.capacity;
    return total;
}

bool SwitchConfig::is_restricted() const noexcept {
    if (queues_.size() != values_.size()) return false;
    std::vector<bool> seen(values_.size(), false);
    for (const auto& q : queues_) {
        if (seen[q.value_index] || q.capacity != queues_.front().capacity) return false;
        seen[q.value_index] = true;
    }
    return true;
}

std::optional<Count> SwitchConfig::common_capacity() const noexcept {
    if (!is_restricted()) return std::nullopt;
    return queues_.front().capacity;
}

std::size_t Trace::arrival_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(events.begin(), events.end(), [](const Event& e) { return e.is_arrive(); }));
}

std::size_t Trace::send_count() const noexcept { return events.size() - arrival_count(); }

std::size_t Trace::trailing_send_count() const noexcept {
    std::size_t n = 0;
    for (auto it = events.rbegin(); it != events.rend() && it->is_send(); ++it) ++n;
    return n;
}

SwitchConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("config: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("config: top level must be an object");
    if (!doc.contains("values") || !doc["values"].is_array()) {
        throw ValidationError("values: missing or not an array");
    }
    if (!doc.contains("queues") || !doc["queues"].is_array()) {
        throw ValidationError("queues: missing or not an array");
    }

    std::vector<Value> values;
    for (std::size_t i = 0; i < doc["values"].size(); ++i) {
        values.push_back(require_int(doc["values"][i], "values[" + std::to_string(i) + "]"));
    }
    std::vector<QueueSpec> queues;
    for (std::size_t k = 0; k < doc["queues"].size(); ++k) {
        const json& q = doc["queues"][k];
        const std::string prefix = "queues[" + std::to_string(k) + "]";
        if (!q.is_object()) throw ValidationError(prefix + ": expected an object");
        if (!q.contains("value_index")) throw ValidationError(prefix + ".value_index: missing");
        if (!q.contains("capacity")) throw ValidationError(prefix + ".capacity: missing");
        const auto index = require_int(q["value_index"], prefix + ".value_index");
        if (index < 0) throw ValidationError(prefix + ".value_index: must be >= 0");
        queues.push_back({static_cast<std::size_t>(index), require_int(q["capacity"], prefix + ".capacity")});
    }
    return SwitchConfig::create(std::move(values), std::move(queues));
}

std::string serialize_config(const SwitchConfig& config) {
    ordered_json doc;
    doc["values"] = std::vector<Value>(config.values().begin(), config.values().end());
    doc["queues"] = ordered_json::array();
    for (const auto& q : config.queues()) {
        ordered_json entry;
        entry["value_index"] = q.value_index;
        entry["capacity"] = q.capacity;
        doc["queues"].push_back(std::move(entry));
    }
    return doc.dump();
}

Trace parse_trace(std::string_view text) {
    Trace trace;
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
        if (!doc.is_object() || !doc.contains("event") || !doc["event"].is_string()) {
            throw ParseError(where + "expected an object with a string \"event\" field");
        }
        const auto kind = doc["event"].get<std::string>();
        if (kind == "send") {
            trace.events.push_back(Event::send());
        } else if (kind == "arrive") {
            if (!doc.contains("queue") || !doc["queue"].is_number_integer()) {
                throw ParseError(where + "arrive event needs an integer \"queue\"");
            }
            const auto queue = doc["queue"].get<std::int64_t>();
            if (queue < 0) throw ParseError(where + "queue index must be >= 0");
            trace.events.push_back(Event::arrive(static_cast<std::size_t>(queue)));
        } else {
            throw ParseError(where + "unknown event kind \"" + kind + "\"");
        }
    }
    return trace;
}

std::string serialize_trace(const Trace& trace) {
    std::string out;
    out.reserve(trace.size() * 24);
    for (const auto& e : trace.events) {
        if (e.is_send()) {
            out += R"({"event":"send"})";
        } else {
            out += R"({"event":"arrive","queue":)" + std::to_string(e.queue) + "}";
        }
        out += '\n';
    }
    return out;
}

TraceValidation validate_trace(const SwitchConfig& config, const Trace& trace) {
    TraceValidation result;
    for (std::size_t i = 0; i < trace.events.size(); ++i) {
        const auto& e = trace.events[i];
        if (e.is_arrive() && e.queue >= config.num_queues()) {
            result.violations.push_back("event " + std::to_string(i) + ": queue index out of range (" +
                                        std::to_string(e.queue) + " >= " +
                                        std::to_string(config.num_queues()) + ")");
        }
    }
    result.drained = trace.is_drained();
    return result;
}

BoundReport compute_bounds(std::span<const Value> values) {
    BoundReport report;
    const Rational one(1);
    const Rational two(2);

    report.r = Rational(0);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) {
        report.r = std::max(report.r, Rational(values[i], values[i + 1]));
    }
    const Value sum = std::accumulate(values.begin(), values.end(), Value{0});
    report.lower_bound = two - Rational(values.back(), sum);

    if (values.size() == 2) {
        const Rational alpha(values[1], values[0]);
        report.alpha = alpha;
        report.general_bound = (alpha + one) / alpha;
        report.restricted_bound = (alpha + two) / (alpha + one);
    } else {
        report.general_bound = two;
        report.restricted_bound = one + report.r;
    }
    return report;
}

Trace drain_extend([[maybe_unused]] const SwitchConfig& config, Trace trace) {
    const auto arrivals = trace.arrival_count();
    const auto trailing = trace.trailing_send_count();
    if (trailing < arrivals) trace.send(arrivals - trailing);
    return trace;
}

}  // namespace segbuf
