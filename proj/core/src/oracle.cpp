#include "segbuf/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "segbuf/errors.hpp"

namespace segbuf {
namespace {

using Code = std::uint64_t;

/// Backward DP over forward-reachable occupancy states. `weight[k]` is the
/// gain of one send from queue k.
class ScheduleSolver {
public:
    ScheduleSolver(const SwitchConfig& config, const Trace& trace, std::vector<Benefit> weight,
                   const OracleOptions& options)
        : config_(config), trace_(trace), weight_(std::move(weight)) {
        const std::size_t n = config.num_queues();
        radix_.resize(n);
        stride_.resize(n);
        const std::uint64_t layers = trace.size() + 1;
        std::uint64_t states = 1;
        for (std::size_t k = 0; k < n; ++k) {
            radix_[k] = static_cast<Code>(config.capacity(k)) + 1;
            stride_[k] = states;
            if (states > options.max_states / radix_[k]) too_large(options);
            states *= radix_[k];
        }
        if (states > options.max_states / layers) too_large(options);
        space_ = states;
        dense_ = states <= options.dense_threshold;
    }

    void solve() {
        explore();
        evaluate();
    }

    Benefit optimum() const { return values_.front().front(); }

    std::uint64_t state_count() const {
        std::uint64_t total = 0;
        for (const auto& layer : codes_) total += layer.size();
        return total;
    }

    DecisionLog schedule() const {
        DecisionLog log;
        log.reserve(trace_.send_count());
        Code c = 0;
        for (std::size_t t = 0; t < trace_.size(); ++t) {
            const Event& e = trace_.events[t];
            if (e.is_arrive()) {
                c = after_arrival(c, e.queue);
                continue;
            }
            const Benefit here = lookup(t, c);
            SendDecision chosen;
            for (std::size_t k = 0; k < radix_.size(); ++k) {
                if (digit(c, k) == 0) continue;
                if (weight_[k] + lookup(t + 1, c - stride_[k]) == here) {
                    chosen = k;
                    break;
                }
            }
            if (chosen) c -= stride_[*chosen];
            log.push_back(chosen);
        }
        return log;
    }

private:
    [[noreturn]] void too_large(const OracleOptions& options) const {
        throw OracleLimitError("instance too large: (#events + 1) * prod(B_k + 1) exceeds " +
                               std::to_string(options.max_states) + " state-events");
    }

    Code digit(Code c, std::size_t k) const { return (c / stride_[k]) % radix_[k]; }

    Code after_arrival(Code c, std::size_t q) const {
        if (q >= radix_.size()) {
            throw ValidationError("arrival at queue " + std::to_string(q) + ": queue index out of range");
        }
        return digit(c, q) + 1 < radix_[q] ? c + stride_[q] : c;
    }

    Benefit lookup(std::size_t layer, Code c) const {
        const auto& codes = codes_[layer];
        const auto it = std::lower_bound(codes.begin(), codes.end(), c);
        if (it == codes.end() || *it != c) throw std::logic_error("oracle: state missing from reachable layer");
        return values_[layer][static_cast<std::size_t>(it - codes.begin())];
    }

    void explore() {
        const std::size_t steps = trace_.size();
        codes_.assign(steps + 1, {});
        codes_[0].push_back(0);

        std::vector<std::uint32_t> stamp;
        if (dense_) stamp.assign(space_, 0);

        for (std::size_t t = 0; t < steps; ++t) {
            const Event& e = trace_.events[t];
            auto& next = codes_[t + 1];
            const auto stamp_id = static_cast<std::uint32_t>(t + 1);
            auto push = [&](Code c) {
                if (dense_) {
                    if (stamp[c] == stamp_id) return;
                    stamp[c] = stamp_id;
                }
                next.push_back(c);
            };
            for (const Code c : codes_[t]) {
                if (e.is_arrive()) {
                    push(after_arrival(c, e.queue));
                    continue;
                }
                bool any = false;
                for (std::size_t k = 0; k < radix_.size(); ++k) {
                    if (digit(c, k) > 0) {
                        push(c - stride_[k]);
                        any = true;
                    }
                }
                if (!any) push(c);
            }
            std::sort(next.begin(), next.end());
            if (!dense_) next.erase(std::unique(next.begin(), next.end()), next.end());
        }
    }

    void evaluate() {
        const std::size_t steps = trace_.size();
        values_.assign(steps + 1, {});
        values_[steps].assign(codes_[steps].size(), 0);

        std::vector<Benefit> scratch;
        if (dense_) scratch.assign(space_, 0);
        auto next_value = [&](std::size_t t, Code c) -> Benefit {
            return dense_ ? scratch[c] : lookup(t + 1, c);
        };

        for (std::size_t t = steps; t-- > 0;) {
            // scratch holds layer t+1 at its reachable codes
            const Event& e = trace_.events[t];
            const auto& codes = codes_[t];
            auto& vals = values_[t];
            vals.resize(codes.size());
            for (std::size_t i = 0; i < codes.size(); ++i) {
                const Code c = codes[i];
                if (e.is_arrive()) {
                    vals[i] = next_value(t, after_arrival(c, e.queue));
                    continue;
                }
                Benefit best = std::numeric_limits<Benefit>::min();
                bool any = false;
                for (std::size_t k = 0; k < radix_.size(); ++k) {
                    if (digit(c, k) == 0) continue;
                    const Benefit candidate = weight_[k] + next_value(t, c - stride_[k]);
                    if (!any || candidate > best) best = candidate;
                    any = true;
                }
                vals[i] = any ? best : next_value(t, c);
            }
            if (dense_) {
                for (std::size_t i = 0; i < codes.size(); ++i) scratch[codes[i]] = vals[i];
            }
        }
    }

    const SwitchConfig& config_;
    const Trace& trace_;
    std::vector<Benefit> weight_;
    std::vector<Code> radix_;
    std::vector<Code> stride_;
    std::uint64_t space_ = 1;
    bool dense_ = true;
    std::vector<std::vector<Code>> codes_;
    std::vector<std::vector<Benefit>> values_;
};

void check_arrivals(const SwitchConfig& config, const Trace& trace) {
    const auto v = validate_trace(config, trace);
    if (!v.ok()) throw ValidationError(v.violations.front());
}

Benefit enumerate(const SwitchConfig& config, const Trace& trace, std::size_t at, std::vector<Count>& occupancy) {
    for (; at < trace.size(); ++at) {
        const Event& e = trace.events[at];
        if (e.is_arrive()) {
            if (occupancy[e.queue] < config.capacity(e.queue)) ++occupancy[e.queue];
            continue;
        }
        Benefit best = 0;
        bool any = false;
        for (std::size_t k = 0; k < occupancy.size(); ++k) {
            if (occupancy[k] == 0) continue;
            std::vector<Count> branch = occupancy;
            --branch[k];
            best = std::max(best, config.queue_value(k) + enumerate(config, trace, at + 1, branch));
            any = true;
        }
        if (any) return best;
    }
    return 0;
}

}  // namespace

OracleResult optimal_benefit(const SwitchConfig& config, const Trace& trace, const OracleOptions& options) {
    check_arrivals(config, trace);
    std::vector<Benefit> weight(config.num_queues());
    for (std::size_t k = 0; k < weight.size(); ++k) weight[k] = config.queue_value(k);

    ScheduleSolver solver(config, trace, std::move(weight), options);
    solver.solve();

    OracleResult result;
    result.optimal_benefit = solver.optimum();
    result.schedule = solver.schedule();
    result.state_count = solver.state_count();

    const SimulationResult check = replay(config, trace, result.schedule);
    if (check.benefit != result.optimal_benefit) {
        throw std::logic_error("oracle: schedule replays to " + std::to_string(check.benefit) + ", expected " +
                               std::to_string(result.optimal_benefit));
    }
    result.accepted_per_value = check.accepted_per_value;
    return result;
}

Count max_count_for_value(const SwitchConfig& config, const Trace& trace, std::size_t value_index,
                          const OracleOptions& options) {
    if (value_index >= config.num_values()) {
        throw ValidationError("value_index: out of range (" + std::to_string(value_index) + ")");
    }
    check_arrivals(config, trace);
    std::vector<Benefit> weight(config.num_queues());
    for (std::size_t k = 0; k < weight.size(); ++k) weight[k] = config.queue_value_index(k) == value_index ? 1 : 0;

    ScheduleSolver solver(config, trace, std::move(weight), options);
    solver.solve();
    return solver.optimum();
}

Benefit brute_force_benefit(const SwitchConfig& config, const Trace& trace) {
    if (trace.send_count() > kBruteForceMaxSends || config.num_queues() > kBruteForceMaxQueues) {
        throw OracleLimitError("instance too large for brute force (limit " + std::to_string(kBruteForceMaxSends) +
                               " sends, " + std::to_string(kBruteForceMaxQueues) + " queues)");
    }
    check_arrivals(config, trace);
    std::vector<Count> occupancy(config.num_queues(), 0);
    return enumerate(config, trace, 0, occupancy);
}

}  // namespace segbuf
