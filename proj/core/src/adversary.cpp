#include "segbuf/adversary.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "segbuf/errors.hpp"

namespace segbuf {
namespace {

void ensure(bool condition, const std::string& what) {
    if (!condition) throw std::logic_error("adversary transcript invariant violated: " + what);
}

void verify(const AdversaryTranscript& tx) {
    const auto values = tx.config.values();
    const std::size_t m = values.size();
    const Benefit sum = std::accumulate(values.begin(), values.end(), Benefit{0});

    ensure(tx.value_sets.size() == m && tx.observed_sends.size() == m, "one set and one send per step");
    std::vector<std::size_t> all(m);
    std::iota(all.begin(), all.end(), std::size_t{0});
    ensure(tx.value_sets.front() == all, "V_1 = V");
    for (std::size_t t = 0; t < m; ++t) {
        ensure(tx.value_sets[t].size() == m - t, "|V_t| = m - t + 1");
        if (t + 1 < m) {
            auto expected = tx.value_sets[t];
            std::erase(expected, tx.observed_sends[t]);
            ensure(tx.value_sets[t + 1] == expected, "V_{t+1} = V_t \\ {s_t}");
        }
    }

    Count later_arrivals = 0;
    for (std::size_t t = 1; t < m; ++t) later_arrivals += static_cast<Count>(tx.value_sets[t].size());
    ensure(tx.alg_rejected == later_arrivals, "ALG rejects every packet of steps 2..m");
    ensure(tx.alg_benefit == sum, "ALG = sum of values");
    ensure(tx.adv_benefit == 2 * sum - values[tx.observed_sends.front()], "ADV = 2 * sum - s_1");
    ensure(tx.trace.send_count() == 2 * m - 1, "sends through step 2m-1");
}

}  // namespace

AdversaryTranscript build_lower_bound_instance(std::span<const Value> values, Policy& policy) {
    if (!policy.is_deterministic()) {
        throw ValidationError("adversary: policy \"" + policy.name() + "\" is randomized; refused");
    }
    AdversaryTranscript tx{SwitchConfig::restricted(std::vector<Value>(values.begin(), values.end()), 1),
                           {}, {}, {}, {}, {}, 0, 0, 0};
    const std::size_t m = tx.config.num_values();

    policy.reset();
    SimulationCursor cursor(tx.config);
    std::vector<std::size_t> arriving(m);
    std::iota(arriving.begin(), arriving.end(), std::size_t{0});

    for (std::size_t t = 0; t < m; ++t) {
        tx.value_sets.push_back(arriving);
        for (const std::size_t v : arriving) {
            tx.trace.arrive(v);
            cursor.arrive(v);
        }
        tx.trace.send();
        const SendDecision sent = cursor.send(policy);
        ensure(sent.has_value(), "ALG holds packets at every step 1..m");
        const std::size_t s = tx.config.queue_value_index(*sent);
        ensure(std::find(arriving.begin(), arriving.end(), s) != arriving.end(), "s_t in V_t");
        tx.observed_sends.push_back(s);
        std::erase(arriving, s);
    }
    for (std::size_t t = m; t < 2 * m - 1; ++t) {
        tx.trace.send();
        cursor.send(policy);
    }

    tx.alg_benefit = cursor.result().benefit;
    tx.alg_rejected = cursor.result().rejected_count;
    tx.alg_schedule = cursor.result().decision_log;

    for (std::size_t t = 1; t < m; ++t) tx.adv_schedule.emplace_back(tx.observed_sends[t]);
    for (std::size_t v = m; v-- > 0;) tx.adv_schedule.emplace_back(v);
    tx.adv_benefit = replay(tx.config, tx.trace, tx.adv_schedule).benefit;

    verify(tx);
    return tx;
}

}  // namespace segbuf
