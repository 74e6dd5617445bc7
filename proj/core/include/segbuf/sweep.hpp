#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "segbuf/harness.hpp"

namespace segbuf {

struct GeneratorSpec {
    enum class Kind { Random, Bursty } kind = Kind::Random;
    std::size_t steps = 20;
    std::size_t arrivals_max = 3;  // random
    std::size_t burst_len = 2;     // bursty
    std::size_t burst_size = 2;    // bursty
};

struct SweepCell {
    std::string id;
    SwitchConfig config;
    GeneratorSpec generator;
    std::vector<std::string> policies;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    bool tight_fixture = false;      // restricted two-valued cells only
    bool adversary_fixture = false;  // restricted unit-capacity cells only
};

struct SweepSpec {
    std::vector<SweepCell> cells;
};

/// Sweep spec JSON:
/// {"cells":[{"id":"pow2","values":[1,2,4],"capacity":2,
///            "generator":{"kind":"random","steps":20,"arrivals_max":3},
///            "policies":["greedy"],"trials":10,"seed":1,
///            "fixtures":["tight","adversary"]}]}
/// A cell gives either "capacity" (restricted shorthand) or "queues".
SweepSpec parse_sweep_spec(std::string_view text);

struct SweepOptions {
    OracleOptions oracle;
    /// runtime_ms is written as 0 unless set, so reports stay byte-identical.
    bool record_runtime = false;
};

struct SweepRow {
    RatioRecord record;
    std::string seed_label;  // trial seed, "fixture" or "max"
};

/// Rows per cell, in cell order: random trials by seed, fixtures, then one
/// summary row per policy holding the maximum ratio. Instances over the
/// oracle cap are left out and counted in `skipped`.
struct SweepResult {
    std::vector<SweepRow> rows;
    std::size_t skipped = 0;
};

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options = {});
std::string sweep_to_csv(const SweepResult& result);

}  // namespace segbuf
