// Acceptance checks. Prints one PASS/FAIL line per criterion; `--only N`
// runs a single criterion. The exit status is non-zero if any selected
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "segbuf/adversary.hpp"
#include "segbuf/harness.hpp"
#include "segbuf/oracle.hpp"
#include "segbuf/policies.hpp"
#include "segbuf/rng.hpp"
#include "support/process.hpp"

using namespace segbuf;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Value> increasing_values(Xorshift64Star& rng, std::size_t m) {
    std::vector<Value> values;
    switch (rng.below(3)) {
        case 0: {  // small gaps
            Value v = rng.between(1, 3);
            for (std::size_t i = 0; i < m; ++i, v += rng.between(1, 3)) values.push_back(v);
            break;
        }
        case 1: {  // geometric
            const Value base = rng.between(2, 4);
            Value v = 1;
            for (std::size_t i = 0; i < m; ++i, v *= base) values.push_back(v);
            break;
        }
        default: {  // wide random gaps
            Value v = rng.between(1, 10);
            for (std::size_t i = 0; i < m; ++i, v += rng.between(1, 40)) values.push_back(v);
            break;
        }
    }
    return values;
}

Trace random_trace(Xorshift64Star& rng, const SwitchConfig& config, std::uint64_t seed) {
    const auto steps = static_cast<std::size_t>(rng.between(1, 30));
    return gen_random(config, steps, 4, seed);
}

std::string ratio_text(const Rational& r) { return r.to_string(); }

// 1. OPT/GREEDY <= 1 + r on restricted instances.
Verdict criterion_restricted() {
    const auto start = Clock::now();
    constexpr std::size_t kInstances = 10000;
    Xorshift64Star rng(20240101);
    GreedyPolicy greedy;
    std::size_t violations = 0;
    Rational worst_slack(1);
    for (std::size_t i = 0; i < kInstances; ++i) {
        const auto m = static_cast<std::size_t>(rng.between(1, 5));
        const auto config = SwitchConfig::restricted(increasing_values(rng, m), rng.between(1, 3));
        const Trace trace = random_trace(rng, config, i);
        const auto rec = competitive_ratio(config, trace, greedy, {}, Rational(1) + compute_bounds(config).r);
        if (!rec.bound_satisfied) ++violations;
        worst_slack = std::min(worst_slack, *rec.slack);
    }
    const double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << kInstances << " instances, " << violations << " violation(s), min slack " << ratio_text(worst_slack)
           << ", " << elapsed << " s";
    return {violations == 0 && elapsed < 120.0, detail.str()};
}

// 2. Two-valued restricted bound and the tight instance.
Verdict criterion_two_valued() {
    constexpr std::size_t kPerAlpha = 3334;
    Xorshift64Star rng(20240202);
    GreedyPolicy greedy;
    std::size_t instances = 0;
    std::size_t violations = 0;
    for (const Value alpha : {2, 3, 10}) {
        for (std::size_t i = 0; i < kPerAlpha; ++i, ++instances) {
            const auto config = SwitchConfig::restricted({1, alpha}, rng.between(1, 3));
            const auto rec = competitive_ratio(config, random_trace(rng, config, i), greedy);
            if (*rec.bound != Rational(alpha + 2, alpha + 1) || !rec.bound_satisfied) ++violations;
        }
    }

    bool tight_ok = true;
    std::ostringstream tight;
    for (const Value alpha : {2, 3, 10}) {
        const auto config = SwitchConfig::restricted({1, alpha}, 1);
        const Trace trace = tight_two_valued_trace(config);
        const auto alg = simulate(config, trace, greedy).benefit;
        const auto opt = optimal_benefit(config, trace).optimal_benefit;
        const Rational ratio(opt, alg);
        tight_ok = tight_ok && ratio == Rational(alpha + 2, alpha + 1);
        if (alpha == 2) {
            tight_ok = tight_ok && alg == 3 && opt == 4;
            tight << "tight a=2: engine " << alg << ", oracle " << opt << ", ratio " << ratio_text(ratio);
        }
    }
    std::ostringstream detail;
    detail << instances << " instances, " << violations << " violation(s); " << tight.str();
    return {violations == 0 && tight_ok, detail.str()};
}

// 3. General model: <= 2 always, <= (a+1)/a for two values.
Verdict criterion_general() {
    constexpr std::size_t kInstances = 10000;
    Xorshift64Star rng(20240303);
    GreedyPolicy greedy;
    std::size_t over_two = 0;
    std::size_t two_valued = 0;
    std::size_t over_alpha = 0;
    std::optional<std::string> witness;
    for (std::size_t i = 0; i < kInstances; ++i) {
        const auto m = static_cast<std::size_t>(rng.between(1, 3));
        const auto values = increasing_values(rng, m);
        // every value gets a queue, then extra queues repeat values
        std::vector<QueueSpec> queues;
        for (std::size_t v = 0; v < m; ++v) queues.push_back({v, rng.between(1, 3)});
        const auto extra = static_cast<std::size_t>(rng.between(1, 2));
        for (std::size_t k = 0; k < extra; ++k) queues.push_back({rng.below(m), rng.between(1, 3)});
        if (std::all_of(queues.begin(), queues.end(), [&](const QueueSpec& q) { return q.capacity == queues[0].capacity; })) {
            queues.back().capacity = queues[0].capacity % 3 + 1;
        }
        const auto config = SwitchConfig::create(values, queues);
        const Trace trace = random_trace(rng, config, i);
        const auto rec = competitive_ratio(config, trace, greedy);
        if (rec.ratio > Rational(2)) ++over_two;
        if (m == 2) {
            ++two_valued;
            const Rational alpha = *compute_bounds(config).alpha;
            const Rational bound = (alpha + Rational(1)) / alpha;
            if (rec.ratio > bound) {
                ++over_alpha;
                if (!witness) {
                    witness = serialize_config(config) + " ratio " + ratio_text(rec.ratio) + " > " + ratio_text(bound);
                }
            }
        }
    }

    // control: two values, one queue each, heterogeneous capacities
    std::size_t control = 0;
    std::size_t control_over = 0;
    for (std::size_t i = 0; i < 3000; ++i, ++control) {
        const auto values = increasing_values(rng, 2);
        const Count b0 = rng.between(1, 3);
        const auto config = SwitchConfig::create(values, {{0, b0}, {1, b0 % 3 + 1}});
        const auto rec = competitive_ratio(config, random_trace(rng, config, i), greedy);
        const Rational alpha = *compute_bounds(config).alpha;
        if (rec.ratio > (alpha + Rational(1)) / alpha) ++control_over;
    }

    std::ostringstream detail;
    detail << kInstances << " instances: " << over_two << " above 2; " << two_valued << " two-valued, " << over_alpha
           << " above (a+1)/a";
    if (witness) detail << " (first: " << *witness << ")";
    detail << "; one queue per value: " << control << " instances, " << control_over << " above (a+1)/a";
    return {over_two == 0 && over_alpha == 0 && control_over == 0, detail.str()};
}

// 4. Lower-bound construction.
Verdict criterion_lower_bound() {
    bool ok = true;
    std::ostringstream detail;
    std::size_t transcripts = 0;
    const std::vector<std::vector<Value>> sets{{1, 2}, {1, 2, 4}, {1, 3, 9, 27}};
    for (const auto& values : sets) {
        const Rational lb = compute_bounds(values).lower_bound;
        for (const char* name : {"greedy", "round-robin", "lowest-first"}) {
            auto policy = make_policy(name);
            const auto tx = build_lower_bound_instance(values, *policy);
            const auto opt = optimal_benefit(tx.config, tx.trace).optimal_benefit;
            ++transcripts;
            if (tx.ratio() < lb || opt < tx.adv_benefit) {
                ok = false;
                detail << "violation: " << name << " ratio " << ratio_text(tx.ratio()) << " lb " << ratio_text(lb)
                       << " opt " << opt << " adv " << tx.adv_benefit << "; ";
            }
        }
    }
    GreedyPolicy greedy;
    const std::vector<Value> pow2{1, 2, 4};
    const auto tx = build_lower_bound_instance(pow2, greedy);
    const bool example = tx.alg_benefit == 7 && tx.adv_benefit == 10 && tx.ratio() == Rational(10, 7);
    detail << transcripts << " transcripts; {1,2,4} greedy: alg " << tx.alg_benefit << ", adv " << tx.adv_benefit
           << ", ratio " << ratio_text(tx.ratio());
    return {ok && example, detail.str()};
}

Verdict run_suites(const std::vector<std::string>& names, std::size_t trials, std::uint64_t seed) {
    bool ok = true;
    std::ostringstream detail;
    for (const auto& name : names) {
        SuiteParams params;
        params.trials = trials;
        const auto report = run_suite(name, params, seed);
        ok = ok && report.passed() && report.instances_tested >= trials;
        detail << name << " " << report.instances_tested << " tested/" << report.failures.size() << " failed; ";
        if (!report.passed()) {
            const auto& f = report.failures.front();
            detail << "[" << f.instance_id << ": " << f.inequality << ", " << f.witness << "] ";
        }
    }
    auto text = detail.str();
    if (text.size() >= 2) text.resize(text.size() - 2);
    return {ok, text};
}

// 5. Lemma suites.
Verdict criterion_lemmas() {
    return run_suites({"lemma-vm", "lemma-central", "lemma-two-valued", "lemma-queuesize"}, 10000, 5);
}

// 6. Oracle integrity.
Verdict criterion_oracle() { return run_suites({"oracle-cross"}, 10000, 6); }

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

// 7. Byte-identical CLI outputs.
Verdict criterion_determinism() {
    namespace fs = std::filesystem;
    const std::string cli = SEGBUF_CLI_PATH;
    const std::string fixtures = SEGBUF_FIXTURE_DIR;
    const fs::path root = fs::temp_directory_path() / "segbuf_acceptance_determinism";
    fs::remove_all(root);

    const std::string config = fixtures + "/tight_a2.config.json";
    const std::string general = fixtures + "/split_value.config.json";
    const std::string spec = fixtures + "/sweep_small.json";

    // each entry writes its artifacts under the run directory
    auto commands = [&](const fs::path& dir) {
        const std::string d = dir.string() + "/";
        return std::vector<std::string>{
            "gen --config " + config + " --steps 40 --seed 7 --out " + d + "random.jsonl",
            "gen --config " + general + " --generator bursty --steps 40 --burst-len 3 --burst-size 2 --seed 7 --out " +
                d + "bursty.jsonl",
            "simulate --config " + config + " --trace " + d + "random.jsonl --policy random:3 --out " + d + "sim.log",
            "simulate --config " + general + " --trace " + d + "bursty.jsonl --policy round-robin --out " + d +
                "rr.log",
            "opt --config " + general + " --trace " + d + "bursty.jsonl --out " + d + "opt.log",
            "ratio --config " + config + " --trace " + d + "random.jsonl",
            "adversary --values 1 3 9 27 --policy greedy --trace-out " + d + "adversary.jsonl",
            "sweep --spec " + spec + " --out " + d + "sweep.csv",
            "check --suite all --trials 40 --seed 9 --out " + d + "check.json",
        };
    };

    std::vector<std::string> stdout_runs[2];
    for (int run = 0; run < 2; ++run) {
        const fs::path dir = root / ("run" + std::to_string(run));
        fs::create_directories(dir);
        for (const auto& c : commands(dir)) {
            const auto out = testing::run_command(cli + " " + c + " 2>&1");
            if (out.exit_code != 0) return {false, "command failed (" + std::to_string(out.exit_code) + "): " + c};
            // stdout may echo run-specific paths; normalize them away
            std::string text = out.out;
            const std::string dir_text = dir.string();
            for (auto pos = text.find(dir_text); pos != std::string::npos; pos = text.find(dir_text, pos)) {
                text.replace(pos, dir_text.size(), "<dir>");
            }
            stdout_runs[run].push_back(text);
        }
    }

    std::size_t files = 0;
    for (const auto& entry : fs::directory_iterator(root / "run0")) {
        const auto other = root / "run1" / entry.path().filename();
        const auto a = read_file(entry.path());
        if (a.empty()) return {false, "empty artifact " + entry.path().filename().string()};
        if (!fs::exists(other) || a != read_file(other)) {
            return {false, "artifact differs: " + entry.path().filename().string()};
        }
        ++files;
    }
    for (std::size_t i = 0; i < stdout_runs[0].size(); ++i) {
        if (stdout_runs[0][i] != stdout_runs[1][i]) return {false, "stdout differs for command " + std::to_string(i)};
    }
    fs::remove_all(root);
    return {files == 8, std::to_string(files) + " artifacts and " + std::to_string(stdout_runs[0].size()) +
                            " stdout streams identical across two runs"};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::optional<int> only;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--only" && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::cerr << "usage: " << argv[0] << " [--only N]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "restricted upper bound 1+r", criterion_restricted},
        {2, "two-valued restricted bound (a+2)/(a+1)", criterion_two_valued},
        {3, "general-model bounds 2 and (a+1)/a", criterion_general},
        {4, "lower-bound construction", criterion_lower_bound},
        {5, "lemma suites", criterion_lemmas},
        {6, "oracle integrity", criterion_oracle},
        {7, "CLI determinism", criterion_determinism},
    };

    bool all = true;
    for (const auto& c : criteria) {
        if (only && *only != c.id) continue;
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (v.pass ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << ": " << v.detail << std::endl;
        all = all && v.pass;
    }
    return all ? 0 : 1;
}
