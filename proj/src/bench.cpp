#include "instrie/bench.hpp"

#include <cassert>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "instrie/baselines.hpp"
#include "instrie/matcher.hpp"
#include "instrie/subgoal_trie.hpp"

namespace instrie {

const char* program_name(Program p) {
    switch (p) {
        case Program::Empty: return "empty";
        case Program::One: return "one";
        case Program::End: return "end";
    }
    return "?";
}

const char* algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::Eirs: return "eirs";
        case Algorithm::Nirs: return "nirs";
        case Algorithm::Sirs: return "sirs";
    }
    return "?";
}

namespace {

Term step_call(int i, int n) {
    return Term::structure("p", {Term::integer(i), Term::integer(n - i)});
}

Term general_probe() { return Term::structure("p", {Term::var(0), Term::var(1)}); }

Workload ground_steps(int n, bool complete) {
    if (n <= 0) throw std::invalid_argument("workload size must be positive");
    Workload w;
    w.steps.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) w.steps.push_back({step_call(i, n), complete});
    w.final_probe = general_probe();
    return w;
}

}  // namespace

Workload gen_empty(int n) { return ground_steps(n, true); }

Workload gen_one(int n) {
    Workload w = ground_steps(n, true);
    // One subgoal stays evaluating among the completed ones; p(0,0) collides
    // with no p(i, n-i) for i >= 1.
    w.steps.push_back({Term::structure("p", {Term::integer(0), Term::integer(0)}), false});
    return w;
}

Workload gen_end(int n) { return ground_steps(n, false); }

namespace {

using Clock = std::chrono::steady_clock;

struct RunStats {
    long long calls = 0;
    long long retrieval_ns = 0;
    long long total_ns = 0;
    long long results_found = 0;
};

RunStats run_once(const Workload& w, Algorithm alg) {
    RunStats stats;
    SubgoalTrie trie("p", 2);
    LeafRegistry registry;
    const bool time_marks = alg == Algorithm::Eirs;

    auto probe = [&](const Term& call) {
        size_t found = 0;
        const auto t0 = Clock::now();
        switch (alg) {
            case Algorithm::Eirs: found = collect_subsumed_subgoals(trie, call).size(); break;
            case Algorithm::Nirs: found = collect_nirs(trie, registry, call).size(); break;
            case Algorithm::Sirs: found = collect_sirs(trie, call).size(); break;
        }
        stats.retrieval_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
        ++stats.calls;
        return found;
    };
    auto timed_mark = [&](auto&& op) {
        if (time_marks) {
            const auto t0 = Clock::now();
            op();
            stats.retrieval_ns +=
                std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
        } else {
            op();
        }
    };

    const auto run0 = Clock::now();
    for (const Workload::Step& step : w.steps) {
        SubgoalFrame* frame = trie.check_insert(step.call).first;
        timed_mark([&] { trie.mark_evaluating(*frame); });
        if (step.complete) timed_mark([&] { trie.mark_completed(*frame); });
        probe(step.call);
    }
    stats.results_found = static_cast<long long>(probe(w.final_probe));
    stats.total_ns =
        std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - run0).count();
    return stats;
}

}  // namespace

BenchResult run_bench(const BenchSpec& spec) {
    if (spec.n <= 0) throw std::invalid_argument("n must be positive");
    if (spec.repeats <= 0) throw std::invalid_argument("repeats must be positive");

    Workload w;
    switch (spec.program) {
        case Program::Empty: w = gen_empty(spec.n); break;
        case Program::One: w = gen_one(spec.n); break;
        case Program::End: w = gen_end(spec.n); break;
    }

    run_once(w, spec.algorithm);  // warmup, discarded

    BenchResult result;
    result.spec = spec;
    long long retrieval_ns = 0;
    long long total_ns = 0;
    for (int r = 0; r < spec.repeats; ++r) {
        RunStats stats = run_once(w, spec.algorithm);
        retrieval_ns += stats.retrieval_ns;
        total_ns += stats.total_ns;
        result.calls = stats.calls;
        result.results_found = stats.results_found;
    }
    result.retrieval_ms = static_cast<double>(retrieval_ns) / spec.repeats / 1e6;
    result.total_ms = static_cast<double>(total_ns) / spec.repeats / 1e6;
    return result;
}

std::string csv_header() { return "program,n,algorithm,calls,retrieval_ms,total_ms,results_found"; }

std::string csv_row(const BenchResult& r) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%d,%s,%lld,%.3f,%.3f,%lld", program_name(r.spec.program),
                  r.spec.n, algorithm_name(r.spec.algorithm), r.calls, r.retrieval_ms, r.total_ms,
                  r.results_found);
    return buf;
}

}  // namespace instrie
