#pragma once

#include <string>
#include <vector>

#include "instrie/term.hpp"

namespace instrie {

enum class Program { Empty, One, End };
enum class Algorithm { Eirs, Nirs, Sirs };

const char* program_name(Program p);
const char* algorithm_name(Algorithm a);

struct BenchSpec {
    Program program;
    int n = 0;  // stored subgoals, > 0
    Algorithm algorithm;
    int repeats = 3;  // measured runs after one discarded warmup
};

struct BenchResult {
    BenchSpec spec;
    long long calls = 0;         // retrieval invocations per run
    double retrieval_ms = 0.0;   // mean retrieval time per run
    double total_ms = 0.0;       // mean wall time per run
    long long results_found = 0; // final retrieval's match count
};

// One table operation of a synthetic workload: insert the call, mark it
// evaluating, complete it when asked, then probe with the step's own call.
// Every workload ends with one general probe covering all stored calls.
struct Workload {
    struct Step {
        Term call;
        bool complete;
    };
    std::vector<Step> steps;
    Term final_probe = Term::nil();  // generators always overwrite this
};

// n ground subgoals p(i, n-i) evaluated and completed; the final general
// probe p(X, Y) finds nothing. n+1 retrievals.
Workload gen_empty(int n);

// As gen_empty plus one extra subgoal left evaluating; the final probe finds
// exactly it. n+2 retrievals.
Workload gen_one(int n);

// n subgoals all left evaluating; the final probe finds all of them. n+1
// retrievals.
Workload gen_end(int n);

// Executes the workload repeats+1 times on fresh tries (first run discarded),
// timing retrieval calls with a monotonic clock. The pruned algorithm's
// retrieval time also counts the evaluation-count maintenance in mark
// operations; the baselines' does not.
BenchResult run_bench(const BenchSpec& spec);

std::string csv_header();
std::string csv_row(const BenchResult& result);

}  // namespace instrie
