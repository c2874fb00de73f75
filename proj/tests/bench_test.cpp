#include <stdexcept>
#include <string>

#include "doctest.h"
#include "instrie/bench.hpp"
#include "instrie/term.hpp"

using namespace instrie;

TEST_CASE("workload generators produce the documented shapes") {
    Workload empty = gen_empty(4);
    REQUIRE(empty.steps.size() == 4);
    for (const auto& step : empty.steps) CHECK(step.complete);
    CHECK(format_term(empty.steps[0].call) == "p(1,3)");
    CHECK(format_term(empty.steps[3].call) == "p(4,0)");
    CHECK(format_term(empty.final_probe) == "p(A,B)");

    Workload one = gen_one(4);
    REQUIRE(one.steps.size() == 5);
    CHECK_FALSE(one.steps.back().complete);
    CHECK(format_term(one.steps.back().call) == "p(0,0)");

    Workload end = gen_end(4);
    REQUIRE(end.steps.size() == 4);
    for (const auto& step : end.steps) CHECK_FALSE(step.complete);
}

TEST_CASE("generated calls are pairwise distinct") {
    Workload w = gen_one(50);
    for (size_t i = 0; i < w.steps.size(); ++i)
        for (size_t j = i + 1; j < w.steps.size(); ++j)
            CHECK_FALSE(variants(w.steps[i].call, w.steps[j].call));
}

TEST_CASE("call counts and final results per program") {
    for (Algorithm alg : {Algorithm::Eirs, Algorithm::Nirs, Algorithm::Sirs}) {
        BenchSpec spec;
        spec.n = 100;
        spec.repeats = 1;
        spec.algorithm = alg;

        spec.program = Program::Empty;
        BenchResult empty = run_bench(spec);
        CHECK(empty.calls == 101);
        CHECK(empty.results_found == 0);

        spec.program = Program::One;
        BenchResult one = run_bench(spec);
        CHECK(one.calls == 102);
        CHECK(one.results_found == 1);

        spec.program = Program::End;
        BenchResult end = run_bench(spec);
        CHECK(end.calls == 101);
        CHECK(end.results_found == 100);
    }
}

TEST_CASE("small sizes behave") {
    BenchSpec spec;
    spec.program = Program::Empty;
    spec.n = 1;
    spec.algorithm = Algorithm::Nirs;
    spec.repeats = 1;
    BenchResult r = run_bench(spec);
    CHECK(r.calls == 2);
    CHECK(r.results_found == 0);

    spec.program = Program::One;
    r = run_bench(spec);
    CHECK(r.calls == 3);
    CHECK(r.results_found == 1);

    spec.program = Program::End;
    r = run_bench(spec);
    CHECK(r.calls == 2);
    CHECK(r.results_found == 1);
}

TEST_CASE("retrieval time never exceeds total time") {
    for (Program p : {Program::Empty, Program::One, Program::End}) {
        BenchSpec spec;
        spec.program = p;
        spec.n = 200;
        spec.algorithm = Algorithm::Eirs;
        spec.repeats = 2;
        BenchResult r = run_bench(spec);
        CHECK(r.retrieval_ms <= r.total_ms);
        CHECK(r.retrieval_ms >= 0.0);
    }
}

TEST_CASE("invalid specs are rejected") {
    BenchSpec spec;
    spec.program = Program::Empty;
    spec.algorithm = Algorithm::Eirs;
    spec.n = 0;
    CHECK_THROWS_AS((void)run_bench(spec), std::invalid_argument);
    spec.n = 10;
    spec.repeats = 0;
    CHECK_THROWS_AS((void)run_bench(spec), std::invalid_argument);
}

TEST_CASE("CSV output is stable") {
    CHECK(csv_header() == "program,n,algorithm,calls,retrieval_ms,total_ms,results_found");
    BenchSpec spec;
    spec.program = Program::One;
    spec.n = 20;
    spec.algorithm = Algorithm::Sirs;
    spec.repeats = 1;
    BenchResult r = run_bench(spec);
    std::string row = csv_row(r);
    CHECK(row.rfind("one,20,sirs,22,", 0) == 0);
    // Two fixed three-decimal time fields and the result count.
    size_t comma_count = 0;
    for (char c : row) comma_count += c == ',';
    CHECK(comma_count == 6);
    CHECK(row.substr(row.size() - 2) == ",1");
}
