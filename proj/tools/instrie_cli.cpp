#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "instrie/bench.hpp"
#include "instrie/script.hpp"

namespace {

instrie::Program to_program(const std::string& s) {
    if (s == "empty") return instrie::Program::Empty;
    if (s == "one") return instrie::Program::One;
    return instrie::Program::End;
}

instrie::Algorithm to_algorithm(const std::string& s) {
    if (s == "eirs") return instrie::Algorithm::Eirs;
    if (s == "nirs") return instrie::Algorithm::Nirs;
    return instrie::Algorithm::Sirs;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"subgoal-trie storage and evaluating-instance retrieval"};
    app.require_subcommand(1);

    std::string script_path;
    CLI::App* run = app.add_subcommand("run", "execute a table script");
    run->add_option("script", script_path, "script file")->required();

    std::string program;
    std::string alg;
    int n = 0;
    int repeats = 3;
    bool with_header = false;
    CLI::App* bench = app.add_subcommand("bench", "time retrievals over a synthetic workload");
    bench->add_option("--program", program, "workload shape")
        ->required()
        ->check(CLI::IsMember({"empty", "one", "end"}));
    bench->add_option("--n", n, "stored subgoals")->required()->check(CLI::PositiveNumber);
    bench->add_option("--alg", alg, "retrieval algorithm")
        ->required()
        ->check(CLI::IsMember({"eirs", "nirs", "sirs"}));
    bench->add_option("--repeats", repeats, "measured runs")->check(CLI::PositiveNumber);
    bench->add_flag("--csv", with_header, "print the CSV header line first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*run) {
        std::ifstream in(script_path);
        if (!in) {
            std::cerr << "cannot open " << script_path << '\n';
            return 2;
        }
        return instrie::run_script(in, std::cout, std::cerr);
    }

    instrie::BenchSpec spec;
    spec.program = to_program(program);
    spec.n = n;
    spec.algorithm = to_algorithm(alg);
    spec.repeats = repeats;
    instrie::BenchResult result = instrie::run_bench(spec);
    if (with_header) std::cout << instrie::csv_header() << '\n';
    std::cout << instrie::csv_row(result) << '\n';
    return 0;
}
