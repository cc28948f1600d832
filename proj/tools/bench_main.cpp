// Command-line harness: `bench primes` times sequential vs parallel prime
// counting; `bench demo <id>` runs one of the built-in worked examples.

#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "streamlet/bench.hpp"

namespace {

void print_csv(const streamlet::BenchReport& report, std::ostream& out) {
    out << "repetition,sequential_ms,parallel_ms,primes,speedup\n";
    char line[160];
    for (std::size_t i = 0; i < report.repetitions.size(); ++i) {
        const auto& rep = report.repetitions[i];
        std::snprintf(line, sizeof line, "%zu,%lld,%lld,%lld,%.2f\n", i,
                      static_cast<long long>(rep.sequential_ms),
                      static_cast<long long>(rep.parallel_ms),
                      static_cast<long long>(rep.primes_sequential), rep.speedup);
        out << line;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stream pipeline benchmark and demos"};
    app.require_subcommand(1);

    streamlet::BenchConfig cfg;
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
    bool csv = false;

    CLI::App* primes = app.add_subcommand("primes", "time sequential vs parallel prime counting");
    primes->add_option("--num-values", cfg.num_values, "random integers to test")
        ->capture_default_str();
    primes->add_option("--max-value", cfg.max_value, "values drawn from [2, max-value)")
        ->capture_default_str();
    primes->add_option("--repetitions", cfg.repetitions, "timing repetitions")
        ->capture_default_str();
    primes->add_option("--seed", seed, "PRNG seed for reproducible input");
    primes->add_option("--workers", workers, "parallel worker count override");
    primes->add_flag("--csv", csv, "machine-readable output");

    std::string demo_id;
    std::optional<std::string> demo_file;
    CLI::App* demo = app.add_subcommand("demo", "run a built-in worked example");
    demo->add_option("problem", demo_id, "one of ep7..ep13")
        ->required()
        ->check(CLI::IsMember({"ep7", "ep8", "ep9", "ep10", "ep11", "ep12", "ep13"}));
    demo->add_option("--file", demo_file, "input text file (ep7, ep11, ep12, ep13)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (primes->parsed()) {
            cfg.seed = seed;
            cfg.workers = workers;
            cfg.validate();
            if (csv) {
                std::ostringstream discard;
                print_csv(streamlet::run_benchmark(cfg, discard), std::cout);
            } else {
                streamlet::run_benchmark(cfg, std::cout);
            }
        } else {
            streamlet::run_demo(demo_id, demo_file, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
