#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace streamlet {

/// Configuration for the prime-counting benchmark.
struct BenchConfig {
    int num_values = 2'000'000;       // how many random integers to test
    int max_value = 10'000;           // values drawn from [2, max_value)
    int repetitions = 5;              // sequential+parallel timing pairs
    std::optional<std::uint64_t> seed;  // reproducible input when set
    std::optional<int> workers;       // parallel worker override

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// One timing repetition. The engine must produce identical prime counts
/// in both modes; run_benchmark aborts with CountMismatchError otherwise.
struct BenchRepetition {
    std::int64_t sequential_ms = 0;
    std::int64_t parallel_ms = 0;
    std::int64_t primes_sequential = 0;
    std::int64_t primes_parallel = 0;
    double speedup = 0.0;  // sequential_ms / parallel_ms
};

struct BenchReport {
    std::vector<BenchRepetition> repetitions;

    double median_speedup() const;
};

/// Trial division over every i in [2, n), with no square-root cutoff. The
/// inefficiency is deliberate: this is the benchmark's unit of work.
/// Callers guarantee n >= 2.
bool is_prime(int n);

/// num_values integers uniformly drawn from [2, max_value). A fixed seed
/// reproduces the same array on this implementation.
std::vector<int> generate_values(const BenchConfig& cfg);

/// "sequential <n>ms, parallel <n>ms, speedup factor <x.xx>"
std::string format_repetition_line(const BenchRepetition& rep);

/// Counts primes among the generated values with a sequential pipeline,
/// then a parallel one, timing both, for cfg.repetitions rounds. Writes
/// one format_repetition_line per round to out. Durations below 1 ms are
/// reported as 1 ms so the speedup quotient stays defined.
BenchReport run_benchmark(const BenchConfig& cfg, std::ostream& out);

/// Runs one of the built-in worked examples (ep7..ep13) and writes its
/// output to out. Problems ep7, ep11, ep12 and ep13 read the text file
/// named by file_path. Throws UnknownDemoError for other ids and
/// std::invalid_argument when a required file is missing.
void run_demo(std::string_view problem_id, const std::optional<std::string>& file_path,
              std::ostream& out);

}  // namespace streamlet
