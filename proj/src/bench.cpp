#include "streamlet/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <stdexcept>

#include "streamlet/errors.hpp"
#include "streamlet/exact_decimal.hpp"
#include "streamlet/sources.hpp"

namespace streamlet {
namespace {

std::int64_t elapsed_ms(std::chrono::steady_clock::time_point start,
                        std::chrono::steady_clock::time_point end) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return std::max<std::int64_t>(1, ms);
}

std::int64_t count_primes(const std::vector<int>& values, bool parallel,
                          const std::optional<int>& worker_override) {
    auto pipeline = from_collection(values);
    if (worker_override) pipeline = pipeline.workers(*worker_override);
    pipeline = parallel ? pipeline.parallel() : pipeline.sequential();
    return pipeline.filter([](int n) { return is_prime(n); }).count();
}

}  // namespace

void BenchConfig::validate() const {
    if (num_values < 1) throw std::invalid_argument("num_values must be >= 1");
    if (max_value < 3) throw std::invalid_argument("max_value must be >= 3");
    if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
    if (workers && *workers < 1) throw std::invalid_argument("workers must be >= 1");
}

double BenchReport::median_speedup() const {
    if (repetitions.empty()) return 0.0;
    std::vector<double> speedups;
    speedups.reserve(repetitions.size());
    for (const auto& rep : repetitions) speedups.push_back(rep.speedup);
    std::sort(speedups.begin(), speedups.end());
    std::size_t mid = speedups.size() / 2;
    if (speedups.size() % 2 == 1) return speedups[mid];
    return (speedups[mid - 1] + speedups[mid]) / 2.0;
}

bool is_prime(int n) {
    for (int i = 2; i < n; ++i) {
        if (n % i == 0) return false;
    }
    return true;
}

std::vector<int> generate_values(const BenchConfig& cfg) {
    cfg.validate();
    std::mt19937_64 rng(cfg.seed ? *cfg.seed : std::random_device{}());
    std::uniform_int_distribution<int> dist(2, cfg.max_value - 1);
    std::vector<int> values(static_cast<std::size_t>(cfg.num_values));
    for (int& v : values) v = dist(rng);
    return values;
}

std::string format_repetition_line(const BenchRepetition& rep) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "sequential %lldms, parallel %lldms, speedup factor %.2f",
                  static_cast<long long>(rep.sequential_ms),
                  static_cast<long long>(rep.parallel_ms), rep.speedup);
    return buf;
}

BenchReport run_benchmark(const BenchConfig& cfg, std::ostream& out) {
    cfg.validate();
    const std::vector<int> values = generate_values(cfg);

    BenchReport report;
    report.repetitions.reserve(static_cast<std::size_t>(cfg.repetitions));
    using clock = std::chrono::steady_clock;

    for (int repetition = 0; repetition < cfg.repetitions; ++repetition) {
        BenchRepetition rep;

        auto start = clock::now();
        rep.primes_sequential = count_primes(values, false, cfg.workers);
        rep.sequential_ms = elapsed_ms(start, clock::now());

        start = clock::now();
        rep.primes_parallel = count_primes(values, true, cfg.workers);
        rep.parallel_ms = elapsed_ms(start, clock::now());

        if (rep.primes_sequential != rep.primes_parallel) {
            throw CountMismatchError(
                "prime counts disagree: sequential " + std::to_string(rep.primes_sequential) +
                ", parallel " + std::to_string(rep.primes_parallel));
        }

        rep.speedup = static_cast<double>(rep.sequential_ms) / static_cast<double>(rep.parallel_ms);
        out << format_repetition_line(rep) << '\n';
        report.repetitions.push_back(rep);
    }
    return report;
}

namespace {

std::string require_file(std::string_view problem_id, const std::optional<std::string>& file_path) {
    if (!file_path) {
        throw std::invalid_argument("demo " + std::string(problem_id) + " requires --file");
    }
    return *file_path;
}

}  // namespace

void run_demo(std::string_view problem_id, const std::optional<std::string>& file_path,
              std::ostream& out) {
    if (problem_id == "ep7") {
        // Count the lines of a text file.
        out << lines(require_file(problem_id, file_path)).count() << '\n';
    } else if (problem_id == "ep8") {
        // Sum the integers from 27 to 159 inclusive.
        out << range_closed(27, 159).sum() << '\n';
    } else if (problem_id == "ep9") {
        // Sum the odd integers from 27 to 159 inclusive.
        out << range_closed(27, 159).filter([](std::int64_t n) { return n % 2 != 0; }).sum()
            << '\n';
    } else if (problem_id == "ep10") {
        // Print the integers from 27 to 159 inclusive, one per line.
        range_closed(27, 159).for_each([&out](std::int64_t n) { out << n << '\n'; });
    } else if (problem_id == "ep11") {
        // Print the first character of each line.
        lines(require_file(problem_id, file_path))
            .map([](const std::string& line) { return line.substr(0, 1); })
            .for_each([&out](const std::string& c) { out << c << '\n'; });
    } else if (problem_id == "ep12") {
        // Print the length of each line.
        lines(require_file(problem_id, file_path))
            .map_to_int([](const std::string& line) { return line.size(); })
            .for_each([&out](std::int64_t len) { out << len << '\n'; });
    } else if (problem_id == "ep13") {
        // Sum a file of decimals without losing precision.
        ExactDecimal total =
            lines(require_file(problem_id, file_path))
                .map([](const std::string& line) { return ExactDecimal::parse(line); })
                .reduce(ExactDecimal(), [](ExactDecimal tot, const ExactDecimal& val) {
                    return tot.add(val);
                });
        out << total << '\n';
    } else {
        throw UnknownDemoError("unknown demo '" + std::string(problem_id) +
                               "' (supported: ep7..ep13)");
    }
}

}  // namespace streamlet
