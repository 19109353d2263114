#ifndef TPSEARCH_BENCH_HPP
#define TPSEARCH_BENCH_HPP

#include "tpsearch/datagen.hpp"
#include "tpsearch/types.hpp"

#include <chrono>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace tpsearch {

enum class Algo { Linear, Binary, TwoPointer };

std::string to_string(Algo algo);
Algo parse_algo(const std::string& name);                       // "linear" | "binary" | "two-pointer"
std::vector<Algo> parse_algo_list(const std::string& csv);      // comma-separated, no duplicates

// Which metrics the report renders. Execution always records both (a clock
// read is thereabouts free); Probes omits the timing columns from table and
// markdown output, WallClock omits the probe column. CSV always carries the
// full fixed schema.
enum class Measure { WallClock, Probes, Both };

// Dataset taken from a file, optionally verified sorted on load.
struct FileSource {
    std::string path;
    bool assert_sorted = false;
};

struct BenchConfig {
    std::variant<FileSource, GenSpec> source;
    std::vector<Algo> algorithms;
    Element target = 0;
    std::uint32_t repetitions = 30;
    std::uint32_t warmup = 3;
    Measure measure = Measure::Both;
};

// One measured repetition of one algorithm.
struct TrialResult {
    Algo algorithm = Algo::Linear;
    std::chrono::nanoseconds wall_time{0};
    std::uint64_t probes = 0;
    SearchOutcome outcome;
};

struct ReportRow {
    Algo algorithm = Algo::Linear;
    std::int64_t median_ns = 0;
    std::int64_t mean_ns = 0;
    std::int64_t min_ns = 0;
    std::uint64_t probes = 0;
    SearchOutcome outcome;
};

struct Report {
    std::string environment;
    std::size_t dataset_size = 0;
    bool dataset_sorted = false;
    Element target = 0;
    std::uint32_t repetitions = 0;
    std::uint32_t warmup = 0;
    Measure measure = Measure::Both;
    std::vector<ReportRow> rows;
};

enum class ReportFormat { Table, Csv, Markdown };

// Fixed CSV header, also the schema contract for scripting.
inline constexpr const char* kCsvHeader =
    "algorithm,dataset_size,sorted,target,repetitions,median_ns,mean_ns,min_ns,probes,outcome";

// Materializes the configured dataset (file read or generation). run_suite
// calls this exactly once so I/O and generation never land inside a timed
// region.
Dataset load_dataset(const BenchConfig& config);

// Runs `warmup` unmeasured invocations, then `repetitions` measured ones,
// each timing exactly one search with a monotonic clock. Trials run strictly
// sequentially. Throws std::invalid_argument before any timing when the
// algorithm's sortedness precondition is unmet, and std::logic_error if the
// probe count ever varies across repetitions.
std::vector<TrialResult> run_trial(const Dataset& data, const BenchConfig& config, Algo algo);

// Loads the dataset once, runs every configured algorithm over that same
// instance, aggregates median/mean/min, and captures the environment.
// Partial reports are never produced: any trial error propagates.
Report run_suite(const BenchConfig& config);

// Deterministic text in the requested format. Durations appear as
// milliseconds with two decimals plus raw integer nanoseconds.
std::string render_report(const Report& report, ReportFormat format);

// Best-effort one-line host description (OS, kernel, memory, timestamp).
std::string capture_environment();

}  // namespace tpsearch

#endif  // TPSEARCH_BENCH_HPP
