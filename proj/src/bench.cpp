#include "tpsearch/bench.hpp"

#include "tpsearch/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#if defined(__unix__) || defined(__APPLE__)
#include <sys/utsname.h>
#include <unistd.h>
#endif

namespace tpsearch {

std::string to_string(Algo algo) {
    switch (algo) {
        case Algo::Linear: return "linear";
        case Algo::Binary: return "binary";
        case Algo::TwoPointer: return "two-pointer";
    }
    return "unknown";
}

Algo parse_algo(const std::string& name) {
    if (name == "linear") return Algo::Linear;
    if (name == "binary") return Algo::Binary;
    if (name == "two-pointer") return Algo::TwoPointer;
    throw std::invalid_argument("unknown algorithm '" + name +
                                "' (expected linear, binary, or two-pointer)");
}

std::vector<Algo> parse_algo_list(const std::string& csv) {
    std::vector<Algo> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const Algo a = parse_algo(item);
        if (std::find(out.begin(), out.end(), a) != out.end()) {
            throw std::invalid_argument("algorithm '" + item + "' listed twice");
        }
        out.push_back(a);
    }
    if (out.empty()) throw std::invalid_argument("algorithm list is empty");
    return out;
}

Dataset load_dataset(const BenchConfig& config) {
    if (const auto* file = std::get_if<FileSource>(&config.source)) {
        return read_dataset(file->path, file->assert_sorted);
    }
    const auto& spec = std::get<GenSpec>(config.source);
    return spec.kind == GenSpec::Kind::Sorted ? generate_sorted(spec) : generate_random(spec);
}

namespace {

SearchOutcome invoke(Algo algo, const Dataset& data, Element target) {
    switch (algo) {
        case Algo::Linear: return linear_search(data, target);
        case Algo::Binary: return binary_search(data, target);
        case Algo::TwoPointer: return two_pointer_find_first(data, target);
    }
    throw std::logic_error("unreachable algorithm dispatch");
}

void validate(const BenchConfig& config, const Dataset& data) {
    if (config.repetitions < 1) {
        throw std::invalid_argument("repetitions must be at least 1");
    }
    if (config.algorithms.empty()) {
        throw std::invalid_argument("algorithm list is empty");
    }
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        for (std::size_t b = a + 1; b < config.algorithms.size(); ++b) {
            if (config.algorithms[a] == config.algorithms[b]) {
                throw std::invalid_argument("algorithm '" + to_string(config.algorithms[a]) +
                                            "' listed twice");
            }
        }
    }
    if (!data.sorted &&
        std::find(config.algorithms.begin(), config.algorithms.end(), Algo::Binary) !=
            config.algorithms.end()) {
        throw std::invalid_argument(
            "binary search configured on a dataset not flagged sorted; "
            "load with sortedness asserted or drop 'binary'");
    }
}

std::int64_t round_ns(double ns) { return static_cast<std::int64_t>(std::llround(ns)); }

// Median of the sorted sample; even counts average the two middle values.
std::int64_t median_ns_of(std::vector<std::int64_t> samples) {
    std::sort(samples.begin(), samples.end());
    const std::size_t n = samples.size();
    if (n % 2 == 1) return samples[n / 2];
    return round_ns((static_cast<double>(samples[n / 2 - 1]) +
                     static_cast<double>(samples[n / 2])) / 2.0);
}

std::string format_ms(std::int64_t ns) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f ms (%lld ns)", static_cast<double>(ns) / 1e6,
                  static_cast<long long>(ns));
    return buf;
}

std::string outcome_token(const SearchOutcome& outcome) {
    if (outcome.status == Status::Found) {
        return "found@" + std::to_string(*outcome.index);
    }
    return "not-found";
}

std::string pad(std::string s, std::size_t width) {
    if (s.size() < width) s.append(width - s.size(), ' ');
    return s;
}

std::string render_table(const Report& r) {
    const bool timings = r.measure != Measure::Probes;
    const bool probes = r.measure != Measure::WallClock;
    std::ostringstream out;
    out << "benchmark report\n";
    out << "  environment : " << r.environment << "\n";
    out << "  dataset     : " << r.dataset_size << " elements, "
        << (r.dataset_sorted ? "sorted" : "unsorted") << ", target " << r.target << "\n";
    out << "  repetitions : " << r.repetitions << " (warmup " << r.warmup << ")\n\n";
    out << "  " << pad("algorithm", 13);
    if (timings) out << pad("median", 24) << pad("mean", 24) << pad("min", 24);
    if (probes) out << pad("probes", 10);
    out << "outcome\n";
    for (const auto& row : r.rows) {
        out << "  " << pad(to_string(row.algorithm), 13);
        if (timings) {
            out << pad(format_ms(row.median_ns), 24) << pad(format_ms(row.mean_ns), 24)
                << pad(format_ms(row.min_ns), 24);
        }
        if (probes) out << pad(std::to_string(row.probes), 10);
        out << outcome_token(row.outcome) << "\n";
    }
    return out.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream out;
    out << kCsvHeader << "\n";
    for (const auto& row : r.rows) {
        out << to_string(row.algorithm) << ',' << r.dataset_size << ','
            << (r.dataset_sorted ? "true" : "false") << ',' << r.target << ','
            << r.repetitions << ',' << row.median_ns << ',' << row.mean_ns << ','
            << row.min_ns << ',' << row.probes << ',' << outcome_token(row.outcome) << "\n";
    }
    return out.str();
}

std::string render_markdown(const Report& r) {
    const bool timings = r.measure != Measure::Probes;
    const bool probes = r.measure != Measure::WallClock;
    std::ostringstream out;
    out << "# benchmark report\n\n";
    out << "- environment: " << r.environment << "\n";
    out << "- dataset: " << r.dataset_size << " elements, "
        << (r.dataset_sorted ? "sorted" : "unsorted") << ", target " << r.target << "\n";
    out << "- repetitions: " << r.repetitions << " (warmup " << r.warmup << ")\n\n";
    out << "| algorithm |";
    if (timings) out << " median | mean | min |";
    if (probes) out << " probes |";
    out << " outcome |\n";
    out << "|---|";
    if (timings) out << "---|---|---|";
    if (probes) out << "---|";
    out << "---|\n";
    for (const auto& row : r.rows) {
        out << "| " << to_string(row.algorithm) << " |";
        if (timings) {
            out << " " << format_ms(row.median_ns) << " | " << format_ms(row.mean_ns)
                << " | " << format_ms(row.min_ns) << " |";
        }
        if (probes) out << " " << row.probes << " |";
        out << " " << outcome_token(row.outcome) << " |\n";
    }
    return out.str();
}

}  // namespace

std::vector<TrialResult> run_trial(const Dataset& data, const BenchConfig& config, Algo algo) {
    if (config.repetitions < 1) {
        throw std::invalid_argument("repetitions must be at least 1");
    }
    if (algo == Algo::Binary && !data.sorted) {
        throw std::invalid_argument(
            "binary search configured on a dataset not flagged sorted; "
            "load with sortedness asserted or drop 'binary'");
    }
    for (std::uint32_t w = 0; w < config.warmup; ++w) {
        (void)invoke(algo, data, config.target);
    }
    std::vector<TrialResult> trials;
    trials.reserve(config.repetitions);
    for (std::uint32_t rep = 0; rep < config.repetitions; ++rep) {
        const auto start = std::chrono::steady_clock::now();
        SearchOutcome outcome = invoke(algo, data, config.target);
        const auto stop = std::chrono::steady_clock::now();
        TrialResult t;
        t.algorithm = algo;
        t.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start);
        t.probes = outcome.probes;
        t.outcome = outcome;
        if (!trials.empty() && trials.front().probes != t.probes) {
            throw std::logic_error("probe count varied across repetitions of " + to_string(algo));
        }
        trials.push_back(std::move(t));
    }
    return trials;
}

Report run_suite(const BenchConfig& config) {
    const Dataset data = load_dataset(config);
    validate(config, data);

    Report report;
    report.environment = capture_environment();
    report.dataset_size = data.size();
    report.dataset_sorted = data.sorted;
    report.target = config.target;
    report.repetitions = config.repetitions;
    report.warmup = config.warmup;
    report.measure = config.measure;

    for (const Algo algo : config.algorithms) {
        const std::vector<TrialResult> trials = run_trial(data, config, algo);
        std::vector<std::int64_t> ns;
        ns.reserve(trials.size());
        for (const auto& t : trials) ns.push_back(t.wall_time.count());

        ReportRow row;
        row.algorithm = algo;
        row.median_ns = median_ns_of(ns);
        row.mean_ns = round_ns(std::accumulate(ns.begin(), ns.end(), 0.0) /
                               static_cast<double>(ns.size()));
        row.min_ns = *std::min_element(ns.begin(), ns.end());
        row.probes = trials.front().probes;
        row.outcome = trials.front().outcome;
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string render_report(const Report& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::Table: return render_table(report);
        case ReportFormat::Csv: return render_csv(report);
        case ReportFormat::Markdown: return render_markdown(report);
    }
    throw std::logic_error("unreachable report format");
}

std::string capture_environment() {
    std::string os = "unknown OS";
    std::ifstream rel("/etc/os-release");
    std::string line;
    while (std::getline(rel, line)) {
        if (line.rfind("PRETTY_NAME=", 0) == 0) {
            os = line.substr(12);
            if (os.size() >= 2 && os.front() == '"' && os.back() == '"') {
                os = os.substr(1, os.size() - 2);
            }
            break;
        }
    }
#if defined(__unix__) || defined(__APPLE__)
    utsname uts{};
    if (uname(&uts) == 0) {
        os += std::string(" | ") + uts.sysname + " " + uts.release + " " + uts.machine;
    }
    const long pages = sysconf(_SC_PHYS_PAGES);
    const long page_size = sysconf(_SC_PAGE_SIZE);
    if (pages > 0 && page_size > 0) {
        const double gib = static_cast<double>(pages) * static_cast<double>(page_size) /
                           (1024.0 * 1024.0 * 1024.0);
        char buf[32];
        std::snprintf(buf, sizeof(buf), " | %.1f GiB RAM", gib);
        os += buf;
    }
#endif
    std::time_t now = std::time(nullptr);
    char stamp[32];
    if (std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now)) > 0) {
        os += std::string(" | ") + stamp;
    }
    return os;
}

}  // namespace tpsearch
