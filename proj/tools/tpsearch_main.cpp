#include "tpsearch/bench.hpp"
#include "tpsearch/datagen.hpp"
#include "tpsearch/search.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

// Exit codes: 0 found/success, 1 not-found, >= 2 error. Diagnostics go to
// stderr; machine-readable output (indices, CSV) goes to stdout.

namespace {

using namespace tpsearch;

struct GenerateArgs {
    std::string kind;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    std::optional<Element> lo;
    std::optional<Element> hi;
    std::string out;
};

struct SearchArgs {
    std::string algo;
    std::string data;
    Element target = 0;
    bool sorted = false;
};

struct BenchArgs {
    std::string data;
    std::string generate;
    bool sorted = false;
    std::uint64_t seed = 0;
    std::string algos = "linear,binary,two-pointer";
    Element target = 0;
    std::uint32_t reps = 30;
    std::uint32_t warmup = 3;
    std::string measure = "both";
    std::string format = "table";
    std::string out;
};

GenSpec make_gen_spec(const std::string& kind, std::uint64_t count, std::uint64_t seed,
                      std::optional<Element> lo, std::optional<Element> hi) {
    GenSpec spec;
    spec.kind = kind == "sorted" ? GenSpec::Kind::Sorted : GenSpec::Kind::Random;
    spec.count = count;
    spec.seed = seed;
    if (lo || hi) {
        if (!lo || !hi) {
            throw std::invalid_argument("--lo and --hi must be given together");
        }
        spec.value_range = {{*lo, *hi}};
    }
    return spec;
}

int run_generate(const GenerateArgs& args) {
    const GenSpec spec = make_gen_spec(args.kind, args.count, args.seed, args.lo, args.hi);
    const Dataset data =
        spec.kind == GenSpec::Kind::Sorted ? generate_sorted(spec) : generate_random(spec);
    write_dataset(data, args.out);
    std::cout << "wrote " << data.size() << " values to " << args.out << "\n";
    return 0;
}

int run_search(const SearchArgs& args) {
    const Dataset data = read_dataset(args.data, args.sorted);

    if (args.algo == "two-pointer-all") {
        const MultiOutcome out = two_pointer_find_all(data, args.target);
        std::cout << "status: " << (out.found() ? "found" : "not-found") << "\n";
        std::cout << "indices:";
        for (const std::size_t k : out.indices) std::cout << " " << k;
        std::cout << "\n";
        std::cout << "probes: " << out.probes << "\n";
        std::cout << "comparisons: " << out.element_comparisons << "\n";
        return out.found() ? 0 : 1;
    }
    if (args.algo == "pair-sum") {
        const PairSumOutcome out = two_pointer_pair_sum(data, args.target);
        std::cout << "status: " << (out.found() ? "found" : "not-found") << "\n";
        if (out.found()) {
            std::cout << "pair: " << out.pair->first << " " << out.pair->second << "\n";
        }
        std::cout << "probes: " << out.probes << "\n";
        std::cout << "comparisons: " << out.element_comparisons << "\n";
        return out.found() ? 0 : 1;
    }

    SearchOutcome out;
    if (args.algo == "linear") {
        out = linear_search(data, args.target);
    } else if (args.algo == "binary") {
        out = binary_search(data, args.target);
    } else {  // two-pointer
        out = two_pointer_find_first(data, args.target);
    }
    std::cout << "status: " << (out.found() ? "found" : "not-found") << "\n";
    if (out.found()) std::cout << "index: " << *out.index << "\n";
    std::cout << "probes: " << out.probes << "\n";
    std::cout << "comparisons: " << out.element_comparisons << "\n";
    return out.found() ? 0 : 1;
}

Measure parse_measure(const std::string& name) {
    if (name == "wall") return Measure::WallClock;
    if (name == "probes") return Measure::Probes;
    return Measure::Both;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "csv") return ReportFormat::Csv;
    if (name == "markdown") return ReportFormat::Markdown;
    return ReportFormat::Table;
}

int run_bench(const BenchArgs& args) {
    BenchConfig config;
    if (!args.generate.empty()) {
        const auto colon = args.generate.find(':');
        if (colon == std::string::npos) {
            throw std::invalid_argument("--generate expects KIND:COUNT, e.g. sorted:1000000");
        }
        const std::string kind = args.generate.substr(0, colon);
        if (kind != "sorted" && kind != "random") {
            throw std::invalid_argument("--generate kind must be sorted or random");
        }
        std::uint64_t count = 0;
        try {
            count = std::stoull(args.generate.substr(colon + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("--generate expects KIND:COUNT, e.g. sorted:1000000");
        }
        config.source = make_gen_spec(kind, count, args.seed, std::nullopt, std::nullopt);
    } else {
        config.source = FileSource{args.data, args.sorted};
    }
    config.algorithms = parse_algo_list(args.algos);
    config.target = args.target;
    config.repetitions = args.reps;
    config.warmup = args.warmup;
    config.measure = parse_measure(args.measure);

    const Report report = run_suite(config);
    const std::string text = render_report(report, parse_format(args.format));
    if (!args.out.empty()) {
        std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
        if (!file) throw std::runtime_error("cannot open '" + args.out + "' for writing");
        file << text;
        if (!file.flush()) throw std::runtime_error("write failed for '" + args.out + "'");
        std::cerr << "wrote report to " << args.out << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"instrumented array search: dataset generation, single searches, benchmarks"};
    app.require_subcommand(1);

    GenerateArgs gen_args;
    CLI::App* gen = app.add_subcommand("generate", "write a dataset.txt file");
    gen->add_option("--kind", gen_args.kind, "dataset kind")
        ->required()
        ->check(CLI::IsMember({"sorted", "random"}));
    gen->add_option("--count", gen_args.count, "number of values")->required();
    gen->add_option("--seed", gen_args.seed, "seed for random generation (default 0)");
    gen->add_option("--lo", gen_args.lo, "lowest random value (default 1)");
    gen->add_option("--hi", gen_args.hi, "highest random value (default count)");
    gen->add_option("--out", gen_args.out, "output path")->required();

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand("search", "run one instrumented search");
    search->add_option("--algo", search_args.algo, "algorithm")
        ->required()
        ->check(CLI::IsMember({"linear", "binary", "two-pointer", "two-pointer-all", "pair-sum"}));
    search->add_option("--data", search_args.data, "dataset file")->required();
    search
        ->add_option("--target", search_args.target,
                     "value to find (pair-sum: the targeted sum)")
        ->required();
    search->add_flag("--sorted", search_args.sorted,
                     "assert the file is non-decreasing (required by binary and pair-sum)");

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "run a timed comparison suite");
    auto* data_opt = bench->add_option("--data", bench_args.data, "dataset file");
    auto* generate_opt =
        bench->add_option("--generate", bench_args.generate,
                          "generate the dataset in memory, KIND:COUNT (e.g. sorted:1000000)");
    data_opt->excludes(generate_opt);
    generate_opt->excludes(data_opt);
    bench->add_flag("--sorted", bench_args.sorted,
                    "assert a --data file is non-decreasing (required by binary)");
    bench->add_option("--seed", bench_args.seed, "seed for --generate random:N (default 0)");
    bench->add_option("--algos", bench_args.algos,
                      "comma-separated subset of linear,binary,two-pointer");
    bench->add_option("--target", bench_args.target, "value to search for")->required();
    bench->add_option("--reps", bench_args.reps, "measured repetitions (default 30)")
        ->check(CLI::PositiveNumber);
    bench->add_option("--warmup", bench_args.warmup, "unmeasured warmup runs (default 3)");
    bench->add_option("--measure", bench_args.measure, "metrics to report")
        ->check(CLI::IsMember({"wall", "probes", "both"}));
    bench->add_option("--format", bench_args.format, "output format")
        ->check(CLI::IsMember({"table", "csv", "markdown"}));
    bench->add_option("--out", bench_args.out, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_generate(gen_args);
        if (search->parsed()) return run_search(search_args);
        if (bench->parsed()) {
            if (bench_args.data.empty() && bench_args.generate.empty()) {
                throw std::invalid_argument("bench needs --data or --generate");
            }
            return run_bench(bench_args);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
