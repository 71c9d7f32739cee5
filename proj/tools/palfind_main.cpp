#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "palfind/bench.hpp"
#include "palfind/cli.hpp"

namespace {

constexpr const char* kVersion = "palfind 0.1.0";

int run_bench_command(const std::string& plan_path) {
    std::ifstream plan_file;
    std::istream* in = &std::cin;
    if (plan_path != "-") {
        plan_file.open(plan_path);
        if (!plan_file) {
            std::cerr << "palfind bench: cannot open plan file '" << plan_path
                      << "'\n";
            return 2;
        }
        in = &plan_file;
    }
    std::vector<palfind::BenchCell> plan;
    try {
        plan = palfind::parse_plan(*in);
    } catch (const std::exception& e) {
        std::cerr << "palfind bench: " << e.what() << '\n';
        return 2;
    }
    const palfind::BenchReport report = palfind::run_bench(plan);
    palfind::write_csv(report, std::cout);
    return std::cout ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"palfind - approximate palindrome and inverted repeat finder"};
    app.set_version_flag("--version", kVersion);

    palfind::CliConfig config;
    std::string mode = "dna";
    std::string engine = "greedy";
    bool no_containment = false;

    app.add_option("input", config.input,
                   "FASTA input path, or '-' for standard input");
    app.add_option("--k", config.k, "maximum number of errors")
        ->check(CLI::NonNegativeNumber)
        ->default_val(0);
    app.add_option("--min-len", config.min_len,
                   "minimum palindrome length to report")
        ->check(CLI::NonNegativeNumber)
        ->default_val(8);
    app.add_option("--mode", mode, "match rule: id or dna")
        ->check(CLI::IsMember({"id", "dna"}))
        ->default_val("dna");
    app.add_option("--engine", engine, "search engine: greedy or lce")
        ->check(CLI::IsMember({"greedy", "lce"}))
        ->default_val("greedy");
    app.add_flag("--align", config.align,
                 "recover one optimal alignment per hit (keeps the full reach "
                 "table in memory)");
    app.add_flag("--no-containment-filter", no_containment,
                 "report hits whose span is contained in a longer hit");
    app.add_flag("--stats", config.stats,
                 "per-sequence comparison counts and timing on stderr");
    app.add_option("--output", config.output, "output path (default: stdout)");

    auto* bench_cmd = app.add_subcommand(
        "bench", "run an instrumented benchmark plan and print CSV");
    std::string plan_path;
    bench_cmd->add_option("--plan", plan_path,
                          "plan file: generator,n,k,engine,at_fraction,seed "
                          "per line ('-' for stdin)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    if (*bench_cmd) {
        return run_bench_command(plan_path);
    }

    if (config.input.empty()) {
        std::cerr << "palfind: missing input (path or '-'); see --help\n";
        return 1;
    }
    config.mode = mode == "id" ? palfind::MatchMode::identity
                               : palfind::MatchMode::dna_complement;
    config.engine = engine == "lce" ? palfind::EngineKind::lce
                                    : palfind::EngineKind::greedy;
    config.containment_filter = !no_containment;
    return palfind::run_cli(config);
}
