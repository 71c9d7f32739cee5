#include "palfind/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "palfind/engine_greedy.hpp"
#include "palfind/engine_lce.hpp"
#include "palfind/io.hpp"

namespace palfind {

namespace {

void write_stats_line(std::ostream& err, const Sequence& seq,
                      const CliConfig& config, const SearchStats& stats,
                      double seconds) {
    const double denom = static_cast<double>(config.k + 1) *
                         static_cast<double>(seq.size());
    const double ratio =
        denom > 0.0 ? static_cast<double>(stats.comparisons) / denom : 0.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "n=%lld k=%lld engine=%s comparisons=%llu ratio=%.3f "
                  "seconds=%.3f",
                  static_cast<long long>(seq.size()),
                  static_cast<long long>(config.k), to_string(config.engine),
                  static_cast<unsigned long long>(stats.comparisons), ratio,
                  seconds);
    err << buf << '\n';
}

}  // namespace

int process_stream(const CliConfig& config, std::istream& in,
                   std::ostream& out, std::ostream& err) {
    if (config.k < 0 || config.min_len < 0) {
        err << "palfind: k and min-len must be non-negative\n";
        return 1;
    }

    std::vector<Sequence> records;
    try {
        records = parse_fasta(in, config.mode);
    } catch (const FastaError& e) {
        err << "palfind: FASTA parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::ios_base::failure& e) {
        err << "palfind: input error: " << e.what() << '\n';
        return 2;
    }

    const MatchRule rule{config.mode};
    const bool full_table = config.align;  // paths need all rows

    out << kTsvHeader << '\n';
    for (const Sequence& seq : records) {
        const auto start = std::chrono::steady_clock::now();
        SearchStats stats;
        const ReachTable table =
            config.engine == EngineKind::greedy
                ? search(seq, rule, config.k, full_table, stats)
                : search_lce(seq, rule, config.k, full_table, stats);
        std::vector<PalindromeHit> hits = extract_hits(
            table, seq.id, config.min_len, config.containment_filter);
        if (config.align) {
            for (PalindromeHit& hit : hits) {
                hit.alignment = traceback(table, seq, rule, hit.diagonal);
            }
        }
        const auto stop = std::chrono::steady_clock::now();

        for (const PalindromeHit& hit : hits) {
            out << format_hit(hit) << '\n';
        }
        if (config.stats) {
            write_stats_line(err, seq, config, stats,
                             std::chrono::duration<double>(stop - start).count());
        }
    }
    if (!out) {
        err << "palfind: error writing output\n";
        return 2;
    }
    return 0;
}

int run_cli(const CliConfig& config) {
    std::ifstream file_in;
    std::istream* in = &std::cin;
    if (config.input != "-") {
        file_in.open(config.input, std::ios::binary);
        if (!file_in) {
            std::cerr << "palfind: cannot open input file '" << config.input
                      << "'\n";
            return 2;
        }
        in = &file_in;
    }

    std::ofstream file_out;
    std::ostream* out = &std::cout;
    if (!config.output.empty()) {
        file_out.open(config.output, std::ios::binary);
        if (!file_out) {
            std::cerr << "palfind: cannot open output file '" << config.output
                      << "'\n";
            return 2;
        }
        out = &file_out;
    }

    return process_stream(config, *in, *out, std::cerr);
}

}  // namespace palfind
