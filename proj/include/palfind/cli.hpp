#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "palfind/bench.hpp"
#include "palfind/core.hpp"

namespace palfind {

struct CliConfig {
    std::string input;  // path, or "-" for standard input
    int64_t k = 0;
    int64_t min_len = 8;
    MatchMode mode = MatchMode::dna_complement;
    EngineKind engine = EngineKind::greedy;
    bool align = false;  // implies full-table memory mode
    bool containment_filter = true;
    bool stats = false;
    std::string output;  // path, or empty for standard output
};

// Searches every record of the input in order and writes TSV hits.
// Exit codes: 0 success, 1 usage error, 2 input parse or I/O error.
int run_cli(const CliConfig& config);

// Stream-level core of run_cli; diagnostics and stats go to err.
int process_stream(const CliConfig& config, std::istream& in,
                   std::ostream& out, std::ostream& err);

}  // namespace palfind
