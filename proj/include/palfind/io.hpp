#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "palfind/core.hpp"
#include "palfind/engine_greedy.hpp"

namespace palfind {

struct FastaError : std::runtime_error {
    FastaError(int64_t line_arg, const std::string& what_arg)
        : std::runtime_error("line " + std::to_string(line_arg) + ": " + what_arg),
          line(line_arg) {}
    int64_t line;
};

// '>' starts a record; the id runs to the first whitespace; sequence lines
// are concatenated with whitespace stripped. In dna mode residues are
// normalized (case folded, non-ACGT -> N). Empty records are allowed.
// Sequence data before any header raises FastaError; a bad stream raises
// std::ios_base::failure.
std::vector<Sequence> parse_fasta(std::istream& in, MatchMode mode);

inline constexpr const char* kTsvHeader =
    "#seq_id\tstart\tend\tlength\terrors\tparity\tdiagonal\talignment";

// One TSV row, no trailing newline. Coordinates are 0-based half-open; the
// alignment column holds the run-length ops string or "-" when absent.
std::string format_hit(const PalindromeHit& hit);

}  // namespace palfind
