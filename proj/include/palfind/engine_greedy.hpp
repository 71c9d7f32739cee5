#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "palfind/core.hpp"

namespace palfind {

// Counters shared by both engines. `comparisons` counts endsMatch
// evaluations (one symbol comparison each); `lce_queries` counts
// constant-time extension queries issued by the LCE engine.
struct SearchStats {
    uint64_t comparisons = 0;
    uint64_t lce_queries = 0;
};

// ---------------------------------------------------------------------------
// ReachTable: per-diagonal maximum extension for each error budget.
//
// rows[e][d] holds the farthest extension distance on diagonal d attainable
// for a cost of at most e. In final-row-only mode just row k survives; full
// mode keeps all k+1 rows so paths can be recovered. min_e[d] records the
// smallest e that already attains the final value (tracked during the
// forward pass).
// ---------------------------------------------------------------------------

struct ReachTable {
    static constexpr int32_t kInvalid = -1;

    int64_t n = 0;
    int64_t k = 0;
    int64_t diags = 0;
    bool all_rows = false;
    std::vector<int32_t> rows;   // all_rows ? (k+1)*diags entries : final row only
    std::vector<int32_t> min_e;  // per diagonal

    int32_t reach(int64_t e, int64_t d) const {
        assert(d >= 0 && d < diags);
        if (all_rows) {
            assert(e >= 0 && e <= k);
            return rows[static_cast<size_t>(e * diags + d)];
        }
        assert(e == k);
        return rows[static_cast<size_t>(d)];
    }

    int32_t final_reach(int64_t d) const {
        assert(d >= 0 && d < diags);
        return all_rows ? reach(k, d) : rows[static_cast<size_t>(d)];
    }

    int32_t min_errors(int64_t d) const {
        assert(d >= 0 && d < diags);
        return min_e[static_cast<size_t>(d)];
    }

    bool operator==(const ReachTable&) const = default;
};

// ---------------------------------------------------------------------------
// Alignments: center-out run-length-encoded edit operations witnessing a
// hit's cost. M/X consume a symbol pair, L/R a single unpaired symbol on the
// left/right arm.
// ---------------------------------------------------------------------------

enum class AlignOp : char {
    match = 'M',
    mismatch = 'X',
    left_indel = 'L',
    right_indel = 'R',
};

struct OpRun {
    AlignOp op;
    int64_t count;
    bool operator==(const OpRun&) const = default;
};

struct Alignment {
    int64_t origin_d = 0;
    std::vector<OpRun> runs;  // center-out

    int64_t cost() const;
    std::string to_string() const;  // e.g. "1M1L"; empty when there are no ops
    bool operator==(const Alignment&) const = default;
};

// Replays the ops from the origin cell; returns the final cell.
Cell replay(const Alignment& a, int64_t n);

// ---------------------------------------------------------------------------
// Hits
// ---------------------------------------------------------------------------

struct PalindromeHit {
    std::string seq_id;
    int64_t diagonal = 0;
    int64_t start = 0;  // 0-based, half-open
    int64_t end = 0;
    int64_t length = 0;
    int64_t errors = 0;
    Parity parity = Parity::odd;  // of the palindrome length
    std::optional<Alignment> alignment;
};

// ---------------------------------------------------------------------------
// The simple engine: row-by-row reach computation with greedy free extension.
// ---------------------------------------------------------------------------

// Extends t along diagonal d while the next outer pair matches; returns the
// final extension. One comparison is counted per evaluated pair.
int64_t slide(const Sequence& seq, MatchRule rule, int64_t d, int64_t t,
              SearchStats& stats);

// Row of exact (zero-error) extensions: row0[d] = slide(seq, rule, d, 0).
std::vector<int32_t> compute_row0(const Sequence& seq, MatchRule rule,
                                  SearchStats& stats);

// One step of the recurrence
//   reach[d][e] = max(reach[d-1][e-1]+x, reach[d][e-1]+1, reach[d+1][e-1]+x),
//   x = d & 1,
// with every candidate clamped to t_max(d) so the string ends are not
// overrun, followed by the free-extension slide.
std::vector<int32_t> advance_row(const Sequence& seq, MatchRule rule,
                                 const std::vector<int32_t>& prev, int64_t e,
                                 SearchStats& stats);

ReachTable search(const Sequence& seq, MatchRule rule, int64_t k,
                  bool keep_all_rows, SearchStats& stats);

// One candidate per diagonal from the final row, filtered by min_len and
// (optionally) strict span containment, sorted by (start, end).
std::vector<PalindromeHit> extract_hits(const ReachTable& table,
                                        std::string_view seq_id,
                                        int64_t min_len,
                                        bool containment_filter = true);

// Recovers one optimal path for the hit ending on diagonal d at its minimal
// error count. Requires a table built with keep_all_rows; throws
// std::invalid_argument otherwise. Tie-break: same-diagonal mismatch first,
// then the d-1 predecessor, then d+1.
Alignment traceback(const ReachTable& table, const Sequence& seq,
                    MatchRule rule, int64_t d);

}  // namespace palfind
