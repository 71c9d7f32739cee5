#include "palfind/engine_greedy.hpp"

#include <algorithm>
#include <stdexcept>

#include "search_core.hpp"

namespace palfind {

int64_t Alignment::cost() const {
    int64_t c = 0;
    for (const OpRun& r : runs) {
        if (r.op != AlignOp::match) c += r.count;
    }
    return c;
}

std::string Alignment::to_string() const {
    std::string s;
    for (const OpRun& r : runs) {
        s += std::to_string(r.count);
        s += static_cast<char>(r.op);
    }
    return s;
}

Cell replay(const Alignment& a, int64_t n) {
    Cell c = cell_of(a.origin_d, 0, n);
    for (const OpRun& r : a.runs) {
        for (int64_t i = 0; i < r.count; ++i) {
            switch (r.op) {
                case AlignOp::match:
                case AlignOp::mismatch:
                    --c.left;
                    ++c.right;
                    break;
                case AlignOp::left_indel:
                    --c.left;
                    break;
                case AlignOp::right_indel:
                    ++c.right;
                    break;
            }
        }
    }
    return c;
}

int64_t slide(const Sequence& seq, MatchRule rule, int64_t d, int64_t t,
              SearchStats& stats) {
    const int64_t n = seq.size();
    const int64_t tm = t_max(d, n);
    assert(t >= 0 && t <= tm);
    int64_t left = (d + 1) / 2 - t;
    int64_t right = d / 2 + t;
    while (t < tm) {
        ++stats.comparisons;
        if (!rule.matches(seq.at(left - 1), seq.at(right + 1))) break;
        ++t;
        --left;
        ++right;
    }
    return t;
}

std::vector<int32_t> compute_row0(const Sequence& seq, MatchRule rule,
                                  SearchStats& stats) {
    std::vector<int32_t> row;
    detail::fill_row0(
        diagonal_count(seq.size()),
        [&](int64_t d, int64_t t) { return slide(seq, rule, d, t, stats); }, row);
    return row;
}

std::vector<int32_t> advance_row(const Sequence& seq, MatchRule rule,
                                 const std::vector<int32_t>& prev, int64_t e,
                                 SearchStats& stats) {
    assert(e >= 1);
    (void)e;
    const int64_t n = seq.size();
    assert(static_cast<int64_t>(prev.size()) == diagonal_count(n));
    std::vector<int32_t> row;
    detail::fill_next_row(
        n, diagonal_count(n), prev,
        [&](int64_t d, int64_t t) { return slide(seq, rule, d, t, stats); }, row);
    return row;
}

ReachTable search(const Sequence& seq, MatchRule rule, int64_t k,
                  bool keep_all_rows, SearchStats& stats) {
    assert(k >= 0);
    return detail::run_search(seq.size(), k, keep_all_rows,
                              [&](int64_t d, int64_t t) {
                                  return slide(seq, rule, d, t, stats);
                              });
}

std::vector<PalindromeHit> extract_hits(const ReachTable& table,
                                        std::string_view seq_id,
                                        int64_t min_len,
                                        bool containment_filter) {
    std::vector<PalindromeHit> hits;
    for (int64_t d = 0; d < table.diags; ++d) {
        const int64_t t = table.final_reach(d);
        const Cell c = cell_of(d, t, table.n);
        const int64_t start = c.left;
        const int64_t end = c.right + 1;
        const int64_t len = end - start;
        if (len < min_len) continue;
        PalindromeHit hit;
        hit.seq_id = std::string(seq_id);
        hit.diagonal = d;
        hit.start = start;
        hit.end = end;
        hit.length = len;
        hit.errors = table.min_errors(d);
        hit.parity = length_parity(len);
        hits.push_back(std::move(hit));
    }

    // Start ascending, end descending: any span strictly contained in an
    // earlier-kept one then has end <= max end seen so far.
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
        return a.start != b.start ? a.start < b.start : a.end > b.end;
    });
    if (containment_filter) {
        std::vector<PalindromeHit> kept;
        int64_t max_end = -1;
        for (auto& h : hits) {
            if (h.end > max_end) {
                max_end = h.end;
                kept.push_back(std::move(h));
            }
        }
        hits = std::move(kept);
    }
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
        return a.start != b.start ? a.start < b.start : a.end < b.end;
    });
    return hits;
}

namespace {

void push_run(std::vector<OpRun>& runs, AlignOp op, int64_t count) {
    if (count <= 0) return;
    if (!runs.empty() && runs.back().op == op) {
        runs.back().count += count;
    } else {
        runs.push_back(OpRun{op, count});
    }
}

}  // namespace

Alignment traceback(const ReachTable& table, const Sequence& seq,
                    MatchRule rule, int64_t d) {
    if (!table.all_rows) {
        throw std::invalid_argument(
            "traceback requires a table built with keep_all_rows");
    }
    assert(d >= 0 && d < table.diags);
    const int64_t n = table.n;

    // Ops are collected outermost-first and reversed into center-out order.
    std::vector<OpRun> rev;
    int64_t e = table.min_errors(d);
    int64_t t = table.reach(e, d);
    int64_t cur = d;

    while (e > 0) {
        const int64_t x = cur & 1;
        const int64_t tm = t_max(cur, n);
        const int32_t same = table.reach(e - 1, cur);
        const int32_t from_lo =
            cur - 1 >= 0 ? table.reach(e - 1, cur - 1) : ReachTable::kInvalid;
        const int32_t from_hi = cur + 1 < table.diags ? table.reach(e - 1, cur + 1)
                                                      : ReachTable::kInvalid;

        // Pre-slide value: clamped maximum of the three predecessor
        // candidates, exactly as the forward pass computed it.
        int64_t c = ReachTable::kInvalid;
        if (same != ReachTable::kInvalid)
            c = std::max(c, std::min<int64_t>(same + 1, tm));
        if (from_lo != ReachTable::kInvalid)
            c = std::max(c, std::min<int64_t>(from_lo + x, tm));
        if (from_hi != ReachTable::kInvalid)
            c = std::max(c, std::min<int64_t>(from_hi + x, tm));
        assert(c != ReachTable::kInvalid);

        // When the path was clamped at the boundary the step lands below the
        // forward pre-slide value, so enter at min(c, t).
        const int64_t entry = std::min(c, t);
        push_run(rev, AlignOp::match, t - entry);

        if (same != ReachTable::kInvalid && entry >= 1 && same >= entry - 1) {
            push_run(rev, AlignOp::mismatch, 1);
            t = entry - 1;
        } else if (from_lo != ReachTable::kInvalid && entry - x >= 0 &&
                   from_lo >= entry - x) {
            push_run(rev, AlignOp::right_indel, 1);
            cur -= 1;
            t = entry - x;
        } else if (from_hi != ReachTable::kInvalid && entry - x >= 0 &&
                   from_hi >= entry - x) {
            push_run(rev, AlignOp::left_indel, 1);
            cur += 1;
            t = entry - x;
        } else {
            assert(false && "reach table admits no predecessor");
            break;
        }
        --e;
    }
    push_run(rev, AlignOp::match, t);

    Alignment a;
    a.origin_d = cur;
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        push_run(a.runs, it->op, it->count);
    }
#ifndef NDEBUG
    // Every M'd pair must actually match under the rule.
    {
        Cell cc = cell_of(a.origin_d, 0, n);
        for (const OpRun& r : a.runs) {
            for (int64_t i = 0; i < r.count; ++i) {
                if (r.op == AlignOp::match)
                    assert(rule.matches(seq.at(cc.left - 1), seq.at(cc.right + 1)));
                switch (r.op) {
                    case AlignOp::match:
                    case AlignOp::mismatch:
                        --cc.left;
                        ++cc.right;
                        break;
                    case AlignOp::left_indel:
                        --cc.left;
                        break;
                    case AlignOp::right_indel:
                        ++cc.right;
                        break;
                }
            }
        }
    }
#else
    (void)seq;
    (void)rule;
#endif
    return a;
}

}  // namespace palfind
