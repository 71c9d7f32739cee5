#pragma once

// Row-advance skeleton shared by the greedy and LCE engines. The two differ
// only in how the free extension is computed, so the search is templated on
// the slide function (d, t) -> t'.

#include <cstdint>
#include <utility>
#include <vector>

#include "palfind/core.hpp"
#include "palfind/engine_greedy.hpp"

namespace palfind::detail {

template <class SlideFn>
void fill_row0(int64_t diags, SlideFn&& slide_fn, std::vector<int32_t>& row) {
    row.resize(static_cast<size_t>(diags));
    for (int64_t d = 0; d < diags; ++d) {
        row[static_cast<size_t>(d)] = static_cast<int32_t>(slide_fn(d, 0));
    }
}

template <class SlideFn>
void fill_next_row(int64_t n, int64_t diags, const std::vector<int32_t>& prev,
                   SlideFn&& slide_fn, std::vector<int32_t>& row) {
    row.resize(static_cast<size_t>(diags));
    for (int64_t d = 0; d < diags; ++d) {
        const int64_t x = d & 1;
        const int64_t tm = t_max(d, n);
        int64_t best = ReachTable::kInvalid;
        auto consider = [&](int64_t src, int64_t bonus) {
            if (src < 0 || src >= diags) return;
            const int32_t v = prev[static_cast<size_t>(src)];
            if (v == ReachTable::kInvalid) return;
            best = std::max(best, std::min<int64_t>(v + bonus, tm));
        };
        consider(d, 1);
        consider(d - 1, x);
        consider(d + 1, x);
        const int64_t from = best == ReachTable::kInvalid ? 0 : best;
        row[static_cast<size_t>(d)] = static_cast<int32_t>(slide_fn(d, from));
    }
}

template <class SlideFn>
ReachTable run_search(int64_t n, int64_t k, bool keep_all_rows,
                      SlideFn&& slide_fn) {
    ReachTable table;
    table.n = n;
    table.k = k;
    table.diags = diagonal_count(n);
    table.all_rows = keep_all_rows;
    if (table.diags == 0) return table;

    const size_t diags = static_cast<size_t>(table.diags);
    table.min_e.assign(diags, 0);
    if (keep_all_rows) table.rows.reserve(static_cast<size_t>(k + 1) * diags);

    std::vector<int32_t> cur;
    std::vector<int32_t> prev;
    fill_row0(table.diags, slide_fn, cur);
    if (keep_all_rows) table.rows.insert(table.rows.end(), cur.begin(), cur.end());

    for (int64_t e = 1; e <= k; ++e) {
        prev.swap(cur);
        fill_next_row(n, table.diags, prev, slide_fn, cur);
        for (size_t d = 0; d < diags; ++d) {
            if (cur[d] > prev[d]) table.min_e[d] = static_cast<int32_t>(e);
        }
        if (keep_all_rows) table.rows.insert(table.rows.end(), cur.begin(), cur.end());
    }
    if (!keep_all_rows) table.rows = std::move(cur);
    return table;
}

}  // namespace palfind::detail
