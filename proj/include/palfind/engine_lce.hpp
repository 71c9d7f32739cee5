#pragma once

#include <cstdint>
#include <vector>

#include "palfind/core.hpp"
#include "palfind/engine_greedy.hpp"

namespace palfind {

// ---------------------------------------------------------------------------
// Longest-common-extension index over the concatenation
//
//     text = s . '#' . r . '$'      r = reverse(s)             (identity)
//                                   r = reverse(complement(s)) (dna)
//
// so that the free extension along a diagonal reduces to one lce query
// between a suffix of s and a suffix of r. Built from a suffix array, the
// adjacent-suffix common-prefix array, and a constant-time range-minimum
// structure. The separators are distinct out-of-alphabet symbols; in dna
// mode N is mapped to two further distinct symbols (one per arm) so it never
// extends a match.
// ---------------------------------------------------------------------------

class LceIndex {
public:
    LceIndex() = default;

    static LceIndex build(const Sequence& seq, MatchRule rule);

    // Longest common prefix of text[i..] and text[j..].
    int64_t lce(int64_t i, int64_t j) const;

    int64_t n() const { return n_; }
    int64_t text_size() const { return static_cast<int64_t>(text_.size()); }
    int32_t text_symbol(int64_t i) const { return text_[static_cast<size_t>(i)]; }

private:
    class RangeMin {
    public:
        RangeMin() = default;
        explicit RangeMin(const std::vector<int32_t>& values);
        // Minimum over [lo, hi); requires lo < hi.
        int32_t min_in(int64_t lo, int64_t hi) const;

    private:
        static constexpr int64_t kBlock = 16;
        std::vector<int32_t> values_;
        std::vector<int32_t> sparse_;  // levels_ x nblocks_, row-major
        int64_t nblocks_ = 0;
        int64_t levels_ = 0;
    };

    int64_t n_ = 0;
    std::vector<int32_t> text_;
    std::vector<int32_t> sa_;
    std::vector<int32_t> rank_;
    std::vector<int32_t> lcp_;  // lcp_[r] = lcp(suffix sa_[r], suffix sa_[r+1])
    RangeMin rmq_;
};

// Same contract as slide(), computed from one lce query:
// min(t + lce(right+1, (n+1) + (n-left)), t_max(d)).
int64_t slide_lce(const LceIndex& index, int64_t d, int64_t t, int64_t n,
                  SearchStats& stats);

// Identical contract to search(); issues at most one lce query per (d, e)
// cell, so queries <= (k+1)(2n-1) per search.
ReachTable search_lce(const Sequence& seq, MatchRule rule, int64_t k,
                      bool keep_all_rows, SearchStats& stats);

}  // namespace palfind
