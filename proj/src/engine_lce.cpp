#include "palfind/engine_lce.hpp"

#include <algorithm>
#include <numeric>

#include "search_core.hpp"

namespace palfind {

namespace {

// Separator and N placeholders, all distinct and above any byte value.
constexpr int32_t kMidSentinel = 256;
constexpr int32_t kEndSentinel = 257;
constexpr int32_t kForwardN = 258;
constexpr int32_t kReverseN = 259;

// Doubling construction with counting sort, O(n log n).
std::vector<int32_t> build_suffix_array(const std::vector<int32_t>& input) {
    const int64_t sn = static_cast<int64_t>(input.size());
    std::vector<int32_t> text(input.begin(), input.end());

    // Append a unique smallest terminator and shift symbols positive.
    const int32_t least =
        sn == 0 ? 0 : *std::min_element(text.begin(), text.end());
    for (int32_t& c : text) c -= least - 1;
    text.push_back(0);

    const int64_t n = sn + 1;
    const int64_t alpha = 1 + *std::max_element(text.begin(), text.end());
    const int64_t buckets = std::max(n, alpha) + 1;

    std::vector<int32_t> sa(n), rank(n, 0), aux(n);
    std::vector<int32_t> count(static_cast<size_t>(buckets), 0);

    // aux holds the current order, sa the sorted destination.
    auto counting_sort = [&](const std::vector<int32_t>& key) {
        std::fill(count.begin(), count.end(), 0);
        for (int64_t i = 0; i < n; ++i) ++count[static_cast<size_t>(key[aux[i]] + 1)];
        for (int64_t i = 1; i < buckets; ++i) count[i] += count[i - 1];
        for (int64_t i = 0; i < n; ++i)
            sa[count[static_cast<size_t>(key[aux[i]])]++] = aux[i];
    };

    std::iota(aux.begin(), aux.end(), 0);
    counting_sort(text);

    int32_t current = 0;
    for (int64_t i = 1; i < n; ++i) {
        current += text[sa[i - 1]] != text[sa[i]];
        rank[sa[i]] = current;
    }

    for (int64_t length = 1; current != n - 1; length <<= 1) {
        for (int64_t i = 0; i < n; ++i) {
            aux[i] = sa[i] - static_cast<int32_t>(length);
            if (aux[i] < 0) aux[i] += static_cast<int32_t>(n);
        }
        counting_sort(rank);

        current = 0;
        aux[sa[0]] = 0;
        for (int64_t i = 1; i < n; ++i) {
            if (rank[sa[i - 1]] == rank[sa[i]]) {
                const int32_t x = sa[i - 1] + length < n
                                      ? rank[sa[i - 1] + length]
                                      : -1;
                const int32_t y = sa[i] + length < n ? rank[sa[i] + length] : -1;
                current += x != y;
            } else {
                current += 1;
            }
            aux[sa[i]] = current;
        }
        std::swap(aux, rank);
    }

    sa.erase(sa.begin());  // drop the terminator suffix
    return sa;
}

// Kasai: lcp[r] between suffixes of rank r and r+1.
std::vector<int32_t> build_lcp(const std::vector<int32_t>& text,
                               const std::vector<int32_t>& sa,
                               const std::vector<int32_t>& rank) {
    const int64_t n = static_cast<int64_t>(sa.size());
    std::vector<int32_t> lcp(n > 0 ? static_cast<size_t>(n) : 0, 0);
    int64_t h = 0;
    for (int64_t i = 0; i < n; ++i) {
        if (rank[i] == n - 1) {
            h = 0;
            continue;
        }
        const int64_t j = sa[rank[i] + 1];
        while (i + h < n && j + h < n && text[i + h] == text[j + h]) ++h;
        lcp[static_cast<size_t>(rank[i])] = static_cast<int32_t>(h);
        if (h > 0) --h;
    }
    return lcp;
}

}  // namespace

LceIndex::RangeMin::RangeMin(const std::vector<int32_t>& values)
    : values_(values) {
    const int64_t n = static_cast<int64_t>(values_.size());
    nblocks_ = (n + kBlock - 1) / kBlock;
    if (nblocks_ == 0) return;
    levels_ = 1;
    while ((int64_t{1} << levels_) <= nblocks_) ++levels_;
    sparse_.assign(static_cast<size_t>(levels_ * nblocks_), 0);
    for (int64_t b = 0; b < nblocks_; ++b) {
        int32_t m = values_[static_cast<size_t>(b * kBlock)];
        const int64_t hi = std::min(n, (b + 1) * kBlock);
        for (int64_t i = b * kBlock + 1; i < hi; ++i)
            m = std::min(m, values_[static_cast<size_t>(i)]);
        sparse_[static_cast<size_t>(b)] = m;
    }
    for (int64_t lv = 1; lv < levels_; ++lv) {
        const int64_t span = int64_t{1} << lv;
        for (int64_t b = 0; b + span <= nblocks_; ++b) {
            sparse_[static_cast<size_t>(lv * nblocks_ + b)] =
                std::min(sparse_[static_cast<size_t>((lv - 1) * nblocks_ + b)],
                         sparse_[static_cast<size_t>((lv - 1) * nblocks_ + b +
                                                     span / 2)]);
        }
    }
}

int32_t LceIndex::RangeMin::min_in(int64_t lo, int64_t hi) const {
    assert(lo >= 0 && lo < hi && hi <= static_cast<int64_t>(values_.size()));
    const int64_t blo = lo / kBlock;
    const int64_t bhi = (hi - 1) / kBlock;
    auto scan = [&](int64_t a, int64_t b) {
        int32_t m = values_[static_cast<size_t>(a)];
        for (int64_t i = a + 1; i < b; ++i)
            m = std::min(m, values_[static_cast<size_t>(i)]);
        return m;
    };
    if (blo == bhi) return scan(lo, hi);
    int32_t m = std::min(scan(lo, (blo + 1) * kBlock), scan(bhi * kBlock, hi));
    const int64_t first = blo + 1;
    const int64_t last = bhi;  // full blocks [first, last)
    if (first < last) {
        int64_t lv = 0;
        while ((int64_t{1} << (lv + 1)) <= last - first) ++lv;
        const int64_t span = int64_t{1} << lv;
        m = std::min(m, sparse_[static_cast<size_t>(lv * nblocks_ + first)]);
        m = std::min(m,
                     sparse_[static_cast<size_t>(lv * nblocks_ + last - span)]);
    }
    return m;
}

LceIndex LceIndex::build(const Sequence& seq, MatchRule rule) {
    LceIndex idx;
    const int64_t n = seq.size();
    idx.n_ = n;

    idx.text_.reserve(static_cast<size_t>(2 * n + 2));
    const bool dna = rule.mode == MatchMode::dna_complement;
    for (int64_t i = 0; i < n; ++i) {
        const unsigned char c = seq.at(i);
        idx.text_.push_back(dna && c == 'N' ? kForwardN : c);
    }
    idx.text_.push_back(kMidSentinel);
    for (int64_t i = n - 1; i >= 0; --i) {
        const unsigned char c = seq.at(i);
        if (dna) {
            const unsigned char comp = detail::kComplement[c];
            idx.text_.push_back(comp != 0 ? comp : kReverseN);
        } else {
            idx.text_.push_back(c);
        }
    }
    idx.text_.push_back(kEndSentinel);

    idx.sa_ = build_suffix_array(idx.text_);
    const int64_t m = static_cast<int64_t>(idx.text_.size());
    idx.rank_.assign(static_cast<size_t>(m), 0);
    for (int64_t r = 0; r < m; ++r) idx.rank_[static_cast<size_t>(idx.sa_[r])] = static_cast<int32_t>(r);
    idx.lcp_ = build_lcp(idx.text_, idx.sa_, idx.rank_);
    idx.rmq_ = RangeMin(idx.lcp_);
    return idx;
}

int64_t LceIndex::lce(int64_t i, int64_t j) const {
    if (n_ == 0) return 0;
    const int64_t m = text_size();
    assert(i >= 0 && i < m && j >= 0 && j < m);
    if (i == j) return m - i;
    const int32_t ri = rank_[static_cast<size_t>(i)];
    const int32_t rj = rank_[static_cast<size_t>(j)];
    const int64_t lo = std::min(ri, rj);
    const int64_t hi = std::max(ri, rj);
    return rmq_.min_in(lo, hi);
}

int64_t slide_lce(const LceIndex& index, int64_t d, int64_t t, int64_t n,
                  SearchStats& stats) {
    assert(n == index.n());
    const int64_t tm = t_max(d, n);
    assert(t >= 0 && t <= tm);
    const Cell c = cell_of(d, t, n);
    ++stats.lce_queries;
    const int64_t ext = index.lce(c.right + 1, (n + 1) + (n - c.left));
    return std::min(t + ext, tm);
}

ReachTable search_lce(const Sequence& seq, MatchRule rule, int64_t k,
                      bool keep_all_rows, SearchStats& stats) {
    assert(k >= 0);
    const LceIndex index = LceIndex::build(seq, rule);
    const int64_t n = seq.size();
    return detail::run_search(n, k, keep_all_rows, [&](int64_t d, int64_t t) {
        return slide_lce(index, d, t, n, stats);
    });
}

}  // namespace palfind
