#include "palfind/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace palfind {

namespace {

// Own comparison logic; shares nothing with the engines.
bool oracle_matches(MatchMode mode, unsigned char a, unsigned char b) {
    if (mode == MatchMode::identity) return a == b;
    switch (a) {
        case 'A':
            return b == 'T';
        case 'T':
            return b == 'A';
        case 'C':
            return b == 'G';
        case 'G':
            return b == 'C';
        default:
            return false;
    }
}

}  // namespace

CostMatrix pal_cost(const Sequence& seq, MatchRule rule, int64_t cap) {
    const int64_t n = seq.size();
    if (n > cap) {
        throw std::invalid_argument("pal_cost: sequence longer than the cap");
    }
    CostMatrix m;
    m.n = n;
    m.cost.assign(static_cast<size_t>(n * n), 0);
    for (int64_t len = 2; len <= n; ++len) {
        for (int64_t i = 0; i + len <= n; ++i) {
            const int64_t j = i + len - 1;
            const int32_t inner = len == 2 ? 0 : m.at(i + 1, j - 1);
            const int32_t mis =
                oracle_matches(rule.mode, seq.at(i), seq.at(j)) ? 0 : 1;
            m.cost[static_cast<size_t>(i * n + j)] =
                std::min({inner + mis, m.at(i + 1, j) + 1, m.at(i, j - 1) + 1});
        }
    }
    return m;
}

int64_t oracle_reach(const CostMatrix& m, int64_t d, int64_t e) {
    assert(e >= 0);
    for (int64_t t = t_max(d, m.n); t > 0; --t) {
        const Cell c = cell_of(d, t, m.n);
        if (m.at(c.left, c.right) <= e) return t;
    }
    return 0;
}

int64_t oracle_reach(const Sequence& seq, MatchRule rule, int64_t d, int64_t e,
                     int64_t cap) {
    return oracle_reach(pal_cost(seq, rule, cap), d, e);
}

}  // namespace palfind
