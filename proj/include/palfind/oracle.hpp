#pragma once

#include <cstdint>
#include <vector>

#include "palfind/core.hpp"

namespace palfind {

// Brute-force ground truth for tests. D[i][j] is the minimal edit cost of
// s[i..j] as an approximate palindrome under the rule, computed outside-in:
//
//   D[i][i] = 0, D[i+1][i] = 0,
//   D[i][j] = min(D[i+1][j-1] + (s[i]~s[j] ? 0 : 1),
//                 D[i+1][j] + 1, D[i][j-1] + 1).
//
// Quadratic time and space; capped to small inputs on purpose. The
// comparison logic is deliberately independent of the engines.
struct CostMatrix {
    int64_t n = 0;
    std::vector<int32_t> cost;  // n*n row-major, valid for i <= j

    int32_t at(int64_t i, int64_t j) const {
        assert(i >= 0 && j < n && i <= j + 1);
        if (i > j) return 0;  // empty span
        return cost[static_cast<size_t>(i * n + j)];
    }
};

inline constexpr int64_t kOracleDefaultCap = 512;

// Throws std::invalid_argument when seq is longer than cap.
CostMatrix pal_cost(const Sequence& seq, MatchRule rule,
                    int64_t cap = kOracleDefaultCap);

// Largest t in [0, t_max(d)] whose cell has cost <= e (t = 0 always does).
int64_t oracle_reach(const CostMatrix& m, int64_t d, int64_t e);
int64_t oracle_reach(const Sequence& seq, MatchRule rule, int64_t d, int64_t e,
                     int64_t cap = kOracleDefaultCap);

}  // namespace palfind
