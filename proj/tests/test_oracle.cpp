#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "palfind/oracle.hpp"
#include "test_helpers.hpp"

using namespace palfind;
using palfind::testing::random_sequence;

namespace {

// Second, top-down formulation of the same cost, written separately from the
// bottom-up fill to guard against index slips.
int32_t ref_cost(const Sequence& s, MatchRule rule, int64_t i, int64_t j,
                 std::vector<int32_t>& memo) {
    if (i >= j) return 0;  // empty or single symbol
    const int64_t n = s.size();
    int32_t& slot = memo[static_cast<size_t>(i * n + j)];
    if (slot >= 0) return slot;
    const int32_t mis = rule.matches(s.at(i), s.at(j)) ? 0 : 1;
    int32_t best = ref_cost(s, rule, i + 1, j - 1, memo) + mis;
    best = std::min(best, ref_cost(s, rule, i + 1, j, memo) + 1);
    best = std::min(best, ref_cost(s, rule, i, j - 1, memo) + 1);
    return slot = best;
}

void check_against_reference(const Sequence& s, MatchRule rule) {
    const CostMatrix m = pal_cost(s, rule);
    const int64_t n = s.size();
    std::vector<int32_t> memo(static_cast<size_t>(n * n), -1);
    for (int64_t i = 0; i < n; ++i) {
        for (int64_t j = i; j < n; ++j) {
            CAPTURE(s.residues);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(m.at(i, j) == ref_cost(s, rule, i, j, memo));
        }
    }
}

}  // namespace

TEST_CASE("pal_cost worked examples") {
    CHECK(pal_cost(Sequence{"s", "A"}, identity_rule()).at(0, 0) == 0);
    CHECK(pal_cost(Sequence{"s", "ABCA"}, identity_rule()).at(0, 3) == 1);
    CHECK(pal_cost(Sequence{"s", "ACGT"}, dna_rule()).at(0, 3) == 0);
}

TEST_CASE("pal_cost agrees with an independent top-down formulation") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 60; ++iter) {
        const int64_t n = 1 + static_cast<int64_t>(rng() % 12);
        check_against_reference(random_sequence(rng, n, "AT"), identity_rule());
        check_against_reference(random_sequence(rng, n, "ACGT"), dna_rule());
        check_against_reference(random_sequence(rng, n, "ACGTN"), dna_rule());
    }
}

TEST_CASE("pal_cost bounds: 0 <= D[i][j] <= ceil(len/2)") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 40; ++iter) {
        const Sequence s = random_sequence(rng, 1 + (rng() % 20), "ACGT");
        const CostMatrix m = pal_cost(s, dna_rule());
        for (int64_t i = 0; i < s.size(); ++i) {
            for (int64_t j = i; j < s.size(); ++j) {
                CHECK(m.at(i, j) >= 0);
                CHECK(m.at(i, j) <= (j - i + 2) / 2);
            }
        }
    }
}

TEST_CASE("oracle_reach worked examples") {
    CHECK(oracle_reach(Sequence{"s", "ACGT"}, dna_rule(), 3, 0) == 2);
    CHECK(oracle_reach(Sequence{"s", "AABA"}, identity_rule(), 3, 1) == 2);
    CHECK(oracle_reach(Sequence{"s", "AABA"}, identity_rule(), 3, 0) == 0);
}

TEST_CASE("oracle_reach is monotone in e and achievable") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        const Sequence s = random_sequence(rng, 1 + (rng() % 24), "ACGT");
        for (MatchRule rule : {identity_rule(), dna_rule()}) {
            const CostMatrix m = pal_cost(s, rule);
            for (int64_t d = 0; d < diagonal_count(s.size()); ++d) {
                int64_t prev = 0;
                for (int64_t e = 0; e <= 4; ++e) {
                    const int64_t t = oracle_reach(m, d, e);
                    CHECK(t >= prev);
                    const Cell c = cell_of(d, t, s.size());
                    CHECK(m.at(c.left, c.right) <= e);
                    prev = t;
                }
            }
        }
    }
}

TEST_CASE("pal_cost rejects sequences over the cap") {
    Sequence big{"big", std::string(513, 'A')};
    CHECK_THROWS_AS(pal_cost(big, identity_rule()), std::invalid_argument);
    CHECK_NOTHROW(pal_cost(big, identity_rule(), 1024));
}
