#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <string>
#include <string_view>

namespace palfind {

// ---------------------------------------------------------------------------
// Match rules
// ---------------------------------------------------------------------------

enum class MatchMode : uint8_t { identity, dna_complement };

namespace detail {
// 0 means "complements nothing". Only the four upper-case bases complement;
// N (and anything else) never matches, not even itself.
constexpr std::array<unsigned char, 256> make_complement_table() {
    std::array<unsigned char, 256> t{};
    t['A'] = 'T';
    t['T'] = 'A';
    t['C'] = 'G';
    t['G'] = 'C';
    return t;
}
inline constexpr std::array<unsigned char, 256> kComplement = make_complement_table();
}  // namespace detail

struct MatchRule {
    MatchMode mode = MatchMode::dna_complement;

    bool matches(unsigned char a, unsigned char b) const {
        if (mode == MatchMode::identity) return a == b;
        const unsigned char c = detail::kComplement[a];
        return c != 0 && c == b;
    }
};

inline MatchRule identity_rule() { return MatchRule{MatchMode::identity}; }
inline MatchRule dna_rule() { return MatchRule{MatchMode::dna_complement}; }

const char* to_string(MatchMode mode);

// ---------------------------------------------------------------------------
// Sequences
// ---------------------------------------------------------------------------

struct Sequence {
    std::string id;
    std::string residues;

    int64_t size() const { return static_cast<int64_t>(residues.size()); }
    unsigned char at(int64_t i) const {
        assert(i >= 0 && i < size());
        return static_cast<unsigned char>(residues[static_cast<size_t>(i)]);
    }
};

// Folds lower case to upper case and maps every byte outside {A,C,G,T} to N.
unsigned char normalize_dna(unsigned char c);
std::string normalize_dna(std::string_view raw);

Sequence make_dna_sequence(std::string id, std::string_view raw);

// Reverse complement of a normalized DNA string; N stays N.
std::string reverse_complement(std::string_view dna);

// ---------------------------------------------------------------------------
// Diagonal geometry
//
// A candidate palindrome is addressed by (d, t). Diagonal d fixes the center:
// even d = 2i is centered on symbol i (odd length), odd d = 2i+1 on the gap
// after symbol i (even length). Extension distance t counts symbol pairs
// consumed outward from the center. The cell at (d, t) is the inclusive span
// [left, right] with left = ceil(d/2) - t and right = floor(d/2) + t, so a
// cell's diagonal is simply left + right. Extending by one pair keeps d and
// bumps t; consuming a single unpaired symbol moves to diagonal d-1 (left
// side) or d+1 (right side).
// ---------------------------------------------------------------------------

struct Cell {
    int64_t left = 0;
    int64_t right = 0;  // inclusive; empty span when left == right + 1
    bool operator==(const Cell&) const = default;
};

// Diagonals run d in [0, 2n-2]; none exist for the empty string.
inline int64_t diagonal_count(int64_t n) { return n > 0 ? 2 * n - 1 : 0; }

// Largest t before the span would overrun either end of the string.
inline int64_t t_max(int64_t d, int64_t n) {
    assert(n > 0 && d >= 0 && d <= 2 * n - 2);
    return std::min((d + 1) / 2, n - 1 - d / 2);
}

inline Cell cell_of(int64_t d, int64_t t, int64_t n) {
    assert(t >= 0 && t <= t_max(d, n));
    (void)n;
    return Cell{(d + 1) / 2 - t, d / 2 + t};
}

inline int64_t length_of(int64_t d, int64_t t) {
    assert(d >= 0 && t >= 0);
    return 2 * t + (d % 2 == 0 ? 1 : 0);
}

// ---------------------------------------------------------------------------
// Parity of a reported palindrome (of its length: even diagonals carry
// odd-length palindromes and vice versa).
// ---------------------------------------------------------------------------

enum class Parity : uint8_t { odd, even };

inline Parity length_parity(int64_t length) {
    return (length % 2 != 0) ? Parity::odd : Parity::even;
}

const char* to_string(Parity p);

}  // namespace palfind
