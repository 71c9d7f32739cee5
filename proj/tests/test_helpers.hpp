#pragma once

#include <random>
#include <string>
#include <string_view>

#include "palfind/core.hpp"

namespace palfind::testing {

inline Sequence random_sequence(std::mt19937_64& rng, int64_t n,
                                std::string_view alphabet,
                                std::string id = "rnd") {
    Sequence seq;
    seq.id = std::move(id);
    seq.residues.reserve(static_cast<size_t>(n));
    for (int64_t i = 0; i < n; ++i) {
        seq.residues.push_back(alphabet[rng() % alphabet.size()]);
    }
    return seq;
}

// Enumerates the i-th string of the given length over the alphabet.
inline Sequence nth_string(uint64_t index, int64_t length,
                           std::string_view alphabet) {
    Sequence seq;
    seq.id = "enum";
    seq.residues.reserve(static_cast<size_t>(length));
    for (int64_t i = 0; i < length; ++i) {
        seq.residues.push_back(alphabet[index % alphabet.size()]);
        index /= alphabet.size();
    }
    return seq;
}

}  // namespace palfind::testing
