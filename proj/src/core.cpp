#include "palfind/core.hpp"

namespace palfind {

const char* to_string(MatchMode mode) {
    return mode == MatchMode::identity ? "id" : "dna";
}

const char* to_string(Parity p) {
    return p == Parity::odd ? "odd" : "even";
}

unsigned char normalize_dna(unsigned char c) {
    if (c >= 'a' && c <= 'z') c = static_cast<unsigned char>(c - 'a' + 'A');
    switch (c) {
        case 'A':
        case 'C':
        case 'G':
        case 'T':
            return c;
        default:
            return 'N';
    }
}

std::string normalize_dna(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) out.push_back(static_cast<char>(normalize_dna(static_cast<unsigned char>(c))));
    return out;
}

Sequence make_dna_sequence(std::string id, std::string_view raw) {
    return Sequence{std::move(id), normalize_dna(raw)};
}

std::string reverse_complement(std::string_view dna) {
    std::string out;
    out.reserve(dna.size());
    for (auto it = dna.rbegin(); it != dna.rend(); ++it) {
        const unsigned char c = detail::kComplement[static_cast<unsigned char>(*it)];
        out.push_back(c != 0 ? static_cast<char>(c) : 'N');
    }
    return out;
}

}  // namespace palfind
