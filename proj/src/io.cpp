#include "palfind/io.hpp"

#include <cctype>
#include <istream>

namespace palfind {

std::vector<Sequence> parse_fasta(std::istream& in, MatchMode mode) {
    std::vector<Sequence> records;
    std::string line;
    int64_t line_no = 0;
    bool seen_header = false;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            seen_header = true;
            size_t end = 1;
            while (end < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[end])))
                ++end;
            records.push_back(Sequence{line.substr(1, end - 1), {}});
            continue;
        }
        if (!seen_header) {
            throw FastaError(line_no, "sequence data before any '>' header");
        }
        std::string& residues = records.back().residues;
        for (char c : line) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            residues.push_back(
                mode == MatchMode::dna_complement
                    ? static_cast<char>(normalize_dna(static_cast<unsigned char>(c)))
                    : c);
        }
    }
    if (in.bad()) {
        throw std::ios_base::failure("error reading FASTA stream");
    }
    return records;
}

std::string format_hit(const PalindromeHit& hit) {
    std::string s;
    s.reserve(64);
    s += hit.seq_id;
    s += '\t';
    s += std::to_string(hit.start);
    s += '\t';
    s += std::to_string(hit.end);
    s += '\t';
    s += std::to_string(hit.length);
    s += '\t';
    s += std::to_string(hit.errors);
    s += '\t';
    s += to_string(hit.parity);
    s += '\t';
    s += std::to_string(hit.diagonal);
    s += '\t';
    if (hit.alignment && !hit.alignment->runs.empty()) {
        s += hit.alignment->to_string();
    } else {
        s += '-';
    }
    return s;
}

}  // namespace palfind
