#include "palfind/bench.hpp"

#include <chrono>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "palfind/engine_greedy.hpp"
#include "palfind/engine_lce.hpp"

namespace palfind {

const char* to_string(EngineKind e) {
    return e == EngineKind::greedy ? "greedy" : "lce";
}

const char* to_string(Generator g) {
    switch (g) {
        case Generator::uniform_dna:
            return "uniform_dna";
        case Generator::at_rich_dna:
            return "at_rich_dna";
        case Generator::homopolymer:
            return "homopolymer";
        case Generator::alternating:
            return "alternating";
    }
    return "?";
}

Sequence generate(Generator kind, int64_t n, double at_fraction, uint64_t seed) {
    assert(n >= 0);
    Sequence seq;
    seq.id = to_string(kind);
    seq.residues.reserve(static_cast<size_t>(n));
    std::mt19937_64 rng(seed);
    switch (kind) {
        case Generator::uniform_dna: {
            static constexpr char bases[4] = {'A', 'C', 'G', 'T'};
            for (int64_t i = 0; i < n; ++i)
                seq.residues.push_back(bases[rng() & 3]);
            break;
        }
        case Generator::at_rich_dna: {
            assert(at_fraction >= 0.0 && at_fraction <= 1.0);
            for (int64_t i = 0; i < n; ++i) {
                const uint64_t r = rng();
                const double u =
                    static_cast<double>(r >> 11) * 0x1.0p-53;  // [0, 1)
                const bool first = (r & 1) != 0;
                if (u < at_fraction)
                    seq.residues.push_back(first ? 'A' : 'T');
                else
                    seq.residues.push_back(first ? 'C' : 'G');
            }
            break;
        }
        case Generator::homopolymer:
            seq.residues.assign(static_cast<size_t>(n), 'A');
            break;
        case Generator::alternating:
            for (int64_t i = 0; i < n; ++i)
                seq.residues.push_back(i % 2 == 0 ? 'A' : 'T');
            break;
    }
    return seq;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return {};
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

Generator parse_generator(const std::string& s, int64_t line) {
    if (s == "uniform_dna") return Generator::uniform_dna;
    if (s == "at_rich_dna") return Generator::at_rich_dna;
    if (s == "homopolymer") return Generator::homopolymer;
    if (s == "alternating") return Generator::alternating;
    throw std::runtime_error("plan line " + std::to_string(line) +
                             ": unknown generator '" + s + "'");
}

EngineKind parse_engine(const std::string& s, int64_t line) {
    if (s == "greedy") return EngineKind::greedy;
    if (s == "lce") return EngineKind::lce;
    throw std::runtime_error("plan line " + std::to_string(line) +
                             ": unknown engine '" + s + "'");
}

}  // namespace

std::vector<BenchCell> parse_plan(std::istream& in) {
    std::vector<BenchCell> cells;
    std::string line;
    int64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;

        std::vector<std::string> fields;
        std::stringstream ss(stripped);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(trim(field));
        if (fields.size() != 6) {
            throw std::runtime_error(
                "plan line " + std::to_string(line_no) +
                ": expected generator,n,k,engine,at_fraction,seed");
        }
        try {
            BenchCell cell;
            cell.gen = parse_generator(fields[0], line_no);
            cell.n = std::stoll(fields[1]);
            cell.k = std::stoll(fields[2]);
            cell.engine = parse_engine(fields[3], line_no);
            cell.at_fraction = std::stod(fields[4]);
            cell.seed = std::stoull(fields[5]);
            if (cell.n < 0 || cell.k < 0 || cell.at_fraction < 0.0 ||
                cell.at_fraction > 1.0) {
                throw std::out_of_range("value out of range");
            }
            cells.push_back(cell);
        } catch (const std::runtime_error&) {
            throw;
        } catch (const std::exception& e) {
            throw std::runtime_error("plan line " + std::to_string(line_no) +
                                     ": " + e.what());
        }
    }
    return cells;
}

BenchReport run_bench(const std::vector<BenchCell>& plan) {
    BenchReport report;
    for (const BenchCell& cell : plan) {
        const Sequence seq =
            generate(cell.gen, cell.n, cell.at_fraction, cell.seed);
        const MatchRule rule = cell.gen == Generator::homopolymer
                                   ? identity_rule()
                                   : dna_rule();
        SearchStats stats;
        const auto start = std::chrono::steady_clock::now();
        if (cell.engine == EngineKind::greedy) {
            search(seq, rule, cell.k, /*keep_all_rows=*/false, stats);
        } else {
            search_lce(seq, rule, cell.k, /*keep_all_rows=*/false, stats);
        }
        const auto stop = std::chrono::steady_clock::now();

        BenchRow row;
        row.generator = to_string(cell.gen);
        row.n = cell.n;
        row.k = cell.k;
        row.engine = to_string(cell.engine);
        row.seconds = std::chrono::duration<double>(stop - start).count();
        row.comparisons = stats.comparisons;
        row.lce_queries = stats.lce_queries;
        row.ratio = cell.n > 0
                        ? static_cast<double>(stats.comparisons) /
                              (static_cast<double>(cell.k + 1) *
                               static_cast<double>(cell.n))
                        : 0.0;
        report.rows.push_back(std::move(row));
    }
    return report;
}

void write_csv(const BenchReport& report, std::ostream& out) {
    out << "generator,n,k,engine,seconds,comparisons,lce_queries,ratio\n";
    char buf[64];
    for (const BenchRow& r : report.rows) {
        out << r.generator << ',' << r.n << ',' << r.k << ',' << r.engine << ',';
        std::snprintf(buf, sizeof buf, "%.6f", r.seconds);
        out << buf << ',' << r.comparisons << ',' << r.lce_queries << ',';
        std::snprintf(buf, sizeof buf, "%.4f", r.ratio);
        out << buf << '\n';
    }
}

}  // namespace palfind
