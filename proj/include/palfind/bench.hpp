#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "palfind/core.hpp"

namespace palfind {

enum class EngineKind : uint8_t { greedy, lce };
const char* to_string(EngineKind e);

enum class Generator : uint8_t {
    uniform_dna,
    at_rich_dna,
    homopolymer,
    alternating,
};
const char* to_string(Generator g);

// Deterministic for a fixed seed (seeded mt19937_64 with an
// implementation-fixed mapping to symbols):
//   uniform_dna   i.i.d. over {A,C,G,T}
//   at_rich_dna   A or T with total probability at_fraction (split evenly),
//                 C or G otherwise
//   homopolymer   A^n
//   alternating   (AT)^(n/2) truncated to n
Sequence generate(Generator kind, int64_t n, double at_fraction, uint64_t seed);

struct BenchCell {
    Generator gen = Generator::uniform_dna;
    int64_t n = 0;
    int64_t k = 0;
    EngineKind engine = EngineKind::greedy;
    double at_fraction = 0.8;
    uint64_t seed = 0;
};

struct BenchRow {
    std::string generator;
    int64_t n = 0;
    int64_t k = 0;
    std::string engine;
    double seconds = 0.0;
    uint64_t comparisons = 0;
    uint64_t lce_queries = 0;
    double ratio = 0.0;  // comparisons / ((k+1) * n)
};

struct BenchReport {
    std::vector<BenchRow> rows;
};

// One cell per line: generator,n,k,engine,at_fraction,seed.
// Blank lines and '#' comments are skipped. Throws std::runtime_error with
// the offending line number on malformed input.
std::vector<BenchCell> parse_plan(std::istream& in);

// Runs each cell with counters enabled; timing covers the search only,
// not sequence generation. Homopolymer cells use the identity rule (that is
// the input's worst case); all other generators run dna-complement.
BenchReport run_bench(const std::vector<BenchCell>& plan);

void write_csv(const BenchReport& report, std::ostream& out);

}  // namespace palfind
