#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "palfind/cli.hpp"
#include "palfind/engine_greedy.hpp"
#include "palfind/io.hpp"
#include "test_helpers.hpp"

using namespace palfind;
using palfind::testing::random_sequence;

TEST_CASE("parse_fasta worked examples") {
    {
        std::istringstream in(">x\nACG\nT\n");
        const auto recs = parse_fasta(in, MatchMode::dna_complement);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].id == "x");
        CHECK(recs[0].residues == "ACGT");
    }
    {
        std::istringstream in(">a desc\nacgu\n");
        const auto recs = parse_fasta(in, MatchMode::dna_complement);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].id == "a");
        CHECK(recs[0].residues == "ACGN");
    }
    {
        std::istringstream in("ACGT\n");
        CHECK_THROWS_AS(parse_fasta(in, MatchMode::dna_complement), FastaError);
        std::istringstream in2("ACGT\n");
        try {
            parse_fasta(in2, MatchMode::dna_complement);
        } catch (const FastaError& e) {
            CHECK(e.line == 1);
        }
    }
}

TEST_CASE("parse_fasta handles empty records, CRLF, and identity mode") {
    std::istringstream in(">x\r\n>y\nAC GT\r\n\nacgt\n");
    const auto recs = parse_fasta(in, MatchMode::identity);
    REQUIRE(recs.size() == 2);
    CHECK(recs[0].id == "x");
    CHECK(recs[0].residues.empty());
    CHECK(recs[1].residues == "ACGTacgt");  // identity keeps case
}

TEST_CASE("parse_fasta allows blank lines before the first header") {
    std::istringstream in("\n\n>x\nAC\n");
    const auto recs = parse_fasta(in, MatchMode::dna_complement);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].residues == "AC");
}

TEST_CASE("format_hit worked examples") {
    CHECK(std::string(kTsvHeader) ==
          "#seq_id\tstart\tend\tlength\terrors\tparity\tdiagonal\talignment");
    PalindromeHit hit;
    hit.seq_id = "x";
    hit.start = 0;
    hit.end = 4;
    hit.length = 4;
    hit.errors = 1;
    hit.parity = Parity::even;
    hit.diagonal = 3;
    CHECK(format_hit(hit) == "x\t0\t4\t4\t1\teven\t3\t-");

    hit.alignment = Alignment{4, {{AlignOp::match, 1}, {AlignOp::left_indel, 1}}};
    CHECK(format_hit(hit) == "x\t0\t4\t4\t1\teven\t3\t1M1L");
}

TEST_CASE("process_stream produces the documented TSV") {
    CliConfig config;
    config.k = 1;
    config.min_len = 4;
    config.mode = MatchMode::identity;

    std::istringstream in(">t\nAABA\n");
    std::ostringstream out, err;
    CHECK(process_stream(config, in, out, err) == 0);
    CHECK(out.str() ==
          "#seq_id\tstart\tend\tlength\terrors\tparity\tdiagonal\talignment\n"
          "t\t0\t4\t4\t1\teven\t3\t-\n");
}

TEST_CASE("process_stream with --align attaches run-length ops") {
    CliConfig config;
    config.k = 1;
    config.min_len = 4;
    config.mode = MatchMode::identity;
    config.align = true;

    std::istringstream in(">t\nAABA\n>u\nABCA\n");
    std::ostringstream out, err;
    CHECK(process_stream(config, in, out, err) == 0);
    CHECK(out.str() ==
          "#seq_id\tstart\tend\tlength\terrors\tparity\tdiagonal\talignment\n"
          "t\t0\t4\t4\t1\teven\t3\t1M1L\n"
          "u\t0\t4\t4\t1\teven\t3\t1X1M\n");
}

TEST_CASE("process_stream emits only the header for empty input") {
    CliConfig config;
    std::istringstream in("");
    std::ostringstream out, err;
    CHECK(process_stream(config, in, out, err) == 0);
    CHECK(out.str() == std::string(kTsvHeader) + "\n");
}

TEST_CASE("process_stream exit codes") {
    {
        CliConfig config;
        config.k = -1;
        std::istringstream in(">t\nAC\n");
        std::ostringstream out, err;
        CHECK(process_stream(config, in, out, err) == 1);
    }
    {
        CliConfig config;
        std::istringstream in("no header\n");
        std::ostringstream out, err;
        CHECK(process_stream(config, in, out, err) == 2);
        CHECK(err.str().find("line 1") != std::string::npos);
    }
}

TEST_CASE("run_cli reports a missing input file") {
    CliConfig config;
    config.input = "/nonexistent/path/to/input.fa";
    CHECK(run_cli(config) == 2);
}

TEST_CASE("run_cli round-trips through files") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "palfind_io_test";
    fs::create_directories(dir);
    const fs::path in_path = dir / "in.fa";
    const fs::path out_path = dir / "out.tsv";
    {
        std::ofstream f(in_path);
        f << ">t\nAABA\n";
    }
    CliConfig config;
    config.input = in_path.string();
    config.output = out_path.string();
    config.k = 1;
    config.min_len = 4;
    config.mode = MatchMode::identity;
    CHECK(run_cli(config) == 0);

    std::ifstream f(out_path);
    std::stringstream got;
    got << f.rdbuf();
    CHECK(got.str() ==
          "#seq_id\tstart\tend\tlength\terrors\tparity\tdiagonal\talignment\n"
          "t\t0\t4\t4\t1\teven\t3\t-\n");
    fs::remove_all(dir);
}

TEST_CASE("stats line follows the documented format") {
    CliConfig config;
    config.k = 1;
    config.min_len = 4;
    config.mode = MatchMode::identity;
    config.stats = true;
    std::istringstream in(">t\nAABA\n");
    std::ostringstream out, err;
    CHECK(process_stream(config, in, out, err) == 0);
    const std::string line = err.str();
    CHECK(line.find("n=4 k=1 engine=greedy comparisons=") == 0);
    CHECK(line.find(" ratio=") != std::string::npos);
    CHECK(line.find(" seconds=") != std::string::npos);
}

TEST_CASE("engine choice never changes output bytes") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 25; ++iter) {
        std::string fasta;
        const int records = 1 + static_cast<int>(rng() % 3);
        for (int r = 0; r < records; ++r) {
            fasta += ">r" + std::to_string(r) + "\n";
            fasta += random_sequence(rng, 1 + (rng() % 50), "ACGTN").residues;
            fasta += "\n";
        }
        for (MatchMode mode : {MatchMode::identity, MatchMode::dna_complement}) {
            for (bool align : {false, true}) {
                CliConfig config;
                config.k = static_cast<int64_t>(rng() % 4);
                config.min_len = 3;
                config.mode = mode;
                config.align = align;

                config.engine = EngineKind::greedy;
                std::istringstream in1(fasta);
                std::ostringstream out1, err1;
                REQUIRE(process_stream(config, in1, out1, err1) == 0);

                config.engine = EngineKind::lce;
                std::istringstream in2(fasta);
                std::ostringstream out2, err2;
                REQUIRE(process_stream(config, in2, out2, err2) == 0);

                CHECK(out1.str() == out2.str());
            }
        }
    }
}

TEST_CASE("parsed residues re-emit unchanged (round trip)") {
    std::mt19937_64 rng(32);
    for (int iter = 0; iter < 20; ++iter) {
        const Sequence s = random_sequence(rng, 1 + (rng() % 60), "ACGTN");
        std::istringstream in(">s\n" + s.residues + "\n");
        const auto recs = parse_fasta(in, MatchMode::dna_complement);
        REQUIRE(recs.size() == 1);
        CHECK(recs[0].residues == normalize_dna(s.residues));
    }
}
