#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include <json.hpp>

#include "strand/genescan.hpp"
#include "strand/sequence.hpp"
#include "strand/serialize.hpp"
#include "strand/simulate.hpp"

#include "support/test_util.hpp"

using namespace strand;
using testsupport::CliResult;
using testsupport::TempDir;
using testsupport::read_file;
using testsupport::run_cli;
using testsupport::split_lines;
using testsupport::write_file;

namespace {

const std::string graph2_fasta = ">r1\nAAGTC\n>r2\nGTCAT\n>r3\nCATTA\n>r4\nTTACA\n";

nlohmann::json last_event(const std::string& events_text) {
    const auto lines = split_lines(events_text);
    REQUIRE(!lines.empty());
    return nlohmann::json::parse(lines.back());
}

}  // namespace

TEST_CASE("run: gene-free fragments assemble and finish clean") {
    TempDir dir;
    write_file(dir / "reads.fa", graph2_fasta);
    const CliResult r = run_cli("run --reads " + (dir / "reads.fa").string() +
                                    " --k 4 --genes-out " + (dir / "genes.tsv").string() +
                                    " --events-out " + (dir / "events.jsonl").string() +
                                    " --assembly-out " + (dir / "assembly.fa").string(),
                                dir);
    REQUIRE(r.exit_code == 0);

    const auto genes_lines = split_lines(read_file(dir / "genes.tsv"));
    REQUIRE(genes_lines.size() == 1);  // header only, zero gene rows
    CHECK(genes_lines[0] == "contig_id\tstart\tend\tsequence");

    const auto done = last_event(read_file(dir / "events.jsonl"));
    CHECK(done["event"] == "done");
    CHECK(done["reason"] == "input_exhausted");
    CHECK(done["segments_consumed"] == 4);
    CHECK(done["genes"].empty());

    const auto fasta_lines = split_lines(read_file(dir / "assembly.fa"));
    REQUIRE(fasta_lines.size() == 2);
    CHECK(fasta_lines[0] == ">assembly");
    CHECK(fasta_lines[1] == "AAGTCATTACA");
}

TEST_CASE("run: empty FASTA is a valid empty stream") {
    TempDir dir;
    write_file(dir / "reads.fa", "");
    const CliResult r = run_cli("run --reads " + (dir / "reads.fa").string() +
                                    " --k 4 --genes-out " + (dir / "genes.tsv").string() +
                                    " --events-out " + (dir / "events.jsonl").string(),
                                dir);
    REQUIRE(r.exit_code == 0);
    const auto done = last_event(read_file(dir / "events.jsonl"));
    CHECK(done["event"] == "done");
    CHECK(done["reason"] == "input_exhausted");
    CHECK(done["segments_consumed"] == 0);
}

TEST_CASE("run: invalid symbols name the record and position") {
    TempDir dir;
    write_file(dir / "reads.fa", ">good\nAAGTC\n>bad\nAANTC\n");
    const CliResult r = run_cli("run --reads " + (dir / "reads.fa").string() +
                                    " --k 4 --genes-out " + (dir / "genes.tsv").string() +
                                    " --events-out " + (dir / "events.jsonl").string(),
                                dir);
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("bad") != std::string::npos);
    CHECK(r.err.find("2") != std::string::npos);  // 0-based position of N
    CHECK(r.err.find("N") != std::string::npos);
}

TEST_CASE("run: malformed FASTA is rejected") {
    TempDir dir;
    write_file(dir / "reads.fa", "AAGTC\n>r1\nGTCAT\n");
    const CliResult r = run_cli("run --reads " + (dir / "reads.fa").string() +
                                    " --k 4 --genes-out " + (dir / "genes.tsv").string() +
                                    " --events-out " + (dir / "events.jsonl").string(),
                                dir);
    CHECK(r.exit_code == 2);
}

TEST_CASE("run: k out of range exits 3") {
    TempDir dir;
    write_file(dir / "reads.fa", graph2_fasta);
    for (const std::string k : {"1", "32"}) {
        const CliResult r = run_cli("run --reads " + (dir / "reads.fa").string() + " --k " +
                                        k + " --genes-out " + (dir / "genes.tsv").string() +
                                        " --events-out " + (dir / "events.jsonl").string(),
                                    dir);
        CHECK(r.exit_code == 3);
    }
}

TEST_CASE("run: target stops the stream early") {
    TempDir dir;
    write_file(dir / "reads.fa", ">r1\nATGTAAC\n>r2\nAAGTCATT\n");
    const CliResult r = run_cli("run --reads " + (dir / "reads.fa").string() +
                                    " --k 4 --target-genes 1 --genes-out " +
                                    (dir / "genes.tsv").string() + " --events-out " +
                                    (dir / "events.jsonl").string(),
                                dir);
    REQUIRE(r.exit_code == 0);
    const auto done = last_event(read_file(dir / "events.jsonl"));
    CHECK(done["reason"] == "target_reached");
    CHECK(done["segments_consumed"] == 1);
    const auto genes_lines = split_lines(read_file(dir / "genes.tsv"));
    REQUIRE(genes_lines.size() == 2);
    CHECK(genes_lines[1].find("ATGTAA") != std::string::npos);
}

TEST_CASE("run: --emit-partial gates gene scanning of partial contigs") {
    TempDir dir;
    write_file(dir / "reads.fa", ">r1\nATGTAAC\n>r2\nTTTTGGG\n");
    const std::string base = "run --reads " + (dir / "reads.fa").string() +
                             " --k 4 --genes-out " + (dir / "genes.tsv").string() +
                             " --events-out " + (dir / "events.jsonl").string();

    REQUIRE(run_cli(base + " --emit-partial true", dir).exit_code == 0);
    auto rows = split_lines(read_file(dir / "genes.tsv"));
    REQUIRE(rows.size() == 2);
    CHECK(rows[1] == "contig_0\t0\t6\tATGTAA");

    REQUIRE(run_cli(base + " --emit-partial false", dir).exit_code == 0);
    rows = split_lines(read_file(dir / "genes.tsv"));
    CHECK(rows.size() == 1);  // header only: the final assembly is partial
}

TEST_CASE("simulate: deterministic outputs, truth row count, bounds") {
    TempDir dir;
    const std::string base = "simulate --seed 1 --length 500 --genes 10 --out " +
                             (dir / "reads.fa").string() + " --truth " +
                             (dir / "truth.tsv").string();
    REQUIRE(run_cli(base, dir).exit_code == 0);
    const std::string reads_1 = read_file(dir / "reads.fa");
    const std::string truth_1 = read_file(dir / "truth.tsv");
    REQUIRE(run_cli(base, dir).exit_code == 0);
    CHECK(read_file(dir / "reads.fa") == reads_1);  // byte-identical
    CHECK(read_file(dir / "truth.tsv") == truth_1);

    const auto truth_lines = split_lines(truth_1);
    REQUIRE(truth_lines.size() == 11);  // header + 10 genes
    CHECK(truth_lines[0] == "contig_id\tstart\tend\tsequence");

    const CliResult bad = run_cli(
        "simulate --seed 1 --length 500 --genes 0 --read-max 100 --out " +
            (dir / "r.fa").string() + " --truth " + (dir / "t.tsv").string(),
        dir);
    CHECK(bad.exit_code == 3);
    CHECK(bad.err.find("100") != std::string::npos);

    const CliResult unsat = run_cli("simulate --seed 1 --length 30 --genes 10 --out " +
                                        (dir / "r.fa").string() + " --truth " +
                                        (dir / "t.tsv").string(),
                                    dir);
    CHECK(unsat.exit_code == 3);
}

TEST_CASE("oracle: prints the superstring and its length") {
    TempDir dir;
    write_file(dir / "reads.fa", graph2_fasta);
    const CliResult r = run_cli("oracle --reads " + (dir / "reads.fa").string(), dir);
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "AAGTCATTACA");
    CHECK(lines[1] == "length=11");
}

TEST_CASE("oracle: a single record prints verbatim") {
    TempDir dir;
    write_file(dir / "reads.fa", ">only\nACGTACGT\n");
    const CliResult r = run_cli("oracle --reads " + (dir / "reads.fa").string(), dir);
    REQUIRE(r.exit_code == 0);
    CHECK(split_lines(r.out)[0] == "ACGTACGT");
}

TEST_CASE("oracle: more than 12 records exits 3") {
    TempDir dir;
    std::string fasta;
    for (int i = 0; i < 13; ++i)
        fasta += ">r" + std::to_string(i) + "\nACGTACGTAC\n";
    write_file(dir / "reads.fa", fasta);
    CHECK(run_cli("oracle --reads " + (dir / "reads.fa").string(), dir).exit_code == 3);
}

TEST_CASE("bench: CSV rows per spec row with the exact header") {
    TempDir dir;
    write_file(dir / "spec.jsonl",
               R"({"seed":1,"length":800,"genes":2})"
               "\n"
               R"({"seed":2,"length":900,"genes":3,"target_genes":1})"
               "\n");
    const CliResult r = run_cli("bench --spec " + (dir / "spec.jsonl").string() + " --out " +
                                    (dir / "out.csv").string(),
                                dir);
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(read_file(dir / "out.csv"));
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] ==
          "sequence_length,distinct_kmers,segments_total,segments_consumed,genes_found,"
          "target_genes,wall_time_ms,bm_comparisons,naive_comparisons");
    CHECK(lines[1].substr(0, 4) == "800,");
    CHECK(lines[2].substr(0, 4) == "900,");
}

TEST_CASE("bench: rising targets over a 40-gene reference show the early-stop shape") {
    TempDir dir;
    std::string spec;
    for (int target : {10, 20, 30, 40, 50})
        spec += R"({"seed":77,"length":9000,"genes":40,"target_genes":)" +
                std::to_string(target) + "}\n";
    write_file(dir / "spec.jsonl", spec);
    const CliResult r = run_cli("bench --spec " + (dir / "spec.jsonl").string() + " --out " +
                                    (dir / "out.csv").string(),
                                dir);
    REQUIRE(r.exit_code == 0);
    const auto lines = split_lines(read_file(dir / "out.csv"));
    REQUIRE(lines.size() == 6);
    auto col = [&](const std::string& line, int idx) {
        std::size_t pos = 0;
        for (int i = 0; i < idx; ++i) pos = line.find(',', pos) + 1;
        return std::stoull(line.substr(pos, line.find(',', pos) - pos));
    };
    // columns: ...,segments_total(2),segments_consumed(3),...
    const auto total = col(lines[5], 2);
    CHECK(col(lines[5], 3) == total);  // target 50 is unreachable: read everything
    CHECK(col(lines[1], 3) < total);   // the lowest target stops well before the end
    for (int row = 1; row <= 4; ++row) CHECK(col(lines[row], 3) <= col(lines[row + 1], 3));
}

TEST_CASE("bench: empty spec produces a header-only CSV") {
    TempDir dir;
    write_file(dir / "spec.jsonl", "");
    const CliResult r = run_cli("bench --spec " + (dir / "spec.jsonl").string() + " --out " +
                                    (dir / "out.csv").string(),
                                dir);
    REQUIRE(r.exit_code == 0);
    CHECK(split_lines(read_file(dir / "out.csv")).size() == 1);
}

TEST_CASE("bench: malformed spec exits 2") {
    TempDir dir;
    write_file(dir / "spec.jsonl", "{\"seed\":1,\n");
    CHECK(run_cli("bench --spec " + (dir / "spec.jsonl").string() + " --out " +
                      (dir / "out.csv").string(),
                  dir)
              .exit_code == 2);
    write_file(dir / "spec2.jsonl", "{\"length\":100}\n");  // missing required keys
    CHECK(run_cli("bench --spec " + (dir / "spec2.jsonl").string() + " --out " +
                      (dir / "out.csv").string(),
                  dir)
              .exit_code == 2);
}

TEST_CASE("bench: identical spec rows differ only in wall time") {
    TempDir dir;
    write_file(dir / "spec.jsonl", R"({"seed":9,"length":1500,"genes":4})"
                                   "\n");
    REQUIRE(run_cli("bench --spec " + (dir / "spec.jsonl").string() + " --out " +
                        (dir / "a.csv").string(),
                    dir)
                .exit_code == 0);
    REQUIRE(run_cli("bench --spec " + (dir / "spec.jsonl").string() + " --out " +
                        (dir / "b.csv").string(),
                    dir)
                .exit_code == 0);
    auto strip_wall = [](const std::string& csv) {
        auto lines = split_lines(csv);
        std::string out;
        for (const std::string& line : lines) {
            std::vector<std::string> cols;
            std::size_t pos = 0;
            while (pos <= line.size()) {
                const std::size_t comma = line.find(',', pos);
                cols.push_back(line.substr(pos, comma - pos));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            if (cols.size() == 9) cols[6] = "_";
            for (std::size_t i = 0; i < cols.size(); ++i)
                out += (i ? "," : "") + cols[i];
            out += "\n";
        }
        return out;
    };
    CHECK(strip_wall(read_file(dir / "a.csv")) == strip_wall(read_file(dir / "b.csv")));
}

TEST_CASE("gene TSV rows round-trip against a re-scan of the assembly") {
    TempDir dir;
    SimSpec spec;
    spec.seed = 2024;
    spec.length = 1500;
    spec.gene_count = 4;
    const SimResult sim = simulate(spec);
    std::string fasta;
    for (std::size_t i = 0; i < sim.reads.size(); ++i)
        fasta += ">read_" + std::to_string(i) + "\n" + sim.reads[i].str() + "\n";
    write_file(dir / "reads.fa", fasta);

    const CliResult r = run_cli("run --reads " + (dir / "reads.fa").string() +
                                    " --k 21 --genes-out " + (dir / "genes.tsv").string() +
                                    " --events-out " + (dir / "events.jsonl").string() +
                                    " --assembly-out " + (dir / "assembly.fa").string(),
                                dir);
    REQUIRE(r.exit_code == 0);

    const auto fasta_lines = split_lines(read_file(dir / "assembly.fa"));
    REQUIRE(fasta_lines[0] == ">assembly");
    std::string assembled;
    for (std::size_t i = 1; i < fasta_lines.size(); ++i) assembled += fasta_lines[i];
    CHECK(assembled == sim.reference.str());

    const GeneSet rescanned = scan_genes(normalize(assembled), CodonTable::standard());
    const auto tsv = split_lines(read_file(dir / "genes.tsv"));
    REQUIRE(tsv.size() == rescanned.size() + 1);
    for (std::size_t i = 0; i < rescanned.size(); ++i) {
        const std::string expected = "assembly\t" + std::to_string(rescanned[i].start) +
                                     "\t" + std::to_string(rescanned[i].end) + "\t" +
                                     rescanned[i].bases.str();
        CHECK(tsv[i + 1] == expected);
    }
}
