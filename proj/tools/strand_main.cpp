// strand: streaming de novo assembler and gene finder.
//
// Subcommands:
//   run       stream FASTA reads through the assembler, emitting genes and events
//   simulate  generate a reference with a known gene count and overlapping reads
//   oracle    exact shortest-common-superstring of up to 12 reads
//   bench     run simulation+stream instances and record metrics as CSV
//
// Exit codes: 0 success, 2 malformed input, 3 argument out of domain bounds.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "strand/strand.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_bad_input = 2;
constexpr int exit_bad_bounds = 3;

struct input_error {
    std::string message;
};

std::vector<strand::FastaRecord> read_all_records(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error{"cannot open reads file: " + path};
    strand::FastaReader reader(in);
    std::vector<strand::FastaRecord> records;
    while (auto rec = reader.next()) records.push_back(std::move(*rec));
    return records;
}

strand::Sequence normalize_record(const strand::FastaRecord& rec) {
    try {
        return strand::normalize(rec.sequence);
    } catch (const strand::invalid_symbol& e) {
        throw input_error{"record '" + rec.id + "': invalid symbol '" +
                          std::string(1, e.symbol()) + "' at position " +
                          std::to_string(e.position())};
    }
}

struct RunOptions {
    std::string reads_path;
    unsigned k = 21;
    std::uint64_t target_genes = 0;  // 0 = no target
    bool emit_partial = true;
    std::string genes_out;
    std::string events_out;
    std::string assembly_out;
};

int cmd_run(const RunOptions& opt) {
    if (opt.k < 2 || opt.k > strand::max_k) {
        std::cerr << "k must be in [2, 31], got " << opt.k << "\n";
        return exit_bad_bounds;
    }
    std::ifstream in(opt.reads_path);
    if (!in) {
        std::cerr << "cannot open reads file: " << opt.reads_path << "\n";
        return exit_bad_input;
    }
    std::ofstream genes_file(opt.genes_out);
    if (!genes_file) {
        std::cerr << "cannot open genes output: " << opt.genes_out << "\n";
        return exit_bad_input;
    }
    std::ofstream events_file(opt.events_out);
    if (!events_file) {
        std::cerr << "cannot open events output: " << opt.events_out << "\n";
        return exit_bad_input;
    }

    strand::StreamConfig cfg;
    cfg.k = opt.k;
    cfg.emit_partial = opt.emit_partial;
    if (opt.target_genes > 0) cfg.target_genes = opt.target_genes;

    strand::FastaReader reader(in);
    auto source = [&reader]() -> std::optional<strand::Sequence> {
        auto rec = reader.next();
        if (!rec) return std::nullopt;
        return normalize_record(*rec);
    };
    auto sink = [&events_file](const strand::StreamEvent& event) {
        events_file << strand::event_to_json(event).dump() << std::endl;
    };

    try {
        strand::StreamResult result = strand::run_stream(source, cfg, sink);
        strand::write_genes_tsv(genes_file, result.final_genes);
        if (!opt.assembly_out.empty()) {
            std::ofstream assembly_file(opt.assembly_out);
            if (!assembly_file) {
                std::cerr << "cannot open assembly output: " << opt.assembly_out << "\n";
                return exit_bad_input;
            }
            const strand::AssemblyResult& a = result.final_assembly;
            if (a.complete()) {
                strand::write_fasta(assembly_file, "assembly", a.sequence.str());
            } else if (a.partial()) {
                for (std::size_t i = 0; i < a.contigs.size(); ++i)
                    strand::write_fasta(assembly_file, "contig_" + std::to_string(i),
                                        a.contigs[i].bases.str());
            }
        }
    } catch (const input_error& e) {
        std::cerr << e.message << "\n";
        return exit_bad_input;
    } catch (const strand::fasta_error& e) {
        std::cerr << e.what() << "\n";
        return exit_bad_input;
    }
    return exit_ok;
}

struct SimulateOptions {
    std::uint64_t seed = 0;
    std::size_t length = 0;
    std::size_t genes = 0;
    std::size_t read_min = 30;
    std::size_t read_max = 99;
    std::size_t overlap = 20;
    bool shuffle = true;
    std::string out_path;
    std::string truth_path;
    std::string reference_out;
};

int cmd_simulate(const SimulateOptions& opt) {
    if (opt.read_max > 99) {
        std::cerr << "read-max must stay below 100, got " << opt.read_max << "\n";
        return exit_bad_bounds;
    }
    strand::SimSpec spec;
    spec.seed = opt.seed;
    spec.length = opt.length;
    spec.gene_count = opt.genes;
    spec.read_len_min = opt.read_min;
    spec.read_len_max = opt.read_max;
    spec.min_overlap = opt.overlap;
    spec.shuffle = opt.shuffle;

    strand::SimResult sim;
    try {
        sim = strand::simulate(spec);
    } catch (const strand::unsatisfiable_spec& e) {
        std::cerr << e.what() << "\n";
        return exit_bad_bounds;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return exit_bad_bounds;
    }

    std::ofstream out(opt.out_path);
    if (!out) {
        std::cerr << "cannot open reads output: " << opt.out_path << "\n";
        return exit_bad_input;
    }
    for (std::size_t i = 0; i < sim.reads.size(); ++i)
        strand::write_fasta(out, "read_" + std::to_string(i), sim.reads[i].str());

    std::ofstream truth(opt.truth_path);
    if (!truth) {
        std::cerr << "cannot open truth output: " << opt.truth_path << "\n";
        return exit_bad_input;
    }
    std::vector<strand::AnnotatedGene> annotated;
    for (const strand::Gene& g : sim.truth)
        annotated.push_back(strand::AnnotatedGene{"reference", g});
    strand::write_genes_tsv(truth, annotated);

    if (!opt.reference_out.empty()) {
        std::ofstream ref(opt.reference_out);
        if (!ref) {
            std::cerr << "cannot open reference output: " << opt.reference_out << "\n";
            return exit_bad_input;
        }
        strand::write_fasta(ref, "reference", sim.reference.str());
    }
    return exit_ok;
}

int cmd_oracle(const std::string& reads_path) {
    std::vector<strand::FastaRecord> records;
    try {
        records = read_all_records(reads_path);
    } catch (const input_error& e) {
        std::cerr << e.message << "\n";
        return exit_bad_input;
    } catch (const strand::fasta_error& e) {
        std::cerr << e.what() << "\n";
        return exit_bad_input;
    }
    if (records.size() > strand::oracle_segment_limit) {
        std::cerr << "got " << records.size() << " records, the oracle handles at most "
                  << strand::oracle_segment_limit << "\n";
        return exit_bad_bounds;
    }
    std::vector<strand::Sequence> segments;
    try {
        for (const auto& rec : records) segments.push_back(normalize_record(rec));
    } catch (const input_error& e) {
        std::cerr << e.message << "\n";
        return exit_bad_input;
    }
    strand::Sequence result = strand::superstring_oracle(segments);
    std::cout << result.str() << "\n" << "length=" << result.size() << "\n";
    return exit_ok;
}

int cmd_bench(const std::string& spec_path, const std::string& out_path) {
    std::ifstream in(spec_path);
    if (!in) {
        std::cerr << "cannot open bench spec: " << spec_path << "\n";
        return exit_bad_input;
    }
    struct BenchRow {
        strand::SimSpec spec;
        strand::StreamConfig cfg;
    };
    std::vector<BenchRow> rows;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            std::cerr << "bench spec line " << line_no << ": not a JSON object\n";
            return exit_bad_input;
        }
        try {
            BenchRow row;
            row.spec.seed = j.at("seed").get<std::uint64_t>();
            row.spec.length = j.at("length").get<std::size_t>();
            row.spec.gene_count = j.at("genes").get<std::size_t>();
            row.spec.read_len_min = j.value("read_min", std::size_t{30});
            row.spec.read_len_max = j.value("read_max", std::size_t{99});
            row.spec.min_overlap = j.value("min_overlap", std::size_t{20});
            row.spec.shuffle = j.value("shuffle", true);
            row.cfg.k = j.value("k", 21u);
            row.cfg.emit_partial = j.value("emit_partial", true);
            const std::uint64_t target = j.value("target_genes", std::uint64_t{0});
            if (target > 0) row.cfg.target_genes = target;
            rows.push_back(std::move(row));
        } catch (const nlohmann::json::exception& e) {
            std::cerr << "bench spec line " << line_no << ": " << e.what() << "\n";
            return exit_bad_input;
        }
    }

    std::ofstream out(out_path);
    if (!out) {
        std::cerr << "cannot open bench output: " << out_path << "\n";
        return exit_bad_input;
    }
    strand::write_csv_header(out);
    for (const BenchRow& row : rows) {
        try {
            strand::write_csv_row(out, strand::bench_run(row.spec, row.cfg));
        } catch (const std::exception& e) {
            std::cerr << "bench row failed: " << e.what() << "\n";
            return exit_bad_bounds;
        }
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"streaming de novo assembler and gene finder"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "stream reads, assemble, and extract genes");
    run->add_option("--reads", run_opt.reads_path, "multi-record FASTA of reads")->required();
    run->add_option("--k", run_opt.k, "k-mer length (2..31)")->required();
    run->add_option("--target-genes", run_opt.target_genes,
                    "stop once this many genes are visible");
    run->add_option("--emit-partial", run_opt.emit_partial,
                    "scan genes on partial contigs (default true)");
    run->add_option("--genes-out", run_opt.genes_out, "final gene table (TSV)")->required();
    run->add_option("--events-out", run_opt.events_out, "stream events (JSON lines)")
        ->required();
    run->add_option("--assembly-out", run_opt.assembly_out, "final assembly (FASTA)");

    SimulateOptions sim_opt;
    CLI::App* sim = app.add_subcommand("simulate", "generate a reference and reads");
    sim->add_option("--seed", sim_opt.seed, "RNG seed")->required();
    sim->add_option("--length", sim_opt.length, "reference length in bases")->required();
    sim->add_option("--genes", sim_opt.genes, "genes to embed")->required();
    sim->add_option("--read-min", sim_opt.read_min, "minimum read length");
    sim->add_option("--read-max", sim_opt.read_max, "maximum read length (< 100)");
    sim->add_option("--overlap", sim_opt.overlap, "minimum overlap between reads");
    sim->add_option("--shuffle", sim_opt.shuffle, "shuffle read order (default true)");
    sim->add_option("--out", sim_opt.out_path, "reads FASTA output")->required();
    sim->add_option("--truth", sim_opt.truth_path, "truth gene table (TSV)")->required();
    sim->add_option("--reference-out", sim_opt.reference_out, "reference FASTA output");

    std::string oracle_reads;
    CLI::App* oracle = app.add_subcommand("oracle", "exact shortest common superstring");
    oracle->add_option("--reads", oracle_reads, "FASTA with at most 12 records")->required();

    std::string bench_spec, bench_out;
    CLI::App* bench = app.add_subcommand("bench", "run benchmark instances");
    bench->add_option("--spec", bench_spec, "JSON-lines instance spec")->required();
    bench->add_option("--out", bench_out, "CSV output")->required();

    CLI11_PARSE(app, argc, argv);

    if (run->parsed()) return cmd_run(run_opt);
    if (sim->parsed()) return cmd_simulate(sim_opt);
    if (oracle->parsed()) return cmd_oracle(oracle_reads);
    if (bench->parsed()) return cmd_bench(bench_spec, bench_out);
    return exit_ok;
}
